"""JSON encodings for every value the command line can print.

All encodings are deterministic (terms sorted ascending by key) and decode
back to equal values:

  coefficient   int, or "p/q" for a non-integer rational
  polynomial    [[ex, ev, es, coeff], ...]            exponents of x, v, s
  scalar        {"num": polynomial, "den": polynomial}
  cpoly         [[[k1, k2, ...], scalar], ...]        sorted index multisets
  diagrams      [[[p1, p2, ...], scalar], ...]        partitions as part lists
  annulus       [[[m1, m2, ...], scalar], ...]        winding multisets
  tpoly         [[e, coeff], ...]                     one-variable Laurent terms
  tfraction     {"num": tpoly, "den": tpoly}
  hseries       [coeff, ...]                          from degree 0 upward
  chord tally   [[matching, multiplicity], ...]       matchings like "1-3,2-4"
  solution      {"status": "solution", "values": [scalar, ...], "free": [i, ...]}
  inconsistent  {"status": "inconsistent", "unknown": i,
                 "first": {"equations": [key, ...], "value": scalar},
                 "second": ...}   equation keys are winding multisets

Pattern-system files hold {"target": element, "patterns": [element, ...]}
where an element is either an annulus record or {"word": "1", "strands": 2,
"colour": [1, 1]} for the closure of a decorated braid.  Scalars inside
hand-written files may also be plain integers or expression strings like
"(s - s^-1)^2".
"""

from fractions import Fraction

from .adams_skein import Inconsistent, PatternSystem, Solution
from .annulus import AnnulusElement, closure, closure_word
from .chords import ChordDiagram
from .diagram_ring import CPoly, DiagramVector
from .hecke import BraidWord, decorate
from .partitions import Partition
from .scalars import LaurentPoly, Scalar, TFraction


def encode_coeff(c):
    c = Fraction(c)
    return int(c) if c.denominator == 1 else "%d/%d" % (c.numerator, c.denominator)


def decode_coeff(obj) -> Fraction:
    if isinstance(obj, str):
        p, q = obj.split("/")
        return Fraction(int(p), int(q))
    if isinstance(obj, int):
        return Fraction(obj)
    raise ValueError("coefficient must be an int or 'p/q' string, got %r" % (obj,))


def encode_poly(p: LaurentPoly) -> list:
    return [[a, b, c, encode_coeff(k)] for (a, b, c), k in sorted(p.terms.items())]


def decode_poly(obj) -> LaurentPoly:
    return LaurentPoly({(a, b, c): decode_coeff(k) for a, b, c, k in obj})


def encode_scalar(sc: Scalar) -> dict:
    return {"num": encode_poly(sc.num), "den": encode_poly(sc.den)}


def decode_scalar(obj) -> Scalar:
    if isinstance(obj, dict):
        return Scalar(decode_poly(obj["num"]), decode_poly(obj["den"]))
    if isinstance(obj, (int, str)):
        # conveniences for hand-written files
        if isinstance(obj, int):
            return Scalar(obj)
        from .parsing import parse_scalar

        return parse_scalar(obj)
    raise ValueError("scalar must be a num/den record, int, or expression string")


def _encode_sum(element) -> list:
    out = []
    for key, sc in sorted(element.terms.items(), key=lambda t: _plain_key(t[0])):
        out.append([_plain_key(key), encode_scalar(sc)])
    return out


def _plain_key(key):
    if isinstance(key, Partition):
        return list(key.parts)
    return list(key)


def encode_cpoly(p: CPoly) -> list:
    return _encode_sum(p)


def decode_cpoly(obj) -> CPoly:
    return CPoly({tuple(key): decode_scalar(sc) for key, sc in obj})


def encode_diagrams(v: DiagramVector) -> list:
    return _encode_sum(v)


def decode_diagrams(obj) -> DiagramVector:
    return DiagramVector({Partition(tuple(key)): decode_scalar(sc) for key, sc in obj})


def encode_annulus(e: AnnulusElement) -> list:
    return _encode_sum(e)


def decode_annulus(obj) -> AnnulusElement:
    return AnnulusElement({tuple(key): decode_scalar(sc) for key, sc in obj})


def encode_tpoly(terms: dict) -> list:
    return [[e, encode_coeff(c)] for e, c in sorted(terms.items())]


def encode_tfraction(f: TFraction) -> dict:
    return {"num": encode_tpoly(f.num), "den": encode_tpoly(f.den)}


def decode_tfraction(obj) -> TFraction:
    return TFraction(
        {e: decode_coeff(c) for e, c in obj["num"]},
        {e: decode_coeff(c) for e, c in obj["den"]},
    )


def encode_hseries(coeffs: list) -> list:
    return [encode_coeff(c) for c in coeffs]


def decode_hseries(obj) -> list:
    return [decode_coeff(c) for c in obj]


def encode_chord_tally(tally: dict) -> list:
    return [[str(d), n] for d, n in sorted(tally.items())]


def decode_chord_tally(obj) -> dict:
    from .parsing import parse_matching

    return {parse_matching(text): n for text, n in obj}


def encode_outcome(result) -> dict:
    if isinstance(result, Solution):
        return {
            "status": "solution",
            "values": [encode_scalar(v) for v in result.values],
            "free": list(result.free),
        }
    if isinstance(result, Inconsistent):
        def side(pair):
            tags, value = pair
            return {
                "equations": [list(t) for t in tags],
                "value": None if value is None else encode_scalar(value),
            }

        return {
            "status": "inconsistent",
            "unknown": result.unknown,
            "first": side(result.first),
            "second": side(result.second),
        }
    raise TypeError("expected a Solution or Inconsistent, got %r" % (result,))


def decode_outcome(obj):
    if obj["status"] == "solution":
        return Solution([decode_scalar(v) for v in obj["values"]], tuple(obj["free"]))
    if obj["status"] == "inconsistent":
        def side(rec):
            value = rec["value"]
            return (
                tuple(tuple(t) for t in rec["equations"]),
                None if value is None else decode_scalar(value),
            )

        return Inconsistent(obj["unknown"], side(obj["first"]), side(obj["second"]))
    raise ValueError("unknown outcome status %r" % (obj["status"],))


def decode_pattern_element(obj) -> AnnulusElement:
    if isinstance(obj, list):
        return decode_annulus(obj)
    if isinstance(obj, dict):
        from .parsing import parse_braid_word

        strands = obj["strands"]
        word = obj["word"]
        letters = parse_braid_word(word, strands) if isinstance(word, str) else tuple(word)
        braid = BraidWord(strands, letters)
        colour = obj.get("colour")
        if colour is None:
            return closure_word(braid)
        return closure(decorate(braid, Partition(tuple(colour))))
    raise ValueError("pattern element must be an annulus record or a braid record")


def decode_pattern_system(obj) -> PatternSystem:
    if not isinstance(obj, dict) or "target" not in obj or "patterns" not in obj:
        raise ValueError("pattern file needs 'target' and 'patterns' entries")
    target = decode_pattern_element(obj["target"])
    patterns = [decode_pattern_element(p) for p in obj["patterns"]]
    return PatternSystem(target, patterns)
