"""Formal Scalar-linear combinations of hashable basis keys.

Shared machinery for the diagram ring, the annulus ring and the Hecke
algebra: storage, module operations, a bilinear product driven by a
per-class key product, and deterministic printing.
"""

from __future__ import annotations

from fractions import Fraction

from .scalars import LaurentPoly, Scalar, format_scalar

SCALAR_LIKE = (int, Fraction, LaurentPoly, Scalar)


def as_scalar(c) -> Scalar:
    if isinstance(c, Scalar):
        return c
    if isinstance(c, LaurentPoly):
        return Scalar.from_poly(c)
    if isinstance(c, (int, Fraction)):
        return Scalar(c)
    raise TypeError(f"not a scalar: {c!r}")


def add_term(acc: dict, key, coeff) -> None:
    """Accumulate coeff onto acc[key], dropping the entry if it cancels."""
    cur = acc.get(key)
    if cur is None:
        if coeff:
            acc[key] = coeff
    else:
        cur = cur + coeff
        if cur:
            acc[key] = cur
        else:
            del acc[key]


class FormalSum:
    """Base class: a finite Scalar-linear combination of basis keys.

    Subclasses fix the key type, the unit key, the product of two keys
    and the print order.  terms maps key -> nonzero Scalar.
    """

    __slots__ = ("terms",)
    _unit_key: object = None
    _print_reverse = False

    def __init__(self, terms=None):
        data = {}
        if terms:
            for key, coeff in terms.items():
                coeff = as_scalar(coeff)
                if coeff:
                    data[key] = coeff
        self.terms = data

    @classmethod
    def _from(cls, terms: dict) -> "FormalSum":
        """Internal: adopt a dict whose values are already nonzero Scalars."""
        obj = object.__new__(cls)
        obj.terms = terms
        return obj

    @classmethod
    def zero(cls):
        return cls._from({})

    @classmethod
    def one(cls):
        return cls._from({cls._unit_key: Scalar.one()})

    @classmethod
    def term(cls, key, coeff=1):
        return cls({key: coeff})

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __len__(self) -> int:
        return len(self.terms)

    def coeff(self, key) -> Scalar:
        c = self.terms.get(key)
        return c if c is not None else Scalar.zero()

    def __eq__(self, other) -> bool:
        if isinstance(other, FormalSum):
            return type(self) is type(other) and self.terms == other.terms
        if isinstance(other, SCALAR_LIKE):
            c = as_scalar(other)
            if not c:
                return not self.terms
            return self.terms == {type(self)._unit_key: c}
        return NotImplemented

    __hash__ = None

    def __add__(self, other):
        cls = type(self)
        if isinstance(other, SCALAR_LIKE):
            other = cls({cls._unit_key: other})
        if type(other) is not cls:
            return NotImplemented
        acc = dict(self.terms)
        for k, c in other.terms.items():
            add_term(acc, k, c)
        return cls._from(acc)

    __radd__ = __add__

    def __sub__(self, other):
        cls = type(self)
        if isinstance(other, SCALAR_LIKE):
            other = cls({cls._unit_key: other})
        if type(other) is not cls:
            return NotImplemented
        acc = dict(self.terms)
        for k, c in other.terms.items():
            add_term(acc, k, -c)
        return cls._from(acc)

    def __rsub__(self, other):
        return (-self) + other

    def __neg__(self):
        return type(self)._from({k: -c for k, c in self.terms.items()})

    def scale(self, c) -> "FormalSum":
        c = as_scalar(c)
        if not c:
            return type(self)._from({})
        return type(self)._from({k: v * c for k, v in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, SCALAR_LIKE):
            return self.scale(other)
        cls = type(self)
        if type(other) is not cls:
            return NotImplemented
        acc: dict = {}
        for k1, c1 in self.terms.items():
            for k2, c2 in other.terms.items():
                c = c1 * c2
                for k3, m in self._mul_keys(k1, k2).items():
                    add_term(acc, k3, c if m == 1 else c * m)
        return cls._from(acc)

    def __rmul__(self, other):
        if isinstance(other, SCALAR_LIKE):
            return self.scale(other)
        return NotImplemented

    def __truediv__(self, other):
        if isinstance(other, SCALAR_LIKE):
            c = as_scalar(other)
            return self.scale(Scalar.one() / c)
        return NotImplemented

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power of a formal sum")
        out = type(self).one()
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base if n > 1 else base
            n >>= 1
        return out

    def _mul_keys(self, k1, k2) -> dict:
        raise NotImplementedError

    def _format_key(self, key) -> str:
        raise NotImplementedError

    def sorted_terms(self):
        return [(k, self.terms[k]) for k in sorted(self.terms, reverse=self._print_reverse)]

    def __str__(self) -> str:
        return format_sum(self.sorted_terms(), self._format_key)

    def __repr__(self) -> str:
        return f"{type(self).__name__}({self.terms!r})"


def format_sum(pairs, format_key) -> str:
    """Join (key, Scalar) pairs, already in print order, into a sum string."""
    pairs = list(pairs)
    if not pairs:
        return "0"
    out = []
    for i, (key, c) in enumerate(pairs):
        name = format_key(key)
        if c.num.leading_coeff() < 0:
            c = -c
            sign = "-" if i == 0 else "- "
        else:
            sign = "" if i == 0 else "+ "
        body = format_scalar(c)
        if not name:
            if " " in body and len(pairs) > 1:
                body = f"({body})"
            out.append(sign + body)
            continue
        if c.is_one():
            out.append(sign + name)
            continue
        if " " in body:
            body = f"({body})"
        out.append(f"{sign}{body}*{name}")
    return " ".join(out)


def linear_map(element: FormalSum, fn, out_cls):
    """Extend a key-level map linearly: sum coeff * fn(key) in out_cls."""
    acc: dict = {}
    for key, c in element.terms.items():
        for k2, c2 in fn(key).terms.items():
            add_term(acc, k2, c2 * c)
    return out_cls._from(acc)


def multiset_text(indices, symbol: str, ascending: bool) -> str:
    """Render a multiset of generator indices as e.g. c1^2*c3 or A3*A1."""
    if not indices:
        return ""
    counts: dict[int, int] = {}
    for i in indices:
        counts[i] = counts.get(i, 0) + 1
    order = sorted(counts, reverse=not ascending)
    parts = []
    for i in order:
        e = counts[i]
        parts.append(f"{symbol}{i}" if e == 1 else f"{symbol}{i}^{e}")
    return "*".join(parts)
