"""Named verification suites behind the `verify` subcommand.

Each suite recomputes a family of identities from scratch and reports one
(ok, "tag params") row per checked instance.  Suites and default size caps:

  ring         8   reciprocal series, hook splitting, product laws
  hecke        5   basis round-trip, braid relations, eigenvalues,
                   row/column decompositions, closure moves
  idempotents  5   e^2 = alpha e, orthogonality one size down
  hook         6   column leads, hook products, theta images
  series       6   cycle expansions, factorizations, power-sum recursion
  xbiff        6   power sums against the skein side
  rosso-jones  4   torus closures against the hook expansion
  cd           3   chord-diagram cover tallies
  pattern      2   the decorated-pattern solver outcomes

Caps above the defaults are allowed but untested territory; runtime grows
factorially with the Hecke caps.
"""

import random
from fractions import Fraction

from .adams_skein import (
    Inconsistent,
    P,
    PatternSystem,
    Solution,
    a_braid,
    cable_counterexample,
    negative_cycle,
    negative_cycle_expansion,
    positive_cycle_expansion,
    power_sum_image,
    power_sum_recursion_holds,
    rosso_jones,
    series_identities,
    solve_pattern,
    torus_braid,
    torus_invariant,
)
from .annulus import AnnulusElement, Q, closure_word, epsilon_plane, q_hook, theta
from .chords import CROSSING, PARALLEL, all_diagrams, psi_chords
from .diagram_ring import CPoly, DiagramVector, d, gen, phi, phi_inverse
from .hecke import (
    BraidWord,
    HeckeElement,
    a_element,
    alpha,
    b_element,
    e_lambda,
    from_word,
    mul,
    tensor,
)
from .partitions import (
    Partition,
    all_partitions_up_to,
    hook_content_closed,
    hook_content_product,
    lr_product,
    partitions_of,
)
from .perms import all_perms, reduced_word
from .scalars import Scalar, Z, delta, h_expand, quantum_int

DEFAULT_MAX = {
    "ring": 8,
    "hecke": 5,
    "idempotents": 5,
    "hook": 6,
    "series": 6,
    "xbiff": 6,
    "rosso-jones": 4,
    "cd": 3,
    "pattern": 2,
}

SUITE_ORDER = list(DEFAULT_MAX)


def _suite_xbiff(cap):
    rows = []
    for m in range(1, cap + 1):
        rows.append((P(m) == power_sum_image(m), "xbiff m=%d" % m))
    return rows


def _suite_idempotents(cap):
    rows = []
    for n in range(1, cap + 1):
        for lam in partitions_of(n):
            e = e_lambda(lam)
            ok = mul(e, e) == e.scale(alpha(lam))
            rows.append((ok, "idempotents lam=%s" % lam))
    for n in range(2, cap):
        for lam in partitions_of(n):
            for mu in partitions_of(n):
                if not lam < mu:
                    continue
                ok = mul(e_lambda(lam), e_lambda(mu)).is_zero()
                ok = ok and mul(e_lambda(mu), e_lambda(lam)).is_zero()
                rows.append((ok, "idempotents orthogonal %s,%s" % (lam, mu)))
    return rows


def _suite_hook(cap):
    rows = []

    lead_plain = []
    lead_factorial = []
    for k in range(1, cap + 1):
        got = Q(Partition((1,) * k)).coeff((k,))
        sign = Scalar.monomial(-(k - 1), 0, 0, (-1) ** (k - 1))
        lead_plain.append(got == sign / Scalar(quantum_int(k)))
        fact = Scalar.one()
        for i in range(1, k + 1):
            fact = fact * Scalar(quantum_int(i))
        lead_factorial.append(got == sign / fact)
        rows.append((lead_plain[-1], "hook column-lead k=%d" % k))
    if all(lead_plain):
        resolved = "[k]"
    elif all(lead_factorial):
        resolved = "[k]!"
    else:
        resolved = "neither"
    rows.append((resolved != "neither", "hook column-lead denominator=%s" % resolved))

    for k in range(1, cap):
        for l in range(1, cap + 1 - k):
            ok = q_hook(k + 1, l) + q_hook(k, l + 1) == q_hook(k, 1) * q_hook(1, l)
            rows.append((ok, "hook sum-split k=%d l=%d" % (k, l)))

    def closed_hook(k, l):
        h = Partition.hook(k, l)
        return Q(h).scale(alpha(h))

    for k in range(1, cap):
        for l in range(1, cap + 1 - k):
            lhs = closed_hook(k + 1, l).scale(Scalar.monomial(0, 0, l) * Scalar(quantum_int(l)))
            lhs = lhs + closed_hook(k, l + 1).scale(Scalar.monomial(0, 0, -k) * Scalar(quantum_int(k)))
            rhs = (closed_hook(1, l) * closed_hook(k, 1)).scale(
                Scalar.monomial(0, 0, l - k) * Scalar(quantum_int(l + k))
            )
            rows.append((lhs == rhs, "hook weighted-split k=%d l=%d" % (k, l)))

    def q_col(k):
        return AnnulusElement.one() if k == 0 else Q(Partition((1,) * k))

    def q_row(l):
        return AnnulusElement.one() if l == 0 else Q(Partition((l,)))

    for m in range(1, cap + 1):
        acc = AnnulusElement.zero()
        for k in range(m + 1):
            term = q_col(k) * q_row(m - k)
            acc = acc + (-term if k % 2 else term)
        rows.append((acc.is_zero(), "hook reciprocal m=%d" % m))

    for l in range(1, cap + 1):
        rows.append((theta(d(l)) == Q(Partition((l,))), "hook row-image l=%d" % l))

    for k in range(1, cap):
        for l in range(1, cap + 1 - k):
            ok = theta(DiagramVector.term(Partition.hook(k, l))) == q_hook(k, l)
            rows.append((ok, "hook hook-image k=%d l=%d" % (k, l)))

    for lam in all_partitions_up_to(max(cap - 1, 1)):
        if lam.size == 0:
            continue
        ok = theta(DiagramVector.term(lam)) == Q(lam)
        rows.append((ok, "hook diagram-image lam=%s" % lam))
    return rows


def _suite_series(cap):
    rows = []
    for m in range(1, cap + 1):
        ok = closure_word(a_braid(m - 1, 0)) == positive_cycle_expansion(m)
        rows.append((ok, "series positive-cycle m=%d" % m))
    for m in range(1, cap + 1):
        ok = negative_cycle(m) == negative_cycle_expansion(m)
        rows.append((ok, "series negative-cycle m=%d" % m))
    for label, ok, detail in series_identities(max(cap - 1, 1)):
        text = "series %s" % label
        if detail:
            text += " (%s)" % detail
        rows.append((ok, text))
    for m in range(1, cap + 1):
        rows.append((power_sum_recursion_holds(m), "series power-sum-recursion m=%d" % m))
    return rows


ROSSO_JONES_PAIRS = ((2, 1), (3, 1), (4, 1), (2, 3), (2, 5), (3, 2), (3, 4), (4, 3))


def _suite_rosso_jones(cap):
    rows = []
    for m, p in ROSSO_JONES_PAIRS:
        if m > cap:
            continue
        got = closure_word(torus_braid(m, p))
        want = rosso_jones(m, p).scale(Scalar.monomial(-p, p, 0))
        rows.append((got == want, "rosso-jones m=%d p=%d" % (m, p)))

    trefoil = torus_invariant(2, 3, normalize=True)
    want = delta() * (
        Scalar.monomial(0, 2, 0, 2) - Scalar.monomial(0, 4, 0) + Scalar.monomial(0, 2, 0) * Z * Z
    )
    rows.append((trefoil == want, "rosso-jones trefoil-value"))

    series = h_expand(torus_invariant(2, 3, sl=2, normalize=True), 2, 4)
    rows.append((series[0] == Fraction(2), "rosso-jones trefoil-h-constant"))
    return rows


def _lr_combine(a_terms: dict, b_terms: dict) -> dict:
    out: dict = {}
    for lam, c1 in a_terms.items():
        for mu, c2 in b_terms.items():
            for nu, k in lr_product(lam, mu).items():
                out[nu] = out.get(nu, 0) + c1 * c2 * k
    return {nu: c for nu, c in out.items() if c}


def _suite_ring(cap):
    rows = []
    for m in range(1, cap + 1):
        acc = CPoly.zero()
        for k in range(m + 1):
            term = gen(k) * d(m - k)
            acc = acc + (-term if k % 2 else term)
        rows.append((acc.is_zero(), "ring reciprocal m=%d" % m))

    for k in range(1, cap):
        for l in range(1, cap + 1 - k):
            want = DiagramVector.term(Partition.hook(k + 1, l)) + DiagramVector.term(Partition.hook(k, l + 1))
            rows.append((phi(gen(k) * d(l)) == want, "ring hook-split k=%d l=%d" % (k, l)))

    from .adams_skein import series_c, series_c_deriv, series_d, series_d_deriv, series_power_sums

    psum = series_power_sums(cap)
    ok = psum.first_difference(-(series_c_deriv(cap) * series_d(cap))) is None
    rows.append((ok, "ring power-sum-log-derivative order=%d" % cap))
    ok = psum.first_difference(series_d_deriv(cap) * series_c(cap)) is None
    rows.append((ok, "ring power-sum-reciprocal-derivative order=%d" % cap))

    for n in range(1, min(cap, 6) + 1):
        ok = all(
            phi(phi_inverse(DiagramVector.term(lam))) == DiagramVector.term(lam)
            for lam in partitions_of(n)
        )
        rows.append((ok, "ring basis-roundtrip n=%d" % n))

    for n in range(2, cap + 1):
        ok = True
        for a in range(1, n):
            for lam in partitions_of(a):
                for mu in partitions_of(n - a):
                    if lr_product(lam, mu) != lr_product(mu, lam):
                        ok = False
                    if any(nu.size != n for nu in lr_product(lam, mu)):
                        ok = False
        rows.append((ok, "ring product-symmetry n=%d" % n))

    for n in range(3, min(cap, 6) + 1):
        ok = True
        for a in range(1, n - 1):
            for b in range(1, n - a):
                c = n - a - b
                if c < 1:
                    continue
                for lam in partitions_of(a):
                    for mu in partitions_of(b):
                        for nu in partitions_of(c):
                            left = _lr_combine(lr_product(lam, mu), {nu: 1})
                            right = _lr_combine({lam: 1}, lr_product(mu, nu))
                            if left != right:
                                ok = False
        rows.append((ok, "ring product-associativity n=%d" % n))

    for k in range(1, cap):
        for l in range(1, cap + 1 - k):
            ok = hook_content_product(Partition.hook(k, l)) == hook_content_closed(k, l)
            rows.append((ok, "ring hook-content k=%d l=%d" % (k, l)))
    return rows


def _suite_hecke(cap):
    rows = []
    x = Scalar.monomial(1, 0, 0)
    xinv = Scalar.monomial(-1, 0, 0)
    xs = Scalar.monomial(1, 0, 1)
    neg_xsinv = Scalar.monomial(1, 0, -1, -1)

    for n in range(2, cap + 1):
        ok = all(
            from_word(BraidWord(n, [i + 1 for i in reduced_word(pi)])) == HeckeElement(n, {pi: Scalar.one()})
            for pi in all_perms(n)
        )
        rows.append((ok, "hecke basis-roundtrip n=%d" % n))

    for n in range(2, cap + 1):
        ok = True
        for i in range(1, n - 1):
            lhs = from_word(BraidWord(n, (i, i + 1, i)))
            rhs = from_word(BraidWord(n, (i + 1, i, i + 1)))
            ok = ok and lhs == rhs
        for i in range(1, n - 1):
            for j in range(i + 2, n):
                ok = ok and from_word(BraidWord(n, (i, j))) == from_word(BraidWord(n, (j, i)))
        for i in range(1, n):
            lhs = from_word(BraidWord(n, (i,))).scale(xinv) - from_word(BraidWord(n, (-i,))).scale(x)
            ok = ok and lhs == HeckeElement.unit(n).scale(Z)
        rows.append((ok, "hecke braid-relations n=%d" % n))

    for n in range(1, cap + 1):
        a = a_element(n)
        b = b_element(n)
        ok = True
        for i in range(1, n):
            sigma = from_word(BraidWord(n, (i,)))
            ok = ok and a.right_word([i]) == a.scale(xs)
            ok = ok and mul(sigma, a) == a.scale(xs)
            ok = ok and b.right_word([i]) == b.scale(neg_xsinv)
            ok = ok and mul(sigma, b) == b.scale(neg_xsinv)
        rows.append((ok, "hecke absorb n=%d" % n))

    for l in range(2, cap + 1):
        emb = tensor(a_element(l - 1), a_element(1))
        acc = emb
        coeff = Scalar.one()
        for i in range(l - 1):
            coeff = coeff * xinv * Scalar.monomial(0, 0, 1)
            word = list(range(l - 1, l - i - 2, -1))
            acc = acc + emb.right_word(word).scale(coeff)
        rows.append((acc == a_element(l), "hecke row-decomposition l=%d" % l))

    for k in range(2, cap + 1):
        emb = tensor(b_element(k - 1), b_element(1))
        acc = emb
        coeff = Scalar.one()
        for i in range(k - 1):
            coeff = coeff * xinv * Scalar.monomial(0, 0, -1, -1)
            word = list(range(k - 1, k - i - 2, -1))
            acc = acc + emb.right_word(word).scale(coeff)
        rows.append((acc == b_element(k), "hecke column-decomposition k=%d" % k))

    rng = random.Random(1203)
    for n in range(2, cap + 1):
        ok = True
        for _ in range(3):
            w = [rng.choice((1, -1)) * rng.randint(1, n - 1) for _ in range(rng.randint(3, 6))]
            g = [rng.choice((1, -1)) * rng.randint(1, n - 1) for _ in range(rng.randint(1, 3))]
            conj = g + w + [-j for j in reversed(g)]
            ok = ok and closure_word(BraidWord(n, conj)) == closure_word(BraidWord(n, w))
        rows.append((ok, "hecke closure-conjugation n=%d" % n))

    curl = Scalar.monomial(1, -1, 0)
    for n in range(2, cap + 1):
        ok = True
        for _ in range(3):
            w = [rng.choice((1, -1)) * rng.randint(1, max(n - 2, 1)) for _ in range(rng.randint(0, 4))]
            if n == 2:
                w = []
            base = epsilon_plane(closure_word(BraidWord(n - 1, w)))
            up = epsilon_plane(closure_word(BraidWord(n, w + [n - 1])))
            down = epsilon_plane(closure_word(BraidWord(n, w + [-(n - 1)])))
            ok = ok and up == base * curl and down == base / curl
        rows.append((ok, "hecke markov-stabilization n=%d" % n))
    return rows


def _suite_cd(cap):
    rows = []
    tally = psi_chords(CROSSING, 2)
    ok = tally == {CROSSING: 8, PARALLEL: 8}
    rows.append((ok, "cd crossing-tally m=2"))

    for n in range(1, cap + 1):
        diagrams = all_diagrams(n)
        for m in range(1, cap + 1):
            ok = all(sum(psi_chords(dgm, m).values()) == m ** (2 * n) for dgm in diagrams)
            rows.append((ok, "cd cover-count n=%d m=%d" % (n, m)))

    for n in range(1, cap + 1):
        ok = True
        for dgm in all_diagrams(n):
            for r in range(2 * n):
                if dgm.rotated(r) != dgm:
                    ok = False
        rows.append((ok, "cd rotation-classes n=%d" % n))
    return rows


def _suite_pattern(cap):
    rows = []
    out = solve_pattern(cable_counterexample())
    ok = isinstance(out, Inconsistent) and set(out.first[0]) != set(out.second[0])
    rows.append((ok, "pattern inconsistent-forward"))

    base = cable_counterexample()
    flipped = PatternSystem(base.target, list(reversed(base.patterns)))
    out = solve_pattern(flipped)
    ok = isinstance(out, Inconsistent) and set(out.first[0]) != set(out.second[0])
    rows.append((ok, "pattern inconsistent-reversed"))

    m = max(cap, 2)
    system = PatternSystem(P(m), [closure_word(a_braid(i, m - 1 - i)) for i in range(m)])
    out = solve_pattern(system)
    want = [Scalar.monomial(m - 1 - 2 * i, 0, 0) for i in range(m)]
    ok = isinstance(out, Solution) and list(out.values) == want
    rows.append((ok, "pattern exact-multiple m=%d" % m))
    return rows


_SUITES = {
    "ring": _suite_ring,
    "hecke": _suite_hecke,
    "idempotents": _suite_idempotents,
    "hook": _suite_hook,
    "series": _suite_series,
    "xbiff": _suite_xbiff,
    "rosso-jones": _suite_rosso_jones,
    "cd": _suite_cd,
    "pattern": _suite_pattern,
}


def suite_names():
    return SUITE_ORDER + ["all"]


def run_suite(name: str, max_size: int | None = None):
    """Run one suite (or "all") and return its (ok, text) rows."""
    if name == "all":
        rows = []
        for tag in SUITE_ORDER:
            rows.extend(run_suite(tag, max_size))
        return rows
    if name not in _SUITES:
        raise ValueError("unknown suite %r; choose from %s" % (name, ", ".join(suite_names())))
    cap = DEFAULT_MAX[name] if max_size is None else max_size
    if cap < 1:
        raise ValueError("size cap must be positive")
    return _SUITES[name](cap)
