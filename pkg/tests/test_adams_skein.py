"""Power sums of cycle closures, series identities, torus knots, and the
pattern solver."""

from fractions import Fraction

import pytest

from qskein.adams_skein import (
    GradedSeries,
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
    series_c,
    series_d,
    series_identities,
    solve_pattern,
    torus_braid,
    torus_invariant,
)
from qskein.annulus import AnnulusElement, Q, a_gen, closure_word
from qskein.diagram_ring import CPoly, gen
from qskein.hecke import BraidWord
from qskein.partitions import Partition
from qskein.scalars import Scalar, Z, delta, h_expand


def test_cycle_braids():
    w = a_braid(1, 1)
    assert w.strand_count == 3
    assert w.letters == (1, -2)
    assert a_braid(0, 0).strand_count == 1
    assert a_braid(2, 0).letters == (1, 2)
    assert str(a_braid(1, 1)) == "1 -2"


def test_power_sum_values():
    assert P(1) == a_gen(1)
    assert str(P(2)) == "2*x^-1*A2 - (s - s^-1)*A1^2"
    with pytest.raises(ValueError):
        P(0)


def test_power_sums_match_column_side():
    for m in range(1, 5):
        assert P(m) == power_sum_image(m), m


def test_power_sum_recursion():
    for m in range(1, 6):
        assert power_sum_recursion_holds(m), m


def test_cycle_expansions():
    for m in range(1, 6):
        assert closure_word(a_braid(m - 1, 0)) == positive_cycle_expansion(m), m
        assert negative_cycle(m) == negative_cycle_expansion(m), m


def test_series_identities_all_pass():
    for label, ok, detail in series_identities(4):
        assert ok, (label, detail)


def test_graded_series_arithmetic():
    one = GradedSeries(CPoly, [CPoly.one(), gen(1)])
    other = GradedSeries(CPoly, [CPoly.one(), -gen(1)])
    prod = one * other
    assert prod.coeff(0) == CPoly.one()
    assert prod.coeff(1) == CPoly.zero()
    a = Scalar.monomial(1, 0, 0)
    shifted = one.substitute(a)
    assert shifted.coeff(1) == gen(1).scale(a)
    assert one.first_difference(other) == 1
    assert one.first_difference(one) is None
    with pytest.raises(TypeError):
        GradedSeries(CPoly, [AnnulusElement.one()])
    # C and D really are mutually reciprocal as series
    cd = series_c(6) * series_d(6)
    unit = GradedSeries(CPoly, [CPoly.one()] + [CPoly.zero()] * 5)
    assert cd.first_difference(unit) is None


def test_rosso_jones_values():
    # the (2,3) value expanded by hand in the hook basis
    z2 = Z * Z + Scalar.one()
    want = (
        a_gen(1) ** 2
    ).scale(Scalar.monomial(6, -3, 0) * Z) + a_gen(2).scale(Scalar.monomial(5, -3, 0) * z2)
    assert rosso_jones(2, 3) == want
    # and it matches the honest closure up to the global framing monomial
    got = closure_word(BraidWord(2, (1, 1, 1)))
    assert got == rosso_jones(2, 3).scale(Scalar.monomial(-3, 3, 0))
    with pytest.raises(ValueError):
        rosso_jones(2, 4)
    with pytest.raises(ValueError):
        rosso_jones(0, 1)


def test_rosso_jones_cross_check_small():
    for m, p in ((2, 1), (3, 1), (2, 3), (3, 2)):
        got = closure_word(torus_braid(m, p))
        assert got == rosso_jones(m, p).scale(Scalar.monomial(-p, p, 0)), (m, p)


def test_torus_invariant_normalization():
    raw = torus_invariant(2, 3)
    normalized = torus_invariant(2, 3, normalize=True)
    assert raw == normalized * Scalar.monomial(3, -3, 0)
    want = delta() * (
        Scalar.monomial(0, 2, 0, 2) - Scalar.monomial(0, 4, 0) + Scalar.monomial(0, 2, 0) * Z * Z
    )
    assert normalized == want
    series = h_expand(torus_invariant(2, 3, sl=2, normalize=True), 2, 3)
    assert series == [2, 0, Fraction(-23, 4), 12]


def test_pattern_solution_exact():
    target = P(2)
    patterns = [closure_word(BraidWord(2, (1,))), closure_word(BraidWord(2, (-1,)))]
    out = solve_pattern(PatternSystem(target, patterns))
    assert isinstance(out, Solution)
    assert list(out.values) == [Scalar.monomial(-1, 0, 0), Scalar.monomial(1, 0, 0)]
    assert str(out) == "solution [x^-1, x]"


def test_pattern_solution_with_free_unknown():
    target = a_gen(1)
    out = solve_pattern(PatternSystem(target, [a_gen(1), a_gen(1)]))
    assert isinstance(out, Solution)
    assert list(out.values) == [Scalar.one(), Scalar.zero()]
    assert out.free == (1,)


def test_pattern_counterexample_certificate():
    system = cable_counterexample()
    assert system.target == Q(Partition((4,))) - Q(Partition((2, 1, 1))) + Q(Partition((2, 2)))
    out = solve_pattern(system)
    assert isinstance(out, Inconsistent)
    assert set(out.first[0]) != set(out.second[0])
    assert out.first[1] != out.second[1]
    # same verdict with the patterns listed the other way round
    flipped = PatternSystem(system.target, list(reversed(system.patterns)))
    assert isinstance(solve_pattern(flipped), Inconsistent)


def test_pattern_validation():
    with pytest.raises(ValueError):
        PatternSystem(a_gen(1), [])
    with pytest.raises(ValueError):
        PatternSystem(a_gen(1), [a_gen(1) + a_gen(2)])
