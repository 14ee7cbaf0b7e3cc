import pytest
from hypothesis import given, settings, strategies as st

from spochar.laurent import (
    FactoredRational,
    LatticeMismatch,
    LaurentPoly,
    NotDivisible,
    exact_div,
    rational_sum,
    rational_weyl_sum,
)


def P(n, m, terms):
    return LaurentPoly(n, m, terms)


def mono(n, m, exps, coef=1):
    return LaurentPoly.monomial(n, m, exps, coef)


# ~20 term polynomials with doubled exponents in [-6, 6] on a rank-3 lattice
exponents = st.tuples(*[st.integers(-6, 6)] * 3)
polys = st.dictionaries(exponents, st.integers(-9, 9), max_size=20).map(lambda d: P(2, 1, d))


@given(polys, polys)
@settings(max_examples=150, deadline=None)
def test_add_mul_commute(p, q):
    assert p + q == q + p
    assert p * q == q * p


@given(polys, polys, polys)
@settings(max_examples=100, deadline=None)
def test_associativity_distributivity(p, q, r):
    assert (p + q) + r == p + (q + r)
    assert (p * q) * r == p * (q * r)
    assert p * (q + r) == p * q + p * r


@given(polys, polys)
@settings(max_examples=100, deadline=None)
def test_exact_div_round_trip(p, q):
    if q.is_zero():
        return
    assert exact_div(p * q, q) == p


@given(polys, polys)
@settings(max_examples=100, deadline=None)
def test_evaluate_at_one_is_ring_hom(p, q):
    assert (p * q).evaluate_at_one() == p.evaluate_at_one() * q.evaluate_at_one()
    assert (p + q).evaluate_at_one() == p.evaluate_at_one() + q.evaluate_at_one()


def test_additive_inverse_and_doubling():
    d1 = mono(1, 1, (2, 0))
    assert (d1 + (-d1)).is_zero()
    p = LaurentPoly.one(1, 1) + mono(1, 1, (0, 2))
    assert p + p == 2 * p


def test_mul_examples():
    d1 = mono(1, 1, (2, 0))
    assert d1 * mono(1, 1, (-2, 0)) == LaurentPoly.one(1, 1)
    p = LaurentPoly.one(1, 1) + d1
    sq = p * p
    assert sq.terms == {(0, 0): 1, (2, 0): 2, (4, 0): 1}


def test_exact_div_examples():
    one = LaurentPoly.one(1, 0)
    d1 = mono(1, 0, (2,))
    assert exact_div(one - d1 * d1, one - d1) == one + d1
    with pytest.raises(NotDivisible):
        exact_div(one + d1, one - d1)
    assert exact_div(LaurentPoly.zero(1, 0), one - d1).is_zero()
    with pytest.raises(ZeroDivisionError):
        exact_div(one, LaurentPoly.zero(1, 0))


def test_exact_div_sp2_weyl_character():
    # antisymmetrized numerator over the rank-one symplectic Weyl group,
    # divided by the denominator, gives the two-dimensional character
    u = mono(1, 0, (2,))
    uinv = mono(1, 0, (-2,))
    num = u * u - uinv * uinv
    den = u - uinv
    assert exact_div(num, den) == u + uinv


def test_dimension_mismatch():
    with pytest.raises(LatticeMismatch):
        LaurentPoly.one(1, 1) + LaurentPoly.one(2, 1)
    with pytest.raises(LatticeMismatch):
        LaurentPoly.one(1, 1) * LaurentPoly.one(1, 2)


def test_rational_weyl_sum_trivial_and_telescoping():
    one = LaurentPoly.one(1, 0)
    p = one + mono(1, 0, (4,))
    assert rational_weyl_sum([(1, FactoredRational(p))]) == p
    # 1/(1-e^{-d1}) - e^{-d1}/(1-e^{-d1}) = 1
    f = {(-1, (-2,)): 1}
    terms = [
        (1, FactoredRational(one, dict(f))),
        (-1, FactoredRational(mono(1, 0, (-2,)), dict(f))),
    ]
    assert rational_weyl_sum(terms) == one


def test_rational_weyl_sum_not_polynomial_raises():
    one = LaurentPoly.one(1, 0)
    with pytest.raises(NotDivisible):
        rational_weyl_sum([(1, FactoredRational(one, {(-1, (-2,)): 1}))])


def test_factored_rational_canonicalization_moves_units():
    # (1 + e^{d1}) = e^{d1} (1 + e^{-d1}): as a denominator factor the unit
    # e^{-d1} moves to the front
    fr = FactoredRational(LaurentPoly.one(1, 0), {(1, (2,)): 1})
    assert fr.factors == {(1, (-2,)): 1}
    assert fr.unit_exp == (-2,)
    assert fr.unit_sign == 1
    # and with sign -1 the unit picks up the sign
    fr2 = FactoredRational(LaurentPoly.one(1, 0), {(-1, (2,)): 1})
    assert fr2.factors == {(-1, (-2,)): 1}
    assert fr2.unit_sign == -1


def test_rational_sum_matches_cleared_arithmetic():
    # compare the common-denominator sum against direct cross-multiplication
    one = LaurentPoly.one(1, 1)
    a = FactoredRational(one + mono(1, 1, (2, 0)), {(1, (-2, 0)): 1})
    b = FactoredRational(mono(1, 1, (0, 2)), {(1, (0, -2)): 1, (1, (-2, 0)): 1})
    s = rational_sum([(1, a), (1, b)])
    lhs = s.numerator.shifted(s.unit_exp, s.unit_sign) * a.denominator_poly() * b.denominator_poly()
    rhs = (
        a.numerator.shifted(a.unit_exp, a.unit_sign) * b.denominator_poly()
        + b.numerator.shifted(b.unit_exp, b.unit_sign) * a.denominator_poly()
    ) * s.denominator_poly()
    assert lhs == rhs


def test_kac_character_as_explicit_weyl_sum():
    # the four-term sum for the rank-one odd algebra: numerators carry the
    # odd denominator product, denominators the even one
    from spochar.charformulas import denominators
    from spochar.rootdata import Algebra, Weight, positive_roots, rho, rho0, weyl_group

    alg = Algebra(1, 1, True)
    _, d1 = denominators(alg)
    lam_rho = Weight.parse(alg, "1d1") + rho(alg)
    even = positive_roots(alg).even
    terms = []
    for g in weyl_group(alg):
        num = g.apply_weight(lam_rho).exponent_monomial() * d1
        factors = {(-1, tuple(-x for x in r.doubled)): 1 for r in even}
        terms.append((g.sign, FactoredRational(num, factors, tuple(-x for x in rho0(alg).doubled), 1)))
    total = rational_weyl_sum(terms)
    assert total.evaluate_at_one() == 4


def test_json_round_trip_and_sorting():
    p = P(1, 1, {(2, 0): 3, (-2, 2): -1, (0, 0): 7})
    d = p.to_json_dict()
    assert [t["exp"] for t in d["terms"]] == [[-2, 2], [0, 0], [2, 0]]
    assert all(isinstance(t["coef"], str) for t in d["terms"])
    assert LaurentPoly.from_json(p.to_json()) == p


def test_kernel_backends_agree():
    from spochar.laurent import _kernel_py

    try:
        from spochar.laurent import _kernel
    except ImportError:
        pytest.skip("compiled kernel not built")
    import random

    rng = random.Random(3)
    for _ in range(25):
        a = {tuple(rng.randint(-5, 5) for _ in range(3)): rng.randint(-9, 9) or 1 for _ in range(8)}
        b = {tuple(rng.randint(-5, 5) for _ in range(3)): rng.randint(-9, 9) or 1 for _ in range(8)}
        assert _kernel.mul_terms(a, b) == _kernel_py.mul_terms(dict(a), dict(b))
        assert _kernel.add_terms(a, b) == _kernel_py.add_terms(dict(a), dict(b))
        acc1, acc2 = dict(a), dict(a)
        shift = (1, -1, 0)
        _kernel.axpy_terms(acc1, -2, shift, b)
        _kernel_py.axpy_terms(acc2, -2, shift, b)
        assert acc1 == acc2
