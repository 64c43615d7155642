import random
from fractions import Fraction

import pytest

from singspec import (
    InconsistentWeightsError,
    LengthMismatchError,
    Polynomial,
    UnderdeterminedWeightsError,
    WeightOutOfRangeError,
    as_weights,
    infer_weights,
    is_weighted_homogeneous,
    jacobian_generators,
    parse_polynomial,
    weighted_degree,
)

XY = ("x", "y")


def random_polynomial(rng, variables, max_terms=4, max_exp=4):
    terms = {}
    for _ in range(rng.randint(0, max_terms)):
        e = tuple(rng.randint(0, max_exp) for _ in variables)
        terms[e] = terms.get(e, 0) + rng.randint(-3, 3)
    return Polynomial(variables, terms)


def test_construction_merges_and_drops_zeros():
    p = Polynomial(XY, [((1, 0), 2), ((1, 0), -2), ((0, 1), Fraction(1, 3))])
    assert p.terms == {(0, 1): Fraction(1, 3)}


def test_length_mismatch_rejected():
    with pytest.raises(LengthMismatchError):
        Polynomial(XY, {(1,): 1})


def test_immutable():
    p = Polynomial.variable(XY, "x")
    with pytest.raises(AttributeError):
        p.terms = {}


def test_ring_axioms_randomized():
    rng = random.Random(1405)
    for _ in range(200):
        a = random_polynomial(rng, XY)
        b = random_polynomial(rng, XY)
        c = random_polynomial(rng, XY)
        assert a + b == b + a
        assert (a + b) + c == a + (b + c)
        assert a * b == b * a
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c
        assert a + Polynomial.zero(XY) == a
        assert a * Polynomial.constant(XY, 1) == a


def test_power_matches_repeated_product():
    rng = random.Random(77)
    for _ in range(20):
        a = random_polynomial(rng, XY, max_terms=3, max_exp=2)
        prod = Polynomial.constant(XY, 1)
        for k in range(5):
            assert a**k == prod
            prod = prod * a


def test_scalar_lifting():
    x = Polynomial.variable(XY, "x")
    assert 2 * x + 1 == Polynomial(XY, {(1, 0): 2, (0, 0): 1})
    assert (1 - x) * (1 + x) == 1 - x * x


def test_render_parse_round_trip():
    rng = random.Random(90)
    for _ in range(150):
        p = random_polynomial(rng, XY)
        assert parse_polynomial(str(p), XY) == p


def test_render_golden():
    p = Polynomial(XY, {(2, 0): 1, (0, 3): -1, (0, 0): Fraction(1, 2)})
    assert str(p) == "-y^3 + x^2 + 1/2"
    assert str(Polynomial.zero(XY)) == "0"


def test_partial_derivatives():
    f = parse_polynomial("x^2*y + 3*y^2", XY)
    fx, fy = jacobian_generators(f)
    assert fx == parse_polynomial("2*x*y", XY)
    assert fy == parse_polynomial("x^2 + 6*y", XY)
    assert jacobian_generators(Polynomial.constant(XY, 5)) == (
        Polynomial.zero(XY),
        Polynomial.zero(XY),
    )


def test_weighted_degree_values():
    w = as_weights(("1/2", "1/3"))
    assert weighted_degree((2, 0), w) == 1
    assert weighted_degree((0, 0), w) == 0
    assert weighted_degree((1, 1), w) == Fraction(5, 6)
    with pytest.raises(LengthMismatchError):
        weighted_degree((1,), w)


def test_weighted_degree_additive():
    rng = random.Random(3)
    w = as_weights((Fraction(2, 7), Fraction(1, 5)))
    for _ in range(100):
        m1 = (rng.randint(0, 9), rng.randint(0, 9))
        m2 = (rng.randint(0, 9), rng.randint(0, 9))
        s = tuple(a + b for a, b in zip(m1, m2))
        assert weighted_degree(s, w) == weighted_degree(m1, w) + weighted_degree(m2, w)


def test_is_weighted_homogeneous():
    f = parse_polynomial("x^2 + y^3", XY)
    assert is_weighted_homogeneous(f, ("1/2", "1/3"))
    assert not is_weighted_homogeneous(f, ("1/2", "1/2"))
    g = parse_polynomial("x^3 + x*y + y^3", XY)
    assert not is_weighted_homogeneous(g, ("1/3", "1/3"))
    assert is_weighted_homogeneous(Polynomial.zero(XY), ("1/2", "1/2"))


def test_weight_range_enforced():
    with pytest.raises(WeightOutOfRangeError):
        as_weights((Fraction(1, 2), Fraction(1)))
    with pytest.raises(WeightOutOfRangeError):
        as_weights((Fraction(0), Fraction(1, 2)))


def test_infer_weights_unique_solutions():
    assert infer_weights(parse_polynomial("x^2 + y^3", XY)) == (
        Fraction(1, 2),
        Fraction(1, 3),
    )
    # two equations, two unknowns, rank 2
    assert infer_weights(parse_polynomial("x^2*y + x*y^2", XY)) == (
        Fraction(1, 3),
        Fraction(1, 3),
    )


def test_infer_weights_makes_homogeneous():
    rng = random.Random(52)
    for _ in range(50):
        a = rng.randint(2, 6)
        b = rng.randint(2, 6)
        f = parse_polynomial(f"x^{a} + y^{b}", XY)
        w = infer_weights(f)
        assert is_weighted_homogeneous(f, w)


def test_infer_weights_error_cases():
    with pytest.raises(UnderdeterminedWeightsError):
        infer_weights(parse_polynomial("x^2", XY))
    with pytest.raises(InconsistentWeightsError):
        infer_weights(parse_polynomial("x^2 + x^3", XY))
    # unique solution but w = 1 is out of range
    with pytest.raises(WeightOutOfRangeError):
        infer_weights(parse_polynomial("x + y^2", XY))
