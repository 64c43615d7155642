import random
from fractions import Fraction

import pytest

from singspec import (
    EigenMultiset,
    FracPoly,
    NegativeMultiplicityError,
    NonExactDivisionError,
    NonIsolatedSingularityError,
    NotGaloisStableError,
    NotWeightedHomogeneousError,
    Polynomial,
    char_poly,
    check_symmetry,
    eigenvalues_gamma_c,
    eigenvalues_geometric,
    milnor_basis,
    parse_polynomial,
    sp_at_infinity,
    sp_from_basis,
    sp_product_formula,
    sp_twist,
    spectral_residues,
)

F = Fraction
XY = ("x", "y")


def random_weights(rng, n):
    return tuple(F(rng.randint(1, 5), rng.randint(6, 12)) for _ in range(n))


# -- product formula -----------------------------------------------------------


def test_product_formula_golden():
    assert sp_product_formula((F(1, 2), F(1, 3))) == FracPoly(
        {F(5, 6): 1, F(7, 6): 1}
    )
    assert sp_product_formula((F(1, 2), F(1, 2))) == FracPoly({F(1): 1})
    assert sp_product_formula((F(1, 3), F(1, 3))) == FracPoly(
        {F(2, 3): 1, F(1): 2, F(4, 3): 1}
    )


def test_product_formula_non_reciprocal_weights():
    # weights with numerator > 1: per-factor division would fail, the full
    # product still divides exactly
    assert sp_product_formula((F(3, 8), F(1, 4))) == FracPoly(
        {F(5, 8): 1, F(1): 1, F(11, 8): 1, F(9, 8): 1, F(7, 8): 1}
    )
    s = sp_product_formula((F(4, 15), F(1, 5)))
    assert s.coefficient_sum() == 11
    assert check_symmetry(s, 2)


def test_product_formula_rejects_impossible_weights():
    with pytest.raises(NonExactDivisionError):
        sp_product_formula((F(2, 3), F(2, 3)))


def test_thom_sebastiani_factorization():
    rng = random.Random(271)
    for _ in range(40):
        w1 = (F(1, rng.randint(2, 6)),)
        w2 = (F(1, rng.randint(2, 6)), F(1, rng.randint(2, 6)))
        assert (
            sp_product_formula(w1 + w2)
            == sp_product_formula(w1) * sp_product_formula(w2)
        )


def test_support_bounds():
    for ws in ((F(1, 2), F(1, 3)), (F(1, 6),) * 3, (F(3, 8), F(1, 4))):
        s = sp_product_formula(ws)
        lo = sum(ws)
        hi = len(ws) - lo
        assert all(lo <= a <= hi for a in s.support())


def test_symmetry_of_formula():
    rng = random.Random(4096)
    for _ in range(60):
        n = rng.randint(1, 4)
        ws = tuple(F(1, rng.randint(2, 9)) for _ in range(n))
        assert check_symmetry(sp_product_formula(ws), n)


# -- basis route ----------------------------------------------------------------


def test_basis_route_golden():
    cusp = milnor_basis(parse_polynomial("x^2 + y^3", XY), ("1/2", "1/3"))
    assert sp_from_basis(cusp) == FracPoly({F(5, 6): 1, F(7, 6): 1})
    node = milnor_basis(parse_polynomial("x^2 + y^2", XY), ("1/2", "1/2"))
    assert sp_from_basis(node) == FracPoly({F(1): 1})
    cubes = milnor_basis(parse_polynomial("x^3 + y^3", XY), ("1/3", "1/3"))
    assert sp_from_basis(cubes) == FracPoly({F(2, 3): 1, F(1): 2, F(4, 3): 1})


def test_dual_routes_on_mixed_ideals():
    for text, ws in (
        ("x^2*y + y^4", ("3/8", "1/4")),
        ("x^3 + x*y^3", ("1/3", "2/9")),
        ("x^3*y + y^5", ("4/15", "1/5")),
    ):
        b = milnor_basis(parse_polynomial(text, XY), ws)
        assert sp_from_basis(b) == sp_product_formula(b.weights), text


def test_sp_twist():
    s = FracPoly({F(5, 6): 1, F(7, 6): 1})
    assert sp_twist(s, 2) == s
    assert sp_twist(FracPoly({F(0): 1}), 0) == FracPoly({F(0): 1})
    assert sp_twist(FracPoly({F(1, 2): 1}), 1) == FracPoly({F(1, 2): 1})
    assert sp_twist(FracPoly({F(1, 3): 1}), 1) == FracPoly({F(2, 3): 1})


def test_check_symmetry_direct():
    assert check_symmetry(FracPoly({F(5, 6): 1, F(7, 6): 1}), 2)
    assert not check_symmetry(FracPoly({F(1, 2): 1}), 2)
    assert check_symmetry(FracPoly(), 17)


def test_sp_at_infinity():
    assert sp_at_infinity(
        parse_polynomial("x^2 + y^3", XY), (F(1, 2), F(1, 3))
    ) == FracPoly({F(5, 6): 1, F(7, 6): 1})
    assert sp_at_infinity(
        parse_polynomial("x^2 + y^2", XY), (F(1, 2), F(1, 2))
    ) == FracPoly({F(1): 1})
    with pytest.raises(NonIsolatedSingularityError):
        sp_at_infinity(parse_polynomial("x^2*y", XY), (F(1, 4), F(1, 2)))
    with pytest.raises(NotWeightedHomogeneousError):
        sp_at_infinity(parse_polynomial("x^2 + y^3", XY), (F(1, 2), F(1, 2)))


# -- eigenvalue conventions -------------------------------------------------------


def test_eigenvalues_gamma_c():
    s = FracPoly({F(5, 6): 1, F(7, 6): 1})
    assert eigenvalues_gamma_c(s) == EigenMultiset({F(1, 6): 1, F(5, 6): 1})
    assert eigenvalues_gamma_c(FracPoly({F(1): 1})) == EigenMultiset({F(0): 1})
    with pytest.raises(NegativeMultiplicityError):
        eigenvalues_gamma_c(FracPoly({F(1, 2): -1}))


def test_eigenvalues_geometric_involution():
    e = EigenMultiset({F(1, 3): 1})
    assert eigenvalues_geometric(e) == EigenMultiset({F(2, 3): 1})
    assert eigenvalues_geometric(EigenMultiset({F(0): 5})) == EigenMultiset(
        {F(0): 5}
    )
    rng = random.Random(12)
    for _ in range(50):
        residues = {
            F(rng.randint(0, 5), 6): rng.randint(1, 4) for _ in range(rng.randint(1, 4))
        }
        e = EigenMultiset(residues)
        assert eigenvalues_geometric(eigenvalues_geometric(e)) == e


def test_convention_triangle():
    for ws in ((F(1, 2), F(1, 3)), (F(1, 3), F(1, 3)), (F(3, 8), F(1, 4))):
        s = sp_product_formula(ws)
        assert eigenvalues_geometric(eigenvalues_gamma_c(s)) == spectral_residues(s)


def test_eigen_multiset_validation():
    with pytest.raises(ValueError):
        EigenMultiset({F(7, 6): 2})  # residues must already lie in [0, 1)
    with pytest.raises(NegativeMultiplicityError):
        EigenMultiset({F(1, 2): -1})
    with pytest.raises(NegativeMultiplicityError):
        EigenMultiset({F(1, 2): 0})
    assert EigenMultiset({F(1, 2): 2}).total() == 2


# -- characteristic polynomial ---------------------------------------------------


def test_char_poly_golden():
    assert str(char_poly(EigenMultiset({F(1, 6): 1, F(5, 6): 1}))) == "T^2 - T + 1"
    assert str(char_poly(EigenMultiset({F(0): 2}))) == "T^2 - 2*T + 1"
    assert str(char_poly(EigenMultiset())) == "1"
    five = char_poly(EigenMultiset({F(k, 5): 1 for k in range(1, 5)}))
    assert five == Polynomial(("T",), {(k,): 1 for k in range(5)})


def test_char_poly_not_galois_stable():
    with pytest.raises(NotGaloisStableError) as exc:
        char_poly(EigenMultiset({F(1, 3): 1}))
    assert exc.value.residue == F(2, 3)
    with pytest.raises(NotGaloisStableError):
        char_poly(EigenMultiset({F(1, 6): 2, F(5, 6): 1}))


def test_char_poly_from_spectrum_degree_mu():
    for text, ws, mu in (
        ("x^2 + y^3", ("1/2", "1/3"), 2),
        ("x^3 + y^3", ("1/3", "1/3"), 4),
        ("x^3*y + y^5", ("4/15", "1/5"), 11),
    ):
        s = sp_from_basis(milnor_basis(parse_polynomial(text, XY), ws))
        cp = char_poly(eigenvalues_gamma_c(s))
        assert cp.total_degree() == mu
        assert all(c.denominator == 1 for c in cp.terms.values())
        # monic: full multiplicity at the top
        assert cp.terms[(mu,)] == 1


def test_char_poly_convention_independent():
    for ws in ((F(1, 2), F(1, 3)), (F(1, 6), F(1, 6))):
        e = eigenvalues_gamma_c(sp_product_formula(ws))
        assert char_poly(e) == char_poly(eigenvalues_geometric(e))
