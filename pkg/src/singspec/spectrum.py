"""Singularity spectra by two independent routes, and monodromy eigenvalue data.

Routes:

* weight product formula: the product over variables of
  (t - t^{w_i}) / (t^{w_i} - 1), evaluated by substituting s = t^{1/m}
  (m = least common multiple of the weight denominators) and performing exact
  one-variable integer division of the expanded numerator product by the
  expanded denominator product (zero remainder and non-negative coefficients
  required);
* basis route: one term t^{l(g) + sum(w)} per standard monomial g of the
  Milnor algebra, l = weighted degree.

For an isolated weighted-homogeneous singularity the two must agree exactly,
the spectrum is symmetric under s |-> t^n iota(s), and the coefficient sum is
the Milnor number.

Eigenvalue conventions (one sign flip apart; both are exposed):

* ``eigenvalues_gamma_c``: a spectrum term t^a yields the residue (-a) mod 1,
  the angle of the monodromy acting on nearby-cycle / local-system cohomology;
* ``eigenvalues_geometric``: angles negated, the action pulled back along the
  geometric monodromy itself -- equal to the multiset {a mod 1} read directly
  off the spectrum.
"""

import math
from fractions import Fraction

from .errors import (
    NegativeMultiplicityError,
    NonExactDivisionError,
    NonIsolatedSingularityError,
    NotGaloisStableError,
    NotWeightedHomogeneousError,
)
from .fracpoly import FracPoly
from .milnor import MilnorBasis, is_isolated
from .poly import Polynomial, as_weights, is_weighted_homogeneous, weighted_degree

# -- dense one-variable integer polynomials (index = degree) -----------------


def _u_trim(a: list) -> list:
    while a and a[-1] == 0:
        a.pop()
    return a


def _u_mul(a: list, b: list) -> list:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                if y:
                    out[i + j] += x * y
    return _u_trim(out)


def _u_pow(a: list, k: int) -> list:
    out = [1]
    base = a
    while k:
        if k & 1:
            out = _u_mul(out, base)
        k >>= 1
        if k:
            base = _u_mul(base, base)
    return out


def _u_divmod(num: list, den: list) -> tuple[list, list]:
    """Long division; the divisor must have leading coefficient 1."""
    assert den and den[-1] == 1
    rem = list(num)
    if len(rem) < len(den):
        return [], _u_trim(rem)
    quo = [0] * (len(rem) - len(den) + 1)
    for k in range(len(quo) - 1, -1, -1):
        c = rem[k + len(den) - 1]
        if c:
            quo[k] = c
            for j, y in enumerate(den):
                rem[k + j] -= c * y
    return _u_trim(quo), _u_trim(rem)


# -- the two spectrum routes --------------------------------------------------


def sp_product_formula(weights) -> FracPoly:
    """Spectrum from the weights alone.

    Raises NonExactDivisionError when the quotient has a remainder or a
    negative coefficient; both mean the weights do not come from an isolated
    weighted-homogeneous singularity.
    """
    ws = as_weights(weights)
    m = math.lcm(*(w.denominator for w in ws)) if ws else 1
    num = [1]
    den = [1]
    for w in ws:
        c = int(w * m)
        factor_num = [0] * (m + 1)
        factor_num[c] = -1
        factor_num[m] += 1
        factor_den = [0] * (c + 1)
        factor_den[0] = -1
        factor_den[c] += 1
        num = _u_mul(num, _u_trim(factor_num))
        den = _u_mul(den, _u_trim(factor_den))
    quo, rem = _u_divmod(num, den)
    if rem:
        raise NonExactDivisionError(
            f"weight product for {tuple(map(str, ws))} leaves a remainder"
        )
    if any(c < 0 for c in quo):
        raise NonExactDivisionError(
            f"weight product for {tuple(map(str, ws))} has a negative coefficient"
        )
    return FracPoly({Fraction(e, m): c for e, c in enumerate(quo) if c})


def sp_from_basis(basis: MilnorBasis) -> FracPoly:
    """Spectrum as the weighted-degree distribution of the standard monomials,
    shifted by the weight sum."""
    shift = sum(basis.weights, Fraction(0))
    return FracPoly((weighted_degree(g, basis.weights) + shift, 1) for g in basis.monomials)


def sp_twist(s: FracPoly, n: int) -> FracPoly:
    """t^n * iota(s): exponent a -> n - a."""
    return FracPoly({n - a: c for a, c in s.terms.items()})


def check_symmetry(s: FracPoly, n: int) -> bool:
    """True when s equals its own twist by n."""
    return s == sp_twist(s, n)


def sp_at_infinity(f: Polynomial, weights) -> FracPoly:
    """Spectrum at infinity of a weighted-homogeneous isolated singularity;
    coincides with the product formula in this case."""
    ws = as_weights(weights, len(f.variables))
    if not is_weighted_homogeneous(f, ws):
        raise NotWeightedHomogeneousError(
            "spectrum at infinity implemented only for weighted-homogeneous polynomials"
        )
    if not is_isolated(f):
        raise NonIsolatedSingularityError("singularity is not isolated")
    return sp_product_formula(ws)


# -- eigenvalue multisets ------------------------------------------------------


class EigenMultiset:
    """Finite multiset of unit-circle angles: residues in [0, 1) with
    positive integer multiplicities."""

    __slots__ = ("residues",)

    def __init__(self, residues=()):
        acc: dict = {}
        items = residues.items() if isinstance(residues, dict) else residues
        for r, mult in items:
            r = Fraction(r)
            if not (0 <= r < 1):
                raise ValueError(f"residue {r} outside [0, 1)")
            mult = int(mult)
            acc[r] = acc.get(r, 0) + mult
        for r, mult in acc.items():
            if mult <= 0:
                raise NegativeMultiplicityError(
                    f"residue {r} has non-positive multiplicity {mult}"
                )
        object.__setattr__(self, "residues", dict(acc))

    def __setattr__(self, name, value):
        raise AttributeError("EigenMultiset is immutable")

    def items(self):
        return [(r, self.residues[r]) for r in sorted(self.residues)]

    def total(self) -> int:
        return sum(self.residues.values())

    def __eq__(self, other):
        if not isinstance(other, EigenMultiset):
            return NotImplemented
        return self.residues == other.residues

    def __repr__(self):
        inner = ", ".join(f"{r}: {m}" for r, m in self.items())
        return f"EigenMultiset({{{inner}}})"


def eigenvalues_gamma_c(s: FracPoly) -> EigenMultiset:
    """Monodromy angles on nearby-cycle cohomology: t^a -> (-a) mod 1.

    Requires a genuine spectrum (all coefficients positive)."""
    acc: dict = {}
    for a, c in s.terms.items():
        if c < 0:
            raise NegativeMultiplicityError(f"coefficient {c} at exponent {a}")
        r = (-a) % 1
        acc[r] = acc.get(r, 0) + c
    return EigenMultiset(acc)


def eigenvalues_geometric(e: EigenMultiset) -> EigenMultiset:
    """Angle negation mod 1; converts between the two monodromy conventions.
    An involution."""
    acc: dict = {}
    for r, mult in e.residues.items():
        k = (-r) % 1
        acc[k] = acc.get(k, 0) + mult
    return EigenMultiset(acc)


def spectral_residues(s: FracPoly) -> EigenMultiset:
    """The multiset {a mod 1} over the spectrum terms, multiplicities summed."""
    acc: dict = {}
    for a, c in s.terms.items():
        if c < 0:
            raise NegativeMultiplicityError(f"coefficient {c} at exponent {a}")
        r = a % 1
        acc[r] = acc.get(r, 0) + c
    return EigenMultiset(acc)


# -- characteristic polynomial -------------------------------------------------

_CYCLOTOMIC: dict[int, list] = {}


def _cyclotomic(n: int) -> list:
    """Coefficient list of the n-th cyclotomic polynomial, by exact division
    of T^n - 1 by the product of the lower ones."""
    if n in _CYCLOTOMIC:
        return _CYCLOTOMIC[n]
    num = [0] * (n + 1)
    num[0] = -1
    num[n] = 1
    den = [1]
    for d in range(1, n):
        if n % d == 0:
            den = _u_mul(den, _cyclotomic(d))
    quo, rem = _u_divmod(num, den)
    assert not rem, f"cyclotomic division failed for n={n}"
    _CYCLOTOMIC[n] = quo
    return quo


def char_poly(e: EigenMultiset) -> Polynomial:
    """Characteristic polynomial over the integers of a finite-order operator
    with the given eigenvalue angles.

    The multiset must be Galois-stable: for each denominator v appearing, all
    residues u/v with gcd(u, v) = 1 must appear with one common multiplicity
    c_v.  The result is the product over v of the v-th cyclotomic polynomial
    to the power c_v, in the variable T.
    """
    groups: dict[int, dict[int, int]] = {}
    for r, mult in e.residues.items():
        groups.setdefault(r.denominator, {})[r.numerator] = mult
    coeffs = [1]
    for v in sorted(groups):
        present = groups[v]
        expected = [u for u in range(v) if math.gcd(u, v) == 1] or [0]
        missing = sorted(set(expected) - set(present))
        if missing:
            raise NotGaloisStableError(Fraction(missing[0], v))
        mults = {present[u] for u in expected}
        if len(mults) > 1:
            low = min(mults)
            offender = min(u for u in expected if present[u] == low)
            raise NotGaloisStableError(Fraction(offender, v))
        coeffs = _u_mul(coeffs, _u_pow(_cyclotomic(v), present[expected[0]]))
    return Polynomial(("T",), {(k,): c for k, c in enumerate(coeffs) if c})
