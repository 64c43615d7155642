"""Cross-validation battery behind ``singspec check``.

Every computation that matters is recomputed here by at least two routes and
compared exactly.  The corpus is the Brieskorn-Pham grid (sums of pure powers
x_i^{a_i}, 2 <= a_i <= 6, up to four variables, exponent multisets) plus a
handful of genuinely mixed weighted-homogeneous singularities whose Gröbner
bases are not monomial.  All randomness is seeded; output is deterministic.
"""

import itertools
import random
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .fracpoly import FracPoly
from .milnor import MilnorBasis, milnor_basis
from .motivic import (
    EquivClass,
    SncComponent,
    SncModel,
    Stratum,
    VERTICAL,
    component_count_cstar,
    covering_degree,
    euler_specialization,
    nearby_fiber_class,
    sp_of_class,
    sp_prime_of_class,
    sp_prime_reduced,
)
from .parse import parse_polynomial
from .poly import Polynomial, as_weights
from .spectrum import (
    char_poly,
    check_symmetry,
    eigenvalues_gamma_c,
    eigenvalues_geometric,
    sp_from_basis,
    sp_product_formula,
    sp_twist,
    spectral_residues,
)


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str


@dataclass(frozen=True)
class CorpusCase:
    name: str
    f: Polynomial
    weights: tuple
    basis: MilnorBasis
    mu_closed: Fraction
    s_basis: FracPoly
    s_formula: FracPoly


_VARS = ("x", "y", "z", "w")


def brieskorn_pham_exponents():
    """Exponent multisets of the grid, smallest cases first."""
    for n in range(1, 5):
        yield from itertools.combinations_with_replacement(range(2, 7), n)


def _bp_polynomial(exps) -> Polynomial:
    variables = _VARS[: len(exps)]
    return Polynomial(
        variables,
        {
            tuple(a if j == i else 0 for j in range(len(exps))): 1
            for i, a in enumerate(exps)
        },
    )


_EXTRA_CASES = (
    ("x^2*y + y^4", ("x", "y"), ("3/8", "1/4")),
    ("x^3 + x*y^3", ("x", "y"), ("1/3", "2/9")),
    ("x^3*y + y^5", ("x", "y"), ("4/15", "1/5")),
    ("x^2*y + y^3 + z^3", ("x", "y", "z"), ("1/3", "1/3", "1/3")),
)


def _make_case(name, f, weights) -> CorpusCase:
    ws = as_weights(weights, len(f.variables))
    basis = milnor_basis(f, ws)
    mu_closed = Fraction(1)
    for w in ws:
        mu_closed *= 1 / w - 1
    return CorpusCase(
        name=name,
        f=f,
        weights=ws,
        basis=basis,
        mu_closed=mu_closed,
        s_basis=sp_from_basis(basis),
        s_formula=sp_product_formula(ws),
    )


@lru_cache(maxsize=1)
def build_corpus() -> tuple[CorpusCase, ...]:
    cases = []
    for exps in brieskorn_pham_exponents():
        f = _bp_polynomial(exps)
        weights = tuple(Fraction(1, a) for a in exps)
        cases.append(_make_case("+".join(f"{v}^{a}" for v, a in zip(_VARS, exps)), f, weights))
    for text, variables, weights in _EXTRA_CASES:
        cases.append(_make_case(text, parse_polynomial(text, variables), weights))
    return tuple(cases)


def bp_case_count() -> int:
    return sum(1 for _ in brieskorn_pham_exponents())


# -- fixture models -----------------------------------------------------------


def semistable_i2_model() -> SncModel:
    """Two lines of multiplicity one crossing in two points (a cycle of two
    rational curves): the special fiber of a semistable elliptic degeneration."""
    # each punctured line is a C*: H^1_c one class of weight 0 (sign -1),
    # H^2_c the Tate class; the two crossing points carry trivial covers
    cstar = EquivClass({(1, 1, 0): 1, (0, 0, 0): -1})
    points = EquivClass({(0, 0, 0): 2})
    return SncModel(
        n=1,
        components=(
            SncComponent("V1", 1, VERTICAL),
            SncComponent("V2", 1, VERTICAL),
        ),
        strata=(
            Stratum(("V1",), cstar),
            Stratum(("V2",), cstar),
            Stratum(("V1", "V2"), points),
        ),
    )


def cusp_resolution_model() -> SncModel:
    """Embedded resolution of the plane cusp x^2 + y^3 over the origin.

    Exceptional curves E1, E2, E3 with multiplicities 2, 3, 6 and the strict
    transform S with multiplicity 1; E3 meets the other three.  Cover classes
    are spelled out per stratum, angle-decomposed, compact-support signs
    folded in:

    * over E1° and E2° (affine lines) the covers split into 2 resp. 3 lines
      permuted cyclically, so H^2_c carries the full character set;
    * over E3° (a thrice-punctured line) the cover w^6 = z^2 (z-1)^3 is
      connected of Euler characteristic -6; its H^1_c has a five-dimensional
      weight-0 part (boundary points minus the component class) and a
      weight-1 part from the genus-1 compactification whose holomorphic form
      z (z-1)^2 dz / w^5 sits at angle 1/6;
    * pair strata are gcd-many points permuted transitively.
    """
    half = Fraction(1, 2)
    third = Fraction(1, 3)
    e1 = EquivClass({(1, 1, 0): 1, (1, 1, half): 1})
    e2 = EquivClass({(1, 1, 0): 1, (1, 1, third): 1, (1, 1, 2 * third): 1})
    e3 = EquivClass(
        {
            (1, 1, 0): 1,
            (1, 0, Fraction(1, 6)): -1,
            (0, 1, Fraction(5, 6)): -1,
            (0, 0, 0): -2,
            (0, 0, half): -1,
            (0, 0, third): -1,
            (0, 0, 2 * third): -1,
        }
    )
    e1_e3 = EquivClass({(0, 0, 0): 1, (0, 0, half): 1})
    e2_e3 = EquivClass({(0, 0, 0): 1, (0, 0, third): 1, (0, 0, 2 * third): 1})
    e3_s = EquivClass({(0, 0, 0): 1})
    return SncModel(
        n=2,
        components=(
            SncComponent("E1", 2, VERTICAL),
            SncComponent("E2", 3, VERTICAL),
            SncComponent("E3", 6, VERTICAL),
            SncComponent("S", 1, VERTICAL),
        ),
        strata=(
            Stratum(("E1",), e1),
            Stratum(("E2",), e2),
            Stratum(("E3",), e3),
            Stratum(("E1", "E3"), e1_e3),
            Stratum(("E2", "E3"), e2_e3),
            Stratum(("E3", "S"), e3_s),
        ),
    )


# -- random classes (criterion: the two spectrum functionals agree) ------------


def random_class(rng: random.Random) -> EquivClass:
    entries = []
    for _ in range(rng.randint(1, 6)):
        p = rng.randint(-3, 4)
        q = rng.randint(-3, 4)
        d = rng.randint(1, 12)
        f = Fraction(rng.randrange(0, d), d)
        m = rng.choice([m for m in range(-5, 6) if m])
        entries.append(((p, q, f), m))
    return EquivClass(entries)


# -- the checks ----------------------------------------------------------------


def check_bp_dual_route() -> CheckResult:
    bad = [c.name for c in build_corpus() if c.s_basis != c.s_formula]
    count = bp_case_count()
    if bad:
        return CheckResult("dual-route-equality", False, f"routes disagree: {bad[:5]}")
    return CheckResult(
        "dual-route-equality",
        True,
        f"basis route == product formula on {count} grid cases + {len(_EXTRA_CASES)} mixed",
    )


def check_bp_basis_box() -> CheckResult:
    """Independent oracle for the grid: the Jacobian ideal of a sum of pure
    powers is monomial, so the standard monomials are exactly the box with
    exponent_i <= a_i - 2."""
    for exps in brieskorn_pham_exponents():
        f = _bp_polynomial(exps)
        basis = milnor_basis(f, tuple(Fraction(1, a) for a in exps))
        box = set(itertools.product(*(range(a - 1) for a in exps)))
        if set(basis.monomials) != box or len(basis) != _prod(a - 1 for a in exps):
            return CheckResult("grid-basis-box", False, f"box mismatch at {exps}")
    return CheckResult(
        "grid-basis-box", True, f"standard monomials match the closed-form box on {bp_case_count()} cases"
    )


def _prod(xs) -> int:
    out = 1
    for x in xs:
        out *= x
    return out


def check_cusp_benchmark() -> CheckResult:
    f = parse_polynomial("x^2 + y^3", ("x", "y"))
    ws = as_weights(("1/2", "1/3"))
    basis = milnor_basis(f, ws)
    expected = FracPoly({Fraction(5, 6): 1, Fraction(7, 6): 1})
    ok = (
        basis.monomials == ((0, 0), (0, 1))
        and sp_from_basis(basis) == expected
        and sp_product_formula(ws) == expected
        and str(expected) == "t^(5/6) + t^(7/6)"
    )
    return CheckResult(
        "cusp-benchmark",
        ok,
        "x^2 + y^3: basis {1, y}, both routes give t^(5/6) + t^(7/6)"
        if ok
        else "cusp values drifted",
    )


def check_symmetry_all() -> CheckResult:
    bad = [
        c.name
        for c in build_corpus()
        if not check_symmetry(c.s_basis, len(c.f.variables))
    ]
    if bad:
        return CheckResult("spectrum-symmetry", False, f"not symmetric: {bad[:5]}")
    return CheckResult(
        "spectrum-symmetry", True, f"s == t^n iota(s) on all {len(build_corpus())} corpus cases"
    )


def check_mu_counts() -> CheckResult:
    for c in build_corpus():
        if c.mu_closed.denominator != 1:
            return CheckResult("mu-counts", False, f"{c.name}: weight product not integral")
        mu = c.mu_closed.numerator
        if c.s_basis.coefficient_sum() != mu or len(c.basis) != mu:
            return CheckResult("mu-counts", False, f"{c.name}: counts disagree")
        if c.s_formula.coefficient_sum() != mu:
            return CheckResult("mu-counts", False, f"{c.name}: formula sum disagrees")
    return CheckResult(
        "mu-counts",
        True,
        "coefficient sum == weight product == standard monomial count on every case",
    )


def check_monodromy_conventions() -> CheckResult:
    for c in build_corpus():
        eig = eigenvalues_gamma_c(c.s_basis)
        geo = eigenvalues_geometric(eig)
        if geo != spectral_residues(c.s_basis):
            return CheckResult(
                "monodromy-conventions", False, f"{c.name}: convention triangle broken"
            )
        if eigenvalues_geometric(geo) != eig:
            return CheckResult(
                "monodromy-conventions", False, f"{c.name}: negation not involutive"
            )
        cp = char_poly(eig)
        mu = c.mu_closed.numerator
        if cp.total_degree() != mu:
            return CheckResult(
                "monodromy-conventions", False, f"{c.name}: char poly degree != mu"
            )
        if any(v.denominator != 1 for v in cp.terms.values()):
            return CheckResult(
                "monodromy-conventions", False, f"{c.name}: non-integer coefficient"
            )
    return CheckResult(
        "monodromy-conventions",
        True,
        "angle negation closes the convention triangle; char polys integral of degree mu",
    )


def check_semistable_fixture() -> CheckResult:
    model = semistable_i2_model()
    total = nearby_fiber_class(model, "total")
    ok = total == EquivClass.zero() and euler_specialization(total) == 0
    ok = ok and nearby_fiber_class(model, "open") == EquivClass.zero()
    return CheckResult(
        "semistable-fixture",
        ok,
        "two-line cycle: nearby class 0, Euler number 0" if ok else "nonzero class",
    )


def check_cusp_fixture() -> CheckResult:
    model = cusp_resolution_model()
    cls = nearby_fiber_class(model, "local")
    expected_cls = EquivClass(
        {(0, 0, 0): 1, (1, 0, Fraction(1, 6)): -1, (0, 1, Fraction(5, 6)): -1}
    )
    spectrum = sp_prime_reduced(cls, model.n)
    expected_sp = FracPoly({Fraction(5, 6): 1, Fraction(7, 6): 1})
    euler = euler_specialization(cls)
    ok = (
        cls == expected_cls
        and spectrum == expected_sp
        and sp_twist(spectrum, model.n) == expected_sp
        and euler == -1
        and euler == 2 + 3 - 6
    )
    return CheckResult(
        "cusp-fixture",
        ok,
        "resolution model gives t^(5/6) + t^(7/6) and Euler -1 = 2 + 3 - 6"
        if ok
        else "cusp model evaluation drifted",
    )


_GCD_TABLE = (
    # (stratum multiplicities, adjacent multiplicity, degree, components)
    ((6,), 4, 6, 2),
    ((6,), 1, 6, 1),
    ((2, 4), 3, 2, 1),
    ((12, 18), 8, 6, 2),
    ((5, 10, 15), 20, 5, 5),
    ((7,), 7, 7, 7),
    ((9, 6), 15, 3, 3),
    ((8, 12), 10, 4, 2),
    ((30, 42), 70, 6, 2),
    ((16, 24), 40, 8, 8),
)


def check_gcd_table() -> CheckResult:
    for mults, adj, degree, comps in _GCD_TABLE:
        names = tuple(f"c{i}" for i in range(len(mults)))
        model = SncModel(
            n=1,
            components=tuple(
                SncComponent(name, m, VERTICAL) for name, m in zip(names, mults)
            )
            + (SncComponent("adj", adj, VERTICAL),),
            strata=(),
        )
        if covering_degree(model, names) != degree:
            return CheckResult("gcd-table", False, f"degree wrong for {mults}")
        if component_count_cstar(model, names, "adj") != comps:
            return CheckResult("gcd-table", False, f"component count wrong for {mults} + {adj}")
    return CheckResult(
        "gcd-table", True, f"cover degree and C*-component count on {len(_GCD_TABLE)} tuples"
    )


def check_class_functionals() -> CheckResult:
    rng = random.Random(90577)
    trials = 1000
    for _ in range(trials):
        c = random_class(rng)
        n = rng.randint(0, 4)
        via_twist = sp_twist(sp_prime_of_class(c), n)
        direct = sp_of_class(c, n)
        if via_twist != direct:
            return CheckResult(
                "class-functional-consistency",
                False,
                f"functionals disagree on {c!r} with n={n}",
            )
    return CheckResult(
        "class-functional-consistency",
        True,
        f"twisted functional == interval functional on {trials} random classes",
    )


def run_all() -> list[CheckResult]:
    return [
        check_bp_dual_route(),
        check_bp_basis_box(),
        check_cusp_benchmark(),
        check_symmetry_all(),
        check_mu_counts(),
        check_monodromy_conventions(),
        check_semistable_fixture(),
        check_cusp_fixture(),
        check_gcd_table(),
        check_class_functionals(),
    ]
