"""Command-line front end.

Three subcommands: ``sp`` runs the polynomial-to-spectrum pipeline (both
routes, compared exactly), ``nearby`` evaluates a degeneration model file,
``check`` runs the built-in cross-validation battery.  Reports go to stdout,
human-readable by default, machine-readable with ``--json``; diagnostics go
to stderr.

Exit codes: 0 success; 1 a check failed; 2 input or validation error;
3 internal consistency failure (two routes disagreed: a bug, never user
error).  Identical inputs produce byte-identical ``--json`` output.
"""

import argparse
import json
import sys
from dataclasses import dataclass
from fractions import Fraction

from . import checks
from .errors import (
    ConsistencyError,
    NonIsolatedSingularityError,
    NotWeightedHomogeneousError,
    SingspecError,
)
from .milnor import is_isolated, milnor_basis, milnor_number
from .motivic import (
    euler_specialization,
    load_model,
    nearby_fiber_class,
    sp_prime_of_class,
    sp_prime_reduced,
)
from .parse import parse_polynomial
from .poly import as_weights, infer_weights, is_weighted_homogeneous
from .spectrum import (
    char_poly,
    check_symmetry,
    eigenvalues_gamma_c,
    eigenvalues_geometric,
    sp_from_basis,
    sp_product_formula,
    sp_twist,
)


@dataclass
class Report:
    """What a subcommand computed, with JSON-primitive values only.

    All rationals are strings "u/v" so no consumer is tempted to coerce to
    float; to_json/from_json round-trip to an equal Report.
    """

    kind: str
    data: dict

    def to_json(self) -> str:
        return json.dumps({"data": self.data, "kind": self.kind}, sort_keys=True, indent=2) + "\n"

    @classmethod
    def from_json(cls, text: str) -> "Report":
        obj = json.loads(text)
        return cls(kind=obj["kind"], data=obj["data"])

    def render_text(self) -> str:
        if self.kind == "check":
            lines = [
                f"{'PASS' if c['passed'] else 'FAIL'} {c['name']}: {c['detail']}"
                for c in self.data["checks"]
            ]
            good = sum(1 for c in self.data["checks"] if c["passed"])
            total = len(self.data["checks"])
            lines.append(
                f"all checks passed ({good}/{total})"
                if self.data["passed"]
                else f"FAILED ({good}/{total} passed)"
            )
            return "\n".join(lines) + "\n"
        lines = []
        for key, value in self.data.items():
            if isinstance(value, bool):
                value = "true" if value else "false"
            elif isinstance(value, dict):
                value = ", ".join(
                    f"{k}:{value[k]}" for k in sorted(value, key=Fraction)
                ) or "(empty)"
            elif key == "class":
                value = ", ".join(
                    f"({p},{q},{f}):{m}" for p, q, f, m in value
                ) or "0"
            elif isinstance(value, list):
                value = ", ".join(str(v) for v in value)
            lines.append(f"{key}: {value}")
        return "\n".join(lines) + "\n"


def _split_names(raw: str) -> tuple[str, ...]:
    names = tuple(v.strip() for v in raw.split(","))
    for v in names:
        if not v.isidentifier() or not v.isascii():
            raise SingspecError(f"bad variable name {v!r}")
    if len(set(names)) != len(names):
        raise SingspecError(f"duplicate variable names in {raw!r}")
    return names


def _parse_weights(raw: str, nvars: int):
    parts = [v.strip() for v in raw.split(",")]
    try:
        values = [Fraction(v) for v in parts]
    except (ValueError, ZeroDivisionError) as exc:
        raise SingspecError(f"bad weight list {raw!r}: {exc}") from None
    return as_weights(values, nvars)


def _residue_map(multiset) -> dict:
    return {str(r): m for r, m in multiset.items()}


def _run_sp(args) -> Report:
    variables = _split_names(args.vars)
    f = parse_polynomial(args.expr, variables)
    if not f:
        raise NonIsolatedSingularityError("the zero polynomial is singular everywhere")
    if not is_isolated(f):
        raise NonIsolatedSingularityError(
            f"{args.expr!r} does not define an isolated singularity at the origin"
        )
    if args.weights is not None:
        ws = _parse_weights(args.weights, len(variables))
        if not is_weighted_homogeneous(f, ws):
            raise NotWeightedHomogeneousError(
                f"{args.expr!r} is not weighted-homogeneous for weights {args.weights}"
            )
    else:
        ws = infer_weights(f)
    basis = milnor_basis(f, ws)
    mu = milnor_number(f, ws)
    s_basis = sp_from_basis(basis)
    s_formula = sp_product_formula(ws)
    if s_basis != s_formula:
        raise ConsistencyError(
            f"spectrum routes disagree: basis gave {s_basis}, formula gave {s_formula}"
        )
    eig_c = eigenvalues_gamma_c(s_basis)
    eig_geo = eigenvalues_geometric(eig_c)
    # both conventions give the same char poly: Galois stability is closed
    # under angle negation
    return Report(
        "sp",
        {
            "input": args.expr,
            "variables": list(variables),
            "weights": [str(w) for w in ws],
            "dimension": len(variables),
            "mu": mu,
            "spectrum": str(s_basis),
            "symmetric": check_symmetry(s_basis, len(variables)),
            "eigenvalues_gamma_c": _residue_map(eig_c),
            "eigenvalues_geometric": _residue_map(eig_geo),
            "char_poly": str(char_poly(eig_c)),
        },
    )


def _run_nearby(args) -> Report:
    model = load_model(args.model)
    cls = nearby_fiber_class(model, args.variant)
    n = args.dim if args.dim is not None else model.n
    if args.variant == "local":
        # Milnor-fiber reading: drop H^0 and unfold the alternating signs
        sp_p = sp_prime_reduced(cls, n)
        normalization = "reduced-signed"
    else:
        sp_p = sp_prime_of_class(cls)
        normalization = "raw"
    return Report(
        "nearby",
        {
            "model": args.model,
            "variant": args.variant,
            "dimension": n,
            "class": [[p, q, str(f), m] for (p, q, f), m in cls.items()],
            "euler": euler_specialization(cls),
            "normalization": normalization,
            "sp_prime": str(sp_p),
            "sp": str(sp_twist(sp_p, n)),
        },
    )


def _run_check(args) -> Report:
    results = checks.run_all()
    return Report(
        "check",
        {
            "checks": [
                {"name": r.name, "passed": r.passed, "detail": r.detail}
                for r in results
            ],
            "passed": all(r.passed for r in results),
            "corpus_cases": len(checks.build_corpus()),
        },
    )


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="singspec",
        description="exact spectra, monodromy data, and nearby-fiber classes "
        "for weighted-homogeneous isolated singularities",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("sp", help="spectrum of a polynomial singularity")
    sp.add_argument("expr", help="polynomial, e.g. \"x^2 + y^3\"")
    sp.add_argument(
        "--vars",
        required=True,
        help="comma-separated variable names; fixes exponent order",
    )
    sp.add_argument(
        "--weights",
        help="comma-separated rationals like 1/2,1/3; inferred when omitted",
    )
    sp.add_argument("--json", action="store_true", help="machine-readable output")

    nb = sub.add_parser("nearby", help="evaluate a degeneration model file")
    nb.add_argument("model", help="path to a JSON model file")
    nb.add_argument(
        "--variant",
        choices=("total", "open", "local"),
        default="total",
        help="total: strata meeting the special fiber; open: strata inside it; "
        "local: total over a caller-restricted stratum list, reported as a "
        "Milnor-fiber spectrum",
    )
    nb.add_argument(
        "--dim",
        type=int,
        default=None,
        help="ambient fiber dimension for the spectrum twist (default: n from the file)",
    )
    nb.add_argument("--json", action="store_true", help="machine-readable output")

    ck = sub.add_parser("check", help="run the built-in cross-validation battery")
    ck.add_argument("--json", action="store_true", help="machine-readable output")
    return parser


_RUNNERS = {"sp": _run_sp, "nearby": _run_nearby, "check": _run_check}


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        report = _RUNNERS[args.command](args)
    except ConsistencyError as exc:
        print(f"internal consistency failure: {exc}", file=sys.stderr)
        return 3
    except SingspecError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    sys.stdout.write(report.to_json() if args.json else report.render_text())
    if report.kind == "check" and not report.data["passed"]:
        return 1
    return 0
