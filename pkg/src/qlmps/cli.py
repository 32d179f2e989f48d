"""Command-line front end.

Exit status: 0 on success, 1 when a computation fails (condition violated,
unsupported observable form, resource cap, invalid density matrix), 2 on
input errors (unreadable or malformed files, incompatible dimensions).
"""

from __future__ import annotations

import argparse
import sys
from typing import Any, Callable, Sequence

import numpy as np

from . import io
from .conditions import DEFAULT_TOL, check_consistency, check_normalization, normalization_sums, trace_identity_sides
from .errors import (
    DimensionError,
    FormatError,
    ResourceError,
    SiteRangeError,
    UnsupportedFormError,
    ValidationError,
)
from .models import ghz_expectation_closed_form, ghz_family
from .mps import DEFAULT_CAP
from .state import (
    LocalObservable,
    evaluate_naive,
    evaluate_transfer,
    reduced_density_matrix,
    von_neumann_entropy,
)

DEFAULT_SEED = 20240101

PAULI_X = np.array([[0, 1], [1, 0]], dtype=np.complex128)
PAULI_Z = np.array([[1, 0], [0, -1]], dtype=np.complex128)


class CommandFailed(Exception):
    """Raised by a command whose computation ran but did not pass; carries the output."""

    def __init__(self, payload: Any):
        super().__init__("command failed")
        self.payload = payload


def _fmt(v: Any) -> str:
    if _is_complex(v):
        return f"{v[0]:.12g}{v[1]:+.12g}i"
    if isinstance(v, float):
        return f"{v:.12g}"
    return str(v)


def render_text(obj: Any, indent: int = 0) -> list[str]:
    """Indented ``key: value`` rendering used by ``--pretty``."""
    pad = "  " * indent
    lines: list[str] = []
    if isinstance(obj, dict):
        for key in sorted(obj):
            v = obj[key]
            if isinstance(v, (dict, list)) and not (isinstance(v, list) and _scalarish(v)):
                lines.append(f"{pad}{key}:")
                lines.extend(render_text(v, indent + 1))
            else:
                lines.append(f"{pad}{key}: {_fmt(v) if not isinstance(v, list) or _is_complex(v) else ', '.join(map(_fmt, v))}")
    elif isinstance(obj, list):
        for item in obj:
            if isinstance(item, (dict, list)) and not (isinstance(item, list) and _scalarish(item)):
                lines.append(f"{pad}-")
                lines.extend(render_text(item, indent + 1))
            else:
                lines.append(f"{pad}- {_fmt(item)}")
    else:
        lines.append(pad + _fmt(obj))
    return lines


def _is_complex(v: Any) -> bool:
    return isinstance(v, list) and len(v) == 2 and all(isinstance(x, float) for x in v)


def _scalarish(v: list) -> bool:
    return all(not isinstance(x, (dict, list)) for x in v)


def cmd_validate(args: argparse.Namespace) -> dict:
    family = io.load_family(args.family)
    reports = [check_normalization(family, args.tol), check_consistency(family, args.n_max, args.tol)]
    out = {"pass": all(r.passed for r in reports), "reports": [io.report_to_json(r) for r in reports]}
    if not out["pass"]:
        raise CommandFailed(out)
    return out


def cmd_expect(args: argparse.Namespace) -> dict:
    family = io.load_family(args.family)
    x = io.load_observable(args.observable)
    if args.method == "naive":
        return io.evaluation_to_json(evaluate_naive(family, x, args.cap), args.timing)
    if args.method == "transfer":
        return io.evaluation_to_json(evaluate_transfer(family, x), args.timing)
    transfer = evaluate_transfer(family, x)
    naive = evaluate_naive(family, x, args.cap)
    return {
        "naive": io.evaluation_to_json(naive, args.timing),
        "transfer": io.evaluation_to_json(transfer, args.timing),
        "discrepancy": abs(naive.value - transfer.value),
    }


def cmd_rho(args: argparse.Namespace) -> dict:
    family = io.load_family(args.family)
    return io.density_to_json(reduced_density_matrix(family, args.n, args.cap))


def cmd_entropy(args: argparse.Namespace) -> dict:
    family = io.load_family(args.family)
    rho = reduced_density_matrix(family, args.n, args.cap)
    return {"n_sites": args.n, "base": args.base, "entropy": von_neumann_entropy(rho, args.base)}


def cmd_identity_check(args: argparse.Namespace) -> dict:
    family = io.load_family(args.family)
    rng = np.random.default_rng(args.seed)
    total = args.n + args.k
    worst = 0.0
    for _ in range(args.samples):
        i = rng.integers(family.d, size=total).tolist()
        j = rng.integers(family.d, size=total).tolist()
        lhs, rhs = trace_identity_sides(family, args.n, args.k, i, j)
        worst = max(worst, abs(lhs - rhs) / max(1.0, abs(rhs)))
    out = {
        "check": "trace_identity",
        "n": args.n,
        "k": args.k,
        "samples": args.samples,
        "seed": args.seed,
        "max_deviation": worst,
        "tolerance": args.tol,
        "pass": worst <= args.tol,
    }
    if not out["pass"]:
        raise CommandFailed(out)
    return out


def demo_ghz(tol: float = DEFAULT_TOL, cap: int = DEFAULT_CAP, n_max: int = 4) -> dict:
    """Everything needed to reproduce the GHZ example in one JSON document."""
    family = ghz_family()
    s1, s2 = normalization_sums(family)
    reports = [check_normalization(family, tol), check_consistency(family, tol=tol)]
    expectations = []
    for label, op in (("Z", PAULI_Z), ("X", PAULI_X)):
        for n in range(1, n_max + 1):
            x = LocalObservable.product([op] * n)
            naive = evaluate_naive(family, x, cap).value
            transfer = evaluate_transfer(family, x).value
            expectations.append(
                {
                    "observable": label * n,
                    "naive": io.complex_to_json(naive),
                    "transfer": io.complex_to_json(transfer),
                    "closed_form": io.complex_to_json(ghz_expectation_closed_form([op] * n)),
                }
            )
    rhos = [io.density_to_json(reduced_density_matrix(family, n, cap)) for n in range(2, n_max + 1)]
    entropies = []
    for n in range(1, 7):
        rho = reduced_density_matrix(family, n, cap)
        entropies.append(
            {"n_sites": n, "natural": von_neumann_entropy(rho, "natural"), "two": von_neumann_entropy(rho, "two")}
        )
    return {
        "family": io.family_to_json(family),
        "normalization_sums": {"s1": s1, "s2": s2},
        "validation": {"pass": all(r.passed for r in reports), "reports": [io.report_to_json(r) for r in reports]},
        "expectations": expectations,
        "rho": rhos,
        "entropy": entropies,
    }


def cmd_demo(args: argparse.Namespace) -> dict:
    return demo_ghz(args.tol, args.cap)


def _global_options(parser: argparse.ArgumentParser, suppress: bool) -> None:
    def default(v: Any) -> Any:
        return argparse.SUPPRESS if suppress else v

    parser.add_argument("--tol", type=float, default=default(DEFAULT_TOL), help="tolerance for pass/fail checks")
    parser.add_argument("--cap", type=int, default=default(DEFAULT_CAP), help="maximum number of statevector amplitudes")
    parser.add_argument("--pretty", action="store_true", default=default(False), help="human-readable text output")
    parser.add_argument("--timing", action="store_true", default=default(False), help="include elapsed_ms in reports")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="qlmps", description="MPS families on the infinite spin chain.")
    _global_options(parser, suppress=False)
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name: str, func: Callable, help: str) -> argparse.ArgumentParser:
        p = sub.add_parser(name, help=help)
        _global_options(p, suppress=True)
        p.set_defaults(func=func)
        return p

    p = add("validate", cmd_validate, "check the normalization and consistency conditions")
    p.add_argument("family")
    p.add_argument("--n-max", type=int, default=None, help="last site n of the consistency check")

    p = add("expect", cmd_expect, "evaluate the state on an observable")
    p.add_argument("family")
    p.add_argument("observable")
    p.add_argument("--method", choices=("naive", "transfer", "both"), default="both")

    p = add("rho", cmd_rho, "reduced density matrix on sites 1..N")
    p.add_argument("family")
    p.add_argument("--n", type=int, required=True)

    p = add("entropy", cmd_entropy, "von Neumann entropy of the reduced density matrix")
    p.add_argument("family")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--base", choices=("natural", "two"), default="natural")

    p = add("identity-check", cmd_identity_check, "sample the two-trace splitting identity")
    p.add_argument("family")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--samples", type=int, default=100)
    p.add_argument("--seed", type=int, default=DEFAULT_SEED)

    p = add("demo", cmd_demo, "built-in demonstrations")
    p.add_argument("model", choices=("ghz",))
    return parser


def _emit(payload: Any, pretty: bool) -> None:
    text = "\n".join(render_text(payload)) if pretty else io.dumps(payload)
    sys.stdout.write(text + "\n")


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command in ("rho", "entropy") and args.n < 1 or args.command == "identity-check" and (
        args.n < 1 or args.k < 1 or args.samples < 0
    ):
        parser.error("--n, --k must be positive and --samples non-negative")
    try:
        payload = args.func(args)
    except CommandFailed as exc:
        _emit(exc.payload, args.pretty)
        return 1
    except (FormatError, DimensionError, SiteRangeError) as exc:
        print(f"qlmps: error: {exc}", file=sys.stderr)
        return 2
    except (ResourceError, UnsupportedFormError, ValidationError) as exc:
        print(f"qlmps: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1
    _emit(payload, args.pretty)
    return 0


if __name__ == "__main__":
    sys.exit(main())
