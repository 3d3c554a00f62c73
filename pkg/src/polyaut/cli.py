"""Command-line front end: ``polyaut <command> ...``."""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass

from .derivations import DEFAULT_BOUND, Derivation, NotLocallyNilpotentError, exp_lnd, nagata_derivation, nagata_map
from .fields import parse_field
from .ffperm import fiberwise_experiment, parity_experiment
from .fixedspace import eigenspace_basis, fixed_dimension_profile
from .gradings import solve_gradings
from .linearize import build_shift_linearization, commuting_diagonal
from .maps import PolyMap, compose, diagonal, parse_word
from .parsing import split_top_level
from .polynomial import PolynomialRing
from .verify import run_suite


@dataclass
class CommandResult:
    status: str  # "ok" or "error"
    text: str
    data: dict | None = None

    @property
    def exit_code(self) -> int:
        return 0 if self.status == "ok" else 1


def _ring(field, n):
    return PolynomialRing(field, n)


def _infer_n(text: str, sep: str, default: int = 3) -> int:
    stripped = text.strip()
    if stripped[:1] in "([" and stripped[-1:] in ")]":
        return len(split_top_level(stripped[1:-1], sep))
    return default


def _derivation(text: str, field, n: int | None) -> Derivation:
    if text.strip().lower() == "nagata":
        return nagata_derivation(field)
    ring = _ring(field, n or _infer_n(text, ";"))
    return Derivation.parse(text, ring)


def _map(text: str, field, n: int | None) -> PolyMap:
    """A map literal, a preset (N, 2N, L2N) or an automorphism word."""
    key = text.strip().upper()
    if key in {"N", "NAGATA"}:
        return nagata_map(1, field)
    if key == "2N":
        N = nagata_map(1, field)
        return compose(diagonal(N.ring, [2, 2, 2]), N)
    if key == "L2N":
        return compose(commuting_diagonal(2, field), nagata_map(1, field))
    if text.strip().startswith("("):
        return PolyMap.parse(text, _ring(field, n or _infer_n(text, ",")))
    ring = _ring(field, n or 3)
    presets = {"nagata": nagata_derivation(field)} if ring.n == 3 else {}
    return parse_word(text, ring, presets).realize(ring)


def cmd_exp(args) -> CommandResult:
    D = _derivation(args.derivation, args.field, args.n)
    F = exp_lnd(D, args.lam, args.bound)
    data = {"derivation": str(D), "lambda": args.lam, "map": [str(c) for c in F.components], "degree": F.degree()}
    return CommandResult("ok", str(F), data)


def cmd_gradings(args) -> CommandResult:
    D = _derivation(args.derivation, args.field, args.n)
    sol = solve_gradings(D)
    rows = [f"({','.join(str(x) for x in w)} | {k})" for w, k in sol.basis]
    text = "\n".join([f"dimension {sol.dimension}"] + rows)
    data = {
        "derivation": str(D),
        "dimension": sol.dimension,
        "basis": [{"weights": [str(x) for x in w], "degree": str(k)} for w, k in sol.basis],
    }
    return CommandResult("ok", text, data)


def cmd_shift(args) -> CommandResult:
    D = _derivation(args.derivation, args.field, None)
    L = PolyMap.parse(args.map, D.ring)
    report = build_shift_linearization(L, D, args.lam, args.bound)
    data = report.as_dict()
    if report.degenerate:
        text = f"degenerate: conjugation scalar c = 1, {L} commutes with exp(λD)"
    else:
        text = "\n".join(
            [
                f"c = {report.c}",
                f"mu = {report.mu}  (exp(-mu D) (L exp(lam D)) exp(mu D) = L as endomorphisms)",
                f"nu = {report.nu}  (exp(-nu D) o L o exp(lam D) o exp(nu D) = L as point maps)",
                f"verified: {report.verified}",
            ]
        )
    status = "ok" if report.degenerate or report.verified else "error"
    return CommandResult(status, text, data)


def cmd_fixed_space(args) -> CommandResult:
    F = _map(args.map, args.field, args.n)
    if args.profile is not None:
        profile = fixed_dimension_profile(F, args.profile)
        data = {"map": str(F), "profile": list(profile)}
        return CommandResult("ok", "profile " + " ".join(map(str, profile)), data)
    basis = eigenspace_basis(F, args.mu, args.degree)
    text = "\n".join([f"dimension {basis.dimension}"] + [str(p) for p in basis.basis])
    data = {
        "map": str(F),
        "mu": str(basis.mu),
        "degree": args.degree,
        "dimension": basis.dimension,
        "basis": [str(p) for p in basis.basis],
    }
    return CommandResult("ok", text, data)


def cmd_parity(args) -> CommandResult:
    if args.fiberwise:
        report = fiberwise_experiment(args.q, args.samples, args.seed, args.length, args.max_degree or 2)
    else:
        report = parity_experiment(args.q, args.n or 2, args.samples, args.seed, args.length, args.max_degree or 3)
    data = report.as_dict()
    lines = [f"GF({report.q})^{report.n}: {report.even_count} even, {report.odd_count} odd of {report.samples}"]
    if report.witnesses:
        first = report.witnesses[0]
        lines.append(f"first odd witness (sample {first['sample']}): {first['word']}")
    return CommandResult("ok", "\n".join(lines), data)


def cmd_verify(args) -> CommandResult:
    checks = run_suite(args.suite, args.seed)
    width = max(len(c.name) for c in checks)
    lines = [f"{'PASS' if c.ok else 'FAIL'}  {c.name:<{width}}  {c.seconds:6.2f}s  {c.detail}" for c in checks]
    passed = sum(c.ok for c in checks)
    lines.append(f"{passed}/{len(checks)} checks passed")
    data = {
        "suite": args.suite,
        "passed": passed,
        "total": len(checks),
        "checks": [{"name": c.name, "ok": c.ok, "detail": c.detail, "seconds": round(c.seconds, 3)} for c in checks],
    }
    return CommandResult("ok" if passed == len(checks) else "error", "\n".join(lines), data)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="polyaut", description="Exact polynomial automorphisms and derivations.")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit JSON")
    common.add_argument("--field", type=parse_field, default=parse_field("Q"), help="Q, GF(p), GF(4), GF(8), GF(9)")
    common.add_argument("--n", type=int, default=None, help="number of variables")
    common.add_argument("--seed", type=int, default=0)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("exp", parents=[common], help="exponential of a locally nilpotent derivation")
    p.add_argument("--derivation", required=True, help="'nagata' or a literal [e1; ...; en]")
    p.add_argument("--lambda", dest="lam", default="1")
    p.add_argument("--bound", type=int, default=DEFAULT_BOUND)
    p.set_defaults(func=cmd_exp)

    p = sub.add_parser("gradings", parents=[common], help="gradings making a derivation homogeneous")
    p.add_argument("--derivation", required=True)
    p.set_defaults(func=cmd_gradings)

    p = sub.add_parser("shift-linearize", parents=[common], help="conjugate L exp(lam D) to L")
    p.add_argument("--map", required=True, help="diagonal map literal, e.g. '(2*X, 2*Y, 2*Z)'")
    p.add_argument("--lambda", dest="lam", default="1")
    p.add_argument("--derivation", default="nagata")
    p.add_argument("--bound", type=int, default=DEFAULT_BOUND)
    p.set_defaults(func=cmd_shift)

    p = sub.add_parser("fixed-space", parents=[common], help="bounded-degree eigenspace of a map")
    p.add_argument("--map", required=True, help="map literal, word, or preset N / 2N / L2N")
    p.add_argument("--mu", default="1")
    p.add_argument("--degree", type=int, default=4)
    p.add_argument("--profile", type=int, default=None, metavar="DMAX")
    p.set_defaults(func=cmd_fixed_space)

    p = sub.add_parser("parity", parents=[common], help="parity of random tame bijections over GF(q)")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--samples", type=int, default=200)
    p.add_argument("--length", type=int, default=6)
    p.add_argument("--max-degree", type=int, default=None)
    p.add_argument("--fiberwise", action="store_true")
    p.set_defaults(func=cmd_parity)

    p = sub.add_parser("verify", parents=[common], help="run the identity suites")
    p.add_argument("suite", nargs="?", default="all")
    p.set_defaults(func=cmd_verify)
    return parser


def run(argv=None) -> tuple[CommandResult, bool]:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if hasattr(args, "lam"):
            args.lam = str(args.field.coerce(args.lam))
        result = args.func(args)
    except (ValueError, NotLocallyNilpotentError, ZeroDivisionError) as exc:
        result = CommandResult("error", f"error: {exc}", {"status": "error", "error": str(exc)})
    return result, args.json


def main(argv=None) -> int:
    result, as_json = run(argv)
    if as_json and result.data is not None:
        payload = result.data if "status" in result.data else {"status": result.status, **result.data}
        print(json.dumps(payload, indent=2))
    else:
        failed_to_run = result.data is not None and "error" in result.data
        print(result.text, file=sys.stderr if failed_to_run else sys.stdout)
    return result.exit_code


if __name__ == "__main__":
    sys.exit(main())
