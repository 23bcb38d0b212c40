"""Command-line front end.

Every subcommand prints one JSON report document to stdout with the stable
shape {"command", "inputs", "results", "status"} and deterministic key
order; a human-readable summary goes to stderr when it is a terminal.
Exit codes: 0 pass, 1 mathematical check failure (the report carries a
witness), 2 usage or parse errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from itertools import product

from . import wedge_solver
from .algebra import ExtForm
from .dsl import DslError, load_form_file, print_form
from .randgen import random_rank_p_two_form, rng_for
from .symbolic import (
    DiffForm,
    classify_theorem_sets,
    eval_at,
    example_catalog,
    lee_solve,
    lee_verify,
)


class CliError(Exception):
    """Usage-level error (exit code 2)."""


def _scalar_str(c) -> str:
    if isinstance(c, float):
        return repr(c)
    return str(Fraction(c))


def _ext_form_json(f: ExtForm):
    return [{"index": list(idx), "coeff": _scalar_str(c)} for idx, c in f.terms()]


def _load_ref(ref: str):
    """Resolve 'file.form#name' to (coords, DiffForm)."""
    if "#" not in ref:
        raise CliError(f"form reference {ref!r} must look like file.form#name")
    path, name = ref.rsplit("#", 1)
    try:
        ff = load_form_file(path)
    except OSError as e:
        raise CliError(f"cannot read {path!r}: {e}") from None
    if name not in ff.forms:
        raise CliError(f"no form named {name!r} in {path!r} "
                       f"(available: {', '.join(sorted(ff.forms)) or 'none'})")
    return ff.coords, ff.forms[name]


def _as_constant(form: DiffForm) -> ExtForm:
    if any(not c.is_constant() for c in form.coeffs.values()):
        raise CliError("form has non-constant coefficients; pass --point to evaluate")
    origin = tuple(Fraction(0) for _ in form.coords)
    return eval_at(form, origin)


def _parse_point(spec: str, coords) -> tuple[Fraction, ...]:
    values = {}
    for piece in spec.split(","):
        piece = piece.strip()
        if not piece:
            continue
        if "=" not in piece:
            raise CliError(f"bad point component {piece!r}, expected coord=value")
        name, val = piece.split("=", 1)
        name = name.strip()
        if name not in coords:
            raise CliError(f"unknown coordinate {name!r}")
        try:
            values[name] = Fraction(val.strip())
        except ValueError:
            raise CliError(f"bad rational value {val!r}") from None
    missing = [c for c in coords if c not in values]
    if missing:
        raise CliError(f"point is missing coordinates: {', '.join(missing)}")
    return tuple(values[c] for c in coords)


def _pole_coords(forms, coords) -> set[str]:
    """Coordinates carrying a negative Laurent exponent in any given form."""
    poles = set()
    for form in forms:
        for se in form.coeffs.values():
            for (mono, _), _c in se.terms.items():
                for name, e in zip(coords, mono):
                    if e < 0:
                        poles.add(name)
    return poles


def _axis(lo: Fraction, hi: Fraction, count: int) -> list[Fraction]:
    if count <= 1:
        return [(lo + hi) / 2]
    step = (hi - lo) / (count - 1)
    return [lo + i * step for i in range(count)]


def _build_grid(specs, coords, forms) -> list[tuple[Fraction, ...]]:
    """Grid from 'coord=lo:hi:count' specs; defaults to 3 points per
    coordinate in [-1, 1], shifted to [1/2, 3/2] off Laurent poles."""
    poles = _pole_coords(forms, coords)
    axes = {}
    for spec in specs or []:
        if "=" not in spec:
            raise CliError(f"bad grid spec {spec!r}, expected coord=lo:hi:count")
        name, rng = spec.split("=", 1)
        name = name.strip()
        if name not in coords:
            raise CliError(f"unknown coordinate {name!r} in grid spec")
        parts = rng.split(":")
        if len(parts) != 3:
            raise CliError(f"bad grid spec {spec!r}, expected coord=lo:hi:count")
        try:
            lo, hi, count = Fraction(parts[0]), Fraction(parts[1]), int(parts[2])
        except ValueError:
            raise CliError(f"bad grid spec {spec!r}") from None
        if count < 1:
            raise CliError("grid count must be >= 1")
        axes[name] = _axis(lo, hi, count)
    for c in coords:
        if c not in axes:
            if c in poles:
                axes[c] = _axis(Fraction(1, 2), Fraction(3, 2), 3)
            else:
                axes[c] = _axis(Fraction(-1), Fraction(1), 3)
    return [tuple(combo) for combo in product(*(axes[c] for c in coords))]


# ---------------------------------------------------------------------------
# subcommands

def _cmd_rank(args) -> dict:
    coords, form = _load_ref(args.form)
    if form.degree != 2:
        raise CliError("rank expects a 2-form")
    if args.point:
        point = _parse_point(args.point, coords)
        omega = eval_at(form, point)
        inputs = {"form": args.form, "point": [_scalar_str(x) for x in point]}
    else:
        omega = _as_constant(form)
        inputs = {"form": args.form}
    p = wedge_solver.rank2(omega)
    results = {"rank": p}
    if omega.is_zero():
        results["kernel"] = "whole space"
    else:
        ker = wedge_solver.kernel2(omega)
        results["kernel_dim"] = ker.dim
        results["kernel_basis"] = [[_scalar_str(c) for c in v.components]
                                   for v in ker.basis]
    return {"command": "rank", "inputs": inputs, "results": results,
            "status": "pass"}


def _cmd_solve(args) -> dict:
    coords_o, omega_form = _load_ref(args.omega)
    coords_k, kappa_form = _load_ref(args.kappa)
    if coords_o != coords_k:
        raise CliError("omega and kappa must share a coordinate list")
    omega = _as_constant(omega_form)
    kappa = _as_constant(kappa_form)
    particular, kernel = wedge_solver.solve_wedge(omega, kappa)
    results = {
        "solvable": particular is not None,
        "particular": _ext_form_json(particular) if particular is not None else None,
        "kernel_dim": len(kernel),
        "kernel_basis": [_ext_form_json(b) for b in kernel],
    }
    status = "pass" if particular is not None else "fail"
    return {"command": "solve",
            "inputs": {"omega": args.omega, "kappa": args.kappa},
            "results": results, "status": status}


def _cmd_lee(args) -> dict:
    coords, omega = _load_ref(args.omega)
    if omega.degree != 2:
        raise CliError("lee expects a 2-form omega")
    inputs = {"omega": args.omega}
    if args.beta:
        coords_b, beta = _load_ref(args.beta)
        if coords_b != coords:
            raise CliError("omega and beta must share a coordinate list")
        inputs["beta"] = args.beta
        ver = lee_verify(omega, beta)
        results = {
            "residual": print_form(ver.residual),
            "holds": ver.holds,
            "d_beta": print_form(ver.d_beta),
            "dbeta_wedge_omega": print_form(ver.dbeta_wedge_omega),
        }
        return {"command": "lee", "inputs": inputs, "results": results,
                "status": "pass" if ver.holds else "fail"}
    grid = _build_grid(args.grid, coords, [omega])
    inputs["grid_points"] = len(grid)
    res = lee_solve(omega, grid)
    results = {
        "consistent": res.consistent,
        "points": [{
            "point": [_scalar_str(x) for x in r.point],
            "solvable": r.beta is not None,
            "beta": _ext_form_json(r.beta) if r.beta is not None else None,
            "kernel_dim": r.kernel_dim,
            "rank_omega": r.rank_omega,
        } for r in res.points],
    }
    return {"command": "lee", "inputs": inputs, "results": results,
            "status": "pass" if res.consistent else "fail"}


def _cmd_classify(args) -> dict:
    coords, omega = _load_ref(args.omega)
    coords_b, beta = _load_ref(args.beta)
    if coords != coords_b:
        raise CliError("omega and beta must share a coordinate list")
    grid = _build_grid(args.grid, coords, [omega, beta])
    try:
        rows, verdict = classify_theorem_sets(omega, beta, grid)
    except ValueError as e:
        return {"command": "classify",
                "inputs": {"omega": args.omega, "beta": args.beta},
                "results": {"error": str(e)}, "status": "fail"}
    results = {
        "points": [{
            "point": [_scalar_str(x) for x in r.point],
            "r_omega": r.r_omega, "in_A": r.in_A, "in_B": r.in_B,
            "in_C": r.in_C, "d_beta_rank": r.d_beta_rank,
        } for r in rows],
        "verdict": {
            "a_points": verdict.a_points, "b_points": verdict.b_points,
            "c_points": verdict.c_points,
            "dbeta_zero_on_A": verdict.dbeta_zero_on_A,
            "rank_bounds_on_B": verdict.rank_bounds_on_B,
            "a_b_disjoint": verdict.a_b_disjoint,
        },
    }
    return {"command": "classify",
            "inputs": {"omega": args.omega, "beta": args.beta,
                       "grid_points": len(grid)},
            "results": results,
            "status": "pass" if verdict.passed else "fail"}


def _cmd_lemma_check(args) -> dict:
    n, p, l, trials, seed = args.dim, args.rank, args.deg, args.trials, args.seed
    if 2 * p > n:
        raise CliError("rank p requires dim >= 2p")
    if not 1 <= l <= n - 2:
        raise CliError("deg must satisfy 1 <= deg <= dim - 2")
    rng = rng_for(seed)
    trial_rows = []
    ok = True
    for t in range(trials):
        omega = random_rank_p_two_form(rng, n, p)
        try:
            profile = wedge_solver.kernel_main_profile(omega, l, seed=seed + t)
            violated = False
        except AssertionError:
            violated = True
            profile = None
        if violated:
            ok = False
            trial_rows.append({"trial": t, "violation": True})
            continue
        trial_rows.append({
            "trial": t, "violation": False,
            "kernel_dim": profile.kernel_dim,
            "min_main_degree": profile.min_s,
            "histogram": [list(e) for e in profile.entries],
        })
        if l < p and profile.kernel_dim != 0:
            ok = False  # kernel must be trivial below the rank
        if profile.min_s is not None and profile.min_s < p:
            ok = False
    results = {"trials": trial_rows,
               "all_bounds_hold": ok}
    return {"command": "lemma-check",
            "inputs": {"dim": n, "rank": p, "deg": l, "trials": trials,
                       "seed": seed},
            "results": results, "status": "pass" if ok else "fail"}


def _cmd_lambda_report(args) -> dict:
    coords, form = _load_ref(args.omega)
    if form.degree != 2:
        raise CliError("lambda-report expects a 2-form")
    if args.point:
        point = _parse_point(args.point, coords)
        omega = eval_at(form, point)
        inputs = {"omega": args.omega, "point": [_scalar_str(x) for x in point]}
    else:
        omega = _as_constant(form)
        inputs = {"omega": args.omega}
    if omega.is_zero():
        raise CliError("lambda-report is undefined for the zero form")
    rows = wedge_solver.lambda_report(omega)
    p = wedge_solver.rank2(omega)
    results = {
        "rank": p,
        "rows": [{
            "k": r.k, "dim_domain": r.dim_domain, "dim_codomain": r.dim_codomain,
            "rank": r.rank, "dim_kernel": r.dim_kernel,
            "dim_cokernel": r.dim_cokernel, "injective": r.injective,
            "surjective": r.surjective,
        } for r in rows],
    }
    return {"command": "lambda-report", "inputs": inputs,
            "results": results, "status": "pass"}


def _cmd_verify_paper(args) -> dict:
    del args
    catalog = example_catalog()
    lines = []
    ok = True
    for name in sorted(catalog):
        entry = catalog[name]
        for ident in entry.identities:
            ok = ok and ident.holds
            lines.append({
                "example": name,
                "identity": ident.name,
                "holds": ident.holds,
                "check": ident.detail,
            })
    return {"command": "verify-paper", "inputs": {},
            "results": {"identities": lines},
            "status": "pass" if ok else "fail"}


# ---------------------------------------------------------------------------

def _build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="extforms",
        description="Exact exterior-form toolkit: wedge-equation solver, "
                    "pointwise classifier, kernel lemma checks.")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("rank", help="rank and kernel of a 2-form")
    p.add_argument("form", help="file.form#name")
    p.add_argument("--point", help="coord=value,... for symbolic forms")
    p.set_defaults(func=_cmd_rank)

    p = sub.add_parser("solve", help="solve Omega ^ beta = kappa")
    p.add_argument("omega", help="file.form#name of the 2-form")
    p.add_argument("kappa", help="file.form#name of the right-hand side")
    p.set_defaults(func=_cmd_solve)

    p = sub.add_parser("lee", help="solve or verify d omega = beta ^ omega")
    p.add_argument("omega", help="file.form#name")
    p.add_argument("--beta", help="file.form#name: verify symbolically")
    p.add_argument("--grid", action="append",
                   help="coord=lo:hi:count (repeatable)")
    p.set_defaults(func=_cmd_lee)

    p = sub.add_parser("classify", help="classify sample points into the "
                                        "three theorem sets")
    p.add_argument("omega", help="file.form#name")
    p.add_argument("beta", help="file.form#name")
    p.add_argument("--grid", action="append",
                   help="coord=lo:hi:count (repeatable)")
    p.set_defaults(func=_cmd_classify)

    p = sub.add_parser("lemma-check", help="randomized kernel main-degree "
                                           "bound checks")
    p.add_argument("--dim", type=int, required=True)
    p.add_argument("--rank", type=int, required=True)
    p.add_argument("--deg", type=int, required=True)
    p.add_argument("--trials", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=_cmd_lemma_check)

    p = sub.add_parser("lambda-report", help="rank table of all wedge maps")
    p.add_argument("omega", help="file.form#name")
    p.add_argument("--point", help="coord=value,... for symbolic forms")
    p.set_defaults(func=_cmd_lambda_report)

    p = sub.add_parser("verify-paper", help="check the built-in worked examples")
    p.set_defaults(func=_cmd_verify_paper)
    return ap


def _human_summary(report: dict, stream):
    print(f"{report['command']}: {report['status']}", file=stream)
    if report["command"] == "verify-paper":
        for line in report["results"]["identities"]:
            mark = "ok " if line["holds"] else "FAIL"
            print(f"  [{mark}] {line['example']}: {line['identity']}", file=stream)


def run_command(argv) -> tuple[dict | None, int]:
    """Run one subcommand; returns (report, exit code)."""
    ap = _build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as e:
        return None, 2 if e.code not in (0, None) else 0
    try:
        report = args.func(args)
    except (CliError, DslError) as e:
        print(f"error: {e}", file=sys.stderr)
        return None, 2
    return report, 0 if report["status"] == "pass" else 1


def main(argv=None) -> int:
    report, code = run_command(sys.argv[1:] if argv is None else argv)
    if report is not None:
        json.dump(report, sys.stdout, sort_keys=True, indent=2)
        sys.stdout.write("\n")
        if sys.stderr.isatty():
            _human_summary(report, sys.stderr)
    return code


if __name__ == "__main__":
    raise SystemExit(main())
