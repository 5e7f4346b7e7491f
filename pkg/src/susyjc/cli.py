"""Command-line surface: spectrum sweeps, crossing tables, Wigner grids,
algebra verification, and factorizable-model reports, as CSV or JSON.

Output is byte-reproducible: floats are printed via repr (shortest
round-trip), row order is fixed, files are UTF-8 with LF endings. Sweep
points are evaluated concurrently (SUSYJC_THREADS caps the pool) but always
assembled in sweep order, so parallelism never changes the bytes.

Exit codes: 0 ok, 2 usage or parameter error, 3 truncation did not converge,
4 internal consistency failure (non-Hermitian build, factorization mismatch,
phase-space support overflow, failed verification).
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import os
import sys
from concurrent.futures import ThreadPoolExecutor

import numpy as np

from .algebra import run_all_checks
from .errors import (DegenerateAngle, DegenerateCouplings, EqualCouplings,
                     FactorizationMismatch, InvalidLabel, InvalidN,
                     IsotropicSingularLimit, NoConvergence, NotConverged,
                     NotHermitian, SupportExceeded, TruncationTooSmall)
from .far import (constraint_check, far_from_alphas, far_hamiltonian,
                  far_spectrum_shape)
from .hilbert import HilbertConfig, ModelParams, build_hamiltonian, excitation_number
from .jc import (DressedLabel, ground_state_critical, lowest_closed_levels,
                 reduced_density)
from .oracle import EigenSolution, certify_truncation, diagonalize, find_crossings
from .wigner import closed_evaluator, numeric_evaluator, wigner_grid

__all__ = ["main"]

# the far Hamiltonian consistency gate is entrywise-absolute; at the large
# cutoffs auto-convergence reaches, matrix entries scale like omega*n_max and
# eps-level arithmetic noise on them can pass 1e-12, so CLI paths gate at a
# slightly looser absolute level
FAR_BUILD_TOL = 1e-11

MODELS = ("jc", "ajc", "ar", "far")
SWEEP_FLAG = {"jc": "lambda", "ajc": "mu", "ar": "lambda", "far": "alphaR"}

# config-file key -> argparse dest (identity unless noted)
CONFIG_TO_DEST = {"lambda": "lam"}


class UsageError(Exception):
    pass


# ---------------------------------------------------------------------------
# formatting and output plumbing


def _fmt(value) -> str:
    """Shortest round-trip decimal text of a float."""
    return repr(float(value))


def _csv(header, rows) -> str:
    # minimal quoting keeps numeric fields bare while making fields that
    # contain commas (identity names) round-trip through csv readers
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buf.getvalue()


def _jsonify(obj):
    if isinstance(obj, dict):
        return {k: _jsonify(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_jsonify(v) for v in obj]
    if isinstance(obj, (bool, np.bool_)):
        return bool(obj)
    if isinstance(obj, (np.floating, float)):
        return float(obj)
    if isinstance(obj, (np.integer, int)):
        return int(obj)
    return obj


def _json(payload: dict) -> str:
    return json.dumps(_jsonify(payload), sort_keys=True, indent=2,
                      ensure_ascii=False) + "\n"


def _write_text(path, text: str) -> None:
    data = text.encode("utf-8")
    if path is None or path == "-":
        sys.stdout.buffer.write(data)
        sys.stdout.flush()
    else:
        with open(path, "wb") as fh:
            fh.write(data)


def _max_workers() -> int:
    env = os.environ.get("SUSYJC_THREADS")
    if env is not None:
        try:
            n = int(env)
        except ValueError:
            raise UsageError(f"SUSYJC_THREADS must be an integer, got {env!r}")
        if n < 1:
            raise UsageError("SUSYJC_THREADS must be >= 1")
        return n
    return min(8, os.cpu_count() or 1)


def _ordered_map(fn, items):
    """Map preserving item order; parallel when the pool allows it."""
    items = list(items)
    workers = _max_workers()
    if workers == 1 or len(items) <= 1:
        return [fn(x) for x in items]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, items))


# ---------------------------------------------------------------------------
# argument handling


def _parse_sweep(text) -> tuple[list[float], int | None]:
    """'min:max:points' -> (values, points); a bare number is a zero-width
    sweep with points=None."""
    text = str(text)
    if ":" not in text:
        try:
            return [float(text)], None
        except ValueError:
            raise UsageError(f"expected a number or min:max:points, got {text!r}")
    parts = text.split(":")
    if len(parts) != 3:
        raise UsageError(f"sweep must be min:max:points, got {text!r}")
    try:
        lo, hi, pts = float(parts[0]), float(parts[1]), int(parts[2])
    except ValueError:
        raise UsageError(f"could not parse sweep {text!r}")
    if pts < 2:
        raise UsageError("sweep needs points >= 2")
    if not (math.isfinite(lo) and math.isfinite(hi) and lo < hi):
        raise UsageError("sweep needs finite min < max")
    return [float(x) for x in np.linspace(lo, hi, pts)], pts


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="susyjc",
        description="Spectral analysis of the JC family of models")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--config", help="JSON config file; flags override it")
        p.add_argument("--format", choices=("csv", "json"))
        p.add_argument("--output", help="output path (default stdout)")
        p.add_argument("--units", choices=("omega0", "absolute"))
        p.add_argument("--n-max", dest="n_max", type=int,
                       help="fixed Fock cutoff")
        p.add_argument("--auto", action="store_const", const=True,
                       help="auto-converge the cutoff (default when --n-max "
                            "is absent; exclusive with it)")

    def model_params(p):
        p.add_argument("--model", choices=MODELS)
        p.add_argument("--omega", type=float)
        p.add_argument("--omega0", type=float)
        p.add_argument("--lambda", dest="lam",
                       help="rotating coupling; sweep syntax min:max:points")
        p.add_argument("--mu", help="counter-rotating coupling; sweepable "
                                    "for --model ajc")
        p.add_argument("--theta", type=float)
        p.add_argument("--alpha0", type=float)
        p.add_argument("--alphaQ", type=float)
        p.add_argument("--alphaR", help="factorization coefficient; sweep "
                                        "syntax min:max:points")

    p = sub.add_parser("spectrum", help="lowest levels along a coupling sweep")
    common(p)
    model_params(p)
    p.add_argument("--levels", type=int)
    p.add_argument("--conv-tol", dest="conv_tol", type=float)

    p = sub.add_parser("crossings", help="level crossings along a sweep")
    common(p)
    model_params(p)
    p.add_argument("--levels", type=int)
    p.add_argument("--conv-tol", dest="conv_tol", type=float)
    p.add_argument("--xtol", type=float)
    p.add_argument("--min-gap", dest="min_gap", type=float)

    p = sub.add_parser("wigner", help="Wigner grid of a dressed level")
    common(p)
    p.add_argument("--model", choices=("jc", "ajc"))
    p.add_argument("--omega", type=float)
    p.add_argument("--omega0", type=float)
    p.add_argument("--lambda", dest="lam", type=float)
    p.add_argument("--mu", type=float)
    p.add_argument("--label", help="dressed level, e.g. minus:0 or plus:3")
    p.add_argument("--window", type=float)
    p.add_argument("--points", type=int)
    p.add_argument("--source", choices=("closed", "numeric"))

    p = sub.add_parser("verify", help="operator-identity residual table")
    common(p)
    p.add_argument("--tol", type=float)

    p = sub.add_parser("far", help="factorizable-model report")
    common(p)
    p.add_argument("--alpha0", type=float)
    p.add_argument("--alphaQ", type=float)
    p.add_argument("--alphaR", type=float)
    p.add_argument("--levels", type=int)
    p.add_argument("--conv-tol", dest="conv_tol", type=float)
    p.add_argument("--shape-tol", dest="shape_tol", type=float)

    return parser


DEFAULTS = {
    "spectrum": {"format": "csv", "units": "omega0", "omega": 1.0,
                 "omega0": 1.0, "theta": 0.0, "levels": 11,
                 "conv_tol": 1e-10, "alpha0": 0.01, "alphaQ": 1.0},
    "crossings": {"format": "csv", "units": "omega0", "omega": 1.0,
                  "omega0": 1.0, "theta": 0.0, "levels": 4,
                  "conv_tol": 1e-10, "xtol": 1e-9, "min_gap": 1e-8,
                  "alpha0": 0.01, "alphaQ": 1.0},
    "wigner": {"format": "csv", "units": "omega0", "model": "jc",
               "omega": 1.0, "omega0": 1.0, "lam": 0.0, "mu": 0.0,
               "window": 3.0, "points": 101, "source": "closed"},
    "verify": {"format": "csv", "units": "omega0", "n_max": 64, "tol": 1e-12},
    "far": {"format": "csv", "units": "omega0", "levels": 11,
            "conv_tol": 1e-10, "shape_tol": 1e-8},
}


def _merge_config(args: argparse.Namespace) -> dict:
    """Flags first, then config-file values, then hard defaults."""
    merged = dict(vars(args))
    if args.config:
        try:
            with open(args.config, "r", encoding="utf-8") as fh:
                from_file = json.load(fh)
        except OSError as exc:
            raise UsageError(f"cannot read config file: {exc}")
        except json.JSONDecodeError as exc:
            raise UsageError(f"config file is not valid JSON: {exc}")
        if not isinstance(from_file, dict):
            raise UsageError("config file must hold a JSON object")
        for key, value in from_file.items():
            dest = CONFIG_TO_DEST.get(key, key)
            if dest not in merged:
                raise UsageError(f"unknown config key {key!r} for "
                                 f"subcommand {args.command!r}")
            if merged[dest] is None:
                merged[dest] = value
    for key, value in DEFAULTS[args.command].items():
        if merged.get(key) is None:
            merged[key] = value
    if merged.get("n_max") is not None and merged.get("auto"):
        raise UsageError("--n-max and --auto are mutually exclusive")
    return merged


def _require(merged: dict, key: str, why: str):
    if merged.get(key) is None:
        flag = "--" + {"lam": "lambda", "n_max": "n-max"}.get(key, key)
        raise UsageError(f"{flag} is required {why}")
    return merged[key]


def _energy_unit(merged: dict, model: str) -> tuple[float, str]:
    """Scale for reported energies/couplings. The factorizable model derives
    its own frequencies from the alphas, so it always reports absolute."""
    if model == "far" or merged["units"] == "absolute":
        return 1.0, "absolute"
    omega0 = float(merged["omega0"])
    if omega0 == 0.0:
        raise UsageError("--units omega0 needs a nonzero --omega0")
    return omega0, "omega0"


# ---------------------------------------------------------------------------
# subcommands


def _sweep_values(merged: dict, model: str) -> tuple[list[float], int | None]:
    flag = SWEEP_FLAG[model]
    dest = CONFIG_TO_DEST.get(flag, flag)
    raw = merged.get(dest)
    if raw is None:
        raise UsageError(f"--{flag} is required for --model {model}")
    return _parse_sweep(raw)


def _point_params(merged: dict, model: str, x: float) -> ModelParams:
    if model == "jc":
        return ModelParams(omega=merged["omega"], omega0=merged["omega0"],
                           lam=x, theta=merged["theta"])
    if model == "ajc":
        return ModelParams(omega=merged["omega"], omega0=merged["omega0"],
                           mu=x, theta=merged["theta"])
    mu_raw = merged.get("mu")
    mu_vals, mu_pts = _parse_sweep(mu_raw if mu_raw is not None else "0.0")
    if mu_pts is not None:
        raise UsageError("--mu must be a scalar for --model ar")
    return ModelParams(omega=merged["omega"], omega0=merged["omega0"],
                       lam=x, mu=mu_vals[0], theta=merged["theta"])


def _solve(builder, merged: dict, k_levels: int):
    if merged.get("n_max") is not None:
        return diagonalize(builder(int(merged["n_max"])))
    return certify_truncation(builder, k_levels=k_levels,
                              tol=float(merged["conv_tol"]))


def cmd_spectrum(merged: dict) -> int:
    model = _require(merged, "model", "for spectrum")
    levels = int(merged["levels"])
    if levels < 1:
        raise UsageError("--levels must be >= 1")
    sweep, _ = _sweep_values(merged, model)
    unit, units_name = _energy_unit(merged, model)

    def eval_point(x: float):
        if model == "far":
            try:
                fp = far_from_alphas(merged["alpha0"], merged["alphaQ"], x)
            except DegenerateCouplings as exc:
                return ("skip", x, str(exc))
            builder = lambda n: far_hamiltonian(HilbertConfig(n), fp,
                                                check_tol=FAR_BUILD_TOL)
            sol = _solve(builder, merged, levels)
            return ("ok", x, sol.eigenvalues[:levels], None)
        params = _point_params(merged, model, x)
        builder = lambda n: build_hamiltonian(HilbertConfig(n), params, model)
        sol = _solve(builder, merged, levels)
        closed = None
        if model in ("jc", "ajc"):
            closed = lowest_closed_levels(params, levels, model)
        return ("ok", x, sol.eigenvalues[:levels], closed)

    results = _ordered_map(eval_point, sweep)

    rows = []
    json_rows = []
    for res in results:
        if res[0] == "skip":
            print(f"susyjc: skipping sweep point {res[1]!r}: {res[2]}",
                  file=sys.stderr)
            continue
        _, x, energies, closed = res
        for k, energy in enumerate(energies):
            energy = float(energy)
            if closed is not None:
                e_closed, label = closed[k]
                branch, n_tot = label.branch, int(label.n_total)
                residual = abs(energy - e_closed)
                rows.append([_fmt(x / unit), str(k), _fmt(energy / unit),
                             branch, str(n_tot), _fmt(e_closed / unit),
                             _fmt(residual / unit)])
                json_rows.append({"sweep_value": x / unit, "level_index": k,
                                  "energy": energy / unit,
                                  "label_branch": branch, "label_N": n_tot,
                                  "closed_form_energy": e_closed / unit,
                                  "residual": residual / unit})
            else:
                rows.append([_fmt(x / unit), str(k), _fmt(energy / unit),
                             "", "", "", ""])
                json_rows.append({"sweep_value": x / unit, "level_index": k,
                                  "energy": energy / unit,
                                  "label_branch": None, "label_N": None,
                                  "closed_form_energy": None,
                                  "residual": None})

    if merged["format"] == "csv":
        text = _csv(["sweep_value", "level_index", "energy", "label_branch",
                     "label_N", "closed_form_energy", "residual"], rows)
    else:
        text = _json({"kind": "spectrum", "model": model,
                      "sweep_parameter": SWEEP_FLAG[model],
                      "units": units_name, "levels": levels,
                      "n_max": merged.get("n_max"), "rows": json_rows})
    _write_text(merged.get("output"), text)
    return 0


def cmd_crossings(merged: dict) -> int:
    model = _require(merged, "model", "for crossings")
    sweep, points = _sweep_values(merged, model)
    if points is None:
        raise UsageError("crossings need a min:max:points sweep")
    lo, hi = sweep[0], sweep[-1]
    unit, units_name = _energy_unit(merged, model)

    if merged.get("n_max") is not None:
        n_max = int(merged["n_max"])
    else:
        # certify at the top of the range (the most demanding point)
        if model == "far":
            fp_hi = far_from_alphas(merged["alpha0"], merged["alphaQ"], hi)
            top = lambda n: far_hamiltonian(HilbertConfig(n), fp_hi,
                                            check_tol=FAR_BUILD_TOL)
        else:
            p_hi = _point_params(merged, model, hi)
            top = lambda n: build_hamiltonian(HilbertConfig(n), p_hi, model)
        n_max = certify_truncation(top, k_levels=int(merged["levels"]),
                                   tol=float(merged["conv_tol"])).n_max_used
    cfg = HilbertConfig(n_max)

    sector_op = None
    if model in ("jc", "ajc"):
        sector_op = excitation_number(cfg, "plus" if model == "jc" else "minus")

    def builder(x: float):
        if model == "far":
            fp = far_from_alphas(merged["alpha0"], merged["alphaQ"], x)
            return far_hamiltonian(cfg, fp, check_tol=FAR_BUILD_TOL)
        return build_hamiltonian(cfg, _point_params(merged, model, x), model)

    records = find_crossings(builder, (lo, hi), mode="ground",
                             grid_points=max(3, points),
                             xtol=float(merged["xtol"]),
                             min_gap=float(merged["min_gap"]),
                             sector_op=sector_op,
                             label_model=model if model in ("jc", "ajc") else "jc")

    rows = []
    json_rows = []
    for rec in records:
        branch = rec.right.branch if rec.right is not None else ""
        m_val = str(rec.left.n_total) if rec.left is not None else ""
        n_val = str(rec.right.n_total) if rec.right is not None else ""
        closed = residual = None
        if model in ("jc", "ajc") and rec.right is not None and rec.right.n_total >= 1:
            closed = ground_state_critical(rec.right.n_total,
                                           _point_params(merged, model, rec.coupling))
            residual = abs(closed - rec.coupling)
        rows.append([branch, m_val, n_val,
                     _fmt(closed / unit) if closed is not None else "",
                     _fmt(rec.coupling / unit),
                     _fmt(residual / unit) if residual is not None else ""])
        json_rows.append({"branch": branch or None,
                          "M": int(m_val) if m_val else None,
                          "N": int(n_val) if n_val else None,
                          "lambda_closed": closed / unit if closed is not None else None,
                          "lambda_numeric": rec.coupling / unit,
                          "residual": residual / unit if residual is not None else None})

    if merged["format"] == "csv":
        text = _csv(["branch", "M", "N", "lambda_closed", "lambda_numeric",
                     "residual"], rows)
    else:
        text = _json({"kind": "crossings", "model": model,
                      "units": units_name, "grid_points": max(3, points),
                      "n_max": n_max, "rows": json_rows})
    _write_text(merged.get("output"), text)
    return 0


def _parse_label(text: str, model: str) -> DressedLabel:
    parts = str(text).split(":")
    if len(parts) != 2 or parts[0] not in ("minus", "plus"):
        raise UsageError(f"--label must be minus:N or plus:N, got {text!r}")
    try:
        n_total = int(parts[1])
    except ValueError:
        raise UsageError(f"--label N must be an integer, got {parts[1]!r}")
    return DressedLabel(parts[0], n_total, model)


def cmd_wigner(merged: dict) -> int:
    model = merged["model"]
    label = _parse_label(_require(merged, "label", "for wigner"), model)
    params = ModelParams(omega=merged["omega"], omega0=merged["omega0"],
                         lam=float(merged["lam"]), mu=float(merged["mu"]))
    window = float(merged["window"])
    points = int(merged["points"])

    if merged["source"] == "closed":
        evaluator = closed_evaluator(label, params)
    else:
        if merged.get("n_max") is not None:
            n_max = int(merged["n_max"])
        else:
            corner = 2.0 * window * window
            n_max = label.n_total + int(math.ceil(corner + 6.0 * math.sqrt(corner) + 30))
        rho = reduced_density(label, params, "boson", HilbertConfig(n_max))
        evaluator = numeric_evaluator(rho)

    grid = wigner_grid(evaluator, window=window, points=points)

    rows = []
    json_rows = []
    for i, re_a in enumerate(grid.re_alpha):
        for j, im_a in enumerate(grid.im_alpha):
            w = float(grid.values[i, j])
            rows.append([_fmt(re_a), _fmt(im_a), _fmt(w)])
            json_rows.append({"re_alpha": float(re_a), "im_alpha": float(im_a),
                              "w": w})

    if merged["format"] == "csv":
        text = _csv(["re_alpha", "im_alpha", "w"], rows)
    else:
        text = _json({"kind": "wigner", "model": model,
                      "label": f"{label.branch}:{label.n_total}",
                      "source": merged["source"], "window": window,
                      "points": points,
                      "normalization_integral": float(grid.normalization_integral),
                      "rows": json_rows})
    _write_text(merged.get("output"), text)
    return 0


def cmd_verify(merged: dict) -> int:
    n_max = int(merged["n_max"])
    tol = float(merged["tol"])
    reports = run_all_checks(HilbertConfig(n_max))
    rows = []
    json_rows = []
    all_pass = True
    for rep in reports:
        passed = rep.residual < tol
        all_pass = all_pass and passed
        rows.append([rep.identity_name, rep.projector,
                     "true" if rep.truncation_sensitive else "false",
                     _fmt(rep.residual), "true" if passed else "false"])
        json_rows.append({"identity": rep.identity_name,
                          "projector": rep.projector,
                          "truncation_sensitive": rep.truncation_sensitive,
                          "residual": float(rep.residual), "passed": passed})

    if merged["format"] == "csv":
        text = _csv(["identity", "projector", "truncation_sensitive",
                     "residual", "passed"], rows)
    else:
        text = _json({"kind": "verify", "n_max": n_max, "tolerance": tol,
                      "all_pass": all_pass, "rows": json_rows})
    _write_text(merged.get("output"), text)
    return 0 if all_pass else 4


def cmd_far(merged: dict) -> int:
    for key in ("alpha0", "alphaQ", "alphaR"):
        _require(merged, key, "for far")
    fp = far_from_alphas(float(merged["alpha0"]), float(merged["alphaQ"]),
                         float(merged["alphaR"]))
    builder = lambda n: far_hamiltonian(HilbertConfig(n), fp,
                                        check_tol=FAR_BUILD_TOL)
    if merged.get("n_max") is not None:
        # the shape report needs certified levels, so a pinned cutoff is
        # still checked against its double; eigenvalues come from the
        # requested cutoff
        sol = diagonalize(builder(int(merged["n_max"])))
        ref = diagonalize(builder(2 * int(merged["n_max"])))
        tol = float(merged["conv_tol"])
        m = min(sol.eigenvalues.size, ref.eigenvalues.size)
        diffs = np.abs(sol.eigenvalues[:m] - ref.eigenvalues[:m])
        converged = int(np.argmax(diffs >= tol)) if (diffs >= tol).any() else m
        sol = EigenSolution(sol.eigenvalues, sol.eigenvectors, converged,
                            sol.n_max_used)
    else:
        sol = certify_truncation(builder, k_levels=int(merged["levels"]),
                                 tol=float(merged["conv_tol"]))
    constraints = constraint_check(fp)
    shape = far_spectrum_shape(sol, tol=float(merged["shape_tol"]))

    effective = {"omega": fp.omega, "omega0": fp.omega0, "lambda": fp.lam,
                 "mu": fp.mu, "phi_lambda": fp.phi_lambda,
                 "phi_mu": fp.phi_mu, "omega_c": fp.omega_c}
    shape_entries = [("ground_energy", _fmt(shape.ground_energy)),
                     ("spacing", _fmt(shape.spacing)),
                     ("degeneracies",
                      ";".join(str(d) for d in shape.degeneracies)),
                     ("is_equidistant",
                      "true" if shape.is_equidistant else "false"),
                     ("has_unique_ground",
                      "true" if shape.has_unique_ground else "false")]

    if merged["format"] == "csv":
        rows = [["alpha0", _fmt(merged["alpha0"])],
                ["alphaQ", _fmt(merged["alphaQ"])],
                ["alphaR", _fmt(merged["alphaR"])]]
        rows += [[k, _fmt(v)] for k, v in effective.items()]
        rows += [[k, _fmt(v)] for k, v in constraints.items()]
        rows += [list(pair) for pair in shape_entries]
        rows += [["n_max_used", str(sol.n_max_used)],
                 ["converged_levels", str(sol.converged_levels)]]
        text = _csv(["field", "value"], rows)
    else:
        text = _json({"kind": "far", "alpha0": float(merged["alpha0"]),
                      "alphaQ": float(merged["alphaQ"]),
                      "alphaR": float(merged["alphaR"]),
                      "effective": effective, "constraints": constraints,
                      "shape": {"ground_energy": float(shape.ground_energy),
                                "spacing": float(shape.spacing),
                                "degeneracies": list(shape.degeneracies),
                                "is_equidistant": bool(shape.is_equidistant),
                                "has_unique_ground": bool(shape.has_unique_ground)},
                      "n_max_used": sol.n_max_used,
                      "converged_levels": sol.converged_levels})
    _write_text(merged.get("output"), text)
    return 0


# ---------------------------------------------------------------------------


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        merged = _merge_config(args)
        handler = {"spectrum": cmd_spectrum, "crossings": cmd_crossings,
                   "wigner": cmd_wigner, "verify": cmd_verify,
                   "far": cmd_far}[args.command]
        return handler(merged)
    except UsageError as exc:
        print(f"susyjc: error: {exc}", file=sys.stderr)
        return 2
    except (InvalidLabel, InvalidN, DegenerateAngle, DegenerateCouplings,
            EqualCouplings, IsotropicSingularLimit, TruncationTooSmall,
            ValueError) as exc:
        print(f"susyjc: parameter error: {exc}", file=sys.stderr)
        return 2
    except (NoConvergence, NotConverged) as exc:
        print(f"susyjc: convergence failure: {exc}", file=sys.stderr)
        return 3
    except (FactorizationMismatch, NotHermitian, SupportExceeded) as exc:
        print(f"susyjc: consistency failure: {exc}", file=sys.stderr)
        return 4


if __name__ == "__main__":
    sys.exit(main())
