"""Batch command-line front end ``gabor-super``.

Exit codes: 0 success, 1 input/output or usage error, 2 domain error
(not a frame, not dual, shape mismatch), 3 iteration did not converge.
"""

import argparse
import json
import sys
import time

import numpy as np

from . import io
from .amalgam import make_weight
from .duality import dual_window, frame_bounds, truncation_error_profile
from .errors import DimensionError, DomainError, NoConvergence
from .gabor import GaborLattice, analyze, apply_dense, synthesize
from .shiftalg import spectral_invert
from .walnut import correlations, janssen_coeffs, walnut_apply, walnut_matrix, wexler_raz_check


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def _read_json(path):
    try:
        with open(path) as fh:
            return json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise UsageError(f"cannot read {path}: {exc}") from exc


def _read_signal(path):
    try:
        return io.signal_from_json(_read_json(path))
    except (KeyError, TypeError, ValueError) as exc:
        if isinstance(exc, DomainError):
            raise
        raise UsageError(f"{path} is not a valid signal file: {exc}") from exc


def _emit(text, out):
    if out is None:
        sys.stdout.write(text)
        return
    try:
        with open(out, "w") as fh:
            fh.write(text)
    except OSError as exc:
        raise UsageError(f"cannot write {out}: {exc}") from exc


def _need(cfg, *names):
    for name in names:
        if getattr(cfg, name) is None:
            raise UsageError(f"--{name.replace('_', '-')} is required for {cfg.command}")


def _lattice(cfg, L):
    _need(cfg, "a", "b")
    return GaborLattice(cfg.a, cfg.b, L)


def _weight(cfg, L):
    text = cfg.weight
    if text is None:
        return None
    if text == "constant":
        return make_weight("constant", L)
    if text.startswith("polynomial"):
        _, _, s = text.partition(":")
        return make_weight("polynomial", L, s=float(s or 1.0))
    obj = _read_json(text)
    try:
        return io.weight_from_json(obj)
    except (KeyError, TypeError) as exc:
        raise UsageError(f"{text} is not a valid weight file: {exc}") from exc


def _window_and_lattice(cfg):
    _need(cfg, "window")
    g = _read_signal(cfg.window)
    return g, _lattice(cfg, g.shape[0])


def _with_meta(signal, meta):
    obj = io.signal_to_json(signal)
    obj["meta"] = meta
    return io.dumps(obj)


def cmd_dual(cfg):
    g, lat = _window_and_lattice(cfg)
    gamma, info = dual_window(g, lat, tol=cfg.tol, return_info=True)
    _, dev = wexler_raz_check(g, gamma, lat)
    meta = {"A": info["A"], "B": info["B"], "cond": info["cond"],
            "wr_max_dev": dev, "cg_iters": info["iterations"]}
    _emit(_with_meta(gamma, meta), cfg.out)
    return 0


def cmd_analyze(cfg):
    _need(cfg, "input")
    f = _read_signal(cfg.input)
    g, lat = _window_and_lattice(cfg)
    _emit(io.dumps(io.coeffs_to_json(analyze(f, g, lat))), cfg.out)
    return 0


def cmd_synthesize(cfg):
    _need(cfg, "input")
    try:
        coeffs = io.coeffs_from_json(_read_json(cfg.input))
    except (KeyError, TypeError) as exc:
        raise UsageError(f"{cfg.input} is not a valid coefficient file: {exc}") from exc
    window = cfg.dual_window or cfg.window
    if window is None:
        raise UsageError("--dual-window (or --window) is required for synthesize")
    _emit(io.dumps(io.signal_to_json(synthesize(coeffs, _read_signal(window)))), cfg.out)
    return 0


def cmd_bounds(cfg):
    g, lat = _window_and_lattice(cfg)
    fb = frame_bounds(g, lat, tol=cfg.tol)
    obj = {"A": fb.A, "B": fb.B, "cond": fb.cond if np.isfinite(fb.cond) else None,
           "is_frame": fb.is_frame}
    if cfg.format == "csv":
        _emit(io.rows_to_csv(["A", "B", "is_frame"], [(fb.A, fb.B, int(fb.is_frame))]), cfg.out)
    else:
        _emit(io.dumps(obj), cfg.out)
    return 0


def cmd_wr(cfg):
    g, lat = _window_and_lattice(cfg)
    _need(cfg, "dual_window")
    gamma = _read_signal(cfg.dual_window)
    ok, dev = wexler_raz_check(g, gamma, lat, tol=cfg.tol)
    _emit(io.dumps({"pass": ok, "max_dev": dev, "tol": cfg.tol}), cfg.out)
    return 0 if ok else 2


def cmd_walnut(cfg):
    g, lat = _window_and_lattice(cfg)
    gamma = _read_signal(cfg.dual_window) if cfg.dual_window else g
    obj = {"correlations": io.correlations_to_json(correlations(g, gamma, lat))}
    if g.shape == gamma.shape:
        obj["janssen"] = io.janssen_to_json(janssen_coeffs(g, gamma, lat))
    if cfg.input:
        f = _read_signal(cfg.input)
        obj["output"] = io.signal_to_json(walnut_apply(correlations(g, gamma, lat), f))
    if not cfg.dump:
        obj.pop("correlations")
        obj.pop("janssen", None)
    _emit(io.dumps(obj), cfg.out)
    return 0


def cmd_convergence(cfg):
    _need(cfg, "input", "dual_window")
    f = _read_signal(cfg.input)
    g, lat = _window_and_lattice(cfg)
    gamma = _read_signal(cfg.dual_window)
    w = _weight(cfg, lat.L)
    steps = truncation_error_profile(f, g, gamma, lat, p=cfg.p, q=cfg.q, v=w)
    if cfg.format == "json":
        _emit(io.dumps({"steps": [s._asdict() for s in steps]}), cfg.out)
    else:
        _emit(io.rows_to_csv(["K", "N", "err"], steps), cfg.out)
    return 0


def cmd_spectral(cfg):
    _need(cfg, "input")
    try:
        A = io.shiftop_from_json(_read_json(cfg.input))
    except (KeyError, TypeError, StopIteration) as exc:
        raise UsageError(f"{cfg.input} is not a valid shift-operator file: {exc}") from exc
    res = spectral_invert(A, _weight(cfg, A.L), tol=cfg.tol, seed=cfg.seed)
    if cfg.format == "csv":
        _emit(io.rows_to_csv(["x", "norm", "w"], res.profile), cfg.out)
    else:
        obj = {"inverse": io.shiftop_to_json(res.inverse), "cond": res.cond,
               "roundtrip_error": res.roundtrip_error,
               "profile": [{"x": x, "norm": n, "w": w} for x, n, w in res.profile]}
        _emit(io.dumps(obj), cfg.out)
    return 0


def cmd_mux(cfg):
    if not cfg.input:
        raise UsageError("at least one --input is required for mux")
    signals = [_read_signal(p) for p in cfg.input]
    if any(s.shape[1] != 1 for s in signals):
        raise DimensionError("mux inputs must be scalar signals")
    if len({s.shape[0] for s in signals}) != 1:
        raise DimensionError("mux inputs must share the signal length")
    f = np.concatenate(signals, axis=1)
    g, lat = _window_and_lattice(cfg)
    if g.shape[1] != f.shape[1]:
        raise DimensionError(
            f"{f.shape[1]} input signals but the window has {g.shape[1]} channels")
    gamma = dual_window(g, lat, tol=cfg.tol)
    coeffs = analyze(f, g, lat)
    rec = synthesize(coeffs, gamma)
    errs = np.abs(rec - f).max(axis=0).tolist()
    obj = {"coefficients": io.coeffs_to_json(coeffs),
           "recovered": io.signal_to_json(rec), "max_error": errs}
    _emit(io.dumps(obj), cfg.out)
    return 0


def _median_ns(fn, runs):
    times = []
    for _ in range(runs):
        t0 = time.perf_counter_ns()
        fn()
        times.append(time.perf_counter_ns() - t0)
    return int(np.median(times))


def bench_rows(sizes, b=16, runs=20, seed=0):
    """Median times of Walnut and dense application for each L in ``sizes``."""
    rng = np.random.default_rng(seed)
    rows = []
    for L in sizes:
        a = max(1, L // 64)
        while L % a:
            a -= 1
        lat = GaborLattice(a, b, L)
        g = rng.standard_normal((L, 1)) + 1j * rng.standard_normal((L, 1))
        f = rng.standard_normal((L, 1)) + 1j * rng.standard_normal((L, 1))
        fam = correlations(g, g, lat)
        S = walnut_matrix(fam)
        rows.append((L, _median_ns(lambda: walnut_apply(fam, f), runs),
                     _median_ns(lambda: apply_dense(S, f), runs)))
    return rows


def cmd_bench(cfg):
    sizes = cfg.sizes or [256, 1024, 4096]
    b = cfg.b or 16
    for L in sizes:
        if L % b:
            raise UsageError(f"b={b} does not divide L={L}")
    rows = bench_rows(sizes, b=b, runs=cfg.runs, seed=cfg.seed)
    _emit(io.rows_to_csv(["L", "t_walnut_ns", "t_dense_ns"], rows), cfg.out)
    return 0


COMMANDS = {
    "dual": cmd_dual, "analyze": cmd_analyze, "synthesize": cmd_synthesize,
    "bounds": cmd_bounds, "wr": cmd_wr, "walnut": cmd_walnut,
    "convergence": cmd_convergence, "spectral": cmd_spectral, "mux": cmd_mux,
    "bench": cmd_bench,
}


def build_parser():
    parser = _Parser(prog="gabor-super", description="Vector-valued Gabor frame tools.")
    parser.add_argument("command", choices=sorted(COMMANDS))
    parser.add_argument("--input", action="append",
                        help="input file; repeat for mux")
    parser.add_argument("--window")
    parser.add_argument("--dual-window")
    parser.add_argument("--a", type=int)
    parser.add_argument("--b", type=int)
    parser.add_argument("--p", type=float, default=2.0)
    parser.add_argument("--q", type=float, default=2.0)
    parser.add_argument("--weight", help="weight JSON path, 'constant' or 'polynomial:s'")
    parser.add_argument("--tol", type=float, default=None)
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--out")
    parser.add_argument("--format", choices=["json", "csv"], default=None)
    parser.add_argument("--dump", action="store_true", help="walnut: include G_n and Janssen table")
    parser.add_argument("--sizes", type=int, nargs="+", help="bench: signal lengths")
    parser.add_argument("--runs", type=int, default=20, help="bench: repetitions")
    return parser


_DEFAULT_TOL = {"dual": 1e-12, "wr": 1e-10, "spectral": 1e-8, "mux": 1e-12, "bounds": 1e-10}
_DEFAULT_FORMAT = {"convergence": "csv", "bench": "csv"}


def main(argv=None):
    cfg = build_parser().parse_args(argv)
    if cfg.command != "mux" and cfg.input is not None:
        if len(cfg.input) > 1:
            print("gabor-super: error: --input given more than once", file=sys.stderr)
            return 1
        cfg.input = cfg.input[0]
    if cfg.tol is None:
        cfg.tol = _DEFAULT_TOL.get(cfg.command, 1e-10)
    if cfg.tol <= 0:
        print("gabor-super: error: --tol must be positive", file=sys.stderr)
        return 1
    cfg.format = cfg.format or _DEFAULT_FORMAT.get(cfg.command, "json")
    try:
        return COMMANDS[cfg.command](cfg)
    except UsageError as exc:
        print(f"gabor-super: error: {exc}", file=sys.stderr)
        return 1
    except NoConvergence as exc:
        print(f"gabor-super: did not converge: {exc}", file=sys.stderr)
        return 3
    except ValueError as exc:
        print(f"gabor-super: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
