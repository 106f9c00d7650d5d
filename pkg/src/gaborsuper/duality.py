"""Frame bounds, dual windows and truncated Gabor expansions."""

import logging
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from .amalgam import AmalgamParams, amalgam_norm
from .core import as_signal, wrap_distance
from .errors import (ConsistencyError, NoConvergence, NotAFrame, NotDualPair,
                     SingularWeight, SupportTooWide)
from .gabor import GaborCoefficients, analyze, synthesize
from .walnut import correlations, walnut_apply, walnut_matrix, wexler_raz_check

logger = logging.getLogger(__name__)

FRAME_TOL = 1e-10
DENSE_LIMIT = 1024


@dataclass(frozen=True)
class FrameBounds:
    A: float
    B: float
    is_frame: bool

    @property
    def cond(self):
        return self.B / self.A if self.A > 0 else np.inf


def _power_iteration(apply, x0, tol, maxiter):
    x = x0 / np.linalg.norm(x0)
    lam = 0.0
    for _ in range(maxiter):
        y = apply(x)
        lam_new = float(np.real(np.vdot(x, y)))
        ny = np.linalg.norm(y)
        if ny == 0:
            return 0.0
        x = y / ny
        if abs(lam_new - lam) <= tol * abs(lam_new):
            return lam_new
        lam = lam_new
    logger.warning("power iteration stopped after %d steps without reaching tol=%g", maxiter, tol)
    return lam


def frame_bounds(g, lat, tol=1e-10, frame_tol=FRAME_TOL, maxiter=100_000):
    """Optimal frame bounds of the Gabor system generated by ``g``.

    Small problems (L n <= 1024) use a full Hermitian eigendecomposition of
    the Walnut-assembled frame operator.  Larger ones use power iteration for
    B and power iteration on ``B I - S`` for A.
    """
    g = as_signal(g)
    fam = correlations(g, g, lat)
    size = g.size
    if size <= DENSE_LIMIT:
        ev = np.linalg.eigvalsh(walnut_matrix(fam))
        A, B = float(ev[0]), float(ev[-1])
    else:
        rng = np.random.default_rng(0)
        x0 = rng.standard_normal(g.shape) + 1j * rng.standard_normal(g.shape)
        S = lambda x: walnut_apply(fam, x)
        B = _power_iteration(S, x0, tol, maxiter)
        gap = _power_iteration(lambda x: B * x - S(x), x0, tol, maxiter)
        A = B - gap
    A = min(max(A, 0.0), B)
    return FrameBounds(A, B, A > frame_tol)


def _cg(apply, rhs, tol, maxiter, x0=None):
    """Conjugate gradients for a Hermitian positive definite operator."""
    x = np.zeros_like(rhs) if x0 is None else x0.copy()
    r = rhs - apply(x) if x0 is not None else rhs.copy()
    target = tol * np.linalg.norm(rhs)
    p = r.copy()
    rr = np.vdot(r, r).real
    for it in range(1, maxiter + 1):
        if np.sqrt(rr) <= target:
            return x, it - 1
        Ap = apply(p)
        alpha = rr / np.vdot(p, Ap).real
        x += alpha * p
        r -= alpha * Ap
        rr_new = np.vdot(r, r).real
        p = r + (rr_new / rr) * p
        rr = rr_new
    if np.sqrt(rr) <= target:
        return x, maxiter
    raise NoConvergence(f"CG did not reach relative residual {tol:g} in {maxiter} iterations")


def frame_solve(g, lat, rhs, tol=1e-12, maxiter=None, method="cg", bounds=None):
    """Solve ``S_g x = rhs`` with the Walnut operator as matrix-vector product.

    Returns ``(x, iterations)``.  ``method="frame"`` runs the classical frame
    algorithm ``x <- x + 2/(A+B) (rhs - S x)`` instead of CG.
    """
    g, rhs = as_signal(g), as_signal(rhs)
    bounds = bounds or frame_bounds(g, lat)
    if not bounds.is_frame:
        raise NotAFrame(f"lower frame bound A={bounds.A:.3g} is not positive")
    if maxiter is None:
        maxiter = 10 * g.size
    fam = correlations(g, g, lat)
    S = lambda x: walnut_apply(fam, x)
    if method == "frame":
        return _frame_algorithm(S, rhs, bounds, tol, maxiter)
    if method != "cg":
        raise ValueError(f"unknown method {method!r}")
    x, iters = _cg(S, rhs, tol, maxiter)
    # restart from the iterate if the recursively updated residual drifted
    for _ in range(3):
        if np.linalg.norm(rhs - S(x)) <= tol * np.linalg.norm(rhs):
            break
        x, more = _cg(S, rhs, tol, maxiter, x0=x)
        iters += more
    return x, iters


def _frame_algorithm(S, rhs, bounds, tol, maxiter):
    lam = 2.0 / (bounds.A + bounds.B)
    x = np.zeros_like(rhs)
    target = tol * np.linalg.norm(rhs)
    for it in range(1, maxiter + 1):
        r = rhs - S(x)
        if np.linalg.norm(r) <= target:
            return x, it - 1
        x = x + lam * r
    raise NoConvergence(f"frame algorithm did not converge in {maxiter} iterations")


def dual_window(g, lat, tol=1e-12, method="cg", maxiter=None, return_info=False):
    """Canonical dual window ``S_g^{-1} g``.

    With ``return_info=True`` also returns a dict with the frame bounds, the
    iteration count and the final relative residual.
    """
    g = as_signal(g)
    bounds = frame_bounds(g, lat)
    gamma, iters = frame_solve(g, lat, g, tol=tol, maxiter=maxiter, method=method, bounds=bounds)
    if not return_info:
        return gamma
    fam = correlations(g, g, lat)
    resid = np.linalg.norm(walnut_apply(fam, gamma) - g) / np.linalg.norm(g)
    info = {"A": bounds.A, "B": bounds.B, "cond": bounds.cond,
            "iterations": iters, "residual": float(resid)}
    return gamma, info


def support_length(g):
    """Length of the shortest cyclic interval outside which ``g`` vanishes."""
    g = as_signal(g)
    L = g.shape[0]
    pos = np.flatnonzero(np.any(g != 0, axis=1))
    if pos.size == 0:
        return 0
    gaps = np.diff(np.append(pos, pos[0] + L))
    return int(L - gaps.max() + 1)


def painless_dual(g, lat, rcond=1e-12):
    """Closed-form dual for windows supported on at most ``L/b`` samples.

    There the frame operator is the pointwise multiplication by
    ``(L/b) G_0(l)`` and the dual is ``((L/b) G_0(l))^{-1} g(l)``.
    """
    g = as_signal(g)
    lat.check(g)
    if support_length(g) > lat.mlen:
        raise SupportTooWide(
            f"support of length {support_length(g)} exceeds L/b = {lat.mlen}")
    D = lat.mlen * correlations(g, g, lat).G[0]
    sv = np.linalg.svd(D, compute_uv=False)
    scale = max(sv.max(), np.finfo(float).tiny)
    if np.any(sv.min(axis=1) <= rcond * scale):
        bad = int(np.argmin(sv.min(axis=1)))
        raise SingularWeight(f"frame operator symbol is singular at l={bad}")
    return np.linalg.solve(D, g[..., None])[..., 0]


class TruncationStep(NamedTuple):
    K: int
    N: int
    err: float


def truncation_error_profile(f, g, gamma, lat, p=2, q=2, v=None, block=None, wr_tol=1e-6):
    """Errors of partial Gabor expansions over nested centred boxes.

    The box of radius ``r`` keeps coefficients with cyclic index distance
    ``<= min(r, N/2)`` in time and ``<= min(r, M/2)`` in frequency; the last
    box is the full lattice.  Errors are amalgam norms with block length
    ``block`` (default ``a``).
    """
    f, g, gamma = as_signal(f), as_signal(g), as_signal(gamma)
    ok, dev = wexler_raz_check(g, gamma, lat, tol=wr_tol)
    if not ok:
        raise NotDualPair(f"windows are not dual (max bracket deviation {dev:.3g})")
    prm = AmalgamParams(p, q, block or lat.a, v)
    c = analyze(f, g, lat).c
    dk = wrap_distance(np.arange(lat.ntime), lat.ntime)
    dm = wrap_distance(np.arange(lat.nfreq), lat.nfreq)
    kmax, mmax = lat.ntime // 2, lat.nfreq // 2
    steps = []
    for r in range(max(kmax, mmax) + 1):
        K, N = min(r, kmax), min(r, mmax)
        mask = (dk[:, None] <= K) & (dm[None, :] <= N)
        partial = synthesize(GaborCoefficients(lat, np.where(mask, c, 0)), gamma)
        steps.append(TruncationStep(K, N, amalgam_norm(f - partial, prm)))
    return steps


def inverse_frame_apply(g, lat, f, tol=1e-8):
    """``S_g^{-1} f`` computed two ways that must agree to ``tol``.

    One route solves ``S_g x = f`` by CG; the other applies the frame
    operator of the dual window, ``S_{gd, gd} f`` with ``gd = S_g^{-1} g``.
    """
    g, f = as_signal(g), as_signal(f)
    bounds = frame_bounds(g, lat)
    if not np.any(f):
        return np.zeros_like(f)
    x, _ = frame_solve(g, lat, f, tol=1e-13, bounds=bounds)
    gd, _ = frame_solve(g, lat, g, tol=1e-13, bounds=bounds)
    y = walnut_apply(correlations(gd, gd, lat), f)
    diff = np.linalg.norm(x - y)
    if diff > tol * np.linalg.norm(x):
        raise ConsistencyError(f"inverse frame routes disagree by {diff:.3g}")
    return x
