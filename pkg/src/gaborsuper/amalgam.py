"""Weights on Z_L and weighted amalgam norms W(l^p, l^q_v).

Weights use the wrap distance on the cycle, so the polynomial weight
``(1 + dist(l))^s`` is submultiplicative.  On a finite group every positive
weight is bounded, hence the Gelfand-Raikov-Shilov condition holds trivially
and moderateness always holds with a finite constant.
"""

from dataclasses import dataclass, field

import numpy as np

from .core import as_signal, translate, wrap_distance
from .errors import (AsymmetryError, DimensionError, NonPositive,
                     SubmultiplicativityError)

KINDS = ("constant", "polynomial", "custom")


@dataclass(frozen=True)
class Weight:
    values: np.ndarray = field(repr=False)
    kind: str = "custom"
    s: float = None
    is_submultiplicative: bool = False

    @property
    def L(self):
        return len(self.values)

    @property
    def grs(self):
        # w(kx)^(1/k) -> 1 because w is bounded on a finite group.
        return True

    @property
    def is_admissible(self):
        return self.is_submultiplicative and np.isclose(self.values[0], 1.0)

    def __call__(self, x):
        return self.values[np.asarray(x) % self.L]

    def reciprocal(self):
        return make_weight("custom", self.L, values=1.0 / self.values)


def _submultiplicative(values, rtol=1e-12):
    L = len(values)
    x = np.arange(L)
    lhs = values[(x[:, None] + x[None, :]) % L]
    rhs = values[:, None] * values[None, :]
    return bool(np.all(lhs <= rhs * (1 + rtol)))


def make_weight(kind, L, s=None, values=None, submultiplicative=None):
    """Build and validate a weight on Z_L.

    ``submultiplicative=True`` asserts the property and raises
    :class:`SubmultiplicativityError` if the exhaustive check fails; the
    resulting flag is always the computed one.
    """
    if kind not in KINDS:
        raise ValueError(f"unknown weight kind {kind!r}")
    if kind == "constant":
        vals = np.ones(L)
    elif kind == "polynomial":
        if s is None or s < 0:
            raise ValueError("polynomial weight needs s >= 0")
        vals = (1.0 + wrap_distance(np.arange(L), L)) ** float(s)
    else:
        if values is None:
            raise ValueError("custom weight needs values")
        vals = np.asarray(values, dtype=float).ravel()
        if len(vals) != L:
            raise DimensionError(f"weight has {len(vals)} values, expected L={L}")
    if np.any(~np.isfinite(vals)) or np.any(vals <= 0):
        raise NonPositive("weight values must be finite and strictly positive")
    if not np.allclose(vals, vals[(-np.arange(L)) % L], rtol=1e-12, atol=0):
        raise AsymmetryError("weight must satisfy w(l) = w(-l)")
    sub = _submultiplicative(vals)
    if submultiplicative and not sub:
        raise SubmultiplicativityError("weight violates w(x + y) <= w(x) w(y)")
    vals.setflags(write=False)
    return Weight(vals, kind, None if s is None else float(s), sub)


def weight_values(v, L):
    """Values of ``v`` on Z_L; ``None`` means the constant weight 1."""
    if v is None:
        return np.ones(L)
    vals = v.values if isinstance(v, Weight) else np.asarray(v, dtype=float)
    if len(vals) != L:
        raise DimensionError(f"weight length {len(vals)} does not match L={L}")
    return vals


def moderate_constant(v, w):
    """Least C with ``v(x + y) <= C w(x) v(y)`` for all x, y."""
    vv, ww = np.asarray(v.values, float), np.asarray(w.values, float)
    if len(vv) != len(ww):
        raise DimensionError("weights live on different groups")
    L = len(vv)
    x = np.arange(L)
    ratio = vv[(x[:, None] + x[None, :]) % L] / (ww[:, None] * vv[None, :])
    return float(ratio.max())


def conjugate_exponent(p):
    if p == 1:
        return np.inf
    if np.isinf(p):
        return 1.0
    return p / (p - 1.0)


@dataclass(frozen=True)
class AmalgamParams:
    p: float = 2.0
    q: float = 2.0
    block: int = 1
    v: Weight = None

    def __post_init__(self):
        if self.p < 1 or self.q < 1:
            raise ValueError("exponents must satisfy 1 <= p, q <= inf")
        if int(self.block) < 1:
            raise ValueError("block must be a positive integer")


def _lp(x, p, axis=-1):
    if np.isinf(p):
        return np.max(x, axis=axis)
    return np.sum(x ** p, axis=axis) ** (1.0 / p)


def block_norms(f, p, block):
    """Per-block l^p norm of the pointwise H-norm ``|f(l)|``."""
    f = as_signal(f)
    L = f.shape[0]
    if L % block:
        raise ValueError(f"block={block} must divide L={L}")
    pointwise = np.linalg.norm(f, axis=1)
    return _lp(pointwise.reshape(L // block, block), p, axis=1)


def amalgam_norm(f, prm):
    f = as_signal(f)
    L = f.shape[0]
    local = block_norms(f, prm.p, prm.block)
    v = weight_values(prm.v, L)[prm.block * np.arange(L // prm.block)]
    return float(_lp(local * v, prm.q, axis=0))


def periodization_bound_check(g, a):
    """Compare ``max_l sum_k |g(l - k a)|`` with ``(1/a + 1) |g|_{W(inf, 1)}``."""
    g = as_signal(g)
    L = g.shape[0]
    if L % a:
        raise ValueError(f"a={a} must divide L={L}")
    pointwise = np.linalg.norm(g, axis=1)
    lhs = float(pointwise.reshape(L // a, a).sum(axis=0).max())
    rhs = (1.0 / a + 1.0) * amalgam_norm(g, AmalgamParams(np.inf, 1, a, None))
    return lhs, rhs, bool(lhs <= rhs + 1e-12)


def translation_norm_check(f, x, prm, w):
    """One-sided check of ``|T_x f| <= C_v w(x) |f|`` in W(l^p, l^q_v).

    ``x`` must be a multiple of the block length: the inequality is a
    statement about lattice translations and fails for misaligned shifts
    when p < q.
    """
    f = as_signal(f)
    L = f.shape[0]
    if x % prm.block:
        raise ValueError(f"shift {x} is not a multiple of block {prm.block}")
    v = prm.v if prm.v is not None else make_weight("constant", L)
    lhs = amalgam_norm(translate(f, x), prm)
    rhs = moderate_constant(v, w) * float(w(x)) * amalgam_norm(f, prm)
    return lhs, rhs, bool(lhs <= rhs + 1e-12)


def holder_pairing_check(f, g, prm):
    """``|sum_l <f(l), g(l)>|`` against the product of the dual amalgam norms."""
    f, g = as_signal(f), as_signal(g)
    L = f.shape[0]
    v = prm.v if prm.v is not None else make_weight("constant", L)
    dual = AmalgamParams(conjugate_exponent(prm.p), conjugate_exponent(prm.q),
                         prm.block, v.reciprocal())
    lhs = abs(np.sum(f * np.conj(g)))
    rhs = amalgam_norm(f, AmalgamParams(prm.p, prm.q, prm.block, v)) * amalgam_norm(g, dual)
    return float(lhs), float(rhs), bool(lhs <= rhs + 1e-12)


def block_equivalence_constant(L, a1, a2, v=None):
    """Constant C with ``|f|_{block a1} <= C |f|_{block a2}`` for all p, q.

    Every a1-block is covered by the a2-blocks meeting it, so the local norm
    is at most the sum of those; the Schur test bounds the resulting
    incidence operator on l^q by the larger of its row and column counts, and
    the weight changes by at most the worst ratio over meeting pairs.
    """
    if L % a1 or L % a2:
        raise ValueError("block sizes must divide L")
    vals = weight_values(v, L)
    n1, n2 = L // a1, L // a2
    meet = np.zeros((n1, n2), dtype=bool)
    for k in range(n1):
        cells = np.arange(k * a1, (k + 1) * a1)
        meet[k, np.unique(cells // a2)] = True
    ratio = vals[a1 * np.arange(n1)][:, None] / vals[a2 * np.arange(n2)][None, :]
    rho = ratio[meet].max()
    spread = max(meet.sum(axis=1).max(), meet.sum(axis=0).max())
    return float(rho * spread)


def correlation_sum_constant(L, a, b, w):
    """Constant C(a, b, w) bounding ``sum_n |G_n|_inf w(n L/b)``.

    The bound is ``C |g|_{W(inf, 1_w)} |gamma|_{W(inf, 1_w)}`` with blocks of
    length ``a``.  Each product ``gamma(l - k a) g(l - k a - n L/b)`` touches
    the block of ``gamma`` and at most two neighbouring blocks of ``g``; the
    constant counts how often a block offset can recur over ``n`` and absorbs
    the sub-block remainder through ``max_{|t| < a} w(t)``.
    """
    if L % a or L % b:
        raise ValueError("a and b must divide L")
    N, mlen = L // a, L // b
    hits = np.zeros(N, dtype=int)
    for n in range(b):
        s, r = divmod(n * mlen, a)
        hits[s % N] += 1
        if r:
            hits[(s + 1) % N] += 1
    wvals = weight_values(w, L)
    t = np.arange(-(a - 1), a)
    return float(hits.max() * wvals[t % L].max())
