"""Vector-channel signals on the cyclic group Z_L and elementary operators.

A signal is a complex array of shape ``(L, n)``: ``f[l, i]`` is channel ``i``
of the value ``f(l)`` in C^n.  One-dimensional input is promoted to a single
channel.  Every operation returns a fresh array and never mutates its input.
"""

import numpy as np

from .errors import DimensionError


def as_signal(f):
    """Return ``f`` as a complex ``(L, n)`` array (copying)."""
    arr = np.array(f, dtype=complex)
    if arr.ndim == 1:
        arr = arr[:, None]
    if arr.ndim != 2 or arr.shape[0] < 1 or arr.shape[1] < 1:
        raise DimensionError(f"signal must have shape (L, n), got {arr.shape}")
    return arr


def check_same_shape(*signals):
    shape = signals[0].shape
    for s in signals[1:]:
        if s.shape != shape:
            raise DimensionError(f"shape mismatch: {shape} vs {s.shape}")
    return shape


def zeros(L, n=1):
    return np.zeros((L, n), dtype=complex)


def delta(L, position=0, channel=0, n=1):
    """Unit impulse at ``position`` in the given channel."""
    f = zeros(L, n)
    f[position % L, channel] = 1.0
    return f


def translate(f, x):
    """``(T_x f)(l) = f(l - x)`` with indices taken mod L."""
    f = as_signal(f)
    return np.roll(f, int(x) % f.shape[0], axis=0)


def modulate(f, m):
    """``(M_m f)(l) = exp(2 pi i m l / L) f(l)``."""
    f = as_signal(f)
    L = f.shape[0]
    l = np.arange(L)
    phase = np.exp(2j * np.pi * ((int(m) * l) % L) / L)
    return phase[:, None] * f


def inner(f, g):
    """L^2 inner product, linear in ``f`` and conjugate-linear in ``g``."""
    f, g = as_signal(f), as_signal(g)
    check_same_shape(f, g)
    return complex(np.sum(f * np.conj(g)))


def norm(f):
    return float(np.linalg.norm(as_signal(f)))


def rank_one(x, y):
    """Matrix of ``x ⊙ y``, the map ``z -> <z, y> x``."""
    x = np.asarray(x, dtype=complex).ravel()
    y = np.asarray(y, dtype=complex).ravel()
    if x.shape != y.shape:
        raise DimensionError(f"dimension mismatch: {x.shape} vs {y.shape}")
    return np.outer(x, np.conj(y))


def rank_one_apply(x, y, z):
    x = np.asarray(x, dtype=complex).ravel()
    y = np.asarray(y, dtype=complex).ravel()
    z = np.asarray(z, dtype=complex).ravel()
    if not (x.shape == y.shape == z.shape):
        raise DimensionError("rank_one_apply needs vectors of equal dimension")
    return np.vdot(y, z) * x


def wrap_distance(x, L):
    """Distance from 0 on the cycle Z_L."""
    x = np.asarray(x) % L
    return np.minimum(x, L - x)


def op_norms(mats):
    """Spectral norms of a stack of square matrices along the last two axes."""
    mats = np.asarray(mats)
    if mats.shape[-1] == 1:
        return np.abs(mats[..., 0, 0])
    return np.linalg.norm(mats, ord=2, axis=(-2, -1))
