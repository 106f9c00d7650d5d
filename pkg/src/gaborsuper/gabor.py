"""Analysis and synthesis for vector-channel Gabor systems on Z_L.

The lattice has time step ``a`` and frequency step ``b``; the atoms are
``M_{m b} T_{k a} g`` for ``k < L/a`` and ``m < L/b``.  Coefficients are scalars:
``c[k, m] = <f, M_{mb} T_{ka} g>`` sums the inner products of all channels.
"""

from dataclasses import dataclass

import numpy as np

from .amalgam import weight_values
from .core import as_signal, check_same_shape, modulate, translate
from .errors import DimensionError, LatticeError


@dataclass(frozen=True)
class GaborLattice:
    a: int
    b: int
    L: int

    def __post_init__(self):
        for name in ("a", "b", "L"):
            if int(getattr(self, name)) < 1:
                raise LatticeError(f"{name} must be a positive integer")
        if self.L % self.a or self.L % self.b:
            raise LatticeError(f"a={self.a} and b={self.b} must both divide L={self.L}")

    @property
    def ntime(self):
        """Number of translates, L/a."""
        return self.L // self.a

    @property
    def nfreq(self):
        """Number of modulations, L/b."""
        return self.L // self.b

    @property
    def mlen(self):
        """Walnut shift length L/b (the discrete 1/beta)."""
        return self.L // self.b

    @property
    def redundancy(self):
        return self.ntime * self.nfreq / self.L

    def check(self, f):
        if f.shape[0] != self.L:
            raise DimensionError(f"signal length {f.shape[0]} does not match lattice L={self.L}")


@dataclass(frozen=True)
class GaborCoefficients:
    lattice: GaborLattice
    c: np.ndarray

    def __post_init__(self):
        lat = self.lattice
        if self.c.shape != (lat.ntime, lat.nfreq):
            raise DimensionError(
                f"coefficients shape {self.c.shape} != ({lat.ntime}, {lat.nfreq})")


def atom(g, lat, k, m):
    return modulate(translate(g, k * lat.a), m * lat.b)


def analyze(f, g, lat):
    f, g = as_signal(f), as_signal(g)
    check_same_shape(f, g)
    lat.check(f)
    L, a, N, mlen = lat.L, lat.a, lat.ntime, lat.mlen
    l = np.arange(L)
    idx = (l[None, :] - a * np.arange(N)[:, None]) % L
    # h[k, l] = <f(l), g(l - ka)>_H
    h = np.einsum("kli,li->kl", np.conj(g[idx]), f)
    folded = h.reshape(N, lat.b, mlen).sum(axis=1)
    return GaborCoefficients(lat, np.fft.fft(folded, axis=1))


def _block_symbols(c, lat):
    """m_k(x) = sum_m c[k, m] exp(2 pi i m x / mlen) for x in [0, mlen)."""
    return np.fft.ifft(c, axis=1) * lat.mlen


def synthesize(coeffs, g):
    lat, c = coeffs.lattice, coeffs.c
    g = as_signal(g)
    lat.check(g)
    sym = np.tile(_block_symbols(c, lat), (1, lat.b))
    out = np.zeros_like(g)
    for k in range(lat.ntime):
        out += sym[k][:, None] * np.roll(g, k * lat.a, axis=0)
    return out


def frame_operator_direct(g, gamma, lat):
    """Dense ``(L n) x (L n)`` matrix of ``f -> sum <f, M T g> M T gamma``.

    Built from explicit atoms; serves as the reference for the fast paths.
    The flattening is row-major, so block ``(l, l')`` is the n x n matrix
    coupling ``f(l')`` into the output at ``l``.
    """
    g, gamma = as_signal(g), as_signal(gamma)
    check_same_shape(g, gamma)
    lat.check(g)
    atoms_g, atoms_y = [], []
    for k in range(lat.ntime):
        for m in range(lat.nfreq):
            atoms_g.append(atom(g, lat, k, m).ravel())
            atoms_y.append(atom(gamma, lat, k, m).ravel())
    return np.array(atoms_y).T @ np.conj(np.array(atoms_g))


def apply_dense(S, f):
    f = as_signal(f)
    return (S @ f.ravel()).reshape(f.shape)


def _pnorm(x, p, axis):
    if np.isinf(p):
        return np.max(x, axis=axis)
    return np.sum(x ** p, axis=axis) ** (1.0 / p)


def coeff_norm_spq(coeffs, p, q, v=None):
    """Mixed norm of Gabor coefficients.

    Each row ``k`` is turned into the trigonometric polynomial ``m_k`` on
    ``[0, L/b)``; its normalized l^p norm is weighted by ``v(a k)`` and the
    rows are combined in l^q.  At p = q = 2 with ``v = 1`` this equals the
    plain l^2 norm of ``c`` (Parseval).
    """
    if p < 1 or q < 1:
        raise ValueError("exponents must satisfy 1 <= p, q <= inf")
    lat = coeffs.lattice
    vals = np.abs(_block_symbols(coeffs.c, lat))
    if np.isinf(p):
        block = vals.max(axis=1)
    else:
        block = np.mean(vals ** p, axis=1) ** (1.0 / p)
    w = weight_values(v, lat.L)[lat.a * np.arange(lat.ntime)]
    return float(_pnorm(block * w, q, axis=0))
