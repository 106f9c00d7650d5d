"""Walnut and Janssen representations of mixed Gabor frame operators.

With ``mlen = L/b`` the frame operator of the pair (g, gamma) is

    (S f)(l) = mlen * sum_{n < b} G_n(l) f(l - n mlen),
    G_n(l)   = sum_k gamma(l - k a) ⊙ g(l - k a - n mlen),

a sum of ``b`` matrix-valued multiplications composed with translations.
Expanding the a-periodic symbols ``G_n`` in Fourier series gives the Janssen
form over the adjoint lattice, with coefficients ``(L / ab) [gamma, M T g]``.
"""

from dataclasses import dataclass

import numpy as np

from .core import as_signal, check_same_shape, op_norms
from .amalgam import weight_values
from .errors import DimensionError
from .gabor import GaborLattice


@dataclass(frozen=True)
class CorrelationFamily:
    lattice: GaborLattice
    G: np.ndarray  # shape (b, L, n_gamma, n_g)

    @property
    def channels(self):
        return self.G.shape[-1]


@dataclass(frozen=True)
class JanssenTable:
    lattice: GaborLattice
    B: np.ndarray  # shape (a, b, n, n); B[j, n] multiplies M_{j L/a} T_{n L/b}


def correlations(g, gamma, lat):
    """Correlation symbols ``G_n(l)`` of the pair (g, gamma).

    The windows must share L but may differ in channel count, in which case
    ``G_n(l)`` is a rectangular ``n_gamma x n_g`` matrix.
    """
    g, gamma = as_signal(g), as_signal(gamma)
    if g.shape[0] != gamma.shape[0]:
        raise DimensionError(f"window lengths differ: {g.shape[0]} vs {gamma.shape[0]}")
    lat.check(g)
    L, a, b, mlen = lat.L, lat.a, lat.b, lat.mlen
    G = np.empty((b, L, gamma.shape[1], g.shape[1]), dtype=complex)
    for s in range(b):
        prod = np.einsum("li,lj->lij", gamma, np.conj(np.roll(g, s * mlen, axis=0)))
        # summing over k collapses each residue class mod a
        period = prod.reshape(L // a, a, *prod.shape[1:]).sum(axis=0)
        G[s] = np.tile(period, (L // a, 1, 1))
    return CorrelationFamily(lat, G)


def walnut_apply(fam, f):
    f = as_signal(f)
    lat, G = fam.lattice, fam.G
    if f.shape != (lat.L, G.shape[-1]):
        raise DimensionError(f"signal shape {f.shape} incompatible with correlations")
    out = np.zeros((lat.L, G.shape[-2]), dtype=complex)
    for s in range(lat.b):
        out += np.einsum("lij,lj->li", G[s], np.roll(f, s * lat.mlen, axis=0))
    return lat.mlen * out


def walnut_matrix(fam):
    """Dense matrix of the Walnut operator, assembled block by block."""
    lat, G = fam.lattice, fam.G
    L, n = lat.L, fam.channels
    S = np.zeros((L, n, L, n), dtype=complex)
    l = np.arange(L)
    for s in range(lat.b):
        S[l, :, (l - s * lat.mlen) % L, :] += lat.mlen * G[s]
    return S.reshape(L * n, L * n)


def correlation_weight_sum(fam, w=None):
    """``sum_n max_l |G_n(l)|_op * w(n L/b)``."""
    lat = fam.lattice
    sup = op_norms(fam.G).max(axis=1)
    wv = weight_values(w, lat.L)[lat.mlen * np.arange(lat.b)]
    return float(np.sum(sup * wv))


def janssen_coeffs(g, gamma, lat):
    g, gamma = as_signal(g), as_signal(gamma)
    check_same_shape(g, gamma)
    lat.check(g)
    L, a, b = lat.L, lat.a, lat.b
    l = np.arange(L)
    n = g.shape[1]
    B = np.empty((a, b, n, n), dtype=complex)
    for s in range(b):
        shifted = np.roll(g, s * lat.mlen, axis=0)
        for j in range(a):
            # conj of the modulation M_{j L/a} lands on the second factor
            phase = np.exp(-2j * np.pi * ((j * l) % a) / a)
            B[j, s] = np.einsum("l,li,lj->ij", phase, gamma, np.conj(shifted))
    return JanssenTable(lat, B * (L / (a * b)))


def janssen_apply(table, f):
    f = as_signal(f)
    lat, B = table.lattice, table.B
    L, a = lat.L, lat.a
    l = np.arange(L)
    out = np.zeros_like(f)
    for s in range(lat.b):
        shifted = np.roll(f, s * lat.mlen, axis=0)
        for j in range(a):
            phase = np.exp(2j * np.pi * ((j * l) % a) / a)
            out += phase[:, None] * (shifted @ B[j, s].T)
    return out


def wexler_raz_check(g, gamma, lat, tol=1e-10):
    """Biorthogonality test: brackets must equal ``delta_{j0} delta_{n0} I``.

    Returns ``(passed, max_dev)`` where ``max_dev`` is the largest operator
    norm of ``B[j, n] - delta I`` over the adjoint lattice.
    """
    B = janssen_coeffs(g, gamma, lat).B.copy()
    B[0, 0] -= np.eye(B.shape[-1])
    max_dev = float(op_norms(B).max())
    return max_dev <= tol, max_dev


def superframe_channelwise_apply(g, gamma, lat, f):
    """Super frame operator as a sum of per-channel contributions.

    Channel ``i`` of ``f`` is analysed with the scalar window ``g_i`` and
    resynthesised with the full vector window ``gamma``; the sum over channels
    is ``S_{g, gamma} f`` because vector coefficients add channel-wise.  When
    the cross-channel correlations vanish this reduces to the block-diagonal
    form ``f_i -> S_{g_i, gamma_i} f_i``.
    """
    g, gamma, f = as_signal(g), as_signal(gamma), as_signal(f)
    check_same_shape(g, gamma, f)
    total = np.zeros_like(f)
    for i in range(g.shape[1]):
        total += walnut_apply(correlations(g[:, [i]], gamma, lat), f[:, [i]])
    return total


def multiwindow_apply(windows, f):
    """Direct sum of frame operators with per-channel windows and lattices.

    ``windows`` is a list of ``(g_i, gamma_i, lattice_i)``; each ``g_i`` may
    carry several channels and the channels of ``f`` are consumed in order.
    """
    f = as_signal(f)
    widths = [as_signal(g).shape[1] for g, _, _ in windows]
    if sum(widths) != f.shape[1]:
        raise DimensionError(
            f"windows cover {sum(widths)} channels but the signal has {f.shape[1]}")
    parts, start = [], 0
    for (g, gamma, lat), width in zip(windows, widths):
        parts.append(walnut_apply(correlations(g, gamma, lat), f[:, start:start + width]))
        start += width
    return np.concatenate(parts, axis=1)


def multiwindow_frame_apply(windows, f):
    """Classical multi-window frame operator ``sum_i S_i f`` on a scalar signal."""
    f = as_signal(f)
    if f.shape[1] != 1:
        raise DimensionError("multi-window frame operator acts on scalar signals")
    out = multiwindow_apply(windows, np.repeat(f, len(windows), axis=1))
    return out.sum(axis=1, keepdims=True)
