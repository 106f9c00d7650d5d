"""The algebra of matrix-symbol weighted shifts on Z_L.

An operator ``sum_x m_x T_x`` acts by ``f -> sum_x m_x(l) f(l - x)``, where
each symbol ``m_x`` is an ``(L, n, n)`` array.  Dense matrices are recovered
with the same row-major flattening as :func:`gaborsuper.gabor.apply_dense`.
"""

from dataclasses import dataclass, field

import numpy as np

from .amalgam import weight_values
from .core import as_signal, op_norms, wrap_distance
from .errors import ConsistencyError, DimensionError, MultiTerm, Singular
from .walnut import CorrelationFamily


@dataclass(frozen=True, eq=False)
class ShiftOperator:
    L: int
    n: int
    terms: dict = field(default_factory=dict)

    def __post_init__(self):
        clean = {}
        for x, m in self.terms.items():
            m = np.asarray(m, dtype=complex)
            if m.shape != (self.L, self.n, self.n):
                raise DimensionError(
                    f"symbol at shift {x} has shape {m.shape}, expected {(self.L, self.n, self.n)}")
            x = int(x) % self.L
            clean[x] = clean[x] + m if x in clean else m
        object.__setattr__(self, "terms", clean)

    @classmethod
    def identity(cls, L, n=1):
        return cls(L, n, {0: np.broadcast_to(np.eye(n), (L, n, n))})

    @classmethod
    def from_correlations(cls, fam: CorrelationFamily):
        """Walnut operator: symbols ``(L/b) G_n`` at shifts ``n L/b``."""
        lat = fam.lattice
        return cls(lat.L, fam.channels,
                   {s * lat.mlen: lat.mlen * fam.G[s] for s in range(lat.b)})

    def dense(self):
        L, n = self.L, self.n
        A = np.zeros((L, n, L, n), dtype=complex)
        l = np.arange(L)
        for x, m in self.terms.items():
            A[l, :, (l - x) % L, :] += m
        return A.reshape(L * n, L * n)

    def pruned(self, atol=0.0):
        """Copy without terms whose symbols are all within ``atol`` of zero."""
        keep = {x: m for x, m in self.terms.items() if np.abs(m).max() > atol}
        return ShiftOperator(self.L, self.n, keep)


def _check_pair(A, B):
    if (A.L, A.n) != (B.L, B.n):
        raise DimensionError(f"operators act on different spaces: {(A.L, A.n)} vs {(B.L, B.n)}")


def shift_apply(A, f):
    f = as_signal(f)
    if f.shape != (A.L, A.n):
        raise DimensionError(f"signal shape {f.shape} does not match operator {(A.L, A.n)}")
    out = np.zeros_like(f)
    for x, m in A.terms.items():
        out += np.einsum("lij,lj->li", m, np.roll(f, x, axis=0))
    return out


def shift_compose(A, B):
    """Product ``A B``: the term at ``x`` is ``sum_y m_y(l) n_{x-y}(l - y)``."""
    _check_pair(A, B)
    L = A.L
    terms = {}
    for y, m in A.terms.items():
        for z, nz in B.terms.items():
            prod = np.einsum("lij,ljk->lik", m, np.roll(nz, y, axis=0))
            x = (y + z) % L
            terms[x] = terms[x] + prod if x in terms else prod
    return ShiftOperator(L, A.n, terms)


def shift_involution(A):
    """Adjoint: the term at ``x`` is ``m_{-x}(l - x)^H``."""
    L = A.L
    terms = {}
    for y, m in A.terms.items():
        x = (-y) % L
        terms[x] = np.conj(np.swapaxes(np.roll(m, x, axis=0), 1, 2))
    return ShiftOperator(L, A.n, terms)


def _modulation_phases(L, n):
    return np.repeat(np.arange(L), n)


def extract_coeffs(A, L, n=1, atol=1e-12):
    """Decompose a dense operator into ``sum_x m_x T_x``.

    The coefficient ``C_x`` is obtained as the character average
    ``(1/L) sum_y M_y A M_{-y} exp(-2 pi i y x / L)``, and independently by
    reading the x-th block diagonal.  The two must agree to ``atol`` (scaled
    by the largest entry of ``A``); the average must also vanish off that
    block diagonal.
    """
    A = np.asarray(A, dtype=complex)
    if A.shape != (L * n, L * n):
        raise DimensionError(f"dense operator has shape {A.shape}, expected {(L * n, L * n)}")
    scale = max(1.0, float(np.abs(A).max()))
    t = _modulation_phases(L, n)
    lag = (t[:, None] - t[None, :]) % L
    y = np.arange(L)
    A4 = A.reshape(L, n, L, n)
    l = np.arange(L)
    terms = {}
    worst = 0.0
    for x in range(L):
        # (1/L) sum_y exp(2 pi i y (d - x) / L) for each time lag d
        kernel = np.exp(2j * np.pi * np.outer(y, (np.arange(L) - x) % L) / L).mean(axis=0)
        C = (A * kernel[lag]).reshape(L, n, L, n)
        by_average = C[l, :, (l - x) % L, :]
        by_diagonal = A4[l, :, (l - x) % L, :]
        C[l, :, (l - x) % L, :] = 0
        worst = max(worst, np.abs(by_average - by_diagonal).max(), np.abs(C).max())
        if np.any(by_diagonal):
            terms[x] = by_diagonal
    if worst > atol * scale:
        raise ConsistencyError(f"coefficient extraction routes disagree by {worst:.3g}")
    return ShiftOperator(L, n, terms)


def algebra_norm(A, w=None):
    """``sum_x max_l |m_x(l)|_op w(x)``."""
    wv = weight_values(w, A.L)
    return float(sum(op_norms(m).max() * wv[x] for x, m in A.terms.items()))


def decay_profile(A, w=None):
    """Rows ``(x, max_l |m_x(l)|, w(x))`` for every shift of Z_L."""
    wv = weight_values(w, A.L)
    rows = []
    for x in range(A.L):
        m = A.terms.get(x)
        rows.append((x, float(op_norms(m).max()) if m is not None else 0.0, float(wv[x])))
    return rows


@dataclass(frozen=True)
class SpectralInverse:
    inverse: ShiftOperator
    profile: list
    cond: float
    roundtrip_error: float


def spectral_invert(A, w=None, tol=1e-8, seed=0, rcond=1e-12):
    """Invert ``A`` densely and decompose the inverse back into shifts.

    The round trip ``inverse(A f) = f`` is checked on a random signal and
    must hold to ``tol`` relative to ``|f|``.
    """
    import scipy.linalg

    D = A.dense()
    sv = np.linalg.svd(D, compute_uv=False)
    if sv[0] == 0 or sv[-1] <= rcond * sv[0]:
        ratio = sv[-1] / sv[0] if sv[0] else 0.0
        raise Singular(f"operator is singular (sigma_min/sigma_max = {ratio:.3g})")
    lu = scipy.linalg.lu_factor(D)
    Dinv = scipy.linalg.lu_solve(lu, np.eye(D.shape[0], dtype=complex))
    inv = extract_coeffs(Dinv, A.L, A.n)
    rng = np.random.default_rng(seed)
    f = rng.standard_normal((A.L, A.n)) + 1j * rng.standard_normal((A.L, A.n))
    err = float(np.linalg.norm(shift_apply(inv, shift_apply(A, f)) - f) / np.linalg.norm(f))
    if err > tol:
        raise ConsistencyError(f"spectral inverse round trip error {err:.3g} exceeds {tol:g}")
    return SpectralInverse(inv, decay_profile(inv, w), float(sv[0] / sv[-1]), err)


def rho_eigen_check(C, y, atol=1e-12):
    """Check ``M_y C M_{-y} = exp(2 pi i y x / L) C`` for a single-term ``C``."""
    if len(C.terms) != 1:
        raise MultiTerm(f"expected exactly one shift term, got {len(C.terms)}")
    (x,) = C.terms
    L, n = C.L, C.n
    D = C.dense()
    t = _modulation_phases(L, n)
    phase = np.exp(2j * np.pi * ((y * t) % L) / L)
    conj = phase[:, None] * D * np.conj(phase)[None, :]
    dev = float(np.abs(conj - np.exp(2j * np.pi * ((y * x) % L) / L) * D).max())
    return dev <= atol, dev


def decays_in_wrap_distance(profile, L, slack=0.1, floor=1e-12):
    """True if the largest symbol norm at each wrap distance is non-increasing.

    Distances whose norms are all below ``floor`` are ignored, and each value
    may exceed its predecessor by the relative ``slack``.
    """
    by_dist = {}
    for x, nrm, _ in profile:
        d = int(wrap_distance(x, L))
        by_dist[d] = max(by_dist.get(d, 0.0), nrm)
    seq = [by_dist[d] for d in sorted(by_dist) if by_dist[d] > floor]
    return all(b <= (1 + slack) * a for a, b in zip(seq, seq[1:]))
