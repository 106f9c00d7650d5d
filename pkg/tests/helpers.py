"""Shared fixtures-by-function for the test suite."""

import numpy as np

from gaborsuper import GaborLattice


def divisors(L):
    return [d for d in range(1, L + 1) if L % d == 0]


def crandn(rng, *shape):
    return rng.standard_normal(shape) + 1j * rng.standard_normal(shape)


def lattices(Ls=(8, 16, 32)):
    for L in Ls:
        for a in divisors(L):
            for b in divisors(L):
                yield GaborLattice(a, b, L)


def random_instances(seed=0, Ls=(8, 16, 32), ns=(1, 2, 3)):
    """Every lattice of every L paired with every channel count, seeded."""
    rng = np.random.default_rng(seed)
    for lat in lattices(Ls):
        for n in ns:
            yield lat, crandn(rng, lat.L, n), crandn(rng, lat.L, n), crandn(rng, lat.L, n)


def frame_instances(seed=1, count=60, min_A=1e-8, max_cond=1e6):
    """Random redundant Gabor frames with moderate condition numbers."""
    from gaborsuper import frame_bounds

    rng = np.random.default_rng(seed)
    out = []
    pool = [lat for lat in lattices((8, 16)) if lat.ntime * lat.nfreq >= 2 * lat.L]
    while len(out) < count:
        lat = pool[rng.integers(len(pool))]
        n = int(rng.integers(1, 3))
        if lat.ntime * lat.nfreq < lat.L * n:
            continue
        g = crandn(rng, lat.L, n)
        fb = frame_bounds(g, lat)
        if fb.A > min_A and fb.cond < max_cond:
            out.append((lat, g, fb))
    return out


def half_sample_gaussian(L, var=None):
    """Gaussian exp(-pi t^2 / var) centred between samples 0 and 1."""
    var = var or L
    l = np.arange(L)
    t = (l - 0.5 + L / 2) % L - L / 2
    return np.exp(-np.pi * t ** 2 / var)[:, None].astype(complex)


def orthogonal_superframe():
    """Two channels on L=16 whose cross correlations vanish at a=b=2."""
    L = 16
    g = np.zeros((L, 2), dtype=complex)
    g[:8, 0] = 1
    g[:8, 1] = [1, 1, -1, -1, 1, 1, -1, -1]
    return GaborLattice(2, 2, L), g
