"""Partial Gabor expansions over growing boxes.

Keep only coefficients whose time and frequency indices are within r of the
origin and measure what is left in an amalgam norm.  For signals concentrated
near the origin the error falls as the box grows; the full box reconstructs.
"""
import numpy as np

from gaborsuper import GaborLattice, dual_window, frame_bounds, truncation_error_profile

L = 64
lat = GaborLattice(8, 8, L)
l = np.arange(L)
t = (l - 0.5 + L / 2) % L - L / 2
g = np.exp(-np.pi * t ** 2 / L)  # centred between samples; on-sample it is not a frame here
fb = frame_bounds(g, lat)
print(f"Gaussian at critical density: A={fb.A:.3f}, B={fb.B:.3f}")
gd = dual_window(g, lat)

chirp = np.exp(1j * np.pi * l ** 2 / L)
for p, q in ((2, 2), (1, np.inf)):
    print(f"\nchirp, p={p}, q={q}")
    for step in truncation_error_profile(chirp, g, gd, lat, p=p, q=q):
        print(f"  K={step.K} N={step.N} err={step.err:.3e}")
