"""Dual windows and the Wexler-Raz test.

A short window has a closed-form dual; a generic one needs an iterative solve.
Either way the pair is checked by the biorthogonality brackets and by
reconstructing a signal from its coefficients.
"""
import numpy as np

from gaborsuper import (GaborLattice, analyze, dual_window, frame_bounds, painless_dual,
                        synthesize, wexler_raz_check)

lat = GaborLattice(2, 2, 4)
g = np.array([1.0, 1.0, 0.0, 0.0])
print("painless dual of [1,1,0,0]:", painless_dual(g, lat)[:, 0].real)
print("bracket check (g, g/2):", wexler_raz_check(g, g / 2, lat))
print("bracket check (g, g):  ", wexler_raz_check(g, g, lat))

rng = np.random.default_rng(1)
lat = GaborLattice(2, 2, 16)
g = rng.standard_normal((16, 2)) + 1j * rng.standard_normal((16, 2))
fb = frame_bounds(g, lat)
gd, info = dual_window(g, lat, return_info=True)
print(f"\nrandom 2-channel window: A={fb.A:.3f} B={fb.B:.3f} cond={fb.cond:.1f}")
print(f"CG iterations {info['iterations']}, residual {info['residual']:.1e}")
print("dual frame bounds (1/B, 1/A):", (frame_bounds(gd, lat).A, frame_bounds(gd, lat).B), (1 / fb.B, 1 / fb.A))
f = rng.standard_normal((16, 2)) + 1j * rng.standard_normal((16, 2))
print("reconstruction error:", np.linalg.norm(synthesize(analyze(f, g, lat), gd) - f))
