"""Three views of one frame operator.

A mixed Gabor frame operator on Z_L can be applied from explicit atoms, as a
short sum of matrix multiplications and translations (Walnut), or as a sum
over the adjoint lattice (Janssen).  This script builds all three for a
random two-channel window and shows they coincide.
"""
import numpy as np

from gaborsuper import GaborLattice, correlations, janssen_apply, janssen_coeffs, walnut_apply
from gaborsuper.gabor import apply_dense, frame_operator_direct

rng = np.random.default_rng(0)
L, n = 24, 2
lat = GaborLattice(a=3, b=4, L=L)
g = rng.standard_normal((L, n)) + 1j * rng.standard_normal((L, n))
gamma = rng.standard_normal((L, n)) + 1j * rng.standard_normal((L, n))
f = rng.standard_normal((L, n)) + 1j * rng.standard_normal((L, n))

dense = apply_dense(frame_operator_direct(g, gamma, lat), f)
fam = correlations(g, gamma, lat)
print(f"lattice a={lat.a}, b={lat.b}: {lat.ntime} translates x {lat.nfreq} modulations")
print(f"Walnut uses {lat.b} symbols G_n, each a-periodic with period {lat.a}")
print("walnut  vs atoms:", np.abs(walnut_apply(fam, f) - dense).max())
print("janssen vs atoms:", np.abs(janssen_apply(janssen_coeffs(g, gamma, lat), f) - dense).max())
