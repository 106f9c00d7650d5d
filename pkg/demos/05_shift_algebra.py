"""Frame operators as weighted shifts, and their inverses.

The Walnut form writes the frame operator as a finite sum of matrix symbols
times translations.  Inverting the dense matrix and reading the result back
into shifts shows the inverse has the same kind of structure, with symbol
norms that fall off away from shift zero.
"""
import numpy as np

from gaborsuper import (GaborLattice, ShiftOperator, algebra_norm, correlations,
                        make_weight, spectral_invert)

L = 32
lat = GaborLattice(2, 4, L)
l = np.arange(L)
t = (l - 0.5 + L / 2) % L - L / 2
g = np.exp(-np.pi * t ** 2 / L)
S = ShiftOperator.from_correlations(correlations(g, g, lat))
w = make_weight("polynomial", L, s=1)
print("shifts in S:", sorted(S.terms), f"weighted norm {algebra_norm(S, w):.3f}")

res = spectral_invert(S, w)
print(f"cond {res.cond:.3f}, round trip {res.roundtrip_error:.1e}")
for x, nrm, wx in res.profile:
    if nrm > 1e-14:
        print(f"  x={x:2d}  |m_x|={nrm:.3e}  w(x)={wx:g}")
