"""Weighted amalgam norms and the inequalities they satisfy.

Local l^p norms over blocks, weighted and combined in l^q, control
periodizations, lattice translations and the pairing of two signals.
"""
import numpy as np

from gaborsuper import AmalgamParams, amalgam_norm, make_weight
from gaborsuper.amalgam import (holder_pairing_check, periodization_bound_check,
                                translation_norm_check)

rng = np.random.default_rng(2)
L = 24
f = rng.standard_normal((L, 2)) + 1j * rng.standard_normal((L, 2))
v = make_weight("polynomial", L, s=1)
w = make_weight("polynomial", L, s=2)
for p, q in ((1, 1), (2, 2), (np.inf, 1)):
    print(f"p={p}, q={q}, block 4:", round(amalgam_norm(f, AmalgamParams(p, q, 4, v)), 3))

print("periodization (lhs, rhs, ok):", periodization_bound_check(f, 4))
prm = AmalgamParams(2, 1, 4, v)
print("translation by 8:", translation_norm_check(f, 8, prm, w))
print("pairing:", holder_pairing_check(f, f[::-1], prm))
