"""Sending two signals through one coefficient sequence.

Stack two scalar signals as the channels of a vector signal, analyse with a
two-channel window and keep the single scalar coefficient array.  The dual
super-window recovers both channels.
"""
import numpy as np

from gaborsuper import GaborLattice, analyze, dual_window, frame_bounds, synthesize

L = 16
lat = GaborLattice(2, 2, L)
g = np.zeros((L, 2))
g[:8, 0] = 1
g[:8, 1] = [1, 1, -1, -1, 1, 1, -1, -1]
fb = frame_bounds(g, lat)
print(f"super frame bounds: A={fb.A:g}, B={fb.B:g}, redundancy {lat.redundancy:g}")

t = np.arange(L)
f1 = np.sin(2 * np.pi * t / L)
f2 = (t % 5 == 0).astype(float)
coeffs = analyze(np.stack([f1, f2], axis=1), g, lat)
print("one coefficient array of shape", coeffs.c.shape, "for two signals of length", L)

rec = synthesize(coeffs, dual_window(g, lat))
print("channel errors:", np.abs(rec[:, 0] - f1).max(), np.abs(rec[:, 1] - f2).max())
