import json

import numpy as np
import pytest

from gaborsuper import (GaborCoefficients, GaborLattice, ShiftOperator, analyze,
                        correlations, janssen_coeffs, make_weight)
from gaborsuper import io
from gaborsuper.errors import DimensionError
from helpers import crandn


def roundtrip(obj):
    return json.loads(io.dumps(obj))


def test_signal_roundtrip():
    f = crandn(np.random.default_rng(0), 6, 3)
    obj = roundtrip(io.signal_to_json(f))
    assert obj["L"] == 6 and obj["n"] == 3 and obj["data"][0][0] == [f[0, 0].real, f[0, 0].imag]
    assert np.array_equal(io.signal_from_json(obj), f)


def test_signal_header_mismatch():
    obj = io.signal_to_json(np.ones((4, 1)))
    obj["n"] = 2
    with pytest.raises(DimensionError):
        io.signal_from_json(obj)


def test_coeffs_roundtrip():
    rng = np.random.default_rng(1)
    lat = GaborLattice(2, 4, 8)
    c = analyze(crandn(rng, 8, 2), crandn(rng, 8, 2), lat)
    back = io.coeffs_from_json(roundtrip(io.coeffs_to_json(c)))
    assert back.lattice == lat and np.array_equal(back.c, c.c)
    assert isinstance(back, GaborCoefficients)


def test_weight_roundtrip():
    for w in (make_weight("constant", 6), make_weight("polynomial", 6, s=1.5),
              make_weight("custom", 4, values=[1, 2, 3, 2])):
        back = io.weight_from_json(roundtrip(io.weight_to_json(w)))
        assert back.kind == w.kind and np.array_equal(back.values, w.values)


def test_shiftop_roundtrip():
    rng = np.random.default_rng(2)
    A = ShiftOperator(5, 2, {0: crandn(rng, 5, 2, 2), 3: crandn(rng, 5, 2, 2)})
    obj = roundtrip(io.shiftop_to_json(A))
    back = io.shiftop_from_json(obj)
    assert np.array_equal(back.dense(), A.dense())
    del obj["L"], obj["n"]
    assert np.array_equal(io.shiftop_from_json(obj).dense(), A.dense())


def test_walnut_dumps_shapes():
    rng = np.random.default_rng(3)
    lat = GaborLattice(2, 2, 8)
    g, gamma = crandn(rng, 8, 2), crandn(rng, 8, 2)
    G = roundtrip(io.correlations_to_json(correlations(g, gamma, lat)))["G"]
    B = roundtrip(io.janssen_to_json(janssen_coeffs(g, gamma, lat)))["B"]
    assert np.asarray(G).shape == (2, 8, 2, 2, 2)
    assert np.asarray(B).shape == (2, 2, 2, 2, 2)


def test_csv_rows():
    text = io.rows_to_csv(["K", "N", "err"], [(0, 0, 0.5), (1, 1, 1e-17)])
    assert text.splitlines() == ["K,N,err", "0,0,0.5", "1,1,1e-17"]
