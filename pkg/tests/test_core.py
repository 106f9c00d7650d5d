import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from gaborsuper.core import (as_signal, check_same_shape, delta, inner, modulate, norm,
                             op_norms, rank_one, rank_one_apply, translate, wrap_distance)
from gaborsuper.errors import DimensionError
from helpers import crandn


def test_as_signal_promotes_and_copies():
    x = np.arange(4.0)
    f = as_signal(x)
    assert f.shape == (4, 1) and f.dtype == complex
    f[0] = 9
    assert x[0] == 0


def test_shape_mismatch():
    with pytest.raises(DimensionError):
        check_same_shape(np.zeros((4, 1)), np.zeros((4, 2)))


def test_translate_delta():
    f = translate(delta(8, 0), 3)
    assert f[3, 0] == 1 and np.count_nonzero(f) == 1
    assert np.allclose(translate(delta(8, 0), -1), delta(8, 7))


def test_modulate_matches_definition():
    rng = np.random.default_rng(0)
    f = crandn(rng, 12, 2)
    l = np.arange(12)[:, None]
    assert np.allclose(modulate(f, 5), np.exp(2j * np.pi * 5 * l / 12) * f)


@settings(max_examples=50, deadline=None)
@given(st.integers(0, 2**31), st.integers(-40, 40), st.integers(-40, 40))
def test_commutation_relation(seed, x, m):
    # M_m T_x = e^{2 pi i m x / L} T_x M_m
    rng = np.random.default_rng(seed)
    L = 16
    f = crandn(rng, L, 2)
    lhs = modulate(translate(f, x), m)
    rhs = np.exp(2j * np.pi * m * x / L) * translate(modulate(f, m), x)
    assert np.allclose(lhs, rhs, atol=1e-12)


@settings(max_examples=50, deadline=None)
@given(st.integers(0, 2**31))
def test_time_frequency_shifts_are_unitary(seed):
    rng = np.random.default_rng(seed)
    f, g = crandn(rng, 10, 3), crandn(rng, 10, 3)
    x, m = rng.integers(-20, 20, size=2)
    assert np.isclose(inner(modulate(translate(f, x), m), modulate(translate(g, x), m)), inner(f, g))
    assert np.isclose(norm(f) ** 2, inner(f, f).real)


def test_rank_one_operator():
    rng = np.random.default_rng(1)
    x, y, z = crandn(rng, 3), crandn(rng, 3), crandn(rng, 3)
    assert np.allclose(rank_one(x, y) @ z, rank_one_apply(x, y, z))
    assert np.allclose(rank_one_apply(x, y, z), np.vdot(y, z) * x)


def test_wrap_distance():
    assert list(wrap_distance(np.arange(8), 8)) == [0, 1, 2, 3, 4, 3, 2, 1]


def test_op_norms_scalar_and_matrix():
    mats = np.array([[[3.0]], [[-2.0]]])
    assert np.allclose(op_norms(mats), [3, 2])
    assert np.isclose(op_norms(np.diag([1.0, 4.0])), 4.0)
