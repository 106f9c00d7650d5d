import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from gaborsuper import AmalgamParams, amalgam_norm, make_weight, moderate_constant
from gaborsuper.amalgam import (block_equivalence_constant, conjugate_exponent,
                                holder_pairing_check, periodization_bound_check,
                                translation_norm_check)
from gaborsuper.errors import AsymmetryError, NonPositive, SubmultiplicativityError
from helpers import crandn, divisors

exponents = st.sampled_from([1.0, 1.5, 2.0, 3.0, np.inf])


def test_weight_kinds():
    w = make_weight("polynomial", 8, s=1)
    assert list(w.values) == [1, 2, 3, 4, 5, 4, 3, 2]
    assert w.is_submultiplicative and w.is_admissible and w.grs
    assert w(-1) == 2
    assert np.allclose(w.reciprocal().values * w.values, 1)
    assert make_weight("constant", 5).is_admissible


def test_weight_errors():
    with pytest.raises(NonPositive):
        make_weight("custom", 4, values=[1, 0, 1, 1])
    with pytest.raises(AsymmetryError):
        make_weight("custom", 4, values=[1, 2, 3, 4])
    with pytest.raises(SubmultiplicativityError):
        make_weight("custom", 4, values=[1, 3, 10, 3], submultiplicative=True)
    with pytest.raises(ValueError):
        make_weight("exponential", 4)


def test_moderate_constant_of_self_is_weight_at_zero_bound():
    w = make_weight("polynomial", 12, s=2)
    assert moderate_constant(w, w) <= 1 + 1e-12


def test_amalgam_special_cases():
    rng = np.random.default_rng(0)
    f = crandn(rng, 12, 2)
    pointwise = np.linalg.norm(f, axis=1)
    assert np.isclose(amalgam_norm(f, AmalgamParams(2, 2, 3)), np.linalg.norm(f))
    assert np.isclose(amalgam_norm(f, AmalgamParams(np.inf, 1, 1)), pointwise.sum())
    assert np.isclose(amalgam_norm(f, AmalgamParams(np.inf, np.inf, 4)), pointwise.max())


def test_conjugate_exponent():
    assert conjugate_exponent(1) == np.inf
    assert conjugate_exponent(np.inf) == 1
    assert conjugate_exponent(2) == 2


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 2**31), st.sampled_from([1, 2, 3, 4, 6, 12]))
def test_periodization_bound(seed, a):
    rng = np.random.default_rng(seed)
    lhs, rhs, ok = periodization_bound_check(crandn(rng, 24, 2), a)
    assert ok and lhs <= rhs + 1e-12


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 2**31), exponents, exponents, st.sampled_from([1, 2, 4]))
def test_translation_bound(seed, p, q, block):
    rng = np.random.default_rng(seed)
    L = 16
    v = make_weight("polynomial", L, s=float(rng.uniform(0, 2)))
    w = make_weight("polynomial", L, s=v.s + float(rng.uniform(0, 1)))
    x = block * int(rng.integers(0, L // block))
    assert translation_norm_check(crandn(rng, L, 2), x, AmalgamParams(p, q, block, v), w)[2]


def test_translation_requires_aligned_shift():
    with pytest.raises(ValueError):
        translation_norm_check(np.ones(8), 1, AmalgamParams(2, 2, 2), make_weight("constant", 8))


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 2**31), exponents, exponents, st.sampled_from([1, 2, 4]))
def test_holder_pairing(seed, p, q, block):
    rng = np.random.default_rng(seed)
    L = 16
    v = make_weight("polynomial", L, s=float(rng.uniform(0, 2)))
    f, g = crandn(rng, L, 2), crandn(rng, L, 2)
    assert holder_pairing_check(f, g, AmalgamParams(p, q, block, v))[2]


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 2**31), exponents, exponents, st.data())
def test_block_equivalence(seed, p, q, data):
    L = 24
    a1 = data.draw(st.sampled_from(divisors(L)))
    a2 = data.draw(st.sampled_from(divisors(L)))
    rng = np.random.default_rng(seed)
    v = make_weight("polynomial", L, s=1.0)
    f = crandn(rng, L, 2) * (rng.random((L, 1)) < 0.5)
    C = block_equivalence_constant(L, a1, a2, v)
    lhs = amalgam_norm(f, AmalgamParams(p, q, a1, v))
    rhs = amalgam_norm(f, AmalgamParams(p, q, a2, v))
    assert lhs <= C * rhs * (1 + 1e-12) + 1e-12
