"""Parity and ring-law checks for the term-arithmetic kernels."""

import pytest
from hypothesis import given, strategies as st

from coloredsym import _poly_py
from coloredsym._backend import BACKEND

try:
    from coloredsym import _speedups
except ImportError:
    _speedups = None

KERNELS = [_poly_py] + ([_speedups] if _speedups is not None else [])


def term_maps(nvars=4, max_exp=5, max_terms=6):
    key = st.binary(min_size=nvars, max_size=nvars).map(
        lambda b: bytes(x % (max_exp + 1) for x in b)
    )
    coeff = st.integers(min_value=-(10**6), max_value=10**6).filter(bool)
    return st.dictionaries(key, coeff, max_size=max_terms)


def test_backend_is_known():
    assert BACKEND in ("python", "compiled")


@pytest.mark.skipif(_speedups is None, reason="compiled kernels unavailable")
@given(term_maps(), term_maps())
def test_mul_parity(a, b):
    assert _poly_py.mul_terms(a, b) == _speedups.mul_terms(dict(a), dict(b))


@pytest.mark.skipif(_speedups is None, reason="compiled kernels unavailable")
@given(term_maps(), term_maps(), st.integers(min_value=-9, max_value=9))
def test_add_parity(a, b, coeff):
    assert _poly_py.add_terms(dict(a), b, coeff) == _speedups.add_terms(
        dict(a), b, coeff
    )


@pytest.mark.parametrize("kernel", KERNELS, ids=lambda m: m.__name__)
@given(a=term_maps(), b=term_maps())
def test_mul_commutes(kernel, a, b):
    assert kernel.mul_terms(a, b) == kernel.mul_terms(b, a)


@pytest.mark.parametrize("kernel", KERNELS, ids=lambda m: m.__name__)
def test_mul_edge_cases(kernel):
    one = {bytes(3): 1}
    p = {bytes((1, 0, 2)): 5, bytes((0, 1, 0)): -3}
    assert kernel.mul_terms(p, {}) == {}
    assert kernel.mul_terms(p, one) == p
    # (x - y) * (x + y) == x^2 - y^2 : cancellation drops the cross terms
    x, y = bytes((1, 0)), bytes((0, 1))
    left = {x: 1, y: -1}
    right = {x: 1, y: 1}
    assert kernel.mul_terms(left, right) == {bytes((2, 0)): 1, bytes((0, 2)): -1}


@pytest.mark.parametrize("kernel", KERNELS, ids=lambda m: m.__name__)
def test_add_cancellation(kernel):
    acc = {bytes((1, 1)): 2}
    kernel.add_terms(acc, {bytes((1, 1)): 1}, -2)
    assert acc == {}
