import numpy as np
import pytest
from hypothesis import given, strategies as st
from hypothesis.extra.numpy import arrays

from paley_lp.spectral import (GridFunction, cosine_transform, dft, folded_cosine, inverse_dft,
                               is_fourier_nonneg, orbits, reversal, unfold)

from .oracles import naive_dft

finite = st.floats(-1e3, 1e3, allow_nan=False)


def vectors(min_n=1, max_n=40):
    return st.integers(min_n, max_n).flatmap(lambda n: arrays(float, n, elements=finite))


@pytest.mark.parametrize("f,expected", [
    ([1, 0, 0, 0], [1, 1, 1, 1]),
    ([1, 1, 1, 1], [4, 0, 0, 0]),
    ([0, 1, 0, 1], [2, 0, -2, 0]),
])
def test_dft_examples(f, expected):
    assert np.allclose(naive_dft(f), expected, atol=1e-12)
    assert np.allclose(dft(f), expected, atol=1e-12)


def test_dft_matches_loop_oracle():
    rng = np.random.default_rng(1)
    for n in (1, 2, 3, 7, 12, 30):
        v = rng.normal(size=n)
        assert np.allclose(dft(v), naive_dft(v), atol=1e-10)


def test_fast_path_agrees():
    rng = np.random.default_rng(7)
    for n in range(2, 65):
        for _ in range(100):
            v = rng.normal(size=n)
            ref = dft(v)
            assert np.max(np.abs(dft(v, fast=True) - ref)) <= 1e-9 * max(1.0, np.max(np.abs(ref)))


def test_cosine_examples():
    assert np.allclose(cosine_transform([1, 0, 0, 0, 0]).values, 1.0)
    assert np.allclose(cosine_transform([0, 1, 0, 0, 0, 1]).values, [2, 1, -1, -2, -1, 1], atol=1e-12)


@pytest.mark.parametrize("f,expected", [([1, 2, 3, 4], [1, 4, 3, 2]), ([5, 1, 2, 1], [5, 1, 2, 1])])
def test_reversal(f, expected):
    assert reversal(f).tolist() == expected


@given(vectors())
def test_reversal_involution(v):
    assert np.array_equal(reversal(reversal(v)).values, v)


@given(vectors())
def test_even_cosine_equals_real_dft(v):
    even = (v + reversal(v).values) / 2
    d = dft(even)
    scale = 1 + np.abs(v).sum()
    assert np.max(np.abs(d.imag)) <= 1e-10 * scale
    assert np.allclose(cosine_transform(even).values, d.real, atol=1e-10 * scale)


@given(vectors(), vectors(), finite)
def test_linearity(u, v, a):
    n = min(len(u), len(v))
    u, v = u[:n], v[:n]
    scale = 1 + abs(a) * np.abs(u).sum() + np.abs(v).sum()
    assert np.allclose(dft(a * u + v), a * dft(u) + dft(v), atol=1e-10 * scale)
    assert np.allclose(cosine_transform(a * u + v).values,
                       a * cosine_transform(u).values + cosine_transform(v).values, atol=1e-10 * scale)


@given(vectors())
def test_dft_zero_is_sum(v):
    assert abs(dft(v)[0] - v.sum()) <= 1e-12 * (1 + np.abs(v).sum())


@given(vectors())
def test_reversal_commutes_with_cosine(v):
    lhs = cosine_transform(reversal(v)).values
    rhs = reversal(cosine_transform(v)).values
    assert np.allclose(lhs, rhs, atol=1e-10 * (1 + np.abs(v).sum()))


@given(vectors())
def test_inverse_round_trip(v):
    assert np.allclose(inverse_dft(dft(v)).real, v, atol=1e-9 * (1 + np.abs(v).max()))


def test_is_fourier_nonneg_examples():
    assert is_fourier_nonneg([1, 0, 0, 0], 0.0)
    assert not is_fourier_nonneg([0, 1, 0, 0], 1e-9)
    assert is_fourier_nonneg([2, 1, 0, 1], 1e-9)
    assert np.allclose(cosine_transform([2, 1, 0, 1]).values, [4, 2, 0, 2], atol=1e-12)


def test_is_fourier_nonneg_vs_complex_dft():
    rng = np.random.default_rng(3)
    tol = 1e-9
    agree_pos = 0
    for i in range(100):
        n = int(rng.integers(2, 30))
        if i % 2:
            w = rng.random(n)  # nonnegative spectrum by construction
            v = cosine_transform((w + reversal(w).values) / 2).values / n
        else:
            v = rng.normal(size=n)
        v = (v + reversal(v).values) / 2
        d = np.array(naive_dft(list(v)))
        direct = bool(np.all(np.abs(d.imag) <= tol) and np.all(d.real >= -tol))
        assert is_fourier_nonneg(v, tol) == direct
        agree_pos += direct
    assert agree_pos >= 40


def test_orbits():
    assert orbits(6) == [(0,), (1, 5), (2, 4), (3,)]
    assert orbits(5, {1, 4}) == [(1, 4)]
    with pytest.raises(ValueError):
        orbits(6, {1})


@given(st.integers(1, 30), st.data())
def test_folded_cosine_matches_full(n, data):
    orbs = orbits(n)
    x = np.array(data.draw(st.lists(finite, min_size=len(orbs), max_size=len(orbs))))
    f = unfold(n, orbs, x)
    full = cosine_transform(f).values
    folded = folded_cosine(n, orbs) @ x
    assert np.allclose(folded, full[: n // 2 + 1], atol=1e-9 * (1 + np.abs(x).sum()))


def test_gridfunction_rejects_nonfinite():
    with pytest.raises(ValueError):
        GridFunction([1.0, np.nan])
