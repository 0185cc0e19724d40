import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from chm8 import perms
from chm8.errors import DimensionMismatch, NonUnimodularInput
from chm8.families import eval_family, reference_point
from chm8.verify import (
    dephase,
    fourier,
    gram_residual,
    hadamard_product,
    is_butson,
    is_hadamard,
    unimodular_deviation,
)

F8 = fourier(8)

# exponents of the order-8 Butson matrix over sixth roots of unity
B1_EXPONENTS = np.array(
    [
        [0, 0, 0, 0, 0, 0, 0, 0],
        [0, 0, 0, 0, 3, 3, 3, 3],
        [0, 1, 3, 4, 0, 2, 3, 5],
        [0, 2, 5, 3, 4, 5, 2, 1],
        [0, 3, 2, 5, 2, 5, 1, 4],
        [0, 3, 4, 1, 5, 2, 0, 3],
        [0, 4, 1, 3, 3, 2, 5, 0],
        [0, 5, 3, 2, 1, 5, 4, 2],
    ]
)


def random_diag(rng, n=8):
    return np.exp(2j * np.pi * rng.random(n))


def test_fourier_is_affine_family_at_origin():
    assert np.allclose(eval_family("F8", (0, 0, 0, 0, 0)), F8, atol=1e-15)


def test_gram_residual_examples():
    assert gram_residual(F8) < 1e-12
    assert gram_residual(np.ones((8, 8))) == pytest.approx(8.0)
    p, b = reference_point("T8E")
    assert gram_residual(eval_family("T8E", p, b)) < 1e-9


def test_is_hadamard_examples():
    assert is_hadamard(F8)
    bad = F8.copy()
    bad[3, 4] *= 1.01
    assert not is_hadamard(bad)
    assert is_hadamard(eval_family("B1"))


def test_dephase_examples(rng):
    assert np.allclose(dephase(F8).dephased, F8, atol=1e-14)
    scaled = random_diag(rng)[:, None] * F8 * random_diag(rng)[None, :]
    assert np.allclose(dephase(scaled).dephased, F8, atol=1e-10)
    B1 = eval_family("B1")
    assert np.allclose(dephase(B1).dephased, B1, atol=1e-14)


def test_dephase_returns_diagonals(rng):
    H = random_diag(rng)[:, None] * eval_family("T8C", *reference_point("T8C")) * random_diag(rng)
    res = dephase(H)
    assert np.allclose(res.d1[:, None] * H * res.d2[None, :], res.dephased, atol=1e-12)
    assert np.allclose(np.abs(res.d1), 1) and np.allclose(np.abs(res.d2), 1)
    assert np.allclose(res.dephased[0], 1, atol=1e-10)
    assert np.allclose(res.dephased[:, 0], 1, atol=1e-10)


def test_dephase_rejects_non_unimodular():
    with pytest.raises(NonUnimodularInput):
        dephase(2 * F8)


@settings(max_examples=50, deadline=None)
@given(st.integers(0, 2**32 - 1))
def test_dephase_idempotent_and_invariant(seed):
    rng = np.random.default_rng(seed)
    H = eval_family("T8E", tuple(rng.uniform(-np.pi, np.pi, 3)))
    once = dephase(H).dephased
    assert np.max(np.abs(dephase(once).dephased - once)) < 1e-12
    scaled = random_diag(rng)[:, None] * H * random_diag(rng)[None, :]
    assert np.max(np.abs(dephase(scaled).dephased - once)) < 1e-10


@settings(max_examples=50, deadline=None)
@given(st.integers(0, 2**32 - 1))
def test_hadamard_closure(seed):
    rng = np.random.default_rng(seed)
    H = eval_family("D8A", tuple(rng.uniform(-np.pi, np.pi, 5)))
    moved = random_diag(rng)[:, None] * perms.apply(rng.permutation(8), H, rng.permutation(8))
    for M in (H, H.T, H.conj(), moved):
        assert is_hadamard(M)


def test_butson_examples():
    check = is_butson(eval_family("B1"), 6)
    assert check.is_butson
    assert np.array_equal(check.logs, B1_EXPONENTS)
    assert is_butson(F8, 8).is_butson
    assert not is_butson(eval_family("V8A"), 24).is_butson


def test_butson_logs_reproduce_entries():
    check = is_butson(F8, 8)
    assert np.allclose(np.exp(2j * np.pi * check.logs / 8), F8, atol=1e-10)


def test_hadamard_product(rng):
    B = eval_family("B1")
    assert np.array_equal(hadamard_product(np.ones((8, 8)), B), B)
    assert np.allclose(hadamard_product(B, B.conj()), 1)
    with pytest.raises(DimensionMismatch):
        hadamard_product(np.ones((2, 2)), np.ones((3, 3)))


def test_unimodular_deviation():
    M = F8.copy()
    M[0, 0] = 1.5
    assert unimodular_deviation(M) == pytest.approx(0.5)
