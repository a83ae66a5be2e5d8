"""Tensor storage, structural operations, norms, and generators."""

import numpy as np
import pytest

from ttensor import (
    ComplexTensor3,
    RngStream,
    ShapeMismatchError,
    Tensor3,
    frobenius_norm,
    fourier_frobenius_norm,
    gen_commuting_psd_pair,
    gen_loewner_pair,
    gen_random,
    gen_symmetric,
    gen_t_psd,
    identity,
    inner_product,
    is_t_psd,
    loewner_ge,
    spectral_norm,
    t_product,
    to_fourier,
    transpose,
)
from oracles import brute_bcirc, direct_inner_product, power_iteration_norm


def test_layout_round_trip():
    # entry (i, j, k) written then read lands at flat index (k*n1 + i)*n2 + j
    n1, n2, n3 = 3, 4, 5
    data = np.arange(n1 * n2 * n3, dtype=float).reshape(n1, n2, n3)
    t = Tensor3(data)
    flat = t.to_flat()
    for i in range(n1):
        for j in range(n2):
            for k in range(n3):
                assert flat[(k * n1 + i) * n2 + j] == data[i, j, k]
    back = Tensor3.from_flat(flat, n1, n2, n3)
    assert np.array_equal(back.data, data)


def test_construction_rejects_bad_entries():
    with pytest.raises(ValueError):
        Tensor3(np.array([[[np.nan]]]))
    with pytest.raises(ValueError):
        Tensor3(np.array([[[np.inf]]]))
    with pytest.raises(ValueError):
        Tensor3(np.zeros((2, 2)))
    with pytest.raises(ShapeMismatchError):
        Tensor3.from_flat([1.0, 2.0], 1, 1, 1)
    with pytest.raises(ValueError):
        ComplexTensor3(np.array([[[1 + 1j * np.inf]]]))


def test_tensor_is_immutable():
    t = Tensor3(np.zeros((2, 2, 2)))
    with pytest.raises(AttributeError):
        t.data = np.ones((2, 2, 2))
    with pytest.raises(ValueError):
        t.data[0, 0, 0] = 1.0


def test_transpose_n3_equals_1_is_matrix_transpose():
    m = np.array([[1.0, 2.0, 3.0], [4.0, 5.0, 6.0]])
    t = Tensor3(m[:, :, None])
    assert np.array_equal(transpose(t).data[:, :, 0], m.T)


def test_transpose_involution_and_linearity():
    rng = RngStream(101)
    a = gen_random((3, 2, 4), rng)
    b = gen_random((3, 2, 4), RngStream(101, 1))
    assert np.array_equal(transpose(transpose(a)).data, a.data)
    lhs = transpose(a + b)
    rhs = transpose(a) + transpose(b)
    assert np.array_equal(lhs.data, rhs.data)


def test_transpose_matches_bcirc_transpose():
    a = gen_random((3, 2, 4), RngStream(7))
    assert np.array_equal(brute_bcirc(transpose(a).data), brute_bcirc(a.data).T)


def test_identity_structure_and_law():
    eye = identity(3, 4)
    assert np.array_equal(eye.slice(0), np.eye(3))
    assert np.abs(eye.data[:, :, 1:]).max() == 0.0
    assert np.array_equal(brute_bcirc(eye.data), np.eye(12))
    a = gen_random((3, 5, 4), RngStream(11))
    assert frobenius_norm(t_product(eye, a) - a) < 1e-12
    # every Fourier slice of the identity is the identity matrix
    for s in to_fourier(eye).slices:
        assert np.abs(s - np.eye(3)).max() < 1e-14


def test_inner_product_examples():
    a = gen_random((2, 3, 2), RngStream(5))
    zeros = Tensor3.zeros(2, 3, 2)
    assert inner_product(a, zeros) == 0.0
    assert inner_product(a, a) == pytest.approx(frobenius_norm(a) ** 2, rel=1e-14)
    x = Tensor3(np.ones((2, 1, 2)))
    y = Tensor3.from_flat([1.0, 2.0, 3.0, 4.0], 2, 1, 2)
    assert inner_product(x, y) == 10.0
    assert inner_product(x, y) == direct_inner_product(x.data, y.data)
    with pytest.raises(ShapeMismatchError):
        inner_product(x, a)


def test_norms_on_identity():
    eye = identity(4, 3)
    assert frobenius_norm(eye) == pytest.approx(2.0, abs=1e-15)
    assert spectral_norm(eye) == pytest.approx(1.0, abs=1e-12)


def test_frobenius_fourier_transport():
    # ||a||_F equals the stacked Fourier norm divided by sqrt(n3)
    for seed in range(10):
        a = gen_random((3, 4, 5), RngStream(23, seed))
        stacked = fourier_frobenius_norm(to_fourier(a))
        assert frobenius_norm(a) == pytest.approx(stacked / np.sqrt(5), rel=1e-12)


def test_spectral_norm_against_power_iteration():
    a = gen_random((3, 3, 4), RngStream(29))
    oracle = power_iteration_norm(brute_bcirc(a.data))
    assert spectral_norm(a) == pytest.approx(oracle, rel=1e-10)


def test_generator_determinism():
    for maker in (
        lambda r: gen_random((2, 3, 4), r),
        lambda r: gen_symmetric(3, 2, r),
        lambda r: gen_t_psd(2, 3, r),
    ):
        t1 = maker(RngStream(77, 5))
        t2 = maker(RngStream(77, 5))
        assert np.array_equal(t1.data, t2.data)
        t3 = maker(RngStream(77, 6))
        assert not np.array_equal(t1.data, t3.data)


def test_gen_symmetric_exact():
    a = gen_symmetric(4, 3, RngStream(31))
    assert frobenius_norm(a - transpose(a)) == 0.0


@pytest.mark.parametrize("seed", range(100))
def test_gen_t_psd_is_psd(seed):
    a = gen_t_psd(3, 3, RngStream(500, seed))
    assert is_t_psd(a, 1e-10).holds


@pytest.mark.parametrize("seed", range(100))
def test_gen_loewner_pair_orders(seed):
    a, b = gen_loewner_pair(2, 3, RngStream(600, seed))
    assert loewner_ge(a, b).holds
    assert loewner_ge(b, Tensor3.zeros(2, 2, 3)).holds


@pytest.mark.parametrize("seed", range(100))
def test_gen_commuting_pair_commutes(seed):
    a, b = gen_commuting_psd_pair(2, 2, RngStream(700, seed))
    comm = frobenius_norm(t_product(a, b) - t_product(b, a))
    assert comm <= 1e-10 * (1 + frobenius_norm(a) * frobenius_norm(b))
    assert is_t_psd(a, 1e-9).holds and is_t_psd(b, 1e-9).holds


def test_degenerate_dims_are_first_class():
    one = gen_random((1, 1, 1), RngStream(1))
    assert one.shape == (1, 1, 1)
    assert spectral_norm(one) == pytest.approx(abs(one.data[0, 0, 0]), rel=1e-14)
    flat = gen_random((3, 3, 1), RngStream(2))
    assert spectral_norm(flat) == pytest.approx(
        np.linalg.svd(flat.slice(0), compute_uv=False)[0], rel=1e-12
    )
