"""Block-circulant unfolding and the DFT block diagonalization."""

import numpy as np
import pytest

from ttensor import (
    ConjugateSymmetryError,
    FourierSlices,
    RngStream,
    ShapeMismatchError,
    Tensor3,
    bcirc,
    fold,
    from_fourier,
    frobenius_norm,
    gen_random,
    identity,
    t_product,
    to_fourier,
    transpose,
    unfold,
)
from oracles import brute_bcirc


def test_bcirc_n3_1_is_the_slice():
    a = gen_random((3, 2, 1), RngStream(3))
    assert np.array_equal(bcirc(a).matrix, a.slice(0))


def test_bcirc_2x2x2_block_layout():
    a = gen_random((2, 2, 2), RngStream(4))
    a1, a2 = a.slice(0), a.slice(1)
    expected = np.block([[a1, a2], [a2, a1]])
    assert np.array_equal(bcirc(a).matrix, expected)


def test_bcirc_matches_brute_force():
    a = gen_random((3, 2, 5), RngStream(6))
    assert np.array_equal(bcirc(a).matrix, brute_bcirc(a.data))


def test_bcirc_eigenvalues_are_union_of_slice_eigenvalues():
    from scipy.optimize import linear_sum_assignment

    a = gen_random((3, 3, 4), RngStream(8))
    big = np.linalg.eigvals(bcirc(a).matrix)
    slicewise = np.concatenate([np.linalg.eigvals(s) for s in to_fourier(a).slices])
    cost = np.abs(big[:, None] - slicewise[None, :])
    rows, cols = linear_sum_assignment(cost)
    assert cost[rows, cols].max() < 1e-8


def test_unfold_identity_and_round_trip():
    eye = identity(2, 2)
    assert np.array_equal(unfold(eye), np.vstack([np.eye(2), np.zeros((2, 2))]))
    a = gen_random((3, 2, 5), RngStream(9))
    assert np.array_equal(fold(unfold(a), 3, 5).data, a.data)
    with pytest.raises(ShapeMismatchError):
        fold(np.zeros((7, 2)), 3, 2)


def test_t_product_equals_fold_bcirc_unfold():
    for seed in range(5):
        a = gen_random((3, 2, 4), RngStream(10, seed))
        b = gen_random((2, 5, 4), RngStream(11, seed))
        via_fourier = t_product(a, b)
        via_bcirc = fold(brute_bcirc(a.data) @ unfold(b), 3, 4)
        diff = frobenius_norm(via_fourier - via_bcirc)
        assert diff <= 1e-12 * (1 + frobenius_norm(via_fourier))


def test_to_fourier_n3_1_is_the_slice():
    a = gen_random((2, 3, 1), RngStream(12))
    fs = to_fourier(a)
    assert fs.n3 == 1 and np.abs(fs.slices[0] - a.slice(0)).max() < 1e-15


def test_two_point_transform_by_hand():
    # tube (0, 1): F_2 = [[1, 1], [1, -1]] gives slices (1, -1)
    t = Tensor3.from_flat([0.0, 1.0], 1, 1, 2)
    fs = to_fourier(t)
    assert fs.slices[0][0, 0] == pytest.approx(1.0)
    assert fs.slices[1][0, 0] == pytest.approx(-1.0)
    back = from_fourier(fs)
    assert np.allclose(back.data.ravel(), [0.0, 1.0], atol=1e-15)


def test_dft_block_diagonalizes_bcirc():
    a = gen_random((2, 2, 3), RngStream(13))
    n3 = 3
    jj = np.arange(n3)
    f = np.exp(-2j * np.pi / n3 * np.outer(jj, jj))
    left = np.kron(f, np.eye(2))
    right = np.kron(np.linalg.inv(f), np.eye(2))
    conjugated = left @ bcirc(a).matrix @ right
    fs = to_fourier(a)
    expected = np.zeros_like(conjugated)
    for k in range(n3):
        expected[2 * k:2 * k + 2, 2 * k:2 * k + 2] = fs.slices[k]
    assert np.abs(conjugated - expected).max() < 1e-10


def test_round_trip_and_conjugate_symmetry():
    a = gen_random((3, 3, 4), RngStream(14))
    fs = to_fourier(a)
    assert fs.origin_real
    assert fs.symmetry_residual() < 1e-12
    assert np.abs(from_fourier(fs).data - a.data).max() <= 1e-12


def test_from_fourier_rejects_asymmetric_data():
    # for n3 = 2 the second slice must be real
    bad = FourierSlices.from_list([np.array([[1.0 + 0j]]), np.array([[1j]])], True)
    with pytest.raises(ConjugateSymmetryError) as err:
        from_fourier(bad)
    assert err.value.residual > 0


def test_parseval_transport():
    for seed in range(10):
        a = gen_random((2, 4, 6), RngStream(15, seed))
        stacked_sq = sum(np.linalg.norm(s) ** 2 for s in to_fourier(a).slices)
        assert frobenius_norm(a) ** 2 * 6 == pytest.approx(stacked_sq, rel=1e-12)


def test_fourier_linearity():
    a = gen_random((2, 3, 4), RngStream(16))
    b = gen_random((2, 3, 4), RngStream(17))
    fa, fb, fsum = to_fourier(a), to_fourier(b), to_fourier(a + b)
    for k in range(4):
        assert np.abs(fsum.slices[k] - fa.slices[k] - fb.slices[k]).max() < 1e-12


def test_bcirc_is_multiplicative():
    a = gen_random((2, 3, 3), RngStream(18))
    b = gen_random((3, 2, 3), RngStream(19))
    lhs = bcirc(t_product(a, b)).matrix
    rhs = bcirc(a).matrix @ bcirc(b).matrix
    assert np.abs(lhs - rhs).max() <= 1e-10 * (1 + np.abs(rhs).max())


def test_transpose_transports_to_conjugate_slices():
    a = gen_random((3, 3, 4), RngStream(20))
    ft = to_fourier(transpose(a))
    fa = to_fourier(a)
    for k in range(4):
        assert np.abs(ft.slices[k] - fa.slices[k].conj().T).max() < 1e-12
