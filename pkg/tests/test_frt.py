from collections import Counter

import numpy as np
import pytest

from jfrt.frt import (
    commuting_matrix,
    dfrt_basis,
    dfrt_matrix,
    dft_matrix,
    frt_apply_rows,
    hermite_indices,
    zero_crossings,
)

ORDERS = [0, 0.25, 0.5, 1, 1.5, 2, 3.7]
SIZES = [4, 5, 8, 17, 64, 129, 256]


def fft_oracle(T):
    return np.fft.fft(np.eye(T), axis=0, norm="ortho")


class TestDft:
    def test_small_closed_forms(self):
        np.testing.assert_allclose(dft_matrix(1), [[1]])
        np.testing.assert_allclose(dft_matrix(2), np.array([[1, 1], [1, -1]]) / np.sqrt(2), atol=1e-15)

    @pytest.mark.parametrize("T", [3, 4, 50, 257])
    def test_matches_fft_and_unitary(self, T):
        f = dft_matrix(T)
        np.testing.assert_allclose(f, fft_oracle(T), atol=1e-12)
        assert np.linalg.norm(f @ f.conj().T - np.eye(T)) <= 1e-12 * T


class TestBasis:
    def test_index_map(self):
        assert hermite_indices(4) == [0, 1, 2, 4]
        assert hermite_indices(5) == [0, 1, 2, 3, 4]
        assert dfrt_basis(6).index_map == (0, 1, 2, 3, 4, 6)

    def test_dft_multiplicities_n4(self):
        # brute-force eigenvalues of the 4-point DFT, bucketed into {1, -j, -1, j}
        classes = [1, -1j, -1, 1j]
        eig = np.linalg.eigvals(dft_matrix(4))
        counts = Counter(int(np.argmin([abs(e - c) for c in classes])) for e in eig)
        assert [counts[i] for i in range(4)] == [2, 1, 1, 0]
        mine = Counter(k % 4 for k in dfrt_basis(4).index_map)
        assert [mine[i] for i in range(4)] == [2, 1, 1, 0]

    @pytest.mark.parametrize("N", [2, 3, 4, 7, 8, 31, 64, 100])
    def test_eigenvectors_of_dft(self, N):
        b = dfrt_basis(N)
        u, f = b.hermite_vectors, dft_matrix(N)
        assert np.linalg.norm(u.conj().T @ u - np.eye(N)) <= 1e-10
        for k, col in zip(b.index_map, u.T):
            assert np.linalg.norm(f @ col - (-1j) ** k * col) <= 1e-8
        assert np.allclose(np.imag(u), 0)

    @pytest.mark.parametrize("N", [2, 3, 8, 33, 128])
    def test_ground_state_positive(self, N):
        assert np.all(np.real(dfrt_basis(N).hermite_vectors[:, 0]) > 0)

    def test_zero_crossings_n8(self):
        b = dfrt_basis(8)
        counts = [zero_crossings(c) for c in b.hermite_vectors.T]
        assert sum(counts) == sum(b.index_map)

    @pytest.mark.parametrize("N", range(2, 48))
    def test_zero_crossings_equal_index(self, N):
        b = dfrt_basis(N)
        assert [zero_crossings(c) for c in b.hermite_vectors.T] == list(b.index_map)

    def test_commutes_with_dft(self):
        for N in (5, 12):
            s, f = commuting_matrix(N), dft_matrix(N)
            np.testing.assert_allclose(s @ f, f @ s, atol=1e-12)

    def test_cached_and_read_only(self):
        assert dfrt_basis(9) is dfrt_basis(9)
        with pytest.raises(ValueError):
            dfrt_basis(9).hermite_vectors[0, 0] = 1.0
        with pytest.raises(ValueError):
            dfrt_basis(1)


class TestDfrtMatrix:
    @pytest.mark.parametrize("N", [2, 5, 8, 50])
    def test_order_zero(self, N):
        assert np.abs(dfrt_matrix(N, 0) - np.eye(N)).max() <= 1e-10

    def test_order_one_is_dft(self):
        assert np.abs(dfrt_matrix(8, 1) - dft_matrix(8)).max() <= 1e-8

    def test_half_squared(self):
        h = dfrt_matrix(8, 0.5)
        assert np.abs(h @ h - dfrt_matrix(8, 1)).max() <= 1e-8

    @pytest.mark.parametrize("N", SIZES)
    def test_unitarity_and_additivity_grid(self, N):
        mats = {a: dfrt_matrix(N, a) for a in ORDERS}
        for a, m in mats.items():
            assert np.linalg.norm(m @ m.conj().T - np.eye(N)) <= 1e-8 * N
        for a in ORDERS:
            for b in ORDERS:
                assert np.linalg.norm(mats[a] @ mats[b] - dfrt_matrix(N, a + b)) <= 1e-7 * N

    @pytest.mark.parametrize("N", [6, 11])
    def test_period_four(self, N):
        np.testing.assert_allclose(dfrt_matrix(N, 0.3 + 4), dfrt_matrix(N, 0.3), atol=1e-10)

    def test_eigen_relation(self):
        b = dfrt_basis(10)
        for alpha in (0.37, 1.9):
            m = dfrt_matrix(10, alpha)
            for k, col in zip(b.index_map, b.hermite_vectors.T):
                assert np.linalg.norm(m @ col - np.exp(-1j * np.pi * k * alpha / 2) * col) <= 1e-7


class TestApplyRows:
    def test_identity(self, rng):
        X = rng.standard_normal((3, 7))
        np.testing.assert_allclose(frt_apply_rows(X, 0), X, atol=1e-12)

    def test_constant_row(self):
        T, c = 9, 2.5
        out = frt_apply_rows(np.full((1, T), c), 1)
        expected = np.zeros(T)
        expected[0] = c * np.sqrt(T)
        np.testing.assert_allclose(out[0], expected, atol=1e-12)

    def test_order_two_is_reversal(self, rng):
        X = rng.standard_normal((2, 8))
        f = dft_matrix(8)
        np.testing.assert_allclose(f @ f, np.eye(8)[(-np.arange(8)) % 8], atol=1e-12)
        np.testing.assert_allclose(frt_apply_rows(X, 2), X[:, (-np.arange(8)) % 8], atol=1e-10)

    def test_rows_are_independent(self, rng):
        X = rng.standard_normal((4, 6))
        out = frt_apply_rows(X, 0.6)
        for i in range(4):
            np.testing.assert_allclose(out[i], dfrt_matrix(6, 0.6) @ X[i], atol=1e-12)
