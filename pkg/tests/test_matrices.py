"""Matrix layer: arithmetic, involution, and the three bilinear forms."""

import math

import numpy as np
import pytest
from hypothesis import given, strategies as st

from solvgeom.matrices import (
    SquareComplexMatrix,
    bracket,
    cartan_involution,
    hermitian_part,
    inner_ambient,
    inner_solvable,
    killing_form,
    sl_matrix,
    solvable_parts,
)
from solvgeom.hypersurface import AMBIENT_BASIS, E12, E13, E23, H0, H1

V, W, Z0 = E12, E23, E13


def span(coeffs):
    """Real linear combination of the ambient orthonormal basis."""
    entries = sum(c * m.entries for c, m in zip(coeffs, AMBIENT_BASIS))
    return SquareComplexMatrix(entries)


coeff_vectors = st.lists(
    st.floats(-3.0, 3.0, allow_nan=False), min_size=8, max_size=8
)


class TestSquareComplexMatrix:
    def test_entries_read_only(self):
        m = SquareComplexMatrix(np.eye(2))
        with pytest.raises(ValueError):
            m.entries[0, 0] = 5.0

    def test_immutable_attributes(self):
        m = SquareComplexMatrix(np.eye(2))
        with pytest.raises(AttributeError):
            m.entries = np.zeros((2, 2))

    def test_rejects_non_square(self):
        with pytest.raises(ValueError, match="square"):
            SquareComplexMatrix(np.zeros((2, 3)))

    def test_dim_trace(self):
        m = SquareComplexMatrix([[1, 2], [3, 4j]])
        assert m.dim == 2
        assert m.trace == 1 + 4j

    def test_arithmetic(self):
        a = SquareComplexMatrix([[1, 0], [0, 1]])
        b = SquareComplexMatrix([[0, 1], [1, 0]])
        assert (a + b).allclose(SquareComplexMatrix([[1, 1], [1, 1]]))
        assert (a - b).allclose(SquareComplexMatrix([[1, -1], [-1, 1]]))
        assert (-a).allclose(SquareComplexMatrix([[-1, 0], [0, -1]]))
        assert (2j * b).allclose(SquareComplexMatrix([[0, 2j], [2j, 0]]))
        assert (b * 2j).allclose(SquareComplexMatrix([[0, 2j], [2j, 0]]))
        assert (b @ b).allclose(a)

    def test_dimension_mismatch(self):
        a = SquareComplexMatrix(np.eye(2))
        b = SquareComplexMatrix(np.eye(3))
        with pytest.raises(ValueError, match="dimension mismatch"):
            a + b

    def test_conjugate_transpose(self):
        m = SquareComplexMatrix([[1j, 2], [0, 0]])
        assert m.conjugate_transpose().allclose(
            SquareComplexMatrix([[-1j, 0], [2, 0]])
        )

    def test_max_abs(self):
        assert SquareComplexMatrix([[3j, 0], [0, -4]]).max_abs() == 4.0


class TestConstants:
    def test_basis_traceless(self):
        for m in AMBIENT_BASIS:
            assert abs(m.trace) <= 1e-15

    def test_h1_trace_exactly_zero(self):
        # 1/(2 sqrt 3) doubles exactly in binary, so the cancellation is exact
        assert H1.trace == 0.0

    def test_sl_matrix_rejects_trace(self):
        with pytest.raises(ValueError, match="traceless"):
            sl_matrix(np.eye(3))

    def test_ambient_basis_orthonormal(self):
        g = np.array(
            [[inner_solvable(a, b) for b in AMBIENT_BASIS] for a in AMBIENT_BASIS]
        )
        assert np.max(np.abs(g - np.eye(8))) <= 1e-15


class TestBracketsAndInvolution:
    def test_root_vector_brackets(self):
        assert bracket(V, W).allclose(Z0)
        assert bracket(1j * V, W).allclose(1j * Z0)
        assert bracket(V, 1j * W).allclose(1j * Z0)
        assert bracket(1j * V, 1j * W).allclose(-Z0)
        assert bracket(V, Z0).max_abs() <= 1e-15
        assert bracket(W, Z0).max_abs() <= 1e-15

    def test_diagonal_adjoint_eigenvalues(self):
        assert bracket(H0, V).allclose(0.5 * V)
        assert bracket(H0, W).allclose(0.5 * W)
        assert bracket(H0, Z0).allclose(1.0 * Z0)
        r = 1.0 / (2.0 * math.sqrt(3.0))
        assert bracket(H1, V).allclose(3.0 * r * V)
        assert bracket(H1, W).allclose(-3.0 * r * W)
        assert bracket(H1, Z0).max_abs() <= 1e-15

    def test_involution_squares_to_identity(self):
        m = SquareComplexMatrix([[1j, 2 + 1j, 0], [0, -2j, 1], [0, 0, 1j]])
        assert cartan_involution(cartan_involution(m)).allclose(m)

    @given(coeff_vectors, coeff_vectors)
    def test_involution_is_automorphism(self, u, v):
        x, y = span(u), span(v)
        lhs = cartan_involution(bracket(x, y))
        rhs = bracket(cartan_involution(x), cartan_involution(y))
        assert lhs.allclose(rhs, tol=1e-10)

    def test_jacobi_identity_on_random_triples(self):
        stack = np.stack([m.entries for m in AMBIENT_BASIS])
        rng = np.random.default_rng(17)
        x, y, z = np.einsum(
            "tnc,cij->tnij", rng.uniform(-2.0, 2.0, (3, 1000, 8)), stack
        )

        def comm(a, b):
            return a @ b - b @ a

        cyclic = comm(comm(x, y), z) + comm(comm(y, z), x) + comm(comm(z, x), y)
        assert np.max(np.abs(cyclic)) <= 1e-10


class TestForms:
    def test_killing_frozen_values(self):
        assert killing_form(H0, H0) == pytest.approx(6.0, abs=1e-14)
        assert killing_form(H1, H1) == pytest.approx(6.0, abs=1e-14)
        assert killing_form(H0, H1) == pytest.approx(0.0, abs=1e-14)
        assert killing_form(V, cartan_involution(V)) == pytest.approx(-12.0, abs=1e-14)
        assert killing_form(V, V) == pytest.approx(0.0, abs=1e-14)

    @given(coeff_vectors, coeff_vectors, coeff_vectors)
    def test_killing_ad_invariance(self, u, v, w):
        x, y, z = span(u), span(v), span(w)
        lhs = killing_form(bracket(x, y), z)
        rhs = -killing_form(y, bracket(x, z))
        assert lhs == pytest.approx(rhs, abs=1e-9)

    @given(coeff_vectors, coeff_vectors)
    def test_killing_involution_invariance(self, u, v):
        x, y = span(u), span(v)
        assert killing_form(cartan_involution(x), cartan_involution(y)) == pytest.approx(
            killing_form(x, y), abs=1e-10
        )

    def test_inner_ambient_frozen_values(self):
        assert inner_ambient(V, V) == pytest.approx(2.0, abs=1e-15)
        assert inner_ambient(H0, H0) == pytest.approx(1.0, abs=1e-15)
        assert inner_ambient(H1, H1) == pytest.approx(1.0, abs=1e-15)
        assert inner_ambient(V, W) == pytest.approx(0.0, abs=1e-15)

    @given(coeff_vectors, coeff_vectors)
    def test_inner_ambient_from_killing(self, u, v):
        # <X, Y> = -B(X, theta Y) / 6
        x, y = span(u), span(v)
        assert inner_ambient(x, y) == pytest.approx(
            -killing_form(x, cartan_involution(y)) / 6.0, abs=1e-9
        )

    @given(coeff_vectors, coeff_vectors)
    def test_inner_ambient_involution_invariance(self, u, v):
        x, y = span(u), span(v)
        assert inner_ambient(cartan_involution(x), cartan_involution(y)) == pytest.approx(
            inner_ambient(x, y), abs=1e-10
        )

    @given(coeff_vectors)
    def test_inner_ambient_positive(self, u):
        x = span(u)
        n = inner_ambient(x, x)
        assert n >= 0.0
        if max(abs(c) for c in u) > 1e-3:
            assert n > 0.0

    def test_hermitian_part_projects(self):
        m = SquareComplexMatrix([[1j, 2], [3, -1j]])
        p = hermitian_part(m)
        assert p.allclose(p.conjugate_transpose())
        assert hermitian_part(p).allclose(p)

    @given(coeff_vectors, coeff_vectors)
    def test_inner_solvable_via_hermitian_part(self, u, v):
        x, y = span(u), span(v)
        assert inner_solvable(x, y) == pytest.approx(
            inner_ambient(hermitian_part(x), hermitian_part(y)), abs=1e-10
        )

    def test_inner_solvable_frozen_values(self):
        assert inner_solvable(Z0, Z0) == pytest.approx(1.0, abs=1e-15)
        assert inner_solvable(H0, H0) == pytest.approx(1.0, abs=1e-15)
        assert inner_solvable(V, 1j * V) == pytest.approx(0.0, abs=1e-15)


class TestSolvableParts:
    def test_decomposition(self):
        m = SquareComplexMatrix([[1.0, 2j, 3], [0, -2.0, 1j], [0, 0, 1.0]])
        upper, diag = solvable_parts(m)
        assert np.allclose(diag, [1.0, -2.0, 1.0])
        assert upper[0, 1] == 2j and upper[1, 2] == 1j and upper[0, 2] == 3
        assert upper[0, 0] == 0

    def test_rejects_lower_entries(self):
        with pytest.raises(ValueError, match="lower"):
            solvable_parts(SquareComplexMatrix([[0, 0], [1, 0]]))

    def test_rejects_complex_diagonal(self):
        with pytest.raises(ValueError, match="real"):
            solvable_parts(SquareComplexMatrix([[1j, 0], [0, -1j]]))

    def test_rejects_nonzero_trace(self):
        with pytest.raises(ValueError, match="trace"):
            solvable_parts(SquareComplexMatrix(np.eye(3)))

    @given(coeff_vectors, coeff_vectors)
    def test_bracket_closure(self, u, v):
        # [s, s] lies in the nilpotent part, so decomposition never fails
        out = bracket(span(u), span(v))
        upper, diag = solvable_parts(out, tol=1e-9)
        assert np.max(np.abs(diag)) <= 1e-9
