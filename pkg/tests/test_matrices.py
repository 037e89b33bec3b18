"""Generators, bases, generator identities, embeddings, Gram-Schmidt."""

import math

import numpy as np
import pytest

from lgh import matrices as M
from lgh.errors import DegeneracyError, ValidationError

SQ2 = math.sqrt(2.0)


def test_generator_e():
    assert np.array_equal(M.generator("E", (1, 2), 2), np.array([[0, 1], [0, 0]], dtype=complex))


def test_generator_y():
    expect = np.array([[0, 1 / SQ2], [-1 / SQ2, 0]], dtype=complex)
    assert np.allclose(M.generator("Y", (1, 2), 2), expect, atol=0)


def test_generator_x():
    expect = np.array([[0, 1 / SQ2], [1 / SQ2, 0]], dtype=complex)
    assert np.allclose(M.generator("X", (1, 2), 2), expect, atol=0)


def test_generator_d():
    assert np.array_equal(M.generator("D", 2, 3), np.diag([0, 1, 0]).astype(complex))


def test_generator_index_errors():
    with pytest.raises(ValidationError):
        M.generator("E", (0, 1), 2)
    with pytest.raises(ValidationError):
        M.generator("X", (2, 1), 3)
    with pytest.raises(ValidationError):
        M.generator("D", 4, 3)
    with pytest.raises(ValidationError):
        M.generator("Z", (1, 2), 3)


def test_so3_basis_is_three_rotations():
    basis = M.compact_basis(M.SO(3))
    assert len(basis) == 3
    expected = [M.generator("Y", p, 3) for p in [(1, 2), (1, 3), (2, 3)]]
    for vec, exp in zip(basis, expected):
        assert vec.sign == 1
        assert np.allclose(vec.matrix, exp, atol=0)


def test_u2_basis_size():
    assert len(M.compact_basis(M.U(2))) == 4


def test_sp1_basis_matches_diagonal_set():
    basis = M.compact_basis(M.Sp(1))
    assert len(basis) == 3
    exp = [
        np.array([[1j, 0], [0, -1j]]) / SQ2,
        np.array([[0, 1j], [1j, 0]]) / SQ2,
        np.array([[0, 1], [-1, 0]]) / SQ2,
    ]
    for vec, target in zip(basis, exp):
        assert np.allclose(vec.matrix, target, atol=0)


@pytest.mark.parametrize(
    "gid",
    [M.SO(2), M.SO(5), M.U(3), M.U(4), M.SU(2), M.SU(4), M.Sp(1), M.Sp(3)],
    ids=str,
)
def test_compact_basis_orthonormal(gid):
    basis = M.compact_basis(gid)
    assert len(basis) == gid.algebra_dim
    mats = basis.matrices
    gram = np.einsum("aij,bij->ab", mats, mats.conj()).real
    assert np.max(np.abs(gram - np.eye(len(basis)))) < 1e-12
    assert all(v.sign == 1 for v in basis)


def test_glc_split_n1():
    plus, minus = M.glc_split_basis(1)
    assert len(plus) == 1 and len(minus) == 1
    assert np.allclose(plus.vectors[0].matrix, [[1.0]], atol=0)
    assert np.allclose(minus.vectors[0].matrix, [[1j]], atol=0)


def test_glc_split_n2_counts_and_norms():
    plus, minus = M.glc_split_basis(2)
    assert len(plus) == 4 and len(minus) == 4
    for basis in (plus, minus):
        for v in basis:
            assert abs(v.sign * M.trace_form(v.matrix, v.matrix) - 1.0) < 1e-12
    # cross-orthogonality of the joint frame under the trace form
    frame = list(plus) + list(minus)
    for a in range(len(frame)):
        for b in range(a + 1, len(frame)):
            assert abs(M.trace_form(frame[a].matrix, frame[b].matrix)) < 1e-12


@pytest.mark.parametrize("n", range(2, 11))
def test_matrix_identities(n):
    rep = M.verify_matrix_identities(n)
    assert rep.passed
    assert rep.max_residual < 1e-12


def test_identity_sum_x_squares_n3_is_identity():
    pairs = [(r, s) for r in range(1, 4) for s in range(r + 1, 4)]
    total = sum(M.generator("X", p, 3) @ M.generator("X", p, 3) for p in pairs)
    assert np.max(np.abs(total - np.eye(3))) < 1e-12


def test_identity_sum_y_squares_n2():
    y = M.generator("Y", (1, 2), 2)
    assert np.max(np.abs(y @ y + 0.5 * np.eye(2))) < 1e-15


def test_identity_d_sandwich_off_diagonal_vanishes():
    n = 5
    e23 = M.generator("E", (2, 3), n)
    total = sum(
        M.generator("D", t, n) @ e23 @ M.generator("D", t, n).T for t in range(1, n + 1)
    )
    assert np.max(np.abs(total)) == 0.0


def test_quaternion_embed_units():
    assert np.array_equal(M.quaternion_embed([[1]], [[0]]), np.eye(2, dtype=complex))
    assert np.array_equal(
        M.quaternion_embed([[0]], [[1]]), np.array([[0, 1], [-1, 0]], dtype=complex)
    )
    assert np.array_equal(
        M.quaternion_embed([[1j]], [[0]]), np.array([[1j, 0], [0, -1j]], dtype=complex)
    )


def test_quaternion_embed_dimension_mismatch():
    with pytest.raises(ValidationError):
        M.quaternion_embed(np.eye(2), np.eye(3))


def test_quaternion_embed_preserves_symplectic_form():
    from lgh.sampling import sample_compact

    for n in (1, 2):
        j = M.symplectic_matrix(n)
        for g in sample_compact(M.Sp(n), 10, 0.5, seed=11):
            z = g[:n, :n]
            w = g[:n, n:]
            q = M.quaternion_embed(z, w)
            assert np.max(np.abs(q - g)) < 1e-12
            assert np.max(np.abs(q @ j @ q.T - j)) < 1e-10


def test_structure_matrices():
    ipq = M.signature_matrix(1, 2)
    assert np.array_equal(ipq, np.diag([-1, 1, 1]).astype(complex))
    assert np.array_equal(ipq @ ipq, np.eye(3, dtype=complex))
    j = M.symplectic_matrix(2)
    assert np.array_equal(j @ j, -np.eye(4, dtype=complex))


def test_gram_schmidt_already_normalized():
    x12 = M.generator("X", (1, 2), 2)
    out = M.gram_schmidt_indefinite([x12])
    assert len(out) == 1
    assert out.vectors[0].sign == 1
    assert np.allclose(out.vectors[0].matrix, x12, atol=1e-15)


def test_gram_schmidt_negative_vector():
    y12 = M.generator("Y", (1, 2), 2)
    out = M.gram_schmidt_indefinite([y12])
    assert out.vectors[0].sign == -1
    assert np.allclose(out.vectors[0].matrix, y12, atol=1e-15)


def test_gram_schmidt_pivots_past_isotropic_combination():
    # {X12, X12+Y12}: the second vector is isotropic, but pivoting keeps it
    # out of the first slot; hand Gram-Schmidt gives {(X12,+1), (Y12,-1)}.
    x12 = M.generator("X", (1, 2), 2)
    y12 = M.generator("Y", (1, 2), 2)
    out = M.gram_schmidt_indefinite([x12, x12 + y12])
    assert [v.sign for v in out] == [1, -1]
    assert np.allclose(out.vectors[0].matrix, x12, atol=1e-14)
    assert np.allclose(out.vectors[1].matrix, y12, atol=1e-14)


def test_gram_schmidt_null_direction_raises():
    x12 = M.generator("X", (1, 2), 2)
    y12 = M.generator("Y", (1, 2), 2)
    with pytest.raises(DegeneracyError):
        M.gram_schmidt_indefinite([x12 + y12])


def test_gram_schmidt_random_span_orthogonality():
    from lgh.sampling import SplitMix64

    rng = SplitMix64(5)
    n = 3
    span = []
    for _ in range(6):
        m = np.array(
            [[rng.complex_uniform(1.0) for _ in range(n)] for _ in range(n)]
        )
        span.append(m)
    out = M.gram_schmidt_indefinite(span)
    assert len(out) == 6
    for a in range(6):
        va = out.vectors[a]
        assert abs(M.trace_form(va.matrix, va.matrix) - va.sign) < 1e-10
        for b in range(a + 1, 6):
            assert abs(M.trace_form(va.matrix, out.vectors[b].matrix)) < 1e-10


def test_group_id_validation():
    with pytest.raises(ValidationError):
        M.GroupId("SO", n=0)
    with pytest.raises(ValidationError):
        M.GroupId("SOpq", n=3)
    with pytest.raises(ValidationError):
        M.GroupId("SUstar", n=3)
    with pytest.raises(ValidationError):
        M.GroupId("XX", n=3)
    assert M.sp_pq(1, 2).matrix_dim == 6
    assert str(M.so_star(4)) == "SO*(4)"
