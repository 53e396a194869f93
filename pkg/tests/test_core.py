import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from koczkodaj.core import (
    PairwiseComparisonMatrix,
    Triad,
    as_matrix,
    complete_from_upper,
    compose,
    invert_permutation,
    is_consistent,
    permute,
    submatrix,
    transpose,
    triads,
    validate_matrix,
)
from koczkodaj.errors import (
    BadIndices,
    BadPermutation,
    DiagonalViolation,
    NonPositiveEntry,
    NotSquare,
    ReciprocityViolation,
    TooSmall,
    WrongLength,
)
from koczkodaj.gen import MatrixGenerator, consistent_from_weights

entry = st.floats(min_value=1 / 9, max_value=9, allow_nan=False)


@st.composite
def matrices(draw, min_n=3, max_n=6):
    n = draw(st.integers(min_n, max_n))
    return complete_from_upper(n, draw(st.lists(entry, min_size=n * (n - 1) // 2, max_size=n * (n - 1) // 2)))


@st.composite
def matrix_and_perms(draw):
    A = draw(matrices())
    p = draw(st.permutations(range(1, A.n + 1)))
    q = draw(st.permutations(range(1, A.n + 1)))
    return A, tuple(p), tuple(q)


class TestValidate:
    def test_valid(self):
        A = validate_matrix([[1, 2, 4], [0.5, 1, 2], [0.25, 0.5, 1]])
        assert A.n == 3
        assert A.a(1, 3) == 4

    def test_reciprocity_violation(self):
        with pytest.raises(ReciprocityViolation) as exc:
            validate_matrix([[1, 2], [0.4, 1]])
        assert (exc.value.i, exc.value.j) == (1, 2)
        assert exc.value.product == pytest.approx(0.8)

    @pytest.mark.parametrize("other", [5.0, -1.0, 0.0])
    def test_non_positive(self, other):
        with pytest.raises(NonPositiveEntry) as exc:
            validate_matrix([[1, 0], [other, 1]])
        assert (exc.value.i, exc.value.j) == (1, 2)

    def test_nan_is_rejected(self):
        with pytest.raises(NonPositiveEntry):
            validate_matrix([[1, float("nan")], [1, 1]])

    @pytest.mark.parametrize("raw", [[[1, 2, 3], [0.5, 1, 2]], [[1, 2], [0.5]], []])
    def test_not_square(self, raw):
        with pytest.raises(NotSquare):
            validate_matrix(raw)

    def test_diagonal(self):
        with pytest.raises(DiagonalViolation) as exc:
            validate_matrix([[1, 2], [0.5, 1.5]])
        assert exc.value.i == 2

    def test_tolerance(self):
        raw = [[1, 3], [1 / 3 * (1 + 1e-12), 1]]
        validate_matrix(raw)
        with pytest.raises(ReciprocityViolation):
            validate_matrix(raw, tolerance=0)


class TestCompleteFromUpper:
    def test_all_ones(self):
        assert complete_from_upper(3, [1, 1, 1]).tolist() == [[1, 1, 1]] * 3

    def test_reciprocal_completion(self):
        A = complete_from_upper(3, [2, 4, 2])
        assert A.tolist() == [[1, 2, 4], [0.5, 1, 2], [0.25, 0.5, 1]]

    def test_wrong_length(self):
        with pytest.raises(WrongLength):
            complete_from_upper(3, [1, 1])

    def test_non_positive(self):
        with pytest.raises(NonPositiveEntry):
            complete_from_upper(3, [1, -2, 1])

    @given(matrices(min_n=1, max_n=7))
    def test_strict_validation_and_upper_roundtrip(self, A):
        B = validate_matrix(A.tolist(), tolerance=0)
        assert B.upper() == A.upper()
        assert complete_from_upper(A.n, A.upper()) == A


class TestTriads:
    def test_single(self):
        A = complete_from_upper(3, [1, 2, 1])
        [loc] = triads(A)
        assert loc.indices == (1, 2, 3)
        assert tuple(loc.triad) == (1, 2, 1)

    def test_four(self):
        A = complete_from_upper(4, [1, 2, 3, 4, 5, 6])
        locs = triads(A)
        assert [l.indices for l in locs] == [(1, 2, 3), (1, 2, 4), (1, 3, 4), (2, 3, 4)]
        for l in locs:
            assert tuple(l.triad) == (A.a(l.i, l.j), A.a(l.i, l.k), A.a(l.j, l.k))

    def test_too_small(self):
        with pytest.raises(TooSmall):
            triads(complete_from_upper(2, [3]))

    @pytest.mark.parametrize("n,count", [(3, 1), (5, 10), (7, 35)])
    def test_count(self, n, count):
        assert len(triads(MatrixGenerator(n).random(n))) == count


class TestSubmatrix:
    A = complete_from_upper(4, [2, 3, 4, 5, 6, 7])

    def test_top_left(self):
        assert submatrix(self.A, (1, 2, 3)).tolist() == self.A.entries[:3, :3].tolist()

    def test_pair(self):
        assert submatrix(self.A, (2, 4)).tolist() == [[1, 6], [1 / 6, 1]]

    @pytest.mark.parametrize("idx", [(1, 2, 3, 4), (1,), (2, 1), (0, 2), (3, 5), (2, 2, 3)])
    def test_bad(self, idx):
        with pytest.raises(BadIndices):
            submatrix(self.A, idx)

    def test_triad_submatrix_must_be_proper(self):
        with pytest.raises(BadIndices):
            submatrix(complete_from_upper(3, [1, 2, 1]), (1, 2, 3))

    def test_result_is_valid(self):
        B = submatrix(MatrixGenerator(1).random(6), (1, 3, 4, 6))
        validate_matrix(B.tolist(), tolerance=0)


class TestConsistency:
    def test_consistent(self):
        assert is_consistent(complete_from_upper(3, [2, 4, 2]))

    def test_inconsistent(self):
        assert not is_consistent(complete_from_upper(3, [1, 2, 1]))

    def test_small_is_consistent(self):
        assert is_consistent(complete_from_upper(2, [7]))
        assert is_consistent(complete_from_upper(1, []))

    @given(st.lists(st.floats(min_value=1e-3, max_value=1e3), min_size=1, max_size=8))
    def test_weight_generated(self, w):
        assert is_consistent(consistent_from_weights(w), 1e-10)

    @given(matrices(max_n=6), st.floats(min_value=1e-6, max_value=1.0))
    def test_iff_every_triad_consistent(self, A, tol):
        per_triad = all(is_consistent(l.triad.matrix(), tol) for l in triads(A))
        assert is_consistent(A, tol) == per_triad

    def test_extreme_entries(self):
        A = consistent_from_weights([1e150, 1.0, 1e-150])
        assert is_consistent(A)
        B = complete_from_upper(3, [1e150, 1e150, 1e-150])
        assert not is_consistent(B)


class TestTransforms:
    def test_transpose_triad(self):
        T = transpose(complete_from_upper(3, [1, 2, 1]))
        assert T.upper() == (1, 0.5, 1)

    def test_identity_perm(self):
        A = MatrixGenerator(3).random(5)
        assert permute(A, (1, 2, 3, 4, 5)) == A

    def test_permute_moves_entities(self):
        A = complete_from_upper(3, [2, 3, 5])
        # entity 1 -> position 3, 2 -> 1, 3 -> 2
        B = permute(A, (3, 1, 2))
        assert B.a(3, 1) == A.a(1, 2)
        assert B.a(3, 2) == A.a(1, 3)
        assert B.a(1, 2) == A.a(2, 3)

    @pytest.mark.parametrize("p", [(1, 2), (1, 1, 2), (0, 1, 2), (1, 2, 4)])
    def test_bad_perm(self, p):
        with pytest.raises(BadPermutation):
            permute(complete_from_upper(3, [1, 1, 1]), p)

    @given(matrices())
    def test_transpose_involution(self, A):
        assert transpose(transpose(A)) == A
        validate_matrix(transpose(A).tolist(), tolerance=0)

    @given(matrix_and_perms())
    @settings(max_examples=50)
    def test_permutation_group_action(self, args):
        A, p, q = args
        assert permute(permute(A, p), q) == permute(A, compose(q, p))
        assert permute(permute(A, p), invert_permutation(p)) == A
        validate_matrix(permute(A, p).tolist(), tolerance=0)


def test_as_matrix_shorthands():
    assert as_matrix((1, 2, 1)) == complete_from_upper(3, [1, 2, 1])
    assert as_matrix(Triad(1, 2, 1)) == complete_from_upper(3, [1, 2, 1])
    assert as_matrix([[1, 2], [0.5, 1]]).n == 2


def test_matrix_is_immutable():
    A = complete_from_upper(3, [1, 2, 1])
    with pytest.raises(ValueError):
        A.entries[0, 1] = 5.0
    assert isinstance(hash(A), int)
    assert A != PairwiseComparisonMatrix(np.ones((3, 3)))


def test_triad_rejects_non_positive():
    with pytest.raises(NonPositiveEntry):
        Triad(1, 0, 1)
