"""Tests for the maximal-left-ideal parametrization of matrix rings.

Frozen values: D(0, (1,0)) over F_2 at n = 2 is the set of matrices
with zero first column, spanned by the matrix units E12 and E22 in
row-major coordinates; the Maxl counts are (p^n - 1)/(p - 1), namely
3, 4, 7 at (n,p) = (2,2), (2,3), (3,2); quotients by these ideals have
composition length n.
"""

import numpy as np
import pytest

from eigenring.algebra import matrix_algebra
from eigenring.fqlinalg import Subspace
from eigenring.matring import (
    count_bounds_report,
    enumerate_maxl_matrix_ring,
    parallel_representative,
    stone_equal,
    stone_ideal,
    stone_quotient_length,
)

F2 = matrix_algebra(1, 2)
F3 = matrix_algebra(1, 3)


def zero_ideal(p):
    return Subspace.zero(1, p)


class TestStoneIdeal:
    def test_frozen_annihilator_of_e1(self):
        ideal = stone_ideal(F2, 2, zero_ideal(2), [1, 0])
        assert ideal.dim == 2
        assert ideal.space == Subspace.from_vectors(
            [[0, 1, 0, 0], [0, 0, 0, 1]], 4, 2)
        assert ideal.maximality_checked

    def test_dimension_is_n_squared_minus_n(self):
        for p, n in ((2, 2), (3, 2), (2, 3)):
            base = matrix_algebra(1, p)
            u = np.zeros(n, dtype=np.int64)
            u[0] = 1
            ideal = stone_ideal(base, n, zero_ideal(p), u)
            assert ideal.dim == n * n - n

    def test_zero_vector_rejected(self):
        with pytest.raises(ValueError, match="M"):
            stone_ideal(F2, 2, zero_ideal(2), [0, 0])

    def test_non_field_base_rejected(self):
        with pytest.raises(ValueError, match="prime-field"):
            stone_ideal(matrix_algebra(2, 2), 2, Subspace.zero(4, 2), [1, 0])

    def test_nonzero_m_rejected(self):
        with pytest.raises(ValueError, match="zero ideal"):
            stone_ideal(F2, 2, Subspace.full(1, 2), [1, 0])

    def test_scaling_by_unit_preserves_ideal(self):
        a = stone_ideal(F3, 2, zero_ideal(3), [1, 0])
        b = stone_ideal(F3, 2, zero_ideal(3), [2, 0])
        assert a.space == b.space

    def test_quotient_length_is_n(self):
        for p, n in ((2, 2), (3, 2), (2, 3)):
            base = matrix_algebra(1, p)
            u = np.zeros(n, dtype=np.int64)
            u[-1] = 1
            ideal = stone_ideal(base, n, zero_ideal(p), u)
            assert stone_quotient_length(ideal) == n

    def test_not_two_sided(self):
        ideal = stone_ideal(F2, 2, zero_ideal(2), [1, 0])
        assert not ideal.as_opposite_right_ideal().is_two_sided()


class TestStoneEqual:
    def test_parallel_vectors(self):
        assert stone_equal(F3, [1, 0], [2, 0])
        assert stone_equal(F3, [1, 2], [2, 1])
        assert not stone_equal(F3, [1, 0], [1, 1])

    def test_zero_vector_rejected(self):
        with pytest.raises(ValueError, match="zero"):
            stone_equal(F2, [0, 0], [1, 0])

    def test_exhaustive_equivalence_with_ideal_equality(self):
        # stone_equal internally cross-checks parallelism against ideal
        # equality; running all nonzero pairs makes both directions of
        # the equivalence exhaustive at (2,2) and (3,2).
        for p, n in ((2, 2), (3, 2)):
            base = matrix_algebra(1, p)
            from eigenring.fqlinalg import enumerate_vectors
            nonzero = [u for u in enumerate_vectors(n, p, 10 ** 6)
                       if u.any()]
            for u in nonzero:
                for v in nonzero:
                    stone_equal(base, u, v)


class TestParallelRepresentative:
    def test_scales_leading_coordinate(self):
        rep = parallel_representative([2, 1], 3)
        assert rep.tolist() == [1, 2]

    def test_stable_on_canonical(self):
        rep = parallel_representative([0, 1, 1], 2)
        assert rep.tolist() == [0, 1, 1]

    def test_zero_rejected(self):
        with pytest.raises(ValueError, match="zero"):
            parallel_representative([0, 0], 5)


class TestEnumeration:
    def test_frozen_counts(self):
        assert enumerate_maxl_matrix_ring(2, 2).count == 3
        assert enumerate_maxl_matrix_ring(3, 2).count == 4
        assert enumerate_maxl_matrix_ring(2, 3).count == 7

    def test_crosschecked_within_budget(self):
        enum = enumerate_maxl_matrix_ring(2, 2)
        assert enum.crosschecked
        assert all(i.maximality_checked for i in enum.ideals)

    def test_representatives_are_canonical(self):
        enum = enumerate_maxl_matrix_ring(3, 2)
        reps = [u.tolist() for u in enum.representatives]
        assert reps == [[0, 1], [1, 0], [1, 1], [1, 2]]

    def test_ideals_pairwise_distinct(self):
        enum = enumerate_maxl_matrix_ring(2, 3)
        keys = {i.space.key() for i in enum.ideals}
        assert len(keys) == 7


class TestCountBounds:
    def test_reports_pass(self):
        for p, n in ((2, 2), (3, 2), (2, 3)):
            report = count_bounds_report(p, n)
            assert report.passed
            assert report.count >= p + 1
            assert report.two_sided_count == 0
            assert report.maxr_count == report.count
            assert report.transpose_matches

    def test_row_shape(self):
        row = count_bounds_report(2, 2).row()
        assert row == {"p": 2, "n": 2, "count": 3, "bound_pk": 3,
                       "pass": True}

    def test_scalar_size_rejected(self):
        with pytest.raises(ValueError, match="exceed"):
            count_bounds_report(5, 1)
