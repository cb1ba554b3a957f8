"""Tests for the exact F_p linear algebra layer.

Frozen expected values were computed by hand (pencil row reduction) or by
an independent brute-force check inside the test, never by running the code
under test first.
"""

import numpy as np
import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from eigenring.fqlinalg import (
    BudgetExceededError,
    FpMatrix,
    Subspace,
    complement_basis,
    enumerate_vectors,
    inv_mod,
    solve,
)

PRIMES = [2, 3, 5]


def fpm(rows, p):
    return FpMatrix(np.array(rows, dtype=np.int64), p)


@st.composite
def matrices(draw, p=None, rows=None, cols=None, max_dim=4):
    if p is None:
        p = draw(st.sampled_from(PRIMES))
    if rows is None:
        rows = draw(st.integers(min_value=1, max_value=max_dim))
    if cols is None:
        cols = draw(st.integers(min_value=1, max_value=max_dim))
    entries = draw(
        st.lists(
            st.lists(st.integers(min_value=0, max_value=p - 1),
                     min_size=cols, max_size=cols),
            min_size=rows, max_size=rows))
    return fpm(entries, p)


@st.composite
def matrix_pairs_same_ambient(draw, max_dim=4):
    p = draw(st.sampled_from(PRIMES))
    n = draw(st.integers(min_value=1, max_value=max_dim))
    return (draw(matrices(p=p, cols=n, max_dim=max_dim)),
            draw(matrices(p=p, cols=n, max_dim=max_dim)))


@st.composite
def map_with_target_space(draw, max_dim=3):
    p = draw(st.sampled_from([2, 3]))
    domain = draw(st.integers(min_value=1, max_value=max_dim))
    codomain = draw(st.integers(min_value=1, max_value=max_dim))
    mapping = draw(matrices(p=p, rows=domain, cols=codomain))
    target = draw(matrices(p=p, cols=codomain, max_dim=max_dim))
    return mapping, target


class TestFpMatrixBasics:
    def test_rejects_composite_modulus(self):
        for bad in (0, 1, 4, 6, 9, 2**20):
            with pytest.raises(ValueError):
                fpm([[1]], bad)

    def test_entries_reduced_on_construction(self):
        m = fpm([[5, -1], [7, 3]], 3)
        assert m.tolist() == [[2, 2], [1, 0]]

    def test_inv_mod(self):
        for p in PRIMES:
            for a in range(1, p):
                assert (a * inv_mod(a, p)) % p == 1
        with pytest.raises(ZeroDivisionError):
            inv_mod(0, 5)

    def test_matmul_known_value(self):
        a = fpm([[1, 2], [3, 4]], 5)
        b = fpm([[0, 1], [2, 3]], 5)
        # (1*0+2*2, 1*1+2*3; 3*0+4*2, 3*1+4*3) = (4, 7; 8, 15) mod 5
        assert (a @ b).tolist() == [[4, 2], [3, 0]]

    def test_add_sub_neg(self):
        a = fpm([[1, 2]], 3)
        b = fpm([[2, 2]], 3)
        assert (a + b).tolist() == [[0, 1]]
        assert (a - b).tolist() == [[2, 0]]
        assert (-a).tolist() == [[2, 1]]

    def test_shape_mismatch_raises(self):
        with pytest.raises(ValueError):
            fpm([[1]], 2) @ fpm([[1], [0]], 2)
        with pytest.raises(ValueError):
            fpm([[1]], 2) + fpm([[1, 0]], 2)
        with pytest.raises(ValueError):
            fpm([[1]], 2) @ fpm([[1]], 3)

    def test_hash_eq(self):
        a = fpm([[1, 0]], 2)
        b = fpm([[3, 2]], 2)
        assert a == b and hash(a) == hash(b)
        assert a != fpm([[1, 1]], 2)


class TestRref:
    def test_rref_hand_checked_f2(self):
        m = fpm([[1, 1], [1, 0]], 2)
        red, piv = m.rref_pivots()
        assert red.tolist() == [[1, 0], [0, 1]]
        assert piv == (0, 1)

    def test_rref_hand_checked_f3(self):
        m = fpm([[2, 1], [1, 2]], 3)
        red, piv = m.rref_pivots()
        assert red.tolist() == [[1, 2], [0, 0]]
        assert piv == (0,)

    def test_rank_and_inverse(self):
        m = fpm([[2, 0], [0, 3]], 5)
        assert m.rank() == 2
        assert m.inverse().tolist() == [[3, 0], [0, 2]]
        with pytest.raises(ValueError):
            fpm([[1, 1], [1, 1]], 2).inverse()

    def test_power(self):
        m = fpm([[1, 1], [0, 1]], 5)
        assert m.power(3).tolist() == [[1, 3], [0, 1]]
        assert m.power(0).is_identity()

    @given(matrices())
    def test_rref_idempotent(self, m):
        assert m.rref().rref() == m.rref()

    @given(matrices())
    def test_rref_preserves_row_space(self, m):
        original = Subspace(m, m.cols, m.p)
        reduced = Subspace(m.rref(), m.cols, m.p)
        assert original == reduced

    @given(matrices(max_dim=3), st.randoms(use_true_random=False))
    @settings(deadline=None)
    def test_rref_invariant_under_row_operations(self, m, rng):
        # Left-multiplying by an invertible matrix fixes the RREF.
        n = m.rows
        for _ in range(20):
            cand = fpm([[rng.randrange(m.p) for _ in range(n)]
                        for _ in range(n)], m.p)
            if cand.rank() == n:
                assert (cand @ m).rref() == m.rref()
                return
        assume(False)


class TestSolve:
    def test_single_equation(self):
        a = fpm([[1, 1]], 2)
        b = fpm([[1]], 2)
        x, kernel = solve(a, b)
        assert x.tolist() == [[1], [0]]
        assert kernel == Subspace.from_vectors([[1, 1]], 2, 2)

    def test_inconsistent(self):
        a = fpm([[1, 1], [1, 1]], 3)
        b = fpm([[1], [2]], 3)
        x, kernel = solve(a, b)
        assert x is None
        assert kernel.dim == 1

    def test_multiple_rhs(self):
        a = fpm([[1, 0], [1, 1]], 3)
        b = fpm([[1, 2], [0, 0]], 3)
        x, _ = solve(a, b)
        assert (a @ x) == b

    @given(matrices(max_dim=3))
    def test_solution_set_matches_brute_force(self, a):
        p, n = a.p, a.cols
        assume(p**n <= 256)
        target = fpm([[1] + [0] * (a.rows - 1)], p).transpose()
        x, kernel = solve(a, target)
        brute = {
            tuple(v)
            for v in enumerate_vectors(n, p, budget=256)
            if np.array_equal((a.data @ v) % p, target.data[:, 0])
        }
        if x is None:
            assert brute == set()
        else:
            found = {
                tuple((x.data[:, 0] + k) % p)
                for k in kernel.vectors(budget=256)
            }
            assert found == brute


class TestSubspace:
    def test_canonical_basis(self):
        s = Subspace.from_vectors([[1, 1], [0, 1], [1, 0]], 2, 2)
        assert s.basis.tolist() == [[1, 0], [0, 1]]
        assert s.is_full()

    def test_sum_intersect_hand_checked(self):
        u = Subspace.from_vectors([[1, 0]], 2, 2)
        v = Subspace.from_vectors([[1, 1]], 2, 2)
        assert (u + v).is_full()
        assert u.intersect(v).is_zero()

    def test_perp_hand_checked(self):
        u = Subspace.from_vectors([[1, 0]], 2, 2)
        assert u.perp() == Subspace.from_vectors([[0, 1]], 2, 2)

    def test_membership_and_reduction(self):
        v = Subspace.from_vectors([[1, 0]], 2, 2)
        assert v.contains_vector([1, 0])
        assert not v.contains_vector([1, 1])
        assert v.reduce_vector([1, 1]).tolist() == [0, 1]

    def test_coordinates(self):
        u = Subspace.from_vectors([[1, 2]], 2, 3)
        assert u.coordinates_of([2, 1]).tolist() == [2]
        assert u.coordinates_of([1, 1]) is None

    def test_preimage_hand_checked(self):
        a = fpm([[1, 0], [0, 0]], 2)
        zero = Subspace.zero(2, 2)
        assert zero.preimage_under(a) == Subspace.from_vectors([[0, 1]], 2, 2)

    def test_image(self):
        a = fpm([[1, 1], [0, 1]], 2)
        u = Subspace.from_vectors([[1, 0]], 2, 2)
        assert u.image_under(a) == Subspace.from_vectors([[1, 1]], 2, 2)

    def test_vectors_enumeration(self):
        u = Subspace.from_vectors([[1, 1]], 2, 2)
        got = [tuple(v) for v in u.vectors()]
        assert got == [(0, 0), (1, 1)]

    @given(matrix_pairs_same_ambient())
    def test_dimension_formula(self, pair):
        a, b = pair
        u = Subspace(a, a.cols, a.p)
        v = Subspace(b, b.cols, b.p)
        s, i = u + v, u.intersect(v)
        assert s.dim + i.dim == u.dim + v.dim
        assert s.contains(u) and s.contains(v)
        assert u.contains(i) and v.contains(i)

    @given(matrices(max_dim=4))
    def test_perp_involution(self, m):
        u = Subspace(m, m.cols, m.p)
        assert u.perp().perp() == u
        assert u.perp().dim == u.codim

    @given(map_with_target_space())
    @settings(deadline=None)
    def test_preimage_matches_enumeration(self, pair):
        a, m = pair
        v = Subspace(m, m.cols, m.p)
        pre = v.preimage_under(a)
        for x in enumerate_vectors(a.rows, a.p, budget=256):
            inside = v.contains_vector((x @ a.data) % a.p)
            assert pre.contains_vector(x) == inside


class TestEnumerationAndComplement:
    def test_lexicographic_order(self):
        got = [tuple(v) for v in enumerate_vectors(2, 2)]
        assert got == [(0, 0), (0, 1), (1, 0), (1, 1)]

    def test_budget_enforced(self):
        with pytest.raises(BudgetExceededError):
            list(enumerate_vectors(30, 2, budget=10**6))
        big = Subspace.full(30, 2)
        with pytest.raises(BudgetExceededError):
            list(big.vectors(budget=10**6))

    def test_complement_prefers_earliest_standard_vectors(self):
        # span{(1,1)} over F_2: e_0 is already independent, so the greedy
        # scan must pick it (not e_1, which a pivot-based rule would give).
        sub = Subspace.from_vectors([[1, 1]], 2, 2)
        assert complement_basis(sub).tolist() == [[1, 0]]

    def test_complement_within_subspace(self):
        within = Subspace.from_vectors([[1, 0, 0], [0, 1, 0]], 3, 2)
        sub = Subspace.from_vectors([[1, 1, 0]], 3, 2)
        comp = complement_basis(sub, within)
        assert comp.rows == 1
        total = sub + Subspace(comp, 3, 2)
        assert total == within

    @given(matrices(max_dim=4))
    def test_complement_fills_ambient(self, m):
        sub = Subspace(m, m.cols, m.p)
        comp = complement_basis(sub)
        assert comp.rows == sub.codim
        stacked = sub + Subspace(comp, sub.ambient_dim, sub.p)
        assert stacked.is_full()


class TestBackends:
    def test_selected_backend_matches_reference(self):
        from eigenring import _fpcore_py
        from eigenring.backend import kernel_matmul, kernel_rref
        rng = np.random.default_rng(7)
        for p in PRIMES:
            for _ in range(25):
                rows, cols = rng.integers(1, 6, size=2)
                a = rng.integers(0, p, size=(rows, cols)).astype(np.int64)
                b = rng.integers(0, p, size=(cols, rows)).astype(np.int64)
                ref_red, ref_piv = _fpcore_py.rref(a, p)
                got_red, got_piv = kernel_rref(np.ascontiguousarray(a), p)
                assert np.array_equal(ref_red, got_red)
                assert list(ref_piv) == list(got_piv)
                assert np.array_equal(
                    _fpcore_py.matmul(a, b, p),
                    kernel_matmul(np.ascontiguousarray(a),
                                  np.ascontiguousarray(b), p))
