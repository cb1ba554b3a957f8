"""Maximal left ideals of matrix rings over prime fields.

For a nonzero column u over F_p, the set D(u) = {X : Xu = 0} is a
maximal left ideal of the n-by-n matrix ring, two such ideals coincide
exactly when their vectors are scalar multiples of each other, and
every maximal left ideal arises this way.  That parametrizes Maxl by
the projective space of lines, giving the count (p^n - 1)/(p - 1), and
the transpose involution carries the picture over to maximal right
ideals.

Left ideals are handled by reusing the right-module engine over the
opposite algebra, which keeps a single sided codebase; the transpose
involution provides an independent cross-check.
"""

import numpy as np

from .algebra import RightIdeal, matrix_algebra, transpose_subspace
from .fqlinalg import BudgetExceededError, DEFAULT_BUDGET, FpMatrix, \
    Subspace, as_vector, enumerate_vectors
from .modules import Submodule, length, maximal_submodules, quotient_module, \
    regular_module

__all__ = [
    "StoneIdeal",
    "MaxlEnumeration",
    "CountBoundsReport",
    "stone_ideal",
    "stone_equal",
    "stone_quotient_length",
    "parallel_representative",
    "enumerate_maxl_matrix_ring",
    "count_bounds_report",
]


class StoneIdeal:
    """A maximal left ideal D(M, u) = {X : Xu in M^n} of a matrix ring.

    Only the prime-field specialization M = 0 is supported, where the
    ideal is the annihilator {X : Xu = 0} of a nonzero vector.
    ``maximality_checked`` reports whether the brute-force left-ideal
    lattice confirmed maximality (skipped past the enumeration budget).
    """

    __slots__ = ("base", "n", "m_space", "u", "algebra", "space",
                 "maximality_checked")

    def __init__(self, base, n, m_space, u, algebra, space,
                 maximality_checked):
        self.base = base
        self.n = n
        self.m_space = m_space
        self.u = u
        self.algebra = algebra
        self.space = space
        self.maximality_checked = maximality_checked

    @property
    def dim(self):
        return self.space.dim

    def as_opposite_right_ideal(self):
        """The same subspace as a right ideal of the opposite algebra."""
        return RightIdeal(self.algebra.opposite(), self.space, check=True)

    def __repr__(self):
        return (f"StoneIdeal(p={self.base.p}, n={self.n}, "
                f"u={self.u.tolist()}, dim={self.dim})")


def _require_prime_field(base):
    if base.dim != 1:
        raise ValueError(
            "only prime-field base rings are supported for Stone ideals")


def _stone_space(p, n, u):
    """{X : Xu = 0} as a subspace of the row-major n*n carrier."""
    constraint = FpMatrix(np.kron(np.eye(n, dtype=np.int64), u), p)
    return constraint.nullspace()


def _maximal_left_ideal_keys(algebra, budget):
    """Keys of the maximal left ideals, or None past the budget."""
    try:
        maxes = maximal_submodules(regular_module(algebra.opposite()),
                                   budget)
    except BudgetExceededError:
        return None
    return {s.space.key() for s in maxes}


def _build_stone(base, algebra, n, m_space, u, max_keys):
    p = base.p
    space = _stone_space(p, n, u)
    # Self-check: a left ideal is a right ideal of the opposite algebra.
    RightIdeal(algebra.opposite(), space, check=True)
    checked = max_keys is not None
    if checked and space.key() not in max_keys:
        raise AssertionError("D(0, u) failed to be a maximal left ideal")
    return StoneIdeal(base, n, m_space, u, algebra, space, checked)


def stone_ideal(base, n, m_space, u, budget=DEFAULT_BUDGET):
    """The maximal left ideal D(M, u) of the n-by-n matrix ring over base.

    ``m_space`` must be the zero subspace (the unique maximal left
    ideal of a prime field) and u a nonzero vector of length n.
    Maximality is verified against the brute-force left-ideal lattice
    whenever the enumeration budget allows.
    """
    _require_prime_field(base)
    p = base.p
    if m_space.ambient_dim != 1 or not m_space.is_zero():
        raise ValueError(
            "m_space must be the zero ideal of the prime field")
    u = as_vector(u, p, n)
    if not u.any():
        raise ValueError("u lies in M^n")
    algebra = matrix_algebra(n, p)
    return _build_stone(base, algebra, n, m_space, u,
                        _maximal_left_ideal_keys(algebra, budget))


def stone_equal(base, u, v, budget=DEFAULT_BUDGET):
    """Whether D(0, u) = D(0, v): true iff v is a nonzero multiple of u.

    Parallelism is decided by rank and cross-checked against actual
    subspace equality of the two ideals.
    """
    _require_prime_field(base)
    p = base.p
    u = as_vector(u, p)
    v = as_vector(v, p, len(u))
    if not u.any() or not v.any():
        raise ValueError("zero vectors do not define Stone ideals")
    n = len(u)
    parallel = FpMatrix(np.vstack([u, v]), p).rank() == 1
    same_space = _stone_space(p, n, u) == _stone_space(p, n, v)
    if parallel != same_space:
        raise AssertionError(
            "parallelism disagrees with Stone ideal equality")
    return parallel


def stone_quotient_length(stone, budget=DEFAULT_BUDGET):
    """Composition length of (matrix ring)/D over the base field.

    The quotient is a copy of (base/M)^n: simple as a module over the
    matrix ring, but of length n once restricted along the base ring
    embedding.  The restriction is taken honestly and its composition
    series computed; the answer must be n.
    """
    reg = regular_module(stone.algebra.opposite())
    sub = Submodule(reg, stone.space, check=True)
    quot = quotient_module(reg, sub).quotient
    action = np.eye(quot.dim, dtype=np.int64).reshape(1, quot.dim, quot.dim)
    from .modules import RightModule
    restricted = RightModule(stone.base, action)
    return length(restricted, budget)


def parallel_representative(u, p):
    """Canonical class representative: first nonzero coordinate scaled to 1.

    This is the lexicographically least nonzero vector in {uc : c != 0}.
    """
    u = as_vector(u, p)
    if not u.any():
        raise ValueError("zero vector has no parallel class")
    lead = int(u[np.nonzero(u)[0][0]])
    scale = pow(lead, p - 2, p)
    return (u * scale) % p


class MaxlEnumeration:
    """All maximal left ideals of a matrix ring, one per parallel class.

    ``crosschecked`` reports whether the list was compared against the
    brute-force left-ideal lattice (skipped past the budget, in which
    case the parametrized answer is still returned).
    """

    __slots__ = ("p", "n", "algebra", "representatives", "ideals", "count",
                 "crosschecked")

    def __init__(self, p, n, algebra, representatives, ideals, crosschecked):
        self.p = p
        self.n = n
        self.algebra = algebra
        self.representatives = representatives
        self.ideals = ideals
        self.count = len(ideals)
        self.crosschecked = crosschecked


def enumerate_maxl_matrix_ring(p, n, budget=DEFAULT_BUDGET):
    """Enumerate Maxl of the n-by-n matrix ring over F_p via D(0, u).

    Representatives are the lexicographically least nonzero vectors of
    each parallel class; the count must equal (p^n - 1)/(p - 1) and,
    budget permitting, the set of ideals is cross-checked against the
    maximal submodules of the regular left module.
    """
    base = matrix_algebra(1, p)
    algebra = matrix_algebra(n, p)
    zero = Subspace.zero(1, p)
    reps = [u for u in enumerate_vectors(n, p, budget)
            if u.any() and u[np.nonzero(u)[0][0]] == 1]
    max_keys = _maximal_left_ideal_keys(algebra, budget)
    ideals = [_build_stone(base, algebra, n, zero, u, max_keys)
              for u in reps]
    expected = (p ** n - 1) // (p - 1)
    if len(ideals) != expected:
        raise AssertionError(
            f"parallel class count {len(ideals)} != {expected}")
    keys = {i.space.key() for i in ideals}
    if len(keys) != len(ideals):
        raise AssertionError("parallel classes produced equal ideals")
    if max_keys is not None and keys != max_keys:
        raise AssertionError(
            "Stone parametrization missed a maximal left ideal")
    return MaxlEnumeration(p, n, algebra, reps, ideals, max_keys is not None)


class CountBoundsReport:
    """Counting consequences for the matrix ring 𝕄_n(F_p), n > 1.

    Checks |Maxl| >= p + 1, that no maximal one-sided ideal is
    two-sided, and that the transpose involution carries Maxl exactly
    onto Maxr (so the counts agree).
    """

    __slots__ = ("p", "n", "count", "bound", "two_sided_count", "maxr_count",
                 "transpose_matches", "crosschecked", "passed")

    def __init__(self, p, n, count, bound, two_sided_count, maxr_count,
                 transpose_matches, crosschecked):
        self.p = p
        self.n = n
        self.count = count
        self.bound = bound
        self.two_sided_count = two_sided_count
        self.maxr_count = maxr_count
        self.transpose_matches = transpose_matches
        self.crosschecked = crosschecked
        self.passed = (count >= bound and two_sided_count == 0
                       and transpose_matches and maxr_count == count)

    def row(self):
        return {"p": self.p, "n": self.n, "count": self.count,
                "bound_pk": self.bound, "pass": self.passed}


def count_bounds_report(p, n, budget=DEFAULT_BUDGET):
    """Counting report for the n-by-n matrix ring over F_p, n > 1."""
    if n <= 1:
        raise ValueError("matrix size must exceed 1")
    enum = enumerate_maxl_matrix_ring(p, n, budget)
    algebra = enum.algebra
    two_sided = sum(1 for ideal in enum.ideals
                    if ideal.as_opposite_right_ideal().is_two_sided())
    maxr = maximal_submodules(regular_module(algebra), budget)
    maxr_keys = {s.space.key() for s in maxr}
    transposed = {transpose_subspace(algebra, ideal.space).key()
                  for ideal in enum.ideals}
    return CountBoundsReport(p, n, enum.count, p + 1, two_sided,
                             len(maxr), transposed == maxr_keys,
                             enum.crosschecked)
