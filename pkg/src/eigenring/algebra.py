"""Finite-dimensional unital associative F_p-algebras via structure constants.

An algebra of dimension d over F_p is stored as a d*d*d table with
``b_i * b_j = sum_k table[i, j, k] * b_k`` on the distinguished basis, plus
the coordinate vector of the unit. Elements are coordinate row vectors.

Multiplication operators follow the row-vector convention used everywhere
in this package: for an element ``a``,

* ``right_mult_matrix(a)`` is the matrix R_a with ``x * a = x @ R_a``;
* ``left_mult_matrix(a)`` is the matrix L_a with ``a * x = x @ L_a``.
"""

import numpy as np

from .fqlinalg import (
    DEFAULT_BUDGET,
    FpMatrix,
    Subspace,
    as_vector,
    complement_basis,
    enumerate_vectors,
)


class Algebra:
    """Unital associative algebra over F_p given by structure constants."""

    __slots__ = ("p", "dim", "table", "unit", "basis_transpose", "_cache")

    def __init__(self, p, dim, table, unit, *, check=True,
                 basis_transpose=None):
        table = np.asarray(table, dtype=np.int64)
        if table.shape != (dim, dim, dim):
            raise ValueError(
                f"structure table shape {table.shape} != {(dim, dim, dim)}")
        if dim < 1:
            raise ValueError("algebra dimension must be at least 1")
        # Route the prime check through FpMatrix validation.
        unit_mat = FpMatrix(np.asarray(unit, dtype=np.int64).reshape(1, -1), p)
        if unit_mat.cols != dim:
            raise ValueError(f"unit length {unit_mat.cols} != dim {dim}")
        table = np.ascontiguousarray(table % p)
        table.setflags(write=False)
        self.p = p
        self.dim = dim
        self.table = table
        self.unit = unit_mat.data[0]
        if basis_transpose is not None:
            basis_transpose = np.asarray(basis_transpose, dtype=np.int64)
        self.basis_transpose = basis_transpose
        self._cache = {}
        if check:
            self._validate()

    def _validate(self):
        t, p = self.table, self.p
        if not self.unit.any():
            raise ValueError("unit vector is zero")
        left = np.einsum("ijm,mkl->ijkl", t, t) % p
        right = np.einsum("jkm,iml->ijkl", t, t) % p
        if not np.array_equal(left, right):
            bad = np.argwhere(left != right)[0]
            raise ValueError(
                f"non-associative table at basis triple {tuple(bad[:3])}")
        eye = np.eye(self.dim, dtype=np.int64)
        if not np.array_equal(np.einsum("i,ijk->jk", self.unit, t) % p, eye):
            raise ValueError("unit fails left unit law")
        if not np.array_equal(np.einsum("j,ijk->ik", self.unit, t) % p, eye):
            raise ValueError("unit fails right unit law")

    # -- serialization -------------------------------------------------

    def to_json(self):
        return {
            "p": self.p,
            "dim": self.dim,
            "table": self.table.tolist(),
            "unit": self.unit.tolist(),
        }

    @classmethod
    def from_json(cls, obj):
        return cls(obj["p"], obj["dim"], obj["table"], obj["unit"])

    # -- identity ------------------------------------------------------

    def __eq__(self, other):
        if not isinstance(other, Algebra):
            return NotImplemented
        return (self.p == other.p and self.dim == other.dim
                and np.array_equal(self.table, other.table)
                and np.array_equal(self.unit, other.unit))

    def __hash__(self):
        return hash((self.p, self.dim, self.table.tobytes(),
                     self.unit.tobytes()))

    def __repr__(self):
        return f"Algebra(p={self.p}, dim={self.dim})"

    # -- element arithmetic --------------------------------------------

    def element(self, coords):
        return RingElement(self, as_vector(coords, self.p, self.dim))

    def one(self):
        return RingElement(self, self.unit.copy())

    def multiply(self, a, b):
        a = as_vector(a, self.p, self.dim)
        b = as_vector(b, self.p, self.dim)
        return np.einsum("i,j,ijk->k", a, b, self.table) % self.p

    def right_mult_matrix(self, a):
        """R_a with x * a = x @ R_a."""
        a = as_vector(a, self.p, self.dim)
        return FpMatrix(np.einsum("ijk,j->ik", self.table, a), self.p)

    def left_mult_matrix(self, a):
        """L_a with a * x = x @ L_a."""
        a = as_vector(a, self.p, self.dim)
        return FpMatrix(np.einsum("i,ijk->jk", a, self.table), self.p)

    def is_unit(self, a):
        return self.left_mult_matrix(a).rank() == self.dim

    def inverse(self, a):
        """Two-sided inverse of a unit (raises on non-units)."""
        r = self.right_mult_matrix(a)
        y = (FpMatrix(self.unit.reshape(1, -1), self.p) @ r.inverse()).data[0]
        if not np.array_equal(self.multiply(a, y), self.unit):
            raise ValueError("element has a right but not a left inverse")
        return y

    def enumerate_elements(self, budget=DEFAULT_BUDGET):
        return enumerate_vectors(self.dim, self.p, budget)

    def opposite(self):
        """The opposite algebra (products reversed)."""
        if "opposite" not in self._cache:
            self._cache["opposite"] = Algebra(
                self.p, self.dim,
                np.ascontiguousarray(self.table.transpose(1, 0, 2)),
                self.unit, check=False,
                basis_transpose=self.basis_transpose)
        return self._cache["opposite"]


class RingElement:
    """Element of an Algebra as a coordinate row vector."""

    __slots__ = ("algebra", "coords")

    def __init__(self, algebra, coords):
        self.algebra = algebra
        self.coords = as_vector(coords, algebra.p, algebra.dim)

    def _check_same(self, other):
        if not isinstance(other, RingElement):
            raise TypeError(f"expected RingElement, got {type(other).__name__}")
        if other.algebra != self.algebra:
            raise ValueError("elements of different algebras")

    def __mul__(self, other):
        self._check_same(other)
        return RingElement(self.algebra,
                           self.algebra.multiply(self.coords, other.coords))

    def __add__(self, other):
        self._check_same(other)
        return RingElement(self.algebra,
                           (self.coords + other.coords) % self.algebra.p)

    def __sub__(self, other):
        self._check_same(other)
        return RingElement(self.algebra,
                           (self.coords - other.coords) % self.algebra.p)

    def __eq__(self, other):
        if not isinstance(other, RingElement):
            return NotImplemented
        return (self.algebra == other.algebra
                and np.array_equal(self.coords, other.coords))

    def __hash__(self):
        return hash((self.algebra, self.coords.tobytes()))

    def __repr__(self):
        return f"RingElement({self.coords.tolist()})"

    def is_unit(self):
        return self.algebra.is_unit(self.coords)

    def inverse(self):
        return RingElement(self.algebra, self.algebra.inverse(self.coords))

    def is_idempotent(self):
        prod = self.algebra.multiply(self.coords, self.coords)
        return np.array_equal(prod, self.coords)


def from_structure_constants(p, dim, table, unit):
    """Validated Algebra from raw structure constants."""
    return Algebra(p, dim, table, unit, check=True)


# -- the ring zoo -------------------------------------------------------


def matrix_algebra(n, p):
    """Full n x n matrix algebra over F_p on the matrix-unit basis E_ij.

    Basis index of E_ij is i*n + j (row-major). Carries the transpose
    involution E_ij -> E_ji as a basis permutation.
    """
    if n < 1:
        raise ValueError("matrix size must be at least 1")
    d = n * n
    table = np.zeros((d, d, d), dtype=np.int64)
    for i in range(n):
        for j in range(n):
            for k in range(n):
                # E_ij * E_jk = E_ik
                table[i * n + j, j * n + k, i * n + k] = 1
    unit = np.zeros(d, dtype=np.int64)
    for i in range(n):
        unit[i * n + i] = 1
    transpose = np.zeros(d, dtype=np.int64)
    for i in range(n):
        for j in range(n):
            transpose[i * n + j] = j * n + i
    return Algebra(p, d, table, unit, basis_transpose=transpose)


def triangular_algebra(n, p):
    """Upper-triangular n x n matrices over F_p.

    Basis: matrix units E_ij with i <= j, ordered lexicographically by
    (i, j); for n = 2 this is E_11, E_12, E_22.
    """
    if n < 1:
        raise ValueError("matrix size must be at least 1")
    pairs = [(i, j) for i in range(n) for j in range(i, n)]
    index = {pair: t for t, pair in enumerate(pairs)}
    d = len(pairs)
    table = np.zeros((d, d, d), dtype=np.int64)
    for (i, j), a in index.items():
        for (k, l), b in index.items():
            if j == k:
                table[a, b, index[(i, l)]] = 1
    unit = np.zeros(d, dtype=np.int64)
    for i in range(n):
        unit[index[(i, i)]] = 1
    return Algebra(p, d, table, unit)


def product(a, b):
    """Direct product algebra on the concatenated bases."""
    if a.p != b.p:
        raise ValueError(f"cannot form product over F_{a.p} and F_{b.p}")
    da, db = a.dim, b.dim
    d = da + db
    table = np.zeros((d, d, d), dtype=np.int64)
    table[:da, :da, :da] = a.table
    table[da:, da:, da:] = b.table
    unit = np.concatenate([a.unit, b.unit])
    return Algebra(a.p, d, table, unit)


# -- right ideals --------------------------------------------------------


class RightIdeal:
    """Right ideal of an Algebra, stored as a Subspace of the carrier."""

    __slots__ = ("algebra", "space")

    def __init__(self, algebra, space, *, check=True):
        if space.p != algebra.p or space.ambient_dim != algebra.dim:
            raise ValueError("subspace does not live in the algebra carrier")
        self.algebra = algebra
        self.space = space
        if check and not _right_closed(algebra, space):
            raise ValueError("subspace is not closed under right multiplication")

    @classmethod
    def generated_by(cls, algebra, vectors):
        rows = []
        for v in vectors:
            v = as_vector(v, algebra.p, algebra.dim)
            for j in range(algebra.dim):
                rows.append((v @ algebra.table[:, j, :]) % algebra.p)
        space = Subspace.from_vectors(rows, algebra.dim, algebra.p)
        return cls(algebra, space, check=False)

    @property
    def dim(self):
        return self.space.dim

    def is_proper(self):
        return self.space.dim < self.algebra.dim

    def is_zero(self):
        return self.space.is_zero()

    def contains(self, coords):
        return self.space.contains_vector(coords)

    def is_two_sided(self):
        return _left_closed(self.algebra, self.space)

    def __eq__(self, other):
        if not isinstance(other, RightIdeal):
            return NotImplemented
        return self.algebra == other.algebra and self.space == other.space

    def __hash__(self):
        return hash((self.algebra, self.space))

    def __repr__(self):
        return f"RightIdeal(dim {self.dim} of {self.algebra!r})"


def _right_closed(algebra, space):
    for v in space.basis.data:
        for j in range(algebra.dim):
            if not space.contains_vector((v @ algebra.table[:, j, :])
                                         % algebra.p):
                return False
    return True


def _left_closed(algebra, space):
    for v in space.basis.data:
        for j in range(algebra.dim):
            if not space.contains_vector((v @ algebra.table[j]) % algebra.p):
                return False
    return True


class Subring:
    """Unital subring of an Algebra, stored as a Subspace."""

    __slots__ = ("algebra", "space")

    def __init__(self, algebra, space, *, check=True):
        if space.p != algebra.p or space.ambient_dim != algebra.dim:
            raise ValueError("subspace does not live in the algebra carrier")
        self.algebra = algebra
        self.space = space
        if check:
            if not space.contains_vector(algebra.unit):
                raise ValueError("subring does not contain the unit")
            for u in space.basis.data:
                for v in space.basis.data:
                    if not space.contains_vector(algebra.multiply(u, v)):
                        raise ValueError("subspace not closed under product")

    @property
    def dim(self):
        return self.space.dim

    def __eq__(self, other):
        if not isinstance(other, Subring):
            return NotImplemented
        return self.algebra == other.algebra and self.space == other.space

    def __hash__(self):
        return hash((self.algebra, self.space))


def colon_right(ideal, a):
    """The right ideal {x : a*x in I} for a right ideal I.

    Satisfies (I : 1) = I, (I : a) = whole ring iff a in I, and
    I <= (I : a) iff a is in the idealizer of I. Computed as the preimage
    of the ideal's subspace under left-multiplication by a, then verified
    closed under right multiplication.
    """
    algebra = ideal.algebra
    la = algebra.left_mult_matrix(a)
    space = ideal.space.preimage_under(la)
    return RightIdeal(algebra, space, check=True)


def idealizer_ring(ideal):
    """Largest subring of the algebra in which ``ideal`` is two-sided.

    That is {t : t * I <= I}; always contains the unit and the ideal
    itself.
    """
    algebra = ideal.algebra
    space = Subspace.full(algebra.dim, algebra.p)
    for v in ideal.space.basis.data:
        rv = algebra.right_mult_matrix(v)  # t @ R_v = t * v
        space = space.intersect(ideal.space.preimage_under(rv))
    return Subring(algebra, space, check=True)


class QuotientAlgebra:
    """Quotient of a subring by an ideal, with coset coordinate maps.

    ``lift`` maps quotient coordinates to parent coordinates (rows are the
    chosen coset representatives); ``project`` maps parent coordinates of
    subring elements to quotient coordinates.
    """

    __slots__ = ("algebra", "parent", "sub_space", "ideal_space", "lift",
                 "project")

    def __init__(self, algebra, parent, sub_space, ideal_space, lift, project):
        self.algebra = algebra
        self.parent = parent
        self.sub_space = sub_space
        self.ideal_space = ideal_space
        self.lift = lift
        self.project = project

    def project_coords(self, coords):
        v = as_vector(coords, self.parent.p, self.parent.dim)
        if not self.sub_space.contains_vector(v):
            raise ValueError("element outside the subring being quotiented")
        return (v @ self.project.data) % self.parent.p

    def lift_coords(self, coords):
        v = as_vector(coords, self.parent.p, self.algebra.dim)
        return (v @ self.lift.data) % self.parent.p


def quotient_algebra(parent, ideal_space, sub_space=None):
    """Quotient algebra (subring of ``parent``) / (ideal of that subring).

    The complement basis extends the ideal's canonical basis greedily: by
    standard basis vectors in lexicographic order when the subring is the
    whole algebra, otherwise by the subring's canonical basis rows. The
    resulting structure constants are re-validated, which serves as a
    self-test that the ideal really was two-sided in the subring.
    """
    p, d = parent.p, parent.dim
    if sub_space is None:
        sub_space = Subspace.full(d, p)
        comp = complement_basis(ideal_space)
    else:
        comp = complement_basis(ideal_space, within=sub_space)
    if not sub_space.contains_vector(parent.unit):
        raise ValueError("subring does not contain the unit")
    q = comp.rows
    if q == 0:
        raise ValueError("quotient is the zero ring, not a unital algebra")
    r = ideal_space.dim
    if r == 0:
        stacked = comp
    else:
        stacked = FpMatrix.vstack([ideal_space.basis, comp])
    project = _projection_matrix(stacked, r, d, p)
    lift = comp
    table = np.zeros((q, q, q), dtype=np.int64)
    for i in range(q):
        for j in range(q):
            prod = parent.multiply(comp.data[i], comp.data[j])
            table[i, j] = (prod @ project.data) % p
            # Self-test: the product must stay in the subring and its
            # reduction must represent the same coset.
            residue = (prod - table[i, j] @ comp.data) % p
            if not ideal_space.contains_vector(residue):
                raise ValueError(
                    "ideal is not two-sided in the subring: product escapes")
    unit = (as_vector(parent.unit, p, d) @ project.data) % p
    algebra = Algebra(p, q, table, unit, check=True)
    return QuotientAlgebra(algebra, parent, sub_space, ideal_space, lift,
                           project)


def _projection_matrix(stacked, num_ideal_rows, ambient, p):
    """Matrix P with v @ P = quotient coordinates of v.

    ``stacked`` holds the ideal basis rows followed by the complement rows;
    for v in the row space of ``stacked``, v = coeffs @ stacked, and the
    quotient coordinates are the trailing coefficients. When ``stacked`` is
    square this is the corresponding block of its inverse; otherwise it is
    a one-sided inverse computed column by column.
    """
    total = stacked.rows
    if total == ambient:
        inv = stacked.inverse()
        block = np.ascontiguousarray(inv.data[:, num_ideal_rows:])
        return FpMatrix(block, p)
    # Rectangular case: find P (ambient x (total - num_ideal_rows)) with
    # stacked @ P = [0; I] so that (coeffs @ stacked) @ P = trailing coeffs.
    from .fqlinalg import solve
    q = total - num_ideal_rows
    rhs = np.zeros((total, q), dtype=np.int64)
    rhs[num_ideal_rows:] = np.eye(q, dtype=np.int64)
    sol, _ = solve(stacked, FpMatrix(rhs, p))
    if sol is None:
        raise AssertionError("stacked basis rows are not independent")
    return sol


def eigenring_of_ideal(ideal):
    """Quotient of the idealizer of a proper right ideal by the ideal."""
    if not ideal.is_proper():
        raise ValueError("eigenring of the whole ring is not defined")
    idealizer = idealizer_ring(ideal)
    return quotient_algebra(ideal.algebra, ideal.space, idealizer.space)


def similar_ideals(ideal, other, budget=DEFAULT_BUDGET):
    """Witness c with I + cT = T and J = (I : c), or None.

    Elements are scanned in lexicographic order; the first witness wins.
    Similar right ideals have equal dimension, so a dimension mismatch
    short-circuits to None.
    """
    if ideal.algebra != other.algebra:
        raise ValueError("ideals of different algebras")
    algebra = ideal.algebra
    if ideal.space.dim != other.space.dim:
        return None
    for c in algebra.enumerate_elements(budget):
        generated = RightIdeal.generated_by(algebra, [c])
        if (ideal.space + generated.space).is_full():
            if colon_right(ideal, c).space == other.space:
                return c
    return None


class MaximalSimilarityClass:
    """Similarity class of a maximal right ideal with its size certificate.

    ``members`` is the full class, canonically ordered. For a two-sided
    input the class is the singleton and no family certificate applies.
    For the one-sided case, ``family`` maps each chosen coset
    representative c of the idealizer modulo the ideal to the member
    (M : x + c), where x is the lexicographically first element outside
    the idealizer; this family is injective, which certifies
    ``len(members) >= idealizer_index + 1``.
    """

    __slots__ = ("ideal", "members", "two_sided", "family", "shift",
                 "eigenring_dim")

    def __init__(self, ideal, members, two_sided, family, shift,
                 eigenring_dim):
        self.ideal = ideal
        self.members = members
        self.two_sided = two_sided
        self.family = family
        self.shift = shift
        self.eigenring_dim = eigenring_dim

    @property
    def lower_bound(self):
        if self.two_sided:
            return 1
        return len(self.family) + 1


def similarity_class_of_maximal(ideal, budget=DEFAULT_BUDGET):
    """Full similarity class of a maximal right ideal, with certificate."""
    algebra = ideal.algebra
    idealizer = idealizer_ring(ideal)
    eigen_dim = idealizer.space.dim - ideal.space.dim
    if idealizer.space.is_full():
        return MaximalSimilarityClass(ideal, [ideal.space], True, {}, None,
                                      eigen_dim)
    shift = None
    for x in algebra.enumerate_elements(budget):
        if not idealizer.space.contains_vector(x):
            shift = x
            break
    # Injective family over coset representatives of the ideal inside its
    # idealizer: c + M maps to (M : x + c). The span of a complement basis
    # of M inside the idealizer hits every coset exactly once.
    comp = complement_basis(ideal.space, within=idealizer.space)
    family = {}
    for c in Subspace(comp, algebra.dim, algebra.p).vectors(budget):
        member = colon_right(ideal, (shift + c) % algebra.p)
        family[tuple(int(t) for t in c)] = member.space
    distinct = {s.key() for s in family.values()}
    if len(distinct) != len(family):
        raise AssertionError("certificate family is not injective")
    if ideal.space.key() in distinct:
        raise AssertionError("certificate family hit the base ideal")
    # Brute-force the full class: every (M : c) with c outside the
    # idealizer, plus M itself. Closure of each colon under right
    # multiplication is guaranteed and re-verified on the family members
    # above, so the bulk loop uses the raw preimage.
    members = {ideal.space.key(): ideal.space}
    for c in algebra.enumerate_elements(budget):
        if idealizer.space.contains_vector(c):
            continue
        space = ideal.space.preimage_under(algebra.left_mult_matrix(c))
        members[space.key()] = space
    ordered = [members[k] for k in sorted(members)]
    if len(ordered) < len(family) + 1:
        raise AssertionError("class smaller than its certified lower bound")
    return MaximalSimilarityClass(ideal, ordered, False, family, shift,
                                  eigen_dim)


def transpose_subspace(algebra, space):
    """Image of a subspace under the algebra's transpose involution.

    Swaps left and right ideals of a matrix algebra. Raises when the
    algebra was not built with a declared basis transpose.
    """
    if algebra.basis_transpose is None:
        raise ValueError("algebra has no declared transpose involution")
    perm = algebra.basis_transpose
    if space.dim == 0:
        return space
    rows = space.basis.data[:, perm]
    return Subspace.from_vectors(rows, algebra.dim, algebra.p)
