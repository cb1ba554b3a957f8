"""Exact linear algebra over prime fields F_p.

Conventions used across the package:

* vectors are rows (1-d numpy int64 arrays with entries in [0, p));
* a subspace is always stored as its reduced row echelon basis with zero
  rows dropped, which is the unique canonical representative, so subspace
  equality is bit-identity of the basis;
* every brute-force enumeration is guarded by an explicit budget.
"""

from itertools import product as _cartesian

import numpy as np

from .backend import kernel_matmul, kernel_rref

DEFAULT_BUDGET = 10**6

_MAX_PRIME = 1 << 20  # keeps all int64 accumulations exact


class BudgetExceededError(RuntimeError):
    """Raised when an enumeration would exceed the configured budget."""


def check_budget(count, budget, what):
    if count > budget:
        raise BudgetExceededError(
            f"enumeration over budget: {what} needs {count} candidates, "
            f"budget is {budget}")


def _check_prime(p):
    if not isinstance(p, (int, np.integer)):
        raise ValueError(f"modulus must be an integer, got {type(p).__name__}")
    p = int(p)
    if p < 2 or p >= _MAX_PRIME:
        raise ValueError(f"modulus {p} out of supported range [2, 2**20)")
    if p % 2 == 0 and p != 2:
        raise ValueError(f"modulus {p} is not prime")
    d = 3
    while d * d <= p:
        if p % d == 0:
            raise ValueError(f"modulus {p} is not prime")
        d += 2
    return p


def inv_mod(a, p):
    """Inverse of a nonzero residue mod p (Fermat)."""
    a = int(a) % p
    if a == 0:
        raise ZeroDivisionError(f"0 is not invertible mod {p}")
    return pow(a, p - 2, p)


def as_vector(v, p, length=None):
    """Coerce to a reduced 1-d int64 vector."""
    arr = np.asarray(v, dtype=np.int64) % p
    if arr.ndim != 1:
        raise ValueError(f"expected a vector, got shape {arr.shape}")
    if length is not None and arr.shape[0] != length:
        raise ValueError(f"expected length {length}, got {arr.shape[0]}")
    return arr


class FpMatrix:
    """Immutable matrix over F_p backed by a reduced int64 array."""

    __slots__ = ("p", "data", "_rref")

    def __init__(self, data, p):
        p = _check_prime(p)
        arr = np.asarray(data, dtype=np.int64)
        if arr.ndim == 1:
            arr = arr.reshape(1, -1)
        if arr.ndim != 2:
            raise ValueError(f"matrix must be 2-d, got shape {arr.shape}")
        arr = np.ascontiguousarray(arr % p)
        arr.setflags(write=False)
        self.p = p
        self.data = arr
        self._rref = None

    @classmethod
    def _wrap(cls, arr, p):
        # Internal fast path: arr is already a reduced, contiguous int64 array.
        self = object.__new__(cls)
        arr.setflags(write=False)
        self.p = p
        self.data = arr
        self._rref = None
        return self

    @classmethod
    def identity(cls, n, p):
        return cls._wrap(np.eye(n, dtype=np.int64), p)

    @classmethod
    def zeros(cls, rows, cols, p):
        return cls._wrap(np.zeros((rows, cols), dtype=np.int64), p)

    @classmethod
    def from_rows(cls, rows, p):
        arr = np.array(list(rows), dtype=np.int64)
        if arr.ndim == 1:
            arr = arr.reshape(0, 0) if arr.size == 0 else arr.reshape(1, -1)
        return cls(arr, p)

    @classmethod
    def vstack(cls, mats):
        mats = list(mats)
        if not mats:
            raise ValueError("vstack of no matrices")
        p = mats[0].p
        for m in mats:
            if m.p != p:
                raise ValueError("modulus mismatch in vstack")
        return cls._wrap(
            np.ascontiguousarray(np.vstack([m.data for m in mats])), p)

    @property
    def rows(self):
        return self.data.shape[0]

    @property
    def cols(self):
        return self.data.shape[1]

    @property
    def shape(self):
        return self.data.shape

    def _same_field(self, other, op):
        if not isinstance(other, FpMatrix):
            raise TypeError(f"cannot {op} FpMatrix with {type(other).__name__}")
        if other.p != self.p:
            raise ValueError(f"modulus mismatch: {self.p} vs {other.p}")

    def __add__(self, other):
        self._same_field(other, "add")
        if self.shape != other.shape:
            raise ValueError(f"shape mismatch: {self.shape} vs {other.shape}")
        return FpMatrix._wrap((self.data + other.data) % self.p, self.p)

    def __sub__(self, other):
        self._same_field(other, "subtract")
        if self.shape != other.shape:
            raise ValueError(f"shape mismatch: {self.shape} vs {other.shape}")
        return FpMatrix._wrap((self.data - other.data) % self.p, self.p)

    def __neg__(self):
        return FpMatrix._wrap((-self.data) % self.p, self.p)

    def __matmul__(self, other):
        self._same_field(other, "multiply")
        if self.cols != other.rows:
            raise ValueError(
                f"inner dimension mismatch: {self.shape} @ {other.shape}")
        return FpMatrix._wrap(kernel_matmul(self.data, other.data, self.p),
                              self.p)

    def scale(self, c):
        return FpMatrix._wrap((self.data * (int(c) % self.p)) % self.p, self.p)

    def __eq__(self, other):
        if not isinstance(other, FpMatrix):
            return NotImplemented
        return (self.p == other.p and self.shape == other.shape
                and np.array_equal(self.data, other.data))

    def __hash__(self):
        return hash((self.p, self.shape, self.data.tobytes()))

    def __repr__(self):
        return f"FpMatrix(p={self.p}, {self.data.tolist()})"

    def tolist(self):
        return self.data.tolist()

    def row(self, i):
        return self.data[i]

    def transpose(self):
        return FpMatrix._wrap(np.ascontiguousarray(self.data.T), self.p)

    def is_zero(self):
        return not self.data.any()

    def is_identity(self):
        return (self.rows == self.cols
                and np.array_equal(self.data, np.eye(self.rows, dtype=np.int64)))

    def rref_pivots(self):
        """Canonical RREF together with the pivot column indices."""
        if self._rref is None:
            if self.rows == 0 or self.cols == 0:
                self._rref = (self, ())
            else:
                red, piv = kernel_rref(self.data, self.p)
                self._rref = (FpMatrix._wrap(red, self.p), tuple(piv))
        return self._rref

    def rref(self):
        return self.rref_pivots()[0]

    def rank(self):
        return len(self.rref_pivots()[1])

    def inverse(self):
        if self.rows != self.cols:
            raise ValueError(f"not square: {self.shape}")
        n = self.rows
        aug = np.hstack([self.data, np.eye(n, dtype=np.int64)])
        red, piv = kernel_rref(np.ascontiguousarray(aug), self.p)
        if len(piv) < n or piv[n - 1] >= n:
            raise ValueError("matrix is singular")
        return FpMatrix._wrap(np.ascontiguousarray(red[:, n:]), self.p)

    def power(self, k):
        """Matrix power by repeated squaring (k >= 0)."""
        if self.rows != self.cols:
            raise ValueError(f"not square: {self.shape}")
        result = FpMatrix.identity(self.rows, self.p)
        base = self
        k = int(k)
        while k > 0:
            if k & 1:
                result = result @ base
            base = base @ base
            k >>= 1
        return result

    def nullspace(self):
        """Right kernel {x : self @ x = 0}, solutions returned as rows."""
        red, piv = self.rref_pivots()
        free = [c for c in range(self.cols) if c not in piv]
        basis = np.zeros((len(free), self.cols), dtype=np.int64)
        for idx, c in enumerate(free):
            basis[idx, c] = 1
            for r, pc in enumerate(piv):
                basis[idx, pc] = (-red.data[r, c]) % self.p
        return Subspace.from_vectors(basis, self.cols, self.p)

    def left_nullspace(self):
        """Left kernel {v : v @ self = 0}."""
        return self.transpose().nullspace()


def solve(a, b):
    """Solve a @ x = b for x (columns of b solved simultaneously).

    Returns ``(x, kernel)`` where ``x`` is one solution (free variables set
    to zero) or None when the system is inconsistent, and ``kernel`` is the
    right kernel of ``a``. Absence of a solution is a normal outcome.
    """
    if not isinstance(a, FpMatrix) or not isinstance(b, FpMatrix):
        raise TypeError("solve expects FpMatrix arguments")
    if a.p != b.p:
        raise ValueError(f"modulus mismatch: {a.p} vs {b.p}")
    if a.rows != b.rows:
        raise ValueError(f"row mismatch: {a.rows} vs {b.rows}")
    n, k = a.cols, b.cols
    kernel = a.nullspace()
    if n == 0:
        if b.is_zero():
            return FpMatrix.zeros(0, k, a.p), kernel
        return None, kernel
    aug = np.hstack([a.data, b.data])
    red, piv = kernel_rref(np.ascontiguousarray(aug), a.p)
    if piv and piv[-1] >= n:
        return None, kernel
    x = np.zeros((n, k), dtype=np.int64)
    for r, pc in enumerate(piv):
        x[pc] = red[r, n:]
    return FpMatrix._wrap(x, a.p), kernel


class Subspace:
    """Subspace of F_p^n in canonical form (RREF basis, zero rows dropped)."""

    __slots__ = ("ambient_dim", "p", "basis", "pivots", "_key")

    def __init__(self, basis, ambient_dim, p, *, _canonical=False):
        p = _check_prime(p)
        if not isinstance(basis, FpMatrix):
            basis = FpMatrix(basis, p)
        if basis.cols != ambient_dim and basis.rows > 0:
            raise ValueError(
                f"basis width {basis.cols} != ambient dim {ambient_dim}")
        if not _canonical:
            red, piv = basis.rref_pivots()
            basis = FpMatrix._wrap(
                np.ascontiguousarray(red.data[:len(piv)]), p)
            pivots = piv
        else:
            pivots = basis.rref_pivots()[1]
        self.ambient_dim = ambient_dim
        self.p = p
        self.basis = basis
        self.pivots = pivots
        self._key = None

    @classmethod
    def from_vectors(cls, vectors, ambient_dim, p):
        arr = np.asarray(list(vectors), dtype=np.int64)
        if arr.size == 0:
            arr = np.zeros((0, ambient_dim), dtype=np.int64)
        return cls(FpMatrix(arr, p), ambient_dim, p)

    @classmethod
    def zero(cls, ambient_dim, p):
        return cls(FpMatrix.zeros(0, ambient_dim, p), ambient_dim, p,
                   _canonical=True)

    @classmethod
    def full(cls, ambient_dim, p):
        return cls(FpMatrix.identity(ambient_dim, p), ambient_dim, p,
                   _canonical=True)

    @property
    def dim(self):
        return self.basis.rows

    @property
    def codim(self):
        return self.ambient_dim - self.dim

    def is_zero(self):
        return self.dim == 0

    def is_full(self):
        return self.dim == self.ambient_dim

    def key(self):
        """Deterministic total-order key (dimension, then basis entries)."""
        if self._key is None:
            self._key = (self.dim,
                         tuple(int(x) for x in self.basis.data.ravel()))
        return self._key

    def __eq__(self, other):
        if not isinstance(other, Subspace):
            return NotImplemented
        return (self.p == other.p and self.ambient_dim == other.ambient_dim
                and self.basis == other.basis)

    def __hash__(self):
        return hash((self.ambient_dim, self.p, self.basis))

    def __repr__(self):
        return (f"Subspace(dim {self.dim} of F_{self.p}^{self.ambient_dim}, "
                f"basis={self.basis.tolist()})")

    def _same_ambient(self, other):
        if self.p != other.p or self.ambient_dim != other.ambient_dim:
            raise ValueError(
                f"ambient mismatch: F_{self.p}^{self.ambient_dim} vs "
                f"F_{other.p}^{other.ambient_dim}")

    def reduce_vector(self, v):
        """Canonical coset representative of v modulo this subspace."""
        v = as_vector(v, self.p, self.ambient_dim)
        if self.dim == 0:
            return v
        coeffs = v[list(self.pivots)]
        if not coeffs.any():
            return v
        return (v - coeffs @ self.basis.data) % self.p

    def contains_vector(self, v):
        return not self.reduce_vector(v).any()

    def contains(self, other):
        self._same_ambient(other)
        if other.dim > self.dim:
            return False
        return all(self.contains_vector(row) for row in other.basis.data)

    def coordinates_of(self, v):
        """Coefficients x with x @ basis = v, or None if v is outside."""
        v = as_vector(v, self.p, self.ambient_dim)
        coords = v[list(self.pivots)] if self.dim else np.zeros(0, np.int64)
        residue = (v - coords @ self.basis.data) % self.p if self.dim else v
        if residue.any():
            return None
        return coords

    def __add__(self, other):
        self._same_ambient(other)
        if self.dim == 0:
            return other
        if other.dim == 0:
            return self
        return Subspace(FpMatrix.vstack([self.basis, other.basis]),
                        self.ambient_dim, self.p)

    def perp(self):
        """Orthogonal complement under the standard dot product."""
        if self.dim == 0:
            return Subspace.full(self.ambient_dim, self.p)
        return self.basis.nullspace()

    def intersect(self, other):
        self._same_ambient(other)
        if self.dim == 0 or other.dim == 0:
            return Subspace.zero(self.ambient_dim, self.p)
        if self.contains(other):
            return other
        if other.contains(self):
            return self
        return (self.perp() + other.perp()).perp()

    def image_under(self, mat):
        """{v @ mat : v in self} as a subspace of the codomain."""
        if mat.rows != self.ambient_dim:
            raise ValueError(
                f"map rows {mat.rows} != ambient dim {self.ambient_dim}")
        if self.dim == 0:
            return Subspace.zero(mat.cols, self.p)
        return Subspace(self.basis @ mat, mat.cols, self.p)

    def preimage_under(self, mat):
        """{x : x @ mat in self} as a subspace of the domain."""
        if mat.cols != self.ambient_dim:
            raise ValueError(
                f"map cols {mat.cols} != ambient dim {self.ambient_dim}")
        constraints = self.perp()
        if constraints.dim == 0:
            return Subspace.full(mat.rows, self.p)
        return (mat @ constraints.basis.transpose()).left_nullspace()

    def vectors(self, budget=DEFAULT_BUDGET):
        """All p^dim elements, in lexicographic coefficient order."""
        check_budget(self.p ** self.dim, budget,
                     f"subspace of dimension {self.dim} over F_{self.p}")
        basis = self.basis.data
        for coeffs in _cartesian(range(self.p), repeat=self.dim):
            if self.dim == 0:
                yield np.zeros(self.ambient_dim, dtype=np.int64)
            else:
                yield (np.array(coeffs, dtype=np.int64) @ basis) % self.p


def enumerate_vectors(dim, p, budget=DEFAULT_BUDGET):
    """All p^dim row vectors of F_p^dim in lexicographic order."""
    p = _check_prime(p)
    check_budget(p ** dim, budget, f"F_{p}^{dim}")
    for tup in _cartesian(range(p), repeat=dim):
        yield np.array(tup, dtype=np.int64)


def sum_subspaces(spaces, ambient_dim, p):
    total = Subspace.zero(ambient_dim, p)
    for s in spaces:
        total = total + s
    return total


def complement_basis(sub, within=None):
    """Rows extending ``sub``'s basis to a basis of ``within``.

    Scans candidate vectors in order (the standard basis for the full space,
    or ``within``'s canonical basis rows) and keeps each one that is
    independent of everything chosen so far. Deterministic.
    """
    ambient, p = sub.ambient_dim, sub.p
    if within is None:
        candidates = np.eye(ambient, dtype=np.int64)
        target_dim = ambient
    else:
        sub._same_ambient(within)
        if not within.contains(sub):
            raise ValueError("complement requested inside a non-superspace")
        candidates = within.basis.data
        target_dim = within.dim
    chosen = []
    current = sub
    for cand in candidates:
        if current.dim == target_dim:
            break
        if not current.contains_vector(cand):
            chosen.append(cand)
            current = current + Subspace.from_vectors([cand], ambient, p)
    if current.dim != target_dim:
        raise AssertionError("complement construction failed to fill space")
    if not chosen:
        return FpMatrix.zeros(0, ambient, p)
    return FpMatrix.from_rows(chosen, p)
