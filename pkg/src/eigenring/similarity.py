"""Similarity of submodules through colons, idealizers, and eigenrings.

Two submodules N, N' of a module M are similar when M/N and M/N' are
isomorphic.  Everything here studies that relation with exact linear
algebra inside End(M): the colon construction (N : beta) pulls a
submodule back through an endomorphism, the idealizer collects the
endomorphisms stabilizing N, and the eigenring is the quotient of the
idealizer by Hom(M, N).  The headline constructions are:

* an explicit similarity witness for projective M (one linear solve),
* the dichotomy for a maximal N: fully invariant, or an injective
  family of at least 1 + |eigenring| similar maximal submodules,
* the injection of maximal submodules into maximal right ideals of
  End(M) for projective M,
* similarity transfer between submodules of M and right ideals of
  End(M), with the documented failure when M is not a generator,
* the isomorphism eigenring(N) = End(M/N) for projective M.
"""

import numpy as np

from .algebra import RightIdeal, Subring, colon_right, idealizer_ring, \
    quotient_algebra, similar_ideals
from .fqlinalg import DEFAULT_BUDGET, FpMatrix, Subspace, as_vector, \
    check_budget, complement_basis, enumerate_vectors, solve
from .modules import ModuleMap, Submodule, end_ring, hom_into_submodule, \
    is_faithfully_projective, is_isomorphic, is_projective, \
    maximal_submodules, quotient_module, regular_module

__all__ = [
    "SubmoduleIdealizer",
    "Eigenring",
    "DichotomyResult",
    "TransferReport",
    "EigenringQuotientIso",
    "QuasiDuoReport",
    "SimilarityClass",
    "colon_submodule",
    "idealizer_data",
    "eigenring",
    "are_similar",
    "induced_quotient_isomorphism",
    "similarity_witness",
    "enumerate_similar_maximals",
    "max_to_max_right_ideal",
    "idealizer_coincidence",
    "similarity_transfer",
    "eigenring_quotient_iso",
    "quasi_duo_dichotomy",
    "similarity_classes",
]


def _require_submodule_of(module, submodule, name="submodule"):
    if submodule.module != module:
        raise ValueError(f"{name} belongs to a different module")


def _require_endomorphism(module, beta):
    if beta.source != module or beta.target != module:
        raise ValueError("expected an endomorphism of the ambient module")


def colon_submodule(submodule, beta):
    """The preimage submodule (N : beta) = {m : beta(m) in N}.

    Always action-closed because beta commutes with the action.  Key
    special cases: (N : identity) = N, and (N : beta) is the whole
    module exactly when the image of beta lies in N.
    """
    module = submodule.module
    _require_endomorphism(module, beta)
    space = submodule.space.preimage_under(beta.matrix)
    return Submodule(module, space, check=True)


class SubmoduleIdealizer:
    """Idealizer and Hom-ideal of a submodule, inside End(M) coordinates.

    ``idealizer`` is the subring {beta : beta(N) <= N} of the
    endomorphism algebra and ``hom_ideal`` is its two-sided ideal
    {beta : beta(M) <= N} = Hom(M, N).
    """

    __slots__ = ("module", "submodule", "end", "idealizer", "hom_ideal")

    def __init__(self, module, submodule, end, idealizer, hom_ideal):
        if not idealizer.space.contains(hom_ideal.space):
            raise AssertionError("Hom(M, N) escaped the idealizer")
        self.module = module
        self.submodule = submodule
        self.end = end
        self.idealizer = idealizer
        self.hom_ideal = hom_ideal

    def contains_in_idealizer(self, coords):
        return self.idealizer.space.contains_vector(
            as_vector(coords, self.module.algebra.p, self.end.dim))

    def contains_in_hom_ideal(self, coords):
        return self.hom_ideal.space.contains_vector(
            as_vector(coords, self.module.algebra.p, self.end.dim))


def idealizer_data(module, submodule):
    """Idealizer subring and Hom-ideal of a proper submodule."""
    _require_submodule_of(module, submodule)
    if not submodule.is_proper():
        raise ValueError("idealizer data requires a proper submodule")
    end = end_ring(module)
    p = module.algebra.p
    h = end.dim
    hom_coords = hom_into_submodule(module, submodule)
    nb = submodule.space.basis
    perp = submodule.space.perp()
    if nb.rows == 0 or perp.dim == 0:
        idealizer_space = Subspace.full(h, p)
    else:
        wt = perp.basis.transpose()
        rows = [((nb.data @ bm.data @ wt.data) % p).reshape(-1)
                for bm in end.basis_matrices]
        idealizer_space = FpMatrix(
            np.array(rows, dtype=np.int64), p).left_nullspace()
    idealizer = Subring(end.algebra, idealizer_space, check=True)
    hom_ideal = RightIdeal(end.algebra, hom_coords, check=True)
    return SubmoduleIdealizer(module, submodule, end, idealizer, hom_ideal)


class Eigenring:
    """The quotient algebra idealizer(N)/Hom(M, N) with its coset maps."""

    __slots__ = ("data", "quotient")

    def __init__(self, data, quotient):
        self.data = data
        self.quotient = quotient

    @property
    def algebra(self):
        return self.quotient.algebra

    @property
    def dim(self):
        return self.quotient.algebra.dim

    def cardinality(self):
        return self.algebra.p ** self.dim

    def is_division_ring(self, budget=DEFAULT_BUDGET):
        """Whether every nonzero element is a unit."""
        alg = self.algebra
        if alg.dim == 0:
            return False
        for v in alg.enumerate_elements(budget):
            if v.any() and not alg.is_unit(v):
                return False
        return True


def eigenring(module, submodule):
    """Eigenring of a proper submodule as an explicit quotient algebra."""
    data = idealizer_data(module, submodule)
    quotient = quotient_algebra(data.end.algebra, data.hom_ideal.space,
                                data.idealizer.space)
    return Eigenring(data, quotient)


def are_similar(module, left, right, budget=DEFAULT_BUDGET, trials=64,
                seed=0):
    """Three-valued isomorphism test between M/left and M/right.

    Returns the verdict/witness pair of the underlying module
    isomorphism search; the witness, when present, is an isomorphism
    from M/left to M/right between the canonical quotient carriers.
    """
    for name, sub in (("left", left), ("right", right)):
        _require_submodule_of(module, sub, name)
        if not sub.is_proper():
            raise ValueError(f"{name} submodule must be proper")
    qa = quotient_module(module, left).quotient
    qb = quotient_module(module, right).quotient
    return is_isomorphic(qa, qb, budget=budget, trials=trials, seed=seed)


def induced_quotient_isomorphism(submodule, beta):
    """Isomorphism M/(N : beta) -> M/N induced by beta.

    Requires N + beta(M) = M; then the coset map [m] -> [beta(m)] is a
    well-defined isomorphism, returned between the canonical quotient
    carriers and verified end to end.
    """
    module = submodule.module
    _require_endomorphism(module, beta)
    if not (submodule.space + beta.image()).is_full():
        raise ValueError(
            "the submodule and the endomorphism image do not fill the module")
    p = module.algebra.p
    colon = colon_submodule(submodule, beta)
    src = quotient_module(module, colon)
    tgt = quotient_module(module, submodule)
    matrix = FpMatrix(
        (src.lift.data @ beta.matrix.data @ tgt.projection.matrix.data) % p,
        p)
    iso = ModuleMap(src.quotient, tgt.quotient, matrix, check=True)
    if not iso.is_isomorphism():
        raise AssertionError("induced quotient map failed to be bijective")
    return iso


def similarity_witness(module, left, right, phi=None, budget=DEFAULT_BUDGET,
                       trials=64, seed=0):
    """Endomorphism beta with right + beta(M) = M and (right : beta) = left.

    ``phi`` is an isomorphism M/left -> M/right between the canonical
    quotient carriers; when omitted it is searched for first.  The
    returned beta satisfies proj_right(beta(m)) = phi(proj_left(m)) and
    both postconditions are asserted before returning.  A projective
    module always admits the lift; an inconsistent lifting system
    signals a violated precondition.
    """
    qleft = quotient_module(module, left)
    qright = quotient_module(module, right)
    if phi is None:
        res = is_isomorphic(qleft.quotient, qright.quotient, budget=budget,
                            trials=trials, seed=seed)
        if res.verdict != "yes":
            raise ValueError(
                f"no quotient isomorphism available (verdict {res.verdict})")
        phi = res.witness
    else:
        if phi.source != qleft.quotient or phi.target != qright.quotient:
            raise ValueError(
                "isomorphism does not match the canonical quotient carriers")
        if not phi.is_isomorphism():
            raise ValueError("supplied map is not an isomorphism")
    end = end_ring(module)
    p = module.algebra.p
    target = (qleft.projection.matrix.data @ phi.matrix.data) % p
    rows = [((bm.data @ qright.projection.matrix.data) % p).reshape(-1)
            for bm in end.basis_matrices]
    system = FpMatrix(np.array(rows, dtype=np.int64), p)
    flat = FpMatrix(target.reshape(-1, 1), p)
    sol, _ = solve(system.transpose(), flat)
    if sol is None:
        raise ValueError(
            "no endomorphism lifts the quotient isomorphism; "
            "the module is not projective")
    beta = end.map_from_coords(sol.data.reshape(-1))
    if not (right.space + beta.image()).is_full():
        raise AssertionError("witness image does not complement the target")
    if colon_submodule(right, beta).space != left.space:
        raise AssertionError("witness colon does not recover the source")
    return beta


class DichotomyResult:
    """Outcome of the similar-maximal enumeration for a maximal submodule.

    Either ``branch == "fully_invariant"`` (the idealizer is all of
    End(M)) or ``branch == "family"`` with ``members`` an injective
    family of pairwise-distinct maximal submodules similar to the input
    one, of size at least 1 + |eigenring|.  ``witnesses[i]`` is an
    isomorphism M/members[i] -> M/N (None for the input submodule
    itself).
    """

    __slots__ = ("module", "submodule", "branch", "alpha", "members",
                 "witnesses", "eigenring_dim")

    def __init__(self, module, submodule, branch, alpha, members, witnesses,
                 eigenring_dim):
        self.module = module
        self.submodule = submodule
        self.branch = branch
        self.alpha = alpha
        self.members = members
        self.witnesses = witnesses
        self.eigenring_dim = eigenring_dim

    @property
    def lower_bound(self):
        if self.branch == "fully_invariant":
            return 1
        return 1 + self.module.algebra.p ** self.eigenring_dim


def _first_outside(space, dim, p, budget):
    """Lexicographically first vector outside a proper subspace.

    Scans the standard basis, then sums of two basis vectors, then all
    vectors; a proper subspace always misses some basis vector sum, so
    the scan terminates early in practice.
    """
    eye = np.eye(dim, dtype=np.int64)
    for i in range(dim):
        if not space.contains_vector(eye[i]):
            return eye[i]
    for i in range(dim):
        for j in range(i + 1, dim):
            cand = (eye[i] + eye[j]) % p
            if not space.contains_vector(cand):
                return cand
    for cand in enumerate_vectors(dim, p, budget):
        if not space.contains_vector(cand):
            return cand
    raise AssertionError("no vector found outside a proper subspace")


def enumerate_similar_maximals(module, submodule, budget=DEFAULT_BUDGET):
    """Dichotomy for a maximal submodule N.

    Either N is fully invariant (every endomorphism maps N into N), or
    there is a lexicographically first alpha in End(M) outside the
    idealizer and the family {N} united with {(N : alpha + beta)} for
    beta over all eigenring coset representatives consists of
    pairwise-distinct maximal submodules similar to N.  Distinctness,
    maximality, and the similarity witnesses are all verified.
    """
    maxes = maximal_submodules(module, budget)
    max_keys = {s.space.key() for s in maxes}
    if submodule.space.key() not in max_keys:
        raise ValueError("submodule is not maximal")
    eig = eigenring(module, submodule)
    data = eig.data
    p = module.algebra.p
    if data.idealizer.space.is_full():
        return DichotomyResult(module, submodule, "fully_invariant", None,
                               [submodule], [None], eig.dim)
    alpha = _first_outside(data.idealizer.space, data.end.dim, p, budget)
    reps = complement_basis(data.hom_ideal.space,
                            within=data.idealizer.space)
    check_budget(p ** reps.rows, budget, "eigenring coset enumeration")
    members = [submodule]
    witnesses = [None]
    for coeff in enumerate_vectors(reps.rows, p, budget):
        shift = (coeff @ reps.data) % p if reps.rows else \
            np.zeros(data.end.dim, dtype=np.int64)
        gamma = data.end.map_from_coords((alpha + shift) % p)
        members.append(colon_submodule(submodule, gamma))
        witnesses.append(induced_quotient_isomorphism(submodule, gamma))
    keys = {m.space.key() for m in members}
    if len(keys) != len(members):
        raise AssertionError("colon family failed to be injective")
    if not keys <= max_keys:
        raise AssertionError("colon family left the maximal submodules")
    if len(members) < 1 + p ** eig.dim:
        raise AssertionError("family smaller than the eigenring bound")
    return DichotomyResult(module, submodule, "family", alpha, members,
                           witnesses, eig.dim)


def max_to_max_right_ideal(module, submodule, budget=DEFAULT_BUDGET):
    """Hom(M, N) as a maximal right ideal of End(M), for projective M.

    The maximality assertion runs through the regular module of the
    endomorphism algebra; distinct maximal submodules give distinct
    ideals because N is recoverable as the joint image of Hom(M, N)
    when M generates N (true for N maximal in projective M).
    """
    flag, _ = is_projective(module, budget)
    if not flag:
        raise ValueError("requires a projective module")
    maxes = maximal_submodules(module, budget)
    if submodule.space.key() not in {s.space.key() for s in maxes}:
        raise ValueError("submodule is not maximal")
    end = end_ring(module)
    ideal = RightIdeal(end.algebra, hom_into_submodule(module, submodule),
                       check=True)
    reg = regular_module(end.algebra)
    maxr_keys = {s.space.key() for s in maximal_submodules(reg, budget)}
    if ideal.space.key() not in maxr_keys:
        raise AssertionError(
            "Hom(M, N) failed to be a maximal right ideal of End(M)")
    return ideal


def idealizer_coincidence(module, submodule, budget=DEFAULT_BUDGET):
    """Whether the submodule idealizer equals the ring idealizer of Hom(M,N).

    For projective M and maximal N the two subrings of End(M) coincide;
    the comparison itself is unconditional.
    """
    data = idealizer_data(module, submodule)
    ring_side = idealizer_ring(data.hom_ideal)
    return data.idealizer.space == ring_side.space


class TransferReport:
    """Similarity transfer between submodules of M and right ideals of End(M).

    ``forward`` records whether submodule similarity implied ideal
    similarity (applicable for projective M); ``backward`` records the
    converse (applicable for faithfully projective M).  Values are
    "pass", "fail", "vacuous" (antecedent false), "skipped" (an
    isomorphism search returned unknown), or "not-applicable".
    ``counterexample_witnessed`` flags the documented failure shape:
    ideals similar, submodules not, module not faithfully projective.
    """

    __slots__ = ("module", "left", "right", "projective",
                 "faithfully_projective", "submodule_verdict",
                 "ideal_verdict", "ideal_witness", "forward", "backward",
                 "counterexample_witnessed")

    def __init__(self, **fields):
        for name in self.__slots__:
            setattr(self, name, fields[name])


def similarity_transfer(module, left, right, budget=DEFAULT_BUDGET,
                        trials=64, seed=0):
    """Run both directions of similarity transfer and report the outcome.

    Forward (projective M): if left ~ right then Hom(M,left) ~
    Hom(M,right) as right ideals of End(M); verified constructively by
    transporting the similarity witness beta and checking
    A_right + beta*End = End and (A_right : beta) = A_left.  Backward
    (faithfully projective M): an ideal similarity witness c turns into
    an endomorphism realizing right + c(M) = M and (right : c) = left,
    which induces the quotient isomorphism explicitly.
    """
    for name, sub in (("left", left), ("right", right)):
        _require_submodule_of(module, sub, name)
        if not sub.is_proper():
            raise ValueError(f"{name} submodule must be proper")
    end = end_ring(module)
    projective = is_projective(module, budget)[0]
    faithfully = is_faithfully_projective(module, budget)
    sub_res = are_similar(module, left, right, budget, trials, seed)
    a_left = RightIdeal(end.algebra, hom_into_submodule(module, left),
                        check=True)
    a_right = RightIdeal(end.algebra, hom_into_submodule(module, right),
                         check=True)
    ideal_witness = similar_ideals(a_right, a_left, budget)
    ideal_verdict = "yes" if ideal_witness is not None else "no"

    if not projective:
        forward = "not-applicable"
    elif sub_res.verdict == "unknown":
        forward = "skipped"
    elif sub_res.verdict == "no":
        forward = "vacuous"
    else:
        beta = similarity_witness(module, left, right, phi=sub_res.witness,
                                  budget=budget, trials=trials, seed=seed)
        c_beta = end.from_matrix(beta.matrix)
        generated = RightIdeal.generated_by(end.algebra, [c_beta])
        spanning = (a_right.space + generated.space).is_full()
        colon_ok = colon_right(a_right, c_beta).space == a_left.space
        forward = "pass" if (spanning and colon_ok
                             and ideal_verdict == "yes") else "fail"

    if not faithfully:
        backward = "not-applicable"
    elif ideal_verdict == "no":
        backward = "vacuous"
    else:
        beta = end.map_from_coords(ideal_witness)
        spanning = (right.space + beta.image()).is_full()
        colon_ok = colon_submodule(right, beta).space == left.space
        constructed = False
        if spanning and colon_ok:
            induced_quotient_isomorphism(right, beta)
            constructed = True
        backward = "pass" if (constructed
                              and sub_res.verdict == "yes") else "fail"

    counterexample = (not faithfully and ideal_verdict == "yes"
                      and sub_res.verdict == "no")
    return TransferReport(
        module=module, left=left, right=right, projective=projective,
        faithfully_projective=faithfully,
        submodule_verdict=sub_res.verdict, ideal_verdict=ideal_verdict,
        ideal_witness=ideal_witness, forward=forward, backward=backward,
        counterexample_witnessed=counterexample)


class EigenringQuotientIso:
    """The map alpha -> (induced endomorphism of M/N) on the idealizer.

    ``matrix`` sends idealizer-basis coordinates to End(M/N)
    coordinates; its kernel is verified to be exactly Hom(M, N), so the
    eigenring embeds in End(M/N), and ``surjective`` reports whether
    the embedding is onto (always the case for projective M).
    """

    __slots__ = ("eigenring", "quotient_end", "matrix", "kernel_matches",
                 "surjective")

    def __init__(self, eigenring, quotient_end, matrix, kernel_matches,
                 surjective):
        self.eigenring = eigenring
        self.quotient_end = quotient_end
        self.matrix = matrix
        self.kernel_matches = kernel_matches
        self.surjective = surjective


def eigenring_quotient_iso(module, submodule, budget=DEFAULT_BUDGET):
    """Realize idealizer(N) -> End(M/N), alpha -> [m] -> [alpha(m)].

    The map is computed on the idealizer basis, checked multiplicative,
    its kernel compared against Hom(M, N), and its surjectivity decided
    by rank.  For projective M surjectivity is asserted.
    """
    eig = eigenring(module, submodule)
    data = eig.data
    end = data.end
    p = module.algebra.p
    quot = quotient_module(module, submodule)
    end_q = end_ring(quot.quotient)
    lift = quot.lift.data
    proj = quot.projection.matrix.data

    def induced_coords(end_coords):
        x = end.to_matrix(end_coords).data
        return end_q.from_matrix(FpMatrix((lift @ x @ proj) % p, p))

    basis = data.idealizer.space.basis
    rows = [induced_coords(b) for b in basis.data]
    matrix = FpMatrix(np.array(rows, dtype=np.int64).reshape(
        basis.rows, end_q.dim), p)
    for i in range(basis.rows):
        for j in range(basis.rows):
            prod = end.algebra.multiply(basis.data[i], basis.data[j])
            lhs = end_q.algebra.multiply(rows[i], rows[j])
            if not np.array_equal(induced_coords(prod), lhs):
                raise AssertionError("induced map is not multiplicative")
    kernel_coords = matrix.left_nullspace()
    kernel_in_end = Subspace.from_vectors(
        (kernel_coords.basis.data @ basis.data) % p, end.dim, p)
    kernel_matches = kernel_in_end == data.hom_ideal.space
    if not kernel_matches:
        raise AssertionError("kernel of the induced map is not Hom(M, N)")
    surjective = matrix.rank() == end_q.dim
    if is_projective(module, budget)[0] and not surjective:
        raise AssertionError(
            "induced map not surjective on a projective module")
    return EigenringQuotientIso(eig, end_q, matrix, kernel_matches,
                                surjective)


class QuasiDuoReport:
    """Either |Max(M)| >= 3, or Hom(M,N) = (N :_E x) checked for all x."""

    __slots__ = ("module", "submodule", "max_count", "checked", "holds")

    def __init__(self, module, submodule, max_count, checked, holds):
        self.module = module
        self.submodule = submodule
        self.max_count = max_count
        self.checked = checked
        self.holds = holds


def quasi_duo_dichotomy(module, submodule, budget=DEFAULT_BUDGET):
    """When M has at most two maximal submodules, pin Hom(M, N) pointwise.

    For every x outside N, the endomorphisms sending x into N are
    compared with Hom(M, N); with three or more maximal submodules the
    check is skipped and only the count is reported.
    """
    maxes = maximal_submodules(module, budget)
    if submodule.space.key() not in {s.space.key() for s in maxes}:
        raise ValueError("submodule is not maximal")
    count = len(maxes)
    if count >= 3:
        return QuasiDuoReport(module, submodule, count, False, None)
    end = end_ring(module)
    p = module.algebra.p
    a_space = hom_into_submodule(module, submodule)
    wt = submodule.space.perp().basis.transpose()
    holds = True
    for x in enumerate_vectors(module.dim, p, budget):
        if submodule.space.contains_vector(x):
            continue
        rows = [((x @ bm.data) @ wt.data) % p for bm in end.basis_matrices]
        colon_of_x = FpMatrix(np.array(rows, dtype=np.int64),
                              p).left_nullspace()
        if colon_of_x != a_space:
            holds = False
            break
    return QuasiDuoReport(module, submodule, count, True, holds)


class SimilarityClass:
    """One similarity class of maximal submodules with verified witnesses.

    ``witnesses[member]`` is an isomorphism M/representative ->
    M/member; pairwise composites are checked to be isomorphisms, which
    verifies symmetry and transitivity on the class.
    """

    __slots__ = ("module", "representative", "members", "witnesses")

    def __init__(self, module, representative, members, witnesses):
        self.module = module
        self.representative = representative
        self.members = members
        self.witnesses = witnesses

    def __len__(self):
        return len(self.members)


def similarity_classes(module, budget=DEFAULT_BUDGET, trials=64, seed=0):
    """Partition Max(M) into similarity classes.

    Returns (classes, unknown_pairs).  Classes merge only on definite
    "yes" verdicts; any "unknown" pair is surfaced instead of being
    merged or split silently.
    """
    maxes = sorted(maximal_submodules(module, budget),
                   key=lambda s: s.space.key())
    n = len(maxes)
    parent = list(range(n))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    unknown_pairs = []
    for i in range(n):
        for j in range(i + 1, n):
            res = are_similar(module, maxes[i], maxes[j], budget, trials,
                              seed)
            if res.verdict == "yes":
                parent[find(i)] = find(j)
            elif res.verdict == "unknown":
                unknown_pairs.append((maxes[i], maxes[j]))
    groups = {}
    for i in range(n):
        groups.setdefault(find(i), []).append(i)
    classes = []
    for idxs in sorted(groups.values(),
                       key=lambda ids: maxes[ids[0]].space.key()):
        members = [maxes[i] for i in idxs]
        rep = members[0]
        witnesses = {}
        for mem in members:
            res = are_similar(module, rep, mem, budget, trials, seed)
            if res.verdict != "yes":
                raise AssertionError("class member lost its witness")
            witnesses[mem] = res.witness
        for a in members:
            for b in members:
                wa, wb = witnesses[a], witnesses[b]
                back = ModuleMap(wa.target, wa.source, wa.matrix.inverse(),
                                 check=True)
                if not back.then(wb).is_isomorphism():
                    raise AssertionError(
                        "witness composition failed between class members")
        classes.append(SimilarityClass(module, rep, members, witnesses))
    return classes, unknown_pairs
