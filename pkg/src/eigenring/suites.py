"""Named verification suites over the standard corpus.

Each suite runs a family of checks and returns CheckRecord rows with a
verdict of "pass", "fail", or "skipped" plus a small JSON-serializable
certificate. Budget exhaustion becomes a skip with an explanation,
engine-level AssertionError becomes a fail; everything else propagates
as a genuine bug. Record order is deterministic: instances in corpus
order, submodules in canonical order, so two runs with the same inputs
produce identical reports apart from wall-clock timings.
"""

import time
from itertools import combinations

import numpy as np

from .algebra import (
    RightIdeal,
    eigenring_of_ideal,
    matrix_algebra,
    similar_ideals,
    similarity_class_of_maximal,
    triangular_algebra,
)
from .corpus import corpus_instances, default_corpus
from .fqlinalg import (
    BudgetExceededError,
    DEFAULT_BUDGET,
    Subspace,
    enumerate_vectors,
)
from .matring import (
    count_bounds_report,
    enumerate_maxl_matrix_ring,
    parallel_representative,
    stone_equal,
    stone_quotient_length,
)
from .modules import (
    Submodule,
    composition_factors,
    decompose_into_locals,
    end_ring,
    end_ring_is_local,
    hom_into_submodule,
    idempotent_module,
    is_faithfully_projective,
    is_projective,
    length,
    maximal_submodules,
    maximal_submodules_by_simple_quotients,
    quotient_module,
    regular_module,
    submodule_lattice,
)
from .similarity import (
    are_similar,
    eigenring,
    eigenring_quotient_iso,
    enumerate_similar_maximals,
    idealizer_coincidence,
    quasi_duo_dichotomy,
    similarity_classes,
    similarity_transfer,
)


class SkipCheck(Exception):
    """Raised inside a check body to record a skip with a reason."""


class CheckRecord:
    """One check outcome: id, instance, verdict, certificate, timing."""

    __slots__ = ("theorem_id", "instance", "verdict", "certificate",
                 "time_ms")

    def __init__(self, theorem_id, instance, verdict, certificate, time_ms):
        self.theorem_id = theorem_id
        self.instance = instance
        self.verdict = verdict
        self.certificate = certificate
        self.time_ms = time_ms

    def to_json(self):
        return {
            "theorem_id": self.theorem_id,
            "instance": self.instance,
            "verdict": self.verdict,
            "certificate": self.certificate,
            "time_ms": round(self.time_ms, 3),
        }

    def __repr__(self):
        return (f"CheckRecord({self.theorem_id!r}, {self.instance!r}, "
                f"{self.verdict!r})")


class VerificationReport:
    """All records of one suite run plus the run configuration."""

    __slots__ = ("suite", "budget", "trials", "seed", "records")

    def __init__(self, suite, budget, trials, seed, records):
        self.suite = suite
        self.budget = budget
        self.trials = trials
        self.seed = seed
        self.records = records

    def summary(self):
        counts = {"pass": 0, "fail": 0, "skipped": 0}
        for rec in self.records:
            counts[rec.verdict] += 1
        return counts

    def to_json(self):
        return {
            "suite": self.suite,
            "budget": self.budget,
            "trials": self.trials,
            "seed": self.seed,
            "records": [rec.to_json() for rec in self.records],
            "summary": self.summary(),
        }


def _run_check(records, theorem_id, instance, fn):
    """Run one check body and append its record.

    The body returns either a certificate dict (an unconditional pass)
    or an (ok, certificate) pair. SkipCheck and budget exhaustion become
    "skipped"; AssertionError becomes "fail".
    """
    start = time.perf_counter()
    try:
        out = fn()
        if isinstance(out, tuple):
            ok, certificate = out
            verdict = "pass" if ok else "fail"
        else:
            verdict, certificate = "pass", out
    except (SkipCheck, BudgetExceededError) as stop:
        verdict, certificate = "skipped", {"reason": str(stop)}
    except AssertionError as bad:
        verdict, certificate = "fail", {"error": str(bad)}
    elapsed = (time.perf_counter() - start) * 1000.0
    records.append(CheckRecord(theorem_id, instance, verdict, certificate,
                               elapsed))


def _sorted_maximals(module, budget):
    return sorted(maximal_submodules(module, budget),
                  key=lambda s: s.space.key())


def _instance_preamble(records, theorem_id, instance, fn):
    """Run shared per-instance setup, turning budget exhaustion into one
    skipped record. Returns None when the instance must be skipped."""
    try:
        return fn()
    except BudgetExceededError as stop:
        records.append(CheckRecord(theorem_id, instance, "skipped",
                                   {"reason": str(stop)}, 0.0))
        return None


def suite_t5(corpus, budget=DEFAULT_BUDGET, trials=64, seed=0):
    """Dichotomy for maximal submodules, with its two counting corollaries.

    Per maximal N: either N is fully invariant or an injective family of
    at least 1 + |eigenring| distinct similar maximals exists; in the
    family branch |Max(M)| >= p + 1; modules with at most two maximal
    submodules have Hom(M, N) pinned pointwise.
    """
    records = []
    for inst in corpus_instances(corpus):
        module = inst.module
        maxes = _instance_preamble(
            records, "t5.setup", inst.name,
            lambda: _sorted_maximals(module, budget))
        if maxes is None:
            continue
        for k, sub in enumerate(maxes):
            name = f"{inst.name}#max{k}"

            def dichotomy(sub=sub):
                res = enumerate_similar_maximals(module, sub, budget)
                cert = {
                    "branch": res.branch,
                    "family_size": len(res.members),
                    "eigenring_dim": res.eigenring_dim,
                    "lower_bound": res.lower_bound,
                }
                return len(res.members) >= res.lower_bound, cert

            def max_count(sub=sub):
                res = enumerate_similar_maximals(module, sub, budget)
                bound = module.algebra.p + 1
                if res.branch == "fully_invariant":
                    return True, {"branch": "fully_invariant",
                                  "vacuous": True}
                cert = {"max_count": len(maxes), "bound": bound}
                return len(maxes) >= bound, cert

            def quasi_duo(sub=sub):
                rep = quasi_duo_dichotomy(module, sub, budget)
                cert = {"max_count": rep.max_count, "checked": rep.checked,
                        "holds": rep.holds}
                ok = rep.holds if rep.checked else rep.max_count >= 3
                return ok, cert

            _run_check(records, "t5.dichotomy", name, dichotomy)
            _run_check(records, "t5.max-count", name, max_count)
            _run_check(records, "t5.quasi-duo", name, quasi_duo)
    return records


def suite_t8(corpus, budget=DEFAULT_BUDGET, trials=64, seed=0):
    """Maximal submodules of a projective module inside its End ring.

    N -> Hom(M, N) is an injective map into the maximal right ideals of
    End(M); the idealizer of N coincides with the ring idealizer of
    Hom(M, N); four eigenring avatars share one dimension and the
    eigenring is a division ring; eigenring dimension is constant on
    similarity classes.
    """
    records = []
    for inst in corpus_instances(corpus):
        module = inst.module

        def setup():
            if not is_projective(module, budget)[0]:
                return ()
            maxes = _sorted_maximals(module, budget)
            end = end_ring(module)
            end_reg = regular_module(end.algebra)
            maxr = _sorted_maximals(end_reg, budget)
            ideals = [RightIdeal(end.algebra,
                                 hom_into_submodule(module, sub),
                                 check=True) for sub in maxes]
            return maxes, end_reg, maxr, ideals

        setup_out = _instance_preamble(records, "t8.setup", inst.name,
                                       setup)
        if setup_out is None or setup_out == ():
            continue
        maxes, end_reg, maxr, ideals = setup_out
        maxr_keys = {s.space.key() for s in maxr}

        def injection():
            keys = {ideal.space.key() for ideal in ideals}
            ok = (len(keys) == len(maxes)
                  and keys <= maxr_keys
                  and len(maxes) <= len(maxr))
            cert = {"max_count": len(maxes), "distinct_images": len(keys),
                    "maxr_count": len(maxr)}
            return ok, cert

        _run_check(records, "t8.injection", inst.name, injection)

        for k, (sub, ideal) in enumerate(zip(maxes, ideals)):
            name = f"{inst.name}#max{k}"

            def idealizer(sub=sub):
                return idealizer_coincidence(module, sub, budget), {}

            def chain(sub=sub, ideal=ideal):
                iso = eigenring_quotient_iso(module, sub, budget)
                ring_eig = eigenring_of_ideal(ideal)
                quot = quotient_module(
                    end_reg, Submodule(end_reg, ideal.space)).quotient
                dims = {
                    "end_of_quotient": iso.quotient_end.dim,
                    "eigenring": iso.eigenring.dim,
                    "ideal_eigenring": ring_eig.algebra.dim,
                    "end_of_ideal_quotient": end_ring(quot).dim,
                }
                ok = (len(set(dims.values())) == 1
                      and iso.kernel_matches and iso.surjective)
                cert = dict(dims)
                cert["kernel_matches"] = iso.kernel_matches
                cert["surjective"] = iso.surjective
                return ok, cert

            def division(sub=sub):
                eig = eigenring(module, sub)
                cert = {"eigenring_dim": eig.dim,
                        "cardinality": eig.cardinality()}
                return eig.is_division_ring(budget), cert

            _run_check(records, "t8.idealizer", name, idealizer)
            _run_check(records, "t8.chain", name, chain)
            _run_check(records, "t8.division", name, division)

        def invariance():
            classes, unknown = similarity_classes(module, budget, trials,
                                                  seed)
            if unknown:
                raise SkipCheck(
                    f"{len(unknown)} similarity pairs undecided")
            rows = []
            ok = True
            for cls in classes:
                dims = sorted({eigenring(module, mem).dim
                               for mem in cls.members})
                ok = ok and len(dims) == 1
                rows.append({"size": len(cls), "eigenring_dims": dims})
            return ok, {"classes": rows}

        _run_check(records, "t8.class-invariance", inst.name, invariance)
    return records


def suite_pt1(corpus, budget=DEFAULT_BUDGET, trials=64, seed=0):
    """Similarity classes of maximal right ideals of the corpus rings.

    Every non-two-sided maximal right ideal has at least 1 + |eigenring|
    distinct similar maximal right ideals; summing over classes bounds
    the number of non-two-sided maximal right ideals; on 2x2 matrix
    rings every class has size exactly p + 1.
    """
    records = []
    for ring in corpus:
        algebra = ring.algebra
        reg = regular_module(algebra)
        maxes = _instance_preamble(
            records, "pt1.setup", ring.name,
            lambda: _sorted_maximals(reg, budget))
        if maxes is None:
            continue
        ideals = [RightIdeal(algebra, s.space, check=True) for s in maxes]
        classes = {}

        def class_of(ideal):
            key = ideal.space.key()
            if key not in classes:
                classes[key] = similarity_class_of_maximal(ideal, budget)
            return classes[key]

        for k, ideal in enumerate(ideals):
            name = f"{ring.name}#max{k}"

            def class_bound(ideal=ideal):
                cls = class_of(ideal)
                cert = {"class_size": len(cls.members),
                        "lower_bound": cls.lower_bound,
                        "two_sided": cls.two_sided,
                        "eigenring_dim": cls.eigenring_dim}
                return len(cls.members) >= cls.lower_bound, cert

            _run_check(records, "pt1.class-bound", name, class_bound)

        def aggregate():
            non_two_sided = [i for i in ideals if not i.is_two_sided()]
            seen = set()
            groups = []
            for ideal in non_two_sided:
                if ideal.space.key() in seen:
                    continue
                cls = class_of(ideal)
                seen.update(space.key() for space in cls.members)
                groups.append(cls)
            bound = sum(1 + algebra.p ** cls.eigenring_dim
                        for cls in groups)
            cert = {"non_two_sided": len(non_two_sided),
                    "class_count": len(groups), "bound": bound}
            return len(non_two_sided) >= bound, cert

        _run_check(records, "pt1.aggregate", ring.name, aggregate)

        if ring.spec.get("kind") == "matrix" and int(ring.spec["n"]) == 2:

            def matrix_equality():
                sizes = sorted(len(class_of(i).members) for i in ideals)
                expected = algebra.p + 1
                ok = all(size == expected for size in sizes)
                return ok, {"class_sizes": sizes, "expected": expected}

            _run_check(records, "pt1.matrix-equality", ring.name,
                       matrix_equality)
    return records


def suite_length(corpus, budget=DEFAULT_BUDGET, trials=64, seed=0):
    """Composition length comparisons between a module and its End ring.

    For projective M: len(End(M)) <= len(M), with equality exactly
    checked on faithfully projective instances; equality instances have
    Hom(M, N) nonzero for every nonzero submodule N; Hom(M, A) for a
    minimal A is zero or a minimal right ideal of End(M). Composition
    factor multisets are independent of the descent choice.
    """
    records = []
    for inst in corpus_instances(corpus):
        module = inst.module

        def jordan_holder():
            least = sorted(q.dim for q in
                           composition_factors(module, budget, "least"))
            greatest = sorted(q.dim for q in
                              composition_factors(module, budget,
                                                  "greatest"))
            cert = {"factor_dims": least}
            return least == greatest, cert

        _run_check(records, "length.jordan-holder", inst.name, jordan_holder)

        def setup():
            if not is_projective(module, budget)[0]:
                return ()
            end_reg = regular_module(end_ring(module).algebra)
            return end_reg, length(end_reg, budget), length(module, budget)

        setup_out = _instance_preamble(records, "length.setup", inst.name,
                                       setup)
        if setup_out is None or setup_out == ():
            continue
        end_reg, len_end, len_mod = setup_out

        def bound():
            return len_end <= len_mod, {"end_length": len_end,
                                        "module_length": len_mod}

        _run_check(records, "length.bound", inst.name, bound)

        if is_faithfully_projective(module, budget):

            def equality():
                return len_end == len_mod, {"end_length": len_end,
                                            "module_length": len_mod}

            _run_check(records, "length.equality", inst.name, equality)

        if len_end == len_mod:

            def compressible():
                lattice = submodule_lattice(module, budget)
                nonzero = [s for s in lattice if s.dim > 0]
                bad = [s.dim for s in nonzero
                       if hom_into_submodule(module, s).dim == 0]
                cert = {"nonzero_submodules": len(nonzero),
                        "hom_zero_count": len(bad)}
                return not bad, cert

            _run_check(records, "length.compressible", inst.name,
                       compressible)

        def minimal_ideals():
            lattice = submodule_lattice(module, budget)
            minimal = [s for s in lattice if s.dim > 0 and not any(
                0 < o.dim < s.dim and s.space.contains(o.space)
                for o in lattice)]
            end_lattice = submodule_lattice(end_reg, budget)
            checked = 0
            for sub in minimal:
                hom = hom_into_submodule(module, sub)
                if hom.dim == 0:
                    continue
                if not any(hom == s.space for s in end_lattice):
                    raise AssertionError(
                        "Hom(M, A) is not a right ideal seen by the "
                        "End lattice")
                if any(0 < o.dim < hom.dim and hom.contains(o.space)
                       for o in end_lattice):
                    return False, {"minimal_submodules": len(minimal)}
                checked += 1
            return True, {"minimal_submodules": len(minimal),
                          "nonzero_hom_ideals": checked}

        _run_check(records, "length.minimal-ideals", inst.name,
                   minimal_ideals)
    return records


def suite_transfer(corpus, budget=DEFAULT_BUDGET, trials=64, seed=0):
    """Similarity transfer between Max(M) and maximal right End ideals.

    Forward (projective M): similar maximal submodules have similar
    Hom-ideals. Backward (faithfully projective M): similar Hom-ideals
    force similar submodules. Pairs whose isomorphism search is
    undecided are recorded as skips, never merged.
    """
    records = []
    for inst in corpus_instances(corpus):
        module = inst.module

        def setup():
            if not is_projective(module, budget)[0]:
                return ()
            return (is_faithfully_projective(module, budget),
                    _sorted_maximals(module, budget))

        setup_out = _instance_preamble(records, "transfer.setup", inst.name,
                                       setup)
        if setup_out is None or setup_out == ():
            continue
        faithful, maxes = setup_out
        pairs = list(combinations(range(len(maxes)), 2))
        if not pairs:
            pairs = [(0, 0)]
        for i, j in pairs:
            name = f"{inst.name}#max{i}~max{j}"
            try:
                report = similarity_transfer(module, maxes[i], maxes[j],
                                             budget, trials, seed)
            except BudgetExceededError as stop:
                reason = {"reason": str(stop)}
                records.append(CheckRecord("transfer.forward", name,
                                           "skipped", reason, 0.0))
                if faithful:
                    records.append(CheckRecord("transfer.backward", name,
                                               "skipped", reason, 0.0))
                continue

            def forward(report=report):
                cert = {"submodules": report.submodule_verdict,
                        "ideals": report.ideal_verdict,
                        "forward": report.forward}
                if report.forward == "skipped":
                    raise SkipCheck("similarity verdict undecided")
                return report.forward in ("pass", "vacuous"), cert

            _run_check(records, "transfer.forward", name, forward)

            if faithful:

                def backward(report=report):
                    cert = {"submodules": report.submodule_verdict,
                            "ideals": report.ideal_verdict,
                            "backward": report.backward}
                    if report.backward == "skipped":
                        raise SkipCheck("similarity verdict undecided")
                    return report.backward in ("pass", "vacuous"), cert

                _run_check(records, "transfer.backward", name, backward)
    return records


STONE_PARAMETERS = ((2, 2, 3), (2, 3, 4), (3, 2, 7))


def suite_stone(corpus, budget=DEFAULT_BUDGET, trials=64, seed=0):
    """Maximal left ideals of matrix rings via the annihilator family.

    Counts match (p^n - 1)/(p - 1) against the brute-force lattice,
    ideal equality is exactly right-parallelism of the defining vectors,
    no maximal one-sided ideal is two-sided, and every quotient by a
    maximal left ideal has base-field length n.
    """
    records = []
    for n, p, expected in STONE_PARAMETERS:
        name = f"M{n}(F{p})"
        base = matrix_algebra(1, p)

        def count(p=p, n=n, expected=expected):
            enum = enumerate_maxl_matrix_ring(p, n, budget)
            cert = {"count": enum.count, "expected": expected,
                    "crosschecked": enum.crosschecked,
                    "representatives": [list(map(int, u))
                                        for u in enum.representatives]}
            return enum.count == expected and enum.crosschecked, cert

        def parallel(p=p, n=n, base=base):
            vectors = [v for v in enumerate_vectors(n, p, budget)
                       if v.any()]
            checked = 0
            for u in vectors:
                for v in vectors:
                    same = stone_equal(base, u, v, budget)
                    reps_match = (
                        parallel_representative(u, p).tolist()
                        == parallel_representative(v, p).tolist())
                    if same != reps_match:
                        return False, {"u": u.tolist(), "v": v.tolist()}
                    checked += 1
            return True, {"pairs_checked": checked}

        def simple_ring(p=p, n=n):
            rep = count_bounds_report(p, n, budget)
            cert = rep.row()
            cert["two_sided_count"] = rep.two_sided_count
            cert["maxr_count"] = rep.maxr_count
            cert["transpose_matches"] = rep.transpose_matches
            return rep.passed, cert

        def quotient_length(p=p, n=n):
            enum = enumerate_maxl_matrix_ring(p, n, budget)
            lengths = sorted({stone_quotient_length(ideal, budget)
                              for ideal in enum.ideals})
            return lengths == [n], {"lengths": lengths, "expected": n}

        _run_check(records, "stone.count", name, count)
        _run_check(records, "stone.parallel", name, parallel)
        _run_check(records, "stone.simple-ring", name, simple_ring)
        _run_check(records, "stone.quotient-length", name, quotient_length)
    return records


def suite_decomposition(corpus, budget=DEFAULT_BUDGET, trials=64, seed=0):
    """Decomposition of projective modules into local direct summands.

    Every projective corpus module splits into summands that are local
    modules with local endomorphism rings, and the summand profile is
    stable under permuted probe orders.
    """
    records = []
    for inst in corpus_instances(corpus):
        module = inst.module
        projective = _instance_preamble(
            records, "decomposition.setup", inst.name,
            lambda: is_projective(module, budget)[0])
        if not projective:
            continue

        def locals_check():
            recs, certified = decompose_into_locals(module, budget)
            rows = []
            ok = certified
            for rec in recs:
                local = rec["is_local"]
                ring_local = end_ring_is_local(rec["summand"], budget)
                ok = ok and local and ring_local
                rows.append({"dim": rec["summand"].dim,
                             "multiplicity": rec["multiplicity"],
                             "local": local, "end_local": ring_local})
            return ok, {"certified": certified, "summands": rows}

        def stability():
            def profile(order):
                recs, _ = decompose_into_locals(module, budget, order=order)
                return sorted((rec["summand"].dim, rec["multiplicity"])
                              for rec in recs)

            base = profile(None)
            rng = np.random.default_rng(seed)
            h = end_ring(module).dim
            agree = all(
                profile(rng.permutation(h).tolist()) == base
                for _ in range(5))
            return agree, {"profile": [list(row) for row in base],
                           "orders_tested": 5}

        _run_check(records, "decomposition.locals", inst.name, locals_check)
        _run_check(records, "decomposition.stability", inst.name, stability)
    return records


def suite_example_313(corpus, budget=DEFAULT_BUDGET, trials=64, seed=0):
    """The documented failure of backward transfer.

    Over the upper-triangular 2x2 ring, the corner module has two
    submodules with equal (zero) Hom-ideals that are not similar: the
    module is projective but not faithfully projective, so ideal
    similarity does not descend.
    """
    records = []
    algebra = triangular_algebra(2, 2)
    module = idempotent_module(algebra, [1, 0, 0])
    upper = Submodule(module, Subspace.from_vectors([[0, 1]], 2, 2))
    zero = Submodule(module, module.zero_space())
    name = "T2(F2):e0R"

    def hom_dims():
        d_upper = hom_into_submodule(module, upper).dim
        d_zero = hom_into_submodule(module, zero).dim
        return (d_upper == 0 and d_zero == 0,
                {"hom_into_upper": d_upper, "hom_into_zero": d_zero})

    def ideals_similar():
        end = end_ring(module)
        left = RightIdeal(end.algebra, hom_into_submodule(module, upper),
                          check=True)
        right = RightIdeal(end.algebra, hom_into_submodule(module, zero),
                           check=True)
        witness = similar_ideals(left, right, budget)
        cert = {"witness": None if witness is None else witness.tolist()}
        return witness is not None, cert

    def not_similar():
        res = are_similar(module, upper, zero, budget, trials, seed)
        return res.verdict == "no", {"verdict": res.verdict}

    def backward_failure():
        report = similarity_transfer(module, upper, zero, budget, trials,
                                     seed)
        cert = {
            "projective": report.projective,
            "faithfully_projective": report.faithfully_projective,
            "submodules": report.submodule_verdict,
            "ideals": report.ideal_verdict,
            "forward": report.forward,
            "backward": report.backward,
            "counterexample_witnessed": report.counterexample_witnessed,
        }
        ok = (report.projective
              and not report.faithfully_projective
              and report.submodule_verdict == "no"
              and report.ideal_verdict == "yes"
              and report.forward == "vacuous"
              and report.backward == "not-applicable"
              and report.counterexample_witnessed)
        return ok, cert

    _run_check(records, "example-3.13.hom-dims", name, hom_dims)
    _run_check(records, "example-3.13.ideals-similar", name, ideals_similar)
    _run_check(records, "example-3.13.not-similar", name, not_similar)
    _run_check(records, "example-3.13.backward-failure", name,
               backward_failure)
    return records


def suite_oracle(corpus, budget=DEFAULT_BUDGET, trials=64, seed=0):
    """Cross-validation of the two maximal-submodule enumeration routes.

    For every instance whose vector count p^dim is at most 1024, the
    lattice route and the simple-quotient-kernel route must produce the
    same set of maximal submodules.
    """
    records = []
    for inst in corpus_instances(corpus):
        module = inst.module
        if module.algebra.p ** module.dim > 1024:
            continue

        def compare():
            lattice_route = maximal_submodules(module, budget,
                                               cross_check=False)
            kernel_route = maximal_submodules_by_simple_quotients(module,
                                                                  budget)
            left = {s.space.key() for s in lattice_route}
            right = {s.space.key() for s in kernel_route}
            cert = {"lattice_count": len(left),
                    "kernel_count": len(right),
                    "vector_count": module.algebra.p ** module.dim}
            return left == right, cert

        _run_check(records, "oracle.maximals", inst.name, compare)
    return records


SUITES = {
    "t5": suite_t5,
    "t8": suite_t8,
    "pt1": suite_pt1,
    "length": suite_length,
    "transfer": suite_transfer,
    "stone": suite_stone,
    "decomposition": suite_decomposition,
    "example-3.13": suite_example_313,
    "oracle": suite_oracle,
}

SUITE_ORDER = ("t5", "t8", "pt1", "length", "transfer", "stone",
               "decomposition", "example-3.13", "oracle")


def run_suite(name, corpus=None, budget=DEFAULT_BUDGET, trials=64, seed=0):
    """Run one named suite (or "all") and return its report."""
    if name == "all":
        names = SUITE_ORDER
    elif name in SUITES:
        names = (name,)
    else:
        raise ValueError(f"unknown suite: {name!r}")
    if corpus is None:
        corpus = default_corpus(budget)
    records = []
    for suite_name in names:
        records.extend(SUITES[suite_name](corpus, budget, trials, seed))
    return VerificationReport(name, budget, trials, seed, records)
