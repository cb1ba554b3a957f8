"""Acceptance gate: ten exact criteria over the standard corpus.

Every comparison is exact integer or set equality; there are no
tolerances anywhere (tolerance = 0 for every criterion). The corpus is
built once per session; each criterion test is self-contained and
re-derives what it checks from the engine's public API. The per-
criterion PASS/FAIL lines are emitted by the conftest summary hook.
"""

from itertools import combinations

import numpy as np
import pytest

from eigenring.algebra import (
    RightIdeal,
    eigenring_of_ideal,
    similar_ideals,
    similarity_class_of_maximal,
    triangular_algebra,
)
from eigenring.corpus import corpus_instances, default_corpus
from eigenring.fqlinalg import Subspace
from eigenring.matring import count_bounds_report, enumerate_maxl_matrix_ring
from eigenring.modules import (
    Submodule,
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
from eigenring.similarity import (
    are_similar,
    eigenring_quotient_iso,
    enumerate_similar_maximals,
    idealizer_data,
    similarity_transfer,
)


@pytest.fixture(scope="session")
def corpus():
    return default_corpus()


def sorted_maximals(module):
    return sorted(maximal_submodules(module), key=lambda s: s.space.key())


def projective_instances(corpus):
    return [inst for inst in corpus_instances(corpus)
            if is_projective(inst.module)[0]]


def counterexample_module():
    """The corner module E11*R over the upper-triangular 2x2 ring, with
    its strictly-upper submodule and its zero submodule."""
    algebra = triangular_algebra(2, 2)
    module = idempotent_module(algebra, [1, 0, 0])
    upper = Submodule(module, Subspace.from_vectors([[0, 1]], 2, 2))
    zero = Submodule(module, module.zero_space())
    return module, upper, zero


def test_criterion_01_counterexample_reproduction():
    module, upper, zero = counterexample_module()
    assert hom_into_submodule(module, upper).dim == 0
    assert hom_into_submodule(module, zero).dim == 0
    end = end_ring(module)
    left = RightIdeal(end.algebra, hom_into_submodule(module, upper),
                      check=True)
    right = RightIdeal(end.algebra, hom_into_submodule(module, zero),
                       check=True)
    assert left.is_zero() and right.is_zero()
    assert similar_ideals(left, right) is not None
    assert are_similar(module, upper, zero).verdict == "no"


def test_criterion_02_stone_counts():
    for n, p, expected in ((2, 2, 3), (2, 3, 4), (3, 2, 7)):
        enum = enumerate_maxl_matrix_ring(p, n)
        assert enum.count == expected
        assert enum.crosschecked
        report = count_bounds_report(p, n)
        assert report.transpose_matches
        assert report.maxr_count == expected


def test_criterion_03_ideal_class_bound(corpus):
    checked = 0
    for ring in corpus:
        algebra = ring.algebra
        p = algebra.p
        for sub in sorted_maximals(regular_module(algebra)):
            ideal = RightIdeal(algebra, sub.space, check=True)
            if ideal.is_two_sided():
                continue
            cls = similarity_class_of_maximal(ideal)
            assert len(cls.members) >= p ** cls.eigenring_dim + 1
            family = list(cls.family.values()) + [ideal.space]
            assert len({space.key() for space in family}) == len(family)
            assert len(cls.family) == p ** cls.eigenring_dim
            checked += 1
    assert checked > 0
    for ring in corpus:
        if ring.spec.get("kind") == "matrix" and int(ring.spec["n"]) == 2:
            p = ring.algebra.p
            for sub in sorted_maximals(regular_module(ring.algebra)):
                ideal = RightIdeal(ring.algebra, sub.space, check=True)
                cls = similarity_class_of_maximal(ideal)
                assert len(cls.members) == 1 + p


def test_criterion_04_dichotomy(corpus):
    for inst in corpus_instances(corpus):
        module = inst.module
        p = module.algebra.p
        maxes = sorted_maximals(module)
        for sub in maxes:
            result = enumerate_similar_maximals(module, sub)
            if result.branch == "fully_invariant":
                assert idealizer_data(module, sub).idealizer.space.is_full()
            else:
                assert result.branch == "family"
                size = len(result.members)
                assert size >= 1 + p ** result.eigenring_dim
                keys = {m.space.key() for m in result.members}
                assert len(keys) == size
                max_keys = {m.space.key() for m in maxes}
                assert keys <= max_keys
                for witness in result.witnesses[1:]:
                    assert witness.is_isomorphism()
                assert len(maxes) >= 1 + p


def test_criterion_05_max_correspondence(corpus):
    for inst in projective_instances(corpus):
        module = inst.module
        maxes = sorted_maximals(module)
        end = end_ring(module)
        maxr = sorted_maximals(regular_module(end.algebra))
        maxr_keys = {s.space.key() for s in maxr}
        images = [hom_into_submodule(module, sub) for sub in maxes]
        image_keys = {space.key() for space in images}
        assert len(image_keys) == len(maxes)
        assert image_keys <= maxr_keys
        assert len(maxes) <= len(maxr)


def test_criterion_06_length_comparison(corpus):
    equality_seen = 0
    for inst in projective_instances(corpus):
        module = inst.module
        len_end = length(regular_module(end_ring(module).algebra))
        len_mod = length(module)
        assert len_end <= len_mod
        if is_faithfully_projective(module):
            assert len_end == len_mod
        if len_end == len_mod:
            equality_seen += 1
            for sub in submodule_lattice(module):
                if sub.dim > 0:
                    assert hom_into_submodule(module, sub).dim > 0
    assert equality_seen > 0


def test_criterion_07_eigenring_chain(corpus):
    for inst in projective_instances(corpus):
        module = inst.module
        end = end_ring(module)
        for sub in sorted_maximals(module):
            iso = eigenring_quotient_iso(module, sub)
            ideal = RightIdeal(end.algebra,
                               hom_into_submodule(module, sub), check=True)
            ring_eigenring = eigenring_of_ideal(ideal)
            assert iso.quotient_end.dim == iso.eigenring.dim
            assert ring_eigenring.algebra.dim == iso.eigenring.dim
            assert iso.kernel_matches
            assert iso.surjective
            assert iso.eigenring.is_division_ring()


def test_criterion_08_local_decomposition(corpus):
    for inst in projective_instances(corpus):
        module = inst.module

        def profile(order):
            records, certified = decompose_into_locals(module, order=order)
            assert certified
            return sorted((rec["summand"].dim, rec["multiplicity"])
                          for rec in records)

        records, certified = decompose_into_locals(module)
        assert certified
        assert sum(rec["summand"].dim * rec["multiplicity"]
                   for rec in records) == module.dim
        for rec in records:
            assert rec["is_local"]
            assert end_ring_is_local(rec["summand"])
        base = profile(None)
        rng = np.random.default_rng(0)
        h = end_ring(module).dim
        for _ in range(5):
            assert profile(rng.permutation(h).tolist()) == base


def test_criterion_09_similarity_transfer(corpus):
    for inst in projective_instances(corpus):
        module = inst.module
        faithful = is_faithfully_projective(module)
        maxes = sorted_maximals(module)
        pairs = list(combinations(range(len(maxes)), 2)) or [(0, 0)]
        for i, j in pairs:
            report = similarity_transfer(module, maxes[i], maxes[j])
            assert report.forward in ("pass", "vacuous"), inst.name
            if faithful:
                assert report.backward in ("pass", "vacuous"), inst.name
    module, upper, zero = counterexample_module()
    report = similarity_transfer(module, upper, zero)
    assert report.projective
    assert not report.faithfully_projective
    assert report.submodule_verdict == "no"
    assert report.ideal_verdict == "yes"
    assert report.forward == "vacuous"
    assert report.backward == "not-applicable"
    assert report.counterexample_witnessed


def test_criterion_10_oracle_equivalence(corpus):
    covered = 0
    for inst in corpus_instances(corpus):
        module = inst.module
        if module.algebra.p ** module.dim > 1024:
            continue
        lattice_route = maximal_submodules(module, cross_check=False)
        kernel_route = maximal_submodules_by_simple_quotients(module)
        assert ({s.space.key() for s in lattice_route}
                == {s.space.key() for s in kernel_route})
        covered += 1
    assert covered == len(corpus_instances(corpus))
