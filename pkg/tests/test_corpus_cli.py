"""Tests for the standard corpus, the suite runner, and the CLI.

Frozen values: the corpus holds eight rings and 43 instances in a fixed
order; the semisimple rings get a flagged projective fallback quotient
while the others get a genuinely non-projective one; the stone suite
emits exactly 12 passing records; reports are byte-identical across
runs once wall-clock timings are stripped.
"""

import json

import numpy as np
import pytest

from eigenring.algebra import Algebra, matrix_algebra
from eigenring.cli import main
from eigenring.corpus import (
    algebra_from_spec,
    build_ring,
    corpus_instances,
    default_corpus,
    diagonal_idempotents,
    instance_from_spec,
)
from eigenring.fqlinalg import BudgetExceededError
from eigenring.modules import is_projective, length
from eigenring.suites import (
    CheckRecord,
    SkipCheck,
    VerificationReport,
    _run_check,
    run_suite,
)

RING_NAMES = ["M2(F2)", "M2(F3)", "M3(F2)", "T2(F2)", "T2(F3)", "T3(F2)",
              "F2[x]/(x^2)", "F2xF2"]
SEMISIMPLE = {"M2(F2)", "M2(F3)", "M3(F2)", "F2xF2"}


@pytest.fixture(scope="module")
def corpus():
    return default_corpus()


class TestAlgebraFromSpec:
    def test_matrix_kind(self):
        alg = algebra_from_spec({"kind": "matrix", "n": 2, "p": 3})
        assert (alg.p, alg.dim) == (3, 4)

    def test_triangular_kind(self):
        alg = algebra_from_spec({"kind": "triangular", "n": 3, "p": 2})
        assert (alg.p, alg.dim) == (2, 6)

    def test_product_of_fields_kind(self):
        alg = algebra_from_spec(
            {"kind": "product_of_fields", "p": 2, "copies": 3})
        assert (alg.p, alg.dim) == (2, 3)
        e = np.array([1, 0, 0])
        assert np.array_equal(alg.multiply(e, e), e)

    def test_structure_constants_kind(self):
        alg = algebra_from_spec({
            "kind": "structure_constants", "p": 2,
            "table": [[[1, 0], [0, 1]], [[0, 1], [0, 0]]],
            "unit": [1, 0]})
        x = np.array([0, 1])
        assert not alg.multiply(x, x).any()

    def test_raw_json_passthrough(self):
        alg = matrix_algebra(2, 2)
        assert algebra_from_spec(alg.to_json()) == alg

    def test_unknown_kind_rejected(self):
        with pytest.raises(ValueError, match="kind"):
            algebra_from_spec({"kind": "nope"})

    def test_non_dict_rejected(self):
        with pytest.raises(ValueError, match="dict"):
            algebra_from_spec([1, 2, 3])

    def test_too_few_copies_rejected(self):
        with pytest.raises(ValueError, match="copies"):
            algebra_from_spec(
                {"kind": "product_of_fields", "p": 2, "copies": 1})


class TestDiagonalIdempotents:
    def test_matrix_units(self):
        spec = {"kind": "matrix", "n": 2, "p": 2}
        es = diagonal_idempotents(spec, algebra_from_spec(spec))
        assert es == [[1, 0, 0, 0], [0, 0, 0, 1]]

    def test_triangular_units(self):
        spec = {"kind": "triangular", "n": 2, "p": 2}
        es = diagonal_idempotents(spec, algebra_from_spec(spec))
        assert es == [[1, 0, 0], [0, 0, 1]]

    def test_component_units(self):
        spec = {"kind": "product_of_fields", "p": 2, "copies": 2}
        es = diagonal_idempotents(spec, algebra_from_spec(spec))
        assert es == [[1, 0], [0, 1]]

    def test_structure_constants_have_none(self):
        spec = {"kind": "structure_constants", "p": 2,
                "table": [[[1, 0], [0, 1]], [[0, 1], [0, 0]]],
                "unit": [1, 0]}
        assert diagonal_idempotents(spec, algebra_from_spec(spec)) == []


class TestDefaultCorpus:
    def test_ring_names_in_order(self, corpus):
        assert [ring.name for ring in corpus] == RING_NAMES

    def test_instance_count(self, corpus):
        assert len(corpus_instances(corpus)) == 43

    def test_per_ring_labels(self, corpus):
        by_name = {ring.name: ring for ring in corpus}
        labels = [inst.name.split(":", 1)[1]
                  for inst in by_name["M3(F2)"].instances]
        assert labels == ["regular", "e0R", "e1R", "e2R", "e0R+e1R",
                          "e0R+e2R", "e1R+e2R", "quotient"]
        labels = [inst.name.split(":", 1)[1]
                  for inst in by_name["F2[x]/(x^2)"].instances]
        assert labels == ["regular", "quotient"]

    def test_regular_instances_have_full_dim(self, corpus):
        for ring in corpus:
            reg = ring.instances[0]
            assert reg.name.endswith(":regular")
            assert reg.module.dim == ring.algebra.dim

    def test_quotient_projectivity_matches_flag(self, corpus):
        for ring in corpus:
            quot = ring.instances[-1]
            assert quot.name.endswith(":quotient")
            projective = is_projective(quot.module)[0]
            if ring.name in SEMISIMPLE:
                assert quot.note == "projective-fallback"
                assert projective
            else:
                assert quot.note == ""
                assert not projective

    def test_fallback_quotients_drop_length_by_one(self, corpus):
        for ring in corpus:
            if ring.name in SEMISIMPLE:
                regular = ring.instances[0].module
                quot = ring.instances[-1].module
                assert length(quot) == length(regular) - 1

    def test_specs_round_trip(self, corpus):
        for inst in corpus_instances(corpus):
            blob = json.loads(json.dumps(inst.spec, sort_keys=True))
            back = instance_from_spec(blob)
            assert back.algebra == inst.algebra
            assert np.array_equal(back.module.action, inst.module.action)
            assert back.name == inst.name

    def test_idempotent_summands_are_projective(self, corpus):
        for inst in corpus_instances(corpus):
            label = inst.name.split(":", 1)[1]
            if label.startswith("e"):
                assert is_projective(inst.module)[0]


class TestInstanceFromSpec:
    def test_module_defaults_to_regular(self):
        inst = instance_from_spec(
            {"algebra": {"kind": "matrix", "n": 2, "p": 2}})
        assert inst.module.dim == 4
        assert inst.module.spec == {"kind": "regular"}

    def test_missing_algebra_rejected(self):
        with pytest.raises(ValueError, match="algebra"):
            instance_from_spec({"module": {"kind": "regular"}})

    def test_p_mismatch_rejected(self):
        with pytest.raises(ValueError, match="p="):
            instance_from_spec(
                {"p": 3, "algebra": {"kind": "matrix", "n": 2, "p": 2}})

    def test_explicit_action_module(self):
        alg = matrix_algebra(1, 2)
        inst = instance_from_spec({
            "algebra": alg.to_json(),
            "module": {"kind": "action", "dim": 2,
                       "matrices": [[[1, 0], [0, 1]]]}})
        assert inst.module.dim == 2


class TestRunCheck:
    def test_pass_on_bare_certificate(self):
        records = []
        _run_check(records, "id", "inst", lambda: {"k": 1})
        assert records[0].verdict == "pass"
        assert records[0].certificate == {"k": 1}

    def test_fail_on_false(self):
        records = []
        _run_check(records, "id", "inst", lambda: (False, {"k": 1}))
        assert records[0].verdict == "fail"

    def test_fail_on_assertion(self):
        def boom():
            raise AssertionError("broken invariant")
        records = []
        _run_check(records, "id", "inst", boom)
        assert records[0].verdict == "fail"
        assert "broken invariant" in records[0].certificate["error"]

    def test_skip_on_skipcheck(self):
        def hold():
            raise SkipCheck("too large")
        records = []
        _run_check(records, "id", "inst", hold)
        assert records[0].verdict == "skipped"
        assert records[0].certificate == {"reason": "too large"}

    def test_skip_on_budget(self):
        def blow():
            raise BudgetExceededError("budget exceeded: need 100")
        records = []
        _run_check(records, "id", "inst", blow)
        assert records[0].verdict == "skipped"

    def test_unexpected_exception_propagates(self):
        def bug():
            raise TypeError("genuine bug")
        with pytest.raises(TypeError):
            _run_check([], "id", "inst", bug)


class TestRunSuite:
    def test_stone_suite_frozen_counts(self, corpus):
        report = run_suite("stone", corpus)
        assert report.summary() == {"pass": 12, "fail": 0, "skipped": 0}
        ids = sorted({rec.theorem_id for rec in report.records})
        assert ids == ["stone.count", "stone.parallel",
                       "stone.quotient-length", "stone.simple-ring"]

    def test_example_suite_passes(self, corpus):
        report = run_suite("example-3.13", corpus)
        assert report.summary() == {"pass": 4, "fail": 0, "skipped": 0}

    def test_oracle_suite_covers_all_instances(self, corpus):
        report = run_suite("oracle", corpus)
        assert report.summary()["fail"] == 0
        assert len(report.records) == 43

    def test_unknown_suite_rejected(self, corpus):
        with pytest.raises(ValueError, match="unknown suite"):
            run_suite("nope", corpus)

    def test_tiny_budget_skips_instead_of_crashing(self):
        ring = build_ring("T2(F2)", {"kind": "triangular", "n": 2, "p": 2})
        report = run_suite("t5", [ring], budget=3)
        verdicts = {rec.verdict for rec in report.records}
        assert "skipped" in verdicts
        assert "fail" not in verdicts
        skipped = [r for r in report.records if r.verdict == "skipped"]
        assert all("reason" in r.certificate for r in skipped)

    def test_report_json_shape(self, corpus):
        report = run_suite("stone", corpus, budget=10 ** 6, trials=7,
                           seed=3)
        blob = report.to_json()
        assert blob["suite"] == "stone"
        assert blob["trials"] == 7
        assert blob["seed"] == 3
        assert blob["summary"]["pass"] == 12
        json.dumps(blob)

    def test_reports_deterministic_without_timing(self, corpus):
        def stripped(report):
            blob = report.to_json()
            for rec in blob["records"]:
                rec.pop("time_ms")
            return json.dumps(blob, sort_keys=True)

        first = stripped(run_suite("t5", corpus))
        second = stripped(run_suite("t5", corpus))
        assert first == second

    def test_record_repr_and_rounding(self):
        rec = CheckRecord("id", "inst", "pass", {}, 1.23456)
        assert rec.to_json()["time_ms"] == 1.235
        assert "pass" in repr(rec)

    def test_summary_counts(self):
        records = [CheckRecord("a", "x", "pass", {}, 0.0),
                   CheckRecord("b", "y", "skipped", {}, 0.0)]
        report = VerificationReport("s", 10, 4, 0, records)
        assert report.summary() == {"pass": 1, "fail": 0, "skipped": 1}


@pytest.fixture()
def matrix_spec_file(tmp_path):
    path = tmp_path / "m2.json"
    path.write_text(json.dumps({
        "name": "M2(F2):regular", "ring": "M2(F2)", "p": 2,
        "algebra": {"kind": "matrix", "n": 2, "p": 2},
        "module": {"kind": "regular"}}))
    return str(path)


class TestCliInfoCommands:
    def test_check_ring(self, matrix_spec_file, tmp_path, capsys):
        out_path = tmp_path / "report.json"
        code = main(["check-ring", "--spec", matrix_spec_file,
                     "--json", str(out_path)])
        assert code == 0
        out = capsys.readouterr().out
        assert "max_right_ideals" in out
        blob = json.loads(out_path.read_text())
        assert blob["valid"] is True
        assert blob["max_right_ideals"] == 3
        assert blob["is_semisimple"] is True

    def test_inspect_module(self, matrix_spec_file, capsys):
        code = main(["inspect-module", "--spec", matrix_spec_file])
        assert code == 0
        out = capsys.readouterr().out
        assert "faithfully_projective  True" in out
        assert "local_summands" in out

    def test_similarity_classes(self, matrix_spec_file, tmp_path, capsys):
        out_path = tmp_path / "classes.json"
        code = main(["similarity-classes", "--spec", matrix_spec_file,
                     "--json", str(out_path)])
        assert code == 0
        out = capsys.readouterr().out
        assert "1 similarity classes" in out
        assert "holds" in out
        blob = json.loads(out_path.read_text())
        assert blob["classes"] == [
            {"size": 3, "eigenring_dim": 1, "member_dims": [2, 2, 2]}]
        assert blob["ring_aggregate"]["holds"] is True

    def test_raw_algebra_spec_accepted(self, tmp_path, capsys):
        path = tmp_path / "raw.json"
        path.write_text(json.dumps({"kind": "matrix", "n": 2, "p": 2}))
        assert main(["check-ring", "--spec", str(path)]) == 0
        capsys.readouterr()


class TestCliVerify:
    def test_stone_suite_exit_zero(self, capsys):
        code = main(["verify", "--suite", "stone"])
        assert code == 0
        out = capsys.readouterr().out
        assert out.startswith("check")
        assert "suite=stone pass=12 fail=0 skipped=0" in out

    def test_custom_corpus_file(self, tmp_path, capsys):
        path = tmp_path / "corpus.json"
        path.write_text(json.dumps({"instances": [
            {"name": "T2", "ring": "T2(F2)",
             "algebra": {"kind": "triangular", "n": 2, "p": 2}}]}))
        code = main(["verify", "--suite", "t5", "--spec", str(path)])
        assert code == 0
        out = capsys.readouterr().out
        assert "T2#max0" in out

    def test_single_instance_corpus_file(self, tmp_path, capsys):
        path = tmp_path / "one.json"
        path.write_text(json.dumps(
            {"algebra": {"kind": "matrix", "n": 2, "p": 2}}))
        assert main(["verify", "--suite", "oracle",
                     "--spec", str(path)]) == 0
        capsys.readouterr()

    def test_strict_turns_skips_into_failure(self, tmp_path, capsys):
        path = tmp_path / "corpus.json"
        path.write_text(json.dumps([
            {"name": "T2", "ring": "T2(F2)",
             "algebra": {"kind": "triangular", "n": 2, "p": 2}}]))
        relaxed = main(["verify", "--suite", "t5", "--spec", str(path),
                        "--budget", "3"])
        capsys.readouterr()
        strict = main(["verify", "--suite", "t5", "--spec", str(path),
                       "--budget", "3", "--strict"])
        capsys.readouterr()
        assert relaxed == 0
        assert strict == 1

    def test_json_report_deterministic(self, tmp_path, capsys):
        spec = tmp_path / "corpus.json"
        spec.write_text(json.dumps([
            {"name": "M2", "ring": "M2(F2)",
             "algebra": {"kind": "matrix", "n": 2, "p": 2}}]))

        def run(tag):
            out = tmp_path / f"report{tag}.json"
            assert main(["verify", "--suite", "t8", "--spec", str(spec),
                         "--json", str(out)]) == 0
            capsys.readouterr()
            blob = json.loads(out.read_text())
            for rec in blob["records"]:
                rec.pop("time_ms")
            return json.dumps(blob, sort_keys=True)

        assert run("a") == run("b")

    def test_seed_recorded_in_report(self, tmp_path, capsys):
        spec = tmp_path / "one.json"
        spec.write_text(json.dumps(
            {"algebra": {"kind": "matrix", "n": 2, "p": 2}}))
        out = tmp_path / "report.json"
        assert main(["verify", "--suite", "oracle", "--spec", str(spec),
                     "--seed", "11", "--json", str(out)]) == 0
        capsys.readouterr()
        assert json.loads(out.read_text())["seed"] == 11


class TestCliErrors:
    def test_unreadable_spec(self, capsys):
        assert main(["check-ring", "--spec", "/no/such/file.json"]) == 2
        assert "error:" in capsys.readouterr().err

    def test_malformed_json(self, tmp_path, capsys):
        path = tmp_path / "bad.json"
        path.write_text("not json")
        assert main(["check-ring", "--spec", str(path)]) == 2
        capsys.readouterr()

    def test_unknown_algebra_kind(self, tmp_path, capsys):
        path = tmp_path / "bad.json"
        path.write_text(json.dumps({"algebra": {"kind": "nope"}}))
        assert main(["verify", "--spec", str(path)]) == 2
        assert "error:" in capsys.readouterr().err

    def test_empty_corpus_file(self, tmp_path, capsys):
        path = tmp_path / "empty.json"
        path.write_text("[]")
        assert main(["verify", "--spec", str(path)]) == 2
        capsys.readouterr()

    def test_nonpositive_budget(self, capsys):
        assert main(["verify", "--budget", "0"]) == 2
        capsys.readouterr()

    def test_unknown_suite_is_usage_error(self, capsys):
        with pytest.raises(SystemExit) as info:
            main(["verify", "--suite", "nope"])
        assert info.value.code == 2
        capsys.readouterr()

    def test_invalid_structure_constants(self, tmp_path, capsys):
        bad = {"algebra": {"kind": "structure_constants", "p": 2,
                           "table": [[[1, 0], [0, 0]], [[0, 1], [0, 0]]],
                           "unit": [1, 0]}}
        path = tmp_path / "bad.json"
        path.write_text(json.dumps(bad))
        assert main(["check-ring", "--spec", str(path)]) == 2
        assert "error:" in capsys.readouterr().err
