"""
Интеграционные тесты наборов проверок на стандартных кольцах
"""
import pytest

from src.application.verification.runner import SUITES, THEOREM_IDS, TheoremSuiteRunner
from src.domain.exceptions import RingSpecError, UnsupportedOperationError
from src.domain.services import ring_core


@pytest.fixture
def runner() -> TheoremSuiteRunner:
    return TheoremSuiteRunner()


def failed_checks(reports):
    return [(r.theorem_id, c.name, c.witness) for r in reports for c in r.checks if not c.passed]


class TestAllSuites:
    """Полный прогон `all` на стандартном наборе колец"""

    def test_every_applicable_suite_passes(self, runner, standard_ring):
        reports = runner.run("all", standard_ring)
        assert reports
        assert not failed_checks(reports)
        expected = {suite.theorem_id for suite in SUITES if suite.applies_to(standard_ring)}
        assert {r.theorem_id for r in reports} == expected

    def test_morphism_suites_run_on_finite_rings_only(self, runner, o23, z12):
        ids = {r.theorem_id for r in runner.run("all", o23)}
        assert "lift" not in ids and "functoriality" not in ids
        ids = {r.theorem_id for r in runner.run("all", z12)}
        assert {"lift", "functoriality", "nil-quotient"} <= ids

    def test_theorem_ids(self):
        assert THEOREM_IDS[-1] == "all"
        assert len(set(THEOREM_IDS)) == len(THEOREM_IDS)


class TestIndividualSuites:
    """Отдельные наборы и числа из приёмочных сценариев"""

    @pytest.mark.parametrize("spec,structure", [
        ("Z/12", "Z/2 x Z/2"),
        ("Z/30", "Z/2 x Z/2 x Z/2"),
        ("O(-20)", "Z/2 x Z/2"),
        ("O(-23)", "Z/6"),
        ("O(-20) loc {2,3}", "Z/2"),
    ])
    def test_unit_group_structure(self, runner, spec, structure):
        [report] = runner.run("units-split", ring_core.parse_ring(spec))
        assert report.passed
        assert report.results["units_structure"] == structure

    def test_principalization_generators(self, runner, o20_loc):
        [report] = runner.run("principalize", o20_loc)
        assert report.passed
        assert len(report.results["generators"]) == 2

    def test_projective_decomposition_batch(self, runner, z2310):
        [report] = runner.run("proj-decomp", z2310)
        assert report.passed
        assert report.results["modules"] == 200

    def test_idempotent_pairs_are_exhaustive(self, runner, z30):
        [report] = runner.run("idem-formula", z30)
        assert report.passed
        assert report.results["pairs"] == 64

    def test_unknown_theorem(self, runner, z12):
        with pytest.raises(RingSpecError):
            runner.run("no-such-theorem", z12)

    def test_missing_ring(self, runner):
        with pytest.raises(RingSpecError):
            runner.run("b-k0")

    def test_principalize_needs_semilocal_order(self, runner, z12):
        with pytest.raises(UnsupportedOperationError):
            runner.run("principalize", z12)

    def test_lift_needs_finite_ring(self, runner, o20):
        with pytest.raises(UnsupportedOperationError):
            runner.run("lift", o20)


class TestMorphismSuites:
    """Наборы с явно заданным морфизмом"""

    def test_diagonal_lift_reports_precondition(self, runner):
        diag = ring_core.parse_morphism("diag: Z/2 -> Z/2 x Z/2")
        [report] = runner.run("lift", morphism=diag)
        assert report.passed
        assert report.results["lifts_ring"] is False
        assert "precondition" in report.results

    def test_reduction_of_z4(self, runner):
        red = ring_core.parse_morphism("red: Z/4 -> Z/2")
        for theorem_id in ("lift", "nil-quotient", "functoriality"):
            reports = runner.run(theorem_id, morphism=red)
            assert not failed_checks(reports), theorem_id

    def test_registered_morphisms(self, runner, z12):
        labels = [m.label for m in runner.registered_morphisms(z12)]
        assert labels == ["id", "red", "proj", "diag"]

    def test_nil_quotient_rejects_diagonal(self, runner):
        diag = ring_core.parse_morphism("diag: Z/2 -> Z/2 x Z/2")
        with pytest.raises(UnsupportedOperationError):
            runner.run("nil-quotient", morphism=diag)
