"""Tests for method selection and the agreement check."""
import sys
from pathlib import Path

import pytest

# Add src to path
sys.path.insert(0, str(Path(__file__).parent / "src"))

from errors import ParameterError, StructureMissingError
from family_builder import FamilyBuilder
from models import ConstructionParams, DesignFamily, Method, Outcome, VerificationReport
from settings import VerifierSettings
from verification_pipeline import check_agreement, run_verification


@pytest.fixture(scope="module")
def family8():
    return FamilyBuilder().build_family(ConstructionParams(group_size=2, group_count=4))


def report(method, outcome, counterexample=None):
    return VerificationReport(method=method, outcome=outcome, subset_size=3, counterexample=counterexample)


def test_single_modes(family8):
    settings = VerifierSettings(jobs=1)
    for mode, method in (("exhaustive", Method.EXHAUSTIVE), ("graph", Method.GRAPH), ("structural", Method.STRUCTURAL)):
        reports = run_verification(family8, 3, mode, settings)
        assert [r.method for r in reports] == [method]
        assert reports[0].outcome == Outcome.HOLDS


def test_all_skips_structural_without_metadata(family8):
    plain = DesignFamily(n=family8.n, k=family8.k, blocks=family8.blocks)
    reports = run_verification(plain, 3, "all", VerifierSettings(jobs=1))
    assert [r.method for r in reports] == [Method.GRAPH, Method.EXHAUSTIVE]


def test_structural_mode_without_metadata(family8):
    plain = DesignFamily(n=family8.n, k=family8.k, blocks=family8.blocks)
    with pytest.raises(StructureMissingError):
        run_verification(plain, 3, "structural", VerifierSettings(jobs=1))


def test_unknown_mode(family8):
    with pytest.raises(ParameterError):
        run_verification(family8, 3, "quick", VerifierSettings(jobs=1))


def test_arguments_override_settings(family8):
    settings = VerifierSettings(jobs=1, strategy="prune", solver_budget=1)
    graph_report = run_verification(family8, 2, "graph", settings)[0]
    assert graph_report.outcome == Outcome.UNDECIDED
    graph_report = run_verification(family8, 2, "graph", settings, budget=10_000)[0]
    assert graph_report.outcome == Outcome.FAILS
    assert graph_report.alpha == 2
    scan_report = run_verification(family8, 3, "exhaustive", settings, strategy="scan")[0]
    assert scan_report.scanned == 56


def test_zero_jobs_rejected(family8):
    with pytest.raises(ParameterError):
        run_verification(family8, 3, "exhaustive", VerifierSettings(jobs=2), jobs=0)


def test_agreement():
    assert check_agreement([
        report(Method.STRUCTURAL, Outcome.HOLDS),
        report(Method.GRAPH, Outcome.HOLDS),
        report(Method.EXHAUSTIVE, Outcome.HOLDS),
    ]) is None
    assert check_agreement([]) is None


def test_disagreement():
    message = check_agreement([
        report(Method.GRAPH, Outcome.HOLDS),
        report(Method.EXHAUSTIVE, Outcome.FAILS, (1, 5, 9)),
    ])
    assert message == "methods disagree: graph=HOLDS, exhaustive=FAILS"


def test_undecided_and_inconclusive_proof_are_ignored():
    assert check_agreement([
        report(Method.GRAPH, Outcome.UNDECIDED),
        report(Method.EXHAUSTIVE, Outcome.HOLDS),
    ]) is None
    # a structural FAILS without counterexample only means the proof does not apply
    assert check_agreement([
        report(Method.STRUCTURAL, Outcome.FAILS),
        report(Method.EXHAUSTIVE, Outcome.HOLDS),
    ]) is None
    assert check_agreement([
        report(Method.STRUCTURAL, Outcome.FAILS, (1, 5, 9)),
        report(Method.EXHAUSTIVE, Outcome.HOLDS),
    ]) is not None
