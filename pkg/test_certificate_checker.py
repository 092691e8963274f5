"""Tests for the solver-free certificate checks."""
import sys
from pathlib import Path

import pytest

# Add src to path
sys.path.insert(0, str(Path(__file__).parent / "src"))

from certificate_checker import CertificateChecker
from family_builder import FamilyBuilder
from models import Block, CaseTag, CliqueCoverCertificate, ConstructionParams, WitnessResult
from pair_graph import CoverageAnalyzer


@pytest.fixture
def checker():
    return CertificateChecker()


@pytest.fixture(scope="module")
def family8():
    return FamilyBuilder().build_family(ConstructionParams(group_size=2, group_count=4))


@pytest.fixture(scope="module")
def graph8(family8):
    return CoverageAnalyzer().covered_pair_graph(family8)


def test_valid_clique_cover(checker, graph8):
    certificate = CliqueCoverCertificate(cliques=((1, 2, 3, 4), (5, 6, 7, 8)))
    assert checker.check_clique_cover(graph8, certificate) == []


def test_clique_cover_with_uncovered_pair(checker, graph8):
    certificate = CliqueCoverCertificate(cliques=((1, 2, 3, 4, 5), (6, 7, 8)))
    errors = checker.check_clique_cover(graph8, certificate)
    assert any("{1, 5}" in error for error in errors)


def test_clique_cover_missing_and_repeated_vertices(checker, graph8):
    certificate = CliqueCoverCertificate(cliques=((1, 2, 3, 4), (4, 5, 6, 7)))
    errors = checker.check_clique_cover(graph8, certificate)
    assert any("vertex 4 appears in more than one clique" in error for error in errors)
    assert any("[8]" in error for error in errors)


def test_clique_cover_vertex_out_of_range(checker, graph8):
    certificate = CliqueCoverCertificate(cliques=((1, 2, 3, 4), (5, 6, 7, 8), (9,)))
    errors = checker.check_clique_cover(graph8, certificate)
    assert any("outside" in error for error in errors)


def test_counterexample_checks(checker, family8):
    assert checker.check_counterexample(family8, (1, 5), 2) == []
    assert checker.check_counterexample(family8, (1, 3), 2) == ["block 5 meets the counterexample in [1, 3]"]
    assert checker.check_counterexample(family8, (1, 5, 9), 3) == ["elements outside [1, 8]: [9]"]
    errors = checker.check_counterexample(family8, (1, 1), 2)
    assert "counterexample repeats an element" in errors


def test_witness_check(checker, family8):
    good = WitnessResult(case=CaseTag.BASE_COLLISION, block_index=1, block=Block.of([1, 2]), base_index=1)
    assert checker.check_witness(family8, [1, 2, 5], good)
    assert not checker.check_witness(family8, [1, 3, 5], good)
    wrong_index = WitnessResult(case=CaseTag.BASE_COLLISION, block_index=2, block=Block.of([1, 2]), base_index=1)
    assert not checker.check_witness(family8, [1, 2, 5], wrong_index)
    beyond = WitnessResult(case=CaseTag.BASE_COLLISION, block_index=13, block=Block.of([1, 2]), base_index=1)
    assert not checker.check_witness(family8, [1, 2, 5], beyond)
