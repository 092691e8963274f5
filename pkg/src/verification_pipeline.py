"""Runs one or all verification methods and cross-checks their outcomes."""
import logging
from typing import List, Optional

from certificate_checker import CertificateChecker
from errors import ParameterError
from exhaustive_verifier import ExhaustiveVerifier
from graph_verifier import GraphVerifier
from models import DesignFamily, Method, Outcome, VerificationReport
from settings import VerifierSettings
from structural_verifier import StructuralVerifier

logger = logging.getLogger(__name__)

MODES = ("exhaustive", "graph", "structural", "all")


def run_verification(
    family: DesignFamily,
    s: int,
    mode: str,
    settings: VerifierSettings,
    jobs: Optional[int] = None,
    strategy: Optional[str] = None,
    budget: Optional[int] = None,
) -> List[VerificationReport]:
    """
    Run the requested method(s).

    `all` runs exhaustive and graph, plus structural when the family carries
    construction metadata. Explicit arguments override settings.
    """
    if mode not in MODES:
        raise ParameterError(f"unknown mode {mode!r}, expected one of {MODES}")

    reports = []
    if mode in ("structural", "all"):
        if family.has_structure or mode == "structural":
            reports.append(StructuralVerifier().verify(family, s))
        else:
            logger.info("[STRUCTURAL] skipped: no construction metadata")
    if mode in ("graph", "all"):
        graph = GraphVerifier(budget=budget if budget is not None else settings.solver_budget)
        reports.append(graph.verify(family, s))
    if mode in ("exhaustive", "all"):
        exhaustive = ExhaustiveVerifier(
            jobs=jobs if jobs is not None else settings.effective_jobs,
            strategy=strategy or settings.strategy,
            partitions_per_job=settings.partitions_per_job,
        )
        reports.append(exhaustive.verify(family, s))

    checker = CertificateChecker()
    for report in reports:
        if report.counterexample is not None:
            errors = checker.check_counterexample(family, report.counterexample, s)
            if errors:
                logger.error(f"[{report.method.value.upper()}] unsound counterexample: {errors}")
    return reports


def check_agreement(reports: List[VerificationReport]) -> Optional[str]:
    """
    Returns a disagreement message, or None when the decided outcomes agree.

    Structural HOLDS always takes part; structural FAILS only when it carries
    a counterexample, since otherwise it only says the proof does not apply.
    """
    decided = []
    for report in reports:
        if report.outcome == Outcome.UNDECIDED:
            continue
        if (
            report.method == Method.STRUCTURAL
            and report.outcome == Outcome.FAILS
            and report.counterexample is None
        ):
            continue
        decided.append(report)
    outcomes = {report.outcome for report in decided}
    if len(outcomes) > 1:
        summary = ", ".join(f"{r.method.value}={r.outcome.value}" for r in decided)
        return f"methods disagree: {summary}"
    return None
