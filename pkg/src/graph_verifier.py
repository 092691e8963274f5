"""Verification through the independence number of the covered-pair graph."""
import logging
import time
from typing import Optional

from certificate_checker import CertificateChecker
from errors import ParameterError
from independence_solver import IndependenceSolver
from models import (
    BlockNecessity, CliqueCoverCertificate, DesignFamily, IndependenceResult, IrredundancyReport,
    Method, Outcome, PairGraph, VerificationReport,
)
from pair_graph import CoverageAnalyzer

logger = logging.getLogger(__name__)


class GraphVerifier:
    """
    Every s-subset meets a block twice iff alpha(covered-pair graph) <= s - 1.

    HOLDS reports carry a clique-cover certificate when a greedy cover of
    size <= s - 1 exists; FAILS reports carry s vertices of a maximum
    independent set. An exhausted solver budget still decides s when the
    best independent set found reaches s or the greedy cover is small enough.
    """

    def __init__(self, budget: Optional[int] = None):
        self.solver = IndependenceSolver(budget=budget)
        self.analyzer = CoverageAnalyzer()
        self.checker = CertificateChecker()

    def verify(self, family: DesignFamily, s: int) -> VerificationReport:
        if s < 2 or s > family.n:
            raise ParameterError(f"subset size must satisfy 2 <= s <= n={family.n}, got {s}")
        started = time.perf_counter()
        graph = self.analyzer.covered_pair_graph(family)
        result = self.solver.solve(graph)

        if not result.decided:
            return self._undecided_report(graph, result, s, started)

        if result.alpha <= s - 1:
            certificate = self.find_certificate(graph, s - 1)
            if certificate is None:
                logger.info(f"[GRAPH] alpha={result.alpha} <= {s - 1} without a small greedy clique cover")
            return VerificationReport(
                method=Method.GRAPH,
                outcome=Outcome.HOLDS,
                subset_size=s,
                scanned=result.nodes,
                certificate=certificate,
                alpha=result.alpha,
                elapsed_seconds=time.perf_counter() - started,
            )

        return VerificationReport(
            method=Method.GRAPH,
            outcome=Outcome.FAILS,
            subset_size=s,
            counterexample=result.witness[:s],
            scanned=result.nodes,
            alpha=result.alpha,
            elapsed_seconds=time.perf_counter() - started,
        )

    def find_certificate(self, graph: PairGraph, max_size: int) -> Optional[CliqueCoverCertificate]:
        """Smallest greedy clique cover over two vertex orders, if it has <= max_size cliques."""
        covers = [
            self.solver.greedy_clique_cover(graph),
            self.solver.greedy_clique_cover(graph, self.solver.degree_order(graph)),
        ]
        best = min(covers, key=len)
        if len(best) > max_size:
            return None
        certificate = CliqueCoverCertificate(cliques=tuple(tuple(c) for c in best))
        errors = self.checker.check_clique_cover(graph, certificate)
        if errors:
            logger.error(f"[GRAPH] rejected clique cover: {errors}")
            return None
        return certificate

    def _undecided_report(
        self, graph: PairGraph, result: IndependenceResult, s: int, started: float
    ) -> VerificationReport:
        """Settle an exhausted search from its bounds when they already decide s."""
        outcome = Outcome.UNDECIDED
        counterexample = None
        certificate = None
        if result.lower_bound >= s:
            outcome = Outcome.FAILS
            counterexample = result.witness[:s]
        else:
            certificate = self.find_certificate(graph, s - 1)
            if certificate is not None:
                outcome = Outcome.HOLDS
        logger.info(
            f"[GRAPH] budget exhausted with {result.lower_bound} <= alpha <= {result.upper_bound}: {outcome.value}"
        )
        return VerificationReport(
            method=Method.GRAPH,
            outcome=outcome,
            subset_size=s,
            counterexample=counterexample,
            scanned=result.nodes,
            certificate=certificate,
            lower_bound=result.lower_bound,
            upper_bound=result.upper_bound,
            elapsed_seconds=time.perf_counter() - started,
        )

    def irredundancy_check(self, family: DesignFamily, s: int) -> IrredundancyReport:
        """For every block, does the guarantee survive its deletion?"""
        baseline = self.verify(family, s).outcome
        report = IrredundancyReport(subset_size=s, baseline=baseline)
        if baseline != Outcome.HOLDS:
            logger.warning(f"[GRAPH] family does not hold at s={s} ({baseline.value}); no block is necessary")
        for index, block in enumerate(family.blocks, start=1):
            if baseline != Outcome.HOLDS:
                report.entries.append(BlockNecessity(block_index=index, block=block, necessary=False))
                continue
            reduced = self.verify(family.without_block(index), s)
            report.entries.append(BlockNecessity(
                block_index=index,
                block=block,
                necessary=reduced.outcome == Outcome.FAILS,
                counterexample=reduced.counterexample,
            ))
        logger.info(f"[GRAPH] {len(report.necessary_blocks)}/{len(family.blocks)} blocks necessary at s={s}")
        return report
