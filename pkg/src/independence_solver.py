"""Exact maximum independent set by branch and bound."""
import logging
from typing import List, Optional, Sequence

from models import IndependenceResult, PairGraph

logger = logging.getLogger(__name__)


class _BudgetExhausted(Exception):
    pass


def _vertices(mask: int) -> List[int]:
    """1-based vertex ids of a bitmask, ascending."""
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length())
        mask ^= low
    return out


class IndependenceSolver:
    """
    Branch and bound for the independence number alpha.

    Upper bound: greedy clique cover of the candidate set. Branching vertex:
    maximum degree inside the candidates, ties to the smallest id; the
    include branch is explored first. Given the graph, output is deterministic.
    """

    def __init__(self, budget: Optional[int] = None):
        """
        Args:
            budget: maximum number of search-tree nodes; None = unlimited
        """
        self.budget = budget

    def solve(self, graph: PairGraph) -> IndependenceResult:
        self._neighbors = graph.neighbors
        self._nodes = 0
        self._best: List[int] = []
        full = (1 << graph.n) - 1
        root_bound = self._cover_size(full)
        try:
            self._expand(full, [])
        except _BudgetExhausted:
            logger.warning(
                f"[SOLVER] node budget {self.budget} exhausted: "
                f"{len(self._best)} <= alpha <= {root_bound}"
            )
            return IndependenceResult(
                decided=False,
                witness=tuple(sorted(self._best)),
                nodes=self._nodes,
                lower_bound=len(self._best),
                upper_bound=root_bound,
            )
        alpha = len(self._best)
        logger.info(f"[SOLVER] alpha={alpha} after {self._nodes} nodes")
        return IndependenceResult(
            decided=True,
            alpha=alpha,
            witness=tuple(sorted(self._best)),
            nodes=self._nodes,
            lower_bound=alpha,
            upper_bound=alpha,
        )

    def greedy_clique_cover(self, graph: PairGraph, order: Optional[Sequence[int]] = None) -> List[List[int]]:
        """
        Partition the vertices into cliques greedily.

        Each clique is seeded with the first unassigned vertex of `order`
        (default ascending ids) and extended with later vertices of `order`
        adjacent to every member so far.
        """
        order = list(order) if order is not None else list(range(1, graph.n + 1))
        assigned = 0
        cliques = []
        for seed in order:
            if assigned >> (seed - 1) & 1:
                continue
            clique = [seed]
            common = graph.neighbors[seed - 1] & ~assigned
            for v in order:
                if common >> (v - 1) & 1:
                    clique.append(v)
                    common &= graph.neighbors[v - 1]
            for v in clique:
                assigned |= 1 << (v - 1)
            cliques.append(sorted(clique))
        return cliques

    def degree_order(self, graph: PairGraph) -> List[int]:
        """Vertices by descending degree, ties to the smallest id."""
        return sorted(range(1, graph.n + 1), key=lambda v: (-graph.degree(v), v))

    def _expand(self, candidates: int, chosen: List[int]) -> None:
        while candidates:
            self._nodes += 1
            if self.budget is not None and self._nodes > self.budget:
                raise _BudgetExhausted()
            if len(chosen) + self._cover_size(candidates) <= len(self._best):
                return
            v, degree = self._branch_vertex(candidates)
            if degree == 0:
                # every remaining candidate is isolated
                chosen = chosen + _vertices(candidates)
                break
            self._expand(candidates & ~self._neighbors[v - 1] & ~(1 << (v - 1)), chosen + [v])
            candidates &= ~(1 << (v - 1))
        if len(chosen) > len(self._best):
            self._best = chosen

    def _branch_vertex(self, candidates: int):
        best_v, best_degree = 0, -1
        rest = candidates
        while rest:
            low = rest & -rest
            v = low.bit_length()
            rest ^= low
            degree = (self._neighbors[v - 1] & candidates).bit_count()
            if degree > best_degree:
                best_v, best_degree = v, degree
        return best_v, best_degree

    def _cover_size(self, candidates: int) -> int:
        """Number of cliques in a greedy cover of the candidate set."""
        count = 0
        remaining = candidates
        while remaining:
            low = remaining & -remaining
            v = low.bit_length()
            clique = low
            common = self._neighbors[v - 1] & remaining
            while common:
                u_bit = common & -common
                clique |= u_bit
                common &= self._neighbors[u_bit.bit_length() - 1]
            remaining &= ~clique
            count += 1
        return count
