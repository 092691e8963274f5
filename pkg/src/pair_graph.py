"""Covered-pair graph and pair-coverage statistics."""
import logging
from math import comb

import numpy as np

from models import CoverageStats, DesignFamily, PairGraph

logger = logging.getLogger(__name__)


class CoverageAnalyzer:
    """Derives pair coverage from the block/element incidence matrix."""

    def incidence_matrix(self, family: DesignFamily) -> np.ndarray:
        """b x n 0/1 matrix, column e-1 for element e."""
        matrix = np.zeros((len(family.blocks), family.n), dtype=np.int64)
        for row, block in enumerate(family.blocks):
            matrix[row, [m - 1 for m in block.members]] = 1
        return matrix

    def multiplicity_matrix(self, family: DesignFamily) -> np.ndarray:
        """n x n matrix: entry (x-1, y-1) counts blocks containing both x and y; zero diagonal."""
        incidence = self.incidence_matrix(family)
        multiplicity = incidence.T @ incidence
        np.fill_diagonal(multiplicity, 0)
        return multiplicity

    def pair_multiplicity(self, family: DesignFamily, x: int, y: int) -> int:
        return int(self.multiplicity_matrix(family)[x - 1, y - 1])

    def covered_pair_graph(self, family: DesignFamily) -> PairGraph:
        covered = self.multiplicity_matrix(family) > 0
        weights = np.array([1 << j for j in range(family.n)], dtype=object)
        neighbors = tuple(int(weights[row].sum()) for row in covered)
        graph = PairGraph(n=family.n, neighbors=neighbors)
        logger.debug(f"[GRAPH] {graph.edge_count} covered pairs on {family.n} vertices")
        return graph

    def coverage_stats(self, family: DesignFamily) -> CoverageStats:
        multiplicity = self.multiplicity_matrix(family)
        upper = multiplicity[np.triu_indices(family.n, k=1)]
        values, counts = np.unique(upper[upper > 0], return_counts=True)
        histogram = {int(c): int(count) for c, count in zip(values, counts)}
        covered = int(np.count_nonzero(upper))

        unique_pairs = []
        for block in family.blocks:
            idx = [m - 1 for m in block.members]
            sub = multiplicity[np.ix_(idx, idx)]
            unique_pairs.append(int(np.count_nonzero(np.triu(sub == 1, k=1))))

        return CoverageStats(
            covered_pairs=covered,
            uncovered_pairs=comb(family.n, 2) - covered,
            multiplicity_histogram=histogram,
            per_block_pairs=[comb(block.size, 2) for block in family.blocks],
            per_block_unique_pairs=unique_pairs,
        )
