"""Independent checks for clique covers, counterexamples and witnesses."""
from typing import List, Sequence

from models import CliqueCoverCertificate, DesignFamily, PairGraph, WitnessResult


class CertificateChecker:
    """Validates verification artefacts by direct inspection, without any solver."""

    def check_clique_cover(self, graph: PairGraph, certificate: CliqueCoverCertificate) -> List[str]:
        """Returns list of errors; empty means the cover proves alpha <= certificate.size."""
        errors = []
        seen = set()
        for number, clique in enumerate(certificate.cliques, start=1):
            if not clique:
                errors.append(f"clique {number} is empty")
            for v in clique:
                if not 1 <= v <= graph.n:
                    errors.append(f"clique {number} has vertex {v} outside [1, {graph.n}]")
                elif v in seen:
                    errors.append(f"vertex {v} appears in more than one clique")
                seen.add(v)
            for i, x in enumerate(clique):
                for y in clique[i + 1:]:
                    if 1 <= x <= graph.n and 1 <= y <= graph.n and not graph.has_edge(x, y):
                        errors.append(f"clique {number}: pair {{{x}, {y}}} is not covered")
        missing = set(range(1, graph.n + 1)) - seen
        if missing:
            errors.append(f"vertices not covered by any clique: {sorted(missing)}")
        return errors

    def check_counterexample(self, family: DesignFamily, subset: Sequence[int], s: int) -> List[str]:
        """Returns list of errors; empty means `subset` meets every block in at most one point."""
        errors = []
        members = set(subset)
        if len(members) != len(subset):
            errors.append("counterexample repeats an element")
        if len(members) != s:
            errors.append(f"counterexample has {len(members)} elements, expected {s}")
        outside = [e for e in members if not 1 <= e <= family.n]
        if outside:
            errors.append(f"elements outside [1, {family.n}]: {sorted(outside)}")
        for index, block in enumerate(family.blocks, start=1):
            hit = members.intersection(block.members)
            if len(hit) >= 2:
                errors.append(f"block {index} meets the counterexample in {sorted(hit)}")
        return errors

    def check_witness(self, family: DesignFamily, subset: Sequence[int], witness: WitnessResult) -> bool:
        if not 1 <= witness.block_index <= len(family.blocks):
            return False
        block = family.block(witness.block_index)
        return block == witness.block and len(set(subset).intersection(block.members)) >= 2
