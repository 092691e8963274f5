"""Line-oriented text and JSON Lines rendering of toolkit results."""
import json
from typing import Any, Dict, List, Optional

from models import (
    CoverageStats, IndependenceResult, IrredundancyReport, VerificationReport, WitnessResult,
)


def _members(values) -> Optional[str]:
    if values is None:
        return None
    return " ".join(str(v) for v in values)


class ReportFormatter:
    """Renders results as stable `key: value` lines or flat JSON objects (see REPORT_FORMAT.md)."""

    def __init__(self, as_json: bool = False):
        self.as_json = as_json

    def verification(self, report: VerificationReport) -> str:
        record: Dict[str, Any] = {
            "method": report.method.value,
            "outcome": report.outcome.value,
            "subset_size": report.subset_size,
            "scanned": report.scanned,
            "elapsed_seconds": round(report.elapsed_seconds, 3),
            "counterexample": _members(report.counterexample),
            "alpha": report.alpha,
            "certificate_size": report.certificate.size if report.certificate else None,
            "certificate": (
                " | ".join(_members(c) for c in report.certificate.cliques) if report.certificate else None
            ),
            "lower_bound": report.lower_bound,
            "upper_bound": report.upper_bound,
            "reason": report.reason,
        }
        if self.as_json:
            return json.dumps(record)
        lines = [
            f"method: {record['method']}",
            f"outcome: {record['outcome']}",
            f"subset size: {record['subset_size']}",
            f"scanned: {record['scanned']}",
            f"elapsed: {report.elapsed_seconds:.2f}s",
        ]
        optional = (
            ("counterexample", "counterexample"),
            ("alpha", "alpha"),
            ("certificate_size", "certificate size"),
            ("certificate", "certificate"),
            ("lower_bound", "lower bound"),
            ("upper_bound", "upper bound"),
            ("reason", "reason"),
        )
        for key, label in optional:
            if record[key] is not None:
                lines.append(f"{label}: {record[key]}")
        return "\n".join(lines)

    def witness(self, result: WitnessResult) -> str:
        if self.as_json:
            return json.dumps({
                "case": result.case.value,
                "block_index": result.block_index,
                "block": _members(result.block.members),
                "base_index": result.base_index,
                "pair_index": result.pair_index,
                "u": result.u,
                "v": result.v,
            }, ensure_ascii=False)
        return result.describe()

    def generation(self, n: int, block_count: int, threshold: int, path: Optional[str]) -> str:
        record = {"n": n, "blocks": block_count, "guarantee_threshold": threshold, "path": path}
        if self.as_json:
            return json.dumps(record)
        lines = [f"n: {n}", f"blocks: {block_count}", f"guarantee threshold: {threshold}"]
        if path:
            lines.append(f"written: {path}")
        return "\n".join(lines)

    def stats(
        self,
        stats: CoverageStats,
        independence: IndependenceResult,
        cover_size: int,
        irredundancy: Optional[IrredundancyReport] = None,
    ) -> str:
        record: Dict[str, Any] = {
            "covered_pairs": stats.covered_pairs,
            "uncovered_pairs": stats.uncovered_pairs,
            "multiplicity_histogram": {str(c): count for c, count in sorted(stats.multiplicity_histogram.items())},
            "alpha": independence.alpha,
            "alpha_witness": _members(independence.witness),
            "clique_cover_size": cover_size,
        }
        if irredundancy is not None:
            record["irredundancy_subset_size"] = irredundancy.subset_size
            record["necessary_blocks"] = len(irredundancy.necessary_blocks)
            record["total_blocks"] = len(irredundancy.entries)
            unnecessary = [e.block_index for e in irredundancy.entries if not e.necessary]
            record["unnecessary"] = _members(unnecessary) if unnecessary else None
        if self.as_json:
            return json.dumps(record)

        histogram = ", ".join(f"{c}: {count}" for c, count in sorted(stats.multiplicity_histogram.items()))
        alpha = independence.alpha if independence.decided else (
            f"undecided ({independence.lower_bound}..{independence.upper_bound})"
        )
        lines: List[str] = [
            f"covered pairs: {stats.covered_pairs}",
            f"uncovered pairs: {stats.uncovered_pairs}",
            f"multiplicity histogram: {{{histogram}}}",
            f"alpha: {alpha}",
            f"alpha witness: {record['alpha_witness']}",
            f"clique cover size: {cover_size}",
        ]
        if irredundancy is not None:
            lines.append(
                f"necessary blocks (s={irredundancy.subset_size}): "
                f"{len(irredundancy.necessary_blocks)}/{len(irredundancy.entries)}"
            )
            if record["unnecessary"]:
                lines.append(f"unnecessary blocks: {record['unnecessary']}")
        return "\n".join(lines)
