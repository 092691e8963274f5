"""Exhaustive check of every s-subset, split into first-element ranges."""
import logging
import time
from concurrent.futures import ProcessPoolExecutor
from math import comb
from typing import Iterator, List, NamedTuple, Optional, Tuple

from errors import ParameterError
from models import DesignFamily, Method, Outcome, VerificationReport
from pair_graph import CoverageAnalyzer

logger = logging.getLogger(__name__)

STRATEGIES = ("prune", "scan")


class SweepTask(NamedTuple):
    """One contiguous range of first elements [lo, hi]; picklable for worker processes."""
    n: int
    s: int
    lo: int
    hi: int
    strategy: str
    block_masks: Tuple[int, ...]
    neighbors: Tuple[int, ...]


class SweepOutcome(NamedTuple):
    lo: int
    counterexample: Optional[Tuple[int, ...]]
    scanned: int


def lex_subsets(n: int, s: int, lo: int, hi: int) -> Iterator[List[int]]:
    """Yield s-subsets of [1, n] whose first element lies in [lo, hi], lexicographically."""
    # WARNING the yielded list is mutated
    current = list(range(lo, lo + s))
    while current[0] <= hi:
        yield current
        for i in range(s - 1, -1, -1):
            if current[i] < n - s + 1 + i:
                current[i] += 1
                for j in range(i + 1, s):
                    current[j] = current[i] - i + j
                break
        else:
            return


def _scan_range(task: SweepTask) -> SweepOutcome:
    scanned = 0
    for subset in lex_subsets(task.n, task.s, task.lo, task.hi):
        scanned += 1
        mask = 0
        for e in subset:
            mask |= 1 << (e - 1)
        if all((mask & block).bit_count() < 2 for block in task.block_masks):
            return SweepOutcome(task.lo, tuple(subset), scanned)
    return SweepOutcome(task.lo, None, scanned)


def _descend(task: SweepTask, prefix: List[int], candidates: int) -> Tuple[Optional[Tuple[int, ...]], int]:
    """
    Walk the subsets extending an independent prefix in lexicographic order.

    `candidates` holds the elements above the last prefix element that are
    adjacent to no prefix element. Next elements outside it close a covered
    pair, so their whole subtrees are counted with a hockey-stick sum.
    """
    n, s = task.n, task.s
    need = s - len(prefix)
    if need == 0:
        return tuple(prefix), 1
    last = prefix[-1]
    limit = (1 << (n - need + 1)) - 1
    pending = candidates & limit
    scanned = 0
    previous = last
    while pending:
        low = pending & -pending
        c = low.bit_length()
        pending ^= low
        # subsets whose next element lies strictly between previous and c
        scanned += comb(n - previous, need) - comb(n - c + 1, need)
        child = candidates & ~task.neighbors[c - 1] & ~((1 << c) - 1)
        found, count = _descend(task, prefix + [c], child)
        scanned += count
        if found is not None:
            return found, scanned
        previous = c
    scanned += comb(n - previous, need)
    return None, scanned


def _prune_range(task: SweepTask) -> SweepOutcome:
    full = (1 << task.n) - 1
    scanned = 0
    for x in range(task.lo, task.hi + 1):
        candidates = full & ~((1 << x) - 1) & ~task.neighbors[x - 1]
        found, count = _descend(task, [x], candidates)
        scanned += count
        if found is not None:
            return SweepOutcome(task.lo, found, scanned)
    return SweepOutcome(task.lo, None, scanned)


def sweep_range(task: SweepTask) -> SweepOutcome:
    """Worker entry point: first counterexample of the range and subsets scanned up to it."""
    if task.strategy == "scan":
        return _scan_range(task)
    return _prune_range(task)


class ExhaustiveVerifier:
    """Checks every s-subset of [1, n] for a block meeting it in two points."""

    def __init__(self, jobs: int = 1, strategy: str = "prune", partitions_per_job: int = 4):
        if jobs < 1:
            raise ParameterError(f"jobs must be >= 1, got {jobs}")
        if strategy not in STRATEGIES:
            raise ParameterError(f"unknown strategy {strategy!r}, expected one of {STRATEGIES}")
        self.jobs = jobs
        self.strategy = strategy
        self.partitions_per_job = max(1, partitions_per_job)
        self.analyzer = CoverageAnalyzer()

    def split_ranges(self, n: int, s: int, parts: int) -> List[Tuple[int, int]]:
        """
        Split first elements 1..n-s+1 into at most `parts` contiguous ranges
        of roughly equal subset count C(n-x, s-1).
        """
        last_first = n - s + 1
        parts = max(1, min(parts, last_first))
        weights = [comb(n - x, s - 1) for x in range(1, last_first + 1)]
        target = sum(weights) / parts
        ranges = []
        lo, acc = 1, 0
        for x, weight in enumerate(weights, start=1):
            acc += weight
            remaining_parts = parts - len(ranges) - 1
            remaining_firsts = last_first - x
            if x == last_first:
                break
            if (acc >= target and remaining_parts > 0) or remaining_firsts == remaining_parts:
                ranges.append((lo, x))
                lo, acc = x + 1, 0
        ranges.append((lo, last_first))
        return ranges

    def verify(self, family: DesignFamily, s: int, partitions: Optional[int] = None) -> VerificationReport:
        """
        Enumerate s-subsets lexicographically; HOLDS iff each meets a block twice.

        Args:
            family: design to check
            s: subset size
            partitions: number of first-element ranges; defaults to
                jobs * partitions_per_job

        Returns:
            Report with the lexicographically smallest counterexample on FAILS
            and scanned = C(n, s) on HOLDS
        """
        if s < 2 or s > family.n:
            raise ParameterError(f"subset size must satisfy 2 <= s <= n={family.n}, got {s}")
        started = time.perf_counter()
        neighbors = self.analyzer.covered_pair_graph(family).neighbors
        parts = partitions if partitions is not None else self.jobs * self.partitions_per_job
        tasks = [
            SweepTask(family.n, s, lo, hi, self.strategy, tuple(family.masks()), neighbors)
            for lo, hi in self.split_ranges(family.n, s, parts)
        ]
        logger.info(
            f"[EXHAUSTIVE] n={family.n} s={s}: {len(tasks)} ranges, "
            f"{self.jobs} worker(s), strategy={self.strategy}"
        )

        if self.jobs == 1:
            outcomes = self._run_serial(tasks)
        else:
            with ProcessPoolExecutor(max_workers=self.jobs) as pool:
                outcomes = list(pool.map(sweep_range, tasks))

        counterexample, scanned = self._reduce(outcomes)
        elapsed = time.perf_counter() - started
        outcome = Outcome.HOLDS if counterexample is None else Outcome.FAILS
        logger.info(f"[EXHAUSTIVE] {outcome.value}: scanned {scanned} subsets in {elapsed:.2f}s")
        return VerificationReport(
            method=Method.EXHAUSTIVE,
            outcome=outcome,
            subset_size=s,
            counterexample=counterexample,
            scanned=scanned,
            elapsed_seconds=elapsed,
        )

    def _run_serial(self, tasks: List[SweepTask]) -> List[SweepOutcome]:
        outcomes = []
        for task in tasks:
            outcome = sweep_range(task)
            outcomes.append(outcome)
            if outcome.counterexample is not None:
                break
        return outcomes

    def _reduce(self, outcomes: List[SweepOutcome]) -> Tuple[Optional[Tuple[int, ...]], int]:
        # ranges are disjoint and ordered, so the first failing range holds the minimum
        scanned = 0
        for outcome in sorted(outcomes, key=lambda o: o.lo):
            scanned += outcome.scanned
            if outcome.counterexample is not None:
                return outcome.counterexample, scanned
        return None, scanned
