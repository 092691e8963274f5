"""Proof-checking verification of the paired construction and witness queries."""
import logging
import time
from dataclasses import dataclass, field
from typing import Dict, FrozenSet, List, Optional, Sequence, Tuple

from certificate_checker import CertificateChecker
from errors import ParameterError, StructuralError, StructureMissingError, ThresholdError
from family_builder import RECOMBINATION_ORDER
from models import (
    CaseTag, DesignFamily, Method, Outcome, TagKind, VerificationReport, WitnessResult,
)

logger = logging.getLogger(__name__)


@dataclass
class ProofIndex:
    """Lookup tables extracted from construction tags, plus every violated premise."""
    base_count: int
    bases: Dict[int, FrozenSet[int]] = field(default_factory=dict)
    base_position: Dict[int, int] = field(default_factory=dict)
    recombined_position: Dict[Tuple[int, int, int], int] = field(default_factory=dict)
    halves: Dict[int, Tuple[FrozenSet[int], FrozenSet[int]]] = field(default_factory=dict)
    element_base: Dict[int, int] = field(default_factory=dict)
    element_half: Dict[int, int] = field(default_factory=dict)
    defects: List[str] = field(default_factory=list)
    missing: List[Tuple[int, int, int]] = field(default_factory=list)

    @property
    def pair_count(self) -> int:
        return self.base_count // 2

    @property
    def sound(self) -> bool:
        return not self.defects and not self.missing


class StructuralVerifier:
    """
    Certifies the guarantee from construction metadata alone.

    Premises checked: base blocks partition [1, n]; each base splits into two
    equal halves (read off the recombined blocks); every pair group has all
    four recombined blocks equal to their half unions; s >= t/2 + 1.
    """

    def __init__(self):
        self.checker = CertificateChecker()
        self._cached: Optional[Tuple[DesignFamily, ProofIndex]] = None

    def analyze(self, family: DesignFamily) -> ProofIndex:
        if family.structure is None:
            raise StructureMissingError("structural verification inapplicable: family has no construction metadata")

        index = ProofIndex(base_count=0)
        for position, (block, tag) in enumerate(zip(family.blocks, family.structure), start=1):
            if tag.kind == TagKind.BASE:
                if tag.base_index in index.bases:
                    index.defects.append(f"base {tag.base_index} declared twice")
                    continue
                index.bases[tag.base_index] = frozenset(block.members)
                index.base_position[tag.base_index] = position
            else:
                key = (tag.pair_index, tag.u, tag.v)
                if key in index.recombined_position:
                    index.defects.append(f"recombined block {key} declared twice")
                    continue
                index.recombined_position[key] = position

        t = len(index.bases)
        index.base_count = t
        if t == 0 or t % 2 or set(index.bases) != set(range(1, t + 1)):
            index.defects.append(f"base indices {sorted(index.bases)} are not 1..t with t even")

        covered: set = set()
        for i in sorted(index.bases):
            if covered & index.bases[i]:
                index.defects.append(f"base {i} overlaps an earlier base")
            covered |= index.bases[i]
        if covered != set(range(1, family.n + 1)):
            index.defects.append(f"base blocks do not partition [1, {family.n}]")

        for m, u, v in index.recombined_position:
            if m > index.pair_count:
                index.defects.append(f"recombined block ({m}, {u}, {v}) names unknown pair {m}")
        for m in range(1, index.pair_count + 1):
            for u, v in RECOMBINATION_ORDER:
                if (m, u, v) not in index.recombined_position:
                    index.missing.append((m, u, v))

        self._derive_halves(family, index)
        self._check_recombined(family, index)

        for base_index, (first, second) in index.halves.items():
            for label, half in ((1, first), (2, second)):
                for e in half:
                    index.element_base[e] = base_index
                    index.element_half[e] = label
        return index

    def verify(self, family: DesignFamily, s: Optional[int] = None) -> VerificationReport:
        """HOLDS iff every premise of the pairing proof is met at subset size s (default t/2 + 1)."""
        started = time.perf_counter()
        index = self.analyze(family)
        threshold = index.pair_count + 1
        if s is None:
            s = threshold
        if s < 2 or s > family.n:
            raise ParameterError(f"subset size must satisfy 2 <= s <= n={family.n}, got {s}")

        problems = list(index.defects)
        problems.extend(f"missing recombined block (m={m}, u={u}, v={v})" for m, u, v in index.missing)
        if s < threshold:
            problems.append(f"subset size {s} is below the guarantee threshold {threshold}")

        if not problems:
            logger.info(f"[STRUCTURAL] HOLDS: {index.base_count} bases in {index.pair_count} pairs, s={s}")
            return VerificationReport(
                method=Method.STRUCTURAL,
                outcome=Outcome.HOLDS,
                subset_size=s,
                elapsed_seconds=time.perf_counter() - started,
            )

        counterexample = None
        if not index.defects:
            counterexample = self._proof_counterexample(family, index, s)
        logger.info(f"[STRUCTURAL] FAILS: {'; '.join(problems)}")
        return VerificationReport(
            method=Method.STRUCTURAL,
            outcome=Outcome.FAILS,
            subset_size=s,
            counterexample=counterexample,
            reason="; ".join(problems),
            elapsed_seconds=time.perf_counter() - started,
        )

    def witness_block(self, family: DesignFamily, subset: Sequence[int]) -> WitnessResult:
        """
        Run the two-case proof on one query subset.

        Case 1: two elements share a base block -> that base (smallest index).
        Case 2: the smallest pair m with both bases hit -> recombined block
        (m, u, v) from the half labels of one element in each base.
        """
        index = self._index_for(family)
        if not index.sound:
            raise StructuralError("construction metadata does not verify; witness queries need a sound structure")
        members = list(subset)
        if len(set(members)) != len(members):
            raise ParameterError(f"query subset repeats an element: {members}")
        for e in members:
            if not 1 <= e <= family.n:
                raise ParameterError(f"element {e} outside [1, {family.n}]")

        buckets: Dict[int, List[int]] = {}
        for e in sorted(members):
            buckets.setdefault(index.element_base[e], []).append(e)

        collisions = [i for i, hits in buckets.items() if len(hits) >= 2]
        if collisions:
            i = min(collisions)
            position = index.base_position[i]
            return WitnessResult(
                case=CaseTag.BASE_COLLISION,
                block_index=position,
                block=family.block(position),
                base_index=i,
            )

        for i in sorted(buckets):
            if i % 2 == 1 and i + 1 in buckets:
                m = (i + 1) // 2
                u = index.element_half[buckets[i][0]]
                v = index.element_half[buckets[i + 1][0]]
                position = index.recombined_position[(m, u, v)]
                return WitnessResult(
                    case=CaseTag.PAIR_COLLISION,
                    block_index=position,
                    block=family.block(position),
                    pair_index=m,
                    u=u,
                    v=v,
                )

        raise ThresholdError(
            f"guarantee threshold not met: {len(members)} elements in distinct pair groups "
            f"(threshold {index.pair_count + 1})"
        )

    def _index_for(self, family: DesignFamily) -> ProofIndex:
        if self._cached is None or self._cached[0] is not family:
            self._cached = (family, self.analyze(family))
        return self._cached[1]

    def _derive_halves(self, family: DesignFamily, index: ProofIndex) -> None:
        """Half u of base 2m-1 is recombined(m, u, .) minus base 2m; symmetric for base 2m."""
        for m in range(1, index.pair_count + 1):
            for side, base_index in ((0, 2 * m - 1), (1, 2 * m)):
                base = index.bases.get(base_index)
                if base is None:
                    continue
                found = {}
                for label in (1, 2):
                    keys = [(m, label, other) if side == 0 else (m, other, label) for other in (1, 2)]
                    parts = [
                        frozenset(family.block(index.recombined_position[key]).members) & base
                        for key in keys if key in index.recombined_position
                    ]
                    if not parts:
                        index.defects.append(f"half {label} of base {base_index} cannot be derived")
                        continue
                    if any(part != parts[0] for part in parts):
                        index.defects.append(f"recombined blocks disagree on half {label} of base {base_index}")
                    found[label] = parts[0]
                if len(found) != 2:
                    continue
                first, second = found[1], found[2]
                if (
                    len(base) % 2
                    or len(first) * 2 != len(base)
                    or len(second) * 2 != len(base)
                    or first & second
                    or first | second != base
                ):
                    index.defects.append(f"halves of base {base_index} do not split it into two equal parts")
                else:
                    index.halves[base_index] = (first, second)

    def _check_recombined(self, family: DesignFamily, index: ProofIndex) -> None:
        for (m, u, v), position in sorted(index.recombined_position.items()):
            left, right = index.halves.get(2 * m - 1), index.halves.get(2 * m)
            if left is None or right is None:
                continue
            if frozenset(family.block(position).members) != left[u - 1] | right[v - 1]:
                index.defects.append(f"block {position} is not the union of its declared halves ({m}, {u}, {v})")

    def _proof_counterexample(self, family: DesignFamily, index: ProofIndex, s: int) -> Optional[Tuple[int, ...]]:
        """Uncovered cross pair (or nothing) plus the smallest element of other pair groups."""
        group_min = {
            m: min(index.bases[2 * m - 1] | index.bases[2 * m])
            for m in range(1, index.pair_count + 1)
        }
        if index.missing:
            m, u, v = index.missing[0]
            picked = [min(index.halves[2 * m - 1][u - 1]), min(index.halves[2 * m][v - 1])]
            others = [value for other, value in group_min.items() if other != m]
        else:
            picked, others = [], list(group_min.values())
        if s - len(picked) > len(others):
            return None
        subset = sorted(picked + others[:s - len(picked)])
        errors = self.checker.check_counterexample(family, subset, s)
        if errors:
            logger.warning(f"[STRUCTURAL] proof counterexample rejected: {errors}")
            return None
        return tuple(subset)
