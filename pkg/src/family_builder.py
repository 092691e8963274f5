"""Builder for the paired base/recombined block family."""
import logging
from typing import List, Optional, Sequence, Tuple

from errors import ParameterError, StructuralError
from models import Block, BlockTag, ConstructionParams, DesignFamily, Half, PairGroup

logger = logging.getLogger(__name__)

# (u, v) emission order inside each pair group
RECOMBINATION_ORDER: Tuple[Tuple[int, int], ...] = ((1, 1), (1, 2), (2, 1), (2, 2))


class FamilyBuilder:
    """
    Builds the family of t base blocks plus four recombined blocks per pair.

    Base block i is the interval {g(i-1)+1, ..., g*i}; bases 2m-1 and 2m form
    pair group m; every base is split into its lowest and highest g/2 members.
    """

    def base_blocks(self, params: ConstructionParams) -> List[Block]:
        """Return the t interval base blocks partitioning [1, n]."""
        g = params.group_size
        return [
            Block(members=tuple(range(g * (i - 1) + 1, g * i + 1)))
            for i in range(1, params.group_count + 1)
        ]

    def split_halves(self, block: Block) -> Tuple[Half, Half]:
        """Split a sorted block into its lowest and highest halves."""
        if block.size == 0 or block.size % 2:
            raise StructuralError(f"cannot halve a block of odd size {block.size}: {block}")
        half = block.size // 2
        return block.members[:half], block.members[half:]

    def pair_groups(self, params: ConstructionParams) -> List[PairGroup]:
        return [PairGroup(index=m) for m in range(1, params.pair_count + 1)]

    def recombined_blocks(
        self,
        pair: PairGroup,
        params: ConstructionParams,
        bases: Optional[Sequence[Block]] = None,
    ) -> List[Block]:
        """Return the four blocks G_{2m-1}^(u) | G_{2m}^(v) in (u, v) order."""
        if pair.index > params.pair_count:
            raise ParameterError(f"pair index {pair.index} exceeds pair count {params.pair_count}")
        if bases is None:
            bases = self.base_blocks(params)
        left = bases[pair.left_base - 1]
        right = bases[pair.right_base - 1]
        if left.mask & right.mask:
            raise StructuralError(
                f"bases {pair.left_base} and {pair.right_base} of pair {pair.index} overlap"
            )
        return self._recombine(self.split_halves(left), self.split_halves(right))

    def build_family(self, params: ConstructionParams) -> DesignFamily:
        """Bases 1..t, then the recombined blocks grouped by pair m."""
        bases = self.base_blocks(params)
        recombined: List[Block] = []
        for pair in self.pair_groups(params):
            recombined.extend(self.recombined_blocks(pair, params, bases=bases))
        family = self._assemble(params.n, params.group_size, bases, recombined)
        logger.info(
            f"[CONSTRUCT] g={params.group_size} t={params.group_count}: "
            f"{len(family.blocks)} blocks on [1, {params.n}], threshold s={params.guarantee_threshold}"
        )
        return family

    def build_from_partition(
        self,
        parts: Sequence[Sequence[int]],
        halves: Optional[Sequence[Tuple[Sequence[int], Sequence[int]]]] = None,
    ) -> DesignFamily:
        """
        Build the construction over an arbitrary partition of [1, n].

        Args:
            parts: t disjoint base sets of equal even size covering [1, n];
                parts 2m-1 and 2m are paired
            halves: optional explicit (first, second) split of every part;
                defaults to the ascending split

        Returns:
            Structured family with the same emission order as build_family
        """
        if not parts or len(parts) % 2:
            raise ParameterError(f"need an even, non-zero number of base blocks, got {len(parts)}")
        sizes = {len(part) for part in parts}
        if len(sizes) != 1:
            raise ParameterError(f"base blocks must share one size, got sizes {sorted(sizes)}")
        g = sizes.pop()
        if g < 2 or g % 2:
            raise ParameterError(f"base block size must be even and >= 2, got {g}")
        n = g * len(parts)

        bases: List[Block] = []
        seen = 0
        for i, part in enumerate(parts, start=1):
            if len(set(part)) != len(part):
                raise ParameterError(f"base block {i} repeats an element")
            if min(part) < 1 or max(part) > n:
                raise ParameterError(f"base block {i} has members outside [1, {n}]")
            base = Block.of(part)
            if seen & base.mask:
                raise StructuralError(f"base block {i} overlaps an earlier base block")
            seen |= base.mask
            bases.append(base)

        if halves is None:
            split = [self.split_halves(base) for base in bases]
        else:
            if len(halves) != len(bases):
                raise ParameterError(f"got {len(halves)} half splits for {len(bases)} base blocks")
            split = [self._check_halves(i, base, pair) for i, (base, pair) in enumerate(zip(bases, halves), start=1)]

        recombined: List[Block] = []
        for m in range(1, len(bases) // 2 + 1):
            recombined.extend(self._recombine(split[2 * m - 2], split[2 * m - 1]))
        return self._assemble(n, g, bases, recombined)

    def _check_halves(self, index: int, base: Block, pair) -> Tuple[Half, Half]:
        first, second = (tuple(sorted(h)) for h in pair)
        if len(first) != len(second) or len(first) * 2 != base.size:
            raise StructuralError(f"halves of base block {index} are not equal halves")
        if set(first) | set(second) != set(base.members) or set(first) & set(second):
            raise StructuralError(f"halves of base block {index} do not partition it")
        return first, second

    def _recombine(self, left: Tuple[Half, Half], right: Tuple[Half, Half]) -> List[Block]:
        return [Block.of(left[u - 1] + right[v - 1]) for u, v in RECOMBINATION_ORDER]

    def _assemble(self, n: int, k: int, bases: List[Block], recombined: List[Block]) -> DesignFamily:
        tags = [BlockTag.base(i) for i in range(1, len(bases) + 1)]
        for position in range(len(recombined)):
            m = position // 4 + 1
            u, v = RECOMBINATION_ORDER[position % 4]
            tags.append(BlockTag.recombined(m, u, v))
        return DesignFamily(n=n, k=k, blocks=tuple(bases + recombined), structure=tuple(tags))
