"""Pydantic models for the covering design toolkit."""
from enum import Enum
from typing import Optional, List, Dict, Tuple

from pydantic import BaseModel, ConfigDict, Field, ValidationInfo, field_validator, model_validator

from errors import ParameterError


Half = Tuple[int, ...]


class ConstructionParams(BaseModel):
    """Group size g and group count t of the pairing construction."""
    model_config = ConfigDict(frozen=True)

    group_size: int = Field(description="Size g of each base block (even, >= 2)")
    group_count: int = Field(description="Number t of base blocks (even, >= 2)")

    @model_validator(mode="after")
    def _check_even(self) -> "ConstructionParams":
        for name, value in (("group size", self.group_size), ("group count", self.group_count)):
            if value < 2 or value % 2:
                raise ParameterError(f"{name} must be an even integer >= 2, got {value}")
        return self

    @property
    def n(self) -> int:
        return self.group_size * self.group_count

    @property
    def half_size(self) -> int:
        return self.group_size // 2

    @property
    def pair_count(self) -> int:
        return self.group_count // 2

    @property
    def block_count(self) -> int:
        return 3 * self.group_count

    @property
    def guarantee_threshold(self) -> int:
        return self.pair_count + 1


class Block(BaseModel):
    """A block: strictly increasing tuple of 1-based element ids."""
    model_config = ConfigDict(frozen=True)

    members: Tuple[int, ...]

    @field_validator("members")
    @classmethod
    def _check_canonical(cls, members: Tuple[int, ...]) -> Tuple[int, ...]:
        if any(m < 1 for m in members):
            raise ValueError(f"block members must be >= 1: {members}")
        if any(a >= b for a, b in zip(members, members[1:])):
            raise ValueError(f"block members must be strictly increasing: {members}")
        return members

    @classmethod
    def of(cls, elements) -> "Block":
        return cls(members=tuple(sorted(elements)))

    @property
    def size(self) -> int:
        return len(self.members)

    @property
    def mask(self) -> int:
        """Occupancy word: bit e-1 is set for member e."""
        mask = 0
        for m in self.members:
            mask |= 1 << (m - 1)
        return mask

    def __str__(self) -> str:
        return " ".join(str(m) for m in self.members)


class PairGroup(BaseModel):
    """Fixed couple of base blocks (2m-1, 2m)."""
    model_config = ConfigDict(frozen=True)

    index: int = Field(ge=1, description="Pair index m")

    @property
    def left_base(self) -> int:
        return 2 * self.index - 1

    @property
    def right_base(self) -> int:
        return 2 * self.index


class TagKind(str, Enum):
    BASE = "base"
    RECOMBINED = "recomb"


class BlockTag(BaseModel):
    """Construction role of one block: base(i) or recombined(m, u, v)."""
    model_config = ConfigDict(frozen=True)

    kind: TagKind
    base_index: Optional[int] = Field(default=None, ge=1)
    pair_index: Optional[int] = Field(default=None, ge=1)
    u: Optional[int] = Field(default=None, ge=1, le=2)
    v: Optional[int] = Field(default=None, ge=1, le=2)

    @model_validator(mode="after")
    def _check_fields(self) -> "BlockTag":
        if self.kind == TagKind.BASE:
            if self.base_index is None or any(x is not None for x in (self.pair_index, self.u, self.v)):
                raise ValueError("base tag needs exactly a base index")
        elif self.base_index is not None or any(x is None for x in (self.pair_index, self.u, self.v)):
            raise ValueError("recombined tag needs pair index, u and v")
        return self

    @classmethod
    def base(cls, index: int) -> "BlockTag":
        return cls(kind=TagKind.BASE, base_index=index)

    @classmethod
    def recombined(cls, pair_index: int, u: int, v: int) -> "BlockTag":
        return cls(kind=TagKind.RECOMBINED, pair_index=pair_index, u=u, v=v)

    def label(self) -> str:
        if self.kind == TagKind.BASE:
            return f"base {self.base_index}"
        return f"recomb {self.pair_index} {self.u} {self.v}"


class DesignFamily(BaseModel):
    """Ordered block list over [1, n], optionally tagged with construction roles."""
    model_config = ConfigDict(frozen=True)

    n: int = Field(ge=1, description="Ground-set size")
    k: int = Field(ge=1, description="Block size")
    blocks: Tuple[Block, ...] = ()
    structure: Optional[Tuple[BlockTag, ...]] = Field(
        default=None, description="Per-block construction tags, aligned with blocks"
    )

    @field_validator("structure")
    @classmethod
    def _empty_structure_is_none(cls, value: Optional[Tuple[BlockTag, ...]], info: ValidationInfo):
        # a family without blocks has no construction roles to record
        if value == () and not info.data.get("blocks"):
            return None
        return value

    @model_validator(mode="after")
    def _check_blocks(self) -> "DesignFamily":
        if self.k > self.n:
            raise ValueError(f"block size {self.k} exceeds ground-set size {self.n}")
        for position, block in enumerate(self.blocks, start=1):
            if block.size != self.k:
                raise ValueError(f"block {position} has {block.size} members, expected {self.k}")
            if block.members and block.members[-1] > self.n:
                raise ValueError(f"block {position} has member {block.members[-1]} outside [1, {self.n}]")
        if self.structure is not None and len(self.structure) != len(self.blocks):
            raise ValueError(
                f"structure has {len(self.structure)} tags for {len(self.blocks)} blocks"
            )
        return self

    @property
    def has_structure(self) -> bool:
        return self.structure is not None

    def block(self, index: int) -> Block:
        """1-based block lookup."""
        return self.blocks[index - 1]

    def masks(self) -> List[int]:
        return [block.mask for block in self.blocks]

    def without_block(self, index: int) -> "DesignFamily":
        """Drop the 1-based block `index`; remaining tags are kept."""
        if not 1 <= index <= len(self.blocks):
            raise ParameterError(f"block index {index} outside [1, {len(self.blocks)}]")
        blocks = self.blocks[:index - 1] + self.blocks[index:]
        structure = None
        if self.structure is not None:
            structure = self.structure[:index - 1] + self.structure[index:]
        return DesignFamily(n=self.n, k=self.k, blocks=blocks, structure=structure)

    def with_block(self, block: Block) -> "DesignFamily":
        """Append an untagged block; construction metadata no longer applies."""
        return DesignFamily(n=self.n, k=self.k, blocks=self.blocks + (block,))


class PairGraph(BaseModel):
    """Covered-pair graph on vertices 1..n stored as neighbour bitmasks."""
    model_config = ConfigDict(frozen=True)

    n: int = Field(ge=1)
    neighbors: Tuple[int, ...] = Field(description="neighbors[v-1] has bit u-1 set iff {u, v} is covered")

    @model_validator(mode="after")
    def _check_symmetric(self) -> "PairGraph":
        if len(self.neighbors) != self.n:
            raise ValueError(f"expected {self.n} neighbour masks, got {len(self.neighbors)}")
        for v, mask in enumerate(self.neighbors, start=1):
            if mask >> (v - 1) & 1:
                raise ValueError(f"vertex {v} is adjacent to itself")
            if mask >> self.n:
                raise ValueError(f"vertex {v} has neighbours outside [1, {self.n}]")
        for v, mask in enumerate(self.neighbors, start=1):
            rest = mask
            while rest:
                low = rest & -rest
                u = low.bit_length()
                rest ^= low
                if not self.neighbors[u - 1] >> (v - 1) & 1:
                    raise ValueError(f"edge {{{v}, {u}}} is not symmetric")
        return self

    def has_edge(self, x: int, y: int) -> bool:
        return bool(self.neighbors[x - 1] >> (y - 1) & 1)

    def degree(self, v: int) -> int:
        return self.neighbors[v - 1].bit_count()

    @property
    def edge_count(self) -> int:
        return sum(mask.bit_count() for mask in self.neighbors) // 2

    def edges(self) -> List[Tuple[int, int]]:
        return [
            (x, y)
            for x in range(1, self.n + 1)
            for y in range(x + 1, self.n + 1)
            if self.has_edge(x, y)
        ]


# Verification results

class Outcome(str, Enum):
    HOLDS = "HOLDS"
    FAILS = "FAILS"
    UNDECIDED = "UNDECIDED"


class Method(str, Enum):
    EXHAUSTIVE = "exhaustive"
    GRAPH = "graph"
    STRUCTURAL = "structural"


class CliqueCoverCertificate(BaseModel):
    """Partition of [1, n] into cliques; c cliques prove alpha <= c."""
    model_config = ConfigDict(frozen=True)

    cliques: Tuple[Tuple[int, ...], ...]

    @property
    def size(self) -> int:
        return len(self.cliques)


class VerificationReport(BaseModel):
    """Outcome of one verification method at subset size s."""
    model_config = ConfigDict(frozen=True)

    method: Method
    outcome: Outcome
    subset_size: int
    counterexample: Optional[Tuple[int, ...]] = Field(
        default=None, description="s-subset meeting every block in at most one point"
    )
    scanned: int = Field(default=0, description="Subsets examined (exhaustive) or search-tree nodes (graph)")
    certificate: Optional[CliqueCoverCertificate] = None
    alpha: Optional[int] = Field(default=None, description="Independence number, graph method only")
    lower_bound: Optional[int] = Field(default=None, description="Best alpha bound found when undecided")
    upper_bound: Optional[int] = Field(default=None, description="Clique-cover bound when undecided")
    reason: Optional[str] = Field(default=None, description="Why the structural proof does not apply")
    elapsed_seconds: float = 0.0


class IndependenceResult(BaseModel):
    """Exact maximum independent set, or bounds when the node budget ran out."""
    model_config = ConfigDict(frozen=True)

    decided: bool
    alpha: Optional[int] = None
    witness: Tuple[int, ...] = ()
    nodes: int = 0
    lower_bound: int = 0
    upper_bound: int = 0


class CaseTag(str, Enum):
    BASE_COLLISION = "BASE"
    PAIR_COLLISION = "PAIR"


class WitnessResult(BaseModel):
    """Block named by the proof that meets the query subset twice."""
    model_config = ConfigDict(frozen=True)

    case: CaseTag
    block_index: int = Field(ge=1, description="1-based position in the family")
    block: Block
    base_index: Optional[int] = None
    pair_index: Optional[int] = None
    u: Optional[int] = None
    v: Optional[int] = None

    def describe(self) -> str:
        if self.case == CaseTag.BASE_COLLISION:
            head = f"BASE i={self.base_index}"
        else:
            head = f"PAIR m={self.pair_index} u={self.u} v={self.v}"
        return f"{head} → block {self.block_index}: {self.block}"


class CoverageStats(BaseModel):
    """Pair-coverage summary of a family."""
    model_config = ConfigDict(frozen=True)

    covered_pairs: int
    uncovered_pairs: int
    multiplicity_histogram: Dict[int, int] = Field(description="c -> number of pairs covered by exactly c blocks")
    per_block_pairs: List[int]
    per_block_unique_pairs: List[int] = Field(description="Pairs of the block covered by no other block")


class BlockNecessity(BaseModel):
    block_index: int
    block: Block
    necessary: bool
    counterexample: Optional[Tuple[int, ...]] = None


class IrredundancyReport(BaseModel):
    """Per-block outcome of deleting that block."""
    subset_size: int
    baseline: Outcome
    entries: List[BlockNecessity] = Field(default_factory=list)

    @property
    def necessary_blocks(self) -> List[int]:
        return [entry.block_index for entry in self.entries if entry.necessary]

    @property
    def is_irredundant(self) -> bool:
        return bool(self.entries) and all(entry.necessary for entry in self.entries)
