"""Reader and writer for the line-oriented design file format.

Format::

    # optional comment lines
    n k b
    1 2 3 4 5 6 # base 1
    1 2 3 7 8 9 # recomb 1 1 1

One block per line, members ascending and 1-based. The trailing
``# base i`` / ``# recomb m u v`` annotations carry construction metadata;
they appear on every block line or on none.
"""
import logging
from pathlib import Path
from typing import List, Optional, Tuple, Union

from errors import DesignFormatError
from models import Block, BlockTag, DesignFamily

logger = logging.getLogger(__name__)


class DesignFileWriter:
    """Serializes families canonically: header, blocks in order, single spaces, trailing newline."""

    def write_design(self, family: DesignFamily, annotate: bool = True) -> str:
        lines = [f"{family.n} {family.k} {len(family.blocks)}"]
        for position, block in enumerate(family.blocks):
            line = str(block)
            if annotate and family.structure is not None:
                line = f"{line} # {family.structure[position].label()}"
            lines.append(line)
        return "\n".join(lines) + "\n"

    def write_design_file(self, family: DesignFamily, path: Union[str, Path], annotate: bool = True) -> Path:
        path = Path(path)
        path.parent.mkdir(parents=True, exist_ok=True)
        with open(path, "w", encoding="utf-8", newline="\n") as f:
            f.write(self.write_design(family, annotate=annotate))
        logger.info(f"[IO] wrote {len(family.blocks)} blocks to {path}")
        return path


class DesignFileParser:
    """Parses design files; every malformed input raises DesignFormatError with its line number."""

    def read_design(self, text: str) -> DesignFamily:
        header: Optional[Tuple[int, int, int]] = None
        header_line = 0
        blocks: List[Block] = []
        tags: List[Optional[BlockTag]] = []
        tag_lines: List[int] = []

        for line_number, raw in enumerate(text.splitlines(), start=1):
            stripped = raw.strip()
            if not stripped or stripped.startswith("#"):
                continue
            body, _, annotation = stripped.partition("#")
            tokens = body.split()

            if header is None:
                if annotation:
                    raise DesignFormatError("header line cannot carry an annotation", line_number)
                header = self._parse_header(tokens, line_number)
                header_line = line_number
                continue

            n, k, b = header
            if len(blocks) == b:
                raise DesignFormatError(f"header declares {b} blocks but more block lines follow", line_number)
            blocks.append(self._parse_block(tokens, n, k, line_number))
            tags.append(self._parse_annotation(annotation, line_number) if annotation else None)
            tag_lines.append(line_number)

        if header is None:
            raise DesignFormatError("missing header line 'n k b'", None)
        n, k, b = header
        if len(blocks) != b:
            raise DesignFormatError(f"header declares {b} blocks but {len(blocks)} block lines follow", header_line)

        structure = None
        annotated = [tag is not None for tag in tags]
        if any(annotated):
            if not all(annotated):
                line_number = tag_lines[annotated.index(False)]
                raise DesignFormatError("structure annotations must appear on every block line", line_number)
            structure = tuple(tags)

        return DesignFamily(n=n, k=k, blocks=tuple(blocks), structure=structure)

    def read_design_file(self, path: Union[str, Path]) -> DesignFamily:
        raw = Path(path).read_bytes()
        try:
            text = raw.decode("utf-8")
        except UnicodeDecodeError as e:
            line_number = raw.count(b"\n", 0, e.start) + 1
            raise DesignFormatError(f"not valid UTF-8 text: byte 0x{raw[e.start]:02x}", line_number) from e
        family = self.read_design(text)
        logger.info(f"[IO] read {len(family.blocks)} blocks on [1, {family.n}] from {path}")
        return family

    def _parse_ints(self, tokens: List[str], line_number: int, what: str) -> List[int]:
        try:
            return [int(token) for token in tokens]
        except ValueError:
            raise DesignFormatError(f"non-integer token in {what}: {' '.join(tokens)!r}", line_number)

    def _parse_header(self, tokens: List[str], line_number: int) -> Tuple[int, int, int]:
        if len(tokens) != 3:
            raise DesignFormatError(f"header must be 'n k b', got {' '.join(tokens)!r}", line_number)
        n, k, b = self._parse_ints(tokens, line_number, "header")
        if n < 1 or k < 1 or b < 0 or k > n:
            raise DesignFormatError(f"header values out of range: n={n} k={k} b={b}", line_number)
        return n, k, b

    def _parse_block(self, tokens: List[str], n: int, k: int, line_number: int) -> Block:
        members = self._parse_ints(tokens, line_number, "block")
        if len(members) != k:
            raise DesignFormatError(f"block has {len(members)} members, expected {k}", line_number)
        for m in members:
            if not 1 <= m <= n:
                raise DesignFormatError(f"member {m} outside [1, {n}]", line_number)
        if len(set(members)) != len(members):
            raise DesignFormatError(f"duplicate member in block {' '.join(tokens)!r}", line_number)
        if members != sorted(members):
            raise DesignFormatError(f"block members not in ascending order: {' '.join(tokens)!r}", line_number)
        return Block(members=tuple(members))

    def _parse_annotation(self, annotation: str, line_number: int) -> BlockTag:
        tokens = annotation.split()
        try:
            if tokens and tokens[0] == "base" and len(tokens) == 2:
                index = int(tokens[1])
                if index >= 1:
                    return BlockTag.base(index)
            elif tokens and tokens[0] == "recomb" and len(tokens) == 4:
                m, u, v = (int(token) for token in tokens[1:])
                if m >= 1 and u in (1, 2) and v in (1, 2):
                    return BlockTag.recombined(m, u, v)
        except ValueError:
            pass
        raise DesignFormatError(f"malformed structure annotation {annotation.strip()!r}", line_number)
