"""King-and-pawn diagrams on h x n boards realizing lists of components.

Each component file carries a White pawn just below the middle rank and a
Black pawn just above it; a stopped file adds four immobile stopper pawns
near the board edges.  The right side of the board holds a fixed frame: a
two-file mutual Zugzwang followed by two corner King-and-three-pawn locks,
so that whoever loses the pawn fight must self-destruct in the Zugzwang.
A trailing one-file component (the attached *1 heap of the illustrative
positions) sits in the spare file between the Zugzwang and the corner
locks; everything else fills from the left with one empty separator file
between components.

The frame template is exact for height 9; other odd heights are emitted
best effort with a warning, since only the 9-row arrangement has a fully
checked reference.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass, field

from .words import Word, validate

PIECES = ".PpKk"


class EmbedError(ValueError):
    pass


class FrameTemplateWarning(UserWarning):
    pass


@dataclass
class ChessDiagram:
    """Grid of cells; rows are numbered 1 (bottom) to height, files 1 to
    width.  Cell values: '.', 'P', 'p', 'K', 'k'."""

    height: int
    width: int
    rows: list = field(default_factory=list)  # rows[r-1][f-1], bottom first

    def __post_init__(self):
        if not self.rows:
            self.rows = [["."] * self.width for _ in range(self.height)]

    def cell(self, file: int, row: int) -> str:
        return self.rows[row - 1][file - 1]

    def put(self, file: int, row: int, piece: str) -> None:
        if piece not in PIECES:
            raise ValueError(f"unknown piece {piece!r}")
        if not (1 <= file <= self.width and 1 <= row <= self.height):
            raise EmbedError(f"square ({file},{row}) off the board")
        if self.rows[row - 1][file - 1] != ".":
            raise EmbedError(f"square ({file},{row}) already occupied")
        self.rows[row - 1][file - 1] = piece

    def counts(self) -> dict:
        out = {c: 0 for c in PIECES[1:]}
        for row in self.rows:
            for c in row:
                if c != ".":
                    out[c] += 1
        return out

    def check(self) -> None:
        counts = self.counts()
        if counts["K"] != 1 or counts["k"] != 1:
            raise EmbedError("diagram needs exactly one king per colour")


def _require_odd_height(height: int, any_stopped: bool) -> None:
    if height % 2 == 0 or height <= 5:
        raise EmbedError("height must be an odd number greater than 5")
    if any_stopped and height < 9:
        raise EmbedError("stopped files need height at least 9")


def embed(components, height: int, width: int) -> ChessDiagram:
    """Realize the component list on a height x width board.

    Raises EmbedError when the dimensions cannot hold the components plus
    the six frame files.
    """
    comps = [c if isinstance(c, Word) else Word(c) for c in components]
    for c in comps:
        if not c.is_valid:
            raise EmbedError("invalid word: adjacent stopped files at index "
                             f"{validate(c)}")
        if len(c) == 0:
            raise EmbedError("empty component")
    any_stopped = any(any(c) for c in comps)
    _require_odd_height(height, any_stopped)

    heap_comp = None
    left = list(comps)
    if len(comps) >= 2 and len(comps[-1]) == 1:
        heap_comp = comps[-1]
        left = comps[:-1]
    left_width = sum(len(c) for c in left) + max(0, len(left) - 1)
    if left_width > width - 6:
        raise EmbedError(
            f"width {width} too small: components need {left_width} files "
            f"plus the 6 frame files")

    diag = ChessDiagram(height, width)
    wrow = (height - 1) // 2
    brow = (height + 3) // 2

    def place_component(comp: Word, file0: int) -> None:
        for off, flag in enumerate(comp):
            f = file0 + off
            diag.put(f, wrow, "P")
            diag.put(f, brow, "p")
            if flag:
                # stopper pawns: Black over White near each edge
                diag.put(f, height - 1, "p")
                diag.put(f, height - 2, "P")
                diag.put(f, 3, "p")
                diag.put(f, 2, "P")

    f = 1
    for idx, comp in enumerate(left):
        if idx:
            f += 1
        place_component(comp, f)
        f += len(comp)
    if heap_comp is not None:
        place_component(heap_comp, width - 2)

    _place_frame(diag)
    diag.check()
    if height != 9:
        warnings.warn(
            "frame template is only reference-checked at height 9",
            FrameTemplateWarning, stacklevel=2)
    return diag


def _place_frame(diag: ChessDiagram) -> None:
    h, n = diag.height, diag.width
    mid = (h + 1) // 2
    g, hh = n - 5, n - 4
    # central mutual Zugzwang, three pawns a side
    diag.put(g, mid + 2, "p")
    diag.put(g, mid, "p")
    diag.put(g, mid - 1, "P")
    diag.put(hh, mid + 1, "p")
    diag.put(hh, mid, "P")
    diag.put(hh, mid - 2, "P")
    # corner locks: King and three pawns, immobilized
    diag.put(n, h, "k")
    diag.put(n, h - 1, "P")
    diag.put(n - 1, h - 1, "p")
    diag.put(n - 1, h - 2, "P")
    diag.put(n, 1, "K")
    diag.put(n, 2, "p")
    diag.put(n - 1, 2, "P")
    diag.put(n - 1, 3, "p")


def render(diag: ChessDiagram, format: str = "ascii") -> str:
    """ascii: one row per line, top row first, '.' for empty squares.
    fen: rows top to bottom joined by '/', empty runs as decimal counts
    (multi-digit on wide boards)."""
    if format == "ascii":
        return "\n".join("".join(diag.rows[r]) for r in
                         range(diag.height - 1, -1, -1))
    if format == "fen":
        out_rows = []
        for r in range(diag.height - 1, -1, -1):
            row = diag.rows[r]
            parts = []
            empties = 0
            for c in row:
                if c == ".":
                    empties += 1
                    continue
                if empties:
                    parts.append(str(empties))
                    empties = 0
                parts.append(c)
            if empties:
                parts.append(str(empties))
            out_rows.append("".join(parts))
        return "/".join(out_rows)
    raise ValueError(f"unknown format {format!r}")


def parse_render(text: str, format: str = "ascii") -> ChessDiagram:
    """Inverse of render, for round-trip checks."""
    if format == "ascii":
        lines = [ln for ln in text.splitlines() if ln]
        height = len(lines)
        width = len(lines[0])
        rows = [list(lines[height - 1 - r]) for r in range(height)]
        return ChessDiagram(height, width, rows)
    if format == "fen":
        lines = text.split("/")
        parsed = []
        for ln in lines:
            row = []
            num = ""
            for ch in ln:
                if ch.isdigit():
                    num += ch
                    continue
                if num:
                    row.extend(["."] * int(num))
                    num = ""
                row.append(ch)
            if num:
                row.extend(["."] * int(num))
            parsed.append(row)
        height = len(parsed)
        width = len(parsed[0])
        rows = [parsed[height - 1 - r] for r in range(height)]
        return ChessDiagram(height, width, rows)
    raise ValueError(f"unknown format {format!r}")


def extract_components(diag: ChessDiagram) -> "list[Word]":
    """Read the component words back out of a diagram: a component file
    holds the White/Black pawn pair at the middle ranks, and its stopped
    flag is the presence of all four stopper pawns."""
    h = diag.height
    wrow = (h - 1) // 2
    brow = (h + 3) // 2
    comps = []
    run = []
    for f in range(1, diag.width + 1):
        if diag.cell(f, wrow) == "P" and diag.cell(f, brow) == "p":
            stopped = (h >= 9
                       and diag.cell(f, h - 1) == "p"
                       and diag.cell(f, h - 2) == "P"
                       and diag.cell(f, 3) == "p"
                       and diag.cell(f, 2) == "P")
            run.append(1 if stopped else 0)
        elif run:
            comps.append(Word(run))
            run = []
    if run:
        comps.append(Word(run))
    return comps
