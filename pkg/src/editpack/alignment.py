"""Word-level Levenshtein alignment and minimal edit scripts.

The alignment uses unit costs (match 0; substitute, delete, insert 1)
and a deterministic backtrace that prefers MATCH, then SUB, then DEL,
then INS whenever costs tie. Maximal runs of consecutive non-match
operations become one edit each, so every extracted edit is flanked by
matching tokens (or a sequence boundary).

Span convention: 0-indexed, half-open. An insertion is a zero-width
span (src_lo == src_hi) at the position where the new tokens go.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import NamedTuple

from .errors import InvalidAlignmentError, InvalidScriptError
from .tokens import TokenSeq


class OpKind(enum.Enum):
    MATCH = "match"
    SUB = "sub"
    DEL = "del"
    INS = "ins"


class AlignOp(NamedTuple):
    kind: OpKind
    src: int | None
    tgt: int | None


@dataclass
class Alignment:
    """Monotone edit-operation sequence between two token sequences."""

    ops: list[AlignOp] = field(default_factory=list)

    @property
    def cost(self) -> int:
        return sum(1 for op in self.ops if op.kind is not OpKind.MATCH)


@dataclass
class Edit:
    """One local rewrite: replace x[src_lo:src_hi] with tgt_phrase.

    tgt_lo/tgt_hi locate tgt_phrase inside the target sequence, which
    the dilation step needs to widen phrases with matched context.
    """

    src_lo: int
    src_hi: int
    tgt_phrase: TokenSeq
    tgt_lo: int
    tgt_hi: int


def align(x: TokenSeq, y: TokenSeq) -> Alignment:
    """Minimum-cost monotone alignment of x to y under unit costs."""
    n, m = len(x), len(y)
    cost = [[0] * (m + 1) for _ in range(n + 1)]
    for i in range(1, n + 1):
        cost[i][0] = i
    for j in range(1, m + 1):
        cost[0][j] = j
    for i in range(1, n + 1):
        row = cost[i]
        prev = cost[i - 1]
        xi = x[i - 1]
        for j in range(1, m + 1):
            best = prev[j - 1] + (0 if xi == y[j - 1] else 1)
            up = prev[j] + 1
            if up < best:
                best = up
            left = row[j - 1] + 1
            if left < best:
                best = left
            row[j] = best

    # Backtrace, preferring MATCH > SUB > DEL > INS at equal cost.
    ops: list[AlignOp] = []
    i, j = n, m
    while i > 0 or j > 0:
        if i > 0 and j > 0 and x[i - 1] == y[j - 1] and cost[i][j] == cost[i - 1][j - 1]:
            ops.append(AlignOp(OpKind.MATCH, i - 1, j - 1))
            i -= 1
            j -= 1
        elif i > 0 and j > 0 and x[i - 1] != y[j - 1] and cost[i][j] == cost[i - 1][j - 1] + 1:
            ops.append(AlignOp(OpKind.SUB, i - 1, j - 1))
            i -= 1
            j -= 1
        elif i > 0 and cost[i][j] == cost[i - 1][j] + 1:
            ops.append(AlignOp(OpKind.DEL, i - 1, None))
            i -= 1
        else:
            ops.append(AlignOp(OpKind.INS, None, j - 1))
            j -= 1
    ops.reverse()
    return Alignment(ops)


def _validate_alignment(x: TokenSeq, y: TokenSeq, alignment: Alignment) -> None:
    si = 0
    ti = 0
    for op in alignment.ops:
        if op.kind in (OpKind.MATCH, OpKind.SUB):
            if op.src != si or op.tgt != ti:
                raise InvalidAlignmentError(f"op {op} does not consume indices ({si}, {ti})")
            if si >= len(x) or ti >= len(y):
                raise InvalidAlignmentError(f"op {op} out of range")
            if op.kind is OpKind.MATCH and x[si] != y[ti]:
                raise InvalidAlignmentError(f"MATCH links unequal tokens {x[si]!r} != {y[ti]!r}")
            si += 1
            ti += 1
        elif op.kind is OpKind.DEL:
            if op.src != si or si >= len(x):
                raise InvalidAlignmentError(f"op {op} does not consume source index {si}")
            si += 1
        else:
            if op.tgt != ti or ti >= len(y):
                raise InvalidAlignmentError(f"op {op} does not consume target index {ti}")
            ti += 1
    if si != len(x) or ti != len(y):
        raise InvalidAlignmentError(
            f"alignment consumes ({si}, {ti}) of ({len(x)}, {len(y)}) tokens"
        )


def extract_edit_script(x: TokenSeq, y: TokenSeq, alignment: Alignment) -> list[Edit]:
    """Collapse maximal runs of non-MATCH ops into ordered edits."""
    _validate_alignment(x, y, alignment)
    edits: list[Edit] = []
    si = 0
    ti = 0
    run_src_lo: int | None = None
    run_tgt_lo = 0

    def close_run() -> None:
        nonlocal run_src_lo
        if run_src_lo is not None:
            edits.append(Edit(run_src_lo, si, y[run_tgt_lo:ti], run_tgt_lo, ti))
            run_src_lo = None

    for op in alignment.ops:
        if op.kind is OpKind.MATCH:
            close_run()
            si += 1
            ti += 1
            continue
        if run_src_lo is None:
            run_src_lo = si
            run_tgt_lo = ti
        if op.kind is OpKind.SUB:
            si += 1
            ti += 1
        elif op.kind is OpKind.DEL:
            si += 1
        else:
            ti += 1
    close_run()
    return edits


def apply_edit_script(x: TokenSeq, script: list[Edit]) -> TokenSeq:
    """Replace each span of x per the script. Spans must be sorted and disjoint."""
    out: TokenSeq = []
    cursor = 0
    for edit in script:
        if not 0 <= edit.src_lo <= edit.src_hi <= len(x):
            raise InvalidScriptError(f"span ({edit.src_lo}, {edit.src_hi}) out of bounds for |x|={len(x)}")
        if edit.src_lo < cursor:
            raise InvalidScriptError(f"span ({edit.src_lo}, {edit.src_hi}) overlaps a previous edit")
        out.extend(x[cursor:edit.src_lo])
        out.extend(edit.tgt_phrase)
        cursor = edit.src_hi
    out.extend(x[cursor:])
    return out
