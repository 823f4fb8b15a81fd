"""Quality and efficiency metrics: WER, recovery rate, length statistics.

WER is computed from the same unit-cost alignment the rest of the
package uses, so the metric and the representations share one distance
definition. Edit-string length is counted in whitespace tokens.
"""

from __future__ import annotations

from dataclasses import dataclass

from .alignment import OpKind, align
from .errors import CorpusError, EmptyReferenceError
from .schemes import SchemeConfig, compress, expand
from .tokens import TokenSeq, tokenize


@dataclass(frozen=True)
class WerBreakdown:
    substitutions: int
    deletions: int
    insertions: int
    ref_len: int
    wer: float

    @property
    def total_errors(self) -> int:
        return self.substitutions + self.deletions + self.insertions


def error_counts(reference: TokenSeq, hypothesis: TokenSeq) -> tuple[int, int, int]:
    """(substitutions, deletions, insertions) of hypothesis vs reference."""
    subs = dels = ins = 0
    for op in align(reference, hypothesis).ops:
        if op.kind is OpKind.SUB:
            subs += 1
        elif op.kind is OpKind.DEL:
            dels += 1
        elif op.kind is OpKind.INS:
            ins += 1
    return subs, dels, ins


def wer(reference: TokenSeq, hypothesis: TokenSeq) -> WerBreakdown:
    """Word error rate of hypothesis against a non-empty reference."""
    if not reference:
        raise EmptyReferenceError("WER is undefined for an empty reference")
    subs, dels, ins = error_counts(reference, hypothesis)
    rate = (subs + dels + ins) / len(reference)
    return WerBreakdown(subs, dels, ins, len(reference), rate)


def recovery_rate(corpus: list[tuple[TokenSeq, TokenSeq]], cfg: SchemeConfig) -> float:
    """Fraction of (x, y) pairs whose compressed string expands back to y."""
    if not corpus:
        raise CorpusError("recovery rate is undefined for an empty corpus")
    recovered = sum(
        1 for x, y in corpus if expand(x, compress(x, y, cfg)).output == y
    )
    return recovered / len(corpus)


@dataclass(frozen=True)
class LengthStats:
    avg_output_tokens: float
    avg_full_tokens: float
    reduction_rate: float


def length_stats(corpus: list[tuple[TokenSeq, TokenSeq]], cfg: SchemeConfig) -> LengthStats:
    """Average edit-string token count and its reduction vs full targets."""
    if not corpus:
        raise CorpusError("length stats are undefined for an empty corpus")
    edit_tokens = 0
    full_tokens = 0
    for x, y in corpus:
        edit_tokens += len(tokenize(compress(x, y, cfg).text))
        full_tokens += len(y)
    avg_edit = edit_tokens / len(corpus)
    avg_full = full_tokens / len(corpus)
    if avg_full == 0:
        reduction = 1.0 if avg_edit == 0 else float("-inf")
    else:
        reduction = 1.0 - avg_edit / avg_full
    return LengthStats(avg_edit, avg_full, reduction)
