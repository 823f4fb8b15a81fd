"""Corpus I/O and batch evaluation.

Corpora are JSONL (objects with keys id, source, target, predicted_edit)
or TSV (those columns, in that order; trailing columns optional). The
evaluation report is a plain dataclass whose to_dict() form is what the
CLI writes; key names are documented in the README.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path

from .errors import CorpusError
from .metrics import error_counts
from .schemes import DiscardReason, EditString, ExpansionOutcome, SchemeConfig, compress, expand
from .tokens import tokenize


@dataclass
class CorpusExample:
    id: str
    source: str
    target: str | None = None
    predicted_edit: str | None = None


def ingest(path: str | Path, fmt: str = "jsonl") -> list[CorpusExample]:
    """Load a corpus file, preserving example order.

    Raises CorpusError naming the offending line on malformed input, and
    on files that yield zero examples.
    """
    if fmt not in ("jsonl", "tsv"):
        raise CorpusError(f"unknown corpus format {fmt!r}")
    examples: list[CorpusExample] = []
    with open(path, encoding="utf-8") as handle:
        for lineno, line in enumerate(handle, start=1):
            if not line.strip():
                continue
            if fmt == "jsonl":
                examples.append(_parse_jsonl_line(line, lineno))
            else:
                examples.append(_parse_tsv_line(line, lineno))
    if not examples:
        raise CorpusError(f"{path}: no examples found")
    return examples


def _parse_jsonl_line(line: str, lineno: int) -> CorpusExample:
    try:
        record = json.loads(line)
    except json.JSONDecodeError as exc:
        raise CorpusError(f"line {lineno}: invalid JSON ({exc.msg})") from exc
    if not isinstance(record, dict) or "source" not in record:
        raise CorpusError(f"line {lineno}: expected an object with a 'source' key")
    return CorpusExample(
        id=str(record.get("id", lineno)),
        source=record["source"],
        target=record.get("target"),
        predicted_edit=record.get("predicted_edit"),
    )


def _parse_tsv_line(line: str, lineno: int) -> CorpusExample:
    columns = line.rstrip("\n").split("\t")
    if len(columns) < 2:
        raise CorpusError(f"line {lineno}: expected at least id and source columns")
    if len(columns) > 4:
        raise CorpusError(f"line {lineno}: too many columns ({len(columns)})")
    padded = columns + [None] * (4 - len(columns))
    return CorpusExample(
        id=padded[0],
        source=padded[1],
        target=padded[2],
        predicted_edit=padded[3],
    )


def _require_targets(corpus: list[CorpusExample]) -> None:
    missing = [ex.id for ex in corpus if ex.target is None]
    if missing:
        raise CorpusError(f"examples missing a target: {', '.join(missing)}")


def emit_training(corpus: list[CorpusExample], cfg: SchemeConfig, out: str | Path) -> int:
    """Write {input, target} training records; returns the count written.

    Pairs whose compressed label does not expand back to the reference
    are still written (the format is the format), but their ids go to a
    sidecar report at <out>.sidecar.json so the unrecoverable labels are
    visible before anyone trains on them.
    """
    if not corpus:
        raise CorpusError("cannot emit training data from an empty corpus")
    _require_targets(corpus)
    unrecoverable = []
    count = 0
    with open(out, "w", encoding="utf-8") as handle:
        for ex in corpus:
            x = tokenize(ex.source)
            y = tokenize(ex.target)
            compressed = compress(x, y, cfg)
            outcome = expand(x, compressed)
            if outcome.output != y:
                unrecoverable.append(
                    {"id": ex.id, "discarded_edits": outcome.discarded_count}
                )
            record = {"input": ex.source, "target": compressed.text}
            handle.write(json.dumps(record, ensure_ascii=False) + "\n")
            count += 1
    sidecar = {
        "total": count,
        "unrecoverable": unrecoverable,
    }
    with open(f"{out}.sidecar.json", "w", encoding="utf-8") as handle:
        json.dump(sidecar, handle, ensure_ascii=False, indent=2)
        handle.write("\n")
    return count


@dataclass
class EvalReport:
    scheme: str
    dilation_k: int
    marker: str
    field_sep: str
    edit_sep: str
    strict: bool
    corpus_size: int
    recovery_rate: float
    wer_before: float
    wer_after: float
    avg_edit_tokens: float
    avg_target_tokens: float
    reduction_rate: float
    applied_edits: int
    discarded_edits: int
    discards: dict[str, int] = field(default_factory=dict)

    def to_dict(self) -> dict:
        return {
            "config": {
                "scheme": self.scheme,
                "dilation_k": self.dilation_k,
                "marker": self.marker,
                "field_sep": self.field_sep,
                "edit_sep": self.edit_sep,
                "strict": self.strict,
            },
            "corpus_size": self.corpus_size,
            "recovery_rate": self.recovery_rate,
            "wer_before": self.wer_before,
            "wer_after": self.wer_after,
            "length": {
                "avg_edit_tokens": self.avg_edit_tokens,
                "avg_target_tokens": self.avg_target_tokens,
                "reduction_rate": self.reduction_rate,
            },
            "edits": {
                "applied": self.applied_edits,
                "discarded": self.discarded_edits,
            },
            "discards": self.discards,
        }


def evaluate_strings(
    corpus: list[CorpusExample], cfg: SchemeConfig, edit_strings: list[str]
) -> EvalReport:
    """Expand one edit string per example and aggregate the metrics."""
    if not corpus:
        raise CorpusError("cannot evaluate an empty corpus")
    if len(edit_strings) != len(corpus):
        raise CorpusError("need exactly one edit string per example")
    _require_targets(corpus)

    recovered = 0
    errors_before = 0
    errors_after = 0
    target_tokens = 0
    edit_tokens = 0
    applied = 0
    discarded = 0
    discards = {reason.value: 0 for reason in DiscardReason}

    for ex, text in zip(corpus, edit_strings):
        x = tokenize(ex.source)
        y = tokenize(ex.target)
        outcome = expand(x, EditString(text, cfg))
        if outcome.output == y:
            recovered += 1
        subs, dels, ins = error_counts(y, x)
        errors_before += subs + dels + ins
        subs, dels, ins = error_counts(y, outcome.output)
        errors_after += subs + dels + ins
        target_tokens += len(y)
        edit_tokens += len(tokenize(text))
        applied += outcome.applied_count
        discarded += outcome.discarded_count
        for _, reason in outcome.discard_reasons:
            discards[reason.value] += 1

    if target_tokens == 0:
        raise CorpusError("corpus has no reference tokens; WER is undefined")
    avg_edit = edit_tokens / len(corpus)
    avg_target = target_tokens / len(corpus)
    return EvalReport(
        scheme=cfg.scheme.value,
        dilation_k=cfg.dilation_k,
        marker=cfg.marker,
        field_sep=cfg.field_sep,
        edit_sep=cfg.edit_sep,
        strict=cfg.strict,
        corpus_size=len(corpus),
        recovery_rate=recovered / len(corpus),
        wer_before=errors_before / target_tokens,
        wer_after=errors_after / target_tokens,
        avg_edit_tokens=avg_edit,
        avg_target_tokens=avg_target,
        reduction_rate=1.0 - avg_edit / avg_target,
        applied_edits=applied,
        discarded_edits=discarded,
        discards=discards,
    )


def run_eval(corpus: list[CorpusExample], cfg: SchemeConfig) -> EvalReport:
    """Evaluate a corpus under cfg.

    Examples carrying a predicted_edit are scored on it; the rest fall
    back to the oracle roundtrip (compress the reference, expand it).
    """
    if not corpus:
        raise CorpusError("cannot evaluate an empty corpus")
    _require_targets(corpus)
    edit_strings = []
    for ex in corpus:
        if ex.predicted_edit is not None:
            edit_strings.append(ex.predicted_edit)
        else:
            x = tokenize(ex.source)
            y = tokenize(ex.target)
            edit_strings.append(compress(x, y, cfg).text)
    return evaluate_strings(corpus, cfg, edit_strings)


def compress_corpus(corpus: list[CorpusExample], cfg: SchemeConfig) -> list[str]:
    """Edit string for each example's (source, target) pair."""
    _require_targets(corpus)
    return [
        compress(tokenize(ex.source), tokenize(ex.target), cfg).text for ex in corpus
    ]


def expand_corpus(
    corpus: list[CorpusExample], cfg: SchemeConfig
) -> list[tuple[CorpusExample, ExpansionOutcome]]:
    """Expand each example's predicted_edit against its source."""
    missing = [ex.id for ex in corpus if ex.predicted_edit is None]
    if missing:
        raise CorpusError(f"examples missing a predicted_edit: {', '.join(missing)}")
    results = []
    for ex in corpus:
        x = tokenize(ex.source)
        outcome = expand(x, EditString(ex.predicted_edit, cfg))
        results.append((ex, outcome))
    return results
