"""Seeded error-propagation study: corrupt edit strings, measure damage.

Each perturbation kind models one decoder failure mode:

* INDEX_OFFSET: a span integer drifts by one (SPAN scheme only).
* TOKEN_DROP: one content token of an edit goes missing.
* TOKEN_SWAP: two adjacent content tokens trade places.
* ANCHOR_CORRUPT: one anchor-context token is replaced with a token
  that cannot occur in the input (phrase schemes only).

Perturbation is applied per edit with the configured probability, then
the corrupted strings are expanded and scored with the same evaluation
core as run_eval, so a rate of 0 reproduces the oracle report exactly.
"""

from __future__ import annotations

import enum
import random
from dataclasses import dataclass

from .corpus import CorpusExample, EvalReport, evaluate_strings
from .errors import ConfigError
from .schemes import (
    ParseFailure,
    PhrasePairEdit,
    Scheme,
    SchemeConfig,
    SpanEdit,
    TargetEdit,
    compress,
    dilate_and_merge,
    parse_edit_string,
    _render_phrase_pair,
    _render_span,
    _render_target_only,
)
from .alignment import align, extract_edit_script
from .tokens import tokenize

CORRUPT_TOKEN = "␀corrupt␀"


class PerturbationKind(enum.Enum):
    INDEX_OFFSET = "index_offset"
    TOKEN_DROP = "token_drop"
    TOKEN_SWAP = "token_swap"
    ANCHOR_CORRUPT = "anchor_corrupt"


@dataclass(frozen=True)
class PerturbationSpec:
    kind: PerturbationKind
    rate: float
    seed: int = 0

    def __post_init__(self) -> None:
        if not 0.0 <= self.rate <= 1.0:
            raise ConfigError(f"perturbation rate must be in [0, 1], got {self.rate}")


def _check_kind(kind: PerturbationKind, scheme: Scheme) -> None:
    if kind is PerturbationKind.INDEX_OFFSET and scheme is not Scheme.SPAN:
        raise ConfigError("INDEX_OFFSET only applies to the SPAN scheme")
    if kind is PerturbationKind.ANCHOR_CORRUPT and scheme is Scheme.SPAN:
        raise ConfigError("ANCHOR_CORRUPT needs a phrase scheme with anchors")


def _drop_token(tokens: list[str], rng: random.Random) -> list[str]:
    if not tokens:
        return tokens
    at = rng.randrange(len(tokens))
    return tokens[:at] + tokens[at + 1:]


def _swap_tokens(tokens: list[str], rng: random.Random) -> list[str]:
    if len(tokens) < 2:
        return tokens
    at = rng.randrange(len(tokens) - 1)
    swapped = list(tokens)
    swapped[at], swapped[at + 1] = swapped[at + 1], swapped[at]
    return swapped


def _perturb_span_edit(edit: SpanEdit, kind: PerturbationKind, rng: random.Random) -> str:
    lo, hi, phrase = edit.src_lo, edit.src_hi, list(edit.phrase)
    if kind is PerturbationKind.INDEX_OFFSET:
        delta = rng.choice([-1, 1])
        if rng.random() < 0.5:
            lo += delta
        else:
            hi += delta
    elif kind is PerturbationKind.TOKEN_DROP:
        tokens = _drop_token([str(lo), str(hi), *phrase], rng)
        return " ".join(tokens)
    elif kind is PerturbationKind.TOKEN_SWAP:
        tokens = _swap_tokens([str(lo), str(hi), *phrase], rng)
        return " ".join(tokens)
    return _render_span(lo, hi, phrase)


def _corrupt_anchor(
    tokens: list[str], left: int, right: int, rng: random.Random
) -> list[str]:
    positions = list(range(left)) + list(range(len(tokens) - right, len(tokens)))
    if not positions:
        return tokens
    at = rng.choice(positions)
    corrupted = list(tokens)
    corrupted[at] = CORRUPT_TOKEN
    return corrupted


def perturb_edit_string(
    x: list[str],
    y: list[str],
    cfg: SchemeConfig,
    spec: PerturbationSpec,
    rng: random.Random,
) -> str:
    """Compress (x, y) and corrupt each edit with probability spec.rate."""
    compressed = compress(x, y, cfg)
    edits = parse_edit_string(compressed)
    if not edits:
        return compressed.text
    if spec.kind is PerturbationKind.ANCHOR_CORRUPT:
        script = extract_edit_script(x, y, align(x, y))
        dilated = dilate_and_merge(x, y, script, cfg.dilation_k)
    else:
        dilated = None

    parts: list[str] = []
    for index, edit in enumerate(edits):
        hit = rng.random() < spec.rate
        if isinstance(edit, ParseFailure) or not hit:
            parts.append(_render_parsed(cfg, edit))
            continue
        if isinstance(edit, SpanEdit):
            parts.append(_perturb_span_edit(edit, spec.kind, rng))
        elif isinstance(edit, PhrasePairEdit):
            parts.append(_perturb_phrase_pair(cfg, edit, dilated, index, spec.kind, rng))
        else:
            parts.append(_perturb_target_only(cfg, edit, dilated, index, spec.kind, rng))
    return cfg.edit_sep.join(parts)


def _render_parsed(cfg: SchemeConfig, edit) -> str:
    if isinstance(edit, SpanEdit):
        return _render_span(edit.src_lo, edit.src_hi, list(edit.phrase))
    if isinstance(edit, PhrasePairEdit):
        return _render_phrase_pair(cfg, list(edit.source), list(edit.target))
    if isinstance(edit, TargetEdit):
        return _render_target_only(cfg, list(edit.phrase))
    return edit.raw


def _perturb_phrase_pair(
    cfg: SchemeConfig,
    edit: PhrasePairEdit,
    dilated,
    index: int,
    kind: PerturbationKind,
    rng: random.Random,
) -> str:
    source = list(edit.source)
    target = list(edit.target)
    if kind is PerturbationKind.ANCHOR_CORRUPT:
        d = dilated[index] if dilated and index < len(dilated) else None
        if d is not None:
            source = _corrupt_anchor(source, d.left_anchor, d.right_anchor, rng)
    elif kind is PerturbationKind.TOKEN_DROP:
        target = _drop_token(target, rng)
    elif kind is PerturbationKind.TOKEN_SWAP:
        target = _swap_tokens(target, rng)
    return _render_phrase_pair(cfg, source, target)


def _perturb_target_only(
    cfg: SchemeConfig,
    edit: TargetEdit,
    dilated,
    index: int,
    kind: PerturbationKind,
    rng: random.Random,
) -> str:
    phrase = list(edit.phrase)
    if kind is PerturbationKind.ANCHOR_CORRUPT:
        d = dilated[index] if dilated and index < len(dilated) else None
        if d is not None:
            phrase = _corrupt_anchor(phrase, d.left_anchor, d.right_anchor, rng)
    elif kind is PerturbationKind.TOKEN_DROP:
        phrase = _drop_token(phrase, rng)
    elif kind is PerturbationKind.TOKEN_SWAP:
        phrase = _swap_tokens(phrase, rng)
    return _render_target_only(cfg, phrase)


def perturb_and_measure(
    corpus: list[CorpusExample], cfg: SchemeConfig, spec: PerturbationSpec
) -> EvalReport:
    """Oracle-compress the corpus, corrupt it per spec, and evaluate."""
    _check_kind(spec.kind, cfg.scheme)
    rng = random.Random(spec.seed)
    edit_strings = []
    for ex in corpus:
        if ex.target is None:
            edit_strings.append("")
            continue
        x = tokenize(ex.source)
        y = tokenize(ex.target)
        edit_strings.append(perturb_edit_string(x, y, cfg, spec, rng))
    return evaluate_strings(corpus, cfg, edit_strings)
