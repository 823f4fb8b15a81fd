"""Compact edit-string schemes: serialization and expansion.

Three schemes serialize an edit script into a short string:

* SPAN: each edit is two source indices plus the replacement phrase,
  e.g. ``4 4 need, 16 17 has``.
* PHRASE_PAIR: each edit is a context-widened source phrase and its
  replacement, e.g. ``rewrite: not to, not need to``.
* TARGET_ONLY: each edit is just the context-widened replacement,
  e.g. ``rewrite: not need to``; the widened context words double as
  anchors that locate the edit in the source at expansion time.

Default-mode grammar (SP is a single space, INT a decimal integer):

    span_string   := edit (edit_sep edit)* | ""      edit  := INT SP INT (SP TOKEN)*
    pp_string     := pedit (edit_sep pedit)* | ""    pedit := marker SP phrase field_sep phrase
    tgt_string    := tedit (edit_sep tedit)* | ""    tedit := marker SP phrase
    phrase        := TOKEN (SP TOKEN)*               (second pp phrase may be empty)

With the default delimiters (field_sep and edit_sep both ", ") a phrase
containing ", " can be split wrongly; strict mode swaps in reserved
separators (tab between fields, U+001E between edits) for such corpora.

Expansion applies edits left to right under a cursor so surviving
source tokens are never reordered. Failures are per-edit discards, not
fatal errors: later edits still get their chance.
"""

from __future__ import annotations

import enum
import re
from dataclasses import dataclass, field

from .alignment import Edit, align, extract_edit_script
from .errors import ConfigError
from .tokens import TokenSeq, detokenize

STRICT_FIELD_SEP = "\t"
STRICT_EDIT_SEP = ""


class Scheme(enum.Enum):
    SPAN = "span"
    PHRASE_PAIR = "phrase_pair"
    TARGET_ONLY = "target_only"


@dataclass(frozen=True)
class SchemeConfig:
    scheme: Scheme
    dilation_k: int = 1
    marker: str = "rewrite:"
    field_sep: str = ", "
    edit_sep: str = ", "
    strict: bool = False

    def __post_init__(self) -> None:
        if self.dilation_k < 0:
            raise ConfigError(f"dilation_k must be >= 0, got {self.dilation_k}")
        if self.scheme is Scheme.TARGET_ONLY and self.dilation_k < 1:
            raise ConfigError("TARGET_ONLY needs dilation_k >= 1: anchors are mandatory")
        if not self.marker or not self.field_sep or not self.edit_sep:
            raise ConfigError("marker, field_sep and edit_sep must be non-empty")
        if self.strict:
            seps = {self.marker, self.field_sep, self.edit_sep}
            if len(seps) != 3:
                raise ConfigError("strict mode requires mutually distinct delimiters")

    @classmethod
    def strict_mode(cls, scheme: Scheme, dilation_k: int = 1, marker: str = "rewrite:") -> "SchemeConfig":
        """Config with reserved delimiters that cannot occur in normal tokens."""
        return cls(
            scheme=scheme,
            dilation_k=dilation_k,
            marker=marker,
            field_sep=STRICT_FIELD_SEP,
            edit_sep=STRICT_EDIT_SEP,
            strict=True,
        )


@dataclass(frozen=True)
class EditString:
    text: str
    config: SchemeConfig


@dataclass(frozen=True)
class DilatedEdit:
    """An edit widened by up to k matched tokens on each side.

    Bounds are the widened (anchor-inclusive) spans; left_anchor and
    right_anchor record how many context tokens were actually available
    before clamping at the sequence boundaries.
    """

    src_lo: int
    src_hi: int
    tgt_lo: int
    tgt_hi: int
    left_anchor: int
    right_anchor: int


def dilate_and_merge(x: TokenSeq, y: TokenSeq, script: list[Edit], k: int) -> list[DilatedEdit]:
    """Widen each edit by up to k matched tokens per side, merging neighbors.

    Consecutive edits whose cores are fewer than 2k matched tokens apart
    are merged first (their widened spans would otherwise overlap), so
    every anchor token of the result is a matched token and consecutive
    dilated edits never claim the same source position.
    """
    cores: list[tuple[int, int, int, int]] = []
    for e in script:
        if cores and e.src_lo - cores[-1][1] < 2 * k:
            slo, _, tlo, _ = cores[-1]
            cores[-1] = (slo, e.src_hi, tlo, e.tgt_hi)
        else:
            cores.append((e.src_lo, e.src_hi, e.tgt_lo, e.tgt_hi))

    dilated = []
    for slo, shi, tlo, thi in cores:
        a = min(k, slo)
        b = min(k, len(x) - shi)
        dilated.append(DilatedEdit(slo - a, shi + b, tlo - a, thi + b, a, b))
    return dilated


def _render_span(lo: int, hi: int, phrase: TokenSeq) -> str:
    return " ".join([str(lo), str(hi), *phrase])


def _render_phrase_pair(cfg: SchemeConfig, src: TokenSeq, tgt: TokenSeq) -> str:
    return f"{cfg.marker} {detokenize(src)}{cfg.field_sep}{detokenize(tgt)}"


def _render_target_only(cfg: SchemeConfig, tgt: TokenSeq) -> str:
    return f"{cfg.marker} {detokenize(tgt)}"


def compress(x: TokenSeq, y: TokenSeq, cfg: SchemeConfig) -> EditString:
    """Serialize the differences between x and y under cfg's scheme."""
    script = extract_edit_script(x, y, align(x, y))
    if cfg.scheme is Scheme.SPAN:
        parts = [_render_span(e.src_lo, e.src_hi, e.tgt_phrase) for e in script]
    else:
        dilated = dilate_and_merge(x, y, script, cfg.dilation_k)
        if cfg.scheme is Scheme.PHRASE_PAIR:
            parts = [
                _render_phrase_pair(cfg, x[d.src_lo:d.src_hi], y[d.tgt_lo:d.tgt_hi])
                for d in dilated
            ]
        else:
            parts = [_render_target_only(cfg, y[d.tgt_lo:d.tgt_hi]) for d in dilated]
    return EditString(cfg.edit_sep.join(parts), cfg)


@dataclass(frozen=True)
class SpanEdit:
    src_lo: int
    src_hi: int
    phrase: tuple[str, ...]


@dataclass(frozen=True)
class PhrasePairEdit:
    source: tuple[str, ...]
    target: tuple[str, ...]


@dataclass(frozen=True)
class TargetEdit:
    phrase: tuple[str, ...]


@dataclass(frozen=True)
class ParseFailure:
    raw: str
    reason: str


ParsedEdit = SpanEdit | PhrasePairEdit | TargetEdit | ParseFailure


def _strip_seps(segment: str, cfg: SchemeConfig) -> str:
    segment = segment.removesuffix(cfg.edit_sep)
    while True:
        stripped = segment.lstrip()
        if stripped.startswith(cfg.edit_sep):
            segment = stripped[len(cfg.edit_sep):]
        else:
            return stripped


def _split_span_edits(s: str, cfg: SchemeConfig) -> list[str]:
    if cfg.strict:
        return s.split(cfg.edit_sep)
    # A separator only ends an edit when what follows looks like the
    # start of one: two integers followed by a phrase, the end of the
    # string, or another separator (a pure deletion). Phrases may
    # legitimately contain the separator characters.
    sep = re.escape(cfg.edit_sep)
    boundary = re.compile(f"{sep}(?=-?\\d+ -?\\d+(?: |$|{sep}))")
    return boundary.split(s)


def parse_edit_string(s: EditString) -> list[ParsedEdit]:
    """Parse s into scheme-specific edits, keeping failures in place.

    Unparseable edits become ParseFailure entries rather than aborting,
    so expansion can discard exactly the broken ones.
    """
    cfg = s.config
    if not s.text.strip():
        return []
    if cfg.scheme is Scheme.SPAN:
        return _parse_span(s.text, cfg)
    return _parse_marker_edits(s.text, cfg)


def _parse_span(text: str, cfg: SchemeConfig) -> list[ParsedEdit]:
    edits: list[ParsedEdit] = []
    for segment in _split_span_edits(text, cfg):
        segment = _strip_seps(segment, cfg)
        if not segment:
            continue
        parts = segment.split()
        if len(parts) < 2:
            edits.append(ParseFailure(segment, "expected two span indices"))
            continue
        try:
            lo, hi = int(parts[0]), int(parts[1])
        except ValueError:
            edits.append(ParseFailure(segment, "span indices are not integers"))
            continue
        edits.append(SpanEdit(lo, hi, tuple(parts[2:])))
    return edits


def _parse_marker_edits(text: str, cfg: SchemeConfig) -> list[ParsedEdit]:
    starts = [m.start() for m in re.finditer(re.escape(cfg.marker), text)]
    edits: list[ParsedEdit] = []
    head = text[: starts[0]] if starts else text
    if _strip_seps(head, cfg):
        edits.append(ParseFailure(head.strip(), "text before first marker"))
    for idx, start in enumerate(starts):
        seg_start = start + len(cfg.marker)
        seg_end = starts[idx + 1] if idx + 1 < len(starts) else len(text)
        segment = text[seg_start:seg_end]
        if cfg.scheme is Scheme.PHRASE_PAIR:
            sep_at = segment.find(cfg.field_sep)
            if sep_at < 0:
                edits.append(ParseFailure(segment.strip(), "missing field separator"))
                continue
            src_text = segment[:sep_at]
            tgt_text = segment[sep_at + len(cfg.field_sep):].removesuffix(cfg.edit_sep)
            edits.append(PhrasePairEdit(tuple(src_text.split()), tuple(tgt_text.split())))
        else:
            segment = segment.removesuffix(cfg.edit_sep)
            edits.append(TargetEdit(tuple(segment.split())))
    return edits


class DiscardReason(enum.Enum):
    ANCHOR_NOT_FOUND = "anchor_not_found"
    PARSE_ERROR = "parse_error"
    SPAN_OUT_OF_BOUNDS = "span_out_of_bounds"
    OVERLAP = "overlap"


@dataclass
class ExpansionOutcome:
    output: TokenSeq
    applied_count: int = 0
    discarded_count: int = 0
    discard_reasons: list[tuple[int, DiscardReason]] = field(default_factory=list)


def _find_subseq(haystack: TokenSeq, needle: tuple[str, ...], start: int) -> int | None:
    """Leftmost occurrence of needle in haystack at or after start."""
    n = len(needle)
    if n == 0:
        return start if start <= len(haystack) else None
    last = len(haystack) - n
    first = needle[0]
    for i in range(start, last + 1):
        if haystack[i] == first and tuple(haystack[i:i + n]) == needle:
            return i
    return None


class _Splicer:
    """Accumulates replacements over original-x coordinates, left to right."""

    def __init__(self, x: TokenSeq) -> None:
        self.x = x
        self.out: TokenSeq = []
        self.consumed = 0

    def replace(self, lo: int, hi: int, replacement: tuple[str, ...] | TokenSeq) -> None:
        self.out.extend(self.x[self.consumed:lo])
        self.out.extend(replacement)
        self.consumed = hi

    def finish(self) -> TokenSeq:
        self.out.extend(self.x[self.consumed:])
        return self.out


def expand(x: TokenSeq, s: EditString) -> ExpansionOutcome:
    """Apply the edits encoded in s to x, discarding edits that fail."""
    cfg = s.config
    edits = parse_edit_string(s)
    outcome = ExpansionOutcome(output=[])
    splicer = _Splicer(x)
    if cfg.scheme is Scheme.SPAN:
        _expand_span(x, edits, splicer, outcome)
    elif cfg.scheme is Scheme.PHRASE_PAIR:
        _expand_phrase_pair(x, edits, splicer, outcome)
    else:
        _expand_target_only(x, edits, cfg.dilation_k, splicer, outcome)
    outcome.output = splicer.finish()
    return outcome


def _discard(outcome: ExpansionOutcome, index: int, reason: DiscardReason) -> None:
    outcome.discarded_count += 1
    outcome.discard_reasons.append((index, reason))


def _expand_span(
    x: TokenSeq, edits: list[ParsedEdit], splicer: _Splicer, outcome: ExpansionOutcome
) -> None:
    cursor = 0
    for index, edit in enumerate(edits):
        if isinstance(edit, ParseFailure):
            _discard(outcome, index, DiscardReason.PARSE_ERROR)
            continue
        assert isinstance(edit, SpanEdit)
        if not 0 <= edit.src_lo <= edit.src_hi <= len(x):
            _discard(outcome, index, DiscardReason.SPAN_OUT_OF_BOUNDS)
            continue
        if edit.src_lo < cursor:
            _discard(outcome, index, DiscardReason.OVERLAP)
            continue
        splicer.replace(edit.src_lo, edit.src_hi, edit.phrase)
        cursor = edit.src_hi
        outcome.applied_count += 1


def _expand_phrase_pair(
    x: TokenSeq, edits: list[ParsedEdit], splicer: _Splicer, outcome: ExpansionOutcome
) -> None:
    cursor = 0
    for index, edit in enumerate(edits):
        if isinstance(edit, ParseFailure):
            _discard(outcome, index, DiscardReason.PARSE_ERROR)
            continue
        assert isinstance(edit, PhrasePairEdit)
        at = _find_subseq(x, edit.source, cursor)
        if at is None:
            _discard(outcome, index, DiscardReason.ANCHOR_NOT_FOUND)
            continue
        end = at + len(edit.source)
        splicer.replace(at, end, edit.target)
        cursor = end
        outcome.applied_count += 1


def _match_target_edit(
    x: TokenSeq, phrase: tuple[str, ...], k: int, cursor: int
) -> tuple[int, int, int, int] | None:
    """Locate phrase's anchors in x; returns (p, a, q, b) or None.

    Tries anchor lengths (a, b) from (k, k) downward, a-major. Both
    anchors must be non-empty. A shorter-than-k anchor is accepted only
    where the serializer could have clamped it: a left anchor shorter
    than k must sit at the very start of x (and only before any edit has
    consumed input), a right anchor shorter than k must end at the very
    end of x. The first combination that matches wins.
    """
    m = len(phrase)
    for a in range(k, 0, -1):
        for b in range(k, 0, -1):
            if a + b > m:
                continue
            if a == k:
                p = _find_subseq(x, phrase[:a], cursor)
                if p is None:
                    continue
            else:
                if cursor != 0 or tuple(x[:a]) != phrase[:a]:
                    continue
                p = 0
            if b == k:
                q = _find_subseq(x, phrase[m - b:], p + a)
                if q is None:
                    continue
            else:
                q = len(x) - b
                if q < p + a or tuple(x[q:]) != phrase[m - b:]:
                    continue
            return p, a, q, b
    return None


def _expand_target_only(
    x: TokenSeq,
    edits: list[ParsedEdit],
    k: int,
    splicer: _Splicer,
    outcome: ExpansionOutcome,
) -> None:
    cursor = 0
    for index, edit in enumerate(edits):
        if isinstance(edit, ParseFailure):
            _discard(outcome, index, DiscardReason.PARSE_ERROR)
            continue
        assert isinstance(edit, TargetEdit)
        found = _match_target_edit(x, edit.phrase, k, cursor)
        if found is None:
            _discard(outcome, index, DiscardReason.ANCHOR_NOT_FOUND)
            continue
        p, a, q, b = found
        m = len(edit.phrase)
        splicer.replace(p + a, q, edit.phrase[a:m - b])
        cursor = q + b
        outcome.applied_count += 1
