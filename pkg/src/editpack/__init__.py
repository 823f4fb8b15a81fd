"""Compact edit-string representations for text rewriting.

Compress a (source, target) sentence pair into a short edit string
under one of three schemes, expand edit strings back into full
rewrites, and evaluate recovery rate, WER and output-length reduction
over corpora.
"""

from .alignment import (
    AlignOp,
    Alignment,
    Edit,
    OpKind,
    align,
    apply_edit_script,
    extract_edit_script,
)
from .corpus import (
    CorpusExample,
    EvalReport,
    emit_training,
    evaluate_strings,
    ingest,
    run_eval,
)
from .errors import (
    ConfigError,
    CorpusError,
    EditPackError,
    EmptyReferenceError,
    InvalidAlignmentError,
    InvalidScriptError,
)
from .metrics import LengthStats, WerBreakdown, length_stats, recovery_rate, wer
from .perturb import PerturbationKind, PerturbationSpec, perturb_and_measure
from .schemes import (
    DilatedEdit,
    DiscardReason,
    EditString,
    ExpansionOutcome,
    ParseFailure,
    PhrasePairEdit,
    Scheme,
    SchemeConfig,
    SpanEdit,
    TargetEdit,
    compress,
    dilate_and_merge,
    expand,
    parse_edit_string,
)
from .tokens import TokenSeq, detokenize, tokenize

__version__ = "0.1.0"

__all__ = [
    "AlignOp",
    "Alignment",
    "ConfigError",
    "CorpusError",
    "CorpusExample",
    "DilatedEdit",
    "DiscardReason",
    "Edit",
    "EditPackError",
    "EditString",
    "EmptyReferenceError",
    "EvalReport",
    "ExpansionOutcome",
    "InvalidAlignmentError",
    "InvalidScriptError",
    "LengthStats",
    "OpKind",
    "ParseFailure",
    "PerturbationKind",
    "PerturbationSpec",
    "PhrasePairEdit",
    "Scheme",
    "SchemeConfig",
    "SpanEdit",
    "TargetEdit",
    "TokenSeq",
    "WerBreakdown",
    "align",
    "apply_edit_script",
    "compress",
    "detokenize",
    "dilate_and_merge",
    "emit_training",
    "evaluate_strings",
    "expand",
    "extract_edit_script",
    "ingest",
    "length_stats",
    "parse_edit_string",
    "perturb_and_measure",
    "recovery_rate",
    "run_eval",
    "tokenize",
    "wer",
]
