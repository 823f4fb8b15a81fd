"""Exception types shared across the package."""


class EditPackError(Exception):
    """Base class for all editpack errors."""


class ConfigError(EditPackError):
    """Invalid scheme or perturbation configuration."""


class InvalidAlignmentError(EditPackError):
    """Alignment violates its index or coverage invariants."""


class InvalidScriptError(EditPackError):
    """Edit script spans are unsorted, overlapping, or out of bounds."""


class EmptyReferenceError(EditPackError):
    """WER requested against an empty reference."""


class CorpusError(EditPackError):
    """Corpus-level data problem: malformed line, empty corpus, missing field."""
