"""Whitespace tokenization shared by every other module.

Words (plus any punctuation already separated by spaces) are the edit
unit everywhere in this package. There is no case folding and no
punctuation splitting, so token identity is exact string identity.
"""

from __future__ import annotations

TokenSeq = list[str]


def tokenize(text: str) -> TokenSeq:
    """Split on runs of Unicode whitespace. Empty input gives []."""
    return text.split()


def detokenize(tokens: TokenSeq) -> str:
    """Join tokens with single spaces. Inverse of tokenize up to whitespace."""
    return " ".join(tokens)
