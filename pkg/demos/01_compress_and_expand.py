"""Compress one rewrite three ways, then expand each back.

Run from the repository root:

    PYTHONPATH=src python3 demos/01_compress_and_expand.py
"""

from editpack import Scheme, SchemeConfig, compress, detokenize, expand, tokenize

source = (
    "Since we do not to bring cash to pay for the transportation fee , "
    "enormous time have been saved"
)
target = (
    "Since we do not need to bring cash to pay for the transportation fee , "
    "enormous time has been saved"
)

x = tokenize(source)
y = tokenize(target)
print(f"source ({len(x)} tokens): {source}")
print(f"target ({len(y)} tokens): {target}")
print()

configs = [
    ("span", SchemeConfig(Scheme.SPAN)),
    ("phrase pair, k=1", SchemeConfig(Scheme.PHRASE_PAIR, dilation_k=1)),
    ("target only, k=1", SchemeConfig(Scheme.TARGET_ONLY, dilation_k=1)),
]

for name, cfg in configs:
    edit_string = compress(x, y, cfg)
    n_tokens = len(edit_string.text.split())
    print(f"{name:18s} ({n_tokens:2d} tokens): {edit_string.text}")
    outcome = expand(x, edit_string)
    assert outcome.output == y
    print(f"{'':18s}  expands back: {detokenize(outcome.output) == target}")
    print()

# The span scheme is the shortest but the most brittle: shift one index
# and the substitution lands on the wrong word.
from editpack import EditString

shifted = EditString("4 4 need, 15 16 has", SchemeConfig(Scheme.SPAN))
print("off-by-one span:", shifted.text)
print("expands to:     ", detokenize(expand(x, shifted).output))
