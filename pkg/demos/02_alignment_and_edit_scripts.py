"""Look inside the pipeline: alignment ops, edit scripts, dilation.

Run from the repository root:

    PYTHONPATH=src python3 demos/02_alignment_and_edit_scripts.py
"""

from editpack import (
    OpKind,
    align,
    apply_edit_script,
    detokenize,
    dilate_and_merge,
    extract_edit_script,
    tokenize,
)

x = tokenize("the cat sat on the mat today")
y = tokenize("a cat sat on the big mat")

alignment = align(x, y)
print(f"alignment cost (edit distance): {alignment.cost}")
for op in alignment.ops:
    src = x[op.src] if op.src is not None else "-"
    tgt = y[op.tgt] if op.tgt is not None else "-"
    print(f"  {op.kind.value:5s} {src:8s} {tgt}")

script = extract_edit_script(x, y, alignment)
print("\nedit script (maximal runs between matches):")
for edit in script:
    print(f"  x[{edit.src_lo}:{edit.src_hi}] -> {edit.tgt_phrase!r}")

assert apply_edit_script(x, script) == y
print("\napplying the script reproduces the target:", detokenize(apply_edit_script(x, script)))

print("\ndilation widens each edit with matched context, merging neighbors:")
for k in (0, 1, 2):
    dilated = dilate_and_merge(x, y, script, k)
    spans = [
        f"{detokenize(x[d.src_lo:d.src_hi])!r} -> {detokenize(y[d.tgt_lo:d.tgt_hi])!r}"
        for d in dilated
    ]
    print(f"  k={k}: {len(dilated)} edit(s): " + "; ".join(spans))

matches = sum(1 for op in alignment.ops if op.kind is OpKind.MATCH)
print(f"\n{matches} of {len(x)} source tokens survive unchanged.")
