"""How decoding errors propagate through each representation.

Corrupts oracle edit strings at increasing rates and reports the word
error rate of the expanded output. Span indices fail silently (the
wrong words get replaced); phrase anchors fail loudly (the edit is
discarded and the source passes through unchanged).

Run from the repository root:

    PYTHONPATH=src python3 demos/04_error_propagation.py
"""

import random

from editpack import (
    CorpusExample,
    PerturbationKind,
    PerturbationSpec,
    Scheme,
    SchemeConfig,
    detokenize,
    perturb_and_measure,
    run_eval,
)

rng = random.Random(7)
filler = [f"tok{i}" for i in range(2000)]
corpus = []
for i in range(400):
    words = [filler[rng.randrange(len(filler))] for _ in range(16)]
    target = words.copy()
    at = rng.randrange(5, 10)
    target[at] = f"fix{i}"
    corpus.append(CorpusExample(str(i), detokenize(words), detokenize(target)))

span = SchemeConfig(Scheme.SPAN)
target_only = SchemeConfig(Scheme.TARGET_ONLY, dilation_k=2)

print(f"{'rate':>5s} {'span wer (offset)':>18s} {'target-only wer (corrupt)':>26s}")
baseline = run_eval(corpus, span)
print(f"{'0.00':>5s} {baseline.wer_after:18.4f} {run_eval(corpus, target_only).wer_after:26.4f}")

for rate in (0.25, 0.5, 1.0):
    span_report = perturb_and_measure(
        corpus, span, PerturbationSpec(PerturbationKind.INDEX_OFFSET, rate, seed=1)
    )
    anchor_report = perturb_and_measure(
        corpus, target_only, PerturbationSpec(PerturbationKind.ANCHOR_CORRUPT, rate, seed=1)
    )
    print(f"{rate:5.2f} {span_report.wer_after:18.4f} {anchor_report.wer_after:26.4f}")

full = perturb_and_measure(
    corpus, target_only, PerturbationSpec(PerturbationKind.ANCHOR_CORRUPT, 1.0, seed=1)
)
print(
    f"\nwith every anchor corrupted, all edits are discarded "
    f"({full.discards['anchor_not_found']} discards) and the output is the "
    f"unedited source: wer_after == wer_before is {full.wer_after == full.wer_before}."
)
