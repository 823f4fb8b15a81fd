"""Command-line interface.

Subcommands: compress, expand, eval, emit-training, perturb. Exit codes:
0 on success, 1 for I/O or data-format problems, 2 for invalid
configuration (argparse usage errors also exit 2).
"""

from __future__ import annotations

import argparse
import json
import sys

from .corpus import compress_corpus, emit_training, expand_corpus, ingest, run_eval
from .errors import ConfigError, EditPackError
from .perturb import PerturbationKind, PerturbationSpec, perturb_and_measure
from .schemes import Scheme, SchemeConfig
from .tokens import detokenize


def _add_common(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--scheme", required=True, choices=[s.value for s in Scheme])
    parser.add_argument("--k", type=int, default=1, help="dilation span size")
    parser.add_argument("--in", dest="in_path", required=True, metavar="FILE")
    parser.add_argument("--format", choices=["jsonl", "tsv"], default="jsonl")
    parser.add_argument("--strict-delims", action="store_true",
                        help="use reserved field/edit separators")


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="editpack",
        description="Compress rewrites into compact edit strings and expand them back.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("compress", help="write edit strings for (source, target) pairs")
    _add_common(p)
    p.add_argument("--out", required=True, metavar="FILE")

    p = sub.add_parser("expand", help="apply predicted edit strings to sources")
    _add_common(p)
    p.add_argument("--out", required=True, metavar="FILE")

    p = sub.add_parser("eval", help="evaluate recovery, WER and length statistics")
    _add_common(p)
    p.add_argument("--report", required=True, metavar="FILE")

    p = sub.add_parser("emit-training", help="write {input, target} fine-tuning records")
    _add_common(p)
    p.add_argument("--out", required=True, metavar="FILE")

    p = sub.add_parser("perturb", help="corrupt edit strings and measure the damage")
    _add_common(p)
    p.add_argument("--kind", required=True, choices=[k.value for k in PerturbationKind])
    p.add_argument("--rate", type=float, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--report", required=True, metavar="FILE")

    return parser


def _make_config(args: argparse.Namespace) -> SchemeConfig:
    scheme = Scheme(args.scheme)
    if args.strict_delims:
        return SchemeConfig.strict_mode(scheme, dilation_k=args.k)
    return SchemeConfig(scheme, dilation_k=args.k)


def _write_jsonl(path: str, records: list[dict]) -> None:
    with open(path, "w", encoding="utf-8") as handle:
        for record in records:
            handle.write(json.dumps(record, ensure_ascii=False) + "\n")


def _write_json(path: str, payload: dict) -> None:
    with open(path, "w", encoding="utf-8") as handle:
        json.dump(payload, handle, ensure_ascii=False, indent=2)
        handle.write("\n")


def _run(args: argparse.Namespace) -> int:
    cfg = _make_config(args)
    corpus = ingest(args.in_path, args.format)

    if args.command == "compress":
        strings = compress_corpus(corpus, cfg)
        records = [
            {"id": ex.id, "source": ex.source, "target": ex.target, "edit_string": text}
            for ex, text in zip(corpus, strings)
        ]
        _write_jsonl(args.out, records)
    elif args.command == "expand":
        records = []
        for ex, outcome in expand_corpus(corpus, cfg):
            records.append(
                {
                    "id": ex.id,
                    "source": ex.source,
                    "output": detokenize(outcome.output),
                    "applied": outcome.applied_count,
                    "discarded": outcome.discarded_count,
                    "discard_reasons": [
                        {"edit": index, "reason": reason.value}
                        for index, reason in outcome.discard_reasons
                    ],
                }
            )
        _write_jsonl(args.out, records)
    elif args.command == "eval":
        report = run_eval(corpus, cfg)
        _write_json(args.report, report.to_dict())
    elif args.command == "emit-training":
        count = emit_training(corpus, cfg, args.out)
        print(f"wrote {count} training records to {args.out}", file=sys.stderr)
    else:
        spec = PerturbationSpec(PerturbationKind(args.kind), args.rate, args.seed)
        baseline = run_eval(corpus, cfg)
        perturbed = perturb_and_measure(corpus, cfg, spec)
        _write_json(
            args.report,
            {
                "perturbation": {
                    "kind": spec.kind.value,
                    "rate": spec.rate,
                    "seed": spec.seed,
                },
                "baseline": baseline.to_dict(),
                "perturbed": perturbed.to_dict(),
            },
        )
    return 0


def main(argv: list[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return _run(args)
    except ConfigError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (EditPackError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
