"""Command line interface.

Exit status is 0 on success, 1 on usage errors and 2 on data errors.
"""

from __future__ import annotations

import argparse
import csv
import json
import logging
import sys
from pathlib import Path

from . import __version__
from .classifier import ModelConfig, default_is_least, evaluate_loo, evaluate_split, predict
from .core import CasebaseError, ConfigurationError, FeatureSet
from .io import export_graph, load_casebase

EXIT_USAGE = 1
EXIT_DATA = 2

log = logging.getLogger("saacbr")


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _add_model_args(p, needs_new=True):
    p.add_argument("--casebase", required=True, type=Path, help="CSV or JSON casebase file")
    p.add_argument("--format", choices=["csv", "json"], help="override format detection")
    p.add_argument("--default-outcome", help="default outcome token (CSV default: '-')")
    p.add_argument("--default-features", default=None,
                   help="comma separated characterisation of the default argument (default: empty)")
    p.add_argument("--mode", choices=["aacbr", "saacbr"], default="saacbr")
    p.add_argument("--secondary-attacks", action="store_true",
                   help="also add secondary attacks (saacbr only)")
    if needs_new:
        p.add_argument("--new", required=True, help='features of the new case, e.g. "A,B,C,D"')


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="saacbr", description="Case-based classification by argumentation.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", parser_class=_Parser)
    sub.required = True

    p = sub.add_parser("predict", help="classify a new case")
    _add_model_args(p)
    p.add_argument("--json", action="store_true", help="structured output")

    p = sub.add_parser("spikes", help="list cases with no path to the default")
    _add_model_args(p)
    p.add_argument("--json", action="store_true", help="structured output")

    p = sub.add_parser("evaluate", help="leave-one-out or split evaluation")
    _add_model_args(p, needs_new=False)
    how = p.add_mutually_exclusive_group()
    how.add_argument("--loo", action="store_true", help="leave-one-out (default)")
    how.add_argument("--split", type=float, metavar="R", help="training fraction of a random split")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--report-dir", type=Path,
                   help="write predictions.csv, summary.json and evaluation.png here")
    p.add_argument("--json", action="store_true", help="structured summary on stdout")

    p = sub.add_parser("export", help="write the debate as a DOT graph")
    _add_model_args(p)
    p.add_argument("--stage", choices=["bipolar", "translated"], default="translated")
    p.add_argument("-o", "--output", type=Path, help="DOT file (default: stdout)")
    p.add_argument("--figure", type=Path, help="also render the graph with matplotlib")
    return parser


def _setup(args):
    default_features = None
    if args.default_features is not None:
        default_features = FeatureSet.parse(args.default_features).sorted()
    loaded = load_casebase(args.casebase, args.format, args.default_outcome, default_features)
    if loaded.casebase.duplicates_dropped:
        print(f"note: dropped {loaded.casebase.duplicates_dropped} duplicate case(s)", file=sys.stderr)
    if loaded.casebase.default_duplicates_dropped:
        print(f"note: merged {loaded.casebase.default_duplicates_dropped} case(s) into the default",
              file=sys.stderr)
    d = loaded.default
    config = ModelConfig(args.mode, args.secondary_attacks, d.outcome, d.characterisation,
                         default_id=d.id)
    return loaded, config


def _dump_json(obj) -> None:
    print(json.dumps(obj, indent=2, sort_keys=True, ensure_ascii=False))


def cmd_predict(args) -> int:
    loaded, config = _setup(args)
    p = predict(loaded.casebase, config, FeatureSet.parse(args.new))
    if args.json:
        _dump_json(p.to_dict())
        return 0
    g = p.grounded
    print(f"outcome: {p.outcome}")
    print(f"default {p.framework.default_id}: {g.labelling[p.framework.default_id].value}")
    print("extension: " + ", ".join(sorted(g.extension)))
    print("spikes: " + (", ".join(sorted(p.spikes)) or "none"))
    return 0


def cmd_spikes(args) -> int:
    loaded, config = _setup(args)
    if not default_is_least(loaded.casebase, config):
        print("warning: the default is not the least characterisation; "
              "spike-freeness is not guaranteed", file=sys.stderr)
    p = predict(loaded.casebase, config, FeatureSet.parse(args.new))
    if args.json:
        _dump_json({"mode": config.mode.value, "spikes": sorted(p.spikes)})
    else:
        for s in sorted(p.spikes):
            print(s)
    return 0


def _summary(report, config, protocol) -> dict:
    return {
        "protocol": protocol,
        "mode": config.mode.value,
        "total": report.total,
        "correct": report.correct,
        "accuracy": report.accuracy,
        "confusion": [{"actual": a, "predicted": p, "count": n}
                      for (a, p), n in sorted(report.confusion.items())],
        "folds_with_spikes": sum(1 for n in report.spike_counts if n),
    }


def cmd_evaluate(args) -> int:
    loaded, config = _setup(args)
    if args.split is not None:
        if not 0 < args.split < 1:
            raise UsageError("--split must lie strictly between 0 and 1")
        report = evaluate_split(loaded.casebase, config, args.split, args.seed)
        protocol = f"split:{args.split}:seed={args.seed}"
    else:
        report = evaluate_loo(loaded.casebase, config)
        protocol = "loo"
    summary = _summary(report, config, protocol)

    rows = [("id", "actual", "predicted", "spikes")] + [tuple(map(str, r)) for r in report.rows]
    if args.report_dir:
        args.report_dir.mkdir(parents=True, exist_ok=True)
        with open(args.report_dir / "predictions.csv", "w", newline="", encoding="utf-8") as fh:
            csv.writer(fh, lineterminator="\n").writerows(rows)
        (args.report_dir / "summary.json").write_text(
            json.dumps(summary, indent=2, sort_keys=True) + "\n", encoding="utf-8")
        from .plotting import plot_evaluation
        plot_evaluation(report, args.report_dir / "evaluation.png",
                        title=f"{args.casebase.name} ({config.mode.value}, {protocol})")

    if args.json:
        _dump_json(summary)
    else:
        csv.writer(sys.stdout, lineterminator="\n").writerows(rows)
        print(f"# accuracy {report.accuracy:.4f} ({report.correct}/{report.total})")
    return 0


def cmd_export(args) -> int:
    loaded, config = _setup(args)
    p = predict(loaded.casebase, config, FeatureSet.parse(args.new))
    text = export_graph(p, args.stage)
    if args.output:
        args.output.write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)
    if args.figure:
        from .plotting import plot_framework
        fw = p.bipolar if args.stage == "bipolar" else p.framework
        plot_framework(fw, args.figure, title=f"{config.mode.value}: predicts {p.outcome}")
    return 0


COMMANDS = {
    "predict": cmd_predict,
    "spikes": cmd_spikes,
    "evaluate": cmd_evaluate,
    "export": cmd_export,
}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s: %(message)s")
    try:
        return COMMANDS[args.command](args)
    except UsageError as exc:
        print(f"saacbr: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ConfigurationError as exc:
        print(f"saacbr: configuration error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except CasebaseError as exc:
        print(f"saacbr: data error: {exc}", file=sys.stderr)
        return EXIT_DATA


if __name__ == "__main__":
    sys.exit(main())
