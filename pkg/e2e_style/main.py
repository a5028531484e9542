"""
Command-line entry point: python -m e2e_style.main <subcommand> [options]
"""
import argparse
import json
import logging
import sys
from typing import Any, Callable, Dict, List, Optional, Sequence

from dotenv import load_dotenv
from pydantic import BaseModel

from . import __version__
from .config import WeightingSchema, ToolkitConfig, default_jobs, load_config, load_schema
from .core.errors import CorpusIOError, ToolkitError
from .core.parallel import configure_progress
from .core.text import TextAnalyzer
from .schemas.corpus import Split, pairs_from_corpus
from .schemas.style import MarkerSubset, StyleCategory
from .services import annotation, corpus as corpus_io, evaluation, selection
from .services.detector import category_proportions, subset_proportions
from .services.pipeline import align_corpus, profile_corpus

logger = logging.getLogger("e2e_style")

EXIT_OK = 0
EXIT_INVALID = 1
EXIT_IO = 2


class ArgumentParser(argparse.ArgumentParser):
    """Usage errors exit with status 1"""

    def error(self, message: str) -> None:
        self.print_usage(sys.stderr)
        self.exit(EXIT_INVALID, f"{self.prog}: error: {message}\n")


def _non_negative(raw: str) -> int:
    try:
        value = int(raw)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {raw!r}") from None
    if value < 0:
        raise argparse.ArgumentTypeError("must be >= 0")
    return value


def _positive(raw: str) -> int:
    value = _non_negative(raw)
    if value == 0:
        raise argparse.ArgumentTypeError("must be >= 1")
    return value


def _choices(allowed: Sequence[str]) -> Callable[[str], List[str]]:
    def parse(raw: str) -> List[str]:
        values = [v.strip() for v in raw.split(",") if v.strip()]
        unknown = [v for v in values if v not in allowed]
        if unknown or not values:
            raise argparse.ArgumentTypeError(f"choose from {', '.join(allowed)}")
        return values
    return parse


def _write_json(path: str, payload: Any) -> None:
    if isinstance(payload, BaseModel):
        payload = payload.model_dump(mode="json")
    try:
        with open(path, "w", encoding="utf-8") as f:
            json.dump(payload, f, indent=2, ensure_ascii=False)
            f.write("\n")
    except OSError as e:
        raise CorpusIOError(f"Cannot write {path}: {e}") from e
    logger.info("Report written to %s", path)


def _config(args: argparse.Namespace) -> ToolkitConfig:
    config = load_config(args.config)
    threshold = getattr(args, "threshold", None)
    if getattr(args, "schema", None):
        config = config.model_copy(update={"weighting": load_schema(args.schema, threshold)})
    elif threshold is not None:
        config = config.model_copy(update={"weighting": config.weighting.model_copy(update={"threshold": threshold})})
    return config


def _load(args: argparse.Namespace):
    return corpus_io.load_corpus(args.input, split=Split(args.split), permissive=args.permissive)


# Subcommands

def cmd_stats(args: argparse.Namespace) -> None:
    corpus = _load(args)
    _write_json(args.output, corpus_io.corpus_stats(corpus, TextAnalyzer(_config(args).text)))


def cmd_analyze(args: argparse.Namespace) -> None:
    corpus = _load(args)
    profiles = profile_corpus(corpus, _config(args), args.jobs)
    report: Dict[str, Any] = {
        "samples": len(profiles),
        "subset_proportions": subset_proportions(profiles),
        "category_proportions": category_proportions(profiles),
    }
    if args.per_sample:
        report["per_sample"] = [
            {subset.value: profile.surfaces(subset) for subset in profile.subsets_hit()}
            for profile in profiles
        ]
    _write_json(args.output, report)


def cmd_select(args: argparse.Namespace) -> None:
    corpus = _load(args)
    selected, report = selection.run_selection(corpus, _config(args), args.jobs)
    corpus_io.write_corpus(selected, args.output)
    if args.report:
        _write_json(args.report, report)


def cmd_subset(args: argparse.Namespace) -> None:
    corpus = _load(args)
    config = _config(args)
    if args.category:
        subset = selection.extract_category_subset(corpus, StyleCategory(args.category), config, args.jobs)
    else:
        subset = selection.extract_marker_subset(corpus, MarkerSubset(args.marker), config, args.jobs)
    corpus_io.write_corpus(subset, args.output)


def cmd_annotate(args: argparse.Namespace) -> None:
    corpus = _load(args)
    config = _config(args)
    if args.contrast:
        decisions = annotation.contrast_decisions(corpus, config, args.jobs)
        annotated, counts = annotation.apply_contrast(corpus, decisions)
        logger.info("Contrast annotation: %d labeled, %d discarded, %d passed",
                    counts.labeled, counts.discarded, counts.passed)
        report = annotation.contrast_report(corpus, decisions, counts)
    else:
        detections = annotation.emphasis_detections(corpus, config, args.jobs)
        annotated = annotation.apply_emphasis(corpus, detections)
        report = annotation.emphasis_report(corpus, detections)
    corpus_io.write_corpus(annotated, args.output)
    if args.report:
        _write_json(args.report, report)


def cmd_align(args: argparse.Namespace) -> None:
    corpus = _load(args)
    _write_json(args.output, align_corpus(corpus, _config(args), args.jobs))


def cmd_evaluate(args: argparse.Namespace) -> None:
    pairs = corpus_io.load_outputs(args.outputs)
    references = pairs_from_corpus(corpus_io.load_corpus(args.refs, split=Split.TEST)) if args.refs else None
    categories = [StyleCategory(c) for c in args.categories] if args.categories else None
    report = evaluation.evaluate(
        pairs,
        metrics=args.metrics,
        categories=categories,
        references=references,
        strict=args.strict,
        config=_config(args),
        jobs=args.jobs,
    )
    _write_json(args.report, report)


def cmd_aggregation_report(args: argparse.Namespace) -> None:
    _write_json(args.output, evaluation.aggregation_potential(_load(args)))


def build_parser() -> ArgumentParser:
    fingerprint = WeightingSchema().fingerprint()
    parser = ArgumentParser(prog="e2e-style", description="Stylistic analysis toolkit for the E2E restaurant corpus")
    parser.add_argument("--version", action="version",
                        version=f"%(prog)s {__version__} (default schema {fingerprint})")
    parser.add_argument("--config", help="JSON config file (default: $E2E_STYLE_CONFIG)")
    parser.add_argument("--jobs", type=_positive, default=None, help="worker processes (default: $E2E_STYLE_JOBS or 1)")
    verbosity = parser.add_mutually_exclusive_group()
    verbosity.add_argument("--verbose", "-v", action="store_true", help="log per-sample diagnostics")
    verbosity.add_argument("--quiet", "-q", action="store_true", help="warnings only, no progress bars")

    commands = parser.add_subparsers(dest="command", required=True, metavar="command")

    def corpus_command(name: str, handler: Callable, help_text: str, output_help: str) -> ArgumentParser:
        sub = commands.add_parser(name, help=help_text)
        sub.add_argument("--in", dest="input", required=True, help="E2E corpus (.csv or .tsv)")
        sub.add_argument("--out", dest="output", required=True, help=output_help)
        sub.add_argument("--split", choices=[s.value for s in Split], default=Split.TRAINING.value)
        sub.add_argument("--permissive", action="store_true", help="skip malformed rows instead of failing")
        sub.set_defaults(handler=handler)
        return sub

    corpus_command("stats", cmd_stats, "corpus statistics", "JSON report")
    analyze = corpus_command("analyze", cmd_analyze, "discourse marker proportions", "JSON report")
    analyze.add_argument("--per-sample", action="store_true", help="include the marker surfaces of every sample")

    select = corpus_command("select", cmd_select, "weighted stylistic selection", "selected corpus")
    select.add_argument("--schema", help="JSON weighting schema")
    select.add_argument("--threshold", type=_non_negative, help="override the schema threshold")
    select.add_argument("--report", help="JSON selection report")

    subset = corpus_command("subset", cmd_subset, "samples with a category or marker subset", "subset corpus")
    which = subset.add_mutually_exclusive_group(required=True)
    which.add_argument("--category", choices=[c.value for c in StyleCategory])
    which.add_argument("--marker", choices=[m.value for m in MarkerSubset])

    annotate = corpus_command("annotate", cmd_annotate, "contrast or emphasis annotation", "annotated corpus")
    kind = annotate.add_mutually_exclusive_group(required=True)
    kind.add_argument("--contrast", action="store_true")
    kind.add_argument("--emph", action="store_true")
    annotate.add_argument("--report", help="JSON annotation report")

    corpus_command("align", cmd_align, "slot alignment report", "JSON report")
    corpus_command("aggregation-report", cmd_aggregation_report, "aggregation feasibility table", "JSON report")

    evaluate = commands.add_parser("evaluate", help="output-quality metrics")
    evaluate.add_argument("--outputs", required=True, help="CSV with mr and output columns")
    evaluate.add_argument("--refs", help="reference corpus; restricts conformance to MRs with styled references")
    evaluate.add_argument("--metrics", type=_choices(evaluation.METRICS), default=list(evaluation.METRICS))
    evaluate.add_argument("--categories", type=_choices([c.value for c in StyleCategory]))
    evaluate.add_argument("--strict", action="store_true", help="count boolean-slot contradictions as errors")
    evaluate.add_argument("--report", required=True, help="JSON evaluation report")
    evaluate.set_defaults(handler=cmd_evaluate)

    return parser


def _configure_logging(verbose: bool, quiet: bool) -> None:
    level = logging.DEBUG if verbose else logging.WARNING if quiet else logging.INFO
    logging.basicConfig(level=level, stream=sys.stderr, format="%(asctime)s %(levelname)s %(name)s: %(message)s",
                        force=True)
    configure_progress(not quiet)


def main(argv: Optional[Sequence[str]] = None) -> int:
    load_dotenv()
    args = build_parser().parse_args(argv)
    _configure_logging(args.verbose, args.quiet)
    try:
        if args.jobs is None:
            args.jobs = default_jobs()
        args.handler(args)
    except (CorpusIOError, OSError) as e:
        logger.error("%s", e)
        return EXIT_IO
    except ToolkitError as e:
        logger.error("%s", e)
        return EXIT_INVALID
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
