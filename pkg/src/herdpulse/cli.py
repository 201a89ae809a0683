"""Command-line front end: validate, score, analyze, plot.

Exit codes: 0 success, 1 data/validation failure, 2 I/O or config failure.
"""

from __future__ import annotations

import argparse
import csv
import sys
from pathlib import Path

from .config import ConfigError, RunConfig, default_config, load_config
from .corpus import CorpusFormatError, LoadResult, filter_by_hashtag, load_corpus, merge_corpora
from .pipeline import RunInfo, analyze_corpus, score_corpus, scores_csv, write_bundle
from .svgplot import render_scatter

EXIT_OK = 0
EXIT_DATA = 1
EXIT_IO = 2

# bundle CSVs cmd_plot knows how to render: name -> (title, x label, y label)
PLOT_SERIES = {
    "subjectivity_series.csv": ("Tweet subjectivity", "tweet index", "subjectivity"),
    "polarity_series.csv": ("Tweet polarity", "tweet index", "polarity"),
    "combined_series.csv": ("Subjectivity and polarity", "tweet index", "value"),
    "ck_curve.csv": ("Clustering coefficient vs degree", "degree", "mean clustering"),
    "degree_distribution.csv": ("Degree distribution", "degree", "node count"),
}


def _fail(message: str) -> None:
    print(f"error: {message}", file=sys.stderr)


def _load_inputs(paths: list[str], hashtag: str | None) -> tuple[LoadResult, int]:
    """Load and merge corpus files; returns (result, pre-filter record count)."""
    results = [load_corpus(path, Path(path).stem) for path in paths]
    merged = (
        results[0] if len(results) == 1 else merge_corpora(results, results[0].corpus.source_label)
    )
    loaded = len(merged.corpus.records)
    if hashtag:
        merged = LoadResult(
            corpus=filter_by_hashtag(merged.corpus, hashtag),
            invalid=merged.invalid,
            unknown_key_count=merged.unknown_key_count,
        )
    return merged, loaded


def _resolve_config(path: str | None) -> RunConfig:
    return load_config(path) if path else default_config()


def _print_summary(summary) -> None:
    print(f"total: {summary.total}")
    print(f"negative: {summary.negative_pct}%")
    print(f"positive: {summary.positive_pct}%")
    print(f"neutral: {summary.neutral_pct}%")


def cmd_validate(args) -> int:
    status = EXIT_OK
    for path in args.corpus:
        try:
            result = load_corpus(path, Path(path).stem)
        except CorpusFormatError as err:
            _fail(str(err))
            status = max(status, EXIT_DATA)
            continue
        except OSError as err:
            _fail(str(err))
            return EXIT_IO
        for entry in result.invalid:
            print(f"{path}:{entry.line_no}: {entry.reason}")
        if result.unknown_key_count:
            print(f"{path}: {result.unknown_key_count} unknown key(s) ignored")
        print(f"{path}: {len(result.corpus.records)} valid, {len(result.invalid)} invalid")
        if result.invalid:
            status = max(status, EXIT_DATA)
    return status


def cmd_score(args) -> int:
    try:
        config = _resolve_config(args.config)
        result, _ = _load_inputs(args.corpus, args.hashtag)
    except (ConfigError, OSError) as err:
        _fail(str(err))
        return EXIT_IO
    except CorpusFormatError as err:
        _fail(str(err))
        return EXIT_DATA

    _, scores, summary = score_corpus(result.corpus, config)

    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    (out / "scores.csv").write_text(scores_csv(scores), encoding="utf-8")
    _print_summary(summary)
    return EXIT_OK


def cmd_analyze(args) -> int:
    try:
        config = _resolve_config(args.config)
        loaded, pre_filter = _load_inputs(args.corpus, args.hashtag)
    except (ConfigError, OSError) as err:
        _fail(str(err))
        return EXIT_IO
    except CorpusFormatError as err:
        _fail(str(err))
        return EXIT_DATA

    if not loaded.corpus.records:
        _fail("corpus is empty after loading/filtering; nothing to analyze")
        return EXIT_DATA

    result = analyze_corpus(loaded.corpus, config)
    run = RunInfo(
        config_path=args.config,
        corpus_paths=list(args.corpus),
        invalid_lines=len(loaded.invalid),
        loaded_records=pre_filter,
        filtered_records=len(loaded.corpus.records),
    )
    write_bundle(result, config, args.out, run)

    _print_summary(result.summary)
    print(f"herd index: {result.herd.herd_index:.6f} (flag: {result.herd.herd_flag})")
    if result.prediction is not None:
        winner = result.prediction.winner if result.prediction.winner else "undecided"
        print(f"predicted winner: {winner}")
        return EXIT_OK
    print(f"prediction: {result.prediction_error}")
    return EXIT_DATA


def _read_series_csv(path: Path) -> tuple[list[str], list[list[float]]]:
    with path.open(newline="", encoding="utf-8") as handle:
        reader = csv.reader(handle)
        header = next(reader)
        rows = [[float(cell) for cell in row] for row in reader]
    return header, rows


def cmd_plot(args) -> int:
    bundle = Path(args.bundle_dir)
    out = Path(args.out) if args.out else bundle
    out.mkdir(parents=True, exist_ok=True)

    status = EXIT_OK
    for name, (title, x_label, y_label) in PLOT_SERIES.items():
        source = bundle / name
        if not source.exists():
            _fail(f"missing CSV: {source}")
            status = EXIT_DATA
            continue
        header, rows = _read_series_csv(source)
        series = []
        for column in range(1, len(header)):
            points = [(row[0], row[column]) for row in rows]
            series.append((header[column], points))
        svg = render_scatter(series, title, x_label, y_label)
        target = out / (name[: -len(".csv")] + ".svg")
        target.write_text(svg, encoding="utf-8")
        print(f"wrote {target}")
    return status


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="herdpulse",
        description="Sentiment, clustering and herd-behavior reports from tweet corpora.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    validate = sub.add_parser("validate", help="check corpus files line by line")
    validate.add_argument("--corpus", action="append", required=True, help="corpus file (repeatable)")
    validate.set_defaults(func=cmd_validate)

    score = sub.add_parser("score", help="write per-tweet scores and print the summary")
    score.add_argument("--corpus", action="append", required=True)
    score.add_argument("--config", default=None)
    score.add_argument("--out", required=True, help="output directory")
    score.add_argument("--hashtag", default=None, help="keep only tweets with this hashtag")
    score.set_defaults(func=cmd_score)

    analyze = sub.add_parser("analyze", help="emit the full report bundle")
    analyze.add_argument("--corpus", action="append", required=True)
    analyze.add_argument("--config", default=None)
    analyze.add_argument("--out", required=True)
    analyze.add_argument("--hashtag", default=None)
    analyze.set_defaults(func=cmd_analyze)

    plot = sub.add_parser("plot", help="render SVGs from a report bundle")
    plot.add_argument("bundle_dir", help="directory produced by analyze")
    plot.add_argument("--out", default=None, help="output directory (default: bundle dir)")
    plot.set_defaults(func=cmd_plot)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    raise SystemExit(main())
