"""End-to-end analysis run and deterministic report-bundle emission.

Everything written here is a pure function of the corpus, the config and the
data files: CSVs use LF endings and fixed 6-decimal values, JSON documents are
key-sorted with floats pre-formatted as 6-decimal strings, and the manifest
carries a sha256 per emitted file. Two runs over the same inputs must produce
byte-identical bundles.
"""

from __future__ import annotations

import csv
import hashlib
import io
import json
from dataclasses import dataclass
from pathlib import Path

from . import __version__
from .config import RunConfig
from .corpus import Corpus
from .graph import SocialGraph, build_graph, clustering_stats
from .herd import (
    CampAssignments,
    HerdReport,
    PredictionReport,
    assign_corpus,
    herd_report,
    predict,
    profile_authors,
    PredictionError,
)
from .preprocess import TokenDoc, preprocess
from .sentiment import CorpusSummary, SentimentScore, score_tokens, summarize

PIPELINE_VERSION = f"herdpulse {__version__}"

NO_CAMP_SIGNAL = "no camp signal"


def fixed(value: float) -> str:
    """6-decimal fixed-point rendering used for every non-percentage float."""
    text = f"{value:.6f}"
    # normalize IEEE negative zero so formatting never depends on sign tricks
    return "0.000000" if text == "-0.000000" else text


@dataclass
class AnalysisResult:
    corpus: Corpus
    docs: list[TokenDoc]
    scores: list[SentimentScore]
    summary: CorpusSummary
    graph: SocialGraph
    profiles: list
    herd: HerdReport
    assignments: CampAssignments
    prediction: PredictionReport | None
    prediction_error: str | None


def score_corpus(corpus: Corpus, config: RunConfig):
    """Preprocess and score every record; returns (docs, scores, summary)."""
    docs = [preprocess(r, config.stopwords, config.stemmer_rules) for r in corpus.records]
    scores = [score_tokens(doc, config.lexicon, config.negation_words) for doc in docs]
    return docs, scores, summarize(scores)


def analyze_corpus(corpus: Corpus, config: RunConfig) -> AnalysisResult:
    """Run the full pipeline: scoring, graph, herd report, camp prediction.

    A corpus without any camp-assignable tweet does not abort the run; the
    prediction slot carries the :data:`NO_CAMP_SIGNAL` marker instead.
    """
    docs, scores, summary = score_corpus(corpus, config)
    graph = build_graph(corpus)
    profiles = profile_authors(scores, corpus, graph)
    herd = herd_report(profiles, config.band_edges, config.herd_threshold)

    if config.camps is not None:
        assignments = assign_corpus(docs, list(corpus.records), config.camps)
    else:
        assignments = CampAssignments(unassigned_count=len(docs))

    prediction: PredictionReport | None = None
    prediction_error: str | None = None
    try:
        prediction = predict(scores, assignments, herd)
    except PredictionError as err:
        prediction_error = str(err)

    return AnalysisResult(
        corpus=corpus,
        docs=docs,
        scores=scores,
        summary=summary,
        graph=graph,
        profiles=profiles,
        herd=herd,
        assignments=assignments,
        prediction=prediction,
        prediction_error=prediction_error,
    )


def _csv_text(header: list[str], rows: list[list[str]]) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buffer.getvalue()


def _json_text(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def scores_csv(scores: list[SentimentScore]) -> str:
    rows = [
        [s.tweet_id, fixed(s.polarity), fixed(s.subjectivity), s.label]
        for s in scores
    ]
    return _csv_text(["tweet_id", "polarity", "subjectivity", "label"], rows)


def _herd_json(herd: HerdReport) -> str:
    return _json_text(
        {
            "bands": [
                {
                    "low": fixed(band.low),
                    "high": fixed(band.high),
                    "count": band.count,
                    "mean_clustering": fixed(band.mean_clustering),
                }
                for band in herd.bands
            ],
            "global_mean_clustering": fixed(herd.global_mean_clustering),
            "herd_index": fixed(herd.herd_index),
            "herd_flag": herd.herd_flag,
            "threshold": fixed(herd.threshold),
        }
    )


def _prediction_json(result: AnalysisResult, config: RunConfig) -> str:
    if result.prediction is None:
        return _json_text(
            {
                "error": result.prediction_error,
                "tie_count": result.assignments.tie_count,
                "unassigned_count": result.assignments.unassigned_count,
            }
        )
    report = result.prediction
    obj = {
        "camps": [
            {
                "camp_id": camp.camp_id,
                "rank": camp.rank,
                "tweet_count": camp.tweet_count,
                "positive": camp.positive,
                "negative": camp.negative,
                "neutral": camp.neutral,
                "positive_pct": camp.positive_pct,
                "negative_pct": camp.negative_pct,
                "neutral_pct": camp.neutral_pct,
                "support": fixed(camp.support),
            }
            for camp in report.camps
        ],
        "winner": report.winner,
        "margin": fixed(report.margin),
        "undecided": report.undecided,
        "degenerate": report.degenerate,
        "herd_index": fixed(report.herd_index),
        "herd_flag": report.herd_flag,
        "tie_count": result.assignments.tie_count,
        "unassigned_count": result.assignments.unassigned_count,
    }
    if config.reference_shares:
        obj["reference_shares"] = dict(sorted(config.reference_shares.items()))
    return _json_text(obj)


def bundle_files(result: AnalysisResult, config: RunConfig) -> dict[str, str]:
    """Name -> content for every report file except the manifest."""
    stats = clustering_stats(result.graph)

    degree_counts: dict[int, int] = {}
    for k in stats.degree.values():
        degree_counts[k] = degree_counts.get(k, 0) + 1

    files: dict[str, str] = {}
    files["scores.csv"] = scores_csv(result.scores)
    files["graph_summary.json"] = _json_text(
        {
            "nodes": len(result.graph),
            "edges": result.graph.edge_count(),
            "mean_clustering": fixed(stats.mean_clustering),
            "global_clustering": fixed(stats.global_clustering),
        }
    )
    files["degree_distribution.csv"] = _csv_text(
        ["degree", "count"],
        [[str(k), str(degree_counts[k])] for k in sorted(degree_counts)],
    )
    files["ck_curve.csv"] = _csv_text(
        ["degree", "mean_clustering"],
        [[str(k), fixed(c)] for k, c in stats.ck_curve],
    )
    files["subjectivity_series.csv"] = _csv_text(
        ["index", "subjectivity"],
        [[str(i), fixed(s.subjectivity)] for i, s in enumerate(result.scores)],
    )
    files["polarity_series.csv"] = _csv_text(
        ["index", "polarity"],
        [[str(i), fixed(s.polarity)] for i, s in enumerate(result.scores)],
    )
    files["combined_series.csv"] = _csv_text(
        ["index", "subjectivity", "polarity"],
        [
            [str(i), fixed(s.subjectivity), fixed(s.polarity)]
            for i, s in enumerate(result.scores)
        ],
    )
    files["herd_report.json"] = _herd_json(result.herd)
    files["prediction.json"] = _prediction_json(result, config)
    return files


@dataclass
class RunInfo:
    """Provenance recorded in the manifest: input paths and pre-analysis counts."""

    config_path: str | None
    corpus_paths: list[str]
    invalid_lines: int
    loaded_records: int
    filtered_records: int


def write_bundle(result: AnalysisResult, config: RunConfig, out_dir: str | Path, run: RunInfo) -> Path:
    """Write all report files plus manifest.json; returns the manifest path."""
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)

    files = bundle_files(result, config)
    emitted = []
    for name in sorted(files):
        content = files[name].encode("utf-8")
        (out / name).write_bytes(content)
        emitted.append({"name": name, "sha256": hashlib.sha256(content).hexdigest()})

    manifest = {
        "pipeline_version": PIPELINE_VERSION,
        "config_path": run.config_path,
        "corpus_paths": run.corpus_paths,
        "stage_counts": {
            "invalid_lines": run.invalid_lines,
            "loaded_records": run.loaded_records,
            "after_hashtag_filter": run.filtered_records,
            "scored": len(result.scores),
            "graph_nodes": len(result.graph),
            "graph_edges": result.graph.edge_count(),
            "profiled_authors": len(result.profiles),
            "assigned": len(result.assignments.by_tweet),
            "camp_ties": result.assignments.tie_count,
        },
        "emitted_files": emitted,
    }
    manifest_path = out / "manifest.json"
    manifest_path.write_text(_json_text(manifest), encoding="utf-8")
    return manifest_path
