"""Herd-behavior quantification and camp-level outcome prediction.

Authors are bucketed by mean subjectivity; the herd index is the mean local
clustering of the top subjectivity band minus the mean over all profiled
authors. A positive index means the most opinionated authors sit in the most
tightly clustered neighborhoods, i.e. opinions travel over local connections.

The prediction side is deliberately independent of the herd index: camps are
ranked purely by their sentiment support score, and the herd numbers ride
along as context.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .corpus import Corpus, TweetRecord
from .graph import SocialGraph, local_clustering
from .preprocess import TokenDoc
from .sentiment import NEGATIVE, POSITIVE, SentimentScore, truncate_percent

DEFAULT_BAND_EDGES = (0.0, 0.5, 0.8, 1.0)
DEFAULT_HERD_THRESHOLD = 0.0


class PredictionError(ValueError):
    """Raised when no camp received a single tweet."""


@dataclass(frozen=True)
class AuthorProfile:
    author_id: str
    mean_subjectivity: float
    mean_polarity: float
    tweet_count: int
    local_clustering: float


@dataclass(frozen=True)
class BandStat:
    low: float
    high: float
    count: int
    mean_clustering: float


@dataclass(frozen=True)
class HerdReport:
    bands: tuple[BandStat, ...]
    global_mean_clustering: float
    herd_index: float
    herd_flag: bool
    threshold: float


@dataclass(frozen=True)
class CampConfig:
    """Keyword-defined camps; keywords are matched against tokens and hashtags."""

    camps: dict[str, frozenset[str]]

    def __post_init__(self):
        if not self.camps:
            raise ValueError("at least one camp required")
        for camp_id, keywords in self.camps.items():
            if not camp_id:
                raise ValueError("empty camp id")
            if not keywords:
                raise ValueError(f"camp {camp_id!r} has no keywords")
            for word in keywords:
                if word != word.lower():
                    raise ValueError(f"camp {camp_id!r} keyword not lowercase: {word!r}")


@dataclass
class CampAssignments:
    by_tweet: dict[str, str] = field(default_factory=dict)
    tie_count: int = 0
    unassigned_count: int = 0


@dataclass(frozen=True)
class CampResult:
    camp_id: str
    rank: int
    tweet_count: int
    positive: int
    negative: int
    neutral: int
    positive_pct: str
    negative_pct: str
    neutral_pct: str
    support: float


@dataclass(frozen=True)
class PredictionReport:
    camps: tuple[CampResult, ...]
    winner: str | None
    margin: float
    undecided: bool
    degenerate: bool
    herd_index: float
    herd_flag: bool


def profile_authors(
    scores: list[SentimentScore], corpus: Corpus, graph: SocialGraph
) -> list[AuthorProfile]:
    """One profile per author with at least one scored tweet, sorted by id.

    Authors that never made it into the interaction graph get local
    clustering 0 (same value an edgeless node would score).
    """
    author_of = {record.tweet_id: record.author_id for record in corpus.records}
    grouped: dict[str, list[SentimentScore]] = {}
    for score in scores:
        author = author_of[score.tweet_id]
        grouped.setdefault(author, []).append(score)

    profiles = []
    for author in sorted(grouped):
        own = grouped[author]
        clustering = local_clustering(graph, author) if author in graph else 0.0
        profiles.append(
            AuthorProfile(
                author_id=author,
                mean_subjectivity=math.fsum(s.subjectivity for s in own) / len(own),
                mean_polarity=math.fsum(s.polarity for s in own) / len(own),
                tweet_count=len(own),
                local_clustering=clustering,
            )
        )
    return profiles


def _band_index(value: float, edges: tuple[float, ...]) -> int:
    # bands are [e_i, e_{i+1}), the last one closed at the top edge
    for i in range(len(edges) - 2):
        if edges[i] <= value < edges[i + 1]:
            return i
    return len(edges) - 2


def herd_report(
    profiles: list[AuthorProfile],
    band_edges: tuple[float, ...] = DEFAULT_BAND_EDGES,
    threshold: float = DEFAULT_HERD_THRESHOLD,
) -> HerdReport:
    """Partition authors into subjectivity bands and compute the herd index.

    ``band_edges`` must strictly increase from 0 to 1. The herd index is the
    top band's mean clustering minus the overall mean; an empty top band
    yields index 0 and a lowered flag regardless of the threshold.
    """
    if not profiles:
        raise ValueError("no author profiles")
    edges = tuple(float(e) for e in band_edges)
    if len(edges) < 2 or edges[0] != 0.0 or edges[-1] != 1.0:
        raise ValueError("band edges must start at 0 and end at 1")
    if any(a >= b for a, b in zip(edges, edges[1:])):
        raise ValueError("band edges must be strictly increasing")

    members: list[list[AuthorProfile]] = [[] for _ in range(len(edges) - 1)]
    for profile in profiles:
        members[_band_index(profile.mean_subjectivity, edges)].append(profile)

    bands = []
    for i, group in enumerate(members):
        mean = math.fsum(p.local_clustering for p in group) / len(group) if group else 0.0
        bands.append(BandStat(low=edges[i], high=edges[i + 1], count=len(group), mean_clustering=mean))

    overall = math.fsum(p.local_clustering for p in profiles) / len(profiles)
    top = members[-1]
    if top:
        herd_index = bands[-1].mean_clustering - overall
        herd_flag = herd_index > threshold
    else:
        herd_index = 0.0
        herd_flag = False

    return HerdReport(
        bands=tuple(bands),
        global_mean_clustering=overall,
        herd_index=herd_index,
        herd_flag=herd_flag,
        threshold=threshold,
    )


def camp_hits(doc: TokenDoc, record: TweetRecord, camps: CampConfig) -> dict[str, int]:
    matchable = set(doc.tokens) | set(record.hashtags)
    return {camp_id: len(keywords & matchable) for camp_id, keywords in camps.camps.items()}


def assign_camp(doc: TokenDoc, record: TweetRecord, camps: CampConfig) -> str | None:
    """Camp with the most keyword hits; zero hits or a tie gives no assignment."""
    hits = camp_hits(doc, record, camps)
    best = max(hits.values())
    if best == 0:
        return None
    leaders = [camp_id for camp_id, n in hits.items() if n == best]
    if len(leaders) > 1:
        return None
    return leaders[0]


def assign_corpus(
    docs: list[TokenDoc], records: list[TweetRecord], camps: CampConfig
) -> CampAssignments:
    """Assign every tweet, keeping count of ties and unmatched tweets."""
    assignments = CampAssignments()
    for doc, record in zip(docs, records):
        hits = camp_hits(doc, record, camps)
        best = max(hits.values())
        if best == 0:
            assignments.unassigned_count += 1
            continue
        leaders = [camp_id for camp_id, n in hits.items() if n == best]
        if len(leaders) > 1:
            assignments.tie_count += 1
            assignments.unassigned_count += 1
            continue
        assignments.by_tweet[doc.tweet_id] = leaders[0]
    return assignments


def predict(
    scores: list[SentimentScore],
    assignments: CampAssignments,
    herd: HerdReport,
) -> PredictionReport:
    """Rank camps by support score S = (positive - negative) / assigned.

    Ties at the top leave the winner undecided; fewer than two camps with
    assigned tweets marks the report degenerate. Raises
    :class:`PredictionError` when no tweet was assigned to any camp.
    """
    per_camp: dict[str, list[SentimentScore]] = {}
    for score in scores:
        camp = assignments.by_tweet.get(score.tweet_id)
        if camp is not None:
            per_camp.setdefault(camp, []).append(score)

    if not per_camp:
        raise PredictionError("no camp signal")

    scored = []
    for camp_id in sorted(per_camp):
        own = per_camp[camp_id]
        positive = sum(1 for s in own if s.label == POSITIVE)
        negative = sum(1 for s in own if s.label == NEGATIVE)
        neutral = len(own) - positive - negative
        support = (positive - negative) / len(own)
        scored.append((camp_id, len(own), positive, negative, neutral, support))

    # stable ranking: support descending, camp id as deterministic tiebreak
    scored.sort(key=lambda row: (-row[5], row[0]))

    camps = []
    rank = 0
    previous_support: float | None = None
    for position, (camp_id, count, positive, negative, neutral, support) in enumerate(scored, 1):
        if previous_support is None or support != previous_support:
            rank = position
        previous_support = support
        camps.append(
            CampResult(
                camp_id=camp_id,
                rank=rank,
                tweet_count=count,
                positive=positive,
                negative=negative,
                neutral=neutral,
                positive_pct=truncate_percent(positive, count),
                negative_pct=truncate_percent(negative, count),
                neutral_pct=truncate_percent(neutral, count),
                support=support,
            )
        )

    degenerate = len(camps) < 2
    undecided = len(camps) >= 2 and camps[0].support == camps[1].support
    if undecided:
        winner = None
        margin = 0.0
    elif degenerate:
        winner = camps[0].camp_id
        margin = 0.0
    else:
        winner = camps[0].camp_id
        margin = camps[0].support - camps[1].support

    return PredictionReport(
        camps=tuple(camps),
        winner=winner,
        margin=margin,
        undecided=undecided,
        degenerate=degenerate,
        herd_index=herd.herd_index,
        herd_flag=herd.herd_flag,
    )
