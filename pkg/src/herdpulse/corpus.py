"""Offline tweet-corpus ingestion: load, validate, filter, re-serialize.

A corpus file is UTF-8, one JSON object per line, with keys:
``tweet_id``, ``author_id``, ``text``, ``timestamp`` (ISO-8601 UTC),
``hashtags``, ``mentions``, ``retweet_of`` (string or null) and
``follower_count``. Unknown keys are ignored but counted.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from datetime import datetime, timezone
from pathlib import Path


REQUIRED_KEYS = (
    "tweet_id",
    "author_id",
    "text",
    "timestamp",
    "hashtags",
    "mentions",
    "retweet_of",
    "follower_count",
)

# load_corpus aborts when more than this fraction of non-empty lines is invalid
MAX_INVALID_FRACTION = 0.5


class CorpusFormatError(ValueError):
    """Raised when a corpus file as a whole is unusable."""


@dataclass(frozen=True)
class TweetRecord:
    """One ingested post, normalized (lowercase hashtags, no self-mentions)."""

    tweet_id: str
    author_id: str
    text: str
    timestamp: datetime
    hashtags: tuple[str, ...]
    mentions: tuple[str, ...]
    retweet_of: str | None
    follower_count: int


@dataclass(frozen=True)
class Corpus:
    """Ordered, duplicate-free record list; order is ingestion order."""

    records: tuple[TweetRecord, ...]
    source_label: str

    def __len__(self) -> int:
        return len(self.records)

    def __iter__(self):
        return iter(self.records)


@dataclass(frozen=True)
class LineError:
    line_no: int
    reason: str


@dataclass
class LoadResult:
    """Outcome of loading one corpus file: records plus per-line errors."""

    corpus: Corpus
    invalid: list[LineError] = field(default_factory=list)
    unknown_key_count: int = 0


def _parse_timestamp(value) -> datetime:
    if not isinstance(value, str) or not value:
        raise ValueError("timestamp must be an ISO-8601 string")
    text = value.strip()
    if text.endswith(("Z", "z")):
        text = text[:-1] + "+00:00"
    try:
        parsed = datetime.fromisoformat(text)
    except ValueError:
        raise ValueError(f"timestamp not ISO-8601: {value!r}") from None
    if parsed.tzinfo is None:
        parsed = parsed.replace(tzinfo=timezone.utc)
    # seconds precision: sub-second detail is dropped deterministically
    return parsed.astimezone(timezone.utc).replace(microsecond=0)


def _parse_hashtags(value) -> tuple[str, ...]:
    if not isinstance(value, list):
        raise ValueError("hashtags must be an array of strings")
    tags = []
    for item in value:
        if not isinstance(item, str):
            raise ValueError("hashtags must be an array of strings")
        tag = item.lstrip("#").lower()
        if not tag:
            raise ValueError("hashtag empty after normalization")
        if "#" in tag or any(ch.isspace() for ch in tag):
            raise ValueError(f"hashtag contains whitespace or '#': {item!r}")
        tags.append(tag)
    return tuple(tags)


def _parse_record(obj: dict) -> tuple[TweetRecord, int]:
    """Validate one decoded JSON object; returns (record, unknown-key count)."""
    for key in REQUIRED_KEYS:
        if key not in obj:
            raise ValueError(f"missing {key}")
    unknown = sum(1 for key in obj if key not in REQUIRED_KEYS)

    tweet_id = obj["tweet_id"]
    if not isinstance(tweet_id, str) or not tweet_id:
        raise ValueError("tweet_id must be a non-empty string")
    author_id = obj["author_id"]
    if not isinstance(author_id, str) or not author_id:
        raise ValueError("author_id must be a non-empty string")
    text = obj["text"]
    if not isinstance(text, str):
        raise ValueError("text must be a string")

    timestamp = _parse_timestamp(obj["timestamp"])
    hashtags = _parse_hashtags(obj["hashtags"])

    raw_mentions = obj["mentions"]
    if not isinstance(raw_mentions, list) or not all(
        isinstance(m, str) and m for m in raw_mentions
    ):
        raise ValueError("mentions must be an array of non-empty strings")
    # self-mentions are dropped, not rejected
    mentions = tuple(m for m in raw_mentions if m != author_id)

    retweet_of = obj["retweet_of"]
    if retweet_of is not None and (not isinstance(retweet_of, str) or not retweet_of):
        raise ValueError("retweet_of must be null or a non-empty string")

    follower_count = obj["follower_count"]
    if isinstance(follower_count, bool) or not isinstance(follower_count, int):
        raise ValueError("follower_count must be an integer")
    if follower_count < 0:
        raise ValueError("follower_count must be >= 0")

    record = TweetRecord(
        tweet_id=tweet_id,
        author_id=author_id,
        text=text,
        timestamp=timestamp,
        hashtags=hashtags,
        mentions=mentions,
        retweet_of=retweet_of,
        follower_count=follower_count,
    )
    return record, unknown


def load_corpus(path: str | Path, source_label: str) -> LoadResult:
    """Load a line-delimited corpus file, keeping every valid record in file order.

    Invalid lines are collected as :class:`LineError` entries instead of being
    silently dropped; a later duplicate of an already-seen tweet_id is invalid.
    Raises ``OSError`` if the file is unreadable and :class:`CorpusFormatError`
    when more than half of the non-empty lines fail validation (wrong-format
    guard).
    """
    text = Path(path).read_text(encoding="utf-8")

    records: list[TweetRecord] = []
    invalid: list[LineError] = []
    unknown_keys = 0
    seen_ids: set[str] = set()
    non_empty = 0

    for line_no, line in enumerate(text.splitlines(), start=1):
        if not line.strip():
            continue
        non_empty += 1
        try:
            obj = json.loads(line)
        except json.JSONDecodeError as err:
            invalid.append(LineError(line_no, f"invalid JSON: {err.msg}"))
            continue
        if not isinstance(obj, dict):
            invalid.append(LineError(line_no, "record must be a JSON object"))
            continue
        try:
            record, unknown = _parse_record(obj)
        except ValueError as err:
            invalid.append(LineError(line_no, str(err)))
            continue
        if record.tweet_id in seen_ids:
            invalid.append(LineError(line_no, f"duplicate tweet_id: {record.tweet_id}"))
            continue
        seen_ids.add(record.tweet_id)
        unknown_keys += unknown
        records.append(record)

    if non_empty and len(invalid) / non_empty > MAX_INVALID_FRACTION:
        raise CorpusFormatError(
            f"{len(invalid)} of {non_empty} lines invalid in {path}; "
            "file does not look like a corpus"
        )

    corpus = Corpus(records=tuple(records), source_label=source_label)
    return LoadResult(corpus=corpus, invalid=invalid, unknown_key_count=unknown_keys)


def record_to_json(record: TweetRecord) -> str:
    """Serialize one record to the documented line format (canonical key order)."""
    obj = {
        "tweet_id": record.tweet_id,
        "author_id": record.author_id,
        "text": record.text,
        "timestamp": record.timestamp.strftime("%Y-%m-%dT%H:%M:%SZ"),
        "hashtags": list(record.hashtags),
        "mentions": list(record.mentions),
        "retweet_of": record.retweet_of,
        "follower_count": record.follower_count,
    }
    return json.dumps(obj, ensure_ascii=False, separators=(", ", ": "))


def save_corpus(corpus: Corpus, path: str | Path) -> None:
    lines = [record_to_json(record) for record in corpus.records]
    Path(path).write_text("\n".join(lines) + ("\n" if lines else ""), encoding="utf-8")


def filter_by_hashtag(corpus: Corpus, tag: str) -> Corpus:
    """Sub-corpus of records carrying ``tag`` (case-insensitive, '#' stripped)."""
    if not tag:
        raise ValueError("tag must be non-empty")
    wanted = tag.lstrip("#").lower()
    if not wanted:
        raise ValueError("tag must be non-empty after stripping '#'")
    kept = tuple(r for r in corpus.records if wanted in r.hashtags)
    return Corpus(records=kept, source_label=wanted)


def merge_corpora(results: list[LoadResult], source_label: str) -> LoadResult:
    """Concatenate loaded corpora; duplicates across files keep first occurrence."""
    records: list[TweetRecord] = []
    invalid: list[LineError] = []
    unknown = 0
    seen: set[str] = set()
    for result in results:
        invalid.extend(result.invalid)
        unknown += result.unknown_key_count
        for record in result.corpus.records:
            if record.tweet_id in seen:
                continue
            seen.add(record.tweet_id)
            records.append(record)
    corpus = Corpus(records=tuple(records), source_label=source_label)
    return LoadResult(corpus=corpus, invalid=invalid, unknown_key_count=unknown)
