from __future__ import annotations

import json
from datetime import datetime, timezone

import pytest

from herdpulse import Corpus, TweetRecord


def make_record(
    tweet_id="t1",
    author_id="a1",
    text="hello world",
    hashtags=(),
    mentions=(),
    retweet_of=None,
    follower_count=0,
):
    return TweetRecord(
        tweet_id=tweet_id,
        author_id=author_id,
        text=text,
        timestamp=datetime(2021, 2, 1, 12, 0, 0, tzinfo=timezone.utc),
        hashtags=tuple(hashtags),
        mentions=tuple(mentions),
        retweet_of=retweet_of,
        follower_count=follower_count,
    )


def make_corpus(records, source_label="test"):
    return Corpus(records=tuple(records), source_label=source_label)


def record_line(
    tweet_id="t1",
    author_id="a1",
    text="hello",
    timestamp="2021-02-01T12:00:00Z",
    hashtags=(),
    mentions=(),
    retweet_of=None,
    follower_count=0,
    **extra,
):
    obj = {
        "tweet_id": tweet_id,
        "author_id": author_id,
        "text": text,
        "timestamp": timestamp,
        "hashtags": list(hashtags),
        "mentions": list(mentions),
        "retweet_of": retweet_of,
        "follower_count": follower_count,
    }
    obj.update(extra)
    return json.dumps(obj)


@pytest.fixture
def corpus_file(tmp_path):
    def write(lines, name="corpus.jsonl"):
        path = tmp_path / name
        path.write_text("\n".join(lines) + "\n", encoding="utf-8")
        return path

    return write
