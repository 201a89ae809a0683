#!/usr/bin/env python3
"""Walkthrough: from a raw tweet file to polarity/subjectivity scores.

Loads the bundled demo corpus, shows what the text pipeline does to a few
tweets, scores everything against the default lexicon and prints the
label shares in the truncated two-decimal format used by the reports.
"""

from pathlib import Path

from herdpulse import default_config, load_corpus, preprocess, score_tokens, summarize

DATA = Path(__file__).parent / "data"

# 1. Ingest. Every line is validated; bad lines would be listed, not dropped.
result = load_corpus(DATA / "demo_tweets.jsonl", "demo")
print(f"loaded {len(result.corpus)} tweets, {len(result.invalid)} invalid lines")

config = default_config()

# 2. Normalize + tokenize + stopwords + stem, then score. Watch a few tweets
#    go through: URLs and mentions disappear, hashtags keep their word.
print("\nsample pipeline output:")
for record in result.corpus.records[:4]:
    doc = preprocess(record, config.stopwords, config.stemmer_rules)
    score = score_tokens(doc, config.lexicon, config.negation_words)
    print(f"  {record.tweet_id}  {record.text!r}")
    print(f"      tokens  : {' '.join(doc.tokens)}")
    print(
        f"      scored  : polarity {score.polarity:+.3f}  "
        f"subjectivity {score.subjectivity:.3f}  {score.label}"
    )

# 3. Corpus-level shares. Percentages are truncated, never rounded, so the
#    printed numbers match the report files digit for digit.
docs = [preprocess(r, config.stopwords, config.stemmer_rules) for r in result.corpus.records]
scores = [score_tokens(d, config.lexicon, config.negation_words) for d in docs]
summary = summarize(scores)
print(f"\n{summary.total} tweets:")
print(f"  negative {summary.negative_pct}%  ({summary.negative})")
print(f"  positive {summary.positive_pct}%  ({summary.positive})")
print(f"  neutral  {summary.neutral_pct}%  ({summary.neutral})")
