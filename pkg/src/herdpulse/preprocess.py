"""Text normalization and tokenization for raw tweets.

The pipeline is ``normalize -> tokenize -> remove_stopwords -> stem`` and is
fully rule-driven: the stopword list and the stemmer rule table are versioned
data files, so the token output of a given text never changes between runs or
machines.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from importlib import resources
from pathlib import Path


_URL_RE = re.compile(r"https?\S*")
_MENTION_RE = re.compile(r"@\S+")
_NON_LETTER_RE = re.compile(r"[^a-z]+")


@dataclass(frozen=True)
class TokenDoc:
    """Normalized token list for one tweet."""

    tweet_id: str
    tokens: tuple[str, ...]
    raw_length: int


def _normalize_pass(text: str) -> str:
    out = text.lower()
    out = _URL_RE.sub(" ", out)
    out = _MENTION_RE.sub(" ", out)
    out = out.replace("#", "")
    out = _NON_LETTER_RE.sub(" ", out)
    return " ".join(out.split())


def normalize(text: str) -> str:
    """Lowercase and strip URLs, @-mentions, '#' signs and non-letters.

    Hashtag words survive with the '#' removed; every run of non-letter
    characters becomes a single space. Iterates the cleaning pass to a fixed
    point, which makes ``normalize(normalize(x)) == normalize(x)`` hold by
    construction (a pass can expose a new URL-shaped substring, e.g.
    "htt#p" collapses to "http" only after the '#' strip).
    """
    current = text
    while True:
        cleaned = _normalize_pass(current)
        if cleaned == current:
            return cleaned
        current = cleaned


def tokenize(text: str) -> list[str]:
    """Split normalized text on spaces, dropping empty fragments."""
    return [fragment for fragment in text.split(" ") if fragment]


def remove_stopwords(tokens: list[str], stoplist: frozenset[str] | set[str]) -> list[str]:
    return [token for token in tokens if token not in stoplist]


@dataclass(frozen=True)
class StemRule:
    suffix: str
    replacement: str
    min_stem_length: int


class StemmerRules:
    """Ordered suffix-stripping table, applied first-match-wins to a fixed point.

    Each pass applies at most one rule; passes repeat until the token stops
    changing. A rule whose replacement equals its suffix therefore acts as a
    stop marker (e.g. ``ss -> ss`` protects "class" from the plural rule).
    """

    def __init__(self, rules: list[StemRule]):
        for rule in rules:
            if not rule.suffix:
                raise ValueError("stemmer rule with empty suffix")
            if rule.replacement and not (
                rule.replacement.isalpha() and rule.replacement.islower()
            ):
                raise ValueError(
                    f"stemmer replacement must be lowercase letters: {rule.replacement!r}"
                )
            if rule.min_stem_length < 0:
                raise ValueError("min_stem_length must be >= 0")
        self.rules = tuple(rules)

    def stem(self, token: str) -> str:
        current = token
        while True:
            stemmed = self._apply_once(current)
            if stemmed == current:
                return stemmed
            current = stemmed

    def _apply_once(self, token: str) -> str:
        for rule in self.rules:
            if not token.endswith(rule.suffix):
                continue
            stem_len = len(token) - len(rule.suffix)
            if stem_len < rule.min_stem_length:
                continue
            return token[:stem_len] + rule.replacement
        return token


def load_stemmer_rules(path: str | Path) -> StemmerRules:
    """Parse a rule file of lines ``suffix<TAB>replacement<TAB>min_stem_length``."""
    rules = []
    for line_no, line in enumerate(Path(path).read_text(encoding="utf-8").splitlines(), 1):
        if not line.strip() or line.lstrip().startswith("#"):
            continue
        parts = line.split("\t")
        if len(parts) != 3:
            raise ValueError(f"{path}:{line_no}: expected 3 tab-separated fields")
        suffix, replacement, raw_min = parts
        try:
            min_len = int(raw_min)
        except ValueError:
            raise ValueError(f"{path}:{line_no}: min_stem_length not an integer") from None
        rules.append(StemRule(suffix=suffix, replacement=replacement, min_stem_length=min_len))
    return StemmerRules(rules)


def load_wordlist(path: str | Path) -> frozenset[str]:
    """One lowercase word per line; '#'-prefixed comment lines are ignored."""
    words = set()
    for line in Path(path).read_text(encoding="utf-8").splitlines():
        word = line.strip()
        if not word or word.startswith("#"):
            continue
        words.add(word.lower())
    return frozenset(words)


def default_data_path(name: str) -> Path:
    """Path of a data file shipped with the package (stopwords, rules, ...)."""
    return Path(resources.files("herdpulse").joinpath("data", name))


def load_default_stopwords() -> frozenset[str]:
    return load_wordlist(default_data_path("stopwords.txt"))


def load_default_stemmer_rules() -> StemmerRules:
    return load_stemmer_rules(default_data_path("stemmer_rules.tsv"))


def load_default_negation_words() -> frozenset[str]:
    return load_wordlist(default_data_path("negation_words.txt"))


def preprocess_text(
    text: str, stoplist: frozenset[str] | set[str], rules: StemmerRules
) -> list[str]:
    tokens = remove_stopwords(tokenize(normalize(text)), stoplist)
    stemmed = [rules.stem(token) for token in tokens]
    return [token for token in stemmed if token]


def preprocess(record, stoplist: frozenset[str] | set[str], rules: StemmerRules) -> TokenDoc:
    """Full pipeline for one record; empty token output is valid."""
    tokens = preprocess_text(record.text, stoplist, rules)
    return TokenDoc(
        tweet_id=record.tweet_id,
        tokens=tuple(tokens),
        raw_length=len(record.text),
    )
