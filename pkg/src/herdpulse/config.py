"""Run configuration: one JSON document wiring data files and analysis knobs.

Recognized keys (all optional unless noted):

  band_edges          subjectivity band edges, strictly increasing 0..1
  herd_threshold      herd flag threshold (default 0)
  camps               object camp_id -> array of lowercase keywords
  stopwords_path      stopword file (default: packaged list)
  stemmer_rules_path  stemmer rule table (default: packaged table)
  negation_words_path negation word file (default: packaged list)
  lexicon_path        sentiment lexicon (default: packaged demo lexicon)
  reference_shares    object camp_id -> externally published vote share,
                      echoed into the prediction report for comparison only

Relative paths are resolved against the directory of the config file.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path

from .herd import DEFAULT_BAND_EDGES, DEFAULT_HERD_THRESHOLD, CampConfig
from .preprocess import (
    StemmerRules,
    load_default_negation_words,
    load_default_stemmer_rules,
    load_default_stopwords,
    load_stemmer_rules,
    load_wordlist,
)
from .sentiment import Lexicon, load_default_lexicon, load_lexicon


class ConfigError(ValueError):
    pass


@dataclass
class RunConfig:
    band_edges: tuple[float, ...]
    herd_threshold: float
    camps: CampConfig | None
    stopwords: frozenset[str]
    stemmer_rules: StemmerRules
    negation_words: frozenset[str]
    lexicon: Lexicon
    reference_shares: dict[str, str]


def default_config() -> RunConfig:
    return RunConfig(
        band_edges=DEFAULT_BAND_EDGES,
        herd_threshold=DEFAULT_HERD_THRESHOLD,
        camps=None,
        stopwords=load_default_stopwords(),
        stemmer_rules=load_default_stemmer_rules(),
        negation_words=load_default_negation_words(),
        lexicon=load_default_lexicon(),
        reference_shares={},
    )


def _resolve(base: Path, value) -> Path:
    if not isinstance(value, str) or not value:
        raise ConfigError("path entries must be non-empty strings")
    path = Path(value)
    return path if path.is_absolute() else base / path


def load_config(path: str | Path) -> RunConfig:
    path = Path(path)
    try:
        raw = json.loads(path.read_text(encoding="utf-8"))
    except json.JSONDecodeError as err:
        raise ConfigError(f"{path}: not valid JSON ({err.msg})") from None
    if not isinstance(raw, dict):
        raise ConfigError(f"{path}: config must be a JSON object")
    base = path.parent

    config = default_config()

    if "band_edges" in raw:
        edges = raw["band_edges"]
        if not isinstance(edges, list) or not all(isinstance(e, (int, float)) for e in edges):
            raise ConfigError("band_edges must be an array of numbers")
        config.band_edges = tuple(float(e) for e in edges)

    if "herd_threshold" in raw:
        if not isinstance(raw["herd_threshold"], (int, float)):
            raise ConfigError("herd_threshold must be a number")
        config.herd_threshold = float(raw["herd_threshold"])

    if "camps" in raw and raw["camps"] is not None:
        camps_raw = raw["camps"]
        if not isinstance(camps_raw, dict):
            raise ConfigError("camps must be an object of camp_id -> keyword array")
        camps = {}
        for camp_id, keywords in camps_raw.items():
            if not isinstance(keywords, list) or not all(isinstance(k, str) for k in keywords):
                raise ConfigError(f"camp {camp_id!r}: keywords must be an array of strings")
            camps[str(camp_id)] = frozenset(keywords)
        try:
            config.camps = CampConfig(camps=camps)
        except ValueError as err:
            raise ConfigError(str(err)) from None

    try:
        if "stopwords_path" in raw:
            config.stopwords = load_wordlist(_resolve(base, raw["stopwords_path"]))
        if "stemmer_rules_path" in raw:
            config.stemmer_rules = load_stemmer_rules(_resolve(base, raw["stemmer_rules_path"]))
        if "negation_words_path" in raw:
            config.negation_words = load_wordlist(_resolve(base, raw["negation_words_path"]))
        if "lexicon_path" in raw:
            config.lexicon = load_lexicon(_resolve(base, raw["lexicon_path"]))
    except OSError as err:
        raise ConfigError(f"cannot read data file: {err}") from None
    except ValueError as err:
        raise ConfigError(str(err)) from None

    if "reference_shares" in raw and raw["reference_shares"] is not None:
        shares = raw["reference_shares"]
        if not isinstance(shares, dict):
            raise ConfigError("reference_shares must be an object")
        config.reference_shares = {str(k): str(v) for k, v in shares.items()}

    return config
