from __future__ import annotations

import pytest
from hypothesis import given, strategies as st

from herdpulse import (
    load_default_stemmer_rules,
    load_default_stopwords,
    load_stemmer_rules,
    load_wordlist,
    normalize,
    preprocess,
    remove_stopwords,
    tokenize,
)

from .conftest import make_record

RULES = load_default_stemmer_rules()
STOPWORDS = load_default_stopwords()


def test_normalize_kitchen_sink():
    assert normalize("Vote NOW! https://t.co/x #WestBengal @abc") == "vote now westbengal"


def test_normalize_empty():
    assert normalize("") == ""


def test_normalize_fixed_point_on_clean_text():
    assert normalize("already normalized text") == "already normalized text"


def test_normalize_strips_urls_and_mentions():
    assert normalize("see HTTPS://EX.COM/a?b=1 and @User_1 now") == "see and now"
    assert normalize("http") == ""
    assert normalize("only a url https://x.y") == "only a url"


def test_normalize_hash_stripped_word_kept():
    assert normalize("#BengalElection2021 rocks") == "bengalelection rocks"
    assert normalize("foo#bar") == "foobar"


def test_normalize_non_letters_become_spaces():
    assert normalize("a+b=c; द 5") == "a b c"


def test_normalize_exposed_url_token_still_removed():
    # URL shapes are removed wherever they occur, even mid-word
    assert normalize("5http oddity") == "oddity"
    assert normalize("foohttp://x.y bar") == "foo bar"
    # the '#' strip can expose a URL shape only a second pass can see
    assert normalize("htt#p xx") == "xx"
    text = "5http://x.y stays?"
    assert normalize(normalize(text)) == normalize(text)


@given(st.text(max_size=200))
def test_normalize_idempotent(text):
    once = normalize(text)
    assert normalize(once) == once


@given(st.text(max_size=200))
def test_normalize_output_alphabet(text):
    out = normalize(text)
    assert all(c == " " or "a" <= c <= "z" for c in out)
    assert "  " not in out
    assert out == out.strip()


def test_tokenize_basic():
    assert tokenize("vote now westbengal") == ["vote", "now", "westbengal"]
    assert tokenize("") == []
    assert tokenize("a  b") == ["a", "b"]


def test_remove_stopwords_examples():
    assert remove_stopwords(["the", "vote", "is", "now"], {"the", "is"}) == ["vote", "now"]
    assert remove_stopwords([], {"the"}) == []
    assert remove_stopwords(["vote"], set()) == ["vote"]


@given(st.lists(st.sampled_from(["the", "vote", "is", "now", "win"]), max_size=30))
def test_remove_stopwords_idempotent(tokens):
    stoplist = {"the", "is"}
    once = remove_stopwords(tokens, stoplist)
    assert remove_stopwords(once, stoplist) == once


def test_stem_examples():
    assert RULES.stem("winning") == "win"
    assert RULES.stem("win") == "win"
    assert RULES.stem("elections") == "election"


def test_stem_rule_table_behavior():
    assert RULES.stem("parties") == "party"
    assert RULES.stem("classes") == "class"
    assert RULES.stem("class") == "class"
    assert RULES.stem("getting") == "get"
    assert RULES.stem("planned") == "plan"
    assert RULES.stem("happily") == "happy"
    assert RULES.stem("really") == "real"
    # short tokens protected by min stem length
    assert RULES.stem("is") == "is"
    assert RULES.stem("king") == "king"
    assert RULES.stem("red") == "red"


@given(st.text(alphabet=st.characters(min_codepoint=ord("a"), max_codepoint=ord("z")), min_size=1, max_size=15))
def test_stem_idempotent_on_own_output(token):
    stemmed = RULES.stem(token)
    assert RULES.stem(stemmed) == stemmed


def test_stemmer_rule_file_parsing(tmp_path):
    path = tmp_path / "rules.tsv"
    path.write_text("# comment\nies\ty\t2\ns\t\t2\n", encoding="utf-8")
    rules = load_stemmer_rules(path)
    assert rules.stem("parties") == "party"
    bad = tmp_path / "bad.tsv"
    bad.write_text("ies\ty\n", encoding="utf-8")
    with pytest.raises(ValueError):
        load_stemmer_rules(bad)


def test_wordlist_parsing(tmp_path):
    path = tmp_path / "words.txt"
    path.write_text("# negations\nnot\nNO\n\nnever\n", encoding="utf-8")
    assert load_wordlist(path) == {"not", "no", "never"}


def test_preprocess_full_pipeline():
    record = make_record(text="The ELECTIONS are coming! #WestBengal")
    doc = preprocess(record, {"the", "are"}, RULES)
    # "coming" stems to "com" under the shipped rule table
    assert doc.tokens == ("election", "com", "westbengal")
    assert doc.raw_length == len("The ELECTIONS are coming! #WestBengal")
    assert doc.tweet_id == record.tweet_id


def test_preprocess_url_only_text():
    record = make_record(text="https://t.co/abc123")
    assert preprocess(record, STOPWORDS, RULES).tokens == ()


def test_preprocess_single_word():
    record = make_record(text="vote")
    assert preprocess(record, STOPWORDS, RULES).tokens == ("vote",)


def test_preprocess_deterministic():
    record = make_record(text="Winning #Elections!! @someone https://x.y z")
    first = preprocess(record, STOPWORDS, RULES)
    second = preprocess(record, STOPWORDS, RULES)
    assert first == second


@given(st.text(max_size=120))
def test_token_count_bounded_by_fragments(text):
    record = make_record(text=text)
    doc = preprocess(record, STOPWORDS, RULES)
    assert len(doc.tokens) <= len(tokenize(normalize(text)))
    assert all(token and token.isalpha() and token == token.lower() for token in doc.tokens)
    assert all(token not in STOPWORDS for token in doc.tokens)
