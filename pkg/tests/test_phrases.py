import pytest
from hypothesis import given, strategies as st

from minuteforge.errors import EmptyMeetingError
from minuteforge.ingest import parse_transcript
from minuteforge.phrases import (
    Lexicons,
    extract_phrases,
    filter_redundant,
    split_phrases,
)

LEX = Lexicons()


class TestSplitPhrases:
    def test_marker_and_conjunction_boundaries(self):
        tokens = ("well <BND> we have to wait until june and "
                  "we are allowed to reach our family").split()
        assert split_phrases(tokens, LEX) == [
            ["well"],
            ["we", "have", "to", "wait", "until", "june"],
            ["we", "are", "allowed", "to", "reach", "our", "family"],
        ]

    def test_single_token(self):
        assert split_phrases(["hello"], LEX) == [["hello"]]

    def test_that_split(self):
        tokens = ("we think that we have to wait until june "
                  "for the free circulation of people").split()
        assert split_phrases(tokens, LEX) == [
            ["we", "think"],
            ["we", "have", "to", "wait", "until", "june",
             "for", "the", "free", "circulation", "of", "people"],
        ]

    def test_subject_split_after_three_tokens(self):
        tokens = "costs are higher they disagree".split()
        assert split_phrases(tokens, LEX) == [
            ["costs", "are", "higher"],
            ["they", "disagree"],
        ]

    def test_no_subject_split_under_three_tokens(self):
        tokens = "then they disagree".split()
        assert split_phrases(tokens, LEX) == [["then", "they", "disagree"]]

    def test_placeholder_is_subject(self):
        tokens = "report goes out tomorrow person3 takes it".split()
        segments = split_phrases(tokens, LEX)
        assert segments[1][0] == "person3"

    def test_empty_segments_discarded(self):
        assert split_phrases(["<BND>", "<BND>", "and"], LEX) == []


class TestFilterRedundant:
    def test_determiner_deleted(self):
        tokens = "we have to wait until june for the free circulation of people".split()
        assert filter_redundant(tokens, LEX) == (
            "we have to wait until june for free circulation of people".split()
        )

    def test_all_interjections(self):
        assert filter_redundant("well yeah okay".split(), LEX) == []

    def test_adverb_list_and_suffix(self):
        assert filter_redundant("they probably agreed quickly".split(), LEX) == [
            "they", "agreed"]

    def test_protected_words_survive_suffix_rule(self):
        assert filter_redundant("family only early july".split(), LEX) == [
            "family", "only", "early", "july"]

    def test_order_preserved(self):
        tokens = "big red very fast car".split()
        out = filter_redundant(tokens, LEX)
        assert out == [t for t in tokens if t in out]


class TestExtractPhrases:
    def test_table_fixture(self):
        t = parse_transcript(
            "we think that we have to wait until june for the free circulation of people."
        )
        phrases = extract_phrases(t)
        assert [p.text for p in phrases] == [
            "we have to wait until june for free circulation of people"
        ]

    def test_empty_meeting_error(self):
        t = parse_transcript("um okay")
        with pytest.raises(EmptyMeetingError):
            extract_phrases(t)

    def test_phrase_ids_sequential(self):
        t = parse_transcript(
            "the budget needs review before friday.\nservers were down again today."
        )
        phrases = extract_phrases(t)
        assert [p.phrase_id for p in phrases] == list(range(len(phrases)))
        assert len(phrases) == 2

    def test_tokens_subsequence_of_raw(self):
        t = parse_transcript(
            "(PERSON1) well, the staging servers were really down twice this week."
        )
        for p in extract_phrases(t):
            it = iter(p.raw_tokens)
            assert all(tok in it for tok in p.tokens)

    def test_no_lexicon_tokens_in_output(self):
        t = parse_transcript(
            "the quarterly report probably needs a careful review because the team is busy."
        )
        for p in extract_phrases(t):
            assert not any(LEX.is_redundant(tok) for tok in p.tokens)

    def test_determinism(self, fixture_transcript_text):
        t1 = parse_transcript(fixture_transcript_text)
        t2 = parse_transcript(fixture_transcript_text)
        assert [p.tokens for p in extract_phrases(t1)] == [
            p.tokens for p in extract_phrases(t2)]


def test_lexicons_roundtrip(tmp_path):
    path = tmp_path / "lex.json"
    path.write_text(__import__("json").dumps(LEX.to_dict()), encoding="utf-8")
    loaded = Lexicons.from_file(path)
    assert loaded == LEX


@given(st.lists(st.sampled_from(["alpha", "beta", "and", "<BND>", "we", "gamma"]),
                max_size=12))
def test_split_never_emits_markers_or_empty(tokens):
    for segment in split_phrases(tokens, LEX):
        assert segment
        assert "<BND>" not in segment
