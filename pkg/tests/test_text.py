from hypothesis import given
from hypothesis import strategies as st

from e2e_style.config import TextSettings
from e2e_style.core.text import TextAnalyzer, analyze, is_terminal, tokenize
from e2e_style.schemas.analysis import TokenTag


def surfaces(text):
    return [t.surface for t in tokenize(text)]


def tags(text):
    return {t.surface: t.tag for t in analyze(text).tokens}


def test_prices_and_ratings_stay_whole():
    assert surfaces("It costs £20-25, rated 5 out of 5.") == [
        "It", "costs", "£20-25", ",", "rated", "5", "out", "of", "5", ".",
    ]


def test_hyphenated_words_and_contractions():
    assert surfaces("A family-friendly pub, don't miss it!") == [
        "A", "family-friendly", "pub", ",", "don't", "miss", "it", "!",
    ]


def test_token_offsets_index_the_text():
    text = "Café Rouge is near  The Bakers."
    for token in tokenize(text):
        assert text[token.start:token.end] == token.surface


def test_abbreviations_do_not_end_sentences():
    utterance = analyze("Visit Mr. Bean's Café today. It is cheap.")
    assert utterance.sentence_count() == 2
    assert utterance.tokens[1].surface == "Mr."


def test_sentence_split_keeps_closing_quotes():
    utterance = analyze('They call it "the best." Try it')
    first, second = utterance.sentences
    assert utterance.tokens[first[1] - 1].surface == '"'
    assert second == (first[1], len(utterance.tokens))


def test_modal_and_contraction_tags():
    tagged = tags("You'll love it, you could stay.")
    assert tagged["You'll"] == TokenTag.MODAL
    assert tagged["could"] == TokenTag.MODAL


def test_ing_tagging():
    tagged = tags("Wildwood is serving food while keeping their catering low, despite the rating.")
    assert tagged["serving"] == TokenTag.VERB_ING
    assert tagged["keeping"] == TokenTag.VERB_ING
    assert tagged["catering"] == TokenTag.WORD  # after a determiner
    assert tagged["rating"] == TokenTag.WORD


def test_capitalized_ing_name_is_not_a_verb():
    assert tags("Near The Pudding Ring, fine.")["Ring"] == TokenTag.WORD
    assert tags("Try The Bowling Hall.")["Bowling"] == TokenTag.WORD


def test_custom_ing_exclusions():
    analyzer = TextAnalyzer(TextSettings(ing_exclusions=["serving"]))
    tagged = {t.surface: t.tag for t in analyzer.analyze("A pub serving food.").tokens}
    assert tagged["serving"] == TokenTag.WORD


def test_terminal_tokens():
    for text, expected in (("Great!", True), ("Really?!", True), ("Well...", True), ("Well,", False)):
        assert is_terminal(tokenize(text)[-1]) is expected


@given(st.text(max_size=200))
def test_analysis_is_deterministic_and_covers_all_tokens(text):
    once = analyze(text)
    assert once == analyze(text)
    covered = [i for start, end in once.sentences for i in range(start, end)]
    assert covered == list(range(len(once.tokens)))


@given(st.text(max_size=200))
def test_token_spans_rebuild_the_text(text):
    tokens = tokenize(text)
    rebuilt, cursor = [], 0
    for token in tokens:
        assert cursor <= token.start < token.end <= len(text)
        assert text[token.start:token.end] == token.surface
        gap = text[cursor:token.start]
        assert not gap.strip()
        rebuilt += [gap, token.surface]
        cursor = token.end
    assert not text[cursor:].strip()
    assert "".join(rebuilt) + text[cursor:] == text
