import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from e2e_style.config import ToolkitConfig, WeightingSchema
from e2e_style.core.ontology import SlotName
from e2e_style.schemas.analysis import Span
from e2e_style.schemas.style import MarkerSubset, StyleCategory, StyleProfile
from e2e_style.services.selection import (
    extract_category_subset, extract_marker_subset, run_selection, score_corpus, score_utterance,
    select_indices, select_stylistic_subset,
)

ZERO = WeightingSchema(weights={subset: 0 for subset in MarkerSubset}, threshold=1)


def profile(*subsets):
    return StyleProfile(text="x" * 10, hits={subset: (Span(0, 1), Span(2, 3)) for subset in subsets})


def test_score_sums_subset_weights_once():
    schema = WeightingSchema()
    assert score_utterance(profile(MarkerSubset.CONTRAST_MARKERS), schema) == 3
    assert score_utterance(profile(), schema) == 0
    assert score_utterance(profile(MarkerSubset.SUBORD_RELPRON, MarkerSubset.EXISTENTIAL), schema) == 2


def test_threshold_keeps_every_reference_reaching_it():
    keys = ["mr"] * 8
    assert select_indices(keys, [0, 0, 1, 1, 2, 3, 3, 5], threshold=2) == [4, 5, 6, 7]


def test_fallback_keeps_first_best_reference():
    assert select_indices(["a", "a", "b", "a"], [1, 1, 0, 1], threshold=2) == [0, 2]


groups = st.lists(
    st.tuples(st.sampled_from("abcdefgh"), st.integers(min_value=0, max_value=12)),
    min_size=1, max_size=40,
)
thresholds = st.integers(min_value=0, max_value=14)


@settings(max_examples=1000)
@given(groups, thresholds)
def test_every_mr_survives_selection(items, threshold):
    keys, scores = zip(*items)
    kept = select_indices(keys, scores, threshold)
    assert {keys[i] for i in kept} == set(keys)
    assert kept == sorted(set(kept))
    for i in kept:
        alone = [j for j in kept if keys[j] == keys[i]] == [i]
        assert scores[i] >= threshold or alone


@settings(max_examples=1000)
@given(groups, thresholds, thresholds)
def test_raising_the_threshold_never_adds_references(items, low, high):
    low, high = sorted((low, high))
    keys, scores = zip(*items)
    assert set(select_indices(keys, scores, high)) <= set(select_indices(keys, scores, low))


@settings(max_examples=1000)
@given(groups)
def test_zero_scores_keep_first_reference_per_mr(items):
    keys = [key for key, _ in items]
    first = sorted({key: i for i, key in reversed(list(enumerate(keys)))}.values())
    assert select_indices(keys, [0] * len(keys), threshold=1) == first


@settings(max_examples=1000)
@given(groups, thresholds)
def test_selection_is_idempotent(items, threshold):
    keys, scores = zip(*items)
    kept = select_indices(keys, scores, threshold)
    again = select_indices([keys[i] for i in kept], [scores[i] for i in kept], threshold)
    assert again == list(range(len(kept)))


def test_zero_weights_keep_one_reference_per_mr(corpus):
    selected, report = run_selection(corpus, ToolkitConfig(weighting=ZERO))
    assert len(selected) == 7
    assert report.fallback_mrs == 7
    assert report.unique_mrs == 7
    assert [s.ref for s in selected.samples] == [corpus.samples[i].ref for i in (0, 2, 4, 5, 6, 7, 8)]
    assert select_stylistic_subset(corpus, ZERO).samples == selected.samples


def test_default_selection_report(corpus):
    selected, report = run_selection(corpus)
    assert report.input_samples == 9
    assert report.selected_samples == len(selected)
    assert report.threshold == 2
    assert 7 <= len(selected) <= 9
    assert set(report.subset_hits) == {subset.value for subset in MarkerSubset}


def test_parallel_selection_matches_serial(corpus):
    serial, serial_report = run_selection(corpus, jobs=1)
    parallel, parallel_report = run_selection(corpus, jobs=2)
    assert parallel.samples == serial.samples
    assert parallel_report == serial_report


def test_length_penalty_discounts_multi_sentence_references(corpus):
    config = ToolkitConfig(weighting=WeightingSchema(length_penalty=0.5))
    scored = score_corpus(corpus, config)
    assert any(s.sentences > 1 for s in scored)
    for s in scored:
        assert s.effective_score == pytest.approx(s.score * 0.5 ** (s.sentences - 1))
    assert all(s.effective_score == s.score for s in score_corpus(corpus))


def test_length_penalty_must_be_positive():
    with pytest.raises(ValueError):
        WeightingSchema(length_penalty=0)


def test_category_and_marker_subsets(corpus):
    contrast = extract_category_subset(corpus, StyleCategory.CONTRAST)
    assert [s.mr.get(SlotName.NAME) for s in contrast.samples] == ["The Rice Boat", "Strada", "The Eagle"]
    assert extract_marker_subset(corpus, MarkerSubset.CONTRAST_MARKERS).samples == contrast.samples
