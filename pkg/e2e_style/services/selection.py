"""
Weighted stylistic selection.

Each reference is scored by summing the weights of the marker subsets it hits
(a subset counts once per utterance). For every unique MR the references
reaching the threshold are kept; when none does, the single highest-scoring
reference is kept instead, so no MR disappears from the selected corpus.
"""
import logging
from collections import Counter
from typing import Dict, Hashable, List, Optional, Sequence, Tuple

from ..config import ToolkitConfig, WeightingSchema
from ..core.mr import canonical_key
from ..schemas.corpus import Corpus
from ..schemas.reports import ScoredSample, SelectionReport
from ..schemas.style import MarkerSubset, StyleCategory, StyleProfile
from .pipeline import analyze_corpus, profile_corpus

logger = logging.getLogger(__name__)


def score_utterance(profile: StyleProfile, schema: WeightingSchema) -> int:
    return sum(schema.weights.get(subset, 0) for subset in profile.subsets_hit())


def _effective(score: int, sentences: int, schema: WeightingSchema) -> float:
    if schema.length_penalty is None:
        return float(score)
    return score * schema.length_penalty ** max(sentences - 1, 0)


def score_corpus(corpus: Corpus, config: Optional[ToolkitConfig] = None, jobs: int = 1) -> List[ScoredSample]:
    config = config or ToolkitConfig()
    schema = config.weighting
    scored = []
    for sample, analysis in zip(corpus.samples, analyze_corpus(corpus, config, jobs)):
        score = score_utterance(analysis.profile, schema)
        sentences = analysis.utterance.sentence_count()
        scored.append(ScoredSample(
            sample=sample,
            profile=analysis.profile,
            score=score,
            sentences=sentences,
            effective_score=_effective(score, sentences, schema),
        ))
    return scored


def _groups(keys: Sequence[Hashable]) -> Dict[Hashable, List[int]]:
    groups: Dict[Hashable, List[int]] = {}
    for i, key in enumerate(keys):
        groups.setdefault(key, []).append(i)
    return groups


def select_indices(keys: Sequence[Hashable], scores: Sequence[float], threshold: float) -> List[int]:
    """Indices kept by threshold selection with per-key fallback, in input order"""
    kept: List[int] = []
    for members in _groups(keys).values():
        passing = [i for i in members if scores[i] >= threshold]
        if passing:
            kept += passing
        else:
            # max() returns the first maximal element, i.e. the earliest reference
            kept.append(max(members, key=lambda i: scores[i]))
    return sorted(kept)


def run_selection(corpus: Corpus, config: Optional[ToolkitConfig] = None,
                  jobs: int = 1) -> Tuple[Corpus, SelectionReport]:
    config = config or ToolkitConfig()
    threshold = config.weighting.threshold
    scored = score_corpus(corpus, config, jobs)
    keys = [canonical_key(s.sample.mr) for s in scored]
    scores = [s.effective_score for s in scored]
    kept = select_indices(keys, scores, threshold)

    fallback = sum(
        1 for members in _groups(keys).values()
        if not any(scores[i] >= threshold for i in members)
    )
    hits: Counter = Counter()
    for i in kept:
        hits.update(subset.value for subset in scored[i].profile.subsets_hit())

    selected = corpus.with_samples(scored[i].sample for i in kept)
    report = SelectionReport(
        input_samples=len(corpus),
        selected_samples=len(selected),
        unique_mrs=len(set(keys)),
        fallback_mrs=fallback,
        threshold=threshold,
        subset_hits={subset.value: hits[subset.value] for subset in MarkerSubset},
    )
    logger.info("Selected %d of %d samples (%d unique MRs, %d kept by fallback)",
                report.selected_samples, report.input_samples, report.unique_mrs, report.fallback_mrs)
    return selected, report


def select_stylistic_subset(corpus: Corpus, schema: Optional[WeightingSchema] = None,
                            config: Optional[ToolkitConfig] = None, jobs: int = 1) -> Corpus:
    config = config or ToolkitConfig()
    if schema is not None:
        config = config.model_copy(update={"weighting": schema})
    selected, _ = run_selection(corpus, config, jobs)
    return selected


def extract_category_subset(corpus: Corpus, category: StyleCategory, config: Optional[ToolkitConfig] = None,
                            jobs: int = 1) -> Corpus:
    """Samples whose reference hits at least one marker subset of `category`"""
    profiles = profile_corpus(corpus, config, jobs)
    subset = corpus.with_samples(s for s, p in zip(corpus.samples, profiles) if p.has_category(category))
    logger.info("Category %s: %d of %d samples", category.value, len(subset), len(corpus))
    return subset


def extract_marker_subset(corpus: Corpus, subset: MarkerSubset, config: Optional[ToolkitConfig] = None,
                          jobs: int = 1) -> Corpus:
    profiles = profile_corpus(corpus, config, jobs)
    extracted = corpus.with_samples(s for s, p in zip(corpus.samples, profiles) if p.has_hit(subset))
    logger.info("Marker subset %s: %d of %d samples", subset.value, len(extracted), len(corpus))
    return extracted
