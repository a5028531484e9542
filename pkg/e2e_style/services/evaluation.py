"""
Output-quality metrics over (MR, utterance) pairs.

Every pair is analyzed once into a PairDiagnostics row; the rates are reduced
from those rows in input order, so results do not depend on the number of
worker processes.
"""
import logging
from collections import Counter
from functools import partial
from typing import Dict, Iterable, List, Optional, Sequence, Set, Tuple

from ..config import ToolkitConfig
from ..core.errors import ConfigError, OntologyError
from ..core.mr import canonical_key
from ..core.ontology import SlotName, magnitude
from ..core.parallel import parallel_map
from ..schemas.corpus import Corpus, EvalPair
from ..schemas.reports import (
    AggregationReport,
    AggregationRow,
    EvalReport,
    PairDiagnostics,
    RateResult,
    SlotErrorResult,
)
from ..schemas.style import MarkerSubset, StyleCategory, StyleProfile
from .pipeline import SampleAnalysis, analyze_pairs, toolkit_for

logger = logging.getLogger(__name__)

METRICS = ("ser", "emph", "contrast", "conformance")


def _contrast_realized(pair: EvalPair, analysis: SampleAnalysis) -> Optional[bool]:
    relation = pair.mr.relation
    if relation is None:
        return None
    utterance = analysis.utterance
    marker_sentences = {
        utterance.sentence_of_offset(span.start)
        for span in analysis.profile.hits.get(MarkerSubset.CONTRAST_MARKERS, ())
    }
    sentences: List[Set[Optional[int]]] = []
    for slot in relation.slots:
        entry = analysis.alignment.for_slot(slot)
        if entry is None or not entry.aligned:
            return False
        sentences.append({utterance.sentence_of_offset(span.start) for span in entry.spans})
    shared = (sentences[0] & sentences[1] & marker_sentences) - {None}
    return bool(shared)


def _emphasis_realized(pair: EvalPair, analysis: SampleAnalysis) -> Tuple[int, Optional[bool]]:
    name = analysis.alignment.for_slot(SlotName.NAME)
    name_aligned = None if name is None else name.aligned
    if not pair.mr.emphasis or not name_aligned:
        return 0, name_aligned
    pivot = name.leftmost.start
    realized = 0
    for position in pair.mr.emphasis:
        entry = analysis.alignment.slots[position]
        if entry.aligned and entry.leftmost.start < pivot:
            realized += 1
    return realized, True


def _diagnose(config_key: str, item: Tuple[int, EvalPair]) -> PairDiagnostics:
    index, pair = item
    toolkit = toolkit_for(config_key)
    analysis = toolkit.process(pair.mr, pair.utterance)
    missing = [entry.slot.value for entry in analysis.alignment.unaligned()]
    contradicted = [slot.value for slot in toolkit.aligner.contradicts(pair.mr, analysis.utterance)]
    emphasis_realized, name_aligned = _emphasis_realized(pair, analysis)
    return PairDiagnostics(
        index=index,
        source=pair.source,
        missing_slots=missing,
        incorrect_slots=[slot for slot in contradicted if slot not in missing],
        emphasized=len(pair.mr.emphasis),
        emphasis_realized=emphasis_realized,
        name_aligned=name_aligned,
        contrast_realized=_contrast_realized(pair, analysis),
        categories=[category.value for category in analysis.profile.categories()],
    )


def diagnose_pairs(pairs: Sequence[EvalPair], config: Optional[ToolkitConfig] = None,
                   jobs: int = 1) -> List[PairDiagnostics]:
    config = config or ToolkitConfig()
    return parallel_map(partial(_diagnose, config.cache_key()), list(enumerate(pairs)), jobs=jobs, desc="evaluate")


def _slot_errors(pairs: Sequence[EvalPair], diagnostics: Sequence[PairDiagnostics],
                 strict: bool) -> SlotErrorResult:
    per_slot: Dict[str, Dict[str, int]] = {}
    missing = incorrect = total = 0
    for pair, row in zip(pairs, diagnostics):
        errors = set(row.missing_slots) | (set(row.incorrect_slots) if strict else set())
        for slot in pair.mr.slots:
            counts = per_slot.setdefault(slot.name.value, {"errors": 0, "total": 0})
            counts["total"] += 1
            counts["errors"] += slot.name.value in errors
        total += len(pair.mr.slots)
        missing += len(row.missing_slots)
        if strict:
            incorrect += len(row.incorrect_slots)
    errors = missing + incorrect
    return SlotErrorResult(
        rate=errors / total if total else None,
        errors=errors,
        missing=missing,
        incorrect=incorrect,
        total_slots=total,
        per_slot=dict(sorted(per_slot.items())),
    )


def _emphasis_rate(diagnostics: Sequence[PairDiagnostics]) -> RateResult:
    return RateResult.of(sum(r.emphasis_realized for r in diagnostics), sum(r.emphasized for r in diagnostics))


def _contrast_rate(diagnostics: Sequence[PairDiagnostics]) -> RateResult:
    annotated = [r for r in diagnostics if r.contrast_realized is not None]
    return RateResult.of(sum(1 for r in annotated if r.contrast_realized), len(annotated))


def _reference_profiles(references: Sequence[EvalPair], config: Optional[ToolkitConfig],
                        jobs: int) -> List[Tuple[str, StyleProfile]]:
    analyses = analyze_pairs([(r.mr, r.utterance) for r in references], config, jobs, desc="references")
    return [(canonical_key(r.mr), a.profile) for r, a in zip(references, analyses)]


def _reduced_keys(profiles: Sequence[Tuple[str, StyleProfile]], category: StyleCategory) -> Set[str]:
    """MRs with at least one reference exhibiting `category`"""
    return {key for key, profile in profiles if profile.has_category(category)}


def _conformance(pairs: Sequence[EvalPair], diagnostics: Sequence[PairDiagnostics], category: StyleCategory,
                 keys: Optional[Set[str]] = None) -> RateResult:
    rows = [
        row for pair, row in zip(pairs, diagnostics)
        if keys is None or canonical_key(pair.mr) in keys
    ]
    return RateResult.of(sum(1 for row in rows if category.value in row.categories), len(rows))


def slot_error_rate(pairs: Sequence[EvalPair], config: Optional[ToolkitConfig] = None, strict: bool = False,
                    jobs: int = 1) -> SlotErrorResult:
    """Fraction of MR content slots the utterances fail to realize"""
    return _slot_errors(pairs, diagnose_pairs(pairs, config, jobs), strict)


def emphasis_realization_rate(pairs: Sequence[EvalPair], config: Optional[ToolkitConfig] = None,
                              jobs: int = 1) -> RateResult:
    return _emphasis_rate(diagnose_pairs(pairs, config, jobs))


def contrast_realization_rate(pairs: Sequence[EvalPair], config: Optional[ToolkitConfig] = None,
                              jobs: int = 1) -> RateResult:
    return _contrast_rate(diagnose_pairs(pairs, config, jobs))


def style_conformance_rate(pairs: Sequence[EvalPair], category: StyleCategory,
                           references: Optional[Sequence[EvalPair]] = None,
                           config: Optional[ToolkitConfig] = None, jobs: int = 1) -> RateResult:
    """
    Fraction of utterances exhibiting `category`. With references, only pairs
    whose MR has a reference exhibiting the category are counted.
    """
    keys = None
    if references is not None:
        keys = _reduced_keys(_reference_profiles(references, config, jobs), category)
    return _conformance(pairs, diagnose_pairs(pairs, config, jobs), category, keys)


def evaluate(pairs: Sequence[EvalPair], metrics: Iterable[str] = METRICS,
             categories: Optional[Iterable[StyleCategory]] = None,
             references: Optional[Sequence[EvalPair]] = None, strict: bool = False,
             config: Optional[ToolkitConfig] = None, jobs: int = 1) -> EvalReport:
    metrics = set(metrics)
    unknown = metrics - set(METRICS)
    if unknown:
        raise ConfigError(f"Unknown metric(s): {', '.join(sorted(unknown))}")
    diagnostics = diagnose_pairs(pairs, config, jobs)
    report = EvalReport(pairs=len(pairs), diagnostics=diagnostics)

    if "ser" in metrics:
        report.slot_error_rate = _slot_errors(pairs, diagnostics, strict)
    if "emph" in metrics:
        report.emphasis_realization_rate = _emphasis_rate(diagnostics)
    if "contrast" in metrics:
        report.contrast_realization_rate = _contrast_rate(diagnostics)
    if "conformance" in metrics:
        profiles = _reference_profiles(references, config, jobs) if references is not None else None
        for category in (list(categories) if categories is not None else list(StyleCategory)):
            keys = _reduced_keys(profiles, category) if profiles is not None else None
            report.conformance[category.value] = _conformance(pairs, diagnostics, category, keys)

    if report.slot_error_rate is not None and report.slot_error_rate.rate is not None:
        logger.info("SER %.2f%% (%d/%d slots)", 100 * report.slot_error_rate.rate,
                    report.slot_error_rate.errors, report.slot_error_rate.total_slots)
    return report


def aggregation_potential(corpus: Corpus) -> AggregationReport:
    """Samples whose price range and customer rating sit at the same level of their scales"""
    counts: Counter = Counter()
    for sample in corpus.samples:
        price = sample.mr.get(SlotName.PRICE_RANGE)
        rating = sample.mr.get(SlotName.CUSTOMER_RATING)
        if price is None or rating is None:
            continue
        try:
            level = magnitude(SlotName.PRICE_RANGE, price)
            if level != magnitude(SlotName.CUSTOMER_RATING, rating):
                continue
        except OntologyError as e:
            logger.debug("Skipping sample outside the ontology: %s", e)
            continue
        counts[(level, price, rating)] += 1

    rows = [
        AggregationRow(price_range=price, customer_rating=rating, level=level, frequency=n)
        for (level, price, rating), n in sorted(counts.items())
    ]
    total = sum(counts.values())
    return AggregationReport(
        rows=rows,
        total=total,
        corpus_size=len(corpus),
        fraction=total / len(corpus) if len(corpus) else 0.0,
    )
