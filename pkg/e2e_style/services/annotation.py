"""
Contrast/concession and emphasis annotation of corpus MRs.
"""
import logging
from typing import List, Optional, Sequence, Tuple, Union

from ..config import ToolkitConfig
from ..core.errors import OntologyError
from ..core.mr import serialize_relation
from ..core.ontology import RELATION_SLOTS, RelationKind, SlotName, positivity
from ..schemas.alignment import Alignment
from ..schemas.analysis import AnalyzedUtterance
from ..schemas.corpus import Corpus
from ..schemas.mr import MeaningRepresentation, Relation
from ..schemas.reports import (
    AnnotationReport,
    ContrastCounts,
    ContrastDecision,
    ContrastOutcome,
    EmphasisDetection,
)
from ..schemas.style import MarkerSubset, StyleProfile
from .aligner import SlotAligner
from .detector import nearest_flanks, token_range
from .pipeline import analyze_corpus

logger = logging.getLogger(__name__)

map_positivity = positivity


def _discard(reason: str, marker: str) -> ContrastDecision:
    return ContrastDecision(outcome=ContrastOutcome.DISCARDED, marker=marker, reason=reason)


def detect_contrast_relation(mr: MeaningRepresentation, utterance: AnalyzedUtterance, alignment: Alignment,
                             profile: StyleProfile) -> ContrastDecision:
    """Label the slots flanking the first contrast marker as contrast or concession"""
    markers = profile.hits.get(MarkerSubset.CONTRAST_MARKERS, ())
    if not markers:
        return ContrastDecision(outcome=ContrastOutcome.NONE)
    span = markers[0]
    marker = utterance.text[span.start:span.end]
    covered = token_range(utterance.tokens, span.start, span.end)
    if covered is None:
        return ContrastDecision(outcome=ContrastOutcome.NONE)

    before, after = nearest_flanks(utterance, alignment, *covered)
    if before is None or after is None:
        return _discard("unresolved_flank", marker)
    first, second = sorted((before.entry, after.entry), key=lambda entry: entry.position)
    if first.slot not in RELATION_SLOTS or second.slot not in RELATION_SLOTS:
        return _discard("non_scalar_flank", marker)
    if first.slot == second.slot:
        return _discard("same_slot", marker)
    try:
        differ = positivity(first.slot, first.value) != positivity(second.slot, second.value)
    except OntologyError:
        return _discard("unknown_value", marker)

    kind = RelationKind.CONTRAST if differ else RelationKind.CONCESSION
    return ContrastDecision(
        outcome=ContrastOutcome.LABEL,
        relation=Relation(kind=kind, slots=(first.slot, second.slot)),
        marker=marker,
    )


def contrast_decisions(corpus: Corpus, config: Optional[ToolkitConfig] = None,
                       jobs: int = 1) -> List[ContrastDecision]:
    decisions = []
    for i, (sample, analysis) in enumerate(zip(corpus.samples, analyze_corpus(corpus, config, jobs))):
        decision = detect_contrast_relation(sample.mr, analysis.utterance, analysis.alignment, analysis.profile)
        if decision.outcome == ContrastOutcome.DISCARDED:
            logger.debug("Sample %d discarded at marker %r: %s", i, decision.marker, decision.reason)
        decisions.append(decision)
    return decisions


def apply_contrast(corpus: Corpus, decisions: Sequence[ContrastDecision]) -> Tuple[Corpus, ContrastCounts]:
    counts = ContrastCounts()
    samples = []
    for sample, decision in zip(corpus.samples, decisions):
        if decision.outcome == ContrastOutcome.DISCARDED:
            counts.discarded += 1
            continue
        if decision.outcome == ContrastOutcome.LABEL:
            counts.labeled += 1
            mr = sample.mr.model_copy(update={"relation": decision.relation})
            sample = sample.model_copy(update={"mr": mr})
        else:
            counts.passed += 1
        samples.append(sample)
    return corpus.with_samples(samples), counts


def annotate_contrast(corpus: Corpus, config: Optional[ToolkitConfig] = None,
                      jobs: int = 1) -> Tuple[Corpus, ContrastCounts]:
    annotated, counts = apply_contrast(corpus, contrast_decisions(corpus, config, jobs))
    logger.info("Contrast annotation: %d labeled, %d discarded, %d passed",
                counts.labeled, counts.discarded, counts.passed)
    return annotated, counts


def contrast_report(corpus: Corpus, decisions: Sequence[ContrastDecision], counts: ContrastCounts) -> AnnotationReport:
    rows = []
    for i, (sample, decision) in enumerate(zip(corpus.samples, decisions)):
        if decision.outcome == ContrastOutcome.NONE:
            continue
        row = {"index": i, "outcome": decision.outcome.value, "marker": decision.marker, "ref": sample.ref}
        if decision.relation is not None:
            row["label"] = serialize_relation(decision.relation)
        else:
            row["reason"] = decision.reason
        rows.append(row)
    return AnnotationReport(kind="contrast", counts=counts.model_dump(), samples=rows)


def detect_emphasis(mr: MeaningRepresentation, utterance: Union[str, AnalyzedUtterance],
                    alignment: Optional[Alignment] = None, aligner: Optional[SlotAligner] = None) -> EmphasisDetection:
    """Positions of the slots realized before the restaurant name"""
    if alignment is None:
        alignment = (aligner or SlotAligner()).align_slots(mr, utterance)
    name = alignment.for_slot(SlotName.NAME)
    if name is None or not name.aligned:
        return EmphasisDetection(name_aligned=False)
    pivot = name.leftmost.start
    positions = frozenset(
        entry.position for entry in alignment.slots
        if entry.slot != SlotName.NAME and entry.aligned and entry.leftmost.start < pivot
    )
    return EmphasisDetection(positions=positions)


def emphasis_detections(corpus: Corpus, config: Optional[ToolkitConfig] = None,
                        jobs: int = 1) -> List[EmphasisDetection]:
    detections = []
    for i, (sample, analysis) in enumerate(zip(corpus.samples, analyze_corpus(corpus, config, jobs))):
        detection = detect_emphasis(sample.mr, analysis.utterance, analysis.alignment)
        if not detection.name_aligned:
            logger.debug("Sample %d: name not realized, no emphasis inferred", i)
        detections.append(detection)
    return detections


def apply_emphasis(corpus: Corpus, detections: Sequence[EmphasisDetection]) -> Corpus:
    samples = []
    for sample, detection in zip(corpus.samples, detections):
        mr = sample.mr.model_copy(update={"emphasis": detection.positions})
        samples.append(sample.model_copy(update={"mr": mr}))
    return corpus.with_samples(samples)


def annotate_emphasis(corpus: Corpus, config: Optional[ToolkitConfig] = None, jobs: int = 1) -> Corpus:
    annotated = apply_emphasis(corpus, emphasis_detections(corpus, config, jobs))
    emphasized = sum(1 for s in annotated.samples if s.mr.emphasis)
    logger.info("Emphasis annotation: %d of %d samples carry emphasis", emphasized, len(annotated))
    return annotated


def emphasis_report(corpus: Corpus, detections: Sequence[EmphasisDetection]) -> AnnotationReport:
    rows = []
    counts = {"samples": len(corpus), "emphasized_samples": 0, "emphasized_slots": 0, "name_unaligned": 0}
    for i, (sample, detection) in enumerate(zip(corpus.samples, detections)):
        if not detection.name_aligned:
            counts["name_unaligned"] += 1
            rows.append({"index": i, "name_aligned": False})
        elif detection.positions:
            counts["emphasized_samples"] += 1
            counts["emphasized_slots"] += len(detection.positions)
            emphasized = [sample.mr.slots[p].name.value for p in sorted(detection.positions)]
            rows.append({"index": i, "emphasized": emphasized})
    return AnnotationReport(kind="emphasis", counts=counts, samples=rows)
