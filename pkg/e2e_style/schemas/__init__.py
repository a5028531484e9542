from .alignment import AlignedSpan, Alignment, AlignmentConfidence, AlignmentReport, SlotAlignment
from .analysis import AnalyzedUtterance, Span, Token, TokenTag
from .corpus import Corpus, CorpusSample, EvalPair, RejectedRow, Split, StatsReport, pairs_from_corpus
from .mr import MeaningRepresentation, Relation, Slot
from .reports import (
    AggregationReport,
    AggregationRow,
    AnnotationReport,
    ContrastCounts,
    ContrastDecision,
    ContrastOutcome,
    EmphasisDetection,
    EvalReport,
    PairDiagnostics,
    RateResult,
    ScoredSample,
    SelectionReport,
    SlotErrorResult,
)
from .style import SUBSET_CATEGORY, MarkerSubset, StyleCategory, StyleProfile, subsets_of
