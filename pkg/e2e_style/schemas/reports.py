from enum import Enum
from typing import Any, Dict, FrozenSet, List, Optional

from pydantic import BaseModel, ConfigDict, Field

from .corpus import CorpusSample
from .mr import Relation
from .style import StyleProfile


class ScoredSample(BaseModel):
    model_config = ConfigDict(frozen=True)

    sample: CorpusSample
    profile: StyleProfile
    score: int
    sentences: int = 1
    effective_score: float  # score after the optional length penalty


class SelectionReport(BaseModel):
    input_samples: int
    selected_samples: int
    unique_mrs: int
    fallback_mrs: int  # MRs kept only through their highest-scoring reference
    threshold: int
    subset_hits: Dict[str, int]


class ContrastOutcome(str, Enum):
    LABEL = "label"
    NONE = "none"
    DISCARDED = "discarded"


class ContrastDecision(BaseModel):
    model_config = ConfigDict(frozen=True)

    outcome: ContrastOutcome
    relation: Optional[Relation] = None
    marker: Optional[str] = None
    reason: Optional[str] = None


class ContrastCounts(BaseModel):
    labeled: int = 0
    discarded: int = 0
    passed: int = 0


class EmphasisDetection(BaseModel):
    model_config = ConfigDict(frozen=True)

    positions: FrozenSet[int] = frozenset()
    name_aligned: bool = True


class AnnotationReport(BaseModel):
    kind: str
    counts: Dict[str, int]
    samples: List[Dict[str, Any]] = Field(default_factory=list)


class RateResult(BaseModel):
    """A rate with its explicit numerator and denominator; rate is None when undefined"""
    numerator: int
    denominator: int
    rate: Optional[float] = None

    @classmethod
    def of(cls, numerator: int, denominator: int) -> "RateResult":
        rate = numerator / denominator if denominator else None
        return cls(numerator=numerator, denominator=denominator, rate=rate)


class SlotErrorResult(BaseModel):
    rate: Optional[float]
    errors: int
    missing: int
    incorrect: int
    total_slots: int
    per_slot: Dict[str, Dict[str, int]]  # slot -> {"errors", "total"}


class PairDiagnostics(BaseModel):
    index: int
    source: str
    missing_slots: List[str] = Field(default_factory=list)
    incorrect_slots: List[str] = Field(default_factory=list)
    emphasized: int = 0
    emphasis_realized: int = 0
    name_aligned: Optional[bool] = None
    contrast_realized: Optional[bool] = None
    categories: List[str] = Field(default_factory=list)


class EvalReport(BaseModel):
    pairs: int
    slot_error_rate: Optional[SlotErrorResult] = None
    emphasis_realization_rate: Optional[RateResult] = None
    contrast_realization_rate: Optional[RateResult] = None
    conformance: Dict[str, RateResult] = Field(default_factory=dict)
    diagnostics: List[PairDiagnostics] = Field(default_factory=list)


class AggregationRow(BaseModel):
    price_range: str
    customer_rating: str
    level: int
    frequency: int


class AggregationReport(BaseModel):
    rows: List[AggregationRow]
    total: int
    corpus_size: int
    fraction: float
