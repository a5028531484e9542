from enum import Enum
from typing import Dict, List, Tuple

from pydantic import BaseModel, ConfigDict, Field

from .mr import MeaningRepresentation


class Split(str, Enum):
    TRAINING = "training"
    VALIDATION = "validation"
    TEST = "test"


class CorpusSample(BaseModel):
    model_config = ConfigDict(frozen=True)

    mr: MeaningRepresentation
    ref: str = Field(min_length=1)
    split: Split = Split.TRAINING


class RejectedRow(BaseModel):
    model_config = ConfigDict(frozen=True)

    row: int  # 1-based data row, header excluded
    mr: str
    error: str


class Corpus(BaseModel):
    """Immutable, ordered collection of samples; file order is preserved everywhere downstream"""
    model_config = ConfigDict(frozen=True)

    samples: Tuple[CorpusSample, ...] = ()
    provenance: Tuple[str, ...] = ()
    rejected: Tuple[RejectedRow, ...] = ()

    def __len__(self) -> int:
        return len(self.samples)

    def with_samples(self, samples) -> "Corpus":
        return self.model_copy(update={"samples": tuple(samples), "rejected": ()})


class StatsReport(BaseModel):
    total_samples: int
    unique_mrs: int
    slot_count_distribution: Dict[str, float]
    slot_count_distribution_unique: Dict[str, float]
    mean_sentences_by_slot_count: Dict[str, float]
    slot_frequency: Dict[str, int]
    invalid_mrs: int = 0


class EvalPair(BaseModel):
    """An (MR, utterance) pair from any source: references or system outputs"""
    model_config = ConfigDict(frozen=True)

    mr: MeaningRepresentation
    utterance: str = Field(min_length=1)
    source: str = "reference"


def pairs_from_corpus(corpus: Corpus, source: str = "reference") -> List[EvalPair]:
    return [EvalPair(mr=s.mr, utterance=s.ref, source=source) for s in corpus.samples]
