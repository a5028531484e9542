from enum import Enum
from typing import Dict, List, Tuple

from pydantic import BaseModel, ConfigDict

from .analysis import Span


class StyleCategory(str, Enum):
    """The six categories of discourse phenomena"""
    AGGREGATION = "aggregation"
    CONTRAST = "contrast"
    FRONTING = "fronting"
    SUBORDINATION = "subordination"
    EXISTENTIAL = "existential"
    IMPERATIVE_MODAL = "imperative_modal"


class MarkerSubset(str, Enum):
    AGG_LEXICAL = "AGG_LEXICAL"
    AGG_APPOSITION = "AGG_APPOSITION"
    AGG_GERUND = "AGG_GERUND"
    CONTRAST_MARKERS = "CONTRAST_MARKERS"
    FRONTING = "FRONTING"
    SUBORD_CONJ = "SUBORD_CONJ"
    SUBORD_RELPRON = "SUBORD_RELPRON"
    EXISTENTIAL = "EXISTENTIAL"
    IMPERATIVE = "IMPERATIVE"
    MODAL = "MODAL"

    @property
    def category(self) -> StyleCategory:
        return SUBSET_CATEGORY[self]


SUBSET_CATEGORY: Dict[MarkerSubset, StyleCategory] = {
    MarkerSubset.AGG_LEXICAL: StyleCategory.AGGREGATION,
    MarkerSubset.AGG_APPOSITION: StyleCategory.AGGREGATION,
    MarkerSubset.AGG_GERUND: StyleCategory.AGGREGATION,
    MarkerSubset.CONTRAST_MARKERS: StyleCategory.CONTRAST,
    MarkerSubset.FRONTING: StyleCategory.FRONTING,
    MarkerSubset.SUBORD_CONJ: StyleCategory.SUBORDINATION,
    MarkerSubset.SUBORD_RELPRON: StyleCategory.SUBORDINATION,
    MarkerSubset.EXISTENTIAL: StyleCategory.EXISTENTIAL,
    MarkerSubset.IMPERATIVE: StyleCategory.IMPERATIVE_MODAL,
    MarkerSubset.MODAL: StyleCategory.IMPERATIVE_MODAL,
}


def subsets_of(category: StyleCategory) -> List[MarkerSubset]:
    return [subset for subset, parent in SUBSET_CATEGORY.items() if parent == category]


class StyleProfile(BaseModel):
    """Per-subset marker hits (character spans) detected in one utterance"""
    model_config = ConfigDict(frozen=True)

    text: str
    hits: Dict[MarkerSubset, Tuple[Span, ...]]

    def has_hit(self, subset: MarkerSubset) -> bool:
        return bool(self.hits.get(subset))

    def subsets_hit(self) -> List[MarkerSubset]:
        return [subset for subset in MarkerSubset if self.has_hit(subset)]

    def has_category(self, category: StyleCategory) -> bool:
        return any(self.has_hit(subset) for subset in subsets_of(category))

    def categories(self) -> List[StyleCategory]:
        return [category for category in StyleCategory if self.has_category(category)]

    def surfaces(self, subset: MarkerSubset) -> List[str]:
        return [self.text[span.start:span.end] for span in self.hits.get(subset, ())]
