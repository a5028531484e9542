from enum import Enum
from typing import Any, Dict, List, NamedTuple, Optional, Tuple

from pydantic import BaseModel, ConfigDict

from ..core.ontology import SlotName


class AlignmentConfidence(str, Enum):
    EXACT = "exact"
    LEXICON = "lexicon"
    FUZZY = "fuzzy"


class AlignedSpan(NamedTuple):
    start: int
    end: int
    confidence: AlignmentConfidence


class SlotAlignment(BaseModel):
    model_config = ConfigDict(frozen=True)

    position: int
    slot: SlotName
    value: str
    spans: Tuple[AlignedSpan, ...] = ()  # sorted by start; empty when unaligned

    @property
    def aligned(self) -> bool:
        return bool(self.spans)

    @property
    def leftmost(self) -> Optional[AlignedSpan]:
        return self.spans[0] if self.spans else None


class Alignment(BaseModel):
    """Mapping from each MR slot position to the spans realizing it"""
    model_config = ConfigDict(frozen=True)

    text: str
    slots: Tuple[SlotAlignment, ...] = ()  # indexed by MR slot position

    def for_slot(self, slot: SlotName) -> Optional[SlotAlignment]:
        for entry in self.slots:
            if entry.slot == slot:
                return entry
        return None

    def is_aligned(self, position: int) -> bool:
        return self.slots[position].aligned

    def unaligned(self) -> List[SlotAlignment]:
        return [entry for entry in self.slots if not entry.aligned]

    def covered_text(self, position: int) -> List[str]:
        return [self.text[s.start:s.end] for s in self.slots[position].spans]


class AlignmentReport(BaseModel):
    samples: int
    slots: int
    aligned_slots: int
    alignment_rate: float
    per_slot: Dict[str, Dict[str, int]]  # slot -> {"total", "aligned"}
    per_tier: Dict[str, int]
    diagnostics: List[Dict[str, Any]]
