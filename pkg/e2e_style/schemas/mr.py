from typing import FrozenSet, Optional, Tuple

from pydantic import BaseModel, ConfigDict, model_validator

from ..core.errors import MRStructureError
from ..core.ontology import RELATION_SLOTS, SURFACE_FORMS, RelationKind, SlotName


class Slot(BaseModel):
    model_config = ConfigDict(frozen=True)

    name: SlotName
    value: str
    surface: Optional[str] = None  # slot name as written in the source string

    @property
    def surface_name(self) -> str:
        return self.surface or SURFACE_FORMS[self.name]


class Relation(BaseModel):
    """Auxiliary contrast/concession annotation over two slots"""
    model_config = ConfigDict(frozen=True)

    kind: RelationKind
    slots: Tuple[SlotName, SlotName]

    @model_validator(mode="after")
    def _check_slots(self) -> "Relation":
        first, second = self.slots
        if first == second:
            raise MRStructureError(f"Relation needs two distinct slots, got {first.value} twice")
        for slot in self.slots:
            if slot not in RELATION_SLOTS:
                raise MRStructureError(f"Slot {slot.value} cannot take part in a {self.kind.value} relation")
        return self


class MeaningRepresentation(BaseModel):
    model_config = ConfigDict(frozen=True)

    slots: Tuple[Slot, ...] = ()
    emphasis: FrozenSet[int] = frozenset()  # positions into `slots`
    relation: Optional[Relation] = None

    @model_validator(mode="after")
    def _check_structure(self) -> "MeaningRepresentation":
        seen = set()
        for slot in self.slots:
            if slot.name in seen:
                raise MRStructureError(f"Duplicate slot {slot.name.value}")
            seen.add(slot.name)
        for position in self.emphasis:
            if not 0 <= position < len(self.slots):
                raise MRStructureError(f"Emphasis position {position} outside the MR")
        if self.relation is not None:
            for slot in self.relation.slots:
                if slot not in seen:
                    raise MRStructureError(f"Relation refers to missing slot {slot.value}")
        return self

    def position(self, name: SlotName) -> Optional[int]:
        for i, slot in enumerate(self.slots):
            if slot.name == name:
                return i
        return None

    def get(self, name: SlotName) -> Optional[str]:
        i = self.position(name)
        return None if i is None else self.slots[i].value

    def slot_names(self) -> Tuple[SlotName, ...]:
        return tuple(slot.name for slot in self.slots)

    def emphasized_slots(self) -> Tuple[SlotName, ...]:
        return tuple(self.slots[i].name for i in sorted(self.emphasis))

    def strip_annotations(self) -> "MeaningRepresentation":
        return self.model_copy(update={"emphasis": frozenset(), "relation": None})
