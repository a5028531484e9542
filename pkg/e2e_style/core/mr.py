"""
Meaning representation codec.

An MR string is a comma-separated list of `slot[value]` items. An item may be
preceded by one `<emph>` token, and one `<contrast>[slotA slotB]` or
`<concession>[slotA slotB]` item may carry the relation annotation.
"""
import re
from typing import List, Optional, Tuple

from pydantic import ValidationError

from ..schemas.mr import MeaningRepresentation, Relation, Slot
from .errors import MRParseError, MRStructureError
from .ontology import SURFACE_FORMS, RelationKind, auxiliary_name, lookup_slot

EMPH_TOKEN = "<emph>"
ITEM_SEPARATOR = ", "

_ITEM = re.compile(r"^(?P<slot>[^\[\]]*?)\s*\[(?P<value>[^\[\]]*)\]$")
_EMPH_PREFIX = re.compile(r"^<emph>\s*", re.IGNORECASE)
_RELATION = re.compile(r"^<(?P<kind>\w+)>$")


def _byte_offset(text: str, index: int) -> int:
    return len(text[:index].encode("utf-8"))


def _split_items(text: str) -> List[Tuple[int, str]]:
    """Split on commas outside brackets, keeping each item's start index"""
    items: List[Tuple[int, str]] = []
    depth = 0
    start = 0
    for i, char in enumerate(text):
        if char == "[":
            depth += 1
        elif char == "]":
            depth = max(0, depth - 1)
        elif char == "," and depth == 0:
            items.append((start, text[start:i]))
            start = i + 1
    items.append((start, text[start:]))

    stripped = []
    for offset, item in items:
        lead = len(item) - len(item.lstrip())
        stripped.append((offset + lead, item.strip()))
    return stripped


def _parse_relation(kind_name: str, value: str, item: str, offset: int) -> Relation:
    try:
        kind = RelationKind(kind_name.lower())
    except ValueError:
        raise MRParseError("Unknown annotation", item, offset) from None
    names = value.split()
    if len(names) != 2:
        raise MRParseError(f"A {kind.value} annotation needs exactly two slot names", item, offset)
    slots = []
    for name in names:
        slot = lookup_slot(name)
        if slot is None:
            raise MRParseError(f"Unknown slot name {name!r}", item, offset)
        slots.append(slot)
    return Relation(kind=kind, slots=(slots[0], slots[1]))


def parse_mr(text: str) -> MeaningRepresentation:
    """Parse an MR string; slot order, emphasis markers and the relation item are preserved"""
    slots: List[Slot] = []
    emphasis = set()
    relation: Optional[Relation] = None

    if not text.strip():
        return MeaningRepresentation()

    for index, item in _split_items(text):
        offset = _byte_offset(text, index)
        if not item:
            raise MRParseError("Empty item", item, offset)

        emphasized = False
        prefix = _EMPH_PREFIX.match(item)
        if prefix:
            emphasized = True
            body = item[prefix.end():]
        else:
            body = item

        match = _ITEM.match(body)
        if not match:
            reason = "Missing bracket" if ("[" in body) != ("]" in body) or "[" not in body else "Malformed item"
            raise MRParseError(reason, item, offset)

        raw_slot = match.group("slot").strip()
        value = match.group("value").strip()
        if not value:
            raise MRParseError("Empty value", item, offset)

        annotation = _RELATION.match(raw_slot)
        if annotation:
            if emphasized:
                raise MRParseError("An annotation item cannot be emphasized", item, offset)
            if relation is not None:
                raise MRStructureError("An MR carries at most one relation annotation")
            relation = _parse_relation(annotation.group("kind"), value, item, offset)
            continue

        slot = lookup_slot(raw_slot) if raw_slot else None
        if slot is None:
            raise MRParseError("Unknown slot name", item, offset)
        if emphasized:
            emphasis.add(len(slots))
        surface = None if raw_slot == SURFACE_FORMS[slot] else raw_slot
        slots.append(Slot(name=slot, value=value, surface=surface))

    try:
        return MeaningRepresentation(slots=tuple(slots), emphasis=frozenset(emphasis), relation=relation)
    except ValidationError as e:
        raise MRStructureError(str(e)) from e


def serialize_relation(relation: Relation) -> str:
    first, second = relation.slots
    return f"<{relation.kind.value}>[{auxiliary_name(first)} {auxiliary_name(second)}]"


def serialize_mr(mr: MeaningRepresentation) -> str:
    items = []
    for i, slot in enumerate(mr.slots):
        prefix = f"{EMPH_TOKEN} " if i in mr.emphasis else ""
        items.append(f"{prefix}{slot.surface_name}[{slot.value}]")
    if mr.relation is not None:
        items.append(serialize_relation(mr.relation))
    return ITEM_SEPARATOR.join(items)


def canonical_key(mr: MeaningRepresentation) -> str:
    """Order-insensitive identity of an MR: slots sorted by canonical name, annotations stripped"""
    items = sorted((slot.name.value, " ".join(slot.value.split())) for slot in mr.slots)
    return ITEM_SEPARATOR.join(f"{name}[{value}]" for name, value in items)


def mr_is_corpus_valid(mr: MeaningRepresentation) -> bool:
    """Corpus-sourced MRs carry between 3 and 8 content slots"""
    return 3 <= len(mr.slots) <= 8
