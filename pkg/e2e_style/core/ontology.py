from enum import Enum
from typing import Dict, FrozenSet, Optional, Tuple

from .errors import OntologyError


class SlotName(str, Enum):
    """Canonical (camelCase) names of the restaurant-domain slots"""
    NAME = "name"
    EAT_TYPE = "eatType"
    FOOD = "food"
    PRICE_RANGE = "priceRange"
    CUSTOMER_RATING = "customerRating"
    AREA = "area"
    FAMILY_FRIENDLY = "familyFriendly"
    NEAR = "near"


class RelationKind(str, Enum):
    CONTRAST = "contrast"
    CONCESSION = "concession"


CONTENT_SLOTS: Tuple[SlotName, ...] = tuple(SlotName)

# Slot names as they are written in E2E files
SURFACE_FORMS: Dict[SlotName, str] = {slot: slot.value for slot in SlotName}
SURFACE_FORMS[SlotName.CUSTOMER_RATING] = "customer rating"

# Slots whose values propagate verbatim into the utterance
CATEGORICAL_SLOTS: Tuple[SlotName, ...] = (SlotName.NAME, SlotName.NEAR, SlotName.FOOD)

# Slots that may take part in a contrast/concession relation
RELATION_SLOTS: FrozenSet[SlotName] = frozenset(
    {SlotName.PRICE_RANGE, SlotName.CUSTOMER_RATING, SlotName.FAMILY_FRIENDLY}
)

ONTOLOGY: Dict[SlotName, Tuple[str, ...]] = {
    SlotName.EAT_TYPE: ("restaurant", "coffee shop", "pub"),
    SlotName.FOOD: ("English", "Italian", "French", "Chinese", "Indian", "Japanese", "Fast food"),
    SlotName.PRICE_RANGE: ("cheap", "moderate", "high", "less than £20", "£20-25", "more than £30"),
    SlotName.CUSTOMER_RATING: ("low", "average", "high", "1 out of 5", "3 out of 5", "5 out of 5"),
    SlotName.AREA: ("riverside", "city centre"),
    SlotName.FAMILY_FRIENDLY: ("yes", "no"),
}

# 1 = negative, 2 = neutral, 3 = positive; a high price is a negative attribute
POSITIVITY: Dict[SlotName, Dict[str, int]] = {
    SlotName.CUSTOMER_RATING: {
        "low": 1, "1 out of 5": 1,
        "average": 2, "3 out of 5": 2,
        "high": 3, "5 out of 5": 3,
    },
    SlotName.PRICE_RANGE: {
        "cheap": 3, "less than £20": 3,
        "moderate": 2, "£20-25": 2,
        "high": 1, "more than £30": 1,
    },
    SlotName.FAMILY_FRIENDLY: {"yes": 3, "no": 1},
}

# Position of a scalar value on its own scale, price not inverted
MAGNITUDE: Dict[SlotName, Dict[str, int]] = {
    SlotName.CUSTOMER_RATING: POSITIVITY[SlotName.CUSTOMER_RATING],
    SlotName.PRICE_RANGE: {
        "cheap": 1, "less than £20": 1,
        "moderate": 2, "£20-25": 2,
        "high": 3, "more than £30": 3,
    },
}

_LOOKUP: Dict[str, SlotName] = {}
for _slot in SlotName:
    for _form in (_slot.value, SURFACE_FORMS[_slot], SURFACE_FORMS[_slot].replace(" ", "_")):
        _LOOKUP[_form.lower()] = _slot


def normalize_value(value: str) -> str:
    return " ".join(value.split()).lower()


def lookup_slot(surface: str) -> Optional[SlotName]:
    """Resolve any accepted surface variant ("customer rating", "customerRating", "customer_rating")"""
    return _LOOKUP.get(" ".join(surface.split()).lower())


def auxiliary_name(slot: SlotName) -> str:
    """Slot name as written inside a <contrast>/<concession> value"""
    return SURFACE_FORMS[slot].replace(" ", "_")


def positivity(slot: SlotName, value: str) -> int:
    levels = POSITIVITY.get(slot)
    if levels is None:
        raise OntologyError(f"Slot {slot.value} has no positivity scale")
    level = levels.get(normalize_value(value))
    if level is None:
        raise OntologyError(f"Unknown value {value!r} for slot {slot.value}")
    return level


def magnitude(slot: SlotName, value: str) -> int:
    levels = MAGNITUDE.get(slot)
    if levels is None:
        raise OntologyError(f"Slot {slot.value} is not scalar")
    level = levels.get(normalize_value(value))
    if level is None:
        raise OntologyError(f"Unknown value {value!r} for slot {slot.value}")
    return level
