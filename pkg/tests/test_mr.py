import pytest
from hypothesis import given
from hypothesis import strategies as st

from e2e_style.core.errors import MRParseError, MRStructureError
from e2e_style.core.mr import canonical_key, mr_is_corpus_valid, parse_mr, serialize_mr
from e2e_style.core.ontology import ONTOLOGY, RelationKind, SlotName
from e2e_style.schemas.mr import MeaningRepresentation, Relation, Slot

from .samples import WILDWOOD_EMPHASIZED_MR, WILDWOOD_MR

NAMES = ["The Eagle", "Wildwood", "Café Sicilia", "The Golden Curry", "Loch Fyne", "Zizzi"]


def test_parse_keeps_order_and_values():
    mr = parse_mr(WILDWOOD_MR)
    assert mr.slot_names() == (
        SlotName.NAME, SlotName.EAT_TYPE, SlotName.FOOD, SlotName.PRICE_RANGE,
        SlotName.CUSTOMER_RATING, SlotName.NEAR,
    )
    assert mr.get(SlotName.CUSTOMER_RATING) == "1 out of 5"
    assert mr.emphasis == frozenset()
    assert mr.relation is None


def test_serialize_reproduces_source_string():
    assert serialize_mr(parse_mr(WILDWOOD_MR)) == WILDWOOD_MR
    assert serialize_mr(parse_mr(WILDWOOD_EMPHASIZED_MR)) == WILDWOOD_EMPHASIZED_MR


def test_emphasis_positions():
    mr = parse_mr(WILDWOOD_EMPHASIZED_MR)
    assert mr.emphasis == frozenset({1, 2, 5})
    assert mr.emphasized_slots() == (SlotName.EAT_TYPE, SlotName.FOOD, SlotName.NEAR)


def test_relation_item():
    text = "name[The Punter], customer rating[5 out of 5], priceRange[cheap], <concession>[customer_rating priceRange]"
    mr = parse_mr(text)
    assert mr.relation == Relation(kind=RelationKind.CONCESSION,
                                   slots=(SlotName.CUSTOMER_RATING, SlotName.PRICE_RANGE))
    assert serialize_mr(mr) == text


def test_slot_name_variants_resolve():
    for text in ("name[Aromi], customer_rating[low]", "name[Aromi], customerRating[low]"):
        mr = parse_mr(text)
        assert mr.get(SlotName.CUSTOMER_RATING) == "low"
        assert serialize_mr(mr) == text


def test_empty_string_is_empty_mr():
    assert parse_mr("") == MeaningRepresentation()
    assert serialize_mr(MeaningRepresentation()) == ""


@pytest.mark.parametrize("text, message, offset", [
    ("name[The Eagle", "Missing bracket", 0),
    ("name[The Eagle], colour[red]", "Unknown slot name", 17),
    ("name[Café], colour[red]", "Unknown slot name", 13),
    ("name[]", "Empty value", 0),
    ("name[Zizzi], <emph> <contrast>[priceRange familyFriendly]", "cannot be emphasized", 13),
    ("name[Zizzi], <sarcasm>[priceRange familyFriendly]", "Unknown annotation", 13),
])
def test_parse_errors_report_item_and_byte_offset(text, message, offset):
    with pytest.raises(MRParseError) as info:
        parse_mr(text)
    assert message in str(info.value)
    assert info.value.offset == offset


def test_structural_errors():
    with pytest.raises(MRStructureError):
        parse_mr("name[Zizzi], name[Cotto]")
    with pytest.raises(MRStructureError):
        parse_mr("name[Zizzi], priceRange[cheap], <contrast>[priceRange familyFriendly]")
    with pytest.raises(MRStructureError):
        parse_mr("name[Zizzi], priceRange[cheap], familyFriendly[yes], <contrast>[priceRange priceRange]")
    with pytest.raises(MRStructureError):
        parse_mr("name[Zizzi], food[English], area[riverside], <contrast>[food area]")


def test_canonical_key_ignores_order_and_annotations():
    a = parse_mr("name[Zizzi], <emph> priceRange[cheap], familyFriendly[yes]")
    b = parse_mr("familyFriendly[yes], name[Zizzi],  priceRange[cheap]")
    assert canonical_key(a) == canonical_key(b)


def test_corpus_validity_bounds():
    assert not mr_is_corpus_valid(parse_mr("name[Zizzi], food[English]"))
    assert mr_is_corpus_valid(parse_mr(WILDWOOD_MR))


@st.composite
def meaning_representations(draw):
    content = [slot for slot in SlotName if slot not in (SlotName.NAME, SlotName.NEAR)]
    chosen = draw(st.lists(st.sampled_from(content), unique=True, max_size=len(content)))
    slots = [Slot(name=SlotName.NAME, value=draw(st.sampled_from(NAMES)))]
    for slot in chosen:
        slots.append(Slot(name=slot, value=draw(st.sampled_from(ONTOLOGY[slot]))))
    if draw(st.booleans()):
        slots.append(Slot(name=SlotName.NEAR, value=draw(st.sampled_from(NAMES))))
    slots = draw(st.permutations(slots))
    emphasis = draw(st.sets(st.integers(min_value=0, max_value=len(slots) - 1)))

    relation = None
    scalar = [s.name for s in slots if s.name in (SlotName.PRICE_RANGE, SlotName.CUSTOMER_RATING,
                                                  SlotName.FAMILY_FRIENDLY)]
    if len(scalar) >= 2 and draw(st.booleans()):
        pair = draw(st.permutations(scalar))[:2]
        relation = Relation(kind=draw(st.sampled_from(list(RelationKind))), slots=(pair[0], pair[1]))
    return MeaningRepresentation(slots=tuple(slots), emphasis=frozenset(emphasis), relation=relation)


@given(meaning_representations())
def test_serialize_then_parse_is_identity(mr):
    assert parse_mr(serialize_mr(mr)) == mr


@given(meaning_representations())
def test_canonical_key_is_stable_under_reserialization(mr):
    assert canonical_key(parse_mr(serialize_mr(mr))) == canonical_key(mr.strip_annotations())
