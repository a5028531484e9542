"""Utterances and MRs shared across test modules."""

WILDWOOD_MR = (
    "name[Wildwood], eatType[coffee shop], food[English], priceRange[moderate], "
    "customer rating[1 out of 5], near[Ranch]"
)
WILDWOOD_EMPHASIZED_MR = (
    "name[Wildwood], <emph> eatType[coffee shop], <emph> food[English], priceRange[moderate], "
    "customer rating[1 out of 5], <emph> near[Ranch]"
)
WILDWOOD_EMPHASIS = (
    "There is an English coffee shop near Ranch called Wildwood. "
    "It has a moderate price range and a customer rating of 1 out of 5."
)
WILDWOOD_PLAIN = (
    "Wildwood is a coffee shop providing English food in the moderate price range. "
    "It is located near Ranch."
)

RICE_BOAT_MR = (
    "name[The Rice Boat], eatType[restaurant], food[Chinese], area[riverside], "
    "customer rating[5 out of 5], familyFriendly[no]"
)
RICE_BOAT_CONTRAST = (
    "The Rice Boat is a Chinese restaurant in the riverside area. "
    "It has a customer rating of 5 out of 5 but is not family friendly."
)
RICE_BOAT_SPLIT = (
    "The Rice Boat has a customer rating of 5 out of 5. It is not family friendly."
)

STRADA_MR = (
    "name[Strada], eatType[restaurant], priceRange[cheap], customer rating[low], food[English], "
    "familyFriendly[no], near[Rainbow Vegetarian Café]"
)
STRADA_CONCESSION = (
    "Strada is a low price restaurant located near Rainbow Vegetarian Café serving English food "
    "with a low customer rating but not family-friendly."
)

# (category, MR, utterance): one example per discourse category
CATEGORY_EXAMPLES = [
    (
        "aggregation",
        "name[Fitzbillies], eatType[coffee shop], priceRange[cheap], customer rating[5 out of 5], "
        "area[city centre], familyFriendly[yes]",
        "Located in the city centre is a family-friendly coffee shop called Fitzbillies. "
        "It is both inexpensive and highly rated.",
    ),
    ("contrast", RICE_BOAT_MR, RICE_BOAT_CONTRAST),
    (
        "fronting",
        "name[Midsummer House], food[Italian], priceRange[high], customer rating[1 out of 5], near[All Bar One]",
        "With a 1 out of 5 rating Midsummer House serves Italian cuisine in the high price range, "
        "found not far from All Bar One.",
    ),
    (
        "subordination",
        "name[Wildwood], eatType[pub], priceRange[cheap], customer rating[5 out of 5]",
        "Wildwood pub is serving 5 star food while keeping their prices low.",
    ),
    (
        "existential",
        "name[Alimentum], eatType[restaurant], food[Japanese], priceRange[moderate], area[city centre], "
        "familyFriendly[no]",
        "In the city center, there is an average priced, non-family-friendly, Japanese restaurant "
        "called Alimentum.",
    ),
    (
        "imperative_modal",
        "name[Fitzbillies], eatType[coffee shop], food[Chinese], priceRange[cheap], "
        "customer rating[average], area[riverside], familyFriendly[no]",
        "In Riverside, you'll find Fitzbillies. It is a passable, affordable coffee shop which "
        "interestingly serves Chinese food. Don't bring your family though.",
    ),
]
