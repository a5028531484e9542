"""
Default lexicons for the text analyzer, the discourse-marker detector and the slot aligner.

Every list here can be overridden from the JSON config file (see config.py).
Multiword entries are matched as token sequences, case-insensitively.
"""

# Tokens ending in "-ing" that are never gerunds/participles
ING_EXCLUSIONS = (
    "rating", "ratings", "king", "kings", "pudding", "wedding", "something", "anything",
    "nothing", "everything", "evening", "morning", "ceiling", "building", "clothing",
    "dumpling", "dumplings", "during", "dining", "seating", "setting", "surroundings",
    "ending", "beginning", "lightning", "lighting", "outing", "parking", "housing",
    "shopping", "offerings", "pricing", "wording", "stuffing",
    "icing", "filling", "topping", "toppings", "ring", "wing", "wings", "thing", "things",
    "sing", "spring", "string", "bring", "sibling", "siblings", "darling", "duckling",
    "herring", "inning", "awning", "feeling", "meeting", "cooking", "booking", "bedding",
    "interesting", "amazing", "outstanding", "appealing", "charming", "disappointing",
)

# Determiners that turn a following "-ing" word into a noun ("the pricing", "their cooking")
ING_NOUN_DETERMINERS = (
    "a", "an", "the", "this", "that", "its", "their", "our", "your", "his", "her", "my",
)

ABBREVIATIONS = ("Mr.", "Mrs.", "Dr.", "St.", "vs.", "e.g.", "i.e.")

MODAL_VERBS = ("will", "would", "can", "could", "shall", "should", "may", "might", "must")

# CONTRAST_MARKERS
CONTRAST_MARKERS = (
    "but", "however", "although", "though", "despite", "yet", "even if", "even though",
    "nevertheless", "nonetheless", "in spite of", "albeit", "on the other hand",
)

# Markers that are contrastive only when the joined clauses differ in positivity
AMBIVALENT_MARKERS = ("while", "whilst")

SUBORDINATING_CONJUNCTIONS = (
    "if", "while", "whilst", "since", "because", "when", "whereas", "unless", "as",
)

# "as" is a conjunction only in front of a clause subject
AS_CLAUSE_SUBJECTS = ("it", "they", "you", "we", "he", "she", "i", "there")

RELATIVE_PRONOUNS = ("which", "who", "whose", "where", "whom")

# Preceding tokens that rule out a relative reading of "that"
THAT_BLOCKERS = (
    "so", "such", "is", "was", "are", "were", "be", "say", "says", "said", "know", "think",
    "believe", "now", "than", "and", "but", "or", "of", "at", "in", "to", "all", "like",
    "not", "sure", "mean", "means", "given", "note", "find", "that",
)

# Tokens that can open the clause after a relative "that"
VERB_LIKE = (
    "is", "are", "was", "were", "has", "have", "had", "serves", "serve", "served", "offers",
    "offer", "offered", "provides", "provide", "sells", "sell", "specializes", "specialises",
    "caters", "cater", "welcomes", "welcome", "allows", "allow", "features", "boasts",
    "costs", "gets", "got", "received", "receives", "does", "do", "doesn't", "isn't",
    "aren't", "also", "only", "always", "isn’t", "doesn’t", "lies", "sits", "includes",
    "charges", "brings", "makes", "caters", "accepts", "accommodates", "attracts",
)

PERSONAL_PRONOUNS = ("it", "they", "you", "we", "he", "she", "i")

EXISTENTIAL_EXPLETIVES = ("there",)
EXISTENTIAL_CONTRACTIONS = ("there's", "there’s")
BE_FORMS = ("is", "are", "was", "were", "'s", "isn't", "aren't", "wasn't", "be", "exists", "exist")

IMPERATIVE_VERBS = (
    "try", "visit", "come", "bring", "don't", "don’t", "do not", "stop", "check", "go",
    "enjoy", "head", "grab", "book", "pop", "take", "treat", "consider", "look",
)

AGGREGATION_MARKERS = ("also", "both", "neither", "nor", "as well as", "as well")

QUANTITATIVE_ADJECTIVES = (
    "low", "high", "average", "moderate", "good", "poor", "great", "excellent", "decent",
    "reasonable", "cheap", "affordable", "mediocre", "fair",
)

# Head nouns of the scalar slots; value is the scalar slot they stand for
SCALAR_HEAD_NOUNS = {
    "customer rating": "rating",
    "customer ratings": "rating",
    "rating": "rating",
    "ratings": "rating",
    "price range": "price",
    "price": "price",
    "prices": "price",
    "pricing": "price",
}

FRONTING_PREPOSITIONS = (
    "in", "at", "near", "with", "for", "on", "by", "along", "beside", "next", "close",
    "within", "across", "off", "among", "around", "from", "between", "down", "up",
    "alongside", "opposite", "outside", "inside", "just", "right", "located", "situated",
)

FRONTING_PARTICIPLES = (
    "located", "situated", "based", "rated", "priced", "found", "set", "nestled", "positioned",
    "known", "offered", "serving", "boasting", "offering", "providing", "featuring",
)

FRONTING_ADJECTIVES = (
    "family-friendly", "kid-friendly", "child-friendly", "cheap", "inexpensive", "affordable",
    "expensive", "pricey", "low-priced", "high-priced", "moderately", "highly", "popular",
    "low-rated", "high-rated", "well-rated", "poorly", "average", "reasonably",
)

SPECIFICATIONAL_COPULAS = ("is", "are", "was")

# First tokens that rule out a specificational reading of "<phrase> is <name>"
NON_SPECIFICATIONAL_SUBJECTS = (
    "there", "it", "this", "that", "which", "they", "he", "she", "here", "its", "what",
)

# Tokens that end a fronted phrase
FRONTING_STOPS = ("is", "are", "was", "were", "lies", "sits", "you", "there", "it", "we")

APPOSITION_ARTICLES = ("a", "an", "the")

# Tokens that cannot open or continue an appositive phrase
APPOSITION_BLOCKERS = (
    "which", "who", "where", "that", "is", "are", "was", "were", "has", "have", "had",
    "serves", "offers", "provides", "sells", "and", "but", "it", "they", "located",
    "situated", "near", "in", "at", "with", "by", "you", "we", "there",
)

# Realization phrases per (slot, value), in addition to the value itself
VALUE_LEXICON = {
    "name": {},
    "near": {},
    "eatType": {
        "coffee shop": ["coffee-shop", "coffeeshop"],
    },
    "food": {
        "English": ["British", "English breakfast"],
        "Italian": ["pasta", "pizza", "pizzeria"],
        "French": ["French cuisine"],
        "Chinese": ["Chinese cuisine"],
        "Indian": ["curry", "curries"],
        "Japanese": ["sushi"],
        "Fast food": ["fast-food", "burgers", "burger"],
    },
    "area": {
        "city centre": [
            "city center", "centre of the city", "center of the city", "centre of town",
            "center of town", "town centre", "town center", "city-centre", "downtown",
            "centre", "center", "central",
        ],
        "riverside": [
            "river side", "by the river", "near the river", "along the river", "river",
            "waterfront", "riverfront", "river-side",
        ],
    },
    "priceRange": {
        "cheap": [
            "cheap", "cheaply", "inexpensive", "affordable", "low price", "low prices",
            "low-priced", "low priced", "low cost", "low-cost", "prices low", "budget",
            "less than £20", "under £20", "bargain", "reasonably priced", "low price range",
        ],
        "less than £20": [
            "cheap", "cheaply", "inexpensive", "affordable", "low price", "low prices",
            "low-priced", "low priced", "low cost", "low-cost", "prices low", "budget",
            "under £20", "below £20", "less than 20", "under 20", "low price range",
            "price range is low", "prices are low",
        ],
        "moderate": [
            "moderately", "moderately priced", "moderate price", "moderate prices",
            "moderate price range", "average price", "average priced", "average-priced",
            "average prices", "mid-priced", "mid price", "mid-range", "reasonably priced",
            "reasonable prices", "fairly priced", "£20-25",
        ],
        "£20-25": [
            "£20 to £25", "£20-£25", "20-25", "20 to 25", "twenty to twenty five",
            "twenty to twenty-five", "moderately priced", "moderate price", "moderate prices",
            "moderate price range", "average price", "average priced", "average-priced",
            "average prices", "mid-range", "mid-priced",
        ],
        "high": [
            "high price", "high prices", "high-priced", "high priced", "priced high",
            "expensive", "pricey", "pricy", "high-end", "high end", "costly",
            "high price range", "price range is high", "prices are high", "more than £30",
            "over £30",
        ],
        "more than £30": [
            "over £30", "above £30", "more than 30", "over 30", "£30 plus", "£30+",
            "expensive", "pricey", "pricy", "high price", "high prices", "high-priced",
            "high priced", "high-end", "high end", "costly", "high price range",
            "price range is high", "prices are high",
        ],
    },
    "customerRating": {
        "low": [
            "low rating", "low ratings", "low customer rating", "low customer ratings",
            "low-rated", "low rated", "rated low", "rated lowly", "poorly rated", "poor rating",
            "poor customer rating", "badly rated", "rating is low", "rating of low",
            "1 out of 5", "one star", "1 star", "1-star", "one-star",
        ],
        "1 out of 5": [
            "one out of five", "1 out of five", "one out of 5", "1 star", "one star",
            "1-star", "one-star", "1 stars", "rated 1", "rating of 1", "rated one",
            "1/5", "low rating", "low customer rating", "low rated", "low-rated", "poorly rated",
            "rated low",
        ],
        "average": [
            "average rating", "average customer rating", "average ratings", "rated average",
            "average rated", "average-rated", "averagely rated", "rating is average",
            "rating of average", "average customer ratings", "3 out of 5", "three star",
            "3 star", "3-star",
        ],
        "3 out of 5": [
            "three out of five", "3 out of five", "three out of 5", "3 star", "three star",
            "3-star", "three-star", "3 stars", "rated 3", "rating of 3", "rated three",
            "3/5", "average rating", "average customer rating", "rated average",
        ],
        "high": [
            "high rating", "high ratings", "high customer rating", "high customer ratings",
            "highly rated", "high-rated", "high rated", "rated high", "rated highly",
            "well rated", "well-rated", "excellent rating", "rating is high", "rating of high",
            "5 out of 5", "five star", "5 star", "5-star", "five-star",
        ],
        "5 out of 5": [
            "five out of five", "5 out of five", "five out of 5", "5 star", "five star",
            "5-star", "five-star", "5 stars", "five stars", "rated 5", "rating of 5",
            "rated five", "5/5", "highly rated", "high rating", "high customer rating",
            "high-rated", "rated highly", "top rated", "top-rated",
        ],
    },
    "familyFriendly": {
        "yes": [
            "family friendly", "kid friendly", "kids friendly", "child friendly",
            "children friendly", "family-oriented", "family oriented", "families",
            "family", "for the whole family", "children welcome", "kids welcome",
            "good for kids", "great for kids", "suitable for children", "welcomes children",
            "kid-friendly", "child-friendly",
        ],
        "no": [
            "not family friendly", "non family friendly", "adults only", "adult only",
            "don't bring your family", "don't bring the kids", "don't bring your kids",
            "no kids", "no children", "not for families", "not kid friendly",
            "not child friendly", "unsuitable for families", "not suitable for families",
            "not suitable for children", "adult-only", "adults-only", "not family-oriented",
            "isn't family friendly", "not a family",
        ],
    },
}

# Values that must never be matched verbatim because they are common words
NON_VERBATIM_VALUES = {
    "priceRange": ("cheap", "moderate", "high"),
    "customerRating": ("low", "average", "high"),
    "familyFriendly": ("yes", "no"),
}

NEGATORS = ("not", "no", "non", "never", "nor", "without")
