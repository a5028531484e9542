"""
Tokenization, sentence segmentation and coarse lexical tagging.

No parser is involved: every downstream rule works from these tokens, their
coarse tags and their positions.
"""
import re
from typing import FrozenSet, Iterable, List, Optional, Sequence, Tuple

from nltk.tokenize import RegexpTokenizer

from ..config import TextSettings
from ..schemas.analysis import AnalyzedUtterance, Token, TokenTag

_CURRENCY = "£$€"
_NUMBER = rf"[{_CURRENCY}]?\d+(?:[.,]\d+)*(?:-[{_CURRENCY}]?\d+(?:[.,]\d+)*)?"
_DIGIT_WORD = r"\d+-[^\W\d_]+(?:-[^\W\d_]+)*"
_WORD = r"[^\W_]+(?:[-'’][^\W_]+)*"
_PUNCT = r"\.{2,}|[!?]+|[^\w\s]"

# Token shapes in order of precedence; anything else is OTHER
_SHAPES = (
    (re.compile(_DIGIT_WORD), TokenTag.NUMBER),
    (re.compile(_NUMBER), TokenTag.NUMBER),
    (re.compile(_WORD), TokenTag.WORD),
    (re.compile(_PUNCT), TokenTag.PUNCT),
)

_TERMINALS = frozenset(".!?")
_CLOSERS = frozenset("\"'”’)]»")
_VOWELS = frozenset("aeiouy")


def normalize_token(surface: str) -> str:
    """Lower-case form used for every lexicon lookup"""
    return surface.lower().replace("’", "'")


def is_terminal(token: Token) -> bool:
    return token.tag == TokenTag.PUNCT and bool(token.surface) and set(token.surface) <= _TERMINALS


class TextAnalyzer:
    """Deterministic text analysis over immutable lexicons"""

    def __init__(self, settings: Optional[TextSettings] = None):
        settings = settings or TextSettings()
        self.ing_exclusions: FrozenSet[str] = frozenset(normalize_token(w) for w in settings.ing_exclusions)
        self.ing_determiners: FrozenSet[str] = frozenset(normalize_token(w) for w in settings.ing_noun_determiners)
        self.modal_verbs: FrozenSet[str] = frozenset(normalize_token(w) for w in settings.modal_verbs)
        self.abbreviations: FrozenSet[str] = frozenset(a.lower() for a in settings.abbreviations if a)
        self.word_tokenizer = RegexpTokenizer(self._pattern(self.abbreviations))

    @staticmethod
    def _pattern(abbreviations: Iterable[str]) -> str:
        ordered = sorted(abbreviations, key=lambda a: (-len(a), a))
        alternatives = []
        if ordered:
            joined = "|".join(re.escape(a) for a in ordered)
            alternatives.append(rf"(?<!\w)(?i:{joined})")
        alternatives += [_DIGIT_WORD, _NUMBER, _WORD, _PUNCT, r"\S"]
        return "|".join(f"(?:{a})" for a in alternatives)

    def _lexical_tag(self, surface: str) -> TokenTag:
        if surface.lower() in self.abbreviations:
            return TokenTag.WORD
        for pattern, tag in _SHAPES:
            if pattern.fullmatch(surface):
                if tag == TokenTag.WORD and ("'" in surface or "’" in surface):
                    return TokenTag.CONTRACTION
                return tag
        return TokenTag.OTHER

    def tokenize(self, text: str) -> List[Token]:
        return [
            Token(text[start:end], start, end, self._lexical_tag(text[start:end]))
            for start, end in self.word_tokenizer.span_tokenize(text)
        ]

    def _is_ing(self, tokens: Sequence[Token], index: int) -> bool:
        token = tokens[index]
        lower = normalize_token(token.surface)
        if not lower.endswith("ing") or len(lower) < 5:
            return False
        if not _VOWELS & set(lower[:-3]):
            return False
        if lower in self.ing_exclusions or lower.split("-")[-1] in self.ing_exclusions:
            return False
        previous = tokens[index - 1] if index > 0 else None
        if previous is not None and normalize_token(previous.surface) in self.ing_determiners:
            return False
        sentence_initial = previous is None or is_terminal(previous)
        # Capitalized mid-sentence "-ing" words are names ("The Dumpling Tree")
        if token.surface[0].isupper() and not sentence_initial:
            return False
        return True

    def tag_tokens(self, tokens: Sequence[Token]) -> List[Token]:
        tagged = []
        for i, token in enumerate(tokens):
            tag = token.tag
            if tag in (TokenTag.WORD, TokenTag.CONTRACTION):
                lower = normalize_token(token.surface)
                if lower in self.modal_verbs:
                    tag = TokenTag.MODAL
                elif tag == TokenTag.CONTRACTION and lower.endswith(("'ll", "'d")):
                    tag = TokenTag.MODAL
                elif tag == TokenTag.WORD and self._is_ing(tokens, i):
                    tag = TokenTag.VERB_ING
            tagged.append(token._replace(tag=tag) if tag != token.tag else token)
        return tagged

    def split_sentences(self, tokens: Sequence[Token]) -> List[Tuple[int, int]]:
        sentences = []
        start = 0
        i = 0
        while i < len(tokens):
            if is_terminal(tokens[i]):
                end = i + 1
                while end < len(tokens) and tokens[end].tag == TokenTag.PUNCT and tokens[end].surface in _CLOSERS:
                    end += 1
                sentences.append((start, end))
                start = end
                i = end
                continue
            i += 1
        if start < len(tokens):
            sentences.append((start, len(tokens)))
        return sentences

    def analyze(self, text: str) -> AnalyzedUtterance:
        tokens = self.tag_tokens(self.tokenize(text))
        return AnalyzedUtterance(text=text, tokens=tuple(tokens), sentences=tuple(self.split_sentences(tokens)))


_default_analyzer: Optional[TextAnalyzer] = None


def default_analyzer() -> TextAnalyzer:
    global _default_analyzer
    if _default_analyzer is None:
        _default_analyzer = TextAnalyzer()
    return _default_analyzer


def tokenize(text: str) -> List[Token]:
    return default_analyzer().tokenize(text)


def tag_tokens(tokens: Sequence[Token]) -> List[Token]:
    return default_analyzer().tag_tokens(tokens)


def split_sentences(tokens: Sequence[Token]) -> List[Tuple[int, int]]:
    return default_analyzer().split_sentences(tokens)


def analyze(text: str) -> AnalyzedUtterance:
    return default_analyzer().analyze(text)
