from enum import Enum
from typing import NamedTuple, Optional, Tuple

from pydantic import BaseModel, ConfigDict


class TokenTag(str, Enum):
    WORD = "WORD"
    VERB_ING = "VERB-ING"
    MODAL = "MODAL"
    CONTRACTION = "CONTRACTION"
    PUNCT = "PUNCT"
    NUMBER = "NUMBER"
    OTHER = "OTHER"


class Token(NamedTuple):
    surface: str
    start: int
    end: int
    tag: TokenTag

    @property
    def lower(self) -> str:
        return self.surface.lower()


class Span(NamedTuple):
    """Half-open character span [start, end) into an utterance"""
    start: int
    end: int

    def overlaps(self, other: "Span") -> bool:
        return self.start < other.end and other.start < self.end


class AnalyzedUtterance(BaseModel):
    model_config = ConfigDict(frozen=True)

    text: str
    tokens: Tuple[Token, ...] = ()
    sentences: Tuple[Tuple[int, int], ...] = ()  # half-open token-index ranges

    def sentence_of(self, token_index: int) -> Optional[int]:
        for i, (start, end) in enumerate(self.sentences):
            if start <= token_index < end:
                return i
        return None

    def sentence_of_offset(self, offset: int) -> Optional[int]:
        """Sentence containing the first token that ends after `offset`"""
        index = self.token_at(offset)
        return None if index is None else self.sentence_of(index)

    def token_at(self, offset: int) -> Optional[int]:
        for i, token in enumerate(self.tokens):
            if token.end > offset:
                return i
        return None

    def sentence_count(self) -> int:
        return len(self.sentences)
