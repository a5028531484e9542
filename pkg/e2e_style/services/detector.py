"""
Rule-based detection of discourse markers.

Each marker subset is detected by one MarkerRule working on tokens, coarse
tags and the position of the restaurant name. Rules run in a fixed
precedence order and a token claimed by one subset is never counted again.
"""
import logging
from abc import ABC, abstractmethod
from typing import Dict, Iterable, List, Mapping, NamedTuple, Optional, Set, Tuple, Union

from ..config import DetectorLexicons
from ..core.errors import OntologyError
from ..core.ontology import RELATION_SLOTS, SlotName, positivity
from ..core.text import TextAnalyzer, default_analyzer, is_terminal, normalize_token
from ..schemas.alignment import AlignedSpan, Alignment, SlotAlignment
from ..schemas.analysis import AnalyzedUtterance, Span, Token, TokenTag
from ..schemas.mr import MeaningRepresentation
from ..schemas.style import MarkerSubset, StyleCategory, StyleProfile
from .aligner import SlotAligner

logger = logging.getLogger(__name__)

APPOSITION_WINDOW = 12


class Hit(NamedTuple):
    """Token range [start, end) of a marker; `trigger` is the token that licenses it"""
    start: int
    end: int
    trigger: int


class Flank(NamedTuple):
    entry: SlotAlignment
    span: AlignedSpan
    distance: int


def token_range(tokens: Tuple[Token, ...], start: int, end: int) -> Optional[Tuple[int, int]]:
    """Indices of the first and last token overlapping the character span"""
    first = last = None
    for i, token in enumerate(tokens):
        if token.end <= start:
            continue
        if token.start >= end:
            break
        if first is None:
            first = i
        last = i
    return None if first is None else (first, last)


def sentence_bounds(utterance: AnalyzedUtterance, index: int) -> Tuple[int, int]:
    sentence = utterance.sentence_of(index)
    return utterance.sentences[sentence] if sentence is not None else (0, len(utterance.tokens))


def nearest_flanks(utterance: AnalyzedUtterance, alignment: Alignment, first: int, last: int,
                   allowed: Optional[Iterable[SlotName]] = None) -> Tuple[Optional[Flank], Optional[Flank]]:
    """Closest aligned slot realization before and after tokens [first, last], within their sentence"""
    allowed = frozenset(allowed) if allowed is not None else None
    start, end = sentence_bounds(utterance, first)
    before: Optional[Flank] = None
    after: Optional[Flank] = None
    for entry in alignment.slots:
        if allowed is not None and entry.slot not in allowed:
            continue
        for span in entry.spans:
            covered = token_range(utterance.tokens, span.start, span.end)
            if covered is None:
                continue
            t0, t1 = covered
            if start <= t0 and t1 < first:
                distance = first - t1
                if before is None or (distance, entry.position) < (before.distance, before.entry.position):
                    before = Flank(entry, span, distance)
            elif t0 > last and t1 < end:
                distance = t0 - last
                if after is None or (distance, entry.position) < (after.distance, after.entry.position):
                    after = Flank(entry, span, distance)
    return before, after


class PhraseSet:
    """Case-insensitive set of single- or multi-token phrases"""

    def __init__(self, phrases: Iterable[str]):
        self._phrases: Dict[str, List[Tuple[str, ...]]] = {}
        for phrase in phrases:
            words = tuple(normalize_token(w) for w in phrase.split())
            if words:
                self._phrases.setdefault(words[0], []).append(words)
        for candidates in self._phrases.values():
            candidates.sort(key=len, reverse=True)

    def match_at(self, lowers: List[str], index: int) -> int:
        """Length of the longest phrase starting at `index`, 0 when none"""
        if index >= len(lowers):
            return 0
        for words in self._phrases.get(lowers[index], ()):
            if tuple(lowers[index:index + len(words)]) == words:
                return len(words)
        return 0


class DetectionContext:
    """Per-utterance state shared by the rules"""

    def __init__(self, utterance: AnalyzedUtterance, mr: Optional[MeaningRepresentation],
                 alignment: Optional[Alignment]):
        self.utterance = utterance
        self.tokens = utterance.tokens
        self.lowers = [normalize_token(t.surface) for t in utterance.tokens]
        self.mr = mr
        self.alignment = alignment
        self.claimed: Set[int] = set()
        self.masked: Set[int] = set()
        # token ranges of every realization of the name slot, in text order
        self.name_ranges: List[Tuple[int, int]] = []

        if alignment is not None:
            for entry in alignment.slots:
                if entry.slot not in (SlotName.NAME, SlotName.NEAR):
                    continue
                for span in entry.spans:
                    covered = token_range(self.tokens, span.start, span.end)
                    if covered is None:
                        continue
                    self.masked.update(range(covered[0], covered[1] + 1))
                    if entry.slot == SlotName.NAME:
                        self.name_ranges.append(covered)
        self.name_ranges.sort()

    @property
    def name_starts(self) -> List[int]:
        return [first for first, _ in self.name_ranges]

    def first_content_token(self, start: int, end: int) -> Optional[int]:
        for i in range(start, end):
            if self.tokens[i].tag != TokenTag.PUNCT:
                return i
        return None

    def truncate_at_claimed(self, start: int, end: int) -> int:
        for i in range(start, end):
            if i in self.claimed:
                return i
        return end

    def positivity_differs(self, index: int) -> bool:
        """True when the nearest scalar/boolean slots around `index` differ in positivity"""
        if self.alignment is None:
            return False
        before, after = nearest_flanks(self.utterance, self.alignment, index, index, allowed=RELATION_SLOTS)
        if before is None or after is None or before.entry.slot == after.entry.slot:
            return False
        try:
            return positivity(before.entry.slot, before.entry.value) != positivity(after.entry.slot, after.entry.value)
        except OntologyError:
            return False


class MarkerRule(ABC):
    """Detector of one marker subset"""

    subset: MarkerSubset

    @abstractmethod
    def find(self, ctx: DetectionContext) -> List[Hit]:
        """Candidate hits; the engine drops those that touch claimed tokens"""
        pass


class ContrastRule(MarkerRule):
    subset = MarkerSubset.CONTRAST_MARKERS

    def __init__(self, markers: Iterable[str], ambivalent: Iterable[str]):
        self.markers = PhraseSet(markers)
        self.ambivalent = frozenset(normalize_token(w) for w in ambivalent)

    def find(self, ctx: DetectionContext) -> List[Hit]:
        hits = []
        for i, lower in enumerate(ctx.lowers):
            length = self.markers.match_at(ctx.lowers, i)
            if length:
                hits.append(Hit(i, i + length, i))
            elif lower in self.ambivalent and ctx.positivity_differs(i):
                hits.append(Hit(i, i + 1, i))
        return hits


class SubordinateConjunctionRule(MarkerRule):
    subset = MarkerSubset.SUBORD_CONJ

    def __init__(self, conjunctions: Iterable[str], as_subjects: Iterable[str]):
        self.conjunctions = frozenset(normalize_token(w) for w in conjunctions)
        self.as_subjects = frozenset(normalize_token(w) for w in as_subjects)

    def find(self, ctx: DetectionContext) -> List[Hit]:
        hits = []
        for i, lower in enumerate(ctx.lowers):
            if lower not in self.conjunctions:
                continue
            if lower == "as":
                following = ctx.lowers[i + 1] if i + 1 < len(ctx.lowers) else None
                if following not in self.as_subjects:
                    continue
            hits.append(Hit(i, i + 1, i))
        return hits


class RelativePronounRule(MarkerRule):
    subset = MarkerSubset.SUBORD_RELPRON

    def __init__(self, pronouns: Iterable[str], that_blockers: Iterable[str],
                 verb_like: Iterable[str], personal_pronouns: Iterable[str]):
        self.pronouns = frozenset(normalize_token(w) for w in pronouns)
        self.that_blockers = frozenset(normalize_token(w) for w in that_blockers)
        self.clause_openers = frozenset(normalize_token(w) for w in verb_like) | \
            frozenset(normalize_token(w) for w in personal_pronouns)

    def _relative_that(self, ctx: DetectionContext, i: int, sentence_end: int) -> bool:
        previous = ctx.tokens[i - 1]
        if previous.tag == TokenTag.PUNCT or ctx.lowers[i - 1] in self.that_blockers:
            return False
        if i + 1 >= sentence_end:
            return False
        following = ctx.tokens[i + 1]
        return ctx.lowers[i + 1] in self.clause_openers or following.tag == TokenTag.MODAL

    def find(self, ctx: DetectionContext) -> List[Hit]:
        hits = []
        for i, lower in enumerate(ctx.lowers):
            start, end = sentence_bounds(ctx.utterance, i)
            if i == start:
                continue
            if lower in self.pronouns or (lower == "that" and self._relative_that(ctx, i, end)):
                hits.append(Hit(i, i + 1, i))
        return hits


class ExistentialRule(MarkerRule):
    subset = MarkerSubset.EXISTENTIAL

    def __init__(self, expletives: Iterable[str], contractions: Iterable[str], be_forms: Iterable[str]):
        self.expletives = frozenset(normalize_token(w) for w in expletives)
        self.contractions = frozenset(normalize_token(w) for w in contractions)
        self.be_forms = frozenset(normalize_token(w) for w in be_forms)

    def find(self, ctx: DetectionContext) -> List[Hit]:
        hits = []
        for i, lower in enumerate(ctx.lowers):
            if lower in self.contractions:
                hits.append(Hit(i, i + 1, i))
            elif lower in self.expletives and i + 1 < len(ctx.lowers) and ctx.lowers[i + 1] in self.be_forms:
                hits.append(Hit(i, i + 2, i))
        return hits


class ModalRule(MarkerRule):
    subset = MarkerSubset.MODAL

    def find(self, ctx: DetectionContext) -> List[Hit]:
        return [Hit(i, i + 1, i) for i, token in enumerate(ctx.tokens) if token.tag == TokenTag.MODAL]


class ImperativeRule(MarkerRule):
    subset = MarkerSubset.IMPERATIVE

    def __init__(self, verbs: Iterable[str]):
        self.verbs = PhraseSet(verbs)

    def find(self, ctx: DetectionContext) -> List[Hit]:
        hits = []
        for start, end in ctx.utterance.sentences:
            first = ctx.first_content_token(start, end)
            if first is None:
                continue
            if ctx.lowers[first] == "please":
                first += 1
            length = self.verbs.match_at(ctx.lowers, first) if first < end else 0
            if length:
                hits.append(Hit(first, first + length, first))
        return hits


class AggregationLexicalRule(MarkerRule):
    subset = MarkerSubset.AGG_LEXICAL

    def __init__(self, markers: Iterable[str], adjectives: Iterable[str], head_nouns: Mapping[str, str]):
        self.markers = PhraseSet(markers)
        self.adjectives = frozenset(normalize_token(w) for w in adjectives)
        self.head_nouns = PhraseSet(head_nouns)
        self.head_kind = {tuple(normalize_token(w) for w in k.split()): v for k, v in head_nouns.items()}

    def _head(self, lowers: List[str], index: int) -> Tuple[int, Optional[str]]:
        length = self.head_nouns.match_at(lowers, index)
        if not length:
            return 0, None
        return length, self.head_kind.get(tuple(lowers[index:index + length]))

    def _shared_adjective(self, lowers: List[str], index: int) -> int:
        """End of "<adjective> <head noun> and <other head noun>", 0 when absent"""
        first_len, first_kind = self._head(lowers, index + 1)
        if not first_len:
            return 0
        conjunction = index + 1 + first_len
        if conjunction >= len(lowers) or lowers[conjunction] != "and":
            return 0
        second_len, second_kind = self._head(lowers, conjunction + 1)
        if not second_len or second_kind == first_kind:
            return 0
        return conjunction + 1 + second_len

    def find(self, ctx: DetectionContext) -> List[Hit]:
        hits = []
        for i, lower in enumerate(ctx.lowers):
            length = self.markers.match_at(ctx.lowers, i)
            if length:
                hits.append(Hit(i, i + length, i))
            elif lower in self.adjectives:
                end = self._shared_adjective(ctx.lowers, i)
                if end:
                    hits.append(Hit(i, end, i))
        return hits


class FrontingRule(MarkerRule):
    subset = MarkerSubset.FRONTING

    def __init__(self, lexicons: DetectorLexicons):
        self.openers = frozenset(normalize_token(w) for w in (
            *lexicons.fronting_prepositions, *lexicons.fronting_participles, *lexicons.fronting_adjectives))
        self.stops = frozenset(normalize_token(w) for w in lexicons.fronting_stops)
        self.copulas = frozenset(normalize_token(w) for w in lexicons.specificational_copulas)
        self.non_specificational = frozenset(normalize_token(w) for w in lexicons.non_specificational_subjects)

    def _fronted_phrase(self, ctx: DetectionContext, first: int, name_at: int) -> Optional[Hit]:
        if ctx.lowers[first] not in self.openers and ctx.tokens[first].tag != TokenTag.VERB_ING:
            return None
        end = first + 1
        while end < name_at:
            if ctx.tokens[end].surface == "," or ctx.lowers[end] in self.stops or end in ctx.claimed:
                break
            end += 1
        return Hit(first, end, first)

    def _specificational(self, ctx: DetectionContext, first: int, name_at: int) -> Optional[Hit]:
        """Specificational copula: <phrase> is <name>"""
        copula = name_at - 1
        if ctx.lowers[first] in self.non_specificational:
            return None
        if copula <= first or ctx.lowers[copula] not in self.copulas:
            return None
        end = ctx.truncate_at_claimed(first, copula)
        return Hit(first, end, first) if end > first else None

    def find(self, ctx: DetectionContext) -> List[Hit]:
        if not ctx.name_ranges:
            return []
        hits = []
        name_starts = ctx.name_starts
        for index, (start, end) in enumerate(ctx.utterance.sentences):
            first = ctx.first_content_token(start, end)
            if first is None:
                continue
            here = [t for t in name_starts if start <= t < end]
            if here:
                name_at = here[0]
                if name_at <= first:
                    continue
                hit = self._fronted_phrase(ctx, first, name_at) or self._specificational(ctx, first, name_at)
                if hit is not None:
                    hits.append(hit)
            elif index == 0:
                # the name appears only in a later sentence: the whole first sentence is fronted
                stop = end
                while stop > first and ctx.tokens[stop - 1].tag == TokenTag.PUNCT:
                    stop -= 1
                stop = ctx.truncate_at_claimed(first, stop)
                # reduced clauses in a name-less sentence stay gerunds
                stop = next((i for i in range(first, stop) if ctx.tokens[i].tag == TokenTag.VERB_ING), stop)
                if stop > first:
                    hits.append(Hit(first, stop, first))
        return hits


class GerundRule(MarkerRule):
    subset = MarkerSubset.AGG_GERUND

    def find(self, ctx: DetectionContext) -> List[Hit]:
        return [Hit(i, i + 1, i) for i, token in enumerate(ctx.tokens) if token.tag == TokenTag.VERB_ING]


class AppositionRule(MarkerRule):
    subset = MarkerSubset.AGG_APPOSITION

    def __init__(self, articles: Iterable[str], blockers: Iterable[str], window: int = APPOSITION_WINDOW):
        self.articles = frozenset(normalize_token(w) for w in articles)
        self.blockers = frozenset(normalize_token(w) for w in blockers)
        self.window = window

    def find(self, ctx: DetectionContext) -> List[Hit]:
        hits = []
        tokens = ctx.tokens
        for first, last in ctx.name_ranges:
            comma = last + 1
            if comma >= len(tokens) or tokens[comma].surface != ",":
                continue
            _, sentence_end = sentence_bounds(ctx.utterance, first)
            opener = comma + 1
            if opener >= sentence_end:
                continue
            article = ctx.lowers[opener] in self.articles
            if not article and (ctx.lowers[opener] in self.blockers
                                or tokens[opener].tag not in (TokenTag.WORD, TokenTag.VERB_ING)):
                continue
            limit = min(sentence_end, opener + self.window)
            for k in range(opener + 1, limit):
                if tokens[k].surface == ",":
                    hits.append(Hit(opener, k, opener))
                    break
                if is_terminal(tokens[k]):
                    if article:
                        hits.append(Hit(opener, k, opener))
                    break
        return hits


def build_rules(lexicons: DetectorLexicons) -> List[MarkerRule]:
    """Rules in precedence order"""
    return [
        ContrastRule(lexicons.contrast_markers, lexicons.ambivalent_markers),
        SubordinateConjunctionRule(lexicons.subordinating_conjunctions, lexicons.as_clause_subjects),
        RelativePronounRule(lexicons.relative_pronouns, lexicons.that_blockers,
                            lexicons.verb_like, lexicons.personal_pronouns),
        ExistentialRule(lexicons.existential_expletives, lexicons.existential_contractions, lexicons.be_forms),
        ModalRule(),
        ImperativeRule(lexicons.imperative_verbs),
        AggregationLexicalRule(lexicons.aggregation_markers, lexicons.quantitative_adjectives,
                               lexicons.scalar_head_nouns),
        FrontingRule(lexicons),
        GerundRule(),
        AppositionRule(lexicons.apposition_articles, lexicons.apposition_blockers),
    ]


class StyleDetector:
    """Runs the marker rules over an utterance and collects per-subset hits"""

    def __init__(self, lexicons: Optional[DetectorLexicons] = None, analyzer: Optional[TextAnalyzer] = None,
                 aligner: Optional[SlotAligner] = None):
        self.lexicons = lexicons or DetectorLexicons()
        self.analyzer = analyzer or default_analyzer()
        self.aligner = aligner or SlotAligner(analyzer=self.analyzer)
        self.rules = build_rules(self.lexicons)

    def detect(self, utterance: Union[str, AnalyzedUtterance], mr: Optional[MeaningRepresentation] = None,
               alignment: Optional[Alignment] = None) -> StyleProfile:
        if not isinstance(utterance, AnalyzedUtterance):
            utterance = self.analyzer.analyze(utterance)
        if mr is not None and alignment is None:
            alignment = self.aligner.align_slots(mr, utterance)
        if mr is not None and alignment is not None and not alignment.for_slot(SlotName.NAME):
            logger.debug("No name slot in MR; name-relative rules disabled")

        ctx = DetectionContext(utterance, mr, alignment)
        hits: Dict[MarkerSubset, List[Span]] = {subset: [] for subset in MarkerSubset}
        for rule in self.rules:
            for hit in rule.find(ctx):
                covered = range(hit.start, hit.end)
                if hit.trigger in ctx.masked or any(i in ctx.claimed for i in covered):
                    continue
                ctx.claimed.update(covered)
                hits[rule.subset].append(Span(ctx.tokens[hit.start].start, ctx.tokens[hit.end - 1].end))

        return StyleProfile(
            text=utterance.text,
            hits={subset: tuple(sorted(spans)) for subset, spans in hits.items()},
        )

    def has_style(self, utterance: Union[str, AnalyzedUtterance], category: StyleCategory,
                  mr: Optional[MeaningRepresentation] = None) -> bool:
        return self.detect(utterance, mr).has_category(category)


def subsets_hit_by(profiles: Iterable[StyleProfile]) -> Dict[MarkerSubset, int]:
    counts = {subset: 0 for subset in MarkerSubset}
    for profile in profiles:
        for subset in profile.subsets_hit():
            counts[subset] += 1
    return counts


def subset_proportions(profiles: List[StyleProfile]) -> Dict[str, float]:
    """Fraction of utterances with at least one hit, per marker subset"""
    counts = subsets_hit_by(profiles)
    total = len(profiles)
    return {subset.value: (count / total if total else 0.0) for subset, count in counts.items()}


def category_proportions(profiles: List[StyleProfile]) -> Dict[str, float]:
    total = len(profiles)
    return {
        category.value: (sum(p.has_category(category) for p in profiles) / total if total else 0.0)
        for category in StyleCategory
    }
