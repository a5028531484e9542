"""
Heuristic slot aligner.

Each MR slot is searched in three tiers: the verbatim value, then the value
lexicon, then fuzzy token overlap for multiword values. Every tier adds the
spans that do not overlap text already taken, so a slot keeps its matches when
more text is appended. The name and near slots are aligned first so that later
slots can never claim text inside a restaurant name.
"""
import logging
import re
import unicodedata
from collections import Counter
from functools import lru_cache
from typing import Dict, Iterable, List, Optional, Sequence, Tuple, Union

from ..config import AlignerSettings
from ..core.errors import RelexicalizationError
from ..core.ontology import CATEGORICAL_SLOTS, SlotName, lookup_slot, normalize_value
from ..core.text import TextAnalyzer, default_analyzer, normalize_token
from ..schemas.alignment import AlignedSpan, Alignment, AlignmentConfidence, AlignmentReport, SlotAlignment
from ..schemas.analysis import AnalyzedUtterance, TokenTag
from ..schemas.mr import MeaningRepresentation

logger = logging.getLogger(__name__)

PLACEHOLDERS: Dict[SlotName, str] = {slot: f"<{slot.value}>" for slot in CATEGORICAL_SLOTS}
_PLACEHOLDER = re.compile(r"<(\w+)>")
# Slots whose realizations are covered by the lexicon alone
SCALAR_OR_BOOLEAN = frozenset({SlotName.PRICE_RANGE, SlotName.CUSTOMER_RATING, SlotName.FAMILY_FRIENDLY})
_ARTICLE = re.compile(r"^(?:the|a|an)\s+", re.IGNORECASE)


@lru_cache(maxsize=4096)
def _verbatim_pattern(value: str) -> "re.Pattern[str]":
    return re.compile(rf"(?<!\w){re.escape(value)}(?!\w)", re.IGNORECASE)


@lru_cache(maxsize=8192)
def _phrase_pattern(phrase: str) -> "re.Pattern[str]":
    """Whitespace/hyphen-insensitive pattern for a lexicon phrase"""
    words = [w for w in re.split(r"[\s\-]+", phrase.strip()) if w]
    if not words:
        return re.compile(r"(?!)")
    parts = [re.sub(r"['’]", "['’]", re.escape(w)) for w in words]
    body = r"[\s-]+".join(parts)
    return re.compile(rf"(?<!\w){body}(?!\w)", re.IGNORECASE)


def fold(text: str) -> str:
    """Lower-case and strip accents ("Café" -> "cafe")"""
    decomposed = unicodedata.normalize("NFKD", text)
    return "".join(c for c in decomposed if not unicodedata.combining(c)).lower()


class ValueLexicon:
    """Realization phrases per (slot, value), looked up case-insensitively"""

    def __init__(self, settings: AlignerSettings):
        self._phrases: Dict[Tuple[str, str], Tuple[str, ...]] = {}
        for slot_name, values in settings.value_lexicon.items():
            slot = lookup_slot(slot_name)
            if slot is None:
                continue
            for value, phrases in values.items():
                self._phrases[(slot.value, normalize_value(value))] = tuple(phrases)
        self._non_verbatim = set()
        for slot_name, values in settings.non_verbatim_values.items():
            slot = lookup_slot(slot_name)
            if slot is not None:
                self._non_verbatim.update((slot.value, normalize_value(v)) for v in values)

    def phrases(self, slot: SlotName, value: str) -> Tuple[str, ...]:
        return self._phrases.get((slot.value, normalize_value(value)), ())

    def verbatim_allowed(self, slot: SlotName, value: str) -> bool:
        return (slot.value, normalize_value(value)) not in self._non_verbatim


class _Candidate:
    __slots__ = ("start", "end", "negated_ok")

    def __init__(self, start: int, end: int, negated_ok: Optional[bool] = None):
        self.start = start
        self.end = end
        # None: polarity-neutral; True: must be negated; False: must not be negated
        self.negated_ok = negated_ok


def _overlaps(start: int, end: int, spans: Iterable[Tuple[int, int]]) -> bool:
    return any(start < e and s < end for s, e in spans)


class SlotAligner:
    """Three-tier (verbatim, lexicon, fuzzy) matcher of MR slots to utterance spans"""

    def __init__(self, settings: Optional[AlignerSettings] = None, analyzer: Optional[TextAnalyzer] = None):
        self.settings = settings or AlignerSettings()
        self.analyzer = analyzer or default_analyzer()
        self.lexicon = ValueLexicon(self.settings)
        self.negators = frozenset(normalize_token(n) for n in self.settings.negators)

    def _as_utterance(self, utterance: Union[str, AnalyzedUtterance]) -> AnalyzedUtterance:
        if isinstance(utterance, AnalyzedUtterance):
            return utterance
        return self.analyzer.analyze(utterance)

    # Polarity

    def is_negated(self, utterance: AnalyzedUtterance, start: int) -> bool:
        """True when a negator occurs within the negation window before `start`"""
        tokens = utterance.tokens
        index = utterance.token_at(start)
        if index is None:
            return False
        token = tokens[index]
        if token.start < start:
            prefix = utterance.text[token.start:start].lower()
            if prefix.startswith(("non", "not", "un")):
                return True
        seen = 0
        i = index - 1
        while i >= 0 and seen < self.settings.negation_window:
            previous = tokens[i]
            if previous.tag == TokenTag.PUNCT:
                break
            lower = normalize_token(previous.surface)
            if lower in self.negators or lower.endswith("n't"):
                return True
            seen += 1
            i -= 1
        return False

    # Tiers

    def _lexicon_phrases(self, slot: SlotName, value: str) -> List[str]:
        phrases = list(self.lexicon.phrases(slot, value))
        if self.lexicon.verbatim_allowed(slot, value):
            phrases.append(value)
        if slot in (SlotName.NAME, SlotName.NEAR):
            bare = _ARTICLE.sub("", value)
            if bare and bare != value:
                phrases.append(bare)
        return phrases

    def _tier_candidates(self, slot: SlotName, value: str, text: str,
                         tier: AlignmentConfidence) -> List[_Candidate]:
        candidates: List[_Candidate] = []
        if tier == AlignmentConfidence.EXACT:
            if self.lexicon.verbatim_allowed(slot, value):
                candidates += [_Candidate(m.start(), m.end()) for m in _verbatim_pattern(value).finditer(text)]
        elif tier == AlignmentConfidence.LEXICON:
            if slot == SlotName.FAMILY_FRIENDLY:
                candidates += self._polarity_candidates(value, text)
            else:
                for phrase in self._lexicon_phrases(slot, value):
                    candidates += [_Candidate(m.start(), m.end()) for m in _phrase_pattern(phrase).finditer(text)]
        return candidates

    def _polarity_candidates(self, value: str, text: str) -> List[_Candidate]:
        positive = normalize_value(value) == "yes"
        same = self.lexicon.phrases(SlotName.FAMILY_FRIENDLY, value)
        opposite = self.lexicon.phrases(SlotName.FAMILY_FRIENDLY, "no" if positive else "yes")
        candidates = []
        for phrase in same:
            for m in _phrase_pattern(phrase).finditer(text):
                candidates.append(_Candidate(m.start(), m.end(), negated_ok=False if positive else None))
        if not positive:
            # a negated positive phrase realizes "no"
            for phrase in opposite:
                for m in _phrase_pattern(phrase).finditer(text):
                    candidates.append(_Candidate(m.start(), m.end(), negated_ok=True))
        return candidates

    def _fuzzy_spans(self, value: str, utterance: AnalyzedUtterance) -> List[Tuple[int, int]]:
        """Windows of as many words as the value, never crossing a sentence boundary"""
        target = [fold(w) for w in re.findall(r"[^\W_]+", value)]
        if len(target) < 2:
            return []
        width = len(target)
        needed = Counter(target)
        spans = []
        for start, end in utterance.sentences:
            words = [t for t in utterance.tokens[start:end] if t.tag not in (TokenTag.PUNCT, TokenTag.OTHER)]
            for i in range(0, len(words) - width + 1):
                window = words[i:i + width]
                found = needed & Counter(fold(t.surface) for t in window)
                if sum(found.values()) / width >= self.settings.fuzzy_threshold:
                    spans.append((window[0].start, window[-1].end))
        return spans

    def _select(self, candidates: List[_Candidate], claimed: List[Tuple[int, int]],
                utterance: AnalyzedUtterance) -> List[Tuple[int, int]]:
        chosen: List[Tuple[int, int]] = []
        for candidate in sorted(candidates, key=lambda c: (c.start, -(c.end - c.start))):
            if _overlaps(candidate.start, candidate.end, claimed) or _overlaps(candidate.start, candidate.end, chosen):
                continue
            if candidate.negated_ok is not None:
                if self.is_negated(utterance, candidate.start) != candidate.negated_ok:
                    continue
            chosen.append((candidate.start, candidate.end))
        return chosen

    def match_slot(self, slot: SlotName, value: str, utterance: AnalyzedUtterance,
                   claimed: Sequence[Tuple[int, int]] = ()) -> Tuple[AlignedSpan, ...]:
        """Non-overlapping spans from every tier; the tier that found a span sets its confidence"""
        claimed = list(claimed)
        text = utterance.text
        tiers = [(tier, self._tier_candidates(slot, value, text, tier))
                 for tier in (AlignmentConfidence.EXACT, AlignmentConfidence.LEXICON)]
        if slot not in SCALAR_OR_BOOLEAN:
            fuzzy = [_Candidate(s, e) for s, e in self._fuzzy_spans(value, utterance)]
            tiers.append((AlignmentConfidence.FUZZY, fuzzy))
        spans: List[AlignedSpan] = []
        for tier, candidates in tiers:
            chosen = self._select(candidates, claimed, utterance)
            claimed.extend(chosen)
            spans += [AlignedSpan(s, e, tier) for s, e in chosen]
        return tuple(sorted(spans))

    def align_slots(self, mr: MeaningRepresentation, utterance: Union[str, AnalyzedUtterance]) -> Alignment:
        utterance = self._as_utterance(utterance)
        positions = list(range(len(mr.slots)))
        first = {SlotName.NAME: 0, SlotName.NEAR: 1}
        order = sorted(positions, key=lambda p: (first.get(mr.slots[p].name, 2), p))

        claimed: List[Tuple[int, int]] = []
        entries: Dict[int, SlotAlignment] = {}
        for position in order:
            slot = mr.slots[position]
            spans = self.match_slot(slot.name, slot.value, utterance, claimed)
            claimed.extend((s.start, s.end) for s in spans)
            entries[position] = SlotAlignment(position=position, slot=slot.name, value=slot.value, spans=spans)
        return Alignment(text=utterance.text, slots=tuple(entries[p] for p in positions))

    def contradicts(self, mr: MeaningRepresentation, utterance: Union[str, AnalyzedUtterance]) -> List[SlotName]:
        """Boolean slots whose opposite value is realized in the utterance"""
        utterance = self._as_utterance(utterance)
        value = mr.get(SlotName.FAMILY_FRIENDLY)
        if value is None or normalize_value(value) not in ("yes", "no"):
            return []
        opposite = "no" if normalize_value(value) == "yes" else "yes"
        if self.match_slot(SlotName.FAMILY_FRIENDLY, opposite, utterance):
            return [SlotName.FAMILY_FRIENDLY]
        return []

    def delexicalize(self, mr: MeaningRepresentation, utterance: Union[str, AnalyzedUtterance],
                     alignment: Optional[Alignment] = None) -> Tuple[MeaningRepresentation, str]:
        """Replace the name, near and food values with placeholders in the MR and the utterance

        Only spans that reproduce the value character for character are replaced in the text.
        """
        utterance = self._as_utterance(utterance)
        alignment = alignment or self.align_slots(mr, utterance)
        text = utterance.text

        replacements: List[Tuple[int, int, str]] = []
        slots = list(mr.slots)
        for entry in alignment.slots:
            if entry.slot not in PLACEHOLDERS:
                continue
            placeholder = PLACEHOLDERS[entry.slot]
            slots[entry.position] = slots[entry.position].model_copy(update={"value": placeholder})
            verbatim = [s for s in entry.spans if text[s.start:s.end] == entry.value]
            if len(verbatim) < len(entry.spans):
                logger.debug("Slot %s[%s]: %d realization(s) not verbatim, left as is",
                             entry.slot.value, entry.value, len(entry.spans) - len(verbatim))
            replacements += [(s.start, s.end, placeholder) for s in verbatim]

        for start, end, placeholder in sorted(replacements, reverse=True):
            text = text[:start] + placeholder + text[end:]
        return mr.model_copy(update={"slots": tuple(slots)}), text


def relexicalize(utterance: str, mr: MeaningRepresentation) -> str:
    """Substitute every placeholder with the MR value of its slot"""
    def substitute(match: "re.Match[str]") -> str:
        slot = lookup_slot(match.group(1))
        value = mr.get(slot) if slot is not None else None
        if value is None:
            raise RelexicalizationError(match.group(0))
        return value

    return _PLACEHOLDER.sub(substitute, utterance)


def _alignment_diagnostics(index: int, alignment: Alignment) -> Dict[str, object]:
    return {
        "index": index,
        "unaligned": [entry.slot.value for entry in alignment.unaligned()],
        "aligned": {
            entry.slot.value: [
                {"text": alignment.text[s.start:s.end], "start": s.start, "end": s.end,
                 "confidence": s.confidence.value}
                for s in entry.spans
            ]
            for entry in alignment.slots if entry.aligned
        },
    }


def alignment_report(alignments: Sequence[Alignment]) -> AlignmentReport:
    per_slot: Dict[str, Dict[str, int]] = {slot.value: {"total": 0, "aligned": 0} for slot in SlotName}
    per_tier: Dict[str, int] = {tier.value: 0 for tier in AlignmentConfidence}
    total = aligned = 0
    for alignment in alignments:
        for entry in alignment.slots:
            total += 1
            per_slot[entry.slot.value]["total"] += 1
            if entry.aligned:
                aligned += 1
                per_slot[entry.slot.value]["aligned"] += 1
                per_tier[entry.spans[0].confidence.value] += 1
    return AlignmentReport(
        samples=len(alignments),
        slots=total,
        aligned_slots=aligned,
        alignment_rate=aligned / total if total else 0.0,
        per_slot={name: counts for name, counts in per_slot.items() if counts["total"]},
        per_tier=per_tier,
        diagnostics=[_alignment_diagnostics(i, a) for i, a in enumerate(alignments)],
    )
