"""
Configuration: weighting schema, lexicon overrides and environment defaults.

Every key of the JSON config file is optional; omitted keys keep the compiled-in
defaults from lexicons.py. The default config path can be set through the
E2E_STYLE_CONFIG environment variable (a .env file is honored).
"""
import hashlib
import json
import os
from typing import Any, Dict, List, Mapping, Optional

from pydantic import BaseModel, ConfigDict, Field, NonNegativeInt, ValidationError, field_validator

from . import lexicons
from .core.errors import ConfigError, CorpusIOError
from .schemas.style import MarkerSubset

CONFIG_ENV_VAR = "E2E_STYLE_CONFIG"
JOBS_ENV_VAR = "E2E_STYLE_JOBS"

DEFAULT_WEIGHTS: Dict[MarkerSubset, int] = {
    MarkerSubset.AGG_LEXICAL: 3,
    MarkerSubset.AGG_APPOSITION: 2,
    MarkerSubset.AGG_GERUND: 2,
    MarkerSubset.CONTRAST_MARKERS: 3,
    MarkerSubset.FRONTING: 2,
    MarkerSubset.SUBORD_CONJ: 2,
    MarkerSubset.SUBORD_RELPRON: 1,
    MarkerSubset.EXISTENTIAL: 1,
    MarkerSubset.IMPERATIVE: 2,
    MarkerSubset.MODAL: 2,
}
DEFAULT_THRESHOLD = 2


def _strings(values) -> List[str]:
    return list(values)


class WeightingSchema(BaseModel):
    model_config = ConfigDict(extra="forbid")

    weights: Dict[MarkerSubset, NonNegativeInt] = Field(default_factory=lambda: dict(DEFAULT_WEIGHTS))
    threshold: NonNegativeInt = DEFAULT_THRESHOLD
    # Multiplier applied once per sentence beyond the first; disabled when None
    length_penalty: Optional[float] = Field(default=None, gt=0.0)

    @field_validator("weights", mode="before")
    @classmethod
    def _fill_weights(cls, value: Any) -> Dict[MarkerSubset, int]:
        merged: Dict[MarkerSubset, int] = dict(DEFAULT_WEIGHTS)
        for key, weight in dict(value or {}).items():
            subset = _subset(key)
            merged[subset] = weight
        return merged

    @classmethod
    def from_mapping(cls, mapping: Mapping[str, Any]) -> "WeightingSchema":
        """Build from the flat schema-file layout: subset ids plus optional threshold/length_penalty"""
        data = dict(mapping)
        options = {key: data.pop(key) for key in ("threshold", "length_penalty") if key in data}
        weights = dict(data.pop("weights", None) or {})
        weights.update(data)
        try:
            return cls(weights=weights, **options)
        except ValidationError as e:
            raise ConfigError(f"Invalid weighting schema: {e}") from e

    def fingerprint(self) -> str:
        payload = json.dumps(self.model_dump(mode="json"), sort_keys=True)
        return hashlib.sha256(payload.encode("utf-8")).hexdigest()[:16]


def _subset(key: Any) -> MarkerSubset:
    if isinstance(key, MarkerSubset):
        return key
    try:
        return MarkerSubset(str(key).upper())
    except ValueError:
        raise ConfigError(f"Unknown marker subset {key!r}") from None


class TextSettings(BaseModel):
    model_config = ConfigDict(extra="forbid")

    ing_exclusions: List[str] = Field(default_factory=lambda: _strings(lexicons.ING_EXCLUSIONS))
    ing_noun_determiners: List[str] = Field(default_factory=lambda: _strings(lexicons.ING_NOUN_DETERMINERS))
    abbreviations: List[str] = Field(default_factory=lambda: _strings(lexicons.ABBREVIATIONS))
    modal_verbs: List[str] = Field(default_factory=lambda: _strings(lexicons.MODAL_VERBS))


class DetectorLexicons(BaseModel):
    model_config = ConfigDict(extra="forbid")

    contrast_markers: List[str] = Field(default_factory=lambda: _strings(lexicons.CONTRAST_MARKERS))
    ambivalent_markers: List[str] = Field(default_factory=lambda: _strings(lexicons.AMBIVALENT_MARKERS))
    subordinating_conjunctions: List[str] = Field(
        default_factory=lambda: _strings(lexicons.SUBORDINATING_CONJUNCTIONS))
    as_clause_subjects: List[str] = Field(default_factory=lambda: _strings(lexicons.AS_CLAUSE_SUBJECTS))
    relative_pronouns: List[str] = Field(default_factory=lambda: _strings(lexicons.RELATIVE_PRONOUNS))
    that_blockers: List[str] = Field(default_factory=lambda: _strings(lexicons.THAT_BLOCKERS))
    verb_like: List[str] = Field(default_factory=lambda: _strings(lexicons.VERB_LIKE))
    personal_pronouns: List[str] = Field(default_factory=lambda: _strings(lexicons.PERSONAL_PRONOUNS))
    existential_expletives: List[str] = Field(default_factory=lambda: _strings(lexicons.EXISTENTIAL_EXPLETIVES))
    existential_contractions: List[str] = Field(
        default_factory=lambda: _strings(lexicons.EXISTENTIAL_CONTRACTIONS))
    be_forms: List[str] = Field(default_factory=lambda: _strings(lexicons.BE_FORMS))
    imperative_verbs: List[str] = Field(default_factory=lambda: _strings(lexicons.IMPERATIVE_VERBS))
    aggregation_markers: List[str] = Field(default_factory=lambda: _strings(lexicons.AGGREGATION_MARKERS))
    quantitative_adjectives: List[str] = Field(
        default_factory=lambda: _strings(lexicons.QUANTITATIVE_ADJECTIVES))
    scalar_head_nouns: Dict[str, str] = Field(default_factory=lambda: dict(lexicons.SCALAR_HEAD_NOUNS))
    fronting_prepositions: List[str] = Field(default_factory=lambda: _strings(lexicons.FRONTING_PREPOSITIONS))
    fronting_participles: List[str] = Field(default_factory=lambda: _strings(lexicons.FRONTING_PARTICIPLES))
    fronting_adjectives: List[str] = Field(default_factory=lambda: _strings(lexicons.FRONTING_ADJECTIVES))
    fronting_stops: List[str] = Field(default_factory=lambda: _strings(lexicons.FRONTING_STOPS))
    specificational_copulas: List[str] = Field(
        default_factory=lambda: _strings(lexicons.SPECIFICATIONAL_COPULAS))
    non_specificational_subjects: List[str] = Field(
        default_factory=lambda: _strings(lexicons.NON_SPECIFICATIONAL_SUBJECTS))
    apposition_articles: List[str] = Field(default_factory=lambda: _strings(lexicons.APPOSITION_ARTICLES))
    apposition_blockers: List[str] = Field(default_factory=lambda: _strings(lexicons.APPOSITION_BLOCKERS))


class AlignerSettings(BaseModel):
    model_config = ConfigDict(extra="forbid")

    value_lexicon: Dict[str, Dict[str, List[str]]] = Field(
        default_factory=lambda: {slot: {v: list(p) for v, p in values.items()}
                                 for slot, values in lexicons.VALUE_LEXICON.items()})
    non_verbatim_values: Dict[str, List[str]] = Field(
        default_factory=lambda: {slot: list(v) for slot, v in lexicons.NON_VERBATIM_VALUES.items()})
    negators: List[str] = Field(default_factory=lambda: _strings(lexicons.NEGATORS))
    negation_window: NonNegativeInt = 3
    fuzzy_threshold: float = Field(default=0.8, gt=0.0, le=1.0)

    @field_validator("value_lexicon", mode="before")
    @classmethod
    def _merge_lexicon(cls, value: Any) -> Dict[str, Dict[str, List[str]]]:
        merged = {slot: {v: list(p) for v, p in values.items()}
                  for slot, values in lexicons.VALUE_LEXICON.items()}
        for slot, values in dict(value or {}).items():
            merged.setdefault(slot, {}).update({v: list(p) for v, p in dict(values).items()})
        return merged


class ToolkitConfig(BaseModel):
    model_config = ConfigDict(extra="forbid")

    weighting: WeightingSchema = Field(default_factory=WeightingSchema)
    text: TextSettings = Field(default_factory=TextSettings)
    detector: DetectorLexicons = Field(default_factory=DetectorLexicons)
    aligner: AlignerSettings = Field(default_factory=AlignerSettings)

    def cache_key(self) -> str:
        return self.model_dump_json()


def _read_json(path: str) -> Dict[str, Any]:
    try:
        with open(path, "r", encoding="utf-8") as f:
            data = json.load(f)
    except OSError as e:
        raise CorpusIOError(f"Cannot read {path}: {e}") from e
    except json.JSONDecodeError as e:
        raise ConfigError(f"{path} is not valid JSON: {e}") from e
    if not isinstance(data, dict):
        raise ConfigError(f"{path} must contain a JSON object")
    return data


def load_config(path: Optional[str] = None) -> ToolkitConfig:
    """Load the toolkit config from `path`, the E2E_STYLE_CONFIG variable, or the defaults"""
    path = path or os.getenv(CONFIG_ENV_VAR)
    if not path:
        return ToolkitConfig()
    data = _read_json(path)
    if "weighting" in data and isinstance(data["weighting"], dict):
        data["weighting"] = WeightingSchema.from_mapping(data["weighting"])
    try:
        return ToolkitConfig(**data)
    except ValidationError as e:
        raise ConfigError(f"Invalid config {path}: {e}") from e


def load_schema(path: str, threshold: Optional[int] = None) -> WeightingSchema:
    schema = WeightingSchema.from_mapping(_read_json(path))
    if threshold is not None:
        schema = schema.model_copy(update={"threshold": threshold})
    return schema


def default_jobs() -> int:
    raw = os.getenv(JOBS_ENV_VAR)
    if not raw:
        return 1
    try:
        return max(1, int(raw))
    except ValueError:
        raise ConfigError(f"{JOBS_ENV_VAR} must be an integer, got {raw!r}") from None
