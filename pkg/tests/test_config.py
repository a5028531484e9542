import json

import pytest

from e2e_style.config import (
    CONFIG_ENV_VAR, JOBS_ENV_VAR, DEFAULT_WEIGHTS, ToolkitConfig, WeightingSchema, default_jobs, load_config,
    load_schema,
)
from e2e_style.core.errors import ConfigError, CorpusIOError
from e2e_style.schemas.style import MarkerSubset


def write_json(path, payload):
    path.write_text(json.dumps(payload), encoding="utf-8")
    return str(path)


def test_defaults_without_file(monkeypatch):
    monkeypatch.delenv(CONFIG_ENV_VAR, raising=False)
    config = load_config()
    assert config.weighting.weights == DEFAULT_WEIGHTS
    assert config.weighting.threshold == 2
    assert "but" in config.detector.contrast_markers


def test_partial_config_keeps_other_defaults(tmp_path):
    path = write_json(tmp_path / "config.json", {
        "weighting": {"CONTRAST_MARKERS": 5, "threshold": 4},
        "detector": {"contrast_markers": ["but"]},
        "aligner": {"value_lexicon": {"food": {"Indian": ["tandoori"]}}},
    })
    config = load_config(path)
    assert config.weighting.weights[MarkerSubset.CONTRAST_MARKERS] == 5
    assert config.weighting.weights[MarkerSubset.MODAL] == 2
    assert config.weighting.threshold == 4
    assert config.detector.contrast_markers == ["but"]
    assert config.detector.relative_pronouns == ToolkitConfig().detector.relative_pronouns
    assert config.aligner.value_lexicon["food"]["Indian"] == ["tandoori"]
    assert config.aligner.value_lexicon["food"]["Italian"] == ToolkitConfig().aligner.value_lexicon["food"]["Italian"]


def test_config_path_from_environment(tmp_path, monkeypatch):
    monkeypatch.setenv(CONFIG_ENV_VAR, write_json(tmp_path / "env.json", {"weighting": {"threshold": 0}}))
    assert load_config().weighting.threshold == 0


@pytest.mark.parametrize("payload", [
    {"colour": "red"},
    {"weighting": {"SARCASM": 2}},
    {"weighting": {"MODAL": -1}},
    {"aligner": {"fuzzy_threshold": 1.5}},
    ["not", "an", "object"],
])
def test_invalid_config(tmp_path, payload):
    with pytest.raises(ConfigError):
        load_config(write_json(tmp_path / "bad.json", payload))


def test_malformed_json(tmp_path):
    path = tmp_path / "broken.json"
    path.write_text("{", encoding="utf-8")
    with pytest.raises(ConfigError):
        load_config(str(path))


def test_missing_config_file(tmp_path):
    with pytest.raises(CorpusIOError):
        load_config(str(tmp_path / "absent.json"))


def test_schema_file_and_threshold_override(tmp_path):
    path = write_json(tmp_path / "schema.json", {"agg_lexical": 1, "threshold": 3})
    schema = load_schema(path)
    assert schema.weights[MarkerSubset.AGG_LEXICAL] == 1
    assert schema.threshold == 3
    assert load_schema(path, threshold=0).threshold == 0


def test_schema_mapping_is_left_untouched():
    nested = {"MODAL": 1}
    mapping = {"weights": nested, "FRONTING": 4, "threshold": 3}
    schema = WeightingSchema.from_mapping(mapping)
    assert schema.weights[MarkerSubset.FRONTING] == 4
    assert schema.weights[MarkerSubset.MODAL] == 1
    assert nested == {"MODAL": 1}
    assert mapping == {"weights": {"MODAL": 1}, "FRONTING": 4, "threshold": 3}


def test_fingerprint_tracks_schema_contents():
    assert WeightingSchema().fingerprint() == WeightingSchema().fingerprint()
    assert WeightingSchema().fingerprint() != WeightingSchema(threshold=3).fingerprint()
    assert len(WeightingSchema().fingerprint()) == 16


def test_default_jobs(monkeypatch):
    monkeypatch.delenv(JOBS_ENV_VAR, raising=False)
    assert default_jobs() == 1
    monkeypatch.setenv(JOBS_ENV_VAR, "4")
    assert default_jobs() == 4
    monkeypatch.setenv(JOBS_ENV_VAR, "many")
    with pytest.raises(ConfigError):
        default_jobs()
