import json

import pytest

from e2e_style import __version__
from e2e_style.main import EXIT_INVALID, EXIT_IO, EXIT_OK, main
from e2e_style.schemas.style import MarkerSubset
from e2e_style.services.corpus import load_corpus

from .samples import WILDWOOD_EMPHASIZED_MR, WILDWOOD_PLAIN


def read_json(path):
    return json.loads(path.read_text(encoding="utf-8"))


def test_stats(sample_path, tmp_path):
    out = tmp_path / "stats.json"
    assert main(["-q", "stats", "--in", str(sample_path), "--out", str(out)]) == EXIT_OK
    report = read_json(out)
    assert report["total_samples"] == 9
    assert report["unique_mrs"] == 7
    assert report["invalid_mrs"] == 0


def test_select_with_zero_weight_schema(sample_path, tmp_path):
    schema = tmp_path / "schema.json"
    schema.write_text(json.dumps({subset.value: 0 for subset in MarkerSubset}), encoding="utf-8")
    out, report = tmp_path / "selected.csv", tmp_path / "selection.json"
    code = main(["-q", "select", "--in", str(sample_path), "--out", str(out), "--schema", str(schema),
                 "--threshold", "1", "--report", str(report)])
    assert code == EXIT_OK
    assert len(load_corpus(str(out))) == 7
    assert read_json(report)["fallback_mrs"] == 7


def test_annotate_contrast(sample_path, tmp_path):
    out, report = tmp_path / "contrast.csv", tmp_path / "contrast.json"
    code = main(["-q", "annotate", "--contrast", "--in", str(sample_path), "--out", str(out),
                 "--report", str(report)])
    assert code == EXIT_OK
    assert read_json(report)["counts"] == {"labeled": 2, "discarded": 1, "passed": 6}
    text = out.read_text(encoding="utf-8")
    assert "<contrast>[customer_rating familyFriendly]" in text
    assert len(load_corpus(str(out))) == 8


def test_annotate_emphasis_writes_emph_tokens(sample_path, tmp_path):
    out = tmp_path / "emph.csv"
    assert main(["-q", "annotate", "--emph", "--in", str(sample_path), "--out", str(out)]) == EXIT_OK
    assert "<emph>" in out.read_text(encoding="utf-8")


def test_subset_and_aggregation_report(sample_path, tmp_path):
    subset, table = tmp_path / "contrast.csv", tmp_path / "aggregation.json"
    assert main(["-q", "subset", "--in", str(sample_path), "--out", str(subset), "--category", "contrast"]) == 0
    assert len(load_corpus(str(subset))) == 3
    assert main(["-q", "aggregation-report", "--in", str(sample_path), "--out", str(table)]) == 0
    assert read_json(table)["total"] == 3


def test_evaluate(sample_path, tmp_path):
    outputs = tmp_path / "system.csv"
    outputs.write_text(f'mr,output\n"{WILDWOOD_EMPHASIZED_MR}",{WILDWOOD_PLAIN}\n', encoding="utf-8")
    report = tmp_path / "eval.json"
    code = main(["-q", "evaluate", "--outputs", str(outputs), "--refs", str(sample_path),
                 "--metrics", "ser,emph", "--report", str(report)])
    assert code == EXIT_OK
    result = read_json(report)
    assert result["slot_error_rate"]["rate"] == pytest.approx(1 / 6)
    assert result["emphasis_realization_rate"] == {"numerator": 0, "denominator": 3, "rate": 0.0}
    assert result["contrast_realization_rate"] is None
    assert result["diagnostics"][0]["source"] == "system"


def test_missing_input_exits_with_io_status(tmp_path):
    code = main(["-q", "stats", "--in", str(tmp_path / "absent.csv"), "--out", str(tmp_path / "s.json")])
    assert code == EXIT_IO


def test_malformed_corpus_exits_with_invalid_status(tmp_path):
    bad = tmp_path / "bad.csv"
    bad.write_text('mr,ref\n"name[Cotto",Cotto.\n', encoding="utf-8")
    assert main(["-q", "stats", "--in", str(bad), "--out", str(tmp_path / "s.json")]) == EXIT_INVALID
    assert main(["-q", "stats", "--permissive", "--in", str(bad), "--out", str(tmp_path / "s.json")]) == EXIT_OK


@pytest.mark.parametrize("argv", [
    ["stats", "--in", "x.csv"],
    ["--jobs", "0", "stats", "--in", "x.csv", "--out", "y.json"],
    ["evaluate", "--outputs", "o.csv", "--metrics", "bleu", "--report", "r.json"],
    ["annotate", "--contrast", "--emph", "--in", "x.csv", "--out", "y.csv"],
])
def test_usage_errors_exit_with_invalid_status(argv):
    with pytest.raises(SystemExit) as info:
        main(argv)
    assert info.value.code == EXIT_INVALID


def test_version(capsys):
    with pytest.raises(SystemExit) as info:
        main(["--version"])
    assert info.value.code == 0
    assert __version__ in capsys.readouterr().out
