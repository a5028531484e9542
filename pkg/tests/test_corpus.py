import pytest

from e2e_style.core.errors import CorpusFormatError, CorpusIOError
from e2e_style.core.ontology import SlotName
from e2e_style.schemas.corpus import Split
from e2e_style.services.corpus import corpus_stats, load_corpus, load_outputs, write_corpus


def test_load_preserves_file_order(corpus):
    assert len(corpus) == 9
    assert corpus.samples[0].mr.get(SlotName.NAME) == "The Rice Boat"
    assert corpus.samples[-1].mr.get(SlotName.NAME) == "Alimentum"
    assert corpus.samples[4].mr.get(SlotName.NEAR) == "Rainbow Vegetarian Café"
    assert all(s.split == Split.TRAINING for s in corpus.samples)


def test_write_then_load_is_identity(corpus, tmp_path):
    for name in ("copy.csv", "copy.tsv"):
        path = tmp_path / name
        write_corpus(corpus, str(path))
        again = load_corpus(str(path))
        assert again.samples == corpus.samples


def test_written_file_is_byte_stable(corpus, tmp_path):
    first, second = tmp_path / "a.csv", tmp_path / "b.csv"
    write_corpus(corpus, str(first))
    write_corpus(load_corpus(str(first)), str(second))
    assert first.read_bytes() == second.read_bytes()


def test_header_is_case_insensitive(tmp_path):
    path = tmp_path / "upper.csv"
    path.write_text('MR , Ref\n"name[Zizzi], eatType[pub]",Zizzi is a pub.\n', encoding="utf-8")
    assert load_corpus(str(path)).samples[0].ref == "Zizzi is a pub."


def test_missing_column(tmp_path):
    path = tmp_path / "bad.csv"
    path.write_text("mr,text\nname[Zizzi],Zizzi.\n", encoding="utf-8")
    with pytest.raises(CorpusFormatError, match="ref"):
        load_corpus(str(path))


def test_malformed_row_strict_and_permissive(tmp_path):
    path = tmp_path / "rows.csv"
    path.write_text(
        'mr,ref\n"name[Zizzi], eatType[pub]",Zizzi is a pub.\n"name[Cotto",Cotto.\nname[Aromi],\n',
        encoding="utf-8",
    )
    with pytest.raises(CorpusFormatError) as info:
        load_corpus(str(path))
    assert info.value.row == 2

    corpus = load_corpus(str(path), permissive=True)
    assert len(corpus) == 1
    assert [r.row for r in corpus.rejected] == [2, 3]


def test_missing_file_is_io_error(tmp_path):
    with pytest.raises(CorpusIOError):
        load_corpus(str(tmp_path / "absent.csv"))


def test_load_outputs_reads_output_column(tmp_path):
    path = tmp_path / "outputs.csv"
    path.write_text('mr,output\n"name[Zizzi], <emph> eatType[pub]",A pub called Zizzi.\n', encoding="utf-8")
    pairs = load_outputs(str(path))
    assert pairs[0].utterance == "A pub called Zizzi."
    assert pairs[0].mr.emphasis == frozenset({1})
    assert pairs[0].source == "outputs"


def test_stats(corpus):
    stats = corpus_stats(corpus)
    assert stats.total_samples == 9
    assert stats.unique_mrs == 7
    assert sum(stats.slot_count_distribution.values()) == pytest.approx(1.0)
    assert sum(stats.slot_count_distribution_unique.values()) == pytest.approx(1.0)
    assert list(stats.slot_count_distribution) == sorted(stats.slot_count_distribution, key=int)
    assert stats.slot_count_distribution["6"] == pytest.approx(5 / 9)
    assert stats.mean_sentences_by_slot_count["6"] == pytest.approx(2.0)
    assert stats.mean_sentences_by_slot_count["3"] == pytest.approx(1.0)
    assert stats.slot_frequency["name"] == 9
    assert stats.slot_frequency["near"] == 3


def test_stats_of_empty_corpus(corpus):
    stats = corpus_stats(corpus.with_samples([]))
    assert stats.total_samples == 0
    assert stats.slot_count_distribution == {}


def test_blank_mr_cell_is_a_malformed_row(tmp_path):
    path = tmp_path / "blank.csv"
    path.write_text('mr,ref\n"",Zizzi is a pub.\n"name[Zizzi], eatType[pub], area[riverside]",Zizzi is a pub.\n',
                    encoding="utf-8")
    with pytest.raises(CorpusFormatError, match="empty MR") as info:
        load_corpus(str(path))
    assert info.value.row == 1

    corpus = load_corpus(str(path), permissive=True)
    assert len(corpus) == 1
    assert [r.row for r in corpus.rejected] == [1]


def test_header_only_file_loads_empty(tmp_path):
    path = tmp_path / "header.csv"
    path.write_text("mr,ref\n", encoding="utf-8")
    corpus = load_corpus(str(path))
    assert len(corpus) == 0
    assert corpus.rejected == ()


def test_empty_corpus_writes_header_only(corpus, tmp_path):
    path = tmp_path / "empty.csv"
    write_corpus(corpus.with_samples([]), str(path))
    assert path.read_text(encoding="utf-8") == "mr,ref\n"
    assert len(load_corpus(str(path))) == 0


def test_stats_count_mrs_outside_the_corpus_slot_range(corpus, tmp_path):
    assert corpus_stats(corpus).invalid_mrs == 0
    path = tmp_path / "short.csv"
    path.write_text('mr,ref\n"name[Zizzi], eatType[pub]",Zizzi is a pub.\n', encoding="utf-8")
    assert corpus_stats(load_corpus(str(path))).invalid_mrs == 1
