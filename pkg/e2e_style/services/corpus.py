"""
E2E-format corpus input/output and corpus statistics.
"""
import csv
import logging
from collections import Counter, defaultdict
from pathlib import Path
from typing import Dict, List, Optional

import pandas as pd

from ..core.errors import CorpusFormatError, CorpusIOError, MRParseError, MRStructureError
from ..core.mr import canonical_key, mr_is_corpus_valid, parse_mr, serialize_mr
from ..core.ontology import SlotName
from ..core.text import TextAnalyzer, default_analyzer
from ..schemas.corpus import Corpus, CorpusSample, EvalPair, RejectedRow, Split, StatsReport

logger = logging.getLogger(__name__)

MR_COLUMN = "mr"
REF_COLUMN = "ref"
OUTPUT_COLUMN = "output"


def _separator(path: str, fmt: Optional[str] = None) -> str:
    fmt = fmt or ("tsv" if str(path).lower().endswith(".tsv") else "csv")
    if fmt not in ("csv", "tsv"):
        raise CorpusFormatError(f"Unsupported format {fmt!r}")
    return "\t" if fmt == "tsv" else ","


def _read_table(path: str, required: List[str]) -> pd.DataFrame:
    try:
        df = pd.read_csv(path, sep=_separator(path), dtype=str, keep_default_na=False, encoding="utf-8")
    except FileNotFoundError as e:
        raise CorpusIOError(f"Cannot read {path}: file not found") from e
    except pd.errors.EmptyDataError as e:
        raise CorpusFormatError(f"{path} has no header row") from e
    except pd.errors.ParserError as e:
        raise CorpusFormatError(f"{path} is not valid CSV: {e}") from e
    except (OSError, UnicodeDecodeError) as e:
        raise CorpusIOError(f"Cannot read {path}: {e}") from e

    df.columns = [str(c).strip().lower() for c in df.columns]
    missing = [c for c in required if c not in df.columns]
    if missing:
        raise CorpusFormatError(f"{path} is missing column(s): {', '.join(missing)}")
    return df


def load_corpus(path: str, split: Split = Split.TRAINING, permissive: bool = False) -> Corpus:
    """Load an E2E CSV (or .tsv) file; rows keep their file order"""
    df = _read_table(path, [MR_COLUMN, REF_COLUMN])
    samples: List[CorpusSample] = []
    rejected: List[RejectedRow] = []

    for row, (mr_text, ref) in enumerate(zip(df[MR_COLUMN], df[REF_COLUMN]), start=1):
        try:
            if not mr_text.strip():
                raise CorpusFormatError("empty MR", row=row)
            if not ref.strip():
                raise CorpusFormatError("empty reference", row=row)
            samples.append(CorpusSample(mr=parse_mr(mr_text), ref=ref, split=split))
        except (MRParseError, MRStructureError, CorpusFormatError) as e:
            if not permissive:
                if isinstance(e, CorpusFormatError):
                    raise
                raise CorpusFormatError(str(e), row=row) from e
            logger.debug("Rejected row %d of %s: %s", row, path, e)
            rejected.append(RejectedRow(row=row, mr=mr_text, error=str(e)))

    if rejected:
        logger.warning("Rejected %d malformed rows in %s", len(rejected), path)
    logger.info("Loaded %d samples from %s", len(samples), path)
    return Corpus(samples=tuple(samples), provenance=(str(path),), rejected=tuple(rejected))


def load_outputs(path: str) -> List[EvalPair]:
    """Read system outputs (`mr`, `output` columns; a `ref` column is accepted instead of `output`)"""
    try:
        df = _read_table(path, [MR_COLUMN, OUTPUT_COLUMN])
        column = OUTPUT_COLUMN
    except CorpusFormatError:
        df = _read_table(path, [MR_COLUMN, REF_COLUMN])
        column = REF_COLUMN

    pairs = []
    source = Path(path).stem
    for row, (mr_text, utterance) in enumerate(zip(df[MR_COLUMN], df[column]), start=1):
        if not utterance.strip():
            raise CorpusFormatError("empty output utterance", row=row)
        try:
            mr = parse_mr(mr_text)
        except (MRParseError, MRStructureError) as e:
            raise CorpusFormatError(str(e), row=row) from e
        pairs.append(EvalPair(mr=mr, utterance=utterance, source=source))
    logger.info("Loaded %d output pairs from %s", len(pairs), path)
    return pairs


def write_corpus(corpus: Corpus, path: str, fmt: Optional[str] = None) -> None:
    """Write `mr`,`ref` columns; MRs keep their annotations"""
    df = pd.DataFrame(
        {MR_COLUMN: [serialize_mr(s.mr) for s in corpus.samples],
         REF_COLUMN: [s.ref for s in corpus.samples]},
        columns=[MR_COLUMN, REF_COLUMN],
    )
    try:
        df.to_csv(path, sep=_separator(path, fmt), index=False, encoding="utf-8",
                  quoting=csv.QUOTE_MINIMAL, lineterminator="\n")
    except OSError as e:
        raise CorpusIOError(f"Cannot write {path}: {e}") from e
    logger.info("Wrote %d samples to %s", len(corpus), path)


def _distribution(counts: Counter) -> Dict[str, float]:
    total = sum(counts.values())
    return {str(k): counts[k] / total for k in sorted(counts)} if total else {}


def corpus_stats(corpus: Corpus, analyzer: Optional[TextAnalyzer] = None) -> StatsReport:
    """Counts and distributions over the corpus; `invalid_mrs` counts MRs outside the 3-8 slot range"""
    analyzer = analyzer or default_analyzer()
    slot_counts: Counter = Counter()
    unique_slot_counts: Counter = Counter()
    sentences: Dict[int, List[int]] = defaultdict(list)
    frequency: Counter = Counter()
    invalid = 0
    seen = set()

    for sample in corpus.samples:
        n = len(sample.mr.slots)
        slot_counts[n] += 1
        key = canonical_key(sample.mr)
        if key not in seen:
            seen.add(key)
            unique_slot_counts[n] += 1
        tokens = analyzer.tag_tokens(analyzer.tokenize(sample.ref))
        sentences[n].append(len(analyzer.split_sentences(tokens)))
        frequency.update(slot.name for slot in sample.mr.slots)
        if not mr_is_corpus_valid(sample.mr):
            invalid += 1

    if invalid:
        logger.warning("%d of %d MRs fall outside the 3-8 slot range", invalid, len(corpus))
    return StatsReport(
        total_samples=len(corpus),
        unique_mrs=len(seen),
        slot_count_distribution=_distribution(slot_counts),
        slot_count_distribution_unique=_distribution(unique_slot_counts),
        mean_sentences_by_slot_count={str(n): sum(v) / len(v) for n, v in sorted(sentences.items())},
        slot_frequency={slot.value: frequency[slot] for slot in SlotName if frequency[slot]},
        invalid_mrs=invalid,
    )
