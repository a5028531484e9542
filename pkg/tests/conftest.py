from pathlib import Path

import pandas as pd
import pytest

from e2e_style.core.mr import parse_mr
from e2e_style.services.corpus import load_corpus
from e2e_style.services.pipeline import Toolkit

from .samples import WILDWOOD_MR

FIXTURES = Path(__file__).parent / "fixtures"


@pytest.fixture
def sample_path() -> Path:
    return FIXTURES / "e2e_sample.csv"


@pytest.fixture
def corpus(sample_path):
    return load_corpus(str(sample_path))


@pytest.fixture(scope="session")
def toolkit() -> Toolkit:
    return Toolkit()


@pytest.fixture
def wildwood_mr():
    return parse_mr(WILDWOOD_MR)


@pytest.fixture(scope="session")
def gold_slice() -> pd.DataFrame:
    """Hand-labelled alignment sample: mr, ref and the slots the ref realizes"""
    return pd.read_csv(FIXTURES / "alignment_gold.csv", dtype=str, keep_default_na=False)
