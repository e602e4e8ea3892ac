from pathlib import Path

import pytest

from negtransfer.lexicons import default_lexicon_dir, load_lexicons
from negtransfer.records import read_records

GOLD = default_lexicon_dir() / "corpus" / "gold.jsonl"


@pytest.fixture(scope="session")
def lex():
    return load_lexicons()


@pytest.fixture(scope="session")
def gold_path() -> Path:
    return GOLD


@pytest.fixture(scope="session")
def gold_records():
    records = [rec for _, rec in read_records(GOLD)]
    assert all(not isinstance(r, Exception) for r in records)
    return {r.id: r for r in records}
