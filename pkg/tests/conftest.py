import warnings
from pathlib import Path

import pytest

from koszul.ring import QQ, FieldSpec, RingSpec
from koszul.verifier import EntryAnalysis, load_corpus

CORPUS_DIR = Path(__file__).resolve().parents[1] / "corpus"
F32003 = FieldSpec(32003)
EN_ID = "eagon_northcott_2x4"


def make_ring(names: str, field: FieldSpec = QQ, order: str = "degrevlex") -> RingSpec:
    return RingSpec(field, tuple(names.split(",")), order=order)


@pytest.fixture(scope="session")
def corpus():
    return {e.id: e for e in load_corpus(CORPUS_DIR)}


class _Analyses(dict):
    """Shared ``EntryAnalysis`` objects so expensive data is computed once per session."""

    def __init__(self, entries):
        super().__init__()
        self.entries = entries

    def __missing__(self, key):
        with warnings.catch_warnings():
            warnings.simplefilter("ignore")
            a = EntryAnalysis(self.entries[key])
        self[key] = a
        return a


@pytest.fixture(scope="session")
def analyses(corpus):
    return _Analyses(corpus)


ACCEPTANCE: dict[str, tuple[bool, str]] = {}


def record_criterion(name: str, ok: bool, detail: str) -> None:
    ACCEPTANCE[name] = (ok, detail)


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for name in sorted(ACCEPTANCE):
        ok, detail = ACCEPTANCE[name]
        terminalreporter.write_line(f"{name} {'PASS' if ok else 'FAIL'}  {detail}")
