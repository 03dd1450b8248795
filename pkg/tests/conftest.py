from __future__ import annotations

import pytest

from gradedrings.verifier import CorpusEntry, default_corpus


@pytest.fixture(scope="session")
def corpus() -> list[CorpusEntry]:
    # one corpus per session so predicate memos are shared across tests
    return default_corpus()


@pytest.fixture(scope="session")
def small_corpus(corpus) -> list[CorpusEntry]:
    return [e for e in corpus if e.gr.ring.size <= 16]
