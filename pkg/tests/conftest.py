from pathlib import Path

import pytest

ROOT = Path(__file__).resolve().parents[1]


@pytest.fixture(autouse=True)
def _repo_root(monkeypatch):
    # data files are referenced relative to the repository root
    monkeypatch.chdir(ROOT)
