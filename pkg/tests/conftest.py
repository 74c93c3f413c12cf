import json
from pathlib import Path

import pytest

FIXTURES = Path(__file__).parent / "fixtures"


@pytest.fixture
def golden():
    """Load a golden matrix fixture as (rows, cols, entry-string grid)."""

    def load(name):
        data = json.loads((FIXTURES / (name + ".json")).read_text())
        rows = [tuple(int(c) for c in r) for r in data["rows"]]
        cols = [tuple(int(c) for c in r) for r in data["cols"]]
        return rows, cols, data["entries"]

    return load


def assert_matches_golden(mat, fixture):
    rows, cols, entries = fixture
    assert list(mat.rows) == rows
    assert list(mat.cols) == cols
    got = mat.strings()
    for i, la in enumerate(rows):
        for j, mu in enumerate(cols):
            assert got[i][j] == entries[i][j], (
                "cell (%s, %s): computed %s, golden %s"
                % (la, mu, got[i][j], entries[i][j]))
