import os
import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from _novel import build_novel  # noqa: E402


@pytest.fixture(scope="session")
def novel():
    """(text, exact per-sentence word counts) of the synthetic novel.

    Point TEXTFRACT_NOVEL at a plain-text file to run the text-scale
    checks on a real novel instead; the word counts are then None and
    oracle-exact assertions are skipped.
    """
    override = os.environ.get("TEXTFRACT_NOVEL")
    if override:
        return Path(override).read_text(encoding="utf-8"), None
    return build_novel()


@pytest.fixture(scope="session")
def novel_path(novel, tmp_path_factory):
    text, _lengths = novel
    path = tmp_path_factory.mktemp("novel") / "novel.txt"
    path.write_text(text, encoding="utf-8")
    return path
