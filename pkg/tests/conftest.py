import sys
from pathlib import Path

import pytest

TESTS = Path(__file__).resolve().parent
ROOT = TESTS.parent
sys.path.insert(0, str(TESTS))

CORPUS = ROOT / "corpus"


@pytest.fixture(scope="session")
def corpus_dir() -> Path:
    return CORPUS


@pytest.fixture(scope="session")
def corpus_diagrams():
    from tanglecert.diagram import parse_diagram

    out = {}
    for f in sorted(CORPUS.glob("*.pd")):
        out[f.stem] = parse_diagram(f.read_text())
    return out


@pytest.fixture(scope="session")
def trefoil():
    from tanglecert.diagram import parse_diagram

    return parse_diagram("X 1 4 2 5 ; X 3 6 4 1 ; X 5 2 6 3")
