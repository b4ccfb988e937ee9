import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))  # make oracles importable

DATA_DIR = Path(__file__).parent / "data"


@pytest.fixture(scope="session")
def fixture_transcript_path() -> Path:
    return DATA_DIR / "fixture_meeting.txt"


@pytest.fixture(scope="session")
def fixture_transcript_text(fixture_transcript_path) -> str:
    return fixture_transcript_path.read_text(encoding="utf-8")
