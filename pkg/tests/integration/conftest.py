import subprocess
import sys
from pathlib import Path

import pytest

ROOT = Path(__file__).parents[2]


@pytest.fixture(scope="session")
def run_cli():
    def _run(*args: str) -> subprocess.CompletedProcess:
        return subprocess.run(
            [sys.executable, "-m", "euler_diophantine", *args],
            cwd=ROOT,
            capture_output=True,
            text=True,
        )

    return _run
