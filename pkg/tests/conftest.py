import sys
from pathlib import Path

import numpy as np
import pytest

sys.path.insert(0, str(Path(__file__).parent))

from helpers import load_bundled  # noqa: E402
from hankel_hurwitz.matpoly import MatrixPolynomial  # noqa: E402


@pytest.fixture(scope="session")
def example_f() -> MatrixPolynomial:
    return load_bundled("example_paper.json")


@pytest.fixture
def rng():
    return np.random.default_rng(20240601)


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for n in sorted(RESULTS):
            terminalreporter.write_line(RESULTS[n])
