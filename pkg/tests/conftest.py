import numpy as np
import pytest
from hypothesis import settings

# Deterministic property tests: the same examples on every run.
settings.register_profile("repro", derandomize=True, deadline=None, print_blob=True)
settings.load_profile("repro")


def rel_err(a, b):
    return abs(complex(a) - complex(b)) / max(1.0, abs(complex(b)))


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
        for line in RESULTS:
            terminalreporter.write_line(line)
