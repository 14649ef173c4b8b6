import numpy as np
import pytest
from hypothesis import settings

settings.register_profile("default", deadline=None, max_examples=60)
settings.load_profile("default")


def random_graph(n, p=0.3, seed=0):
    rng = np.random.default_rng(seed)
    U = np.triu(rng.random((n, n)) < p, 1).astype(float)
    return U + U.T


def complete_graph(n):
    return np.ones((n, n)) - np.eye(n)


def two_block_graph(n):
    """Complete within two equal halves, no edges between them."""
    half = n // 2
    z = np.r_[np.zeros(half, int), np.ones(n - half, int)]
    A = (z[:, None] == z[None, :]).astype(float)
    np.fill_diagonal(A, 0)
    return A, z


@pytest.fixture
def path3():
    return np.array([[0, 1, 0], [1, 0, 1], [0, 1, 0]], dtype=float)


# one line per acceptance criterion, printed after the run
ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
