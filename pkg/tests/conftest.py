import numpy as np
import pytest

from retroframes import Frame


def random_frame(rng, dim=None, m=None, complex_field=False, weighted=True, min_m=None):
    """Gaussian frame with ``m >= dim`` vectors (so almost surely spanning)."""
    n = dim if dim is not None else int(rng.integers(1, 7))
    lo = n if min_m is None else min_m
    m = m if m is not None else int(rng.integers(lo, 13))
    v = rng.standard_normal((m, n))
    if complex_field:
        v = v + 1j * rng.standard_normal((m, n))
    w = rng.uniform(0.2, 3.0, m) if weighted else np.ones(m)
    return Frame.from_vectors(v, weights=w)


def random_family(rng, max_dim=6, max_m=10):
    """Mixed family: independent, spanning-redundant, or with planted dependencies.

    Used where exact and non-exact families should both appear often.
    """
    n = int(rng.integers(1, max_dim + 1))
    kind = rng.integers(0, 4)
    if kind == 0:  # independent, possibly not spanning
        m = int(rng.integers(1, n + 1))
        v = rng.standard_normal((m, n))
    elif kind == 1:  # more vectors than dimensions
        m = int(rng.integers(n + 1, max(n + 2, max_m + 1)))
        v = rng.standard_normal((m, n))
    elif kind == 2:  # independent set plus a duplicate of one member
        m = int(rng.integers(1, n + 1))
        v = rng.standard_normal((m, n))
        v = np.vstack([v, v[rng.integers(0, m)] * rng.uniform(0.5, 2)])
    else:  # independent set plus a combination of two members
        m = int(rng.integers(2, n + 1)) if n >= 2 else 1
        v = rng.standard_normal((m, n))
        c = rng.standard_normal(m)
        if m >= 2:
            c[rng.integers(0, m)] = 0.0
        v = np.vstack([v, c @ v])
    perm = rng.permutation(len(v))
    w = rng.uniform(0.2, 3.0, len(v))
    return Frame.from_vectors(v[perm], weights=w)


@pytest.fixture
def rng():
    return np.random.default_rng(12345)


@pytest.fixture
def e3():
    eye = np.eye(3)
    return Frame.from_vectors(np.vstack([eye[:1], eye]))


@pytest.fixture
def onb3():
    return Frame.from_vectors(np.eye(3))


ACCEPTANCE_LINES = []


@pytest.fixture
def criterion():
    """Record a one-line verdict for the acceptance summary."""

    def record(number, title, passed, detail=""):
        line = f"criterion {number}: {'PASS' if passed else 'FAIL'}  {title}"
        if detail:
            line += f"  [{detail}]"
        ACCEPTANCE_LINES.append(line)
        print(line)
        return passed

    return record


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split()[1].rstrip(":"))):
            terminalreporter.write_line(line)
