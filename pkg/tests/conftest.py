import numpy as np
import pytest

from jfrt.graph import Graph, build_knn_graph


@pytest.fixture
def rng():
    return np.random.default_rng(12345)


def _random_graph(n, seed, k=3):
    coords = np.random.default_rng(seed).random((n, 2))
    return build_knn_graph(coords, min(k, n - 1))


@pytest.fixture(scope="session")
def random_graph():
    """Factory for connected-ish random geometric k-NN graphs."""
    return _random_graph


@pytest.fixture
def path2():
    return Graph(adjacency=np.array([[0.0, 1.0], [1.0, 0.0]]))


def complex_normal(rng, shape):
    return rng.standard_normal(shape) + 1j * rng.standard_normal(shape)


@pytest.fixture
def crandn(rng):
    return lambda *shape: complex_normal(rng, shape)


_CRITERIA = {}


@pytest.fixture(scope="session")
def criterion_report():
    """Record one PASS/FAIL/SKIP line per acceptance criterion."""

    def record(number, passed, detail):
        status = passed if isinstance(passed, str) else ("PASS" if passed else "FAIL")
        line = f"criterion {number}: {status}  {detail}"
        _CRITERIA[number] = line
        print(line)
        return passed

    return record


def pytest_terminal_summary(terminalreporter):
    if _CRITERIA:
        terminalreporter.section("acceptance criteria")
        for number in sorted(_CRITERIA):
            terminalreporter.write_line(_CRITERIA[number])
