import re

import pytest

from ehrgraph import Hypergraph, generate_family

FIG1 = Hypergraph(5, [[1, 2, 3], [3, 4], [4, 5]])
FIG2 = Hypergraph(6, [[1, 2, 6], [2, 3, 4], [4, 5, 6]])
K2 = Hypergraph(2, [[1, 2]])
LOOP = Hypergraph(1, [[1]])
C3 = generate_family("cycle", [3])


def _corpus():
    c = {
        "fig1": FIG1,
        "fig2": FIG2,
        "K2": K2,
        "loop": LOOP,
        "K4": generate_family("complete", [4]),
        "K22": generate_family("complete_bipartite", [2, 2]),
        "K23": generate_family("complete_bipartite", [2, 3]),
        "Q2": generate_family("hypercube", [2]),
        "two_components": Hypergraph(4, [[1, 2], [3, 4]]),
        "nested_edges": Hypergraph(3, [[1, 2, 3], [2, 3]]),
        "repeated_edge": Hypergraph(3, [[1, 2], [1, 2], [2, 3]]),
        "loop_and_triple": Hypergraph(4, [[1], [1, 2, 3], [3, 4]]),
    }
    for n in range(3, 7):
        c[f"C{n}"] = generate_family("cycle", [n])
    for n in range(1, 7):
        c[f"P{n}"] = generate_family("path", [n])
    return c


CORPUS = _corpus()


@pytest.fixture
def fig1():
    return FIG1


@pytest.fixture
def fig2():
    return FIG2


# Acceptance criterion results, filled in by test_acceptance.py.
ACCEPTANCE: dict = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(ACCEPTANCE, key=lambda s: (int(re.match(r"\d+", s).group()), s)):
        ok, detail = ACCEPTANCE[key]
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  criterion {key}: {detail}")
