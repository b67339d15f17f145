import pytest
from hypothesis import strategies as st

from mdtrees.tree_domain import OrderedTree


def tree_from_parents(parents, labels):
    """Children are attached in index order, so ``parents[i] < i`` gives an
    ordered tree; ``labels[i]`` labels vertex ``i``."""
    kids = [[] for _ in labels]
    for i, p in enumerate(parents, start=1):
        kids[p].append(i)

    def build(i):
        return OrderedTree(labels[i], tuple(build(c) for c in kids[i]))

    return build(0)


@st.composite
def prefix_trees(draw, max_n=10):
    """Ordered trees labeled by exactly ``0..n``."""
    n = draw(st.integers(0, max_n))
    parents = [draw(st.integers(0, i - 1)) for i in range(1, n + 1)]
    labels = draw(st.permutations(range(n + 1)))
    return tree_from_parents(parents, labels)

_ACCEPTANCE = []


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    if rep.when == "call" and item.module.__name__.endswith("test_acceptance"):
        detail = getattr(item, "acceptance_detail", "")
        status = "PASS" if rep.passed else "FAIL"
        _ACCEPTANCE.append(f"[{status}] {item.name}{': ' + detail if detail else ''}")


def pytest_terminal_summary(terminalreporter):
    if _ACCEPTANCE:
        terminalreporter.section("acceptance criteria")
        for line in _ACCEPTANCE:
            terminalreporter.write_line(line)
