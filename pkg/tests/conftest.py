import random
from functools import lru_cache

import pytest
from hypothesis import HealthCheck, settings

from checkerboard.braidword import BraidWord, linking_graph
from checkerboard.catalog import checkerboard_graphs, checkerboard_trees

settings.register_profile("default", max_examples=60, deadline=None, suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")


@lru_cache(maxsize=None)
def graphs_up_to(n):
    out = []
    for k in range(1, n + 1):
        out.extend(checkerboard_graphs(k))
    return tuple(out)


@lru_cache(maxsize=None)
def trees_up_to(n):
    out = []
    for k in range(1, n + 1):
        out.extend(checkerboard_trees(k))
    return tuple(out)


def random_prime_words(count, seed=0, max_strands=5, max_length=14):
    """Random positive words using every generator whose linking graph is connected."""
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        n = rng.randint(2, max_strands)
        length = rng.randint(n - 1, max_length)
        letters = [rng.randint(1, n - 1) for _ in range(length)]
        w = BraidWord.of(letters, n)
        if not w.uses_all_generators():
            continue
        g = linking_graph(w)
        if g.n_vertices() and g.is_connected():
            out.append(w)
    return out


@pytest.fixture(scope="session")
def small_graphs():
    return graphs_up_to(6)


@pytest.fixture(scope="session")
def small_trees():
    return trees_up_to(6)


@pytest.fixture(scope="session")
def prime_words():
    return random_prime_words(400, seed=11)


# acceptance criteria report one line each; the lines are repeated in the terminal summary
ACCEPTANCE: dict[int, str] = {}


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE:
        terminalreporter.section("acceptance criteria")
        for n in sorted(ACCEPTANCE):
            terminalreporter.write_line(ACCEPTANCE[n])
