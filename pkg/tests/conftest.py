import os
import random
from functools import lru_cache

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from tightcut.corpus import cycle, matching_covered_corpus, named_graphs
from tightcut.graph import Multigraph
from tightcut.matching import is_matching_covered

settings.register_profile(
    "default", max_examples=60, deadline=None, suppress_health_check=[HealthCheck.too_slow]
)
settings.register_profile("thorough", max_examples=600, deadline=None, suppress_health_check=list(HealthCheck))
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))


def edge_list(n, pairs):
    return Multigraph(n, tuple(pairs))


C4 = cycle(4)
C6 = cycle(6)
C10 = cycle(10)
K4 = named_graphs()["K4"]
PATH4 = edge_list(4, [(1, 2), (2, 3), (3, 4)])


@lru_cache(maxsize=None)
def corpus_mc(max_n=None):
    return tuple(matching_covered_corpus(max_n=max_n))


@lru_cache(maxsize=None)
def small_mc():
    """Matching covered corpus graphs on up to 8 vertices with a nontrivial tight cut, thinned."""
    from tightcut.oracle import nontrivial_tight_cuts

    rng = random.Random(7)
    out = [g for _, g in corpus_mc(8) if g.n >= 6 and nontrivial_tight_cuts(g)]
    rng.shuffle(out)
    return tuple(out[:400])


def relabelled(g, perm):
    return g.relabel({v: perm[v - 1] for v in g.vertices})


@st.composite
def mc_graphs(draw, min_n=4, max_n=10):
    """Matching covered graphs: an even cycle plus chords and parallel edges,
    randomly labelled, kept only when matching covered."""
    n = draw(st.sampled_from([k for k in range(min_n, max_n + 1, 2)]))
    order = draw(st.permutations(range(1, n + 1)))
    edges = [(order[i], order[(i + 1) % n]) for i in range(n)]
    pairs = [(u, v) for u in range(1, n + 1) for v in range(u + 1, n + 1)]
    edges += draw(st.lists(st.sampled_from(pairs), max_size=n))
    g = Multigraph(n, tuple(edges))
    if not is_matching_covered(g):
        g = cycle(n).relabel({v: order[v - 1] for v in range(1, n + 1)})
    return g


@st.composite
def corpus_graphs(draw, with_cut=True):
    """A corpus graph (optionally one with a nontrivial tight cut), relabelled."""
    g = draw(st.sampled_from(small_mc() if with_cut else [g for _, g in corpus_mc(8)]))
    perm = draw(st.permutations(range(1, g.n + 1)))
    return relabelled(g, perm)


@pytest.fixture(scope="session")
def c6():
    return C6


ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
