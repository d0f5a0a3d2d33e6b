import networkx as nx
from hypothesis import given
from hypothesis import strategies as st

from tightcut.canon import canonical_form, isomorphic
from tightcut.corpus import complete, complete_bipartite, cube, petersen, prism

from conftest import C6, corpus_graphs, relabelled


def _nx(g):
    h = nx.Graph(g.support().edges)
    h.add_nodes_from(g.vertices)
    return h


def test_named_graphs_distinguished():
    graphs = [C6, prism(), complete_bipartite(3, 3)]
    for i, a in enumerate(graphs):
        for b in graphs[i + 1:]:
            assert not isomorphic(a, b)


def test_symmetric_graphs_are_fast_and_stable():
    for g in (complete(8), complete_bipartite(4, 4), cube(), petersen()):
        perm = list(reversed(g.vertices))
        assert canonical_form(relabelled(g, perm)) == canonical_form(g)


@given(corpus_graphs(with_cut=False), st.data())
def test_form_invariant_under_relabelling(g, data):
    perm = data.draw(st.permutations(range(1, g.n + 1)))
    assert canonical_form(relabelled(g, perm)) == canonical_form(g)


@given(corpus_graphs(with_cut=False), corpus_graphs(with_cut=False))
def test_agrees_with_networkx(g, h):
    assert isomorphic(g, h) == nx.is_isomorphic(_nx(g), _nx(h))
