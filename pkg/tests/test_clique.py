import networkx as nx
from hypothesis import given
from hypothesis import strategies as st

from rif.clique import brute_force_max_weight_clique, max_weight_clique


@st.composite
def graphs(draw, max_m=11):
    m = draw(st.integers(0, max_m))
    weights = draw(st.lists(st.integers(1, 20), min_size=m, max_size=m))
    density = draw(st.sampled_from([0.2, 0.5, 0.9]))
    adj = [0] * m
    for a in range(m):
        for b in range(a + 1, m):
            if draw(st.floats(0, 1)) < density:
                adj[a] |= 1 << b
                adj[b] |= 1 << a
    return weights, adj


def is_clique(vs, adj):
    return all(adj[a] >> b & 1 for i, a in enumerate(vs) for b in vs[i + 1 :])


@given(graphs())
def test_matches_brute_force(g):
    weights, adj = g
    res = max_weight_clique(weights, adj)
    assert res.weight == brute_force_max_weight_clique(weights, adj)
    assert is_clique(res.vertices, adj)
    assert sum(weights[v] for v in res.vertices) == res.weight


@given(graphs(max_m=30))
def test_matches_networkx(g):
    weights, adj = g
    G = nx.Graph()
    for v, w in enumerate(weights):
        G.add_node(v, weight=w)
    for a, row in enumerate(adj):
        for b in range(a + 1, len(weights)):
            if row >> b & 1:
                G.add_edge(a, b)
    _, best = nx.max_weight_clique(G, weight="weight")
    assert max_weight_clique(weights, adj).weight == best


def test_empty_and_single():
    assert max_weight_clique([], []).weight == 0
    assert max_weight_clique([5], [0]).vertices == (0,)
