import random

from hypothesis import strategies as st

from corona_spectra.graphs import Graph


@st.composite
def graphs(draw, min_n=1, max_n=6):
    n = draw(st.integers(min_n, max_n))
    pairs = [(i, j) for j in range(n) for i in range(j)]
    mask = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph(n, frozenset(p for p, keep in zip(pairs, mask) if keep))


def random_graph(rng: random.Random, n: int, p: float = 0.5) -> Graph:
    return Graph(n, frozenset((i, j) for j in range(n) for i in range(j) if rng.random() < p))


def to_nx(g: Graph):
    import networkx as nx

    out = nx.Graph()
    out.add_nodes_from(range(g.n))
    out.add_edges_from(g.edges)
    return out
