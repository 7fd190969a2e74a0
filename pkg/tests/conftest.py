import itertools

from hypothesis import strategies as st

from z2lab.crosscap import CrosscapDrawing
from z2lab.gf2 import BitVec, Gf2Matrix
from z2lab.graph import Graph


@st.composite
def graphs(draw, min_n=1, max_n=8, connected=False):
    n = draw(st.integers(min_n, max_n))
    pairs = list(itertools.combinations(range(n), 2))
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    if connected:
        # add a random spanning path so the graph is connected
        perm = draw(st.permutations(range(n)))
        path = {tuple(sorted(p)) for p in zip(perm, perm[1:])}
        chosen = sorted(set(chosen) | path)
    return Graph.from_edges(n, chosen)


def bitvecs(length):
    return st.integers(0, (1 << length) - 1).map(lambda b: BitVec(length, b))


@st.composite
def matrices(draw, max_rows=7, max_cols=7):
    r = draw(st.integers(0, max_rows))
    c = draw(st.integers(0, max_cols))
    rows = draw(st.lists(st.integers(0, (1 << c) - 1), min_size=r, max_size=r))
    return Gf2Matrix(r, c, tuple(rows))


@st.composite
def data(draw, max_n=7, max_h=5, connected=True):
    """Independently even crosscap data (no outside crossings)."""
    g = draw(graphs(min_n=2, max_n=max_n, connected=connected))
    h = draw(st.integers(0, max_h))
    y = draw(st.lists(bitvecs(h), min_size=g.m, max_size=g.m))
    return CrosscapDrawing(g, h, tuple(y))
