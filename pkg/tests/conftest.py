import hypothesis.strategies as st

from multidom import Graph


@st.composite
def graphs(draw, min_n: int = 1, max_n: int = 10):
    """Arbitrary small graphs: pick n, then any subset of the possible edges."""
    n = draw(st.integers(min_value=min_n, max_value=max_n))
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    if pairs:
        edges = draw(st.lists(st.sampled_from(pairs), unique=True, max_size=len(pairs)))
    else:
        edges = []
    return Graph(n, edges)


@st.composite
def vertex_subsets(draw, g: Graph):
    return frozenset(draw(st.lists(st.integers(0, g.n - 1), unique=True)))
