from hypothesis import strategies as st

from cliquepoly.graph import Graph


@st.composite
def graphs(draw, min_n=0, max_n=7):
    n = draw(st.integers(min_n, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return Graph(n, frozenset(chosen))


@st.composite
def int_polys(draw, max_degree=6, bound=20, nonzero=True):
    coeffs = draw(st.lists(st.integers(-bound, bound), min_size=1, max_size=max_degree + 1))
    if nonzero and not any(coeffs):
        coeffs[-1] = 1
    return coeffs
