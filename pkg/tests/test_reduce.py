import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cliquepoly.clique import clique_polynomial, count_cliques
from cliquepoly.graph import Graph, complete_graph, cycle_graph, disjoint_union, worked_example_graph, k4_plus, path_graph
from cliquepoly.poly import X_PLUS_ONE, IntPolynomial
from cliquepoly.reduce import (
    SUN3,
    SUN3_BAD_TREE,
    PreconditionError,
    bfs_spanning_tree,
    quadratic_factor,
    random_spanning_tree,
    require_k4_free_chordal,
    triangle_free_reduction,
    verify_euler_identity,
)
from corpus import k4_free_chordal, k4_free_chordal_by_extension


def test_quadratic_factor_examples():
    assert quadratic_factor(6, 9) == IntPolynomial.of(1, 5, 4)
    assert quadratic_factor(3, 3) == IntPolynomial.of(1, 2, 1)
    assert quadratic_factor(2, 1) == IntPolynomial.of(1, 1)
    assert quadratic_factor(1, 0) == IntPolynomial.of(1)
    with pytest.raises(ValueError):
        quadratic_factor(0, 0)
    with pytest.raises(ValueError):
        quadratic_factor(5, 3)


def test_worked_example_trace():
    g = worked_example_graph()
    assert (g.n, g.m, count_cliques(g)[3]) == (6, 9, 4)
    tr = triangle_free_reduction(g, root=0)
    assert tr.tree_edges == ((0, 1), (0, 2), (0, 3), (1, 5), (2, 4))
    assert tr.g_hat.degree(0) == 0
    assert (tr.g_tilde.n, tr.g_tilde.m) == (5, 4)
    assert count_cliques(tr.g_tilde)[3] == 0
    assert tr.q == IntPolynomial.of(1, 5, 4)
    assert clique_polynomial(tr.g_tilde) == tr.q
    assert clique_polynomial(g) == X_PLUS_ONE * tr.q
    assert tr.violations == ()


def test_worked_example_trace_json():
    d = triangle_free_reduction(worked_example_graph()).to_json()
    assert d["q"] == ["1", "5", "4"]
    assert d["q_text"] == "1 + 5*x + 4*x^2"
    assert d["g_tilde"]["n"] == "5"
    assert all(isinstance(x, str) for e in d["tree"]["edges"] for x in e)


def test_small_reductions():
    tr = triangle_free_reduction(complete_graph(2))
    assert (tr.g_tilde.n, tr.g_tilde.m, tr.q) == (1, 0, IntPolynomial.of(1, 1))
    tr = triangle_free_reduction(complete_graph(3), root=1)
    assert (tr.g_tilde.n, tr.g_tilde.m, tr.q) == (2, 1, IntPolynomial.of(1, 2, 1))
    tr = triangle_free_reduction(complete_graph(1))
    assert tr.q == IntPolynomial.of(1) and tr.violations == ()


def test_euler_identity_examples():
    assert verify_euler_identity(worked_example_graph())
    assert verify_euler_identity(complete_graph(3))
    assert verify_euler_identity(path_graph(5))


def test_precondition_reasons():
    cases = [
        (disjoint_union(complete_graph(2), complete_graph(2)), "not_connected"),
        (cycle_graph(4), "not_chordal"),
        (k4_plus(), "has_k4"),
        (Graph(0), "not_connected"),
    ]
    for g, reason in cases:
        with pytest.raises(PreconditionError) as exc:
            require_k4_free_chordal(g)
        assert exc.value.reason == reason
        with pytest.raises(PreconditionError):
            triangle_free_reduction(g)
    require_k4_free_chordal(cycle_graph(4), chordal=False)


def test_root_out_of_range():
    with pytest.raises(ValueError):
        triangle_free_reduction(path_graph(3), root=3)


def test_bfs_tree_on_every_root_of_catalog():
    count = 0
    graphs = [g for n in range(1, 9) for g in k4_free_chordal_by_extension(n)]
    for g in graphs:
        for root in range(g.n):
            tr = triangle_free_reduction(g, root)
            assert tr.violations == (), (g.sorted_edges(), root, tr.violations)
            count += 1
    assert count == 5158


def test_arbitrary_tree_can_leave_a_triangle():
    # choice of spanning tree matters: this one keeps the central triangle
    tr = triangle_free_reduction(SUN3, root=3, tree=SUN3_BAD_TREE)
    assert tr.g_hat.degree(3) == 0
    assert any("triangles" in v for v in tr.violations)
    # the polynomial identity itself still holds
    assert clique_polynomial(SUN3) == X_PLUS_ONE * tr.q
    assert triangle_free_reduction(SUN3, root=3).violations == ()


def test_non_star_tree_leaves_root_attached():
    g = complete_graph(3)
    tr = triangle_free_reduction(g, root=0, tree=[(0, 1), (1, 2)])
    assert any("isolated" in v for v in tr.violations)


@settings(max_examples=150, deadline=None)
@given(st.integers(0, 2**64 - 1), st.data())
def test_random_tree_isolates_root(seed, data):
    cat = k4_free_chordal(7)
    g = cat[data.draw(st.integers(0, len(cat) - 1))]
    root = data.draw(st.integers(0, g.n - 1))
    tree = random_spanning_tree(g, root, seed)
    assert len(tree) == g.n - 1
    tr = triangle_free_reduction(g, root, tree)
    assert tr.g_hat.degree(root) == 0
    assert tr.g_tilde.m == g.m - g.n + 1


def test_bfs_tree_is_deterministic():
    g = worked_example_graph()
    assert bfs_spanning_tree(g, 2) == bfs_spanning_tree(g, 2)
    assert {u for e in bfs_spanning_tree(g, 2) for u in e if 2 in e} >= set(g.adjacency[2])
