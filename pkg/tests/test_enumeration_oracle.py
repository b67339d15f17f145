import networkx as nx
import pytest

from mdtrees import count_tables
from mdtrees.enumeration_oracle import (
    EnumerationCapError,
    EnumerationReport,
    Family,
    enumerate_decreasing_trees,
    enumerate_forests,
    enumerate_ordered_trees,
    enumerate_rooted_unordered,
    enumerate_z_trees,
    ordered_shapes,
    prufer_to_edges,
    tabulate_family,
    tabulate_o,
    tabulate_o_objects,
    z_filter_census,
)
from mdtrees.numeric_core import catalan, double_factorial_odd, rising_factorial
from mdtrees.tree_domain import OrderedForest, OrderedTree, parse_tree, render_forest, render_tree


@pytest.mark.parametrize("m", range(1, 9))
def test_shape_count_is_catalan(m):
    shapes = list(ordered_shapes(m))
    assert len(shapes) == len(set(shapes)) == catalan(m - 1)
    for parents in shapes:
        assert parents[0] == -1
        assert all(0 <= p < i for i, p in enumerate(parents) if i)


class TestOrderedTrees:
    @pytest.mark.parametrize("labels, count", [({0}, 1), ({0, 1, 2}, 12), ({0, 1, 2, 3}, 120)])
    def test_counts(self, labels, count):
        assert sum(1 for _ in enumerate_ordered_trees(labels)) == count

    @pytest.mark.parametrize("n", range(7))
    def test_exactly_once(self, n):
        trees = [render_tree(t) for t in enumerate_ordered_trees(range(n + 1))] if n < 6 else None
        if trees is None:
            count = sum(1 for _ in enumerate_ordered_trees(range(n + 1)))
            assert count == rising_factorial(n + 1, n)
            return
        assert len(trees) == len(set(trees)) == rising_factorial(n + 1, n)

    def test_arbitrary_labels(self):
        trees = list(enumerate_ordered_trees([7, 3]))
        assert {render_tree(t) for t in trees} == {"3(7)", "7(3)"}

    def test_deterministic(self):
        assert list(enumerate_ordered_trees(range(4))) == list(enumerate_ordered_trees(range(4)))

    def test_rejects_empty(self):
        with pytest.raises(ValueError):
            next(enumerate_ordered_trees([]))


class TestTabulateO:
    @pytest.mark.parametrize(
        "n, census",
        [(1, {0: 1, 1: 1}), (2, {0: 5, 1: 4, 2: 3}), (3, {0: 46, 1: 34, 2: 25, 3: 15})],
    )
    def test_small_censuses(self, n, census):
        report = tabulate_o(n)
        assert report.census == census
        assert report.total == sum(census.values())

    def test_hand_listed_n1(self):
        assert [render_tree(t) for t in enumerate_ordered_trees({0, 1})] == ["0(1)", "1(0)"]

    @pytest.mark.parametrize("n", range(6))
    def test_fast_path_matches_object_classification(self, n):
        assert tabulate_o(n).census == tabulate_o_objects(n).census

    @pytest.mark.parametrize("n", range(7))
    def test_matches_formula(self, n):
        assert [tabulate_o(n).census[k] for k in range(n + 1)] == list(count_tables.build_triangle("O", n).row(n))

    def test_cap(self):
        with pytest.raises(EnumerationCapError):
            tabulate_o(8)


class TestZTrees:
    def test_z21_members(self):
        trees = {render_tree(t) for t in enumerate_z_trees(2, 1)}
        assert trees == {"1(0(2))", "2(0(1))", "1(2,0)", "1(0,2)"}

    def test_z10(self):
        assert [render_tree(t) for t in enumerate_z_trees(1, 0)] == ["0(1)"]

    @pytest.mark.parametrize("n", range(6))
    def test_diagonal_is_decreasing_trees(self, n):
        trees = list(enumerate_z_trees(n, n))
        assert len(trees) == double_factorial_odd(n)
        assert all(a > b for t in trees for a, b in t.edges())

    @pytest.mark.parametrize("n", range(6))
    def test_dual_mode_agreement(self, n):
        for k in range(n + 1):
            direct = [render_tree(t) for t in enumerate_z_trees(n, k, mode="direct")]
            screened = [render_tree(t) for t in enumerate_z_trees(n, k, mode="filter")]
            assert len(direct) == len(set(direct))
            assert set(direct) == set(screened)
            assert len(direct) == count_tables.z_count(n, k)

    @pytest.mark.parametrize("n", range(7))
    def test_census_matches_formula(self, n):
        expected = {k: count_tables.z_count(n, k) for k in range(n + 1)}
        assert tabulate_family("Z", n).census == expected
        assert z_filter_census(n) == expected

    def test_out_of_range_k(self):
        assert list(enumerate_z_trees(2, 3)) == []

    def test_unknown_mode(self):
        with pytest.raises(ValueError):
            enumerate_z_trees(2, 1, mode="magic")


class TestForests:
    def test_figure_forest_present(self):
        wanted = OrderedForest((OrderedTree(2), parse_tree("3(4,1)")))
        forests = list(enumerate_forests(4, 2))
        assert wanted in forests
        assert OrderedForest((OrderedTree(2), parse_tree("3(1,4)"))) in forests

    def test_all_isolated(self):
        assert [render_forest(f) for f in enumerate_forests(3, 3)] == ["1;2;3"]

    def test_f32(self):
        forests = [render_forest(f) for f in enumerate_forests(3, 2)]
        assert len(forests) == len(set(forests)) == 6

    def test_empty_forest(self):
        assert list(enumerate_forests(0, 0)) == [OrderedForest()]
        assert list(enumerate_forests(3, 0)) == []

    @pytest.mark.parametrize("n", range(1, 7))
    def test_exactly_once_and_formula(self, n):
        for k in range(1, n + 1):
            forests = [render_forest(f) for f in enumerate_forests(n, k)]
            assert len(forests) == len(set(forests)) == count_tables.f_count(n, k)

    def test_fixed_root_set_count(self):
        fixed = [f for f in enumerate_forests(3, 2) if f.roots == (1, 2)]
        assert len(fixed) == count_tables.prescribed_root_forest_count(3, 2) == 2

    def test_census(self):
        assert tabulate_family("F", 3).census == {1: 12, 2: 6, 3: 1}


def _nx_rooted_trees(n):
    """Independent route: networkx decodes every Prüfer sequence."""
    from itertools import product

    seen = set()
    if n == 1:
        return {(1, ())}
    if n == 2:
        edge_sets = [[(1, 2)]]
    else:
        edge_sets = []
        for seq in product(range(n), repeat=n - 2):
            g = nx.from_prufer_sequence(list(seq))
            edge_sets.append([(a + 1, b + 1) for a, b in g.edges()])
    for edges in edge_sets:
        for root in range(1, n + 1):
            g = nx.Graph(edges)
            parent = tuple(sorted((child, par) for par, child in nx.bfs_edges(g, root)))
            seen.add((root, parent))
    return seen


class TestRootedUnordered:
    @pytest.mark.parametrize("n, count", [(1, 1), (2, 2), (3, 9), (4, 64), (5, 625)])
    def test_counts(self, n, count):
        trees = [str(t) for t in enumerate_rooted_unordered(n)]
        assert len(trees) == len(set(trees)) == count == n ** (n - 1)

    @pytest.mark.parametrize("n", range(1, 6))
    def test_matches_networkx_decoding(self, n):
        ours = set()
        for t in enumerate_rooted_unordered(n):
            parent = []
            stack = [t]
            while stack:
                node = stack.pop()
                parent.extend((c.label, node.label) for c in node.children)
                stack.extend(node.children)
            ours.add((t.label, tuple(sorted(parent))))
        assert ours == _nx_rooted_trees(n)

    def test_prufer_known_sequence(self):
        assert sorted(tuple(sorted(e)) for e in prufer_to_edges((4, 4, 4, 5), 6)) == [
            (1, 4), (2, 4), (3, 4), (4, 5), (5, 6)
        ]

    def test_prufer_wrong_length(self):
        with pytest.raises(ValueError):
            prufer_to_edges((1,), 4)

    def test_census_n3(self):
        assert tabulate_family("RootedUnordered", 3).census == {0: 2, 1: 4, 2: 3}

    @pytest.mark.parametrize("n", range(1, 7))
    def test_census_matches_r_row(self, n):
        census = tabulate_family("RootedUnordered", n).census
        assert [census[k] for k in range(n)] == [count_tables.r_count(n, k) for k in range(n)]

    def test_rejects_zero(self):
        with pytest.raises(ValueError):
            next(enumerate_rooted_unordered(0))


class TestTabulateFamily:
    def test_decreasing(self):
        assert tabulate_family("Decreasing", 3).total == 15
        assert tabulate_family(Family.DECREASING, 4).total == 105

    def test_decreasing_trees_on_labels(self):
        assert sorted(render_tree(t) for t in enumerate_decreasing_trees([1, 5, 3])) == ["5(1,3)", "5(3(1))", "5(3,1)"]

    def test_o(self):
        assert tabulate_family("o", 2).census == {0: 5, 1: 4, 2: 3}

    def test_k_restriction(self):
        assert tabulate_family("F", 4, k=2).census == {2: 60}

    def test_unknown_family(self):
        with pytest.raises(ValueError):
            tabulate_family("Q", 2)

    def test_cap_and_override(self):
        with pytest.raises(EnumerationCapError):
            tabulate_family("F", 5, cap=4)
        assert tabulate_family("F", 5, cap=5).total == sum(count_tables.f_count(5, k) for k in range(6))

    def test_report_total_invariant_and_dict(self):
        report = tabulate_family("Z", 3)
        assert isinstance(report, EnumerationReport)
        # row n of Z is row n+1 of the rooted-tree triangle, which sums to (n+1)^n
        assert report.total == sum(report.census.values()) == 4**3
        d = report.to_dict()
        assert d["census"] == {"0": "6", "1": "18", "2": "25", "3": "15"}
        assert d["total"] == "64"
