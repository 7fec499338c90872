import pytest

from distinguish.coloring import (
    growth_prefixes, is_distinguishing, preserves, preserving_element, restricted_growth_strings,
)
from distinguish.predicted import predicted_for_name
from distinguish.search import (
    distinguishing_number, distinguishing_number_oracle, graph_distinguishing_index, graph_distinguishing_number,
)
from graphs.families import complete_graph, cycle_graph, path_graph, star_graph
from graphs.graph import complement
from graphs.witnesses import asymmetric_witness, construct_example1
from groups.catalog import default_catalog
from groups.constructions import direct_sum, parallel_multiple, trivial_group
from groups.families import alternating_group, symmetric_group
from groups.perm_group import PermutationGroup
from groups.permutation import Permutation
from models.config_models import BudgetConfig
from models.distinguish_models import Coloring, MinimalityProof
from models.graph_models import Graph
from utils.errors import BudgetExceededError, ConstructionError, DegreeMismatchError


def dihedral_square() -> PermutationGroup:
    return PermutationGroup([Permutation.parse("(0 1 2 3)", 4), Permutation.parse("(0 2)", 4)])


def test_coloring_validation():
    c = Coloring.from_classes([0, 1, 1], 2)
    assert c.colors == (1, 2, 2) and c.degree == 3
    assert c.classes() == (0, 1, 1)
    with pytest.raises(ValueError):
        Coloring(colors=(0, 1), d=2)
    with pytest.raises(ValueError):
        Coloring(colors=(1, 3), d=2)


def test_restricted_growth_strings():
    assert list(restricted_growth_strings(3, 2)) == [(0, 0, 0), (0, 0, 1), (0, 1, 0), (0, 1, 1)]
    assert sum(1 for _ in restricted_growth_strings(5, 5)) == 52
    assert len(growth_prefixes(6, 3, 4)) == 14
    assert all(s[:2] == (0, 1) for s in restricted_growth_strings(4, 3, (0, 1)))


def test_preserves_and_preserving_element():
    c = Coloring(colors=(1, 1, 2), d=2)
    assert preserves(Permutation.parse("(0 1)", 3), c)
    assert not preserves(Permutation.parse("(1 2)", 3), c)
    with pytest.raises(DegreeMismatchError):
        preserves(Permutation.identity(4), c)
    S3 = symmetric_group(3)
    assert preserving_element(S3.stabilizer_chain(), 3, (0, 0, 1)) == (1, 0, 2)
    assert preserving_element(S3.stabilizer_chain(), 3, (0, 1, 2)) is None


@pytest.mark.parametrize("G", [symmetric_group(4), alternating_group(5), dihedral_square(), direct_sum(symmetric_group(3), trivial_group(2))])
def test_backtrack_agrees_with_enumeration(G):
    for classes in restricted_growth_strings(G.degree, 3):
        coloring = Coloring.from_classes(classes, 3)
        assert is_distinguishing(G, coloring) == is_distinguishing(G, coloring, method="enumerate")


@pytest.mark.parametrize("G, expected", [
    (symmetric_group(3), 3),
    (symmetric_group(5), 5),
    (alternating_group(4), 3),
    (alternating_group(5), 4),
    (alternating_group(6), 5),
    (dihedral_square(), 3),
    (PermutationGroup([Permutation.parse("(0 1 2 3 4)", 5)]), 2),
    (trivial_group(4), 1),
])
def test_distinguishing_number(G, expected):
    verdict = distinguishing_number(G)
    assert verdict.value == expected
    assert verdict.certificate_checked
    assert verdict.proof_of_minimality == MinimalityProof.EXHAUSTED
    assert verdict.witness.d == expected or expected == 1
    if G.degree <= 5:
        assert distinguishing_number_oracle(G) == expected


def test_oracle_limits():
    with pytest.raises(BudgetExceededError):
        distinguishing_number_oracle(symmetric_group(9))


@pytest.mark.parametrize("name", ["L2(5)", "L2(7)", "L2(8)", "L3(2)", "A6on10", "L2(11)", "L2(11)on11", "A5^(2)", "A6||A6"])
def test_catalog_values_match_prediction(name):
    G = default_catalog().group(name)
    verdict = distinguishing_number(G)
    assert verdict.value == predicted_for_name(name)
    assert verdict.certificate_checked


@pytest.mark.slow
@pytest.mark.parametrize("name", ["M11", "M11on12", "L3(3)", "A8on15", "M12"])
def test_large_catalog_values(name):
    G = default_catalog().group(name)
    assert distinguishing_number(G).value == predicted_for_name(name)


def test_fixed_points_do_not_change_value():
    A5 = alternating_group(5)
    assert distinguishing_number(direct_sum(A5, trivial_group(2))).value == distinguishing_number(A5).value


def test_worker_count_does_not_change_result():
    G = default_catalog().group("L2(7)")
    one = distinguishing_number(G, workers=1)
    two = distinguishing_number(G, workers=2)
    assert one.value == two.value == 3
    assert one.witness == two.witness


def test_budget_exceeded_reports_bounds():
    verdict = distinguishing_number(alternating_group(5), BudgetConfig(max_colorings=1, random_attempts=0))
    assert verdict.value is None
    assert verdict.proof_of_minimality == MinimalityProof.BUDGET_EXCEEDED
    assert verdict.lower_bound == 2
    assert verdict.upper_bound >= 4
    assert verdict.certificate_checked


@pytest.mark.parametrize("graph, expected", [
    (complete_graph(4), 4),
    (star_graph(3), 3),
    (path_graph(4), 2),
    (asymmetric_witness(6), 1),
    (construct_example1(2, 6), 2),
])
def test_graph_distinguishing_number(graph, expected):
    assert graph_distinguishing_number(graph).value == expected


@pytest.mark.parametrize("graph, expected", [
    (star_graph(4), 4),
    (complement(star_graph(4)), 3),
    (complete_graph(4), 3),
    (complete_graph(5), 3),
    (complete_graph(6), 2),
    (star_graph(6), 6),
    (cycle_graph(5), 3),
    (cycle_graph(6), 2),
    (path_graph(3), 2),
    (asymmetric_witness(6), 1),
    (construct_example1(2, 6), 2),
])
def test_graph_distinguishing_index(graph, expected):
    verdict = graph_distinguishing_index(graph)
    assert verdict.value == expected
    assert verdict.action == "edge"
    assert verdict.certificate_checked


def test_distinguishing_index_with_kernel():
    verdict = graph_distinguishing_index(Graph(vertex_count=3, edges=[(0, 1)]))
    assert verdict.kernel_order == 2 and verdict.kernel_nontrivial
    assert verdict.value == 1
    assert "graph of size 1" in verdict.notes


def test_distinguishing_index_needs_edges():
    with pytest.raises(ConstructionError):
        graph_distinguishing_index(Graph(vertex_count=4))


def test_summary_has_no_timing():
    summary = distinguishing_number(symmetric_group(3)).summary()
    assert summary["value"] == 3
    assert "elapsed_seconds" not in summary


@pytest.mark.slow
@pytest.mark.parametrize("G", [
    default_catalog().group("L2(5)"),
    default_catalog().group("L3(2)"),
    default_catalog().group("L2(7)"),
    alternating_group(6),
    parallel_multiple(symmetric_group(4), 2),
    direct_sum(symmetric_group(3), symmetric_group(3)),
    PermutationGroup([Permutation.parse("(0 1 2 3 4 5 6 7)", 8), Permutation.parse("(1 7)(2 6)(3 5)", 8)]),
], ids=["L2(5)", "L3(2)", "L2(7)", "A6", "S4^(2)", "S3+S3", "D8"])
def test_search_agrees_with_oracle_up_to_degree_eight(G):
    assert distinguishing_number(G).value == distinguishing_number_oracle(G)
