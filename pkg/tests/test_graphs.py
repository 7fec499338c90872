import itertools
import random

import networkx as nx
import pytest

from graphs.enumeration import enumerate_all_graphs, enumerate_labeled_graphs, graph_corpus, isomorphism_class_representatives
from graphs.families import complete_graph, cycle_graph, empty_graph, path_graph, star_graph
from graphs.graph import (
    complement, connected_components, disjoint_union, induced_subgraph, is_connected,
    is_permutation_of_edges, relabel, to_networkx,
)
from graphs.graph6 import from_graph6, iter_graph6_file, to_graph6, write_graph6_file
from graphs.io import parse_edge_list, read_edge_list, save_witness, witness_record, write_edge_list
from graphs.witnesses import (
    asymmetric_witness, construct_example1, construct_figure1, figure1_labels, matched_orbit_graph,
)
from models.graph_models import Graph
from symmetry.automorphisms import automorphism_group, brute_force_automorphisms
from utils.errors import ConstructionError, GraphFormatError


def test_graph_normalizes_edges():
    g = Graph(vertex_count=3, edges=[(2, 0), (1, 0)])
    assert g.edges == ((0, 1), (0, 2))
    assert g.has_edge(2, 0)
    assert g.degrees() == [2, 1, 1]


@pytest.mark.parametrize("edges", [[(0, 0)], [(0, 3)], [(0, 1), (1, 0)]])
def test_graph_rejects_bad_edges(edges):
    with pytest.raises(GraphFormatError):
        Graph(vertex_count=3, edges=edges)


def test_families():
    assert star_graph(4).vertex_count == 5 and star_graph(4).edge_count == 4
    assert complete_graph(4).edge_count == 6
    assert cycle_graph(3).edges == complete_graph(3).edges
    assert path_graph(4).edge_count == 3
    assert empty_graph(0).vertex_count == 0
    with pytest.raises(ConstructionError):
        cycle_graph(2)


def test_complement_and_union():
    co_star = complement(star_graph(4))
    assert co_star.edge_count == 6
    assert co_star.degrees()[0] == 0
    union = disjoint_union([path_graph(2), path_graph(3)])
    assert union.offsets == (0, 2) and union.sizes == (2, 3)
    assert union.graph.edges == ((0, 1), (2, 3), (3, 4))
    assert connected_components(union.graph) == [[0, 1], [2, 3, 4]]
    assert not is_connected(union.graph)


def test_relabel_and_induced_subgraph():
    p = path_graph(3)
    assert relabel(p, [1, 0, 2]).edges == ((0, 1), (0, 2))
    assert induced_subgraph(cycle_graph(4), [0, 1, 3]).edges == ((0, 1), (0, 2))
    assert is_permutation_of_edges(p, [2, 1, 0])
    assert not is_permutation_of_edges(p, [1, 0, 2])


def test_graph6_against_networkx():
    g = construct_example1(2, 6)
    line = to_graph6(g)
    assert line == nx.to_graph6_bytes(to_networkx(g), header=False).decode().strip()
    assert from_graph6(line) == g
    assert from_graph6(">>graph6<<" + to_graph6(star_graph(4))) == star_graph(4)


@pytest.mark.parametrize("line", ["", "A_!", "B", "Bww"])
def test_graph6_malformed(line):
    with pytest.raises(GraphFormatError):
        from_graph6(line)


def test_graph6_file(tmp_path):
    path = tmp_path / "graphs.g6"
    write_graph6_file(path, [star_graph(3), cycle_graph(5)])
    assert list(iter_graph6_file(path)) == [star_graph(3), cycle_graph(5)]


def test_edge_list_format(tmp_path):
    g = parse_edge_list("# a star\nn=5\n0 1\n0 2  # comment\n0 3\n0 4\n")
    assert g == star_graph(4)
    path = tmp_path / "star.txt"
    write_edge_list(path, g)
    assert read_edge_list(path) == g


@pytest.mark.parametrize("text", ["0 1\n", "n=3\n0 1 2\n", "n=3\n0 x\n", "n=x\n", "n=2\nn=2\n", "n=2\n0 5\n"])
def test_edge_list_errors(text):
    with pytest.raises(GraphFormatError):
        parse_edge_list(text)


@pytest.mark.parametrize("m", [1, 6, 7, 9])
def test_asymmetric_witness(m):
    g = asymmetric_witness(m)
    assert g.vertex_count == m
    assert is_connected(g)
    if m <= 8:
        assert brute_force_automorphisms(g) == [tuple(range(m))]


def test_asymmetric_witness_is_one_of_the_order_six_classes():
    asymmetric = [g for g in isomorphism_class_representatives(6) if automorphism_group(g).order() == 1]
    assert len(asymmetric) == 8
    assert all(is_connected(g) for g in asymmetric)
    witness = to_networkx(asymmetric_witness(6))
    assert sum(nx.is_isomorphic(witness, to_networkx(g)) for g in asymmetric) == 1
    assert asymmetric_witness(6) == asymmetric_witness(6)


@pytest.mark.parametrize("m", [2, 3, 4, 5])
def test_no_asymmetric_graph_on_two_to_five_vertices(m):
    with pytest.raises(ConstructionError):
        asymmetric_witness(m)
    assert all(len(brute_force_automorphisms(g)) > 1 for g in isomorphism_class_representatives(m))


def test_example1_and_figure1_shapes():
    g = construct_example1(3, 6)
    assert g.vertex_count == 18 and len(connected_components(g)) == 3
    with pytest.raises(ConstructionError):
        construct_example1(1, 6)
    f = construct_figure1(5)
    assert f.vertex_count == 22
    assert f.edge_count == 6 * 5 + 1
    assert construct_figure1(5, with_xy_edge=False).edge_count == 30
    assert figure1_labels(5)[0] == "a0" and figure1_labels(5)[-2:] == ["x", "y"]
    with pytest.raises(ConstructionError):
        construct_figure1(4)


def test_matched_orbit_graph():
    g = matched_orbit_graph(4, [2, 1])
    # three blocks of four, three hubs, pendant paths of 2, 3 and 4 vertices
    assert g.vertex_count == 12 + 3 + 9
    assert is_connected(g) is False
    with pytest.raises(ConstructionError):
        matched_orbit_graph(2, [1])


def test_isomorphism_class_counts():
    # numbers of graphs on n vertices up to isomorphism
    counts = [len(isomorphism_class_representatives(n)) for n in range(1, 6)]
    assert counts == [1, 2, 4, 11, 34]
    assert counts[-1] == sum(1 for g in nx.graph_atlas_g() if g.number_of_nodes() == 5)


@pytest.mark.slow
def test_isomorphism_class_counts_six_and_seven():
    assert len(isomorphism_class_representatives(6)) == 156
    assert len(isomorphism_class_representatives(7)) == 1044


def test_labeled_enumeration_and_corpus_ids():
    assert sum(1 for _ in enumerate_labeled_graphs(4)) == 64
    with pytest.raises(ConstructionError):
        list(enumerate_all_graphs(9))
    ids = [cid for cid, _ in graph_corpus(3)]
    assert ids == ["n1-00000", "n2-00000", "n2-00001", "n3-00000", "n3-00001", "n3-00002", "n3-00003"]


def test_witness_record(tmp_path):
    record = witness_record("figure1", construct_figure1(5), {"n": 5}, figure1_labels(5))
    assert record.vertex_count == 22 and record.graph6
    save_witness(tmp_path / "w.json", record)
    assert (tmp_path / "w.json").read_text().startswith("{")


def random_graphs(count: int, seed: int = 11):
    rng = random.Random(seed)
    for _ in range(count):
        n = rng.randint(1, 62)
        edges = [e for e in itertools.combinations(range(n), 2) if rng.random() < 0.3]
        yield Graph(vertex_count=n, edges=edges)


def test_graph6_round_trip_on_random_graphs():
    for graph in random_graphs(100):
        again = from_graph6(to_graph6(graph))
        assert again.vertex_count == graph.vertex_count
        assert again.edge_set() == graph.edge_set()


@pytest.mark.slow
def test_graph6_round_trip_on_corpus():
    for cid, graph in graph_corpus(7):
        assert from_graph6(to_graph6(graph)).edge_set() == graph.edge_set(), cid


def test_connected_components_order():
    g = Graph(vertex_count=7, edges=[(5, 6), (3, 1), (1, 4)])
    assert connected_components(g) == [[0], [1, 3, 4], [2], [5, 6]]
    assert not is_connected(g)
    assert connected_components(Graph(vertex_count=0)) == []
    assert is_connected(Graph(vertex_count=1))
