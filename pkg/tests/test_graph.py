import pytest
from hypothesis import given, settings

from conftest import brute_cycles, graphs
from rainbow_paths.errors import ParseError
from rainbow_paths.graph import (
    Graph,
    Orientation,
    PathWitness,
    complete,
    connected_components,
    cycle,
    find_cycle_of_length,
    generate,
    is_connected,
    mycielski,
    parse_dimacs,
    parse_edge_list,
    parse_orientation,
    petersen,
    random_gnp,
    wheel,
    write_dimacs,
    write_edge_list,
)


def test_parse_dimacs_triangle():
    g = parse_dimacs("p edge 3 3\ne 1 2\ne 2 3\ne 1 3\n")
    assert g == complete(3)


def test_parse_dimacs_edgeless():
    g = parse_dimacs("p edge 2 0\n")
    assert g.vertex_count == 2 and g.m == 0


def test_parse_dimacs_c5_with_comments_and_duplicates():
    text = "c a five-cycle\np edge 5 6\ne 1 2\ne 2 3\ne 3 4\ne 4 5\ne 5 1\ne 2 1\n"
    assert parse_dimacs(text) == cycle(5)


@pytest.mark.parametrize(
    "text, line",
    [
        ("p edge x 3\n", 1),
        ("p edge 3 1\ne 1 4\n", 2),
        ("p edge 3 1\nc ok\ne 2 2\n", 3),
        ("e 1 2\n", 1),
        ("p edge 3 1\nq 1 2\n", 2),
    ],
)
def test_parse_dimacs_errors_name_the_line(text, line):
    with pytest.raises(ParseError) as exc:
        parse_dimacs(text)
    assert exc.value.line == line
    assert f"line {line}" in str(exc.value)


def test_parse_dimacs_requires_header():
    with pytest.raises(ParseError):
        parse_dimacs("")


def test_write_dimacs_is_canonical():
    g = Graph(4, [(3, 2), (0, 1), (2, 0)])
    assert write_dimacs(g) == "p edge 4 3\ne 1 2\ne 1 3\ne 3 4\n"


@settings(max_examples=60)
@given(graphs(min_n=0, max_n=9))
def test_dimacs_round_trip(g):
    text = write_dimacs(g)
    assert parse_dimacs(text) == g
    assert write_dimacs(parse_dimacs(text)) == text


def test_edge_list_format():
    g = parse_edge_list("# header\n0 1\n\n1 2  # trailing comment\n2 0\n")
    assert g == complete(3)
    assert parse_edge_list(write_edge_list(cycle(6))) == cycle(6)
    with pytest.raises(ParseError):
        parse_edge_list("0 1 2\n")
    with pytest.raises(ParseError):
        parse_edge_list("3 3\n")


def test_graph_rejects_bad_edges():
    with pytest.raises(ValueError):
        Graph(3, [(1, 1)])
    with pytest.raises(ValueError):
        Graph(3, [(0, 3)])


@given(graphs(min_n=0, max_n=8))
def test_adjacency_consistent_with_edges(g):
    for u in g.vertices():
        assert list(g.adjacency[u]) == sorted(g.adjacency[u])
        for w in g.adjacency[u]:
            assert u in g.adjacency[w]
            assert (min(u, w), max(u, w)) in g.edges
    assert sum(g.degree(v) for v in g.vertices()) == 2 * g.m


@pytest.mark.parametrize("k", [3, 4, 7, 10])
def test_cycle_family(k):
    g = cycle(k)
    assert g.vertex_count == k and g.m == k
    assert all(g.degree(v) == 2 for v in g.vertices())
    assert is_connected(g)


def test_named_families():
    assert generate("cycle", 7).m == 7
    assert complete(4).m == 6
    assert petersen().m == 15 and all(petersen().degree(v) == 3 for v in range(10))
    w = wheel(5)
    assert w.vertex_count == 6 and w.m == 10 and w.degree(5) == 5
    assert generate("path", 4).m == 3
    with pytest.raises(ValueError):
        generate("cycle", 2)
    with pytest.raises(ValueError):
        generate("wheel", 3)
    with pytest.raises(ValueError):
        generate("nope")


def test_mycielski_of_c5_is_grotzsch():
    g = generate("mycielski", ("cycle", 5))
    # m' = 3m + n for the Mycielskian
    assert (g.vertex_count, g.m) == (11, 3 * 5 + 5) == (11, 20)
    assert g == mycielski(cycle(5))


def test_random_gnp_is_deterministic():
    assert random_gnp(9, 0.4, seed=3) == random_gnp(9, 0.4, seed=3)
    assert random_gnp(9, 0.4, seed=3) != random_gnp(9, 0.4, seed=4)
    assert random_gnp(5, 1.0, seed=0) == complete(5)


def test_connected_components():
    assert connected_components(cycle(5)) == [[0, 1, 2, 3, 4]]
    two = Graph(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)])
    assert [len(c) for c in connected_components(two)] == [3, 3]
    assert connected_components(Graph(3)) == [[0], [1], [2]]


def test_find_cycle_examples():
    assert find_cycle_of_length(cycle(5), 5).vertices == (0, 1, 2, 3, 4)
    assert find_cycle_of_length(cycle(5), 3) is None
    c4 = find_cycle_of_length(wheel(5), 4)
    assert c4.vertices == (0, 1, 2, 5)  # rim, rim, rim, hub
    assert c4.is_valid_in(wheel(5))
    with pytest.raises(ValueError):
        find_cycle_of_length(cycle(5), 2)


@settings(max_examples=80, deadline=None)
@given(graphs(min_n=3, max_n=7))
def test_find_cycle_matches_brute_force(g):
    for k in range(3, g.vertex_count + 1):
        found = find_cycle_of_length(g, k)
        every = brute_cycles(g, k)
        if every:
            assert found is not None and found.vertices == min(every)
        else:
            assert found is None


def test_orientation_validation():
    g = cycle(3)
    d = Orientation(g, [(0, 1), (1, 2), (2, 0)])
    assert d.out_degree(0) == 1 and d.in_nbrs[0] == (2,)
    with pytest.raises(ValueError):
        Orientation(g, [(0, 1), (1, 2)])
    with pytest.raises(ValueError):
        Orientation(g, [(0, 1), (1, 0), (1, 2), (2, 0)])
    with pytest.raises(ValueError):
        Orientation(Graph(3, [(0, 1)]), [(0, 2)])
    with pytest.raises(ParseError):
        parse_orientation("0 1\n", g)


def test_path_witness_validity():
    g = cycle(5)
    assert PathWitness((0, 1, 2)).is_valid_in(g)
    assert not PathWitness((0, 2)).is_valid_in(g)
    assert not PathWitness((0, 1, 0)).is_valid_in(g)
    assert PathWitness((0, 1, 2, 3, 4), closed=True).is_valid_in(g)
    d = Orientation(g, [(i, (i + 1) % 5) for i in range(5)])
    assert PathWitness((0, 1, 2), directed=True).is_valid_in(d)
    assert not PathWitness((2, 1, 0), directed=True).is_valid_in(d)
