import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qcolor.graph import (
    Graph,
    ParseError,
    SizeLimitError,
    add_universal_vertex,
    bits,
    chromatic_le_2,
    gen_clique_union,
    gen_complete,
    gen_cycle,
    gen_empty,
    gen_gnp,
    gen_path,
    gen_petersen,
    induced_subgraph,
    is_independent,
    is_maximal_independent,
    lift,
    mask_of,
    oracle_bounded_partition,
    oracle_chromatic,
    oracle_k_colorable,
    oracle_mis_list,
    parse_dimacs,
    popcount,
    subsets_of_size,
    to_dimacs,
    two_coloring,
)


@st.composite
def graphs(draw, max_n=9):
    n = draw(st.integers(0, max_n))
    pairs = [(v, w) for v in range(n) for w in range(v + 1, n)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return Graph.from_edges(n, chosen)


def test_bits_and_masks():
    assert list(bits(0b101001)) == [0, 3, 5]
    assert mask_of([5, 0, 3]) == 0b101001
    assert popcount(0b101001) == 3


@pytest.mark.parametrize("k, size", [(0, 0), (5, 0), (5, 2), (6, 3), (7, 7)])
def test_subsets_of_size_ascending_and_complete(k, size):
    mask = (1 << k) - 1
    got = list(subsets_of_size(mask, size))
    assert got == sorted(got)
    assert len(got) == math.comb(k, size)
    assert all(popcount(s) == size for s in got)


def test_subsets_of_sparse_mask():
    got = list(subsets_of_size(0b10110, 2))
    assert got == [0b00110, 0b10010, 0b10100]
    assert list(subsets_of_size(0b11, 3)) == []


def test_graph_validation():
    with pytest.raises(ValueError):
        Graph(2, (0b10, 0b00))  # asymmetric
    with pytest.raises(ValueError):
        Graph(1, (0b1,))
    with pytest.raises(ValueError):
        Graph.from_edges(3, [(0, 3)])
    with pytest.raises(SizeLimitError):
        gen_empty(65)


def test_dimacs_roundtrip_petersen():
    g = gen_petersen()
    text = to_dimacs(g, comment="petersen")
    assert text.startswith("c petersen\np edge 10 15\n")
    assert parse_dimacs(text) == g


def test_parse_accepts_col_header_comments_and_duplicates():
    g = parse_dimacs("c hi\n\np col 3 3\ne 1 2\ne 2 1\ne 2 3\n")
    assert g.edges() == [(0, 1), (1, 2)]


@pytest.mark.parametrize(
    "text, lineno",
    [
        ("e 1 2\n", 1),
        ("p edge 3 1\ne 1 4\n", 2),
        ("p edge 3 1\ne 2 2\n", 2),
        ("p edge 3\n", 1),
        ("p edge 3 0\nx 1 2\n", 2),
        ("p edge 3 0\np edge 3 0\n", 2),
        ("p edge 3 1\ne 1 b\n", 2),
        ("c only comments\n", 0),
    ],
)
def test_parse_errors_carry_line_numbers(text, lineno):
    with pytest.raises(ParseError) as info:
        parse_dimacs(text)
    assert info.value.lineno == lineno


def test_parse_refuses_oversized_header():
    with pytest.raises(SizeLimitError):
        parse_dimacs("p edge 100 0\n")


@given(graphs())
@settings(max_examples=60, deadline=None)
def test_dimacs_roundtrip_property(g):
    assert parse_dimacs(to_dimacs(g)) == g


@given(graphs(), st.integers(0, 2**9 - 1))
@settings(max_examples=60, deadline=None)
def test_induced_subgraph_preserves_edges(g, s):
    s &= g.vertices
    sub, labels = induced_subgraph(g, s)
    assert sub.n == popcount(s)
    assert lift(sub.vertices, labels) == s
    for i in range(sub.n):
        for j in range(sub.n):
            assert (sub.adj[i] >> j & 1) == (g.adj[labels[i]] >> labels[j] & 1)


def test_independence_predicates():
    c5 = gen_cycle(5)
    assert is_independent(c5, 0b00101)
    assert not is_independent(c5, 0b00011)
    assert is_maximal_independent(c5, 0b00101)
    assert not is_maximal_independent(c5, 0b00001)


@pytest.mark.parametrize(
    "g, expected",
    [(gen_empty(0), 0), (gen_empty(3), 1), (gen_path(4), 2), (gen_cycle(6), 2), (gen_cycle(5), None)],
)
def test_chromatic_le_2(g, expected):
    assert chromatic_le_2(g) == expected


def test_two_coloring_is_proper():
    g = gen_cycle(8)
    col = two_coloring(g)
    assert all(col[v] != col[w] for v, w in g.edges())


@pytest.mark.parametrize(
    "g, chi",
    [
        (gen_cycle(5), 3),
        (gen_petersen(), 3),
        (gen_complete(6), 6),
        (gen_empty(4), 1),
        (add_universal_vertex(gen_cycle(5)), 4),
        (gen_clique_union([4, 3, 3]), 4),
    ],
)
def test_oracle_chromatic(g, chi):
    assert oracle_chromatic(g) == chi
    assert oracle_k_colorable(g, chi)
    assert not oracle_k_colorable(g, chi - 1)


def test_oracle_mis_list_small_cases():
    assert oracle_mis_list(gen_path(3)) == [0b010, 0b101]
    assert len(oracle_mis_list(gen_cycle(5))) == 5
    assert oracle_mis_list(gen_complete(3)) == [1, 2, 4]


def test_oracle_bounded_partition():
    c6 = gen_cycle(6)
    assert oracle_bounded_partition(c6, 2, 3)
    assert not oracle_bounded_partition(c6, 2, 2)
    assert oracle_bounded_partition(c6, 3, 2)
    assert oracle_bounded_partition(gen_empty(0), 0, 0)


def test_oracle_refuses_large_graphs():
    with pytest.raises(SizeLimitError):
        oracle_chromatic(gen_empty(21))


def test_generators_shapes():
    assert gen_clique_union([4, 3, 3]).n == 10
    assert gen_clique_union([4, 3, 3]).num_edges == 6 + 3 + 3
    p = gen_petersen()
    assert p.num_edges == 15 and all(p.degree(v) == 3 for v in range(10))
    assert gen_complete(5).num_edges == 10
    assert gen_cycle(5).edges() == [(0, 1), (0, 4), (1, 2), (2, 3), (3, 4)]


def test_gnp_is_deterministic_and_density_extremes():
    assert gen_gnp(12, 0.5, 7) == gen_gnp(12, 0.5, 7)
    assert gen_gnp(12, 0.5, 7) != gen_gnp(12, 0.5, 8)
    assert gen_gnp(6, 0, 1).num_edges == 0
    assert gen_gnp(6, 1, 1).num_edges == 15
