import warnings

import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cyclegap.constructions import (
    CATALOG_NAMES,
    catalog,
    check_gadget,
    dn_matching,
    make_dn,
    make_fan_ring,
    make_gnk,
    make_hk,
    make_prism,
    port_distances,
    random_c3cp,
    replace_edge,
    replace_matching,
    triangle_expand,
)
from cyclegap.embedding import connectivity_level, degrees, fingerprint, is_cubic
from cyclegap.errors import BadParameters, NotAMatching, UnknownName
from cyclegap.spectrum import circumference, enumerate_spectrum, exists_cycle_in_range, girth

from oracles import connectivity_bruteforce, nx_simple, spectrum_bitmask


# ---- H_k ---------------------------------------------------------------------------

@pytest.mark.parametrize("k", range(1, 7))
def test_hk_shape(k):
    g = make_hk(k)
    E = g.gadget
    assert (E.vertex_count, E.edge_count) == (4 * k + 2, 6 * k + 1)
    assert check_gadget(g)
    outer = E.face_map.faces[E.outer_face]
    on_outer = [v for v in outer.vertices if v in g.ports]
    # ports on the outer face, counterclockwise in the order x0, x2k, y0, y2k
    first = on_outer.index(g.ports[0])
    assert (on_outer[first:] + on_outer[:first])[:4] == list(g.ports)


def test_h1_is_two_triangles_and_a_bridge():
    E = make_hk(1).gadget
    assert (E.vertex_count, E.edge_count) == (6, 7)
    assert sorted(E.face_map.lengths()).count(3) == 2


def test_h2_spectrum():
    E = make_hk(2).gadget
    assert enumerate_spectrum(E).lengths == [3, 4, 5]
    assert spectrum_bitmask(E) == {3, 4, 5}
    assert circumference(E).lower_bound == 5


@pytest.mark.parametrize("k", range(1, 6))
def test_hk_circumference_bruteforce(k):
    assert max(spectrum_bitmask(make_hk(k).gadget)) == 2 * k + 1


@pytest.mark.parametrize("k", range(1, 6))
def test_port_distances_match_networkx(k):
    g = make_hk(k)
    dist = dict(nx.all_pairs_shortest_path_length(nx_simple(g.gadget)))
    names = dict(zip(("x0", "x2k", "y0", "y2k"), g.ports))
    for (a, b), d in port_distances(k).items():
        assert dist[names[a]][names[b]] == d
    assert port_distances(k)[("x0", "y0")] == 2 * k + 1


# ---- frames ------------------------------------------------------------------------

@pytest.mark.parametrize("n", range(3, 11))
def test_dn_shape(n):
    D = make_dn(n)
    assert (D.vertex_count, D.edge_count) == (4 * n, 6 * n)
    assert is_cubic(D) and connectivity_level(D) == 3
    assert sorted(D.face_map.lengths()) == sorted([5] * (2 * n) + [n, n])
    M = dn_matching(n)
    assert len(M) == 2 * n and len({v for e in M for v in e}) == 4 * n


def test_dn_examples():
    assert girth(make_dn(5)).length == 5
    assert connectivity_bruteforce(make_dn(3)) == 3
    D = make_dn(6)
    assert (D.vertex_count, D.edge_count, D.face_count) == (24, 36, 14)


def test_dodecahedron_is_d5():
    E = catalog("dodecahedron")
    assert nx.is_isomorphic(nx_simple(E), nx.dodecahedral_graph())


# ---- replacement -------------------------------------------------------------------

def test_replace_edge_k4_h1():
    E = replace_edge(catalog("k4"), 0, make_hk(1))
    assert E.vertex_count == 8 and is_cubic(E)
    assert connectivity_bruteforce(E) == 3
    assert replace_matching(catalog("k4"), [0], 1).rotations() == E.rotations()


def test_replace_edge_d6_h2():
    D = make_dn(6)
    e = next(i for i, (u, v) in enumerate(D.edges) if (u, v) in set(map(tuple, dn_matching(6))))
    assert replace_edge(D, e, make_hk(2)).vertex_count == 24 - 2 + 10


def test_replace_matching_prism():
    P = make_prism(3)
    verticals = [(i, i + 3) for i in range(3)]
    E = replace_matching(P, verticals, 1)
    assert E.vertex_count == 18 and is_cubic(E)


def test_replace_matching_rejects_non_matching():
    with pytest.raises(NotAMatching):
        replace_matching(catalog("k4"), [(0, 1), (1, 2)], 1)


@pytest.mark.parametrize("name", ["k4", "cube", "prism", "dodecahedron"])
def test_h1_everywhere_is_triangle_expansion(name):
    """Replacing a perfect matching by H_1 equals blowing every vertex up into a triangle."""
    D = catalog(name)
    matching = nx.max_weight_matching(nx_simple(D), maxcardinality=True)
    assert 2 * len(matching) == D.vertex_count
    E = replace_matching(D, sorted(tuple(sorted(p)) for p in matching), 1)
    T = triangle_expand(D)
    assert nx.is_isomorphic(nx_simple(E), nx_simple(T))
    assert fingerprint(E) == fingerprint(T)


def test_d10_h1_matching():
    E = replace_matching(make_dn(10), dn_matching(10), 1)
    assert E.vertex_count == 120
    assert fingerprint(E) == fingerprint(make_gnk(10, 2))


@pytest.mark.parametrize("n,k,vertices", [(4, 3, 80), (10, 2, 120), (14, 3, 280)])
def test_gnk_vertex_counts(n, k, vertices):
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        G = make_gnk(n, k)
    assert G.vertex_count == vertices == 8 * n * k - 4 * n
    assert is_cubic(G)


def test_gnk_small_n_warns_and_bad_k_raises():
    with pytest.warns(UserWarning):
        make_gnk(4, 3)
    with pytest.raises(BadParameters):
        make_gnk(10, 1)


def test_gnk_10_2_is_3_connected_and_gapped():
    G = make_gnk(10, 2)
    assert connectivity_level(G) == 3
    assert exists_cycle_in_range(G, 4, 9).status == "empty"
    assert G.face_map.faces[G.outer_face].length == 20


# ---- fan ring and expansion ---------------------------------------------------------

def test_fan_ring_k2_hamiltonian():
    E = make_fan_ring(2)
    assert E.vertex_count == 8
    assert exists_cycle_in_range(E, 8, 8).found


@pytest.mark.parametrize("k", [2, 3, 4, 5])
def test_fan_ring_short_cycles(k):
    E = make_fan_ring(k)
    assert E.vertex_count == 4 * k and is_cubic(E)
    assert connectivity_level(E) == 2
    lengths = spectrum_bitmask(E)
    assert {3, 4} <= lengths
    assert not lengths & set(range(5, 3 * k))
    assert 4 * k in lengths


def test_triangle_expand_examples():
    T = triangle_expand(catalog("k4"))
    assert T.vertex_count == 12 and exists_cycle_in_range(T, 3, 3).found
    P = triangle_expand(make_prism(3))
    assert P.vertex_count == 18 and is_cubic(P) and P.euler_characteristic() == 2
    D = triangle_expand(catalog("dodecahedron"))
    assert D.vertex_count == 60
    assert exists_cycle_in_range(D, 4, 9).status == "empty"


# ---- catalog and random -------------------------------------------------------------

def test_catalog():
    assert catalog("k4").vertex_count == 4
    assert catalog("dodecahedron").vertex_count == 20 and girth(catalog("dodecahedron")).length == 5
    cube = catalog("cube")
    assert nx.is_bipartite(nx_simple(cube))
    assert enumerate_spectrum(cube).lengths == [4, 6, 8]
    with pytest.raises(UnknownName):
        catalog("petersen")
    for name in CATALOG_NAMES:
        assert catalog(name).euler_characteristic() == 2


def test_random_small_cases():
    assert fingerprint(random_c3cp(4, 0)) == fingerprint(catalog("k4"))
    for seed in range(5):
        assert fingerprint(random_c3cp(6, seed)) == fingerprint(make_prism(3))
    E = random_c3cp(40, 7)
    assert is_cubic(E) and E.euler_characteristic() == 2 and connectivity_level(E) == 3
    with pytest.raises(BadParameters):
        random_c3cp(7, 0)


@given(st.sampled_from(range(4, 25, 2)), st.integers(0, 10_000))
@settings(max_examples=30, deadline=None)
def test_random_graphs_are_3_connected_cubic_planar(n, seed):
    E = random_c3cp(n, seed)
    assert E.vertex_count == n and is_cubic(E)
    assert E.euler_characteristic() == 2
    assert connectivity_bruteforce(E) == 3
    assert nx.check_planarity(nx_simple(E))[0]


def test_random_is_deterministic():
    assert random_c3cp(30, 11) == random_c3cp(30, 11)
    assert degrees(random_c3cp(30, 11)) == [3] * 30
