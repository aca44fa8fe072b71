import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cyclegap.constructions import catalog, make_dn, make_fan_ring, make_gnk, make_hk, make_prism, random_c3cp
from cyclegap.embedding import build_embedding
from cyclegap.errors import BadInterval
from cyclegap.spectrum import (
    CycleWitness,
    SimpleGraph,
    circumference,
    edge_set_to_witness,
    enumerate_spectrum,
    exists_cycle_in_range,
    gap_report,
    girth,
    shortest_cycle_in_range,
    validate_witness,
)

from oracles import longest_cycle_bruteforce, spectrum_bitmask, spectrum_networkx

THETA = [[1, 1, 1], [0, 0, 0]]
small = st.sampled_from(range(4, 17, 2))
seeds = st.integers(0, 10_000)


def _fixtures():
    return [catalog(n) for n in ("k4", "prism", "cube", "pentagonal_prism", "truncated_tetrahedron")] + [
        make_fan_ring(3), make_fan_ring(4), make_hk(2).gadget, make_hk(3).gadget, make_dn(3), make_dn(4)]


# ---- full spectrum ------------------------------------------------------------------

def test_spectrum_examples():
    assert enumerate_spectrum(catalog("k4")).lengths == [3, 4]
    assert enumerate_spectrum(catalog("cube")).lengths == [4, 6, 8]
    assert enumerate_spectrum(build_embedding(THETA)).lengths == [2]
    rep = enumerate_spectrum(make_fan_ring(4))
    assert rep.complete and rep.lengths == [3, 4, 12, 13, 14, 15, 16]


@pytest.mark.parametrize("E", _fixtures(), ids=lambda E: f"V{E.vertex_count}E{E.edge_count}")
def test_spectrum_matches_both_oracles(E):
    rep = enumerate_spectrum(E)
    assert rep.complete
    assert set(rep.lengths) == spectrum_bitmask(E) == spectrum_networkx(E)
    for length, w in rep.present.items():
        assert w.length == length and validate_witness(E, w)


@given(small, seeds)
@settings(max_examples=40, deadline=None)
def test_spectrum_random_matches_oracle(n, seed):
    E = random_c3cp(n, seed)
    assert set(enumerate_spectrum(E).lengths) == spectrum_bitmask(E)


def test_spectrum_on_graph6_style_input():
    # a plain edge list with no embedding: 5-cycle plus a chord
    G = SimpleGraph(5, ((0, 1), (1, 2), (2, 3), (3, 4), (0, 4), (0, 2)))
    assert enumerate_spectrum(G).lengths == [3, 4, 5]


def test_budget_exhaustion_is_reported():
    rep = enumerate_spectrum(catalog("dodecahedron"), budget=50)
    assert not rep.complete
    r = exists_cycle_in_range(make_gnk(10, 2), 4, 9, budget=5)
    assert r.status == "unknown" and r.witness is None


# ---- intervals ----------------------------------------------------------------------

def test_interval_examples():
    assert exists_cycle_in_range(make_gnk(10, 2), 4, 9).status == "empty"
    assert exists_cycle_in_range(catalog("dodecahedron"), 3, 4).status == "empty"
    r = exists_cycle_in_range(catalog("k4"), 3, 4)
    assert r.found and r.witness.length in (3, 4)
    assert shortest_cycle_in_range(catalog("k4"), 3, 4).witness.length == 3


def test_bad_interval():
    with pytest.raises(BadInterval):
        exists_cycle_in_range(catalog("k4"), 5, 4)


@given(small, seeds, st.integers(1, 18), st.integers(0, 8))
@settings(max_examples=60, deadline=None)
def test_interval_agrees_with_oracle(n, seed, a, width):
    E = random_c3cp(n, seed)
    b = a + width
    truth = spectrum_bitmask(E)
    hit = sorted(L for L in truth if a <= L <= b)
    r = exists_cycle_in_range(E, a, b)
    assert r.status == ("found" if hit else "empty")
    if hit:
        assert a <= r.witness.length <= b and validate_witness(E, r.witness)
        s = shortest_cycle_in_range(E, a, b)
        assert s.witness.length == hit[0] and validate_witness(E, s.witness)


# ---- girth and circumference ---------------------------------------------------------

def test_girth_examples():
    assert girth(catalog("dodecahedron")).length == 5
    assert girth(make_dn(6)).length == 5
    assert girth(build_embedding(THETA)).length == 2


@given(small, seeds)
@settings(max_examples=40, deadline=None)
def test_girth_is_min_spectrum(n, seed):
    E = random_c3cp(n, seed)
    w = girth(E)
    assert w.length == min(spectrum_bitmask(E)) and validate_witness(E, w)


def test_circumference_examples():
    r = circumference(catalog("k4"))
    assert r.exact and r.lower_bound == 4
    r = circumference(make_hk(3).gadget)
    assert r.exact and r.lower_bound == 7


@pytest.mark.parametrize("E", _fixtures(), ids=lambda E: f"V{E.vertex_count}E{E.edge_count}")
def test_circumference_matches_bruteforce(E):
    r = circumference(E)
    assert r.exact and r.lower_bound == longest_cycle_bruteforce(E)
    assert validate_witness(E, r.witness) and r.witness.length == r.lower_bound


@given(small, seeds)
@settings(max_examples=30, deadline=None)
def test_circumference_random(n, seed):
    E = random_c3cp(n, seed)
    r = circumference(E)
    assert r.exact and r.lower_bound == max(spectrum_bitmask(E))


def test_circumference_lower_bound_on_large_graph():
    G = make_gnk(10, 2)
    r = circumference(G, 2_000)
    assert not r.exact
    assert r.lower_bound >= 20 and validate_witness(G, r.witness)


# ---- gaps ---------------------------------------------------------------------------

def test_gap_examples():
    assert (5, 11) in gap_report(make_fan_ring(4)).gaps
    assert gap_report(catalog("k4")).gaps == []
    assert gap_report(make_hk(2).gadget).gaps == []
    # the dodecahedron misses 3, 4, 6, 7 and 19
    assert gap_report(catalog("dodecahedron")).gaps == [(3, 4), (6, 7), (19, 19)]


@given(small, seeds)
@settings(max_examples=30, deadline=None)
def test_gaps_are_maximal_and_empty(n, seed):
    E = random_c3cp(n, seed)
    truth = spectrum_bitmask(E)
    rep = gap_report(E)
    top = max(truth)
    for lo, hi in rep.gaps:
        assert not truth & set(range(lo, hi + 1))
        assert hi < top
        assert lo == 3 or lo - 1 in truth
        assert hi + 1 in truth
    covered = {L for lo, hi in rep.gaps for L in range(lo, hi + 1)}
    assert covered | truth == set(range(3, top + 1))


# ---- witnesses ----------------------------------------------------------------------

def test_validate_witness_rejects_bad_cycles():
    K4 = catalog("k4")
    good = girth(K4)
    assert validate_witness(K4, good)
    assert not validate_witness(K4, CycleWitness(good.vertices, good.edges[:-1]))
    assert not validate_witness(K4, CycleWitness((0, 1, 0), (0, 0)))


def test_edge_set_to_witness():
    P = make_prism(3)
    face = next(f for f in P.face_map.faces if f.length == 4)
    w = edge_set_to_witness(P, face.edges)
    assert w is not None and w.length == 4
    tri = [f for f in P.face_map.faces if f.length == 3]
    assert edge_set_to_witness(P, tri[0].edges + tri[1].edges) is None
