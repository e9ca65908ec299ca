import networkx as nx
import pytest

from circulant.chordal import (
    GENERIC,
    NOTCH,
    ORDA_1S,
    ORDA_2S,
    HypothesisError,
    egcd,
    find_chordless_cycle,
    find_hole,
    is_chordal,
    is_chordal_oracle,
    is_chordal_structural,
    ord_mod,
    orda_applies,
    validate_witness,
    witness_notch,
    witness_orda,
)
from circulant.core import all_connection_sets, build

from oracles import has_chordless_square, to_networkx
from reference_values import EXAMPLE_1, EXAMPLE_2, EXAMPLE_3


@pytest.mark.parametrize("n,a,expected", [(30, 5, 6), (30, 2, 15), (15, 2, 15)])
def test_ord(n, a, expected):
    assert ord_mod(n, a) == expected


@pytest.mark.parametrize("n,S,expected", [
    (*EXAMPLE_1, False),
    (6, (1, 2, 3), True),
    (12, (3, 6), True),
    (7, (), True),
])
def test_structural(n, S, expected):
    G = build(n, S)
    assert is_chordal_structural(G) is expected
    assert is_chordal(G) is expected


def test_oracle_small_graphs():
    square = [(0, 1), (1, 2), (2, 3), (3, 0)]
    assert not is_chordal_oracle(4, square)
    assert is_chordal_oracle(4, square + [(0, 2)])
    k4 = [(i, j) for i in range(4) for j in range(i + 1, 4)]
    assert is_chordal_oracle(4, k4)
    G = build(*EXAMPLE_2)
    assert not is_chordal_oracle(G.n, G.edges())


def test_oracle_against_networkx():
    for seed in range(60):
        H = nx.gnp_random_graph(9, 0.45, seed=seed)
        assert is_chordal_oracle(9, list(H.edges())) == nx.is_chordal(H)
        hole = find_hole([sum(1 << u for u in H[v]) for v in range(9)])
        assert (hole is None) == nx.is_chordal(H)


def test_witness_orda_example_1():
    G = build(*EXAMPLE_1)
    w = witness_orda(G, 2)
    assert w.strategy == ORDA_1S
    assert w.vertices == (0, 2, 6, 8)
    assert validate_witness(G, w)


def test_witness_orda_example_2():
    G = build(*EXAMPLE_2)
    w = witness_orda(G, 3)
    assert w.strategy == ORDA_2S
    assert w.vertices == (0, 6, 2, 5, 1, 7)
    assert validate_witness(G, w)


def test_witness_orda_rejects_complete():
    G = build(6, (1, 2, 3))
    for a in G.S:
        with pytest.raises(HypothesisError, match="lemma hypothesis not satisfied"):
            witness_orda(G, a)


def test_witness_notch_example_3():
    G = build(*EXAMPLE_3)
    w = witness_notch(G, (5, 2))
    assert w.strategy == NOTCH
    assert w.vertices == (0, 10, 1, 21)
    # the first Bezout square 0, 5, 1, -4 has diagonal 9 in S
    assert w.rejected == ((0, 5, 1, 26),)
    assert G.is_edge(5, 26)
    assert not G.is_edge(10, 21)
    assert validate_witness(G, w)


def test_egcd_matches_worked_identities():
    assert egcd(5, 2) == (1, 1, -2)
    assert egcd(3, 10) == (1, -3, 1)


def test_witness_notch_rejects():
    G = build(6, (1, 2, 3))
    with pytest.raises(HypothesisError):
        witness_notch(G, (2, 3))


def test_find_chordless_cycle_examples():
    w1 = find_chordless_cycle(build(*EXAMPLE_1))
    assert w1.strategy == ORDA_1S
    w2 = find_chordless_cycle(build(*EXAMPLE_2))
    assert w2.strategy == ORDA_2S and w2.vertices == (0, 6, 2, 5, 1, 7)
    G3 = build(*EXAMPLE_3)
    w3 = find_chordless_cycle(G3)
    assert validate_witness(G3, w3)
    assert find_chordless_cycle(build(12, (3, 6))) is None


def test_validate_witness_examples():
    G = build(*EXAMPLE_1)
    assert validate_witness(G, (0, 2, 6, 8))
    assert not validate_witness(G, (0, 2, 6))
    # 0, 3, 6, 9 in C_10(3,4): 9 -> 0 has distance 1, not an edge
    assert not validate_witness(build(*EXAMPLE_2), (0, 3, 6, 9))
    assert not validate_witness(G, (0, 2, 2, 8))


def test_generic_fallback_is_sound():
    G = build(12, (4, 6))
    assert not any(orda_applies(G, a) for a in G.S)
    w = find_chordless_cycle(G)
    assert w.strategy in (NOTCH, GENERIC)
    assert validate_witness(G, w)


@pytest.mark.parametrize("n", range(4, 17))
def test_witnesses_sound_and_rotation_invariant(n):
    for S in all_connection_sets(n):
        G = build(n, S)
        w = find_chordless_cycle(G)
        if w is None:
            assert is_chordal_structural(G)
            assert not has_chordless_square(G)
            continue
        assert validate_witness(G, w)
        assert validate_witness(G, w.shifted(n))
        for a in G.S:
            if orda_applies(G, a):
                direct = witness_orda(G, a)
                assert direct.strategy in (ORDA_1S, ORDA_2S)
                assert validate_witness(G, direct)


@pytest.mark.parametrize("n", range(4, 19))
def test_structural_matches_oracle(n):
    for S in all_connection_sets(n):
        G = build(n, S)
        assert is_chordal_structural(G) == is_chordal(G) == nx.is_chordal(to_networkx(G))


@pytest.mark.parametrize("n", range(2, 19))
def test_chordal_means_union_of_cliques(n):
    for S in all_connection_sets(n):
        G = build(n, S)
        if not S or not is_chordal_structural(G):
            continue
        _, _, cosets = G.components()
        for coset in cosets:
            assert all(G.is_edge(u, v) for u in coset for v in coset if u != v)

