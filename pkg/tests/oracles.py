"""Independent brute-force checkers used only by the tests."""

from itertools import combinations

import networkx as nx


def to_networkx(G):
    H = nx.Graph()
    H.add_nodes_from(range(G.n))
    H.add_edges_from(G.edges())
    return H


def brute_force_induced_matching(G):
    """Largest edge set whose endpoints induce exactly those edges."""
    edges = G.edges()
    best = []
    for k in range(1, len(edges) + 1):
        found = None
        for M in combinations(edges, k):
            verts = [v for e in M for v in e]
            if len(set(verts)) != 2 * k:
                continue
            induced = {(u, v) for u, v in combinations(sorted(verts), 2) if G.is_edge(u, v)}
            if induced == set(M):
                found = list(M)
                break
        if found is None:
            break
        best = found
    return len(best)


def has_chordless_square(G):
    """Exhaustive scan of 4-subsets for an induced 4-cycle."""
    for quad in combinations(range(G.n), 4):
        deg = {v: sum(G.is_edge(v, u) for u in quad if u != v) for v in quad}
        if all(d == 2 for d in deg.values()):
            edges = sum(deg.values()) // 2
            if edges == 4:
                return True
    return False


def homology_over_rationals(complex_):
    """Reduced Betti numbers over Q from dense boundary matrices (sympy)."""
    import sympy

    levels = [complex_.face_sets(d) for d in range(-1, complex_.dimension + 1)]
    ranks = [0] * (len(levels) + 1)
    for k in range(1, len(levels)):
        lower = {f: i for i, f in enumerate(levels[k - 1])}
        M = sympy.zeros(len(levels[k]), len(levels[k - 1]))
        for r, face in enumerate(levels[k]):
            for pos, v in enumerate(face):
                M[r, lower[face[:pos] + face[pos + 1:]]] = (-1) ** pos
        ranks[k] = M.rank()
    return tuple(len(levels[k]) - ranks[k] - ranks[k + 1] for k in range(len(levels)))
