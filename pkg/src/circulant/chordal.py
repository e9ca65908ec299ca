"""Chordality of circulant graphs and chordless-cycle certificates.

Three independent routes are provided:

* ``is_chordal_structural`` -- a circulant is chordal exactly when it is a
  disjoint union of equal cliques, i.e. S = {d, 2d, ..., (m//2) d} with
  d = gcd(n, S) and m = n / d;
* ``is_chordal_oracle`` -- maximum cardinality search followed by a check of
  the resulting elimination ordering, valid for any simple graph;
* ``find_chordless_cycle`` -- explicit witnesses, built from the arithmetic
  of multiples of a connection (``witness_orda``), from Bezout identities
  (``witness_notch``) or by a generic induced-path search.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import reduce
from math import gcd
from typing import List, Optional, Sequence, Tuple

from .core import CirculantGraph, Edge, fold

ORDA_1S = "orda-1S"
ORDA_2S = "orda-2S"
NOTCH = "notch"
GENERIC = "generic-fallback"


class HypothesisError(ValueError):
    """A witness construction was asked for on a graph it does not apply to."""


@dataclass(frozen=True)
class CycleWitness:
    vertices: Tuple[int, ...]
    strategy: str
    # candidates tried and rejected on the way, kept for explanation only
    rejected: Tuple[Tuple[int, ...], ...] = field(default=(), compare=False)

    def __len__(self) -> int:
        return len(self.vertices)

    def shifted(self, n: int, by: int = 1) -> "CycleWitness":
        return CycleWitness(tuple((v + by) % n for v in self.vertices), self.strategy)


def ord_mod(n: int, a: int) -> int:
    """Additive order of ``a`` in Z_n."""
    return n // gcd(n, a)


def _masks_from_edges(n: int, edges: Sequence[Edge]) -> List[int]:
    adj = [0] * n
    for u, v in edges:
        if u == v:
            raise ValueError(f"loop at {u}")
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return adj


# ---------------------------------------------------------------------------
# decision procedures


def is_chordal_structural(G: CirculantGraph) -> bool:
    if not G.S:
        return True
    d = G.component_count()
    m = G.n // d
    return set(G.S) == {j * d for j in range(1, m // 2 + 1)}


def mcs_order(adj: Sequence[int]) -> List[int]:
    """Maximum cardinality search; returns vertices in visiting order.

    Ties go to the smallest label so the order is reproducible.
    """
    n = len(adj)
    weight = [0] * n
    visited = 0
    order = []
    for _ in range(n):
        best, best_w = -1, -1
        for v in range(n):
            if not visited >> v & 1 and weight[v] > best_w:
                best, best_w = v, weight[v]
        order.append(best)
        visited |= 1 << best
        nb = adj[best] & ~visited
        while nb:
            low = nb & -nb
            weight[low.bit_length() - 1] += 1
            nb ^= low
    return order


def is_perfect_elimination(adj: Sequence[int], visit_order: Sequence[int]) -> bool:
    """Check that the reverse of an MCS visiting order eliminates perfectly.

    For each vertex, its neighbours visited earlier must all be adjacent to
    the most recently visited of them (Tarjan and Yannakakis).
    """
    position = {v: i for i, v in enumerate(visit_order)}
    earlier = 0
    for v in visit_order:
        before = adj[v] & earlier
        if before:
            parent = max(_bits(before), key=position.__getitem__)
            rest = before & ~(1 << parent)
            if rest & ~adj[parent]:
                return False
        earlier |= 1 << v
    return True


def is_chordal_oracle(n: int, edges: Sequence[Edge]) -> bool:
    """Chordality of an arbitrary simple graph on vertices 0..n-1."""
    adj = _masks_from_edges(n, edges)
    return is_perfect_elimination(adj, mcs_order(adj))


def is_chordal(G: CirculantGraph) -> bool:
    return is_chordal_oracle(G.n, G.edges())


# ---------------------------------------------------------------------------
# witnesses


def validate_witness(G: CirculantGraph, w: CycleWitness | Sequence[int]) -> bool:
    """True iff ``w`` is an induced cycle of length >= 4 in G."""
    vertices = w.vertices if isinstance(w, CycleWitness) else tuple(w)
    k = len(vertices)
    if k < 4 or len(set(vertices)) != k:
        return False
    if any(not 0 <= v < G.n for v in vertices):
        return False
    for x in range(k):
        for y in range(x + 1, k):
            consecutive = y == x + 1 or (x == 0 and y == k - 1)
            if G.is_edge(vertices[x], vertices[y]) != consecutive:
                return False
    return True


def orda_applies(G: CirculantGraph, a: int) -> bool:
    """Whether ``a`` in S has order >= 4 and some multiple j*a, j <= ord/2, misses S."""
    if a not in G.S:
        return False
    k = ord_mod(G.n, a)
    return k >= 4 and any(not G.has_distance(j * a) for j in range(1, k // 2 + 1))


def _orda_multiples(G: CirculantGraph, a: int) -> Tuple[List[int], str]:
    """Multipliers m (vertex m*a) of the cycle for ``witness_orda``."""
    k = ord_mod(G.n, a)
    half = k // 2
    inside = [G.has_distance(j * a) for j in range(half + 1)]
    r = 1
    while r + 1 <= half and inside[r + 1]:
        r += 1
    top = next((j for j in range(r + 2, half + 1) if inside[j]), None)
    if top is not None:
        # a..ra in S, (r+1)a..(top-1)a missing, top*a in S.  Walk from 0 to
        # top with steps 1, r, 1, r, ... then close with the jump top.
        q, s = divmod(top, r + 1)
        path = [0, 1, r + 1]
        while path[-1] < q * (r + 1):
            path.append(path[-1] + 1)
            path.append(path[-1] + r)
        if s:
            path.append(top)
        return path, ORDA_1S
    # a..ra in S and every later multiple up to half missing: go round Z_k
    # in two runs of r-steps starting at 0 and at half.
    q = half // r
    path: List[int] = []
    for start in (0, half):
        for j in range(q + 1):
            m = (start + j * r) % k
            if m not in path:
                path.append(m)
    return path, ORDA_2S


def witness_orda(G: CirculantGraph, a: int) -> CycleWitness:
    """Chordless cycle among the multiples of ``a`` when they are not closed in S.

    Raises HypothesisError if ``a`` is not in S, has order below 4, or has
    all multiples up to half its order in S.  If the arithmetic construction
    does not validate, the generic search supplies the witness.
    """
    if not orda_applies(G, a):
        raise HypothesisError(f"lemma hypothesis not satisfied for a={a} in {G}")
    multiples, strategy = _orda_multiples(G, a)
    vertices = tuple(m * a % G.n for m in multiples)
    if validate_witness(G, vertices):
        return CycleWitness(vertices, strategy)
    w = generic_chordless_cycle(G)
    if w is None:
        raise RuntimeError(f"{G} satisfies the multiples hypothesis yet looks chordal")
    return CycleWitness(w.vertices, GENERIC, rejected=(vertices,))


def egcd(x: int, y: int) -> Tuple[int, int, int]:
    """Return (g, u, v) with u*x + v*y = g = gcd(x, y)."""
    old_r, r = x, y
    old_u, u = 1, 0
    old_v, v = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_u, u = u, old_u - q * u
        old_v, v = v, old_v - q * v
    return old_r, old_u, old_v


def _orda_covering(G: CirculantGraph, target: int) -> Optional[CycleWitness]:
    """An orda witness on the smallest element of S whose multiples reach ``target``."""
    for e in G.S:
        if target % gcd(e, G.n) == 0 and orda_applies(G, e):
            return witness_orda(G, e)
    return None


def witness_notch(G: CirculantGraph, generators: Sequence[int]) -> CycleWitness:
    """Chordless 4-cycle from connections whose gcd lies outside S.

    Follows the Bezout argument: with x = gcd(a_1, n), y = gcd(a_2, n) and
    d = gcd(x, y) outside S, write u*x + v*y = d and try the square
    0, u*x, d, v*y.  If its diagonal u*x - v*y falls in S, move to the pair
    (gcd(u*x - v*y, n), lcm(x, y)) and repeat; there are finitely many
    divisors of n to pass through.  Whenever some multiple needed on the way
    is missing from S, ``witness_orda`` takes over.
    """
    gens = list(generators)
    if not gens or any(a not in G.S for a in gens):
        raise HypothesisError(f"generators {gens} must be non-empty and lie in S")
    if G.has_distance(reduce(gcd, gens)):
        raise HypothesisError(f"gcd of {gens} lies in S")
    while len(gens) > 2:
        head = reduce(gcd, gens[:-1])
        if not G.has_distance(head):
            gens = gens[:-1]
        else:
            gens = [head, gens[-1]]
    n = G.n
    a1, a2 = gens
    x, y = gcd(a1, n), gcd(a2, n)
    for orig, div in ((a1, x), (a2, y)):
        if not G.has_distance(div):
            return _notch_fallback(G, witness_orda(G, orig), ())
    d = gcd(x, y)
    if G.has_distance(d):
        return _notch_fallback(G, witness_orda(G, fold(n, d)), ())

    rejected: List[Tuple[int, ...]] = []
    seen = set()
    while (x, y) not in seen:
        seen.add((x, y))
        missing = [e for e in (x, y) if not G.has_distance(e)]
        _, u, v = egcd(x, y)
        X, Y = u * x % n, v * y % n
        missing += [t for t in (X, Y) if not G.has_distance(t)]
        if missing:
            w = _orda_covering(G, missing[0])
            if w is None:
                break
            return _notch_fallback(G, w, rejected)
        first, last = sorted((X, Y))
        candidate = (0, first, d % n, last)
        if not G.has_distance(X - Y):
            if validate_witness(G, candidate):
                return CycleWitness(candidate, NOTCH, tuple(rejected))
            break
        rejected.append(candidate)
        kd = gcd(X - Y, n)
        if not G.has_distance(kd):
            if not orda_applies(G, fold(n, X - Y)):
                break
            return _notch_fallback(G, witness_orda(G, fold(n, X - Y)), rejected)
        if kd == d:
            break
        x, y = kd, x * y // d
    w = generic_chordless_cycle(G)
    if w is None:
        raise RuntimeError(f"{G} has gcd outside S yet looks chordal")
    return CycleWitness(w.vertices, GENERIC, tuple(rejected))


def _notch_fallback(G: CirculantGraph, w: CycleWitness, rejected) -> CycleWitness:
    return CycleWitness(w.vertices, w.strategy, tuple(rejected) + w.rejected)


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _shortest_path(adj: Sequence[int], allowed: int, src: int, dst: int) -> Optional[List[int]]:
    parent = {src: None}
    frontier = [src]
    while frontier:
        nxt = []
        for v in frontier:
            for u in _bits(adj[v] & allowed):
                if u in parent:
                    continue
                parent[u] = v
                if u == dst:
                    path = [u]
                    while parent[path[-1]] is not None:
                        path.append(parent[path[-1]])
                    return path[::-1]
                nxt.append(u)
        frontier = nxt
    return None


def find_hole(adj: Sequence[int]) -> Optional[List[int]]:
    """Induced cycle of length >= 4 in an arbitrary graph, or None if chordal.

    For every induced path u - v - w, a shortest w..u path avoiding the rest
    of N[v] closes an induced cycle through v.
    """
    n = len(adj)
    everything = (1 << n) - 1
    for v in range(n):
        for u in _bits(adj[v]):
            for w in _bits(adj[v] & ~adj[u] & ~(1 << u)):
                if w < u:
                    continue
                allowed = everything & ~adj[v] & ~(1 << v) | (1 << u) | (1 << w)
                path = _shortest_path(adj, allowed, w, u)
                if path is not None:
                    return [v] + path
    return None


def generic_chordless_cycle(G: CirculantGraph) -> Optional[CycleWitness]:
    hole = find_hole(G.adjacency_masks())
    return None if hole is None else CycleWitness(tuple(hole), GENERIC)


def find_chordless_cycle(G: CirculantGraph) -> Optional[CycleWitness]:
    """A validated chordless cycle, or None when G is chordal.

    Strategies are tried in the order orda (smallest eligible connection
    first), notch (pairs of connections, then all of S), generic search.
    """
    if is_chordal(G):
        return None
    candidates = []
    for a in G.S:
        if orda_applies(G, a):
            candidates.append(lambda a=a: witness_orda(G, a))
    pairs = [(a, b) for i, a in enumerate(G.S) for b in G.S[i + 1:]]
    for gens in pairs + [tuple(G.S)]:
        if len(gens) >= 2 and not G.has_distance(reduce(gcd, gens)):
            candidates.append(lambda gens=gens: witness_notch(G, gens))
    candidates.append(lambda: generic_chordless_cycle(G))
    for make in candidates:
        w = make()
        if w is not None and validate_witness(G, w):
            return w
    raise RuntimeError(f"internal inconsistency: {G} is not chordal but no witness was found")
