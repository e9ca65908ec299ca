"""Circulant graphs C_n(S): construction, adjacency and component structure."""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import reduce
from math import gcd
from typing import Iterable, List, Sequence, Tuple

Edge = Tuple[int, int]


def labelling_distance(n: int, i: int, j: int) -> int:
    """Cyclic distance min(|i-j| mod n, n - |i-j| mod n)."""
    k = (i - j) % n
    return min(k, n - k)


def fold(n: int, x: int) -> int:
    """Map any integer to its labelling distance from 0 in Z_n."""
    return labelling_distance(n, x, 0)


@dataclass(frozen=True)
class CirculantGraph:
    """The circulant graph on Z_n whose edges join labels at a distance in S.

    ``S`` is kept sorted; ``mask`` has bit ``k`` set iff ``k`` is in S, so
    adjacency is a single shift-and-test.
    """

    n: int
    S: Tuple[int, ...]
    mask: int = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        if not isinstance(self.n, int) or self.n < 2:
            raise ValueError(f"n must be an integer >= 2, got {self.n!r}")
        half = self.n // 2
        seen = set()
        for s in self.S:
            if not isinstance(s, int) or not 1 <= s <= half:
                raise ValueError(f"connection {s!r} outside 1..{half} for n={self.n}")
            if s in seen:
                raise ValueError(f"duplicate connection {s}")
            seen.add(s)
        object.__setattr__(self, "S", tuple(sorted(self.S)))
        object.__setattr__(self, "mask", sum(1 << s for s in self.S))

    def __str__(self) -> str:
        return f"C_{self.n}({','.join(map(str, self.S))})"

    @property
    def vertices(self) -> range:
        return range(self.n)

    def has_distance(self, k: int) -> bool:
        """True iff the labelling distance of ``k`` lies in S."""
        return bool(self.mask >> fold(self.n, k) & 1)

    def is_edge(self, i: int, j: int) -> bool:
        return bool(self.mask >> labelling_distance(self.n, i, j) & 1)

    def neighbors(self, v: int) -> List[int]:
        out = set()
        for s in self.S:
            out.add((v + s) % self.n)
            out.add((v - s) % self.n)
        return sorted(out)

    def adjacency_masks(self) -> List[int]:
        """Neighbourhood of every vertex as an int bitset."""
        return [sum(1 << u for u in self.neighbors(v)) for v in range(self.n)]

    def edges(self) -> List[Edge]:
        """All edges as sorted pairs, in lexicographic order."""
        out = set()
        for v in range(self.n):
            for s in self.S:
                u = (v + s) % self.n
                out.add((min(u, v), max(u, v)))
        return sorted(out)

    def edge_count(self) -> int:
        m = self.n * len(self.S)
        if self.n % 2 == 0 and self.n // 2 in self.S:
            m -= self.n // 2
        return m

    def degree(self) -> int:
        return 2 * len(self.S) - (self.n % 2 == 0 and self.n // 2 in self.S)

    def is_connected(self) -> bool:
        return self.component_count() == 1

    def component_count(self) -> int:
        """Number of connected components, gcd(n, S); an edgeless graph has n."""
        if not self.S:
            return self.n
        return reduce(gcd, self.S, self.n)

    def components(self) -> Tuple[int, "CirculantGraph", List[List[int]]]:
        """Return ``(d, quotient, cosets)``.

        Every component is isomorphic to ``quotient`` = C_{n/d}(S/d) with the
        connection set folded back into 1..(n/d)//2; ``cosets`` lists the
        vertices of each component (residue classes mod d).
        """
        if not self.S:
            raise ValueError("components() needs a non-empty connection set")
        d = self.component_count()
        k = self.n // d
        quotient = CirculantGraph(k, tuple(sorted({fold(k, s // d) for s in self.S})))
        cosets = [list(range(c, self.n, d)) for c in range(d)]
        return d, quotient, cosets

    def complement(self) -> "CirculantGraph":
        return CirculantGraph(self.n, tuple(s for s in range(1, self.n // 2 + 1) if s not in self.S))


def build(n: int, S: Iterable[int]) -> CirculantGraph:
    """Validate and build C_n(S)."""
    return CirculantGraph(n, tuple(S))


def cycle_power(n: int, d: int) -> CirculantGraph:
    """The d-th power of the n-cycle, C_n(1, 2, ..., d)."""
    return CirculantGraph(n, tuple(range(1, d + 1)))


def all_connection_sets(n: int) -> List[Tuple[int, ...]]:
    """Every subset of 1..n//2 (empty included), in a fixed order."""
    half = n // 2
    out = []
    for bits in range(1 << half):
        out.append(tuple(s for s in range(1, half + 1) if bits >> (s - 1) & 1))
    return out


def bfs_component_count(n: int, edges: Sequence[Edge]) -> int:
    """Connected components of an arbitrary simple graph."""
    adj: List[List[int]] = [[] for _ in range(n)]
    for u, v in edges:
        adj[u].append(v)
        adj[v].append(u)
    seen = [False] * n
    count = 0
    for start in range(n):
        if seen[start]:
            continue
        count += 1
        seen[start] = True
        stack = [start]
        while stack:
            v = stack.pop()
            for u in adj[v]:
                if not seen[u]:
                    seen[u] = True
                    stack.append(u)
    return count
