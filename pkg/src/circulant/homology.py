"""Independence complexes and their reduced homology over prime fields."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, List, Sequence, Tuple


@dataclass(frozen=True)
class IndependenceComplex:
    """All independent subsets of ``ground`` as bitmasks, grouped by dimension.

    ``faces[0]`` holds the empty face (dimension -1), ``faces[k]`` the faces
    with k vertices.
    """

    ground: Tuple[int, ...]
    faces: Tuple[Tuple[int, ...], ...]

    @property
    def dimension(self) -> int:
        return len(self.faces) - 2

    def f_vector(self) -> List[int]:
        return [len(level) for level in self.faces]

    def face_sets(self, dim: int) -> List[Tuple[int, ...]]:
        if not -1 <= dim <= self.dimension:
            return []
        return [tuple(v for v in self.ground if F >> v & 1) for F in self.faces[dim + 1]]


@dataclass(frozen=True)
class HomologySummary:
    """Reduced homology dimensions; ``dims[0]`` is degree -1."""

    dims: Tuple[int, ...]

    def __getitem__(self, degree: int) -> int:
        idx = degree + 1
        return self.dims[idx] if 0 <= idx < len(self.dims) else 0

    def nonzero_degrees(self) -> List[int]:
        return [i - 1 for i, x in enumerate(self.dims) if x]


def independence_complex(adj: Sequence[int], ground: Sequence[int]) -> IndependenceComplex:
    """Enumerate independent subsets of ``ground`` in a graph given by bitset rows."""
    ground = tuple(sorted(ground))
    levels: List[List[int]] = [[0]]

    def grow(face: int, size: int, allowed: int) -> None:
        while allowed:
            low = allowed & -allowed
            allowed ^= low
            v = low.bit_length() - 1
            new = face | low
            if len(levels) <= size + 1:
                levels.append([])
            levels[size + 1].append(new)
            grow(new, size + 1, allowed & ~adj[v])

    grow(0, 0, sum(1 << v for v in ground))
    return IndependenceComplex(ground, tuple(tuple(sorted(level)) for level in levels))


def is_prime(p: int) -> bool:
    return p >= 2 and all(p % q for q in range(2, int(p ** 0.5) + 1))


def rank_gf2(rows: Sequence[int]) -> int:
    """Rank over GF(2) of rows packed into ints."""
    pivots: Dict[int, int] = {}
    for row in rows:
        while row:
            top = row.bit_length()
            if top in pivots:
                row ^= pivots[top]
            else:
                pivots[top] = row
                break
    return len(pivots)


def rank_mod_p(rows: List[Dict[int, int]], p: int) -> int:
    """Rank over GF(p) of sparse rows {column: value}."""
    pivots: Dict[int, Dict[int, int]] = {}
    rank = 0
    for row in rows:
        row = {c: x % p for c, x in row.items() if x % p}
        while row:
            col = max(row)
            piv = pivots.get(col)
            if piv is None:
                inv = pow(row[col], -1, p)
                pivots[col] = {c: x * inv % p for c, x in row.items()}
                rank += 1
                break
            f = row[col]
            for c, x in piv.items():
                y = (row.get(c, 0) - f * x) % p
                if y:
                    row[c] = y
                else:
                    row.pop(c, None)
    return rank


def _boundary_rank(lower: Sequence[int], upper: Sequence[int], p: int) -> int:
    """Rank of the boundary map from faces ``upper`` onto faces ``lower``."""
    if not lower or not upper:
        return 0
    index = {F: i for i, F in enumerate(lower)}
    if p == 2:
        rows = []
        for F in upper:
            row = 0
            rest = F
            while rest:
                low = rest & -rest
                rest ^= low
                row |= 1 << index[F ^ low]
            rows.append(row)
        return rank_gf2(rows)
    rows = []
    for F in upper:
        row = {}
        sign = 1
        rest = F
        while rest:
            low = rest & -rest
            rest ^= low
            row[index[F ^ low]] = sign
            sign = -sign
        rows.append(row)
    return rank_mod_p(rows, p)


def reduced_homology_dims(c: IndependenceComplex, p: int = 2) -> HomologySummary:
    """dim H~_l = f_l - rank d_l - rank d_{l+1} over GF(p), for l = -1..dim."""
    if not is_prime(p):
        raise ValueError(f"characteristic must be prime, got {p}")
    levels = c.faces
    ranks = [0] * (len(levels) + 1)
    for k in range(1, len(levels)):
        ranks[k] = _boundary_rank(levels[k - 1], levels[k], p)
    dims = tuple(len(levels[k]) - ranks[k] - ranks[k + 1] for k in range(len(levels)))
    return HomologySummary(dims)


def reduced_euler_characteristic(c: IndependenceComplex) -> int:
    return sum((-1) ** (k + 1) * len(level) for k, level in enumerate(c.faces))
