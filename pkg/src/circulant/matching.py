"""Induced matching number of circulant graphs.

``induced_matching_formula`` evaluates the closed counting formula
floor(|E| / t) with t = s^2 + (|A| + 1) s (minus 2 when n/2 is a connection),
and ``induced_matching_oracle`` computes the true value by exact search.
The two are deliberately kept apart: ``audit`` reports where they differ
instead of patching the formula.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from .core import CirculantGraph, Edge, all_connection_sets, build, cycle_power

DEFAULT_ORACLE_MAX_N = 20


class TooLargeError(ValueError):
    """Instance exceeds the configured bound for an exact computation."""


@dataclass
class MatchingReport:
    n: int
    S: Tuple[int, ...]
    r: int
    s: int
    A: Tuple[int, ...]
    t: int
    edge_count: int
    nu_formula: int
    components_factor: int = 1
    quotient: Optional["MatchingReport"] = None
    nu_oracle: Optional[int] = None
    witness: Optional[List[Edge]] = None

    def to_dict(self) -> dict:
        out = {
            "n": self.n,
            "S": list(self.S),
            "r": self.r,
            "s": self.s,
            "A": list(self.A),
            "t": self.t,
            "edge_count": self.edge_count,
            "nu_formula": self.nu_formula,
            "components_factor": self.components_factor,
            "nu_oracle": self.nu_oracle,
            "witness": [list(e) for e in self.witness] if self.witness is not None else None,
        }
        if self.quotient is not None:
            out["quotient"] = self.quotient.to_dict()
        return out


def are_adjacent(e: Edge, f: Edge) -> bool:
    return len(set(e) & set(f)) == 1


def are_2_adjacent(G: CirculantGraph, e: Edge, f: Edge) -> bool:
    """Some endpoint of ``e`` is joined by an edge to some endpoint of ``f``."""
    return any(G.is_edge(v, u) for v in e for u in f)


def is_induced_matching(G: CirculantGraph, M: Sequence[Edge]) -> bool:
    """Edges of G, pairwise vertex-disjoint, no two of them 2-adjacent."""
    for e in M:
        if not G.is_edge(*e):
            return False
    for x in range(len(M)):
        for y in range(x + 1, len(M)):
            if set(M[x]) & set(M[y]) or are_2_adjacent(G, M[x], M[y]):
                return False
    return True


def compute_A(G: CirculantGraph, folded: bool = False) -> Tuple[int, ...]:
    """Labels r + a (mod n), a in S, r = min S, that are not in S.

    By default "not in S" is literal membership of the label; with
    ``folded`` the labelling distance of r + a is tested instead.
    """
    if not G.S:
        raise ValueError("compute_A needs a non-empty connection set")
    r = G.S[0]
    out = set()
    for a in G.S:
        b = (r + a) % G.n
        inside = G.has_distance(b) if folded else b in G.S
        if not inside:
            out.add(b)
    return tuple(sorted(out))


def _t_value(G: CirculantGraph, A: Sequence[int]) -> int:
    s = len(G.S)
    t = s * s + (len(A) + 1) * s
    if G.n % 2 == 0 and G.n // 2 in G.S:
        t -= 2
    return t


def induced_matching_formula(G: CirculantGraph, folded: bool = False) -> MatchingReport:
    """The counting formula, evaluated exactly as stated.

    Disconnected graphs are reduced to one component C_{n/d}(S/d) and the
    result is multiplied by d.  An empty S gives the report with every
    ingredient zero and nu_formula = 0.
    """
    if not G.S:
        return MatchingReport(G.n, G.S, 0, 0, (), 0, 0, 0, components_factor=G.n)
    d = G.component_count()
    if d > 1:
        _, quotient, _ = G.components()
        sub = induced_matching_formula(quotient, folded)
        return MatchingReport(
            G.n, G.S, sub.r * d, sub.s, tuple(sorted(x * d for x in sub.A)), sub.t,
            G.edge_count(), d * sub.nu_formula, components_factor=d, quotient=sub,
        )
    A = compute_A(G, folded)
    t = _t_value(G, A)
    m = G.edge_count()
    return MatchingReport(G.n, G.S, G.S[0], len(G.S), A, t, m, m // t)


def power_cycle_formula(n: int, d: int) -> int:
    if not 1 <= d < n // 2:
        raise ValueError(f"need 1 <= d < n//2, got n={n}, d={d}")
    return n // (d + 2)


# ---------------------------------------------------------------------------
# exact oracle


def _compatibility(G: CirculantGraph, edges: Sequence[Edge]) -> List[int]:
    """Bitset graph on edge indices: i ~ j iff edges i, j may share an induced matching."""
    closed = [m | (1 << v) for v, m in enumerate(G.adjacency_masks())]
    reach = [closed[u] | closed[v] for u, v in edges]
    ends = [(1 << u) | (1 << v) for u, v in edges]
    m = len(edges)
    compat = [0] * m
    for i in range(m):
        for j in range(i + 1, m):
            # disjoint and not 2-adjacent: no endpoint of j in N[u] or N[v]
            if not reach[i] & ends[j]:
                compat[i] |= 1 << j
                compat[j] |= 1 << i
    return compat


def _colour_bound(cand: int, adj: Sequence[int]) -> Tuple[List[int], List[int]]:
    """Greedy colouring of ``cand`` into independent sets of ``adj``.

    Returns vertices in colour order with their cumulative colour numbers;
    a clique inside any prefix cannot exceed its colour number.
    """
    order, bounds = [], []
    colour = 0
    rest = cand
    while rest:
        colour += 1
        avail = rest
        while avail:
            low = avail & -avail
            v = low.bit_length() - 1
            order.append(v)
            bounds.append(colour)
            rest &= ~low
            avail &= ~low & ~adj[v]
    return order, bounds


def max_clique(adj: Sequence[int]) -> List[int]:
    """Maximum clique of a bitset graph by colour-bounded branch and bound.

    Branching follows the colour order with smallest labels first, so the
    returned clique is reproducible.
    """
    best: List[int] = []

    def expand(current: List[int], cand: int) -> None:
        nonlocal best
        order, bounds = _colour_bound(cand, adj)
        for idx in range(len(order) - 1, -1, -1):
            if len(current) + bounds[idx] <= len(best):
                return
            v = order[idx]
            current.append(v)
            nxt = cand & adj[v]
            if nxt:
                expand(current, nxt)
            elif len(current) > len(best):
                best = list(current)
            current.pop()
            cand &= ~(1 << v)

    expand([], (1 << len(adj)) - 1)
    return sorted(best)


def _oracle_connected(G: CirculantGraph) -> List[Edge]:
    edges = G.edges()
    if not edges:
        return []
    chosen = max_clique(_compatibility(G, edges))
    return [edges[i] for i in chosen]


def induced_matching_oracle(
    G: CirculantGraph, max_n: int = DEFAULT_ORACLE_MAX_N, full: bool = False
) -> Tuple[int, List[Edge]]:
    """Exact maximum induced matching and one optimal witness.

    For a disconnected graph one component is solved and its witness copied
    to every coset unless ``full`` asks for a search on the whole graph.
    """
    if G.n > max_n:
        raise TooLargeError(f"{G}: n={G.n} exceeds the oracle bound {max_n}")
    if not G.S:
        return 0, []
    d = G.component_count()
    if d == 1 or full:
        M = _oracle_connected(G)
        return len(M), M
    _, quotient, _ = G.components()
    sub = _oracle_connected(quotient)
    M = sorted(
        tuple(sorted((c + d * u, c + d * v))) for c in range(d) for u, v in sub
    )
    return len(M), M


def matching_report(G: CirculantGraph, oracle: bool = False, folded: bool = False,
                    max_n: int = DEFAULT_ORACLE_MAX_N) -> MatchingReport:
    report = induced_matching_formula(G, folded)
    if oracle:
        report.nu_oracle, report.witness = induced_matching_oracle(G, max_n)
    return report


# ---------------------------------------------------------------------------
# audit

MODES = ("all-sets", "cycle-powers")


@dataclass(frozen=True)
class AuditRow:
    n: int
    S: Tuple[int, ...]
    nu_formula: int
    nu_oracle: Optional[int]
    status: str  # "agree", "differ" or "skipped"
    table1_family: bool = field(default=False)

    @property
    def agree(self) -> Optional[bool]:
        return None if self.nu_oracle is None else self.nu_formula == self.nu_oracle


def in_table1_family(G: CirculantGraph) -> bool:
    """G is a proper power of a cycle C_n(1..d) with 1 <= d < n//2."""
    d = len(G.S)
    return d >= 1 and G.S == tuple(range(1, d + 1)) and d < G.n // 2


def audit_instances(n_values: Iterable[int], mode: str) -> List[Tuple[int, Tuple[int, ...]]]:
    if mode not in MODES:
        raise ValueError(f"unknown audit mode {mode!r}; expected one of {MODES}")
    out = []
    for n in n_values:
        if mode == "cycle-powers":
            out += [(n, cycle_power(n, d).S) for d in range(1, n // 2)]
        else:
            out += [(n, S) for S in all_connection_sets(n)]
    return sorted(out)


def audit_row(n: int, S: Tuple[int, ...], folded: bool = False,
              max_n: int = DEFAULT_ORACLE_MAX_N) -> AuditRow:
    G = build(n, S)
    nu_f = induced_matching_formula(G, folded).nu_formula
    family = in_table1_family(G)
    try:
        nu_o, _ = induced_matching_oracle(G, max_n)
    except TooLargeError:
        return AuditRow(n, G.S, nu_f, None, "skipped", family)
    return AuditRow(n, G.S, nu_f, nu_o, "agree" if nu_f == nu_o else "differ", family)


def _audit_row_args(args) -> AuditRow:
    return audit_row(*args)


def audit(n_values: Iterable[int], mode: str = "all-sets", folded: bool = False,
          max_n: int = DEFAULT_ORACLE_MAX_N, jobs: int = 1) -> List[AuditRow]:
    """Formula against oracle for every instance, sorted by (n, S)."""
    work = [(n, S, folded, max_n) for n, S in audit_instances(n_values, mode)]
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            rows = list(pool.map(_audit_row_args, work, chunksize=8))
    else:
        rows = [audit_row(*w) for w in work]
    return sorted(rows, key=lambda row: (row.n, row.S))


def audit_summary(rows: Sequence[AuditRow]) -> Dict[str, int]:
    return {
        "rows": len(rows),
        "agree": sum(r.status == "agree" for r in rows),
        "differ": sum(r.status == "differ" for r in rows),
        "skipped": sum(r.status == "skipped" for r in rows),
        "table1_family_differ": sum(r.status == "differ" and r.table1_family for r in rows),
    }
