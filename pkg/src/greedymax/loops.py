"""Loop-multigraph variant: exact minimum k-independence over realizations.

When loops are allowed (each loop adds 2 to a degree), the minimum of the
k-independence number over all realizations of a degree sequence has a
closed form.  This module provides that closed form, the extremal
construction attaining it, a brute-force independence oracle, and a
labeled enumeration of all realizations for cross-checking.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterator

from .errors import InputError, LimitError
from .multiset import DegreeSequence

BRUTEFORCE_MAX_ORDER = 14
ENUM_MAX_ORDER = 6
ENUM_MAX_SUM = 26


@dataclass(frozen=True)
class LoopMultigraph:
    """Multigraph on vertices 0..n-1 in which keys with u == v are loops."""

    n: int
    edges: tuple[tuple[tuple[int, int], int], ...]

    @staticmethod
    def from_edges(n: int, edges) -> "LoopMultigraph":
        acc: dict[tuple[int, int], int] = {}
        for item in edges:
            if len(item) == 3:
                u, v, m = item
            else:
                (u, v), m = item
            if not (0 <= u < n and 0 <= v < n):
                raise InputError(f"vertex out of range in edge ({u},{v})")
            if m < 1:
                raise InputError("edge multiplicity must be positive")
            key = (min(u, v), max(u, v))
            acc[key] = acc.get(key, 0) + int(m)
        return LoopMultigraph(n, tuple(sorted(acc.items())))

    def degrees(self) -> list[int]:
        deg = [0] * self.n
        for (a, c), m in self.edges:
            if a == c:
                deg[a] += 2 * m
            else:
                deg[a] += m
                deg[c] += m
        return deg

    def degree_sequence(self) -> DegreeSequence:
        return DegreeSequence.from_values(self.degrees())

    def to_json(self) -> dict:
        return {"n": self.n, "edges": [[u, v, m] for (u, v), m in self.edges]}

    @staticmethod
    def from_json(data: dict) -> "LoopMultigraph":
        try:
            return LoopMultigraph.from_edges(int(data["n"]), data.get("edges", []))
        except (KeyError, TypeError) as exc:
            raise InputError(f"malformed loop multigraph JSON: {exc}") from exc


def _split(D: DegreeSequence, k: int) -> tuple[int, int, int]:
    """(zero count, #{0 < x < k}, #{x = k})."""
    zcount = D.mu(0)
    small = sum(m for v, m in D.items if 0 < v < k)
    at_k = D.mu(k)
    return zcount, small, at_k


def alpha_k_min_loops(D: DegreeSequence, k: int) -> int:
    """Closed-form minimum of the k-independence number over all loop
    multigraphs with degree sequence D.

    Zero-degree elements simply add 1 each; on the positive part the value
    is the count of elements below k when k is even, and for odd k the
    larger of that count and half the count of elements at most k."""
    if k < 1:
        raise InputError("k must be a positive integer")
    if D.total % 2 != 0:
        raise InputError("sum of degrees must be even")
    zcount, small, at_k = _split(D, k)
    if k % 2 == 0:
        return small + zcount
    return max(small, -(-(small + at_k) // 2)) + zcount


def alpha_k_bruteforce(G: LoopMultigraph, k: int) -> int:
    """Exact k-independence number by subset search (guarded at order 14)."""
    if k < 1:
        raise InputError("k must be a positive integer")
    if G.n > BRUTEFORCE_MAX_ORDER:
        raise LimitError(f"order {G.n} exceeds guard {BRUTEFORCE_MAX_ORDER}")
    adj: list[dict[int, int]] = [dict() for _ in range(G.n)]
    loops = [0] * G.n
    for (a, c), m in G.edges:
        if a == c:
            loops[a] += m
        else:
            adj[a][c] = m
            adj[c][a] = m
    verts = list(range(G.n))
    for size in range(G.n, -1, -1):
        for subset in combinations(verts, size):
            chosen = set(subset)
            ok = True
            for v in subset:
                d = 2 * loops[v] + sum(
                    m for u, m in adj[v].items() if u in chosen
                )
                if d >= k:
                    ok = False
                    break
            if ok:
                return size
    return 0


def enumerate_loop_realizations(D: DegreeSequence) -> Iterator[LoopMultigraph]:
    """Every labeled loop multigraph with degree sequence D (degrees assigned
    to vertices in sorted order; no isomorphism reduction)."""
    degrees = sorted(D.values())
    n = len(degrees)
    if n > ENUM_MAX_ORDER or D.total > ENUM_MAX_SUM:
        raise LimitError(
            f"instance exceeds guards (order <= {ENUM_MAX_ORDER}, "
            f"sum <= {ENUM_MAX_SUM})"
        )
    if D.total % 2 != 0:
        return
    pairs = [(i, j) for i in range(n) for j in range(i, n)]
    residual = degrees[:]
    assignment: dict[tuple[int, int], int] = {}

    def last_pair_of(i: int) -> tuple[int, int]:
        return (i, n - 1)

    def recurse(idx: int) -> Iterator[LoopMultigraph]:
        if idx == len(pairs):
            if all(r == 0 for r in residual):
                yield LoopMultigraph.from_edges(
                    n, [(u, v, m) for (u, v), m in assignment.items() if m]
                )
            return
        i, j = pairs[idx]
        if i == j:
            cap = residual[i] // 2
            unit = 2
        else:
            cap = min(residual[i], residual[j])
            unit = 1
        for m in range(cap + 1):
            assignment[(i, j)] = m
            residual[i] -= unit * m if i == j else m
            if i != j:
                residual[j] -= m
            # once a vertex's last pair is decided its residual must be zero
            # (loops can still absorb residual at (j,j) when i != j)
            feasible = True
            if (i, j) == last_pair_of(i) and residual[i] != 0:
                feasible = False
            if feasible:
                yield from recurse(idx + 1)
            residual[i] += unit * m if i == j else m
            if i != j:
                residual[j] += m
        del assignment[(i, j)]

    yield from recurse(0)


def construct_extremal_loop_multigraph(
    D: DegreeSequence, k: int
) -> LoopMultigraph:
    """A loop multigraph with degree sequence D attaining the closed-form
    minimum k-independence number.

    Even k: pair the odd-degree vertices with single edges and put all
    remaining degree into loops.  Odd k: a first matching pins elements at
    k against smaller elements (or each other), a second matching fixes
    parities, and the rest is loops."""
    if k < 1:
        raise InputError("k must be a positive integer")
    if len(D) == 0:
        raise InputError("degree sequence is empty")
    if any(v == 0 for v in D.values()):
        raise InputError("all elements must be positive")
    if D.total % 2 != 0:
        raise InputError("sum of degrees must be even")
    degrees = sorted(D.values())
    n = len(degrees)
    edge_mult: dict[tuple[int, int], int] = {}

    def add_edge(u: int, v: int) -> None:
        key = (min(u, v), max(u, v))
        edge_mult[key] = edge_mult.get(key, 0) + 1

    if k % 2 == 0:
        odd = [i for i in range(n) if degrees[i] % 2 == 1]
        matched = [0] * n
        for a, bb in zip(odd[0::2], odd[1::2]):
            add_edge(a, bb)
            matched[a] += 1
            matched[bb] += 1
        for i in range(n):
            rest = degrees[i] - matched[i]
            if rest:
                edge_mult[(i, i)] = edge_mult.get((i, i), 0) + rest // 2
        return LoopMultigraph(n, tuple(sorted(edge_mult.items())))

    s = sum(1 for d in degrees if d < k)
    c = sum(1 for d in degrees if d == k)
    m1: list[tuple[int, int]] = []
    if c <= s:
        m1 = [(i, s + i) for i in range(c)]
    else:
        m1 = [(i, s + i) for i in range(s)]
        m1 += [
            (2 * s + 2 * i, 2 * s + 2 * i + 1)
            for i in range((c - s) // 2)
        ]
    in_m1 = set()
    for a, bb in m1:
        in_m1.update((a, bb))
    v_m2 = sorted(
        [i for i in in_m1 if degrees[i] % 2 == 0]
        + [i for i in range(n) if i not in in_m1 and degrees[i] % 2 == 1]
    )
    m2 = list(zip(v_m2[0::2], v_m2[1::2]))
    non_loop = [0] * n
    for a, bb in m1 + m2:
        add_edge(a, bb)
        non_loop[a] += 1
        non_loop[bb] += 1
    for i in range(n):
        rest = degrees[i] - non_loop[i]
        if rest:
            edge_mult[(i, i)] = edge_mult.get((i, i), 0) + rest // 2
    return LoopMultigraph(n, tuple(sorted(edge_mult.items())))
