"""Loopless multigraphs, the greedy deletion algorithm, and worst-case witnesses.

The greedy algorithm repeatedly deletes a vertex of maximum degree until
the remainder has maximum degree below k; the survivors form a maximal
k-independent set.  max_worst_case exhausts every legal choice sequence,
and construct_worst_case builds, for any graphical D, a multigraph plus a
deletion script whose survivor count meets the bound from the omega chain
exactly.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Callable, Sequence

from .errors import InputError, LimitError
from .multiset import DegreeSequence
from .omega import decrement_sequence, omega

WORST_CASE_MAX_ORDER = 9

Chooser = Callable[[Sequence[int]], int]


@dataclass(frozen=True)
class Multigraph:
    """Loopless multigraph on vertices 0..n-1; edges keyed by ordered pair u < v."""

    n: int
    edges: tuple[tuple[tuple[int, int], int], ...]

    @staticmethod
    def from_edges(n: int, edges) -> "Multigraph":
        """Build from an iterable of ((u, v), mult) or (u, v, mult) items."""
        acc: dict[tuple[int, int], int] = {}
        for item in edges:
            if len(item) == 3:
                u, v, m = item
            else:
                (u, v), m = item
            if u == v:
                raise InputError("loops are not allowed")
            if not (0 <= u < n and 0 <= v < n):
                raise InputError(f"vertex out of range in edge ({u},{v})")
            if m < 1:
                raise InputError("edge multiplicity must be positive")
            key = (min(u, v), max(u, v))
            acc[key] = acc.get(key, 0) + int(m)
        return Multigraph(n, tuple(sorted(acc.items())))

    def degree(self, v: int) -> int:
        return sum(m for (a, b), m in self.edges if v in (a, b))

    def degrees(self) -> list[int]:
        deg = [0] * self.n
        for (a, c), m in self.edges:
            deg[a] += m
            deg[c] += m
        return deg

    def adjacency(self) -> list[dict[int, int]]:
        adj: list[dict[int, int]] = [dict() for _ in range(self.n)]
        for (a, c), m in self.edges:
            adj[a][c] = m
            adj[c][a] = m
        return adj

    def to_json(self) -> dict:
        return {"n": self.n, "edges": [[u, v, m] for (u, v), m in self.edges]}

    @staticmethod
    def from_json(data: dict) -> "Multigraph":
        try:
            return Multigraph.from_edges(int(data["n"]), data.get("edges", []))
        except (KeyError, TypeError) as exc:
            raise InputError(f"malformed multigraph JSON: {exc}") from exc


def degree_sequence_of(G: Multigraph) -> DegreeSequence:
    return DegreeSequence.from_values(G.degrees())


def realize(D: DegreeSequence) -> Multigraph:
    """Deterministic multigraph with degree sequence D: repeatedly join the
    two vertices of largest residual degree (ties to the lowest index)."""
    if not D.is_graphical():
        raise InputError("input is not graphical")
    residual = sorted(D.values(), reverse=True)
    n = len(residual)
    edges: dict[tuple[int, int], int] = {}
    while True:
        order = sorted(range(n), key=lambda i: (-residual[i], i))
        if not order or residual[order[0]] == 0:
            break
        u, v = order[0], order[1]
        key = (min(u, v), max(u, v))
        edges[key] = edges.get(key, 0) + 1
        residual[u] -= 1
        residual[v] -= 1
    return Multigraph(n, tuple(sorted(edges.items())))


def delete_vertex(G: Multigraph, v: int) -> Multigraph:
    """Remove v and its incident edges; remaining vertices are relabeled
    downward to keep the 0..n-2 range contiguous."""
    if not (0 <= v < G.n):
        raise InputError(f"vertex {v} out of range")

    def relabel(u: int) -> int:
        return u if u < v else u - 1

    edges = [
        ((relabel(a), relabel(c)), m)
        for (a, c), m in G.edges
        if v not in (a, c)
    ]
    return Multigraph(G.n - 1, tuple(sorted(edges)))


def lowest_index_chooser(candidates: Sequence[int]) -> int:
    return min(candidates)


def make_scripted_chooser(script: Sequence[int]) -> Chooser:
    """Chooser that replays a fixed deletion script (original vertex labels)."""
    it = iter(script)

    def choose(candidates: Sequence[int]) -> int:
        try:
            v = next(it)
        except StopIteration:
            raise InputError("deletion script exhausted before the run finished")
        if v not in candidates:
            raise InputError(f"scripted vertex {v} is not of maximum degree")
        return v

    return choose


def max_run(
    G: Multigraph, k: int, chooser: Chooser | None = None
) -> tuple[list[int], list[tuple[int, int]]]:
    """One application of the greedy deletion algorithm.

    Returns (surviving vertex list, log of (deleted vertex, degree at
    deletion)).  Vertices keep their original labels throughout."""
    if k < 1:
        raise InputError("k must be a positive integer")
    if chooser is None:
        chooser = lowest_index_chooser
    adj = G.adjacency()
    deg = G.degrees()
    alive = set(range(G.n))
    log: list[tuple[int, int]] = []
    while alive:
        delta = max(deg[v] for v in alive)
        if delta < k:
            break
        candidates = sorted(v for v in alive if deg[v] == delta)
        v = chooser(candidates)
        alive.remove(v)
        for u, m in adj[v].items():
            if u in alive:
                deg[u] -= m
        log.append((v, delta))
    return sorted(alive), log


def max_worst_case(
    G: Multigraph, k: int, max_order: int = WORST_CASE_MAX_ORDER
) -> tuple[int, list[int]]:
    """Exact minimum survivor count over every legal choice sequence of the
    greedy algorithm, with one witnessing deletion script.

    Depth-first search over choice trees, memoized on the surviving vertex
    set (which determines the residual subgraph exactly)."""
    if k < 1:
        raise InputError("k must be a positive integer")
    if G.n > max_order:
        raise LimitError(f"graph order {G.n} exceeds guard {max_order}")
    adj = G.adjacency()
    memo: dict[frozenset, tuple[int, tuple[int, ...]]] = {}

    def search(alive: frozenset) -> tuple[int, tuple[int, ...]]:
        if not alive:
            return 0, ()
        deg = {v: sum(m for u, m in adj[v].items() if u in alive) for v in alive}
        delta = max(deg.values())
        if delta < k:
            return len(alive), ()
        if alive in memo:
            return memo[alive]
        best: tuple[int, tuple[int, ...]] | None = None
        for v in sorted(u for u in alive if deg[u] == delta):
            size, script = search(alive - {v})
            if best is None or size < best[0]:
                best = (size, (v,) + script)
        assert best is not None
        memo[alive] = best
        return best

    size, script = search(frozenset(range(G.n)))
    return size, list(script)


def construct_worst_case(
    D: DegreeSequence, k: int
) -> tuple[Multigraph, list[int]]:
    """Multigraph with degree sequence D plus a legal deletion script whose
    survivor count is exactly the omega-chain bound.

    Recursion: build a witness for the reduced sequence, append a new
    maximum-degree vertex, and wire it back along the reversed decrement
    schedule, always attaching to the lowest-index vertex of the needed
    degree."""
    if k < 1:
        raise InputError("k must be a positive integer")
    if not D.is_graphical():
        raise InputError("input is not graphical")
    if D.is_trivial(k):
        return realize(D), []
    red = omega(D, k)
    if red.is_trivial(k):
        # every reduction of D is trivial; one deletion finishes the run
        G = realize(D)
        deg = G.degrees()
        v = deg.index(max(deg))
        return G, [v]
    trace = decrement_sequence(D, k)
    sub, sub_script = construct_worst_case(red, k)
    m = trace.m
    n = len(D)
    u = n - 1  # the new maximum-degree vertex
    edges = {key: mult for key, mult in sub.edges}
    deg = sub.degrees() + [0]
    # replay the first m decrements in reverse: at level i the new vertex
    # has degree m - i - 1 and gains an edge to a vertex of degree a_{i+1}-1
    for i in range(m - 1, -1, -1):
        want = trace.a[i] - 1
        target = next(v for v in range(n - 1) if deg[v] == want)
        key = (min(u, target), max(u, target))
        edges[key] = edges.get(key, 0) + 1
        deg[target] += 1
        deg[u] += 1
    G = Multigraph(n, tuple(sorted(edges.items())))
    return G, [u] + sub_script


def random_rewiring(
    G: Multigraph, steps: int, rng: random.Random
) -> Multigraph:
    """Degree-preserving perturbation: repeated 2-edge swaps
    (u,v),(x,y) -> (u,x),(v,y), rejecting swaps that would create loops."""
    slots: list[tuple[int, int]] = []
    for (u, v), m in G.edges:
        slots.extend([(u, v)] * m)
    for _ in range(steps):
        if len(slots) < 2:
            break
        i, j = rng.sample(range(len(slots)), 2)
        u, v = slots[i]
        x, y = slots[j]
        if u == x or v == y:
            continue
        slots[i] = (min(u, x), max(u, x))
        slots[j] = (min(v, y), max(v, y))
    return Multigraph.from_edges(G.n, [(u, v, 1) for u, v in slots])
