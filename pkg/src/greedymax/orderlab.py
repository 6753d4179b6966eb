"""Elementary rewriting steps on degree sequences and the induced order.

An addition step raises two elements by one (sum +2); a transfer step
moves a unit from one element to another subject to a side condition on
k.  D precedes E when D is reachable from E by such steps; reachability
is decided here by plain breadth-first search, which is exponential and
guarded accordingly -- these routines are verification oracles for small
instances, not production decision procedures.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterator, Literal

from .errors import InputError, LimitError
from .multiset import DegreeSequence
from .omega import omega

PRECEDES_MAX_ORDER = 7
PRECEDES_MAX_SUM = 26


@dataclass(frozen=True)
class ElementaryStep:
    kind: Literal["addition", "transfer"]
    x: int
    y: int


def apply_decrement(E: DegreeSequence, x: int) -> DegreeSequence:
    """Replace one copy of x by x - 1 (x must be a positive element of E)."""
    if x <= 0:
        raise InputError("decrement value must be positive")
    if x not in E:
        raise InputError(f"value {x} not in multiset")
    return E.without_one(x).with_one(x - 1)


def apply_increment(E: DegreeSequence, x: int) -> DegreeSequence:
    """Replace one copy of x by x + 1 (x must be an element of E; 0 allowed
    when the increment occurs inside an elementary step)."""
    if x < 0:
        raise InputError("increment value must be nonnegative")
    if x not in E:
        raise InputError(f"value {x} not in multiset")
    return E.without_one(x).with_one(x + 1)


def addition_step(E: DegreeSequence, x: int, y: int) -> DegreeSequence:
    """(x,y)-addition: an (x-1)-increment then a (y-1)-increment,
    requiring x <= y <= max(E) + 1."""
    if x < 1 or y < 1:
        raise InputError("step parameters must be positive")
    if len(E) == 0:
        raise InputError("cannot apply a step to the empty multiset")
    if not (x <= y <= E.max_value + 1):
        raise InputError(f"addition step needs x <= y <= max+1, got ({x},{y})")
    if (x - 1) not in E:
        raise InputError(f"no element {x - 1} to raise")
    mid = apply_increment(E, x - 1)
    if (y - 1) not in mid:
        raise InputError(f"no element {y - 1} to raise after first increment")
    return apply_increment(mid, y - 1)


def transfer_step(E: DegreeSequence, x: int, y: int, k: int) -> DegreeSequence:
    """(x,y)-transfer: an x-decrement then a (y-1)-increment, requiring
    x > max(k,y) or x < y <= k."""
    if k < 1:
        raise InputError("k must be a positive integer")
    if x < 1 or y < 1:
        raise InputError("step parameters must be positive")
    if not (x > max(k, y) or (x < y <= k)):
        raise InputError(
            f"transfer step needs x > max(k,y) or x < y <= k, got ({x},{y}), k={k}"
        )
    if x not in E:
        raise InputError(f"no element {x} to lower")
    mid = apply_decrement(E, x)
    if (y - 1) not in mid:
        raise InputError(f"no element {y - 1} to raise after decrement")
    return apply_increment(mid, y - 1)


def applicable_steps(
    E: DegreeSequence, k: int
) -> Iterator[tuple[ElementaryStep, DegreeSequence]]:
    """All elementary steps applicable to E, with their results."""
    if len(E) == 0:
        return
    top = E.max_value
    # addition steps: x-1 must be present; y up to max(E)+1
    for x_src, _ in E.items:
        x = x_src + 1
        mid = apply_increment(E, x - 1)
        for y_src, _ in mid.items:
            y = y_src + 1
            if x <= y <= top + 1:
                yield ElementaryStep("addition", x, y), apply_increment(mid, y - 1)
    # transfer steps: x present and positive
    for x, _ in E.items:
        if x == 0:
            continue
        mid = apply_decrement(E, x)
        for y_src, _ in mid.items:
            y = y_src + 1
            if x > max(k, y) or (x < y <= k):
                yield ElementaryStep("transfer", x, y), apply_increment(mid, y - 1)


def precedes(
    D: DegreeSequence,
    E: DegreeSequence,
    k: int,
    max_order: int = PRECEDES_MAX_ORDER,
    max_sum: int = PRECEDES_MAX_SUM,
) -> bool:
    """Decide reachability of D from E by elementary steps (BFS oracle).

    Exponential in general; refuses instances beyond the declared guards."""
    if len(D) != len(E):
        raise InputError("orders differ")
    if len(D) > max_order or D.total > max_sum:
        raise LimitError(
            f"instance exceeds guards (order <= {max_order}, sum <= {max_sum})"
        )
    if D == E:
        return True
    # additions add 2 to the sum, transfers preserve it
    if D.total < E.total or (D.total - E.total) % 2 != 0:
        return False
    target_sum = D.total
    max_elem = (E.max_value if len(E) else 0) + (target_sum - E.total) // 2
    start = tuple(E.values())
    goal = tuple(D.values())
    seen = {start}
    queue = deque([E])
    while queue:
        cur = queue.popleft()
        for _, nxt in applicable_steps(cur, k):
            if nxt.total > target_sum or nxt.max_value > max_elem:
                continue
            key = tuple(nxt.values())
            if key in seen:
                continue
            if key == goal:
                return True
            seen.add(key)
            queue.append(nxt)
    return False


def pseudo_reductions(E: DegreeSequence, k: int) -> list[DegreeSequence]:
    """All graphical sequences of order n-1 with the sum of a reduction of E
    and conjugate profile dominated by that of E minus one maximum.

    Every true reduction of E appears here, so the list is a sound superset
    for testing reduction claims."""
    if k < 1:
        raise InputError("k must be a positive integer")
    if not E.is_graphical():
        raise InputError("input is not graphical")
    if E.is_trivial(k):
        raise InputError("input is trivial")
    m = E.max_value
    a0 = E.without_one(m)
    target = a0.total - m
    if target < 0:
        return []
    sig0 = a0.sigma()
    n_out = len(E) - 1
    results: list[DegreeSequence] = []
    profile: list[int] = []

    def extend(z: int, remaining: int, prev: int) -> None:
        if remaining == 0:
            counts: dict[int, int] = {}
            full = [n_out] + profile
            for i in range(len(full)):
                nxt = full[i + 1] if i + 1 < len(full) else 0
                if full[i] - nxt:
                    counts[i] = full[i] - nxt
            cand = DegreeSequence.from_counts(counts)
            if cand.is_graphical():
                results.append(cand)
            return
        cap = min(prev, sig0(z), remaining)
        for col in range(cap, 0, -1):
            # columns are nonincreasing, so at most `col` per later column:
            # unbounded depth is fine because col >= 1 shrinks `remaining`
            profile.append(col)
            extend(z + 1, remaining - col, col)
            profile.pop()

    extend(1, target, n_out)
    return results


def one_step_results(E: DegreeSequence, k: int) -> set[DegreeSequence]:
    """Distinct multisets one elementary step from E."""
    return {out for _, out in applicable_steps(E, k)}


def omega_one_step_below(D: DegreeSequence, E: DegreeSequence, k: int) -> bool:
    """Check the refinement: omega(D) equals omega(E) or is one step from it."""
    od, oe = omega(D, k), omega(E, k)
    if od == oe:
        return True
    return od in one_step_results(oe, k)
