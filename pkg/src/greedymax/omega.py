"""The canonical worst-case reduction operator and the bound b_k(D).

Given a nontrivial degree sequence D, drop one copy of its maximum m and
run the deterministic decrement schedule: take a unit off the current
maximum while it exceeds k, otherwise off the smallest positive element.
The state after m decrements is the reduced sequence; iterating until the
result is trivial yields the tight worst-case size b_k(D) of a greedy
k-independent set.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import InputError
from .multiset import DegreeSequence


class _DecrementState:
    """Mutable multiset supporting the decrement schedule in O(1) amortized.

    Multiplicities live in an array indexed by value; the maximum pointer
    only moves down and the smallest-positive pointer is repaired by short
    scans, so a run of s decrements costs O(s + max)."""

    def __init__(self, D: DegreeSequence):
        top = D.max_value if len(D) else 0
        self.mult = [0] * (top + 1)
        for v, m in D.items:
            self.mult[v] = m
        self.cur_max = top
        self._fix_max()
        self.cur_min = 1
        self._fix_min()

    def _fix_max(self) -> None:
        while self.cur_max > 0 and self.mult[self.cur_max] == 0:
            self.cur_max -= 1

    def _fix_min(self) -> None:
        while self.cur_min <= self.cur_max and self.mult[self.cur_min] == 0:
            self.cur_min += 1

    def max_value(self) -> int:
        return self.cur_max

    def decrement_once(self, k: int) -> int:
        """Apply one scheduled decrement; returns the value decremented."""
        if self.cur_max > k:
            x = self.cur_max
        else:
            if self.cur_min > self.cur_max:
                raise InputError("no positive element")
            x = self.cur_min
        self.mult[x] -= 1
        self.mult[x - 1] += 1
        self._fix_max()
        if x - 1 >= 1:
            self.cur_min = min(self.cur_min, x - 1)
        self._fix_min()
        return x

    def snapshot(self) -> DegreeSequence:
        return DegreeSequence.from_counts(
            {v: m for v, m in enumerate(self.mult) if m}
        )


@dataclass(frozen=True)
class DecrementTrace:
    """Full record of one reduction: schedule, intermediates, and the result."""

    k: int
    input: DegreeSequence
    m: int
    a0: DegreeSequence
    s: int
    a: tuple[int, ...]
    omega: DegreeSequence
    degenerate: bool
    intermediates: tuple[DegreeSequence, ...] = ()

    def to_json(self) -> dict:
        return {
            "k": self.k,
            "input": self.input.values(),
            "m": self.m,
            "s": self.s,
            "a": list(self.a),
            "omega": self.omega.values(),
            "degenerate": self.degenerate,
        }


@dataclass(frozen=True)
class BTrace:
    """Iteration chain D, O(D), O^2(D), ... down to the first trivial term."""

    k: int
    chain: tuple[DegreeSequence, ...]
    p: int
    b: int
    steps: tuple[DecrementTrace, ...] = field(default=(), repr=False)

    def to_json(self) -> dict:
        return {
            "k": self.k,
            "b": self.b,
            "p": self.p,
            "chain": [D.values() for D in self.chain],
        }


def _zeros(n: int) -> DegreeSequence:
    return DegreeSequence.from_counts({0: n}) if n else DegreeSequence(())


def _is_degenerate(D: DegreeSequence, a0: DegreeSequence, k: int) -> bool:
    m = D.max_value
    return a0.total < m + 2 * k or len(a0) == 0 or a0.max_value < k


def omega(D: DegreeSequence, k: int) -> DegreeSequence:
    """One application of the reduction operator (order drops by one)."""
    if k < 1:
        raise InputError("k must be a positive integer")
    if len(D) == 0:
        raise InputError("cannot reduce the empty sequence")
    if not D.is_graphical():
        raise InputError("input is not graphical")
    m = D.max_value
    a0 = D.without_one(m)
    if _is_degenerate(D, a0, k):
        return _zeros(len(D) - 1)
    state = _DecrementState(a0)
    for _ in range(m):
        state.decrement_once(k)
    return state.snapshot()


def decrement_sequence(
    D: DegreeSequence, k: int, keep_intermediates: bool = False
) -> DecrementTrace:
    """The full decrement schedule (a_1, ..., a_s) of D, with s = sum(A_0).

    In the degenerate branch (reduction forced to all zeros) the schedule
    is unused and returned empty."""
    if k < 1:
        raise InputError("k must be a positive integer")
    if len(D) == 0:
        raise InputError("cannot reduce the empty sequence")
    if not D.is_graphical():
        raise InputError("input is not graphical")
    if D.is_trivial(k):
        raise InputError("input is trivial")
    m = D.max_value
    a0 = D.without_one(m)
    if _is_degenerate(D, a0, k):
        return DecrementTrace(
            k=k, input=D, m=m, a0=a0, s=a0.total, a=(),
            omega=_zeros(len(D) - 1), degenerate=True,
        )
    state = _DecrementState(a0)
    s = a0.total
    a: list[int] = []
    inter: list[DegreeSequence] = [a0] if keep_intermediates else []
    result = None
    for i in range(1, s + 1):
        a.append(state.decrement_once(k))
        if keep_intermediates:
            inter.append(state.snapshot())
        if i == m:
            result = state.snapshot()
    assert result is not None  # s >= m + 2k > m in the non-degenerate branch
    return DecrementTrace(
        k=k, input=D, m=m, a0=a0, s=s, a=tuple(a),
        omega=result, degenerate=False, intermediates=tuple(inter),
    )


def b(D: DegreeSequence, k: int, keep_steps: bool = False) -> BTrace:
    """Worst-case greedy k-independent set size over realizations of D.

    Runs the reduction chain until the first trivial term; only the first
    max(D) decrements are performed per application, so the whole chain
    costs O(sum(D) + n)."""
    if k < 1:
        raise InputError("k must be a positive integer")
    if not D.is_graphical():
        raise InputError("input is not graphical")
    chain = [D]
    steps: list[DecrementTrace] = []
    cur = D
    while not cur.is_trivial(k):
        if keep_steps:
            steps.append(decrement_sequence(cur, k))
        cur = omega(cur, k)
        chain.append(cur)
    p = len(chain) - 1
    return BTrace(k=k, chain=tuple(chain), p=p, b=len(D) - p, steps=tuple(steps))
