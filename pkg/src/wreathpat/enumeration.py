"""Exhaustive enumeration of C_k wr S_n: the brute-force oracle.

Avoider counts use a depth-first search that grows (sigma, w) one position
at a time and abandons a prefix as soon as it contains an occurrence ending
at its last position.  Occurrences only ever involve the relative order of
entries already placed, so a pruned prefix can never be completed into an
avoider and the count stays exact.
"""
from __future__ import annotations

import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from itertools import permutations, product
from typing import Iterable, Iterator

from .core import (
    ADJACENT,
    EXACT,
    ColoredPattern,
    ColoredPermutation,
    InvalidInput,
    PatternSet,
    occurrences,
    reduce_perm,
    reduce_word,
)

DEFAULT_BUDGET = 10**8


class BudgetExceeded(RuntimeError):
    """Raised when k^n * n! exceeds the enumeration budget."""

    def __init__(self, n: int, k: int, budget: int):
        self.n, self.k, self.budget = n, k, budget
        self.required = k**n * math.factorial(n)
        super().__init__(
            f"C_{k} wr S_{n} has {self.required} elements, above the budget of "
            f"{budget}; raise --budget to at least {self.required}"
        )


@dataclass(frozen=True)
class EnumSpec:
    n: int
    k: int
    budget: int = DEFAULT_BUDGET

    def __post_init__(self) -> None:
        if self.n < 0 or self.k < 1:
            raise InvalidInput(f"need n >= 0 and k >= 1, got n={self.n}, k={self.k}")

    @property
    def size(self) -> int:
        return self.k**self.n * math.factorial(self.n)

    def check(self) -> None:
        if self.size > self.budget:
            raise BudgetExceeded(self.n, self.k, self.budget)


def generate_all(spec: EnumSpec) -> Iterator[ColoredPermutation]:
    """Yield every element once, lexicographically in (sigma, w)."""
    spec.check()
    n, k = spec.n, spec.k
    words = list(product(range(k), repeat=n))
    for perm in permutations(range(1, n + 1)):
        for w in words:
            yield ColoredPermutation(perm, w, k)


# -- incremental containment -------------------------------------------------

def _tuples_ending_at(p: ColoredPattern, last: int) -> Iterator[tuple[int, ...]]:
    """Index tuples of length len(p) whose final index is ``last``."""
    j = len(p)

    def back(suffix: list[int]) -> Iterator[tuple[int, ...]]:
        if len(suffix) == j:
            yield tuple(reversed(suffix))
            return
        first = suffix[-1]
        if p.gaps[j - len(suffix) - 1] == ADJACENT:
            candidates: Iterable[int] = (first - 1,) if first >= 1 else ()
        else:
            candidates = range(first - 1, -1, -1)
        for c in candidates:
            suffix.append(c)
            yield from back(suffix)
            suffix.pop()

    yield from back([last])


def _general_check(p: ColoredPattern):
    exact = p.mode == EXACT

    def check(perm: list[int], colors: list[int]) -> bool:
        if len(p) > len(perm):
            return False
        for idx in _tuples_ending_at(p, len(perm) - 1):
            if exact:
                if any(colors[i] != c for i, c in zip(idx, p.u)):
                    continue
            elif reduce_word([colors[i] for i in idx]) != p.u:
                continue
            if reduce_perm([perm[i] for i in idx]) == p.tau:
                return True
        return False

    return check


def _pair_check(p: ColoredPattern):
    """Specialised test for length-2 patterns, the bulk of the workload."""
    ascent = p.tau == (1, 2)
    adjacent = p.gaps[0] == ADJACENT
    u0, u1 = p.u
    if p.mode == EXACT:
        def color_ok(a: int, b: int) -> bool:
            return a == u0 and b == u1
    elif u0 == u1:
        def color_ok(a: int, b: int) -> bool:
            return a == b
    elif u0 < u1:
        def color_ok(a: int, b: int) -> bool:
            return a < b
    else:
        def color_ok(a: int, b: int) -> bool:
            return a > b

    def check(perm: list[int], colors: list[int]) -> bool:
        m = len(perm) - 1
        if m < 1:
            return False
        v, c = perm[m], colors[m]
        lo = m - 1 if adjacent else 0
        for i in range(lo, m):
            if (perm[i] < v) == ascent and color_ok(colors[i], c):
                return True
        return False

    return check


def _sign(a: int, b: int) -> int:
    return (a > b) - (a < b)


def _dashed_check(p: ColoredPattern):
    """All-dash patterns of any length, via pairwise order comparisons.

    Two sequences reduce to the same word exactly when every pair of letters
    compares the same way, so candidates are filtered against the last
    position first and then extended left to right.
    """
    j = len(p)
    exact = p.mode == EXACT
    tau, u = p.tau, p.u

    def fits(a: int, b: int, x: int, y: int, perm, colors) -> bool:
        # pattern letters a < b sit on host positions x < y
        if (perm[x] < perm[y]) != (tau[a] < tau[b]):
            return False
        if exact:
            return colors[x] == u[a] and colors[y] == u[b]
        return _sign(colors[x], colors[y]) == _sign(u[a], u[b])

    def check(perm: list[int], colors: list[int]) -> bool:
        m = len(perm) - 1
        if m + 1 < j:
            return False
        if exact and colors[m] != u[-1]:
            return False
        chosen: list[int] = []

        def extend(a: int, start: int) -> bool:
            if a == j - 1:
                return True
            for x in range(start, m - (j - 2 - a)):
                if not fits(a, j - 1, x, m, perm, colors):
                    continue
                if all(fits(b, a, chosen[b], x, perm, colors) for b in range(a)):
                    chosen.append(x)
                    if extend(a + 1, x + 1):
                        return True
                    chosen.pop()
            return False

        return extend(0, 0)

    return check


def _compile(patterns: Iterable[ColoredPattern]) -> tuple:
    checks = []
    for p in patterns:
        if len(p) == 2:
            checks.append(_pair_check(p))
        elif p.all_dash:
            checks.append(_dashed_check(p))
        else:
            checks.append(_general_check(p))
    return tuple(checks)


def _ends_with_occurrence(checks: tuple, perm: list[int], colors: list[int]) -> bool:
    """Does some pattern occur in the prefix using its last position?"""
    for check in checks:
        if check(perm, colors):
            return True
    return False


def _count_from(n: int, k: int, pats: tuple, perm: list[int], colors: list[int], used: list[bool]) -> int:
    if len(perm) == n:
        return 1
    total = 0
    for v in range(1, n + 1):
        if used[v]:
            continue
        used[v] = True
        perm.append(v)
        for c in range(k):
            colors.append(c)
            if not _ends_with_occurrence(pats, perm, colors):
                total += _count_from(n, k, pats, perm, colors, used)
            colors.pop()
        perm.pop()
        used[v] = False
    return total


def _count_with_first(args: tuple[int, int, tuple[ColoredPattern, ...], int]) -> int:
    n, k, pats, first = args
    pats = _compile(pats)
    used = [False] * (n + 1)
    used[first] = True
    total = 0
    for c in range(k):
        perm, colors = [first], [c]
        if not _ends_with_occurrence(pats, perm, colors):
            total += _count_from(n, k, pats, perm, colors, used)
    return total


def count_avoiders(spec: EnumSpec, S: PatternSet | Iterable[ColoredPattern], jobs: int = 1) -> int:
    """Exact number of elements of C_k wr S_n avoiding every pattern in ``S``.

    With ``jobs > 1`` the search is split by the first entry of sigma and the
    partial counts are summed; the result is identical to the serial run.
    """
    spec.check()
    pats = tuple(S)
    n, k = spec.n, spec.k
    if n == 0:
        return 1
    tasks = [(n, k, pats, first) for first in range(1, n + 1)]
    if jobs > 1 and n > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            return sum(pool.map(_count_with_first, tasks))
    return sum(_count_with_first(t) for t in tasks)


def avoiders(spec: EnumSpec, S: PatternSet | Iterable[ColoredPattern]) -> Iterator[ColoredPermutation]:
    """Yield the avoiders of ``S`` found by the pruned search."""
    spec.check()
    pats = _compile(S)
    n, k = spec.n, spec.k
    perm: list[int] = []
    colors: list[int] = []
    used = [False] * (n + 1)

    def walk() -> Iterator[ColoredPermutation]:
        if len(perm) == n:
            yield ColoredPermutation(tuple(perm), tuple(colors), k)
            return
        for v in range(1, n + 1):
            if used[v]:
                continue
            used[v] = True
            perm.append(v)
            for c in range(k):
                colors.append(c)
                if not _ends_with_occurrence(pats, perm, colors):
                    yield from walk()
                colors.pop()
            perm.pop()
            used[v] = False

    yield from walk()


class CountTable(dict):
    """Map from a statistic value j to the number of elements attaining it."""

    def total(self) -> int:
        return sum(self.values())

    def as_list(self) -> list[int]:
        top = max(self, default=-1)
        return [self.get(j, 0) for j in range(top + 1)]


def _distribution_with_first(args: tuple[int, int, ColoredPattern, int]) -> dict[int, int]:
    n, k, p, first = args
    out: dict[int, int] = {}
    words = list(product(range(k), repeat=n))
    rest = [v for v in range(1, n + 1) if v != first]
    for tail in permutations(rest):
        perm = (first,) + tail
        for w in words:
            j = len(occurrences(p, ColoredPermutation(perm, w, k)))
            out[j] = out.get(j, 0) + 1
    return out


def distribution(spec: EnumSpec, p: ColoredPattern, jobs: int = 1) -> CountTable:
    """Number of elements with exactly j occurrences of ``p``, for every j."""
    spec.check()
    n, k = spec.n, spec.k
    if n == 0:
        return CountTable({0: 1})
    tasks = [(n, k, p, first) for first in range(1, n + 1)]
    if jobs > 1 and n > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            parts = list(pool.map(_distribution_with_first, tasks))
    else:
        parts = [_distribution_with_first(t) for t in tasks]
    table = CountTable()
    for part in parts:
        for j, c in part.items():
            table[j] = table.get(j, 0) + c
    return CountTable(sorted(table.items()))


@dataclass
class SequenceResult:
    """Avoider counts for n = 1..n_max, possibly cut short by the budget."""

    values: list[int]
    n_max: int
    truncated_at: int | None = None

    @property
    def truncated(self) -> bool:
        return self.truncated_at is not None


def sequence(k: int, S: PatternSet | Iterable[ColoredPattern], n_max: int,
             budget: int = DEFAULT_BUDGET, jobs: int = 1) -> SequenceResult:
    """[count_avoiders(n, k, S) for n = 1..n_max], stopping at the first n over budget."""
    pats = tuple(S)
    values: list[int] = []
    for n in range(1, n_max + 1):
        spec = EnumSpec(n, k, budget)
        if spec.size > budget:
            return SequenceResult(values, n_max, truncated_at=n)
        values.append(count_avoiders(spec, pats, jobs=jobs))
    return SequenceResult(values, n_max)
