"""Dyck paths for elements of C_2 wr S_n bi-avoiding (1-2,0 0) and (1-2,0 1).

Such an element has a 123-avoiding underlying permutation.  Cutting sigma
into reverse irreducible blocks, every element of a block of size >= 2 has
a forced color (left-to-right minima 1, right-to-left maxima 0) while the
color of a singleton block is free.

The lattice path lives on the matrix diagram of sigma (dot of column i at
height sigma_i - 1/2).  It starts at (0, n+1), takes one down step onto the
block staircase, crosses every block from its top-left to its bottom-right
corner, and ends with one right step into (n+1, 0).  Inside a block of size
>= 2 the path runs just below the left-to-right minima; a singleton of
color 0 is passed down-then-right, one of color 1 right-then-down, and only
the latter touches the line y = -x + n + 1.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Sequence

from .closed_forms import catalan
from .core import ColoredPermutation, InvalidInput, patterns
from .enumeration import DEFAULT_BUDGET, EnumSpec, avoiders

DOWN = "D"
RIGHT = "R"
UP = "U"

CAT_SET = patterns("1-2/0,0", "1-2/0,1")
FREE = None


@dataclass(frozen=True)
class BlockDecomposition:
    """Half-open 0-based column intervals [start, stop) of the blocks."""

    blocks: tuple[tuple[int, int], ...]

    @property
    def singletons(self) -> tuple[bool, ...]:
        return tuple(stop - start == 1 for start, stop in self.blocks)

    def block_of(self, i: int) -> tuple[int, int]:
        for b in self.blocks:
            if b[0] <= i < b[1]:
                return b
        raise IndexError(i)

    def __len__(self) -> int:
        return len(self.blocks)


def reverse_irreducible_blocks(perm: Sequence[int]) -> BlockDecomposition:
    """Split ``perm`` into minimal factors with larger entries left, smaller right.

    A cut after column c is legal exactly when the first c entries are the c
    largest values, i.e. their minimum is n - c + 1.
    """
    n = len(perm)
    blocks = []
    start = 0
    lo = n + 1
    for c, v in enumerate(perm, start=1):
        lo = min(lo, v)
        if lo == n - c + 1:
            blocks.append((start, c))
            start = c
    return BlockDecomposition(tuple(blocks))


def _contains_123(perm: Sequence[int]) -> bool:
    # smallest entry seen so far; an entry with a smaller value to its left
    # that is itself below some later entry closes a 1-2-3
    lo = None
    mid = None
    for v in perm:
        if mid is not None and v > mid:
            return True
        if lo is not None and v > lo:
            mid = v if mid is None else min(mid, v)
        lo = v if lo is None else min(lo, v)
    return False


def forced_colors(perm: Sequence[int]) -> tuple[int | None, ...]:
    """Per-position colors forced by bi-avoidance; ``None`` marks a free singleton."""
    perm = tuple(perm)
    if _contains_123(perm):
        raise InvalidInput(f"{list(perm)} contains 1-2-3, so no coloring bi-avoids the set")
    out: list[int | None] = []
    decomposition = reverse_irreducible_blocks(perm)
    for (start, stop), single in zip(decomposition.blocks, decomposition.singletons):
        if single:
            out.append(FREE)
            continue
        lo = perm[start] + 1
        for i in range(start, stop):
            if perm[i] < lo:
                out.append(1)
                lo = perm[i]
            else:
                out.append(0)
    return tuple(out)


def completions(perm: Sequence[int]) -> Iterator[ColoredPermutation]:
    """Every coloring of ``perm`` compatible with :func:`forced_colors`."""
    forced = forced_colors(perm)
    free = [i for i, c in enumerate(forced) if c is FREE]
    for mask in range(1 << len(free)):
        colors = list(forced)
        for b, i in enumerate(free):
            colors[i] = (mask >> b) & 1
        yield ColoredPermutation(tuple(perm), tuple(colors), 2)


@dataclass(frozen=True)
class LatticePath:
    """Steps D = (0,-1) and R = (1,0) from (0, n+1) to (n+1, 0)."""

    steps: str

    @property
    def n(self) -> int:
        return len(self.steps) // 2 - 1

    def points(self) -> list[tuple[int, int]]:
        x, y = 0, self.n + 1
        pts = [(x, y)]
        for s in self.steps:
            if s == DOWN:
                y -= 1
            else:
                x += 1
            pts.append((x, y))
        return pts

    def validate(self) -> None:
        n = self.n
        if set(self.steps) - {DOWN, RIGHT}:
            raise InvalidInput(f"lattice path steps must be D/R: {self.steps!r}")
        if self.steps.count(DOWN) != n + 1 or self.steps.count(RIGHT) != n + 1:
            raise InvalidInput(f"path {self.steps!r} does not end at ({n + 1}, 0)")
        for x, y in self.points():
            if y > -x + n + 1:
                raise InvalidInput(f"path {self.steps!r} rises above y = -x + {n + 1} at ({x}, {y})")

    def interior_touches(self) -> list[tuple[int, int]]:
        """Points strictly between the endpoints lying on y = -x + n + 1."""
        pts = self.points()[1:-1]
        return [(x, y) for x, y in pts if x + y == self.n + 1]

    def __str__(self) -> str:
        return self.steps


@dataclass(frozen=True)
class DyckPath:
    steps: str

    @property
    def semilength(self) -> int:
        return len(self.steps) // 2

    def heights(self) -> list[int]:
        h = [0]
        for s in self.steps:
            h.append(h[-1] + (1 if s == UP else -1))
        return h

    def is_valid(self) -> bool:
        if set(self.steps) - {UP, DOWN} or len(self.steps) % 2:
            return False
        hs = self.heights()
        return min(hs) >= 0 and hs[-1] == 0

    def __str__(self) -> str:
        return self.steps


def _check_avoider(g: ColoredPermutation) -> None:
    if g.k != 2:
        raise InvalidInput(f"the construction needs k = 2, got k = {g.k}")
    forced = forced_colors(g.perm)
    for i, (want, got) in enumerate(zip(forced, g.colors), start=1):
        if want is not FREE and want != got:
            bad = "(1-2,0 0)" if got == 0 else "(1-2,0 1)"
            raise InvalidInput(
                f"{g} bi-contains {bad}: position {i} must have color {want}"
            )


def to_lattice_path(g: ColoredPermutation) -> LatticePath:
    """Run the block-by-block construction on a bi-avoider of CAT_SET."""
    _check_avoider(g)
    perm = g.perm
    n = len(perm)
    steps = [DOWN]
    y = n
    d = reverse_irreducible_blocks(perm)
    for (start, stop), single in zip(d.blocks, d.singletons):
        if single:
            steps.extend("DR" if g.colors[start] == 0 else "RD")
            y -= 1
            continue
        lo = n + 1
        for i in range(start, stop):
            lo = min(lo, perm[i])
            target = lo - 1
            steps.extend(DOWN * (y - target))
            y = target
            steps.append(RIGHT)
    steps.append(RIGHT)
    path = LatticePath("".join(steps))
    path.validate()
    return path


def to_dyck(path: LatticePath) -> DyckPath:
    """Reflect in y = -x + n + 1 and rotate: a down step becomes U, a right step D."""
    path.validate()
    return DyckPath("".join(UP if s == DOWN else DOWN for s in path.steps))


def to_dyck_path(g: ColoredPermutation) -> DyckPath:
    return to_dyck(to_lattice_path(g))


@dataclass
class CertifyReport:
    n: int
    avoiders: int = 0
    valid: int = 0
    distinct: int = 0
    expected: int = 0
    counterexample: str | None = None

    @property
    def passed(self) -> bool:
        return (
            self.counterexample is None
            and self.avoiders == self.expected
            and self.valid == self.avoiders
            and self.distinct == self.avoiders
        )

    def as_dict(self) -> dict:
        return {
            "n": self.n,
            "avoiders": self.avoiders,
            "valid_paths": self.valid,
            "distinct_paths": self.distinct,
            "catalan": self.expected,
            "passed": self.passed,
            "counterexample": self.counterexample,
        }


def certify_bijection(n: int, budget: int = DEFAULT_BUDGET) -> CertifyReport:
    """Map every bi-avoider of size n and check validity, injectivity and cardinality."""
    report = CertifyReport(n, expected=catalan(n + 1))
    seen: dict[str, ColoredPermutation] = {}
    for g in avoiders(EnumSpec(n, 2, budget), CAT_SET):
        report.avoiders += 1
        try:
            dyck = to_dyck_path(g)
        except InvalidInput as exc:
            report.counterexample = report.counterexample or f"{g}: {exc}"
            continue
        if dyck.is_valid() and dyck.semilength == n + 1:
            report.valid += 1
        elif report.counterexample is None:
            report.counterexample = f"{g}: invalid image {dyck}"
        if dyck.steps in seen and report.counterexample is None:
            report.counterexample = f"{g} and {seen[dyck.steps]} share image {dyck}"
        seen.setdefault(dyck.steps, g)
    report.distinct = len(seen)
    return report


def matrix_diagram(g: ColoredPermutation, path: LatticePath | None = None) -> str:
    """ASCII matrix of sigma with block outlines; dots show their colors.

    Rows run from value n at the top down to 1, each dot printed as its
    color digit.  Block squares are outlined with ``+``, ``-`` and ``|``.
    """
    n = len(g)
    d = reverse_irreducible_blocks(g.perm)
    # character canvas: lattice point (x, y) sits at column 2x, row 2(n - y)
    width, height = 2 * n + 1, 2 * n + 1
    canvas = [[" "] * width for _ in range(height)]

    def put(x2: int, y2: int, ch: str) -> None:
        r, c = 2 * n - y2, x2
        if 0 <= r < height and 0 <= c < width:
            canvas[r][c] = ch

    for start, stop in d.blocks:
        top = max(g.perm[start:stop])
        bottom = min(g.perm[start:stop]) - 1
        for x2 in range(2 * start, 2 * stop + 1):
            put(x2, 2 * top, "-")
            put(x2, 2 * bottom, "-")
        for y2 in range(2 * bottom, 2 * top + 1):
            put(2 * start, y2, "|")
            put(2 * stop, y2, "|")
        for x2, y2 in ((2 * start, 2 * top), (2 * stop, 2 * top), (2 * start, 2 * bottom), (2 * stop, 2 * bottom)):
            put(x2, y2, "+")
    for i, v in enumerate(g.perm):
        put(2 * i + 1, 2 * v - 1, str(g.colors[i]))
    lines = ["".join(row).rstrip() for row in canvas]
    if path is not None:
        lines.append(f"path {path.steps}  dyck {to_dyck(path).steps}")
    return "\n".join(lines)
