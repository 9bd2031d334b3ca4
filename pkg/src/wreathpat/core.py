"""Colored permutations, colored patterns and the occurrence engine.

An element of C_k wr S_n is stored as a permutation of 1..n plus a word of
color exponents in 0..k-1.  Patterns carry a per-gap adjacency flag so that
the same matcher handles dashed (occurrence) and undashed (match) patterns,
and a mode choosing between exact color agreement and reduced color words.
"""
from __future__ import annotations

import re
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Iterator, Sequence

EXACT = "exact"
REDUCED = "reduced"
MODES = (EXACT, REDUCED)

DASH = "dash"
ADJACENT = "adjacent"


class InvalidInput(ValueError):
    """Raised when an argument violates a documented precondition."""


def reduce_perm(seq: Sequence[int]) -> tuple[int, ...]:
    """Replace the i-th smallest entry of ``seq`` by i.

    >>> reduce_perm([2, 7, 5, 4])
    (1, 4, 3, 2)
    """
    if len(set(seq)) != len(seq):
        raise InvalidInput(f"entries must be pairwise distinct: {list(seq)}")
    rank = {v: i for i, v in enumerate(sorted(seq), start=1)}
    return tuple(rank[v] for v in seq)


def reduce_word(w: Sequence[int]) -> tuple[int, ...]:
    """Replace the i-th smallest distinct letter of ``w`` by i - 1.

    >>> reduce_word([2, 7, 2, 4, 7])
    (0, 2, 0, 1, 2)
    """
    rank = {v: i for i, v in enumerate(sorted(set(w)))}
    return tuple(rank[v] for v in w)


@dataclass(frozen=True)
class ColoredPermutation:
    perm: tuple[int, ...]
    colors: tuple[int, ...]
    k: int

    def __post_init__(self) -> None:
        object.__setattr__(self, "perm", tuple(self.perm))
        object.__setattr__(self, "colors", tuple(self.colors))
        if self.k < 1:
            raise InvalidInput(f"k must be >= 1, got {self.k}")
        if len(self.perm) != len(self.colors):
            raise InvalidInput("permutation and color word differ in length")
        if sorted(self.perm) != list(range(1, len(self.perm) + 1)):
            raise InvalidInput(f"not a permutation of 1..n: {list(self.perm)}")
        if any(not 0 <= c < self.k for c in self.colors):
            raise InvalidInput(f"colors must lie in 0..{self.k - 1}: {list(self.colors)}")

    def __len__(self) -> int:
        return len(self.perm)

    def encode(self) -> str:
        return f"sigma={_join(self.perm)} colors={_join(self.colors)} k={self.k}"

    def __str__(self) -> str:
        return f"({' '.join(map(str, self.perm))}, {' '.join(map(str, self.colors))})"


@dataclass(frozen=True)
class ColoredPattern:
    """A pattern (tau, u) with adjacency flags between consecutive letters.

    ``gaps[p]`` constrains letters p and p+1: ``DASH`` allows any distance,
    ``ADJACENT`` forces them onto neighbouring positions of the host.
    """

    tau: tuple[int, ...]
    u: tuple[int, ...]
    gaps: tuple[str, ...] = field(default=())
    mode: str = REDUCED

    def __post_init__(self) -> None:
        object.__setattr__(self, "tau", tuple(self.tau))
        object.__setattr__(self, "u", tuple(self.u))
        j = len(self.tau)
        gaps = tuple(self.gaps) if self.gaps else (DASH,) * max(j - 1, 0)
        object.__setattr__(self, "gaps", gaps)
        if j < 1:
            raise InvalidInput("patterns must have length >= 1")
        if sorted(self.tau) != list(range(1, j + 1)):
            raise InvalidInput(f"tau is not a permutation: {list(self.tau)}")
        if len(self.u) != j or len(gaps) != j - 1:
            raise InvalidInput("tau, u and gaps have inconsistent lengths")
        if any(g not in (DASH, ADJACENT) for g in gaps):
            raise InvalidInput(f"unknown gap flag in {gaps}")
        if self.mode not in MODES:
            raise InvalidInput(f"mode must be one of {MODES}, got {self.mode!r}")
        if any(c < 0 for c in self.u):
            raise InvalidInput("color letters must be non-negative")
        if self.mode == REDUCED and reduce_word(self.u) != self.u:
            raise InvalidInput(f"reduced-mode color word must satisfy red(u) = u: {self.u}")

    def __len__(self) -> int:
        return len(self.tau)

    @property
    def all_adjacent(self) -> bool:
        return all(g == ADJACENT for g in self.gaps)

    @property
    def all_dash(self) -> bool:
        return all(g == DASH for g in self.gaps)

    def encode(self) -> str:
        letters = [str(self.tau[0])]
        for g, t in zip(self.gaps, self.tau[1:]):
            letters.append(("-" if g == DASH else "") + str(t))
        return "".join(letters) + "/" + _join(self.u)

    def __str__(self) -> str:
        body, _, _ = self.encode().partition("/")
        return f"({body},{' '.join(map(str, self.u))})"


@dataclass(frozen=True)
class PatternSet:
    patterns: tuple[ColoredPattern, ...]

    def __post_init__(self) -> None:
        pats = tuple(self.patterns)
        object.__setattr__(self, "patterns", pats)
        if not pats:
            raise InvalidInput("a pattern set must be non-empty")
        if len({p.mode for p in pats}) != 1:
            raise InvalidInput("all patterns in a set must share one mode")

    @property
    def mode(self) -> str:
        return self.patterns[0].mode

    def __iter__(self) -> Iterator[ColoredPattern]:
        return iter(self.patterns)

    def __len__(self) -> int:
        return len(self.patterns)

    def encode(self) -> str:
        return ";".join(p.encode() for p in self.patterns)


def _join(xs: Iterable[int]) -> str:
    return ",".join(str(x) for x in xs)


# -- text encodings ---------------------------------------------------------

_PATTERN_RE = re.compile(r"^\s*(\d(?:-?\d)*)\s*/\s*(\d+(?:\s*,\s*\d+)*)\s*$")


def parse_pattern(text: str, mode: str = REDUCED) -> ColoredPattern:
    """Parse ``"1-2/0,1"`` (dashed) or ``"12/0,1"`` (adjacent) notation."""
    m = _PATTERN_RE.match(text)
    if not m:
        raise InvalidInput(f"cannot parse pattern {text!r}; expected e.g. '1-2/0,1'")
    body, colors = m.groups()
    tau, gaps = [int(body[0])], []
    i = 1
    while i < len(body):
        if body[i] == "-":
            gaps.append(DASH)
            i += 1
        else:
            gaps.append(ADJACENT)
        tau.append(int(body[i]))
        i += 1
    u = [int(c) for c in colors.split(",")]
    return ColoredPattern(tuple(tau), tuple(u), tuple(gaps), mode)


def parse_patterns(text: str, mode: str = REDUCED) -> PatternSet:
    """Parse a semicolon-separated list of pattern encodings."""
    parts = [p for p in text.split(";") if p.strip()]
    return PatternSet(tuple(parse_pattern(p, mode) for p in parts))


def parse_colored_permutation(text: str) -> ColoredPermutation:
    """Parse ``"sigma=1,3,2,4 colors=1,2,2,2 k=3"``; ``k`` defaults to max color + 1."""
    fields: dict[str, str] = {}
    for token in text.split():
        key, sep, value = token.partition("=")
        if not sep:
            raise InvalidInput(f"malformed field {token!r} in {text!r}")
        fields[key.strip()] = value.strip()
    try:
        perm = [int(x) for x in fields["sigma"].split(",") if x]
        colors = [int(x) for x in fields["colors"].split(",") if x]
    except (KeyError, ValueError) as exc:
        raise InvalidInput(f"cannot parse colored permutation {text!r}") from exc
    k = int(fields["k"]) if "k" in fields else max(colors, default=0) + 1
    return ColoredPermutation(tuple(perm), tuple(colors), k)


def pattern(text: str, mode: str = REDUCED) -> ColoredPattern:
    return parse_pattern(text, mode)


def patterns(*texts: str, mode: str = REDUCED) -> PatternSet:
    return PatternSet(tuple(parse_pattern(t, mode) for t in texts))


# -- matching ---------------------------------------------------------------

def _colors_fit(p: ColoredPattern, sub: Sequence[int]) -> bool:
    if p.mode == EXACT:
        return tuple(sub) == p.u
    return reduce_word(sub) == p.u


def _index_tuples(p: ColoredPattern, n: int) -> Iterator[tuple[int, ...]]:
    """All increasing 0-based index tuples honouring the adjacency flags."""
    j = len(p)
    if p.all_dash:
        yield from combinations(range(n), j)
        return

    def extend(prefix: list[int]) -> Iterator[tuple[int, ...]]:
        if len(prefix) == j:
            yield tuple(prefix)
            return
        last = prefix[-1]
        if p.gaps[len(prefix) - 1] == ADJACENT:
            candidates: Iterable[int] = (last + 1,) if last + 1 < n else ()
        else:
            candidates = range(last + 1, n)
        for c in candidates:
            prefix.append(c)
            yield from extend(prefix)
            prefix.pop()

    for start in range(n):
        yield from extend([start])


def occurrences(p: ColoredPattern, g: ColoredPermutation) -> list[tuple[int, ...]]:
    """Return every (1-based) position tuple where ``p`` occurs in ``g``.

    Tuples come out in lexicographic order.  Under ``EXACT`` mode the colors
    must equal ``p.u`` letter by letter; under ``REDUCED`` mode the reduced
    color subword must equal ``p.u``.
    """
    out = []
    for idx in _index_tuples(p, len(g)):
        if reduce_perm([g.perm[i] for i in idx]) != p.tau:
            continue
        if _colors_fit(p, [g.colors[i] for i in idx]):
            out.append(tuple(i + 1 for i in idx))
    return out


def count_matches(p: ColoredPattern, g: ColoredPermutation) -> int:
    """Number of positions where a consecutive (bi-)match of ``p`` starts."""
    if not p.all_adjacent:
        raise InvalidInput(f"matches need an all-adjacent pattern, got {p.encode()}")
    j, n = len(p), len(g)
    total = 0
    for i in range(n - j + 1):
        if reduce_perm(g.perm[i:i + j]) == p.tau and _colors_fit(p, g.colors[i:i + j]):
            total += 1
    return total


def contains(p: ColoredPattern, g: ColoredPermutation) -> bool:
    for idx in _index_tuples(p, len(g)):
        if reduce_perm([g.perm[i] for i in idx]) == p.tau and _colors_fit(
            p, [g.colors[i] for i in idx]
        ):
            return True
    return False


def avoids(S: PatternSet | Iterable[ColoredPattern], g: ColoredPermutation) -> bool:
    """True iff no pattern of ``S`` occurs in ``g``."""
    return not any(contains(p, g) for p in S)


# -- symmetries -------------------------------------------------------------

def _perm_r(perm: Sequence[int]) -> tuple[int, ...]:
    return tuple(reversed(perm))


def _perm_c(perm: Sequence[int]) -> tuple[int, ...]:
    n = len(perm)
    return tuple(n + 1 - x for x in perm)


def _word_r(w: Sequence[int], k: int) -> tuple[int, ...]:
    return tuple(reversed(w))


def _word_c(w: Sequence[int], k: int) -> tuple[int, ...]:
    return tuple(k - 1 - x for x in w)


_PERM_MAPS = {"r": _perm_r, "c": _perm_c}
_WORD_MAPS = {"r": _word_r, "c": _word_c}


def apply_phi(a: str, b: str, g: ColoredPermutation) -> ColoredPermutation:
    """The map (sigma, w) -> (sigma^a, w^b) for a, b in {"r", "c"}."""
    if a not in _PERM_MAPS or b not in _WORD_MAPS:
        raise InvalidInput(f"maps must be 'r' or 'c', got {a!r}, {b!r}")
    return ColoredPermutation(_PERM_MAPS[a](g.perm), _WORD_MAPS[b](g.colors, g.k), g.k)


def reverse(g: ColoredPermutation) -> ColoredPermutation:
    return apply_phi("r", "r", g)


def complement(g: ColoredPermutation) -> ColoredPermutation:
    return apply_phi("c", "c", g)


def phi_pattern(a: str, b: str, p: ColoredPattern, k: int | None = None) -> ColoredPattern:
    """Image (tau^a, u^b) of an all-dash pattern.

    In reduced mode the color complement is taken inside the pattern's own
    alphabet (``max(u) + 1`` letters) so the image is again reduced; exact
    mode complements against the host alphabet ``k``.
    """
    if not p.all_dash:
        raise InvalidInput("phi images are only defined here for all-dash patterns")
    if a not in _PERM_MAPS or b not in _WORD_MAPS:
        raise InvalidInput(f"maps must be 'r' or 'c', got {a!r}, {b!r}")
    if p.mode == EXACT:
        if k is None:
            raise InvalidInput("exact-mode pattern images need the host alphabet size k")
        width = k
    else:
        width = max(p.u) + 1
    return ColoredPattern(_PERM_MAPS[a](p.tau), _WORD_MAPS[b](p.u, width), p.gaps, p.mode)
