from __future__ import annotations

import itertools
import random

import pytest

from wreathpat.core import (
    ADJACENT,
    DASH,
    EXACT,
    REDUCED,
    ColoredPattern,
    ColoredPermutation,
    InvalidInput,
    PatternSet,
    apply_phi,
    avoids,
    complement,
    contains,
    count_matches,
    occurrences,
    parse_colored_permutation,
    parse_pattern,
    parse_patterns,
    pattern,
    patterns,
    phi_pattern,
    reduce_perm,
    reduce_word,
    reverse,
)


def test_reduce_perm_examples():
    assert reduce_perm([5, 2, 9]) == (2, 1, 3)
    assert reduce_perm([]) == ()
    with pytest.raises(InvalidInput):
        reduce_perm([1, 1])


def test_reduce_word_examples():
    assert reduce_word([3, 1, 3, 7]) == (1, 0, 1, 2)
    assert reduce_word([2, 2]) == (0, 0)


def test_colored_permutation_validation():
    with pytest.raises(InvalidInput):
        ColoredPermutation((1, 1), (0, 0), 2)
    with pytest.raises(InvalidInput):
        ColoredPermutation((1, 2), (0, 2), 2)
    with pytest.raises(InvalidInput):
        ColoredPermutation((1, 2), (0,), 2)


def test_parse_roundtrip():
    g = parse_colored_permutation("sigma=1,3,2,4 colors=1,2,2,2 k=3")
    assert g.perm == (1, 3, 2, 4) and g.colors == (1, 2, 2, 2) and g.k == 3
    assert parse_colored_permutation(g.encode()) == g
    p = parse_pattern("1-2/0,0")
    assert p.gaps == (DASH,) and p.all_dash
    q = parse_pattern("12/0,0")
    assert q.gaps == (ADJACENT,) and q.all_adjacent
    assert parse_pattern(q.encode()) == q
    S = parse_patterns("1-2/0,0; 2-1/0,1")
    assert len(S) == 2


@pytest.mark.parametrize("bad", ["", "1-2", "1-2/0", "1-x/0,0", "1-1/0,0", "2-3/0,0"])
def test_parse_pattern_rejects(bad):
    with pytest.raises(InvalidInput):
        parse_pattern(bad)


def test_reduced_pattern_needs_reduced_colors():
    with pytest.raises(InvalidInput):
        parse_pattern("1-2/0,2", REDUCED)
    assert parse_pattern("1-2/0,2", EXACT).u == (0, 2)


def test_pattern_set_uniform_mode():
    with pytest.raises(InvalidInput):
        PatternSet((pattern("1-2/0,0"), pattern("1-2/0,0", EXACT)))
    with pytest.raises(InvalidInput):
        PatternSet(())


def test_exact_vs_reduced_occurrence():
    # colors (2, 5) reduce to (0, 1): a bi-occurrence but no exact occurrence of (1-2, 0 1)
    g = ColoredPermutation((1, 2), (2, 5), 6)
    assert contains(pattern("1-2/0,1"), g)
    assert not contains(pattern("1-2/0,1", EXACT), g)
    assert contains(pattern("1-2/2,5", EXACT), g)


def test_occurrences_listed_in_order():
    g = ColoredPermutation((1, 3, 2, 4), (0, 0, 0, 0), 1)
    assert occurrences(pattern("1-2/0,0"), g) == [(1, 2), (1, 3), (1, 4), (2, 4), (3, 4)]
    assert occurrences(pattern("12/0,0"), g) == [(1, 2), (3, 4)]


def test_count_matches_requires_adjacent():
    g = ColoredPermutation((2, 1, 3), (0, 1, 1), 2)
    assert count_matches(pattern("12/0,0"), g) == 1
    with pytest.raises(InvalidInput):
        count_matches(pattern("1-2/0,0"), g)


def _random_element(rng: random.Random, n: int, k: int) -> ColoredPermutation:
    perm = list(range(1, n + 1))
    rng.shuffle(perm)
    return ColoredPermutation(tuple(perm), tuple(rng.randrange(k) for _ in range(n)), k)


def test_match_vs_occurrence_consistency():
    rng = random.Random(7)
    for _ in range(300):
        g = _random_element(rng, rng.randint(0, 6), rng.randint(1, 3))
        tau = rng.choice(["12", "21", "132", "231"])
        u = reduce_word([rng.randrange(2) for _ in tau])
        p = parse_pattern(f"{tau}/{','.join(map(str, u))}")
        assert count_matches(p, g) == len(occurrences(p, g))
        # an adjacent occurrence is also a dashed one
        dashed = ColoredPattern(p.tau, p.u)
        assert set(occurrences(p, g)) <= set(occurrences(dashed, g))


def test_avoids_matches_contains():
    S = patterns("1-2/0,0", "2-1/0,1")
    rng = random.Random(3)
    for _ in range(100):
        g = _random_element(rng, 4, 2)
        assert avoids(S, g) == (not any(contains(p, g) for p in S.patterns))


def test_phi_involutions():
    rng = random.Random(11)
    for _ in range(100):
        g = _random_element(rng, rng.randint(0, 6), rng.randint(1, 4))
        for a, b in itertools.product("rc", repeat=2):
            assert apply_phi(a, b, apply_phi(a, b, g)) == g
    g = ColoredPermutation((2, 3, 1), (0, 2, 1), 3)
    assert reverse(g) == ColoredPermutation((1, 3, 2), (1, 2, 0), 3)
    assert complement(g) == ColoredPermutation((2, 1, 3), (2, 0, 1), 3)


def test_phi_rejects_unknown_maps():
    g = ColoredPermutation((1,), (0,), 1)
    with pytest.raises(InvalidInput):
        apply_phi("x", "r", g)


@pytest.mark.parametrize("ab", ["rr", "cc"])
def test_diagonal_phi_transports_avoidance(ab):
    a, b = ab
    rng = random.Random(5)
    for _ in range(200):
        g = _random_element(rng, rng.randint(0, 5), rng.randint(1, 3))
        for text in ["1-2/0,0", "1-2/0,1", "2-1/1,0", "1-3-2/0,1,0"]:
            p = pattern(text)
            assert contains(p, g) == contains(phi_pattern(a, b, p), apply_phi(a, b, g))
