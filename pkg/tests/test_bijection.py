from __future__ import annotations

from itertools import permutations

import pytest

from wreathpat.bijection import (
    CAT_SET,
    FREE,
    DyckPath,
    LatticePath,
    certify_bijection,
    completions,
    forced_colors,
    matrix_diagram,
    reverse_irreducible_blocks,
    to_dyck_path,
    to_lattice_path,
)
from wreathpat.closed_forms import catalan
from wreathpat.core import ColoredPermutation, InvalidInput, avoids, parse_colored_permutation
from wreathpat.enumeration import EnumSpec, avoiders

GOLDEN = ColoredPermutation((6, 5, 7, 4, 3, 1, 2), (1, 1, 0, 1, 0, 1, 0), 2)


def test_golden_example():
    path = to_lattice_path(GOLDEN)
    assert path.steps == "DDDRDRRRDDRDDRRR"
    assert to_dyck_path(GOLDEN).steps == "UUUDUDDDUUDUUDDD"
    assert path.interior_touches() == [(4, 4)]


def test_blocks_of_golden_example():
    d = reverse_irreducible_blocks(GOLDEN.perm)
    assert d.blocks == ((0, 3), (3, 4), (4, 5), (5, 7))
    assert d.singletons == (False, True, True, False)
    assert d.block_of(6) == (5, 7)


def test_forced_colors():
    assert forced_colors((6, 5, 7, 4, 3, 1, 2)) == (1, 1, 0, FREE, FREE, 1, 0)
    with pytest.raises(InvalidInput):
        forced_colors((1, 2, 3))


@pytest.mark.parametrize(
    "g, path, dyck",
    [
        (ColoredPermutation((), (), 2), "DR", "UD"),
        (ColoredPermutation((1,), (0,), 2), "DDRR", "UUDD"),
        (ColoredPermutation((1,), (1,), 2), "DRDR", "UDUD"),
    ],
)
def test_small_cases(g, path, dyck):
    assert to_lattice_path(g).steps == path
    assert to_dyck_path(g).steps == dyck


def test_rejects_non_avoider():
    g = ColoredPermutation((1, 2), (0, 0), 2)
    with pytest.raises(InvalidInput, match="1-2,0 0"):
        to_lattice_path(g)
    with pytest.raises(InvalidInput):
        to_lattice_path(ColoredPermutation((1,), (0,), 3))


def test_completion_count_is_power_of_two():
    for n in range(7):
        for perm in permutations(range(1, n + 1)):
            try:
                forced = forced_colors(perm)
            except InvalidInput:
                continue
            comps = list(completions(perm))
            assert len(comps) == 2 ** forced.count(FREE)
            assert all(avoids(CAT_SET, g) for g in comps)


def test_completions_are_exactly_the_avoiders():
    for n in range(6):
        got = sorted((g.perm, g.colors) for perm in permutations(range(1, n + 1))
                     for g in (completions(perm) if _avoids_123(perm) else ()))
        want = sorted((g.perm, g.colors) for g in avoiders(EnumSpec(n, 2), CAT_SET))
        assert got == want


def _avoids_123(perm) -> bool:
    try:
        forced_colors(perm)
    except InvalidInput:
        return False
    return True


def test_boundary_touches_are_color_one_singletons():
    for n in range(7):
        for g in avoiders(EnumSpec(n, 2), CAT_SET):
            d = reverse_irreducible_blocks(g.perm)
            expected = [(start + 1, n - start) for (start, _), single in zip(d.blocks, d.singletons)
                        if single and g.colors[start] == 1]
            assert to_lattice_path(g).interior_touches() == expected


@pytest.mark.parametrize("n", range(8))
def test_certify(n):
    report = certify_bijection(n)
    assert report.passed, report.as_dict()
    assert report.avoiders == catalan(n + 1)


def test_path_validation():
    with pytest.raises(InvalidInput):
        LatticePath("RD").validate()
    assert DyckPath("UUDD").is_valid() and not DyckPath("DU").is_valid()


def test_matrix_diagram_has_outlines():
    art = matrix_diagram(parse_colored_permutation("sigma=2,1 colors=1,0"))
    assert "+" in art and "1" in art
