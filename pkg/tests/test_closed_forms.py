from __future__ import annotations

import pytest

from wreathpat import closed_forms as cf
from wreathpat.core import patterns
from wreathpat.enumeration import EnumSpec, count_avoiders
from wreathpat.registry import REGISTRY, domain, get
from wreathpat.core import InvalidInput

# Frozen from the brute-force oracle at k = 3 (k = 2 for the k-fixed ids), n = 1..4.
ORACLE_K3 = {
    "mult": [3, 15, 93, 639],
    "length3": [3, 18, 159, 1818],
    "signs-1": [3, 12, 36, 0],
    "signs-2": [3, 12, 60, 360],
    "signs-3": [3, 6, 6, 0],
    "signs-4": [3, 6, 18, 72],
    "upsilon-1": [3, 9, 31, 126],
    "upsilon-2": [3, 6, 10, 15],
    "falling-corrected": [3, 9, 21, 39],
    "ogf": [3, 12, 54, 264],
    "mansour": [3, 17, 139, 1473],
    "product-123": [3, 12, 57, 306],
    "gamma-3-123": [3, 12, 30, 0],
    "mw-2": [2, 5, 16, 64],
    "mw-3": [2, 5, 17, 74],
}


@pytest.mark.parametrize("fid", sorted(ORACLE_K3))
def test_formula_against_frozen_oracle(fid):
    f = REGISTRY[fid]
    k = f.k_fixed or 3
    assert [f(n, k) for n in range(1, 5)] == ORACLE_K3[fid]


def test_helpers():
    assert [cf.catalan(n) for n in range(8)] == [1, 1, 2, 5, 14, 42, 132, 429]
    assert [cf.fibonacci(n) for n in range(1, 8)] == [1, 1, 2, 3, 5, 8, 13]
    assert cf.binomial(5, 7) == 0 and cf.binomial(5, -1) == 0
    assert cf.multinomial(4, (2, 1, 1)) == 12
    assert cf.falling(5, 2) == 20 and cf.falling(2, 3) == 0
    assert sorted(cf.compositions(2, 2)) == [(0, 2), (1, 1), (2, 0)]
    assert list(cf.compositions(3, 2, positive=True)) == [(1, 2), (2, 1)]


def test_mahonian_rows():
    assert [cf.mahonian(4, j) for j in range(7)] == [1, 3, 5, 6, 5, 3, 1]
    for i in range(7):
        assert sum(cf.mahonian(i, j) for j in range(i * (i - 1) // 2 + 1)) == cf.factorial(i)


def test_simion_values():
    assert [cf.f_simion(n) for n in range(7)] == [1, 2, 7, 34, 209, 1546, 13327]


def test_mult_general_reduces_to_mult():
    for n in range(6):
        for k in range(1, 4):
            assert cf.f_mult_general(n, k, cf.ones(n)) == cf.f_mult(n, k)


def test_upsilon2_is_binomial():
    assert cf.f_upsilon2(4, 3) == cf.binomial(6, 2)


def test_falling_recursion_agrees_with_corrected_form():
    for k in range(1, 9):
        for n in range(1, 15):
            assert cf.f_falling_rec(n, k) == cf.f_falling_corrected(n, k)


def test_falling_closed_form_small_alphabets():
    for k in range(1, 4):
        for n in range(1, 12):
            assert cf.f_falling(n, k) == cf.f_falling_rec(n, k)


def test_falling_closed_form_matches_enumeration():
    # Left failing on purpose: this closed form overcounts once k >= 4 and n >= 3
    # (enumeration gives 4, 16, 52, 136 for k = 4).
    S = REGISTRY["falling"].pattern_set()
    for n in range(1, 5):
        assert cf.f_falling(n, 4) == count_avoiders(EnumSpec(n, 4), S), f"n={n} k=4"


def test_mw1_matches_enumeration():
    # Left failing on purpose: this set gives 2, 5, 16, 65, 326, not odd Fibonacci numbers.
    S = REGISTRY["mw-1"].pattern_set()
    for n in range(1, 6):
        assert cf.f_mw(1, n) == count_avoiders(EnumSpec(n, 2), S), f"n={n}"


def test_fibonacci_set_nearest_to_mw1():
    S = patterns("1-2/0,0", "1-2/0,1", "2-1/1,1", mode="exact")
    assert [count_avoiders(EnumSpec(n, 2), S) for n in range(1, 7)] == [cf.f_mw(1, n) for n in range(1, 7)]


def test_mw_integrality():
    for v in (2, 3):
        for n in range(1, 12):
            assert isinstance(cf.f_mw(v, n), int)


def test_registry_lookup_and_domain():
    with pytest.raises(InvalidInput):
        get("nope")
    f = get("cat")
    assert f(3) == 14
    with pytest.raises(InvalidInput):
        f(3, 3)
    pts = domain(get("signs-1"), 10**6)
    assert (9, 1) in pts and all(k**n * cf.factorial(n) <= 10**6 for n, k in pts)


def test_registry_descriptions_are_serialisable():
    import json

    json.dumps([f.describe() for f in REGISTRY.values()])
