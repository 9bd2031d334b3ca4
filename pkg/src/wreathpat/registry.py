"""Stable identifiers for every closed form, with the pattern set each one counts."""
from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import permutations
from typing import Callable

from . import closed_forms as cf
from .core import EXACT, REDUCED, InvalidInput, PatternSet, parse_pattern
from .enumeration import DEFAULT_BUDGET, EnumSpec, count_avoiders
from .series import ogf_upsilon_coeffs

FORCE_INCREASING = ["1-2/1,0", "2-1/1,0"]
FORCE_CONSTANT = ["1-2/0,1", "1-2/1,0", "2-1/0,1", "2-1/1,0"]
FORCE_STRICT = ["1-2/1,0", "1-2/0,0", "2-1/1,0", "2-1/0,0"]
FORCE_DISTINCT = ["1-2/0,0", "2-1/0,0"]

CLASSICAL = {
    "12": ("1-2", lambda n: 1),
    "21": ("2-1", lambda n: 1),
    "123": ("1-2-3", cf.catalan),
}


def _zeros(tau: str) -> str:
    j = len(tau.replace("-", ""))
    return f"{tau}/{','.join('0' * j)}"


def _increasing(tau: str) -> str:
    j = len(tau.replace("-", ""))
    return f"{tau}/{','.join(str(i) for i in range(j))}"


def _all_distinct(tau: str) -> list[str]:
    j = len(tau.replace("-", ""))
    return [f"{tau}/{','.join(map(str, u))}" for u in permutations(range(j))]


@dataclass(frozen=True)
class Formula:
    id: str
    description: str
    patterns: tuple[str, ...]
    value: Callable[[int, int], int]
    mode: str = REDUCED
    n_min: int = 1
    k_fixed: int | None = None

    def pattern_set(self) -> PatternSet:
        return PatternSet(tuple(parse_pattern(p, self.mode) for p in self.patterns))

    def check_domain(self, n: int, k: int) -> None:
        if n < self.n_min:
            raise InvalidInput(f"formula {self.id} needs n >= {self.n_min}, got {n}")
        if k < 1:
            raise InvalidInput(f"k must be >= 1, got {k}")
        if self.k_fixed is not None and k != self.k_fixed:
            raise InvalidInput(f"formula {self.id} is defined for k = {self.k_fixed} only")

    def __call__(self, n: int, k: int | None = None) -> int:
        k = self.k_fixed if k is None else k
        if k is None:
            raise InvalidInput(f"formula {self.id} needs k")
        self.check_domain(n, k)
        return self.value(n, k)

    def oracle(self, n: int, k: int | None = None, budget: int = DEFAULT_BUDGET, jobs: int = 1) -> int:
        k = self.k_fixed if k is None else k
        return count_avoiders(EnumSpec(n, k, budget), self.pattern_set(), jobs=jobs)

    def describe(self) -> dict:
        return {
            "id": self.id,
            "description": self.description,
            "mode": self.mode,
            "patterns": list(self.patterns),
            "n_min": self.n_min,
            "k": self.k_fixed if self.k_fixed is not None else "any",
        }


def _build() -> dict[str, Formula]:
    out: list[Formula] = [
        Formula("mult", "sum of squared multinomials", ("1-2/0,0",), cf.f_mult, n_min=0),
        Formula("mult1-12", "general form with A_i = 1 for 1-2", ("1-2/0,0",),
                lambda n, k: cf.f_mult_general(n, k, cf.ones(n)), n_min=0),
        Formula("mult1-21", "general form with A_i = 1 for 2-1", ("2-1/0,0",),
                lambda n, k: cf.f_mult_general(n, k, cf.ones(n)), n_min=0),
        Formula("mult1-123", "general form with Catalan A_i for 1-2-3", ("1-2-3/0,0,0",),
                lambda n, k: cf.f_mult_general(n, k, cf.catalans(n)), n_min=0),
        Formula("length3", "Catalan specialisation, pattern 1-2-3", ("1-2-3/0,0,0",),
                cf.f_length3_dashed, n_min=0),
        Formula("length3-132", "Catalan specialisation, pattern 1-3-2", ("1-3-2/0,0,0",),
                cf.f_length3_dashed, n_min=0),
        Formula("simion", "sum_j j! C(n,j)^2", ("1-2/0,1",),
                lambda n, k: cf.f_simion(n), n_min=0, k_fixed=2),
        Formula("signs-1", "C(k,n) n! n!", tuple(FORCE_DISTINCT), lambda n, k: cf.f_signs(1, n, k)),
        Formula("signs-2", "C(n+k-1,n) n!", tuple(FORCE_INCREASING), lambda n, k: cf.f_signs(2, n, k)),
        Formula("signs-3", "C(k,n) n!", tuple(FORCE_STRICT), lambda n, k: cf.f_signs(3, n, k)),
        Formula("signs-4", "k n!", tuple(FORCE_CONSTANT), lambda n, k: cf.f_signs(4, n, k)),
    ]
    for key, (tau, av) in CLASSICAL.items():
        seq = cf.catalans if key == "123" else cf.ones
        out.append(Formula(
            f"product-{key}", f"EGF power of {tau} avoiders, weakly increasing colors",
            (_zeros(tau), *FORCE_INCREASING),
            lambda n, k, seq=seq: cf.f_product(n, k, seq(n)), n_min=0,
        ))
        out.append(Formula(
            f"gamma-1-{key}", f"k Av_n({tau}), constant colors",
            (_zeros(tau), *FORCE_CONSTANT),
            lambda n, k, av=av: cf.f_gamma(1, n, k, av(n)),
        ))
        out.append(Formula(
            f"gamma-2-{key}", f"C(k,n) Av_n({tau}), strictly increasing colors",
            (_increasing(tau), *FORCE_STRICT),
            lambda n, k, av=av: cf.f_gamma(2, n, k, av(n)),
        ))
        out.append(Formula(
            f"gamma-3-{key}", f"C(k,n) n! Av_n({tau}), pairwise distinct colors",
            (*_all_distinct(tau), *FORCE_DISTINCT),
            lambda n, k, av=av: cf.f_gamma(3, n, k, av(n)),
        ))
    out += [
        Formula("kn-1", "k^n, 1-2 with weakly increasing colors", ("1-2/0,0", *FORCE_INCREASING),
                lambda n, k: k**n, n_min=0),
        Formula("kn-2", "k^n, 2-1 with weakly increasing colors", ("2-1/0,0", *FORCE_INCREASING),
                lambda n, k: k**n, n_min=0),
        Formula("upsilon-1", "sum of a_1! ... a_k!", ("1-2/0,1", "1-2/1,0", "2-1/1,0"), cf.f_upsilon1),
        Formula("upsilon-2", "C(n+k-1,k-1)", ("1-2/0,1", "1-2/1,0", "2-1/1,0", "2-1/0,0"), cf.f_upsilon2),
        Formula("falling", "closed form 1 / 2n / k + sum_{j=2}^{k-1} (k)_j C(n,j), valid for k <= 3",
                ("1-2/0,1", "1-2/1,0", "2-1/0,0"), cf.f_falling),
        Formula("falling-rec", "recursion k + sum_{s<n} k Av(s,k-1)",
                ("1-2/0,1", "1-2/1,0", "2-1/0,0"), cf.f_falling_rec),
        Formula("falling-corrected", "sum_{j=1}^{k} (k)_j C(n-1,j-1)",
                ("1-2/0,1", "1-2/1,0", "2-1/0,0"), cf.f_falling_corrected),
        Formula("ogf", "coefficients of (1+C(t))/(1-(k-1)C(t))", ("1-2/1,0", "1-2/0,1"),
                lambda n, k: ogf_upsilon_coeffs(k, n)[n], n_min=0),
        Formula("ogf-sum", "k n! + sum over color runs", ("1-2/1,0", "1-2/0,1"),
                cf.f_ogf_upsilon_sum, n_min=0),
        Formula("mansour", "sum_j j! (k-1)^j C(n,j)^2, exact colors", ("1-2/0,0",),
                cf.f_mansour_single, mode=EXACT, n_min=0),
        Formula("mw-1", "K^1 = F_{2n+1}", ("1-2/0,0", "1-2/0,1", "2-1/1,0"),
                lambda n, k: cf.f_mw(1, n), mode=EXACT, k_fixed=2),
        Formula("mw-2", "K^2 = n! sum_j C(n,j)^-1", ("1-2/0,1", "1-2/1,0", "2-1/0,1"),
                lambda n, k: cf.f_mw(2, n), mode=EXACT, k_fixed=2),
        Formula("mw-3", "K^3 = n! + n! H_n", ("1-2/0,0", "1-2/0,1", "2-1/0,0"),
                lambda n, k: cf.f_mw(3, n), mode=EXACT, k_fixed=2),
        Formula("cat", "Catalan C_{n+1}", ("1-2/0,0", "1-2/0,1"),
                lambda n, k: cf.f_cat(n), n_min=0, k_fixed=2),
    ]
    return {f.id: f for f in out}


REGISTRY: dict[str, Formula] = _build()


def get(formula_id: str) -> Formula:
    try:
        return REGISTRY[formula_id]
    except KeyError:
        known = ", ".join(sorted(REGISTRY))
        raise InvalidInput(f"unknown formula id {formula_id!r}; known ids: {known}") from None


def domain(formula: Formula, budget: int) -> list[tuple[int, int]]:
    """All (n, k) in the formula's domain with k^n n! <= budget, n <= 12, k <= 6."""
    pts = []
    ks = [formula.k_fixed] if formula.k_fixed else range(1, 7)
    for k in ks:
        for n in range(formula.n_min, 13):
            if k**n * math.factorial(n) > budget:
                break
            pts.append((n, k))
    return pts
