"""Run every formula and identity against the brute-force counts."""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable, Iterator

from . import closed_forms as cf
from .bijection import certify_bijection
from .core import patterns
from .enumeration import EnumSpec, count_avoiders, distribution, sequence
from .fixtures import A002720, KNOWN_12_01
from .registry import REGISTRY, domain
from .series import (
    egf_product_check,
    ogf_upsilon_coeffs,
    pat2_coeffs,
    pat2_ode_residual,
)


@dataclass
class CheckResult:
    id: str
    passed: bool
    cases: int = 0
    counterexample: str | None = None
    notes: list[str] = field(default_factory=list)

    def as_dict(self) -> dict:
        return {
            "id": self.id,
            "passed": self.passed,
            "cases": self.cases,
            "counterexample": self.counterexample,
        }


def _fits(n: int, k: int, budget: int) -> bool:
    return k**n * math.factorial(n) <= budget


def check_formula(formula_id: str, budget: int, jobs: int = 1) -> CheckResult:
    f = REGISTRY[formula_id]
    res = CheckResult(f"formula:{formula_id}", True)
    for n, k in domain(f, budget):
        res.cases += 1
        want = f.oracle(n, k, budget=budget, jobs=jobs)
        got = f(n, k)
        if got != want:
            res.passed = False
            res.counterexample = f"n={n} k={k}: formula {got}, enumeration {want}"
            break
    return res


def check_known_sequences(budget: int, jobs: int = 1) -> CheckResult:
    res = CheckResult("sequence:1-2/0,1", True)
    S = patterns("1-2/0,1")
    for k, expected in KNOWN_12_01.items():
        got = sequence(k, S, len(expected), budget=budget, jobs=jobs)
        res.cases += len(got.values)
        if got.values != expected[: len(got.values)]:
            res.passed = False
            res.counterexample = f"k={k}: got {got.values}, expected {expected}"
            break
    return res


def check_a002720(budget: int, n_max: int = 8, jobs: int = 1) -> CheckResult:
    res = CheckResult("sequence:A002720", True)
    got = sequence(2, patterns("1-2/0,1"), n_max, budget=budget, jobs=jobs)
    res.cases = len(got.values)
    if got.values != A002720[1 : len(got.values) + 1]:
        res.passed = False
        res.counterexample = f"got {got.values}, A002720 gives {A002720[1:n_max + 1]}"
    return res


def check_catalan_bijection(budget: int, n_max: int = 8) -> CheckResult:
    res = CheckResult("bijection:cat", True)
    for n in range(n_max + 1):
        if not _fits(n, 2, budget):
            break
        report = certify_bijection(n, budget=budget)
        res.cases += 1
        if not report.passed:
            res.passed = False
            res.counterexample = f"n={n}: {report.as_dict()}"
            break
    return res


def check_mahonian(budget: int, n_max: int = 5, k_max: int = 3) -> CheckResult:
    res = CheckResult("distribution:mahonian", True)
    p = patterns("1-2/0,0").patterns[0]
    for k in range(1, k_max + 1):
        for n in range(0, n_max + 1):
            if not _fits(n, k, budget):
                break
            table = distribution(EnumSpec(n, k, budget), p)
            top = max(table) + 1
            for j in range(top + 1):
                res.cases += 1
                want = table.get(j, 0)
                got = cf.distribution_formula(n, k, j)
                if got != want:
                    res.passed = False
                    res.counterexample = f"n={n} k={k} j={j}: formula {got}, enumeration {want}"
                    return res
    return res


def check_pat2(n_max: int = 12, order: int = 15) -> CheckResult:
    res = CheckResult("series:pat2", True)
    A = pat2_coeffs(n_max).values
    for n, a in enumerate(A):
        res.cases += 1
        if a != cf.f_simion(n):
            res.passed = False
            res.counterexample = f"n={n}: recursion {a}, Simion sum {cf.f_simion(n)}"
            return res
    residual = pat2_ode_residual(order)
    res.cases += 1
    if not residual.is_zero():
        res.passed = False
        res.counterexample = f"ODE residual {residual}"
    return res


def check_ogf(budget: int, n_max: int = 10, k_max: int = 5) -> CheckResult:
    res = CheckResult("series:ogf", True)
    S = patterns("1-2/1,0", "1-2/0,1")
    for k in range(1, k_max + 1):
        coeffs = ogf_upsilon_coeffs(k, n_max).values
        for n in range(n_max + 1):
            res.cases += 1
            alt = cf.f_ogf_upsilon_sum(n, k)
            if coeffs[n] != alt:
                res.passed = False
                res.counterexample = f"n={n} k={k}: rational form {coeffs[n]}, run sum {alt}"
                return res
            if _fits(n, k, budget):
                want = count_avoiders(EnumSpec(n, k, budget), S)
                if coeffs[n] != want:
                    res.passed = False
                    res.counterexample = f"n={n} k={k}: series {coeffs[n]}, enumeration {want}"
                    return res
    return res


def check_egf_product(k_max: int = 4, n_max: int = 8) -> CheckResult:
    res = CheckResult("series:egf-product", True)
    for label, seq in (("ones", cf.ones(n_max)), ("catalan", cf.catalans(n_max)), ("factorials", cf.factorials(n_max))):
        for k in range(1, k_max + 1):
            res.cases += 1
            if not egf_product_check(seq, k, n_max):
                res.passed = False
                res.counterexample = f"A={label} k={k}"
                return res
    return res


def check_falling_recursion(n_max: int = 30, k_max: int = 10) -> CheckResult:
    res = CheckResult("identity:falling=falling-rec", True)
    for k in range(1, k_max + 1):
        for n in range(1, n_max + 1):
            res.cases += 1
            a, b = cf.f_falling(n, k), cf.f_falling_rec(n, k)
            if a != b:
                res.passed = False
                res.counterexample = f"n={n} k={k}: closed form {a}, recursion {b}"
                return res
    return res


def all_checks(budget: int, jobs: int = 1) -> Iterator[Callable[[], CheckResult]]:
    for fid in REGISTRY:
        yield lambda fid=fid: check_formula(fid, budget, jobs)
    yield lambda: check_falling_recursion()
    yield lambda: check_known_sequences(budget, jobs)
    yield lambda: check_a002720(budget, jobs=jobs)
    yield lambda: check_catalan_bijection(budget)
    yield lambda: check_mahonian(budget)
    yield lambda: check_pat2()
    yield lambda: check_ogf(budget)
    yield lambda: check_egf_product()


def run_all(budget: int, jobs: int = 1) -> Iterator[CheckResult]:
    for check in all_checks(budget, jobs):
        yield check()
