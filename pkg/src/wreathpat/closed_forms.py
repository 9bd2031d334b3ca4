"""Closed-form avoider counts for colored patterns, in exact integer arithmetic.

Every function here transcribes a counting formula; none of them enumerates.
Agreement with the brute-force counts in :mod:`wreathpat.enumeration` is
checked by the test-suite and by ``wreathpat verify``.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Iterator, Sequence

from .core import InvalidInput


class InconsistentResult(ArithmeticError):
    """A formula that must produce an integer produced a non-integer."""


# -- helpers ----------------------------------------------------------------

def factorial(n: int) -> int:
    return math.factorial(n)


def binomial(n: int, r: int) -> int:
    if r < 0 or n < 0 or r > n:
        return 0
    return math.comb(n, r)


def multinomial(n: int, parts: Sequence[int]) -> int:
    if sum(parts) != n or any(p < 0 for p in parts):
        return 0
    out = math.factorial(n)
    for p in parts:
        out //= math.factorial(p)
    return out


def falling(k: int, j: int) -> int:
    """k (k-1) ... (k-j+1), with falling(k, 0) = 1."""
    out = 1
    for i in range(j):
        out *= k - i
    return out


def catalan(n: int) -> int:
    return math.comb(2 * n, n) // (n + 1)


def fibonacci(n: int) -> int:
    """Fibonacci numbers with F(1) = F(2) = 1."""
    a, b = 0, 1
    for _ in range(n):
        a, b = b, a + b
    return a


def compositions(n: int, k: int, positive: bool = False) -> Iterator[tuple[int, ...]]:
    """Ordered k-tuples of non-negative (or positive) integers summing to n."""
    lo = 1 if positive else 0
    if k == 0:
        if n == 0:
            yield ()
        return
    if k == 1:
        if n >= lo:
            yield (n,)
        return
    for first in range(lo, n - lo * (k - 1) + 1):
        for rest in compositions(n - first, k - 1, positive):
            yield (first,) + rest


@dataclass
class AvSequence:
    """Counts indexed from 0, e.g. A_i = #permutations of S_i avoiding p."""

    values: list[int]
    description: str = ""

    def __getitem__(self, i: int) -> int:
        return self.values[i]

    def __len__(self) -> int:
        return len(self.values)

    def require(self, n: int) -> None:
        if len(self.values) <= n:
            raise InvalidInput(
                f"sequence {self.description or '<unnamed>'} has {len(self.values)} terms, need index {n}"
            )


def ones(n_max: int) -> AvSequence:
    return AvSequence([1] * (n_max + 1), "all ones")


def catalans(n_max: int) -> AvSequence:
    return AvSequence([catalan(i) for i in range(n_max + 1)], "Catalan")


def factorials(n_max: int) -> AvSequence:
    return AvSequence([factorial(i) for i in range(n_max + 1)], "factorials")


def _as_seq(A: AvSequence | Sequence[int]) -> AvSequence:
    return A if isinstance(A, AvSequence) else AvSequence(list(A))


# -- patterns coloured only by 0 -------------------------------------------

def f_mult(n: int, k: int) -> int:
    """Bi-avoiders of (1-2, 0 0): sum of squared multinomials over k-compositions of n."""
    return sum(multinomial(n, c) ** 2 for c in compositions(n, k))


def f_mult_general(n: int, k: int, A: AvSequence | Sequence[int]) -> int:
    """Bi-avoiders of (p, 0...0) for an all-dash p avoided by A_i permutations of S_i."""
    A = _as_seq(A)
    A.require(n)
    total = 0
    for c in compositions(n, k):
        term = multinomial(n, c) ** 2
        for i in c:
            term *= A[i]
        total += term
    return total


def f_length3_dashed(n: int, k: int) -> int:
    """The Catalan specialisation for length-3 all-dash patterns colored 0 0 0."""
    total = 0
    for c in compositions(n, k):
        num = 1
        den = 1
        for i in c:
            num *= math.comb(2 * i, i)
            den *= i + 1
        q, r = divmod(num * multinomial(n, c) ** 2, den)
        if r:
            raise InconsistentResult(f"non-integer term for composition {c}")
        total += q
    return total


@lru_cache(maxsize=None)
def _q_factorial(i: int) -> tuple[int, ...]:
    coeffs = [1]
    for m in range(1, i + 1):
        nxt = [0] * (len(coeffs) + m - 1)
        for a, c in enumerate(coeffs):
            for b in range(m):
                nxt[a + b] += c
        coeffs = nxt
    return tuple(coeffs)


def mahonian(i: int, j: int) -> int:
    """Coefficient of q^j in prod_{m=1}^{i} (1 + q + ... + q^(m-1))."""
    coeffs = _q_factorial(i)
    return coeffs[j] if 0 <= j < len(coeffs) else 0


def mahonian_matrix(n_max: int) -> list[list[int]]:
    return [list(_q_factorial(i)) for i in range(n_max + 1)]


def distribution_formula(n: int, k: int, j: int, A: Sequence[Sequence[int]] | None = None) -> int:
    """Elements of C_k wr S_n with exactly j bi-occurrences of (p, 0...0).

    ``A[i][s]`` is the number of permutations of S_i with s occurrences of p;
    entries past the end of a row count as zero.  Defaults to the Mahonian
    numbers, i.e. p = 1-2.
    """
    if A is None:
        A = mahonian_matrix(n)
    if len(A) <= n:
        raise InvalidInput(f"distribution matrix has {len(A)} rows, need {n + 1}")

    def entry(i: int, s: int) -> int:
        row = A[i]
        return row[s] if s < len(row) else 0

    total = 0
    for c in compositions(n, k):
        m2 = multinomial(n, c) ** 2
        for js in compositions(j, k):
            term = m2
            for i, s in zip(c, js):
                term *= entry(i, s)
                if not term:
                    break
            total += term
    return total


def f_simion(n: int) -> int:
    """Bi-avoiders of (1-2, 0 1) in C_2 wr S_n: sum_j j! C(n, j)^2."""
    return sum(math.factorial(j) * math.comb(n, j) ** 2 for j in range(n + 1))


# -- sets forcing conditions on the colors ----------------------------------

def f_signs(variant: int, n: int, k: int) -> int:
    if variant == 1:
        return binomial(k, n) * factorial(n) * factorial(n)
    if variant == 2:
        return binomial(n + k - 1, n) * factorial(n)
    if variant == 3:
        return binomial(k, n) * factorial(n)
    if variant == 4:
        return k * factorial(n)
    raise InvalidInput(f"unknown sign-condition variant {variant}; expected 1..4")


def f_product(n: int, k: int, A: AvSequence | Sequence[int]) -> int:
    """n! [t^n] (sum_m A_m t^m / m!)^k, written as a multinomial convolution."""
    A = _as_seq(A)
    A.require(n)
    total = 0
    for c in compositions(n, k):
        term = multinomial(n, c)
        for a in c:
            term *= A[a]
        total += term
    return total


def f_gamma(variant: int, n: int, k: int, av_n: int) -> int:
    if variant == 1:
        return k * av_n
    if variant == 2:
        return binomial(k, n) * av_n
    if variant == 3:
        return binomial(k, n) * factorial(n) * av_n
    raise InvalidInput(f"unknown Gamma variant {variant}; expected 1..3")


def f_upsilon1(n: int, k: int) -> int:
    total = 0
    for c in compositions(n, k):
        term = 1
        for a in c:
            term *= factorial(a)
        total += term
    return total


def f_upsilon2(n: int, k: int) -> int:
    return binomial(n + k - 1, k - 1)


def f_falling(n: int, k: int) -> int:
    """Closed form 1, 2n, or k + sum_{j=2}^{k-1} (k)_j C(n, j).

    Only correct for k <= 3 or n <= 2; see :func:`f_falling_corrected`.
    """
    if k == 1:
        return 1
    if k == 2:
        return 2 * n
    return k + sum(falling(k, j) * binomial(n, j) for j in range(2, k))


def f_falling_rec(n: int, k: int) -> int:
    """Av(n, k) = k + sum_{s=1}^{n-1} k Av(s, k-1), with Av(n, 1) = 1."""
    table = [[0] * (n + 1) for _ in range(k + 1)]
    for s in range(1, n + 1):
        table[1][s] = 1
    for kk in range(2, k + 1):
        for s in range(1, n + 1):
            table[kk][s] = kk + kk * sum(table[kk - 1][t] for t in range(1, s))
    return table[k][n]


def f_falling_corrected(n: int, k: int) -> int:
    """Solution of the recursion: sum_{j=1}^{k} (k)_j C(n-1, j-1)."""
    return sum(falling(k, j) * binomial(n - 1, j - 1) for j in range(1, k + 1))


def f_mansour_single(n: int, k: int) -> int:
    """Avoiders (exact colors) of any single pattern of C_k wr S_2."""
    return sum(math.factorial(j) * (k - 1) ** j * math.comb(n, j) ** 2 for j in range(n + 1))


def _certify_integer(x: Fraction, label: str) -> int:
    if x.denominator != 1:
        raise InconsistentResult(f"{label} evaluated to the non-integer {x}")
    return x.numerator


def f_mw(variant: int, n: int) -> int:
    """The three Mansour-West counts K^1, K^2, K^3 for C_2 wr S_n."""
    if variant == 1:
        return fibonacci(2 * n + 1)
    if variant == 2:
        s = sum(Fraction(1, math.comb(n, j)) for j in range(n + 1))
        return _certify_integer(math.factorial(n) * s, f"K^2_{n}")
    if variant == 3:
        h = sum(Fraction(1, j) for j in range(1, n + 1))
        return _certify_integer(math.factorial(n) * (1 + h), f"K^3_{n}")
    raise InvalidInput(f"unknown Mansour-West variant {variant}; expected 1..3")


def f_ogf_upsilon_sum(n: int, k: int) -> int:
    """Bi-avoiders of {(1-2,1 0), (1-2,0 1)} by summing over color runs.

    A color word with s >= 2 maximal runs of lengths a_1..a_s contributes
    k (k-1)^(s-1) a_1! ... a_s!; constant words contribute k n!.  Runs are
    summed for s = 2..n.
    """
    if n == 0:
        return 1
    total = k * factorial(n)
    for s in range(2, n + 1):
        weight = k * (k - 1) ** (s - 1)
        if not weight:
            continue
        for c in compositions(n, s, positive=True):
            term = weight
            for a in c:
                term *= factorial(a)
            total += term
    return total


def f_cat(n: int) -> int:
    return catalan(n + 1)
