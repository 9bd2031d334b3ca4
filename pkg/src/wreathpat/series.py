"""Truncated power series with exact rational coefficients."""
from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable, Sequence

from .core import InvalidInput
from .closed_forms import AvSequence, f_product

OGF = "ogf"
EGF = "egf"
DEFAULT_ORDER = 16


class TruncatedSeries:
    """sum_{i <= order} c_i t^i, known only through ``order``.

    ``kind`` tags whether the coefficients are read as an ordinary or an
    exponential generating function; the arithmetic itself is the same, but
    series of different kinds are never combined.
    """

    __slots__ = ("coeffs", "kind")

    def __init__(self, coeffs: Iterable, kind: str = OGF, order: int | None = None):
        if kind not in (OGF, EGF):
            raise InvalidInput(f"kind must be 'ogf' or 'egf', got {kind!r}")
        cs = [Fraction(c) for c in coeffs]
        if order is not None:
            cs = (cs + [Fraction(0)] * (order + 1))[: order + 1]
        if not cs:
            raise InvalidInput("a truncated series needs at least one coefficient")
        self.coeffs: tuple[Fraction, ...] = tuple(cs)
        self.kind = kind

    @classmethod
    def from_counts(cls, counts: Sequence[int], kind: str = EGF) -> TruncatedSeries:
        """Generating function of a counting sequence (divides by n! for EGFs)."""
        if kind == EGF:
            return cls((Fraction(c, math.factorial(i)) for i, c in enumerate(counts)), EGF)
        return cls(counts, OGF)

    def counts(self) -> list[Fraction]:
        """Inverse of :meth:`from_counts`."""
        if self.kind == EGF:
            return [c * math.factorial(i) for i, c in enumerate(self.coeffs)]
        return list(self.coeffs)

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, i: int) -> Fraction:
        return self.coeffs[i]

    def __len__(self) -> int:
        return len(self.coeffs)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return self.kind == other.kind and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash((self.kind, self.coeffs))

    def __repr__(self) -> str:
        body = ", ".join(str(c) for c in self.coeffs)
        return f"TruncatedSeries([{body}], kind={self.kind!r})"

    def truncate(self, order: int) -> TruncatedSeries:
        return TruncatedSeries(self.coeffs[: order + 1], self.kind)

    def _coerce(self, other) -> TruncatedSeries:
        if isinstance(other, TruncatedSeries):
            if other.kind != self.kind:
                raise InvalidInput(f"cannot combine {self.kind} and {other.kind} series")
            return other
        return TruncatedSeries([other], self.kind, order=self.order)

    def __add__(self, other) -> TruncatedSeries:
        o = self._coerce(other)
        m = min(self.order, o.order)
        return TruncatedSeries((a + b for a, b in zip(self.coeffs[: m + 1], o.coeffs)), self.kind)

    __radd__ = __add__

    def __neg__(self) -> TruncatedSeries:
        return TruncatedSeries((-c for c in self.coeffs), self.kind)

    def __sub__(self, other) -> TruncatedSeries:
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> TruncatedSeries:
        return self._coerce(other) - self

    def __mul__(self, other) -> TruncatedSeries:
        if not isinstance(other, TruncatedSeries):
            c = Fraction(other)
            return TruncatedSeries((a * c for a in self.coeffs), self.kind)
        o = self._coerce(other)
        m = min(self.order, o.order)
        out = [Fraction(0)] * (m + 1)
        for i, a in enumerate(self.coeffs[: m + 1]):
            if not a:
                continue
            for j, b in enumerate(o.coeffs[: m + 1 - i]):
                out[i + j] += a * b
        return TruncatedSeries(out, self.kind)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> TruncatedSeries:
        return series_pow(self, k)

    def __truediv__(self, other) -> TruncatedSeries:
        if not isinstance(other, TruncatedSeries):
            return self * (Fraction(1) / Fraction(other))
        return self * series_reciprocal(self._coerce(other))

    def is_zero(self) -> bool:
        return not any(self.coeffs)


def series_add(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    return a + b


def series_mul(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    return a * b


def series_pow(s: TruncatedSeries, k: int) -> TruncatedSeries:
    if k < 0:
        return series_pow(series_reciprocal(s), -k)
    result = TruncatedSeries([1], s.kind, order=s.order)
    base = s
    while k:
        if k & 1:
            result = result * base
        k >>= 1
        if k:
            base = base * base
    return result


def series_reciprocal(s: TruncatedSeries) -> TruncatedSeries:
    c0 = s.coeffs[0]
    if c0 == 0:
        raise InvalidInput("reciprocal needs a nonzero constant term")
    inv = [Fraction(1) / c0]
    for n in range(1, s.order + 1):
        acc = sum(s.coeffs[i] * inv[n - i] for i in range(1, n + 1))
        inv.append(-acc / c0)
    return TruncatedSeries(inv, s.kind)


def series_derivative(s: TruncatedSeries) -> TruncatedSeries:
    """Formal d/dt; the order drops by one (a constant maps to the zero series)."""
    if s.order == 0:
        return TruncatedSeries([0], s.kind)
    return TruncatedSeries((i * c for i, c in enumerate(s.coeffs) if i), s.kind)


def monomial(power: int, order: int, kind: str = OGF, coeff=1) -> TruncatedSeries:
    cs = [0] * (order + 1)
    if power <= order:
        cs[power] = coeff
    return TruncatedSeries(cs, kind)


def exp_series(order: int, scale=1, kind: str = EGF) -> TruncatedSeries:
    """e^{scale t} through ``order``."""
    scale = Fraction(scale)
    return TruncatedSeries((scale**i / math.factorial(i) for i in range(order + 1)), kind)


# -- generating functions for specific avoidance classes --------------------

def pat2_coeffs(n_max: int) -> AvSequence:
    """A_0..A_{n_max} from A_{n+1} = n! sum_{i<=n} A_i / i! + (n+1) A_n, A_0 = 1."""
    A = [Fraction(1)]
    for n in range(n_max):
        s = sum(A[i] / math.factorial(i) for i in range(n + 1))
        A.append(math.factorial(n) * s + (n + 1) * A[n])
    values = []
    for a in A:
        if a.denominator != 1:
            raise ArithmeticError(f"recursion produced a non-integer {a}")
        values.append(a.numerator)
    return AvSequence(values, "bi-avoiders of (1-2,0 1) in C_2 wr S_n")


def pat2_ode_residual(order: int = DEFAULT_ORDER) -> TruncatedSeries:
    """(1-x)^2 A'(x) - (2-x) A(x) for the EGF A of :func:`pat2_coeffs`.

    A is built through ``order + 1`` so the residual is exact through ``order``.
    """
    A = TruncatedSeries.from_counts(pat2_coeffs(order + 1).values, EGF)
    x = monomial(1, order, EGF)
    one = monomial(0, order, EGF)
    lhs = (one - x) * (one - x) * series_derivative(A)
    return lhs - (2 * one - x) * A.truncate(order)


def factorial_ogf(order: int) -> TruncatedSeries:
    """C(t) = sum_{n >= 1} n! t^n."""
    return TruncatedSeries([0] + [math.factorial(n) for n in range(1, order + 1)], OGF)


def ogf_upsilon_coeffs(k: int, n_max: int) -> AvSequence:
    """Coefficients of (1 + C(t)) / (1 - (k-1) C(t)) through t^{n_max}."""
    C = factorial_ogf(n_max)
    one = monomial(0, n_max, OGF)
    s = (one + C) / (one - (k - 1) * C)
    values = []
    for c in s.coeffs:
        if c.denominator != 1:
            raise ArithmeticError(f"non-integer coefficient {c}")
        values.append(c.numerator)
    return AvSequence(values, f"bi-avoiders of (1-2,1 0), (1-2,0 1) in C_{k} wr S_n")


def egf_product_coeffs(A: AvSequence | Sequence[int], k: int, n_max: int) -> list[Fraction]:
    """n! [t^n] (sum_m A_m t^m / m!)^k for n = 0..n_max."""
    vals = A.values if isinstance(A, AvSequence) else list(A)
    if len(vals) <= n_max:
        raise InvalidInput(f"sequence has {len(vals)} terms, need {n_max + 1}")
    egf = TruncatedSeries.from_counts(vals[: n_max + 1], EGF)
    return series_pow(egf, k).counts()


def egf_product_check(A: AvSequence | Sequence[int], k: int, n_max: int) -> bool:
    """Does the k-th EGF power agree with the multinomial convolution for all n <= n_max?"""
    powered = egf_product_coeffs(A, k, n_max)
    return all(powered[n] == f_product(n, k, A) for n in range(n_max + 1))
