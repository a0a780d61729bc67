"""Exact truncated power series in one variable t.

Coefficients are Python ints, so nothing can wrap. Every series carries
its truncation degree explicitly and binary operations require the two
operands to agree on it.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import PreconditionError


def binomial(a: int, b: int) -> int:
    """Binomial coefficient that vanishes whenever a < b or b < 0."""
    if b < 0 or a < b:
        return 0
    return math.comb(a, b)


@dataclass(frozen=True)
class TruncatedSeries:
    """Power series c_0 + c_1 t + ... + c_trunc t^trunc (higher terms dropped)."""

    coeffs: tuple[int, ...]

    def __post_init__(self):
        if not self.coeffs:
            raise PreconditionError("a truncated series needs at least one coefficient")
        if not isinstance(self.coeffs, tuple):
            object.__setattr__(self, "coeffs", tuple(int(c) for c in self.coeffs))

    @property
    def trunc(self) -> int:
        return len(self.coeffs) - 1

    def coeff(self, k: int) -> int:
        if k < 0:
            return 0
        if k > self.trunc:
            raise PreconditionError(f"coefficient {k} lies beyond truncation {self.trunc}")
        return self.coeffs[k]

    def _check(self, other: TruncatedSeries):
        if not isinstance(other, TruncatedSeries):
            raise TypeError(f"expected TruncatedSeries, got {type(other).__name__}")
        if other.trunc != self.trunc:
            raise PreconditionError(
                f"truncation mismatch: {self.trunc} vs {other.trunc}"
            )

    def __add__(self, other):
        self._check(other)
        return TruncatedSeries(tuple(x + y for x, y in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other):
        self._check(other)
        return TruncatedSeries(tuple(x - y for x, y in zip(self.coeffs, other.coeffs)))

    def __neg__(self):
        return TruncatedSeries(tuple(-c for c in self.coeffs))

    def __mul__(self, other):
        if isinstance(other, int):
            return TruncatedSeries(tuple(other * c for c in self.coeffs))
        return mul(self, other)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise PreconditionError("negative powers are not supported")
        out = one(self.trunc)
        for _ in range(k):
            out = mul(out, self)
        return out

    def shift(self, k: int) -> TruncatedSeries:
        """Multiply by t^k."""
        if k < 0:
            raise PreconditionError("negative shifts are not supported")
        body = (0,) * k + self.coeffs
        return TruncatedSeries(body[: self.trunc + 1])

    def is_weakly_increasing(self) -> bool:
        return all(x <= y for x, y in zip(self.coeffs, self.coeffs[1:]))


def from_coeffs(coeffs: Iterable[int], trunc: int) -> TruncatedSeries:
    """Pad with zeros or truncate `coeffs` to exactly trunc + 1 entries."""
    c = list(coeffs)[: trunc + 1]
    c += [0] * (trunc + 1 - len(c))
    return TruncatedSeries(tuple(c))


def one(trunc: int) -> TruncatedSeries:
    return from_coeffs([1], trunc)


def monomial(k: int, trunc: int, scale: int = 1) -> TruncatedSeries:
    """scale * t^k."""
    if k < 0:
        raise PreconditionError("exponent must be nonnegative")
    c = [0] * (trunc + 1)
    if k <= trunc:
        c[k] = scale
    return TruncatedSeries(tuple(c))


def one_minus_t_pow(a: int, trunc: int) -> TruncatedSeries:
    """1 - t^a."""
    if a < 1:
        raise PreconditionError(f"degree must be positive, got {a}")
    return one(trunc) - monomial(a, trunc)


def geometric(order: int, trunc: int) -> TruncatedSeries:
    """1/(1-t)^order; coefficient k is binom(order-1+k, k)."""
    if order < 1:
        raise PreconditionError(f"order must be at least 1, got {order}")
    return TruncatedSeries(tuple(binomial(order - 1 + k, k) for k in range(trunc + 1)))


def p_k(k: int, trunc: int) -> TruncatedSeries:
    """1 + t + ... + t^k."""
    if k < 0:
        raise PreconditionError("k must be nonnegative")
    return TruncatedSeries(tuple(1 if j <= k else 0 for j in range(trunc + 1)))


def mul(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    """Cauchy product, truncated at the shared degree."""
    if a.trunc != b.trunc:
        raise PreconditionError(f"truncation mismatch: {a.trunc} vs {b.trunc}")
    T = a.trunc
    if sum(1 for x in a.coeffs if x) > sum(1 for x in b.coeffs if x):
        a, b = b, a
    out = [0] * (T + 1)
    for i, x in enumerate(a.coeffs):
        if x == 0:
            continue
        for j in range(T + 1 - i):
            out[i + j] += x * b.coeffs[j]
    return TruncatedSeries(tuple(out))


def product(factors: Iterable[TruncatedSeries], trunc: int) -> TruncatedSeries:
    out = one(trunc)
    for f in factors:
        out = mul(out, f)
    return out


def _check_degs(degs: Sequence[int]):
    for a in degs:
        if a < 1:
            raise PreconditionError(f"degrees must be positive, got {list(degs)}")


def ci_quotient_series(n: int, degs: Sequence[int], trunc: int) -> TruncatedSeries:
    """prod_i (1 - t^{a_i}) / (1 - t)^{n+1}, the Hilbert series of a
    complete intersection of the given degrees in n+1 variables."""
    if n < 1:
        raise PreconditionError("n must be positive")
    _check_degs(degs)
    # multiply 1/(1-t)^{n+1} by each sparse factor (1 - t^a) in place
    c = [binomial(n + k, k) for k in range(trunc + 1)]
    for a in degs:
        for k in range(trunc, a - 1, -1):
            c[k] -= c[k - a]
    return TruncatedSeries(tuple(c))


def inclusion_exclusion_coeff(n: int, e: int, degs: Sequence[int]) -> int:
    """Coefficient of t^e in prod(1 - t^b)/(1-t)^{n+1}, as the signed sum of
    binom(n + e - sum_I b, n) over subsets I of the degrees.

    Independent of the series arithmetic; used to cross-check it.
    """
    if n < 1:
        raise PreconditionError("n must be positive")
    if e < 0:
        raise PreconditionError("e must be nonnegative")
    _check_degs(degs)
    total = 0
    for size in range(len(degs) + 1):
        sign = -1 if size % 2 else 1
        for subset in itertools.combinations(degs, size):
            total += sign * binomial(n + e - sum(subset), n)
    return total
