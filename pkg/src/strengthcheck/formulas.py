"""Closed-form dimension counts for secant and join varieties of
reducible forms, and the objective whose minimization settles which
join has the largest dimension.

Notation: forms of degree d in n+1 variables; a profile (a_1 <= ... <= a_r)
names the join of the varieties X_{a_i} of forms with a degree-a_i factor.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Optional, Sequence

from .errors import InvariantViolation, PreconditionError, UnsupportedDegreeError
from .series import (
    binomial,
    ci_quotient_series,
    geometric,
    monomial,
    mul,
    one,
    one_minus_t_pow,
    p_k,
    product,
)

# Smallest degree covered by the minimality theorem; below it the formulas
# still evaluate but results are flagged.
MAIN_THEOREM_MIN_DEGREE = 5


@dataclass(frozen=True)
class JoinProfile:
    """Degree d, n (variables minus one) and the sorted factor degrees."""

    d: int
    n: int
    degs: tuple[int, ...]

    def __post_init__(self):
        if self.d < 2:
            raise PreconditionError(f"d must be at least 2, got {self.d}")
        if self.n < 1:
            raise PreconditionError(f"n must be at least 1, got {self.n}")
        degs = tuple(sorted(int(a) for a in self.degs))
        half = self.d // 2
        if any(a < 1 or a > half for a in degs):
            raise PreconditionError(
                f"factor degrees must lie in [1, {half}] for d={self.d}, got {list(degs)}"
            )
        object.__setattr__(self, "degs", degs)

    @property
    def r(self) -> int:
        return len(self.degs)

    def multiplicity(self, j: int) -> int:
        return Counter(self.degs)[j]

    @property
    def ell_half(self) -> int:
        """Number of factor degrees equal to d/2 (always 0 for odd d)."""
        if self.d % 2:
            return 0
        return self.multiplicity(self.d // 2)

    @property
    def m(self) -> int:
        return self.n - self.multiplicity(1)

    @property
    def all_ones(self) -> bool:
        return all(a == 1 for a in self.degs)

    @property
    def outside_main_theorem(self) -> bool:
        return self.d < MAIN_THEOREM_MIN_DEGREE

    def __str__(self):
        return f"(d={self.d}, n={self.n}, degs={list(self.degs)})"


def generic_slice_rank(d: int, n: int) -> int:
    """Slice rank of a general form: min r with r(n+1-r) >= binom(n-r+d, d)."""
    if d < 3:
        raise UnsupportedDegreeError(f"general slice rank formula needs d >= 3, got {d}")
    if n < 1:
        raise PreconditionError(f"n must be at least 1, got {n}")
    r = 0
    while r * (n + 1 - r) < binomial(n - r + d, d):
        r += 1
    return r


def sigma_r_x1_codim(d: int, n: int, r: int) -> int:
    """Codimension of the r-th secant variety of X_1 for 1 <= r < slrk."""
    s = generic_slice_rank(d, n)
    if not 1 <= r < s:
        raise PreconditionError(f"need 1 <= r < {s} for d={d}, n={n}; got r={r}")
    return binomial(n - r + d, d) - r * (n + 1 - r)


def hl_codim(d: int, n: int, r: int) -> int:
    """coeff_d of (1 - t^{d-1})^r / (1-t)^{n+1-r}.

    Codimension of the degree-d piece of an ideal of r general forms of
    degree d-1 in n+1-r variables (Hochster-Laksov).
    """
    if d < 3:
        raise UnsupportedDegreeError(f"d must be at least 3, got {d}")
    if not 1 <= r <= n:
        raise PreconditionError(f"need 1 <= r <= n={n}; got r={r}")
    s = product([one_minus_t_pow(d - 1, d)] * r, d)
    return mul(s, geometric(n + 1 - r, d)).coeff(d)


def ci_dimension(n: int, degs: Sequence[int]) -> int:
    """Dimension of the family of complete intersections of the given degrees in P^n."""
    degs = sorted(degs)
    if not 1 <= len(degs) <= n:
        raise PreconditionError(f"need 1 <= len(degs) <= n={n}; got {len(degs)}")
    s = ci_quotient_series(n, degs, max(degs))
    return sum(s.coeff(a) for a in degs)


def join_series_coeff(profile: JoinProfile) -> int:
    """coeff_d of prod_i (1-t^{a_i})(1-t^{d-a_i}) / (1-t)^{n+1}."""
    d = profile.d
    full = list(profile.degs) + [d - a for a in profile.degs]
    return ci_quotient_series(profile.n, full, d).coeff(d)


def join_dim_upper_bound(profile: JoinProfile) -> int:
    """Upper bound on dim J_{a_1..a_r}; exact for all-ones profiles with r < slrk."""
    if profile.r >= profile.n:
        raise PreconditionError(f"bound requires r < n, got r={profile.r}, n={profile.n}")
    d, n = profile.d, profile.n
    return (
        binomial(n + d, d)
        - join_series_coeff(profile)
        + binomial(profile.ell_half, 2)
        - 1
    )


def f_value(profile: JoinProfile) -> int:
    """The objective F(a_1, ..., a_r); smaller F means a larger join."""
    return join_series_coeff(profile) - binomial(profile.ell_half, 2)


# ---------------------------------------------------------------------------
# Profiles with entries in {1, 2}: A and its iterated differences.


@dataclass(frozen=True)
class AbcdeRecord:
    d: int
    n: int
    l1: int
    l2: int
    A: int
    B: Optional[int] = None
    C: Optional[int] = None
    D: Optional[int] = None
    E: Optional[int] = None

    def as_dict(self) -> dict:
        return {k: getattr(self, k) for k in ("d", "n", "l1", "l2", "A", "B", "C", "D", "E")}


def _check_abcde(d: int, n: int, l1: int, l2: int):
    if d < MAIN_THEOREM_MIN_DEGREE:
        raise UnsupportedDegreeError(f"A..E are defined for d >= 5, got {d}")
    if l1 < 0 or l2 < 0:
        raise PreconditionError("l1 and l2 must be nonnegative")
    if l1 + l2 >= n:
        raise PreconditionError(f"need l1 + l2 < n; got {l1} + {l2} >= {n}")


def a_by_definition(d: int, n: int, l1: int, l2: int) -> int:
    """A_{l1,l2} straight from its defining series
    coeff_d((1-t)^l1 (1-t^2)^l2 / (1-t)^{n+1} * (1 - l1 t^{d-1} - l2 t^{d-2}))."""
    _check_abcde(d, n, l1, l2)
    base = ci_quotient_series(n, [1] * l1 + [2] * l2, d)
    tail = one(d) - monomial(d - 1, d, l1) - monomial(d - 2, d, l2)
    return mul(base, tail).coeff(d)


def _difference(d, n, l1, l2, order):
    """Iterated difference of A in direction (-1, +1); order 0 is A itself."""
    if order == 0:
        return a_by_definition(d, n, l1, l2)
    return (_difference(d, n, l1 - 1, l2 + 1, order - 1)
            - _difference(d, n, l1, l2, order - 1))


def _mixed_coeff(k: int, m: int, l2: int) -> int:
    # coeff_k of P_inf^{m+1-l2} * P_1^{l2}
    if k < 0:
        return 0
    s = mul(geometric(m + 1 - l2, k), p_k(1, k) ** l2)
    return s.coeff(k)


def abcde(d: int, n: int, l1: int, l2: int) -> AbcdeRecord:
    """Closed forms of A, B, C, D, E at (l1, l2), with m = n - l1.

    B..E are None where undefined (B needs l1 >= 1, C l1 >= 2, D l1 >= 3,
    E l1 >= 4). Every present value is recomputed as the defining finite
    difference of A and an InvariantViolation is raised on mismatch.
    """
    _check_abcde(d, n, l1, l2)
    m = n - l1
    c = lambda k: _mixed_coeff(k, m, l2)  # noqa: E731

    closed = {"A": c(d) - l2 * binomial(m + 2, 2) - l1 * (m + 1) + l2 * l2}
    if l1 >= 1:
        closed["B"] = c(d - 1) - binomial(m + 2, 2) - l2 * m - l1 + 1
    if l1 >= 2:
        closed["C"] = c(d - 2) - 2 * (m + 1) - l2
    if l1 >= 3:
        closed["D"] = c(d - 3) - 3
    if l1 >= 4:
        closed["E"] = c(d - 4)

    for order, name in enumerate("ABCDE"):
        if name not in closed:
            break
        diff = _difference(d, n, l1, l2, order)
        if diff != closed[name]:
            raise InvariantViolation(
                f"{name}_{{{l1},{l2}}} at d={d}, n={n}: closed form {closed[name]} "
                f"!= finite difference {diff}"
            )
    return AbcdeRecord(d=d, n=n, l1=l1, l2=l2, **closed)
