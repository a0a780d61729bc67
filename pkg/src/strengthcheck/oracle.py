"""Randomized dimension oracle over a prime field.

By Terracini's lemma the join J_{a_1..a_r} has dimension
dim (g_1, h_1, ..., g_r, h_r)_d - 1 for general g_i, h_i of degrees a_i and
d - a_i. Here "general" is realized by sampling uniform coefficients in
F_p, and the graded piece is measured as the rank of a Macaulay matrix.
Ranks over F_p can only drop relative to characteristic zero, so the
sampled value is a lower bound that agrees with the true value outside a
proper closed set of bad choices.

Monomials of a fixed degree are ordered graded-lexicographically,
x_0^deg first. Randomness comes from numpy's PCG64 generator
(``numpy.random.default_rng``).
"""

from __future__ import annotations

import itertools
import math
from dataclasses import asdict, dataclass, field
from functools import lru_cache
from typing import Optional, Sequence

import numpy as np

from .errors import BoundViolation, PreconditionError
from .formulas import (
    JoinProfile,
    generic_slice_rank,
    hl_codim,
    join_dim_upper_bound,
)
from .series import binomial, ci_quotient_series

DEFAULT_P = 2147483647
DEFAULT_TRIALS = 3
DEFAULT_SEED = 0


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    for q in range(3, math.isqrt(p) + 1, 2):
        if p % q == 0:
            return False
    return True


def _check_prime(p: int):
    # int64 products of two residues must not overflow
    if not is_prime(p) or p >= 2**31:
        raise PreconditionError(f"p must be a prime below 2^31, got {p}")


@lru_cache(maxsize=None)
def monomials(n: int, deg: int) -> tuple[tuple[int, ...], ...]:
    """Exponent vectors of degree `deg` in n+1 variables, graded-lex order."""
    out = []
    for combo in itertools.combinations_with_replacement(range(n + 1), deg):
        e = [0] * (n + 1)
        for v in combo:
            e[v] += 1
        out.append(tuple(e))
    out.sort(reverse=True)
    return tuple(out)


@lru_cache(maxsize=None)
def _monomial_index(n: int, deg: int) -> dict:
    return {e: i for i, e in enumerate(monomials(n, deg))}


@dataclass(frozen=True, eq=False)
class DenseForm:
    """Homogeneous polynomial over F_p; coeffs[i] multiplies monomials(n, deg)[i]."""

    n: int
    deg: int
    p: int
    coeffs: np.ndarray

    def __post_init__(self):
        c = np.asarray(self.coeffs, dtype=np.int64) % self.p
        if c.shape != (len(monomials(self.n, self.deg)),):
            raise PreconditionError(
                f"expected {len(monomials(self.n, self.deg))} coefficients, got {c.shape}"
            )
        c.setflags(write=False)
        object.__setattr__(self, "coeffs", c)

    def __eq__(self, other):
        return (
            isinstance(other, DenseForm)
            and (self.n, self.deg, self.p) == (other.n, other.deg, other.p)
            and np.array_equal(self.coeffs, other.coeffs)
        )

    def terms(self):
        for e, c in zip(monomials(self.n, self.deg), self.coeffs):
            if c:
                yield e, int(c)


def sample_form(n: int, deg: int, p: int, rng: np.random.Generator) -> DenseForm:
    """Form with every coefficient uniform in F_p."""
    if deg < 1:
        raise PreconditionError(f"degree must be positive, got {deg}")
    _check_prime(p)
    size = len(monomials(n, deg))
    return DenseForm(n, deg, p, rng.integers(0, p, size=size, dtype=np.int64))


def form_product(f: DenseForm, g: DenseForm) -> DenseForm:
    if (f.n, f.p) != (g.n, g.p):
        raise PreconditionError("forms live in different rings")
    deg = f.deg + g.deg
    index = _monomial_index(f.n, deg)
    out = np.zeros(len(index), dtype=np.int64)
    for e1, c1 in f.terms():
        for e2, c2 in g.terms():
            k = index[tuple(a + b for a, b in zip(e1, e2))]
            out[k] = (out[k] + c1 * c2) % f.p
    return DenseForm(f.n, deg, f.p, out)


@dataclass(frozen=True, eq=False)
class PrimeFieldMatrix:
    p: int
    entries: np.ndarray

    def __post_init__(self):
        _check_prime(self.p)
        a = np.asarray(self.entries, dtype=np.int64)
        if a.ndim != 2:
            raise PreconditionError("matrix must be two-dimensional")
        object.__setattr__(self, "entries", a % self.p)

    @property
    def shape(self):
        return self.entries.shape

    def rank(self) -> int:
        """Rank by Gaussian elimination with row pivoting."""
        p = self.p
        A = self.entries.copy()
        rows, cols = A.shape
        r = 0
        for c in range(cols):
            if r == rows:
                break
            nz = np.nonzero(A[r:, c])[0]
            if nz.size == 0:
                continue
            piv = r + nz[0]
            if piv != r:
                A[[r, piv]] = A[[piv, r]]
            inv = pow(int(A[r, c]), -1, p)
            A[r, c:] = (A[r, c:] * inv) % p
            below = A[r + 1:, c]
            hit = np.nonzero(below)[0] + r + 1
            if hit.size:
                f = A[hit, c][:, None]
                A[hit, c:] = (A[hit, c:] - (f * A[r, c:]) % p) % p
            r += 1
        return r


def macaulay_matrix(n: int, d: int, generators: Sequence[DenseForm], p: int) -> PrimeFieldMatrix:
    """Rows m*g for each generator g and each monomial m of degree d - deg(g);
    columns indexed by monomials(n, d)."""
    index = _monomial_index(n, d)
    rows = []
    for g in generators:
        if g.deg > d:
            raise PreconditionError(f"generator of degree {g.deg} exceeds target degree {d}")
        if g.n != n or g.p != p:
            raise PreconditionError("generator lives in a different ring")
        terms = list(g.terms())
        for mono in monomials(n, d - g.deg):
            row = np.zeros(len(index), dtype=np.int64)
            for e, c in terms:
                row[index[tuple(a + b for a, b in zip(mono, e))]] = c
            rows.append(row)
    if not rows:
        return PrimeFieldMatrix(p, np.zeros((0, len(index)), dtype=np.int64))
    return PrimeFieldMatrix(p, np.vstack(rows))


def ideal_degree_dim(n: int, d: int, generators: Sequence[DenseForm], p: int) -> int:
    """dim over F_p of the degree-d piece of the ideal the generators span."""
    _check_prime(p)
    return macaulay_matrix(n, d, generators, p).rank()


def regular_sequence_check(n: int, forms: Sequence[DenseForm], p: int, up_to_degree: int) -> bool:
    """True iff the ideal's Hilbert function matches that of a complete
    intersection of the same degrees in every degree <= up_to_degree."""
    if len(forms) > n:
        raise PreconditionError(f"at most n={n} forms can form a regular sequence here")
    if not forms:
        return True
    degs = [f.deg for f in forms]
    expected = ci_quotient_series(n, degs, up_to_degree)
    for e in range(up_to_degree + 1):
        gens = [f for f in forms if f.deg <= e]
        got = ideal_degree_dim(n, e, gens, p) if gens else 0
        if got != binomial(n + e, e) - expected.coeff(e):
            return False
    return True


@dataclass
class DimensionReport:
    profile: JoinProfile
    formula_bound: int
    oracle_value: int
    trials: int
    seed: int
    p: int
    # dimension of sigma_r(X_1) from the Hochster-Laksov count; all-ones only
    hl_value: Optional[int] = None
    trial_values: list = field(default_factory=list)

    @property
    def equality(self) -> bool:
        return self.oracle_value == self.formula_bound

    @property
    def bound_ok(self) -> bool:
        return self.oracle_value <= self.formula_bound

    @property
    def equality_expected(self) -> bool:
        """All-ones profiles with r below the general slice rank are exact."""
        pr = self.profile
        return pr.all_ones and pr.d >= 3 and pr.r < generic_slice_rank(pr.d, pr.n)

    @property
    def passed(self) -> bool:
        if not self.bound_ok:
            return False
        if self.equality_expected:
            return self.equality and self.hl_value == self.formula_bound
        return True

    def as_dict(self) -> dict:
        out = asdict(self)
        out["profile"] = {"d": self.profile.d, "n": self.profile.n, "degs": list(self.profile.degs)}
        out.update(
            equality=self.equality,
            equality_expected=self.equality_expected,
            outside_main_theorem=self.profile.outside_main_theorem,
            passed=self.passed,
        )
        return out


def profile_rng(profile: JoinProfile, seed: int) -> np.random.Generator:
    """Generator derived deterministically from the run seed and the profile,
    so profiles can be evaluated in any order or in parallel."""
    return np.random.default_rng([seed, profile.d, profile.n, profile.r, *profile.degs])


def terracini_join_dim(
    profile: JoinProfile,
    p: int = DEFAULT_P,
    trials: int = DEFAULT_TRIALS,
    seed: int = DEFAULT_SEED,
) -> DimensionReport:
    """Max over `trials` random points of dim (g_1, h_1, ..., g_r, h_r)_d - 1.

    Raises BoundViolation (carrying the report) if the sampled dimension
    exceeds join_dim_upper_bound, which the theory forbids.
    """
    if trials < 1:
        raise PreconditionError("trials must be at least 1")
    _check_prime(p)
    d, n = profile.d, profile.n
    bound = join_dim_upper_bound(profile)
    rng = profile_rng(profile, seed)
    values = []
    for _ in range(trials):
        gens = []
        for a in profile.degs:
            gens.append(sample_form(n, a, p, rng))
            gens.append(sample_form(n, d - a, p, rng))
        values.append(ideal_degree_dim(n, d, gens, p) - 1)
    hl_value = None
    if profile.all_ones and d >= 3 and 1 <= profile.r <= n:
        hl_value = binomial(n + d, d) - 1 - hl_codim(d, n, profile.r)
    report = DimensionReport(
        profile=profile,
        formula_bound=bound,
        oracle_value=max(values),
        trials=trials,
        seed=seed,
        p=p,
        hl_value=hl_value,
        trial_values=values,
    )
    if not report.bound_ok:
        raise BoundViolation(report)
    return report


def sorted_profiles(d: int, n: int, max_r: int):
    for r in range(1, max_r + 1):
        for degs in itertools.combinations_with_replacement(range(1, d // 2 + 1), r):
            yield JoinProfile(d, n, degs)


def cross_check(
    d: int,
    n: int,
    max_r: int,
    p: int = DEFAULT_P,
    trials: int = DEFAULT_TRIALS,
    seed: int = DEFAULT_SEED,
) -> list[DimensionReport]:
    """One report per sorted profile with 1 <= r <= max_r.

    Bound violations are caught and returned as failing reports; inspect
    ``report.passed``.
    """
    if max_r >= n:
        raise PreconditionError(f"max_r must be below n={n}, got {max_r}")
    reports = []
    for profile in sorted_profiles(d, n, max_r):
        try:
            reports.append(terracini_join_dim(profile, p, trials, seed))
        except BoundViolation as exc:
            reports.append(exc.report)
    return reports
