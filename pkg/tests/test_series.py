import itertools
import math

import pytest
from hypothesis import given, settings, strategies as st

from strengthcheck.errors import PreconditionError
from strengthcheck.series import (
    TruncatedSeries,
    binomial,
    ci_quotient_series,
    from_coeffs,
    geometric,
    inclusion_exclusion_coeff,
    mul,
    one_minus_t_pow,
    p_k,
    product,
)


def naive_poly_coeff(n, e, degs):
    """Brute force: count monomials of degree e in n+1 variables, then apply
    each (1 - t^b) factor by expanding the product term by term."""
    # coefficient of t^k in 1/(1-t)^{n+1} is the number of degree-k monomials
    def monomial_count(k):
        if k < 0:
            return 0
        return sum(1 for _ in itertools.combinations_with_replacement(range(n + 1), k))

    total = 0
    for signs in itertools.product((0, 1), repeat=len(degs)):
        shift = sum(b for b, s in zip(degs, signs) if s)
        total += (-1) ** sum(signs) * monomial_count(e - shift)
    return total


@pytest.mark.parametrize("a,b,expected", [(7, 2, 21), (3, 5, 0), (0, 0, 1), (5, -1, 0), (-2, 1, 0), (-1, 0, 0)])
def test_binomial(a, b, expected):
    assert binomial(a, b) == expected


def test_binomial_large_is_exact():
    assert binomial(200, 100) == math.comb(200, 100)


def test_geometric():
    assert geometric(3, 5).coeff(5) == 21
    assert geometric(1, 4).coeffs == (1, 1, 1, 1, 1)
    assert geometric(2, 3).coeffs == (1, 2, 3, 4)
    with pytest.raises(PreconditionError):
        geometric(0, 3)


def test_p_k():
    assert p_k(2, 5).coeffs == (1, 1, 1, 0, 0, 0)
    assert p_k(0, 3).coeffs == (1, 0, 0, 0)
    assert p_k(5, 2).coeffs == (1, 1, 1)


def test_mul_examples():
    assert mul(p_k(1, 3), p_k(1, 3)).coeffs == (1, 2, 1, 0)
    assert mul(geometric(1, 4), one_minus_t_pow(1, 4)).coeffs == (1, 0, 0, 0, 0)
    # 4 + 5 + 6
    assert mul(p_k(2, 5), geometric(2, 5)).coeff(5) == 15


def test_mul_truncation_mismatch():
    with pytest.raises(PreconditionError):
        mul(p_k(1, 3), p_k(1, 4))
    with pytest.raises(PreconditionError):
        p_k(1, 3) + p_k(1, 2)


def test_series_invariants():
    s = from_coeffs([1, 2], 4)
    assert len(s.coeffs) == s.trunc + 1 == 5
    with pytest.raises(PreconditionError):
        TruncatedSeries(())
    with pytest.raises(PreconditionError):
        s.coeff(5)
    assert s.shift(2).coeffs == (0, 0, 1, 2, 0)


def test_ci_quotient_series_examples():
    assert ci_quotient_series(3, (1, 1), 2).coeff(2) == 3
    assert ci_quotient_series(2, (4,), 5).coeff(5) == 18
    for k in range(8):
        assert ci_quotient_series(1, (), 7).coeff(k) == k + 1


def test_inclusion_exclusion_examples():
    assert inclusion_exclusion_coeff(2, 5, (4,)) == 18
    # coeff_5 of 1/(1-t)^2 is 6: binom(8,3) - 2 binom(7,3) + binom(6,3) = 56 - 70 + 20
    assert inclusion_exclusion_coeff(3, 5, (1, 1)) == 6
    for n in range(1, 5):
        for e in range(6):
            assert inclusion_exclusion_coeff(n, e, ()) == binomial(n + e, n)


def test_naive_oracle_agrees_on_small_box():
    for n in (1, 2, 3):
        for degs in [(), (1,), (2, 3), (1, 1, 2)]:
            s = ci_quotient_series(n, degs, 6)
            for e in range(7):
                assert s.coeff(e) == naive_poly_coeff(n, e, degs)


def test_identity_exhaustive():
    for n in range(1, 7):
        for k in range(5):
            for degs in itertools.product(range(1, 7), repeat=k):
                s = ci_quotient_series(n, degs, 12)
                for e in range(13):
                    assert s.coeff(e) == inclusion_exclusion_coeff(n, e, degs)


def test_increasing_coefficients():
    # P_inf^{l+1} * prod P_{k_i} has weakly increasing coefficients
    T = 12
    for ell in range(5):
        for s in range(4):
            for ks in itertools.combinations_with_replacement(range(7), s):
                f = product([p_k(k, T) for k in ks], T)
                assert mul(geometric(ell + 1, T), f).is_weakly_increasing()


def test_ci_series_nonnegative_when_few_degrees():
    for n in range(1, 5):
        for k in range(n + 1):
            for degs in itertools.combinations_with_replacement(range(1, 5), k):
                assert min(ci_quotient_series(n, degs, 10).coeffs) >= 0


def series_strategy(trunc, lo=-50):
    return st.lists(st.integers(lo, 50), min_size=trunc + 1, max_size=trunc + 1).map(
        lambda c: TruncatedSeries(tuple(c))
    )


@given(st.integers(0, 8).flatmap(lambda T: st.tuples(series_strategy(T), series_strategy(T), series_strategy(T))))
def test_mul_commutative_associative(abc):
    a, b, c = abc
    assert mul(a, b) == mul(b, a)
    assert mul(mul(a, b), c) == mul(a, mul(b, c))


@settings(max_examples=200)
@given(
    st.integers(0, 8).flatmap(
        lambda T: st.tuples(
            series_strategy(T, lo=0),
            series_strategy(T, lo=0),
            st.lists(st.integers(0, 20), min_size=T + 1, max_size=T + 1),
        )
    )
)
def test_comparison_lemma(data):
    f, h, extra = data
    # g dominates h coefficientwise
    g = TruncatedSeries(tuple(x + y for x, y in zip(h.coeffs, extra)))
    fg, fh = mul(f, g), mul(f, h)
    assert all(x >= y for x, y in zip(fg.coeffs, fh.coeffs))
