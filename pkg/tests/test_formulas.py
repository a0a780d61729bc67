import pytest

from strengthcheck.errors import InvariantViolation, PreconditionError, UnsupportedDegreeError
from strengthcheck.formulas import (
    JoinProfile,
    a_by_definition,
    abcde,
    ci_dimension,
    f_value,
    generic_slice_rank,
    hl_codim,
    join_dim_upper_bound,
    sigma_r_x1_codim,
)
from strengthcheck.series import binomial, inclusion_exclusion_coeff


def slrk_scan(d, n):
    for r in range(n + 2):
        if r * (n + 1 - r) >= binomial(n - r + d, d):
            return r


def ie_join_coeff(d, n, degs):
    full = list(degs) + [d - a for a in degs]
    return inclusion_exclusion_coeff(n, d, full)


def ie_ell_half(d, degs):
    return sum(1 for a in degs if 2 * a == d)


def test_profile_canonicalization():
    p = JoinProfile(6, 4, (3, 1, 2))
    assert p.degs == (1, 2, 3)
    assert p.r == 3 and p.m == 3
    assert p.ell_half == 1
    assert JoinProfile(7, 4, (3, 3)).ell_half == 0
    assert JoinProfile(4, 3, (1,)).outside_main_theorem
    for bad in [(0,), (4,)]:
        with pytest.raises(PreconditionError):
            JoinProfile(7, 4, bad)
    with pytest.raises(PreconditionError):
        JoinProfile(1, 4, ())


@pytest.mark.parametrize("d,n,expected", [(3, 2, 2), (5, 3, 3), (6, 4, 4)])
def test_generic_slice_rank(d, n, expected):
    assert generic_slice_rank(d, n) == expected == slrk_scan(d, n)


def test_generic_slice_rank_range():
    for d in range(3, 13):
        for n in range(1, 13):
            s = generic_slice_rank(d, n)
            assert s == slrk_scan(d, n)
            assert s <= n


def test_generic_slice_rank_rejects_low_degree():
    with pytest.raises(UnsupportedDegreeError):
        generic_slice_rank(2, 4)


@pytest.mark.parametrize("d,n,r,expected", [(5, 3, 1, 18), (5, 3, 2, 2), (6, 4, 2, 22)])
def test_codims(d, n, r, expected):
    assert sigma_r_x1_codim(d, n, r) == expected
    assert hl_codim(d, n, r) == expected


def test_sigma_precondition():
    with pytest.raises(PreconditionError):
        sigma_r_x1_codim(5, 3, 3)
    with pytest.raises(PreconditionError):
        sigma_r_x1_codim(5, 3, 0)


def test_hl_matches_secant_codim():
    for d in range(3, 13):
        for n in range(1, 13):
            for r in range(1, generic_slice_rank(d, n)):
                assert hl_codim(d, n, r) == sigma_r_x1_codim(d, n, r)


@pytest.mark.parametrize("n,degs,expected", [(2, (1,), 2), (3, (2,), 9), (2, (1, 1), 2)])
def test_ci_dimension(n, degs, expected):
    assert ci_dimension(n, degs) == expected


def test_ci_dimension_precondition():
    with pytest.raises(PreconditionError):
        ci_dimension(2, (1, 1, 1))
    with pytest.raises(PreconditionError):
        ci_dimension(2, ())


@pytest.mark.parametrize(
    "d,n,degs,expected", [(5, 3, (1, 1), 53), (5, 3, (2, 2), 51), (6, 4, (3, 3), 134)]
)
def test_join_bound(d, n, degs, expected):
    assert join_dim_upper_bound(JoinProfile(d, n, degs)) == expected
    oracle = binomial(n + d, d) - ie_join_coeff(d, n, degs) + binomial(ie_ell_half(d, degs), 2) - 1
    assert oracle == expected


def test_join_bound_requires_r_below_n():
    with pytest.raises(PreconditionError):
        join_dim_upper_bound(JoinProfile(5, 2, (1, 1)))


@pytest.mark.parametrize(
    "d,n,degs,expected",
    [(5, 3, (1, 1), 2), (5, 3, (1, 2), 3), (5, 3, (2, 2), 4), (6, 4, (3, 3), 75)],
)
def test_f_value(d, n, degs, expected):
    assert f_value(JoinProfile(d, n, degs)) == expected
    assert ie_join_coeff(d, n, degs) - binomial(ie_ell_half(d, degs), 2) == expected


def test_f_alternate_form():
    # F = coeff_d( prod(1-t^a)/(1-t)^{n+1} * (1 - sum t^{d-a}) )
    import itertools
    for d in range(3, 10):
        for n in range(2, 7):
            for r in range(1, n):
                for degs in itertools.combinations_with_replacement(range(1, d // 2 + 1), r):
                    alt = inclusion_exclusion_coeff(n, d, degs) - sum(
                        inclusion_exclusion_coeff(n, a, degs) for a in degs
                    )
                    assert f_value(JoinProfile(d, n, degs)) == alt


def test_upper_bound_equals_ci_route():
    # bound = dim CI + binom(n+d,d) - coeff_d(CI series) - 1 (no correction
    # needed once the binom(l_{d/2}, 2) term is accounted for)
    import itertools
    for d in range(3, 10):
        for n in range(2, 7):
            for r in range(1, n):
                for degs in itertools.combinations_with_replacement(range(1, d // 2 + 1), r):
                    p = JoinProfile(d, n, degs)
                    via_ci = ci_dimension(n, degs) + binomial(n + d, d) - inclusion_exclusion_coeff(n, d, degs) - 1
                    assert join_dim_upper_bound(p) == via_ci


def test_all_ones_f_is_hl_and_bound_is_exact():
    for d in range(5, 13):
        for n in range(1, 13):
            for r in range(1, generic_slice_rank(d, n)):
                p = JoinProfile(d, n, (1,) * r)
                assert f_value(p) == hl_codim(d, n, r)
                assert join_dim_upper_bound(p) == binomial(n + d, d) - 1 - sigma_r_x1_codim(d, n, r)


@pytest.mark.parametrize("l1,l2,expected", [(2, 0, 2), (1, 1, 3), (0, 2, 4)])
def test_abcde_spot_values(l1, l2, expected):
    rec = abcde(5, 3, l1, l2)
    assert rec.A == expected
    assert rec.A == f_value(JoinProfile(5, 3, (1,) * l1 + (2,) * l2))


def test_abcde_absent_fields():
    rec = abcde(5, 3, 1, 1)
    assert rec.B is not None and rec.C is None and rec.D is None and rec.E is None
    rec = abcde(5, 3, 0, 2)
    assert rec.B is None


def test_abcde_e_values():
    # E = coeff_1(P_inf^{m+1-l2} P_1^{l2}) = m + 1 when d = 5
    assert abcde(5, 6, 4, 0).E == 3
    assert abcde(5, 6, 4, 1).E == 3
    assert abcde(5, 7, 4, 0).E == 4


def test_abcde_matches_f_on_one_two_profiles():
    for d in range(5, 11):
        for n in range(1, 11):
            for l1 in range(n):
                for l2 in range(n - l1):
                    rec = abcde(d, n, l1, l2)
                    assert rec.A == f_value(JoinProfile(d, n, (1,) * l1 + (2,) * l2))
                    assert rec.A == a_by_definition(d, n, l1, l2)


def test_abcde_preconditions():
    with pytest.raises(UnsupportedDegreeError):
        abcde(4, 3, 1, 0)
    with pytest.raises(PreconditionError):
        abcde(5, 3, 2, 1)
    with pytest.raises(PreconditionError):
        abcde(5, 3, -1, 1)


def test_abcde_detects_mismatch(monkeypatch):
    import strengthcheck.formulas as fm

    real = fm.a_by_definition
    monkeypatch.setattr(fm, "a_by_definition", lambda d, n, l1, l2: real(d, n, l1, l2) + (l2 == 1))
    with pytest.raises(InvariantViolation):
        fm.abcde(5, 3, 1, 0)
