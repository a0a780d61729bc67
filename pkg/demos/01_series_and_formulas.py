"""Walk-through: truncated series and the closed-form dimension counts.

Run with ``python demos/01_series_and_formulas.py``.
"""

from strengthcheck import (
    JoinProfile,
    ci_dimension,
    ci_quotient_series,
    f_value,
    generic_slice_rank,
    geometric,
    hl_codim,
    inclusion_exclusion_coeff,
    join_dim_upper_bound,
    mul,
    p_k,
    sigma_r_x1_codim,
)

# Series are exact and carry their truncation degree.
print("1/(1-t)^3 up to t^5:", geometric(3, 5).coeffs)
print("(1+t+t^2)/(1-t)^2  :", mul(p_k(2, 5), geometric(2, 5)).coeffs)

# Hilbert series of a complete intersection of degrees (2, 3) in P^3,
# and the same coefficient via the signed binomial sum.
s = ci_quotient_series(3, (2, 3), 8)
print("CI(2,3) in P^3     :", s.coeffs)
print("coeff_8 two ways   :", s.coeff(8), inclusion_exclusion_coeff(3, 8, (2, 3)))
print("dim CI_3(2,3)      :", ci_dimension(3, (2, 3)))

# General slice rank and the codimension of sigma_r(X_1).
d, n = 6, 4
s = generic_slice_rank(d, n)
print(f"slrk for d={d}, n={n}: {s}")
for r in range(1, s):
    print(f"  r={r}: codim sigma_r(X_1) = {sigma_r_x1_codim(d, n, r)} (HL count {hl_codim(d, n, r)})")

# The join bound and the objective F for every profile with r = 2.
print(f"\nprofiles of length 2 for d={d}, n={n}:")
for degs in [(1, 1), (1, 2), (1, 3), (2, 2), (2, 3), (3, 3)]:
    p = JoinProfile(d, n, degs)
    print(f"  {degs}: F = {f_value(p):4d}   dim bound = {join_dim_upper_bound(p)}")
