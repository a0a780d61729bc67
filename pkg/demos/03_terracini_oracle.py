"""Walk-through: measuring join dimensions over F_p.

Run with ``python demos/03_terracini_oracle.py``.
"""

import numpy as np

from strengthcheck import (
    JoinProfile,
    cross_check,
    generic_slice_rank,
    ideal_degree_dim,
    regular_sequence_check,
    sample_form,
    terracini_join_dim,
)
from strengthcheck.oracle import DEFAULT_P

rng = np.random.default_rng(2024)

# The degree-4 piece of an ideal generated by a random linear and a random
# cubic form in 3 variables: 15 monomials minus 3 in the quotient.
g = sample_form(2, 1, DEFAULT_P, rng)
h = sample_form(2, 3, DEFAULT_P, rng)
print("dim (g, h)_4 =", ideal_degree_dim(2, 4, [g, h], DEFAULT_P))
print("regular sequence:", regular_sequence_check(2, [g, h], DEFAULT_P, 6))

# A single join, then every profile below the general slice rank.
rep = terracini_join_dim(JoinProfile(5, 3, (1, 1)), seed=7)
print(f"\nJ_(1,1), d=5, n=3: oracle {rep.oracle_value}, bound {rep.formula_bound}, trials {rep.trial_values}")

d, n = 6, 4
print(f"\ncross-check d={d}, n={n}:")
for rep in cross_check(d, n, generic_slice_rank(d, n) - 1, seed=7):
    gap = rep.formula_bound - rep.oracle_value
    print(f"  {str(list(rep.profile.degs)):10s} bound {rep.formula_bound:4d}  "
          f"oracle {rep.oracle_value:4d}  gap {gap}  {'ok' if rep.passed else 'FAIL'}")
