"""Walk-through: exhaustive sweeps of the inequalities behind minimality.

Run with ``python demos/02_minimality_sweeps.py``. Takes a few seconds.
"""

from strengthcheck import (
    abcde,
    verify_chain,
    verify_edcba,
    verify_identity_lemma,
    verify_minimality,
    verify_theta_inequality,
    verify_theta_reduction,
)

# A and its successive differences along (l1, l2) -> (l1 - 1, l2 + 1).
# Fields outside their domain come back as None.
for l1, l2 in [(0, 3), (2, 1), (4, 0), (5, 1)]:
    print(abcde(7, 8, l1, l2))

reports = [
    verify_minimality(range(5, 13), range(2, 13)),
    verify_edcba(range(5, 13), range(2, 13)),
    verify_chain(range(5, 13), range(2, 13)),
    verify_identity_lemma(4, 10, 5, 3),
    verify_theta_inequality(9),
    verify_theta_reduction(range(5, 11), range(2, 11)),
]
print()
for rep in reports:
    status = "passed" if rep.passed else "FAILED"
    print(f"{rep.check:16s} {status:7s} instances={rep.instances:6d} "
          f"counterexamples={rep.counterexample_count}  ({rep.elapsed_ms:.0f} ms)")
    for cx in rep.counterexamples[:5]:
        print(f"    {cx}")

# The last two sweeps report equality cases: the coeff_4 inequality is
# tight at m=3, l_theta=2, l_theta-1=0, and lowering theta = d/2 = 3 can
# leave F unchanged. Neither affects minimality, which passes everywhere.
