"""Planning the vanishing induction and closing it with a Betti sandwich.

Harer's bound plus duality kills H^k_c for most (g, n); the remaining base
cases are checked by hand.  For k = 3 the hardest base case is settled by
chi = 18, b_0 = 1, b_1 = 0 and b_2 <= 8.
"""
from fractions import Fraction

from spinmoduli.induction import BettiConstraintSystem, betti_solutions, hc_vanishes, plan, resolve_betti

for k in (1, 3):
    p = plan(k, 3, 7)
    print(f"k = {k}: base cases {p.base_cases}")
    for r in p.flags:
        print(f"  flagged ({r.g},{r.n}): {r.inequality}")

print()
print(hc_vanishes(0, 4, 1).stated_range)

s13 = BettiConstraintSystem(3, Fraction(18), fixed={0: 1, 1: 0}, upper={2: 8})
print("\nS_{1,3}^{(1,1,0)}-bar Betti numbers:", resolve_betti(s13))

# without connectedness the data no longer pin down b_3
loose = BettiConstraintSystem(3, Fraction(18), fixed={1: 0}, lower={0: 1}, upper={2: 8})
print("dropping b_0 = 1:", resolve_betti(loose), betti_solutions(loose)[:3])
