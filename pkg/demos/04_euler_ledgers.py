"""Euler characteristics of low-genus spin moduli, replayed from ledgers.

The derived inputs are recomputed from their oracles here; the ledgers are
then evaluated in dependency order.
"""
from spinmoduli.euler import bundled_ledgers, chi_m0n, chi_m0n_mod_swap, evaluate_ledgers, format_rational
from spinmoduli.euler.bundled import ORACLES, derived_constants
from spinmoduli.euler.oracles import special_points_m12

print("chi(M_{0,n}) for n = 3..7:", [int(chi_m0n(n)) for n in range(3, 8)])
print("chi(M'_{0,4}), chi(M'_{0,5}) =", chi_m0n_mod_swap(4), chi_m0n_mod_swap(5))

print("\npoints of M_{1,2} where Aut(E, p_1, p_2) moves the even roots:")
for p in special_points_m12():
    print(f"  {p.curve}: p = {tuple(str(x) for x in p.point)}, "
          f"stabiliser of order {p.stabilizer_order}, {p.even_fiber} even root orbit(s)")

print("\nderived constants:")
for name, value in derived_constants().items():
    print(f"  {name:<14}{format_rational(value):>6}   {ORACLES[name]}")

print("\nledgers:")
for name, (value, ok) in evaluate_ledgers(bundled_ledgers()).items():
    print(f"  {name:<14}{format_rational(value):>6}   {'ok' if ok else 'MISMATCH'}")
