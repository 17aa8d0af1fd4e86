"""Theta characteristics as quadratic refinements of the intersection form
on H_1(C, Z/2), split by Arf invariant."""
from spinmoduli.arf import QuadraticForm, arf, count_by_arf, theta_counts_closed_form, transvection_orbits

for g in range(1, 5):
    even, odd = count_by_arf(g)
    assert (even, odd) == theta_counts_closed_form(g)
    print(f"g = {g}: {even} even, {odd} odd  (2^{g - 1}(2^{g} +- 1))")

# on an elliptic curve the odd characteristic is O_E itself: q = 1 on a and b
print()
for bits in ["00", "10", "01", "11"]:
    q = QuadraticForm.from_text(bits)
    print(f"q(a), q(b) = {bits[0]}, {bits[1]}: Arf {arf(q)}, q(a + b) = {q((1, 1))}")

print()
for g in (1, 2, 3):
    orbits = transvection_orbits(g)
    print(f"g = {g}: transvection orbits of sizes {orbits.sizes} with Arf {orbits.arf_values}")
