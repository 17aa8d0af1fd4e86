"""Boundary divisors of compactified spin moduli spaces S_{g,n}^{(m)}-bar.

An irreducible node splits into an A and a B type depending on the twist at
the node; a separating node with odd twist on one side is a Delta type, and
with even twist it is blown up and the components carry parities.
"""
import warnings

from spinmoduli.spin import SpinSignature, enumerate_boundary, fiber_degree, pic_generator_count

for g, m in [(1, (1, 1)), (1, (1, 1, 0)), (2, ())]:
    sig = SpinSignature.of(g, m)
    print(f"S_{{{g},{sig.n}}}^{m}: degree {fiber_degree(sig)} over M_{{{g},{sig.n}}}")
    for t in enumerate_boundary(sig):
        print(f"  {t.label:<22} {t.node:<12} " + " | ".join(t.describe()))
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always")
        count = pic_generator_count(sig)
    print(f"  generators lambda, psi_i and boundary: {count}  ({caught[0].message})")
    print()
