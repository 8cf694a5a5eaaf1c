"""Cup products in relative cohomology of k vanish in positive degree.

Ordinary cohomology (chi = {1}) is shown for contrast.
Run:  python3 demos/cup_products.py
"""

from kfour import CHI, Subgroup, class_basis, cup_product, verify_cup_vanishing

for name, chi in [("{H1,H2,H3}", CHI), ("{1}", frozenset({Subgroup.TRIV}))]:
    print(f"chi = {name}")
    print("  dim H^i:", [len(class_basis(chi, i)) for i in range(6)])
    rep = verify_cup_vanishing(chi, 4)
    nonzero = sum(not e.is_zero_class for e in rep.entries)
    print(f"  products with i, j >= 1 and i + j <= 4: {len(rep.entries)}, nonzero: {nonzero}")

# one product written out: the degree-2 class squared
a = class_basis(CHI, 2)[0]
r = cup_product(a, a)
print()
print("degree-2 generator: representative", a.representative.tolist())
print("square: composite map is zero:", r.is_zero_map)
