"""Relative covers and Heller shifts for a few small modules.

Run:  python3 demos/heller_shifts.py
"""

from collections import Counter

from kfour import CHI, Subgroup, VEven, VMinus, VPlus, build_indecomposable, decompose, gf, minimal_cover, omega_chi

F = gf(1)
TRIV = frozenset({Subgroup.TRIV})


def show(mod):
    if mod.dim == 0:
        return "0"
    return " + ".join(f"{c}*{lab}" if c > 1 else str(lab) for lab, c in decompose(mod).parts)


print("Minimal covers relative to {H1, H2, H3}")
for lab in [VMinus(0), VPlus(1), VMinus(2), VEven.inf(3), VEven.of((1, 1, 1))]:
    M = build_indecomposable(lab, F)
    cover = minimal_cover(M, CHI)
    shape = Counter(str(x) for x in cover.labels())
    print(f"  {str(lab):>20}  cover {dict(shape)}  kernel {show(cover.kernel)}")

# the relative shift of an odd module is the ordinary shift run backwards twice
print()
print("Omega_chi against Omega^-2 (ordinary)")
for lab in [VPlus(1), VPlus(2), VMinus(1), VMinus(2)]:
    M = build_indecomposable(lab, F)
    print(f"  {str(lab):>6}: Omega_chi = {show(omega_chi(M, CHI)):>6}   Omega^-2 = {show(omega_chi(M, TRIV, -2))}")

print()
print("Iterating Omega_chi on k")
cur = build_indecomposable(VMinus(0), F)
for i in range(5):
    print(f"  Omega_chi^{i}(k) = {show(cur)}")
    cur = omega_chi(cur, CHI)
