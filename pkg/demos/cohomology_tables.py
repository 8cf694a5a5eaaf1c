"""Dimension tables for H^i_chi(G, V) with chi = {H1, H2, H3}.

Each cell is computed from the relative resolution of k and compared with
the closed form.  Run:  python3 demos/cohomology_tables.py
"""

import numpy as np

from kfour import CHI, VEven, VMinus, VPlus, build_indecomposable, closed_form_dim, gf, rel_cohom_dim

F = gf(1)
MAX_I = 6

rows = [VMinus(0)] + [VPlus(n) for n in range(1, 5)] + [VMinus(n) for n in range(1, 5)]
rows += [VEven.inf(2), VEven.of((0, 1), 2), VEven.of((1, 1, 1))]

table = np.zeros((len(rows), MAX_I + 1), dtype=int)
agree = True
for r, lab in enumerate(rows):
    M = build_indecomposable(lab, F)
    for i in range(MAX_I + 1):
        table[r, i] = rel_cohom_dim(M, CHI, i)
        agree &= table[r, i] == closed_form_dim(lab, i)

print(" " * 22 + "".join(f"{i:>4}" for i in range(MAX_I + 1)))
for lab, row in zip(rows, table):
    print(f"{str(lab):>22}" + "".join(f"{d:>4}" for d in row))
print()
print("closed forms agree:", bool(agree))
