#!/usr/bin/env python3
"""Capacity bounds: what no heuristic can ever beat.

The width-(2L-1) path decomposition of the hardware caps complete-graph
minors at 2L vertices; the degree argument lower-bounds the cells any
K_N minor must occupy on degree-d hardware.
"""
import kingminor as km

print(f"{'L':>4} {'baseline N=L+1':>15} {'upper bound 2L':>15} "
      f"{'decomposition width':>20}")
for L in (8, 20, 40, 80, 160, 320):
    td_width = 2 * L - 1 if L <= 100 else None
    if L <= 100:
        td_width = km.tree_decomposition(L).width
    print(f"{L:>4} {L + 1:>15} {km.clique_upper_bound(L):>15} "
          f"{td_width if td_width is not None else '-':>20}")

print("\nminimum hardware cells for a K_N minor on degree-8 hardware:")
for N in (9, 21, 51, 101, 321):
    cells = km.min_hardware_vertices(N, 8)
    chain = km.min_supervertex_size(N, 8)
    print(f"  N={N:>3}: {cells:>6} cells, chains of at least {chain} cells")

# the baseline pattern respects the bound with room to spare
L = 20
placement = km.complete_embedding(L)
used = int(placement.size.sum())
print(f"\nbaseline K_{L + 1} on the {L}x{L} grid uses {used} cells; "
      f"the bound demands >= {km.min_hardware_vertices(L + 1, 8)}")
