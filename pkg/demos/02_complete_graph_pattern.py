#!/usr/bin/env python3
"""The baseline pattern: a complete graph on L+1 vertices inside the LxL grid.

Each chain is a path that runs diagonally and reflects once; two chains
either run side by side or cross through opposite diagonals of a 2x2 block,
which king moves make adjacent without sharing a cell. Every hardware cell
carries exactly one chain, so the pattern doubles as the guiding pattern for
the annealing search.
"""
import kingminor as km

L = 12
placement = km.complete_embedding(L)
king = placement.king

symbols = "0123456789ABCDEFGHIJKLMNOPQRSTUVWXYZ"
grid = [[" "] * L for _ in range(L)]
for i in range(placement.n):
    for (r, c) in placement.chain(i):
        grid[r][c] = symbols[i % len(symbols)]
print(f"K_{L + 1} into the {L}x{L} king grid "
      f"({placement.embedded_count} pairwise adjacencies):\n")
for row in grid:
    print(" ".join(row))

result = km.verify(placement, placement.graph, king)
print(f"\nverifier: minor embedding = {result.is_minor_embedding}")
print(f"chain sizes: {sorted(int(s) for s in placement.size)}")

# splitting the pattern yields the initial placement for larger inputs
g = km.gen_random_cubic(2 * (L + 1), seed=3)
start = km.initial_placement(g, L)
print(f"\nsplit into {start.n} chains for a {g.n}-vertex input: "
      f"{start.embedded_count}/{g.m} edges already represented")
