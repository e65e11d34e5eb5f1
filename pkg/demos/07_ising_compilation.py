#!/usr/bin/env python3
"""From problem couplings to hardware parameters.

Once a placement is verified, each problem coupling lands on exactly one
hardware coupler between the two chains, chain path edges get a
ferromagnetic strength that dominates the incident problem terms, and each
field is split evenly across its chain.
"""
import kingminor as km

# a 5-vertex problem with explicit couplings and fields
n = 5
J = {(0, 1): 1.0, (0, 2): -2.0, (1, 3): 0.5, (2, 3): 1.5, (3, 4): -1.0,
     (0, 4): 2.0}
h = [1.0, -1.0, 0.0, 2.0, -3.0]

graph = km.InputGraph(n, list(J))
king = km.KingGraph(6)
placement, report = km.run_pssa(graph, king,
                                km.ScheduleConfig(family="s3", t_max=50_000),
                                seed=2)
assert report.found

model = km.compile_ising(J, h, placement, c_chain=1.0)
label = placement.label
inter = {k: v for k, v in model.couplings.items() if label[k[0]] != label[k[1]]}
intra = {k: v for k, v in model.couplings.items() if label[k[0]] == label[k[1]]}

print(f"problem couplings: {len(J)}, hardware couplers used: "
      f"{len(inter)} inter-chain + {len(intra)} intra-chain")
for (u, w), value in sorted(inter.items()):
    print(f"  coupler {king.cell(u)} - {king.cell(w)}: J' = {value:+.2f} "
          f"(chains {label[u]} - {label[w]})")

print("\nper-vertex field conservation:")
for i in range(n):
    cells = placement.chain(i)
    total = sum(model.fields[king.index(c)] for c in cells)
    print(f"  h[{i}] = {h[i]:+.1f} split over {len(cells)} cells, "
          f"sum = {total:+.1f}")
