#!/usr/bin/env python3
"""End-to-end embedding run: anneal, terminal search, verify, save.

A 48-vertex random cubic graph goes onto the 20x20 grid - more than twice
the 21 vertices the baseline pattern guarantees.
"""
import kingminor as km

graph = km.gen_random_cubic(48, seed=42)
king = km.KingGraph(20)
config = km.ScheduleConfig(family="s3", t_max=2_000_000)

placement, report = km.run_pssa(graph, king, config, seed=1,
                                degree_weighted=True)
print(report.to_text())

result = km.verify(placement, graph, king)
print(f"independently verified: {result.is_minor_embedding}")

sizes = sorted(int(s) for s in placement.size)
print(f"chain sizes: min={sizes[0]} median={sizes[len(sizes) // 2]} "
      f"max={sizes[-1]}")
print(f"free cells after terminal search: {len(placement.free_cells())}")

placement.save("/tmp/demo_embedding.json")
reloaded = km.load_placement("/tmp/demo_embedding.json", graph)
print(f"placement file round trip: "
      f"{km.verify(reloaded, graph, king).is_minor_embedding}")
