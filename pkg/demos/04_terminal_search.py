#!/usr/bin/env python3
"""What the terminal phase does: free removable cells, then route missing
edges through them with breadth-first search.

The annealing walk keeps every hardware cell occupied, so placements carry
many cells that neither hold a chain together nor represent an input edge.
Releasing them opens corridors for the last few connections.
"""
import kingminor as km

graph = km.gen_random_cubic(40, seed=9)
king = km.KingGraph(16)
config = km.ScheduleConfig(family="s3", t_max=150_000)

# run the annealing only
placement, report = km.run_pssa(graph, king, config, seed=9, terminal=False)
print(f"after annealing: {report.embedded}/{graph.m} edges, "
      f"{len(placement.free_cells())} free cells")

before = placement.embedded_count
freed = km.cleanup(placement)
print(f"cleanup freed {len(freed)} cells "
      f"(score conserved: {placement.embedded_count == before})")

missing = [e for e, c in placement.edge_reps().items() if c == 0]
print(f"edges still unrepresented: {len(missing)}")
for i, j in missing:
    ok = km.bfs_link(placement, i, j)
    print(f"  route ({i:2d},{j:2d}) through free cells: "
          f"{'linked' if ok else 'blocked'}")

result = km.verify(placement, graph, king)
print(f"final: {placement.embedded_count}/{graph.m} edges, "
      f"minor embedding = {result.is_minor_embedding}")
