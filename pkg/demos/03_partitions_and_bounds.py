"""Vertex partitions and what they buy.

The solver's table sizes are bounded by the product of per-block
feasible-prefix counts, so grouping adjacent vertices into stars or
cliques shrinks the state space: a clique block can never repeat an
exact label, a star block constrains every leaf against its center.
This script compares the three partition strategies on sample graphs
and prints the per-vertex growth bases they achieve.
"""

from gltc import (
    Graph,
    base_table_row,
    build_partition,
    clique_partition,
    instance_tau,
    predict_complexity,
    random_instance,
    singleton_partition,
    solve,
    star_partition_k1d,
    star_partition_spanning_tree,
)

inst = random_instance(n=10, density=0.45, tau=1, lmax=10, seed=7)
g = inst.graph
tau = instance_tau(inst)
print(f"random graph: n={g.n}, edges={len(g.edges)}, tau={tau}")
print()

for name, part in [
    ("singleton", singleton_partition(g)),
    ("star", build_partition(inst, "star")),
    ("clique", clique_partition(g)),
]:
    est = predict_complexity(g, part, tau)
    shapes = "+".join(str(b.size) for b in part.blocks)
    print(f"{name:10s} blocks {shapes:22s} product {est.product:>8} base {est.base:.4f}")

print()
print("every strategy reaches the same verdict:")
for strategy in ("singleton", "star", "clique", "auto"):
    result = solve(inst, strategy=strategy)
    print(f"  {strategy:10s} -> {'YES' if result.decision else 'NO'}"
          f"  (largest table {result.stats.max_table_size})")

# Graphs with no big induced stars admit partitions into small stars. A
# 6-cycle is claw-free, so blocks of at most 2 vertices suffice.
c6 = Graph.from_edges(6, [(1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (1, 6)])
part = star_partition_k1d(c6, 3)
print()
print("claw-free 6-cycle, bounded-star blocks:",
      [b.vertices for b in part.blocks])

# Worst-case per-vertex bases by graph class, for small tau.
print()
print("tau  general  subcubic  matching  unit-disk")
for tau in range(1, 6):
    row = base_table_row(tau)
    print(f"{tau:3d}  {row['general']:7.4f}  {row['subcubic']:8.4f}"
          f"  {row['matching']:8.4f}  {row['unit_disk']:9.4f}")
