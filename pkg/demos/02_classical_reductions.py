"""One solver, four classical models.

List coloring, L(p,q)-labeling, channel assignment and T-coloring all
embed into the same instance shape: per-vertex label lists plus per-edge
forbidden difference sets. This script builds one example of each and
solves them with the same machinery.
"""

from gltc import (
    Graph,
    brute_force_solve,
    reduce_channel,
    reduce_list_coloring,
    reduce_lpq,
    reduce_tcoloring,
    serialize_instance,
    solve,
    validate,
)


def lists(g, labels):
    return {v: frozenset(labels) for v in range(1, g.n + 1)}


def report(name, inst):
    result = solve(inst)
    print(f"{name}: {'YES' if result.decision else 'NO'}  witness={result.witness}")
    assert result.decision == brute_force_solve(inst)[0]


# --- list coloring: adjacent vertices need different colors ----------------
triangle = Graph.from_edges(3, [(1, 2), (2, 3), (1, 3)])
report("triangle, 3 colors", reduce_list_coloring(triangle, lists(triangle, {1, 2, 3})))
report("triangle, 2 colors", reduce_list_coloring(triangle, lists(triangle, {1, 2})))

# --- L(2,1)-labeling: adjacent labels differ by >= 2, distance-2 by >= 1 ---
# The reduction works on the square of the graph; on a path of three
# vertices the middle one needs a label 2 away from both ends.
path3 = Graph.from_edges(3, [(1, 2), (2, 3)])
tight = reduce_lpq(path3, 2, 1, lists(path3, {1, 2, 3}))
print("L(2,1) on a 3-path uses the squared graph with",
      len(tight.graph.edges), "edges")
report("L(2,1), labels 1..3", tight)
report("L(2,1), labels 1..4", reduce_lpq(path3, 2, 1, lists(path3, {1, 2, 3, 4})))

# --- channel assignment: per-edge minimum separation ------------------------
path2 = Graph.from_edges(2, [(1, 2)])
channel = reduce_channel(path2, {(1, 2): 2}, lists(path2, {1, 2, 3}))
report("channel, separation 2", channel)

# --- T-coloring: one forbidden-difference set everywhere --------------------
# The classic UHF interference set {0, 7, 14, 15}.
uhf = reduce_tcoloring(path2, {0, 7, 14, 15}, lists(path2, range(1, 17)))
print("UHF instance is tau-bounded with tau =", validate(uhf).tau)
report("T-coloring, UHF set", uhf)
print()
print("the UHF instance as a document:")
print(serialize_instance(uhf))
