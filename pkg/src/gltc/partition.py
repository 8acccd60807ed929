"""Vertex partitions driving the solver's prefix decomposition.

The solver processes the state vectors block by block; the smaller the
number of feasible per-block prefixes, the smaller the state tables. A
block is a singleton, a star (first vertex adjacent to all others) or a
clique. This module builds partitions of all three kinds, enumerates
feasible block prefixes, and predicts the resulting table-size bound
(the product of per-block prefix counts and its n-th root, the "base").
"""

from __future__ import annotations

import itertools
import math
from collections import deque
from dataclasses import dataclass

from .encoding import instance_tau
from .instance import Graph, Instance, _edge_key

SINGLETON = "singleton"
STAR = "star"
CLIQUE = "clique"


class NotK1dFreeError(ValueError):
    """The star-partition procedure found an induced star K_{1,d}."""


@dataclass(frozen=True)
class Block:
    """An ordered group of vertices processed as one trie level range."""

    vertices: tuple[int, ...]
    kind: str

    @property
    def center(self) -> int:
        return self.vertices[0]

    @property
    def size(self) -> int:
        return len(self.vertices)


@dataclass(frozen=True)
class Partition:
    """Ordered blocks covering all vertices; fixes the global vertex ordering."""

    blocks: tuple[Block, ...]

    @property
    def ordering(self) -> tuple[int, ...]:
        return tuple(v for block in self.blocks for v in block.vertices)


def validate_partition(g: Graph, part: Partition) -> None:
    """Check cover/disjointness and the per-kind structural promises."""
    seen: set[int] = set()
    for block in part.blocks:
        for v in block.vertices:
            if v in seen:
                raise ValueError(f"vertex {v} appears in two blocks")
            seen.add(v)
        if block.kind == SINGLETON:
            if block.size != 1:
                raise ValueError("singleton block must have exactly one vertex")
        elif block.kind == STAR:
            if block.size < 2:
                raise ValueError("star block needs at least two vertices")
            center = block.center
            for v in block.vertices[1:]:
                if not g.adjacent(center, v):
                    raise ValueError(f"star center {center} not adjacent to {v}")
        elif block.kind == CLIQUE:
            if block.size < 2:
                raise ValueError("clique block needs at least two vertices")
            for u, v in itertools.combinations(block.vertices, 2):
                if not g.adjacent(u, v):
                    raise ValueError(f"clique block misses edge {u}-{v}")
        else:
            raise ValueError(f"unknown block kind {block.kind!r}")
    if seen != set(range(1, g.n + 1)):
        raise ValueError("blocks do not cover the vertex set")


# ---------------------------------------------------------------------------
# spanning-tree machinery shared by the star partitions


def bfs_spanning_tree(g: Graph, root: int) -> dict[int, set[int]]:
    """Adjacency of a BFS spanning tree of root's component (neighbors by id)."""
    tree: dict[int, set[int]] = {root: set()}
    queue = deque([root])
    while queue:
        v = queue.popleft()
        for w in sorted(g.adjacency[v]):
            if w not in tree:
                tree[w] = set()
                tree[v].add(w)
                tree[w].add(v)
                queue.append(w)
    return tree


def _tree_farthest(tree: dict[int, set[int]], start: int) -> tuple[int, dict[int, int]]:
    """BFS returning the farthest vertex (ties to minimum id) and parent links."""
    parent = {start: 0}
    order = [start]
    queue = deque([start])
    while queue:
        v = queue.popleft()
        for w in sorted(tree[v]):
            if w not in parent:
                parent[w] = v
                order.append(w)
                queue.append(w)
    depth = {start: 0}
    for v in order[1:]:
        depth[v] = depth[parent[v]] + 1
    maxd = max(depth.values())
    far = min(v for v in depth if depth[v] == maxd)
    return far, parent


def tree_longest_path(tree: dict[int, set[int]]) -> list[int]:
    """A longest path (double BFS), oriented to start at its min-id endpoint."""
    root = min(tree)
    a, _ = _tree_farthest(tree, root)
    b, parent = _tree_farthest(tree, a)
    path = [b]
    while path[-1] != a:
        path.append(parent[path[-1]])
    if path[0] > path[-1]:
        path.reverse()
    return path


def _tree_is_star_center(tree: dict[int, set[int]]) -> int | None:
    """Min-id vertex adjacent to all others, or None if the tree is no star."""
    size = len(tree)
    if size == 1:
        return next(iter(tree))
    centers = sorted(v for v, nbrs in tree.items() if len(nbrs) == size - 1)
    return centers[0] if centers else None


def _remove_from_tree(tree: dict[int, set[int]], vertices) -> None:
    for v in vertices:
        for w in tree.pop(v):
            tree[w].discard(v)


# ---------------------------------------------------------------------------
# partition constructions


def singleton_partition(g: Graph) -> Partition:
    """One block per vertex, in id order."""
    part = Partition(tuple(Block((v,), SINGLETON) for v in range(1, g.n + 1)))
    validate_partition(g, part)
    return part


def star_partition_spanning_tree(g: Graph) -> Partition:
    """Star partition peeled off a BFS spanning tree.

    Repeatedly takes the neighbor u of an endpoint of a longest path in
    the current tree and emits u together with its leaf neighbors (u is
    the center); once the remaining tree is itself a star it becomes the
    final block. Non-final blocks have at most Delta(tree) vertices and
    the final one at most Delta(tree)+1.
    """
    if g.n == 0:
        return Partition(())
    if g.n == 1:
        return Partition((Block((1,), SINGLETON),))
    tree = bfs_spanning_tree(g, root=1)
    if len(tree) != g.n:
        raise ValueError("star partition requires a connected graph")
    blocks: list[Block] = []
    while True:
        center = _tree_is_star_center(tree)
        if center is not None:
            rest = tuple(sorted(set(tree) - {center}))
            kind = STAR if rest else SINGLETON
            blocks.append(Block((center, *rest), kind))
            break
        path = tree_longest_path(tree)
        u = path[1]
        leaves = tuple(sorted(w for w in tree[u] if len(tree[w]) == 1))
        blocks.append(Block((u, *leaves), STAR))
        _remove_from_tree(tree, (u, *leaves))
    part = Partition(tuple(blocks))
    validate_partition(g, part)
    return part


def star_partition_k1d(g: Graph, d: int) -> Partition:
    """Star partition with non-final blocks of size <= d-1 and final <= d.

    Works on graphs with no induced star on d leaves. Take the neighbor
    u of an endpoint of a longest tree path and keep shrinking its leaf
    set while it is too large: two of its leaves adjacent in g form a
    2-block of their own, and a leaf adjacent in g to u's inner
    neighbor x re-hangs below x. If neither move applies, u together
    with d of its pairwise non-adjacent neighbors is an induced K_{1,d}
    and NotK1dFreeError is raised. Every move removes vertices or
    strictly shrinks u's leaf count, and u never gains non-leaf
    neighbors, so the loop terminates and the residual stays connected.
    """
    if d < 3:
        raise ValueError(f"requires d >= 3, got {d}")
    if g.n <= d:
        return star_partition_spanning_tree(g)
    tree = bfs_spanning_tree(g, root=1)
    if len(tree) != g.n:
        raise ValueError("star partition requires a connected graph")
    blocks: list[Block] = []
    while tree:
        if len(tree) <= d:
            blocks.extend(_peel_tree_stars(tree))
            break
        path = tree_longest_path(tree)
        u = path[1]
        x = path[2]
        while True:
            leaves = sorted(w for w in tree[u] if len(tree[w]) == 1)
            if len(leaves) <= d - 2:
                if leaves:
                    blocks.append(Block((u, *leaves), STAR))
                    _remove_from_tree(tree, (u, *leaves))
                # with no leaves left u is itself a leaf now; leave it for later
                break
            pair = next(
                (
                    (vi, vj)
                    for vi, vj in itertools.combinations(leaves, 2)
                    if g.adjacent(vi, vj)
                ),
                None,
            )
            if pair is not None:
                blocks.append(Block(pair, STAR))
                _remove_from_tree(tree, pair)
                continue
            mover = next(
                (vi for vi in leaves if vi != x and g.adjacent(vi, x)), None
            )
            if mover is None:
                raise NotK1dFreeError(f"input not K_{{1,{d}}}-free (center {u})")
            tree[u].discard(mover)
            tree[mover].discard(u)
            tree[mover].add(x)
            tree[x].add(mover)
    part = Partition(tuple(blocks))
    validate_partition(g, part)
    return part


def _peel_tree_stars(tree: dict[int, set[int]]) -> list[Block]:
    """Run the spanning-tree peeling on an already-built residual tree."""
    blocks: list[Block] = []
    while tree:
        center = _tree_is_star_center(tree)
        if center is not None:
            rest = tuple(sorted(set(tree) - {center}))
            blocks.append(Block((center, *rest), STAR if rest else SINGLETON))
            tree.clear()
            break
        path = tree_longest_path(tree)
        u = path[1]
        leaves = tuple(sorted(w for w in tree[u] if len(tree[w]) == 1))
        blocks.append(Block((u, *leaves), STAR))
        _remove_from_tree(tree, (u, *leaves))
    return blocks


def clique_partition(g: Graph) -> Partition:
    """Greedy clique packing: maximal matching plus triangle upgrades.

    Vertices are scanned by ascending degree (ties to min id) to build a
    maximal matching; matched edges sharing an unused common neighbor
    are then upgraded to triangles. Edge blocks come first, then
    triangle blocks, then the uncovered vertices as singletons. The
    packing is heuristic: it lower-bounds the optimal packing order and
    affects only the predicted runtime, never correctness.
    """
    rank = {v: (g.degree(v), v) for v in range(1, g.n + 1)}
    partner: dict[int, int] = {}
    for v in sorted(range(1, g.n + 1), key=lambda v: rank[v]):
        if v in partner:
            continue
        candidates = [w for w in g.adjacency[v] if w not in partner]
        if candidates:
            w = min(candidates, key=lambda w: rank[w])
            partner[v] = w
            partner[w] = v
    pairs = sorted({_edge_key(v, w) for v, w in partner.items()})
    in_triangle: set[int] = set()
    triangles: list[tuple[int, int, int]] = []
    edge_blocks: list[tuple[int, int]] = []
    for u, v in pairs:
        common = sorted(
            w
            for w in g.adjacency[u] & g.adjacency[v]
            if w not in partner and w not in in_triangle
        )
        if common:
            w = common[0]
            in_triangle.add(w)
            triangles.append(tuple(sorted((u, v, w))))
        else:
            edge_blocks.append((u, v))
    covered = set(partner) | in_triangle
    blocks = [Block(pair, CLIQUE) for pair in edge_blocks]
    blocks += [Block(tri, CLIQUE) for tri in triangles]
    blocks += [Block((v,), SINGLETON) for v in range(1, g.n + 1) if v not in covered]
    part = Partition(tuple(blocks))
    validate_partition(g, part)
    return part


# ---------------------------------------------------------------------------
# feasible prefixes and complexity prediction


def _feasible_prefixes(block: Block, tau: int, adjacency, tmap, strengthened: bool):
    verts = block.vertices
    in_edges = []
    for i, j in itertools.combinations(range(len(verts)), 2):
        u, v = verts[i], verts[j]
        if v in adjacency[u]:
            in_edges.append((i, j, tmap[_edge_key(u, v)] if tmap is not None else None))
    out = []
    for a in itertools.product(range(tau + 2), repeat=len(verts)):
        ok = True
        for i, j, diffs in in_edges:
            x, y = a[i], a[j]
            if x >= 2 and y >= 2:
                if x == y or (strengthened and abs(x - y) in diffs):
                    ok = False
                    break
        if ok:
            out.append(a)
    return out


def feasible_prefixes(block: Block, tau: int, inst: Instance,
                      strengthened: bool = True) -> list[tuple[int, ...]]:
    """Block prefixes over the labeled alphabet that can occur in a state vector.

    Symbols 2..tau+1 stand for exact labels, so two adjacent in-block
    vertices can never share one (difference 0 is always forbidden).
    With ``strengthened`` the known in-block label differences are also
    checked against the edge's forbidden set; this removes prefixes that
    no proper partial labeling can produce, so the solver's tables are
    unchanged while the enumeration shrinks. Output is in lexicographic
    order.
    """
    return _feasible_prefixes(
        block, tau, inst.graph.adjacency, inst.t if strengthened else None, strengthened
    )


def star_prefix_bound(size: int, tau: int) -> int:
    """Feasible-prefix count of a size-s star block with independent leaves."""
    if size < 2:
        raise ValueError("star blocks have at least two vertices")
    return 2 * (tau + 2) ** (size - 1) + tau * (tau + 1) ** (size - 1)


def star_block_base(tau: int, size: int) -> float:
    """Per-vertex table-growth base achieved by star blocks of a given size."""
    if size < 2:
        raise ValueError("defined for block sizes >= 2")
    return star_prefix_bound(size, tau) ** (1.0 / size)


@dataclass(frozen=True)
class ComplexityEstimate:
    """Per-block prefix counts and the resulting table-size bound."""

    per_block_f: tuple[int, ...]
    product: int
    base: float
    rho: int | None


def predict_complexity(g: Graph, part: Partition, tau: int) -> ComplexityEstimate:
    """Prefix counts per block (equality pruning only, for comparability),
    their product, and the per-vertex base (product ** (1/n))."""
    fs = []
    for block in part.blocks:
        fs.append(len(_feasible_prefixes(block, tau, g.adjacency, None, False)))
    product = math.prod(fs)
    if g.n == 0:
        base = 1.0
    else:
        base = math.exp(sum(math.log(f) for f in fs) / g.n)
    rho = None
    if any(b.kind == CLIQUE for b in part.blocks):
        rho = sum(b.size for b in part.blocks if b.kind == CLIQUE)
    return ComplexityEstimate(tuple(fs), product, base, rho)


def base_table_row(tau: int) -> dict[str, float]:
    """Worst-case bases for one tau: general graphs, subcubic graphs,
    graphs with a perfect matching / claw-free / regular / clique-partition
    graphs, and unit-disk graphs."""
    if tau < 1:
        raise ValueError("base table rows are defined for tau >= 1")
    return {
        "general": float(tau + 2),
        "subcubic": star_block_base(tau, 3),
        "matching": star_block_base(tau, 2),
        "unit_disk": max(star_block_base(tau, 2), star_block_base(tau, 6)),
    }


# ---------------------------------------------------------------------------
# strategy dispatch


def _component_subgraphs(g: Graph) -> list[tuple[Graph, dict[int, int]]]:
    comps: list[list[int]] = []
    seen: set[int] = set()
    for start in range(1, g.n + 1):
        if start in seen:
            continue
        comp = [start]
        seen.add(start)
        queue = deque([start])
        while queue:
            v = queue.popleft()
            for w in g.adjacency[v]:
                if w not in seen:
                    seen.add(w)
                    comp.append(w)
                    queue.append(w)
        comps.append(sorted(comp))
    out = []
    for comp in comps:
        to_new = {v: i + 1 for i, v in enumerate(comp)}
        edges = {
            _edge_key(to_new[u], to_new[v])
            for u, v in g.edges
            if u in to_new and v in to_new
        }
        out.append((Graph(n=len(comp), edges=frozenset(edges)), {i + 1: v for i, v in enumerate(comp)}))
    return out


def _translate(part: Partition, idmap: dict[int, int]) -> Partition:
    return Partition(
        tuple(Block(tuple(idmap[v] for v in b.vertices), b.kind) for b in part.blocks)
    )


def build_partition(inst: Instance, strategy: str = "auto") -> Partition:
    """Build a partition of the whole vertex set by strategy name.

    Strategies: ``singleton``, ``star``, ``k1d:<d>``, ``clique`` and
    ``auto`` (smallest predicted prefix-count product per component,
    ties going singleton < star < clique). Star-based strategies are
    applied per connected component and concatenated.
    """
    g = inst.graph
    if strategy == "singleton":
        return singleton_partition(g)
    if strategy == "clique":
        return clique_partition(g)
    if strategy in ("star", "auto") or strategy.startswith("k1d:"):
        tau = instance_tau(inst)
        blocks: list[Block] = []
        for sub, idmap in _component_subgraphs(g):
            if strategy == "star":
                chosen = star_partition_spanning_tree(sub)
            elif strategy.startswith("k1d:"):
                d = int(strategy.split(":", 1)[1])
                chosen = star_partition_k1d(sub, d)
            else:
                candidates = [singleton_partition(sub)]
                if sub.n >= 2:
                    candidates.append(star_partition_spanning_tree(sub))
                candidates.append(clique_partition(sub))
                chosen = min(
                    candidates,
                    key=lambda p: predict_complexity(sub, p, tau).product,
                )
            blocks.extend(_translate(chosen, idmap).blocks)
        part = Partition(tuple(blocks))
        validate_partition(g, part)
        return part
    raise ValueError(f"unknown partition strategy {strategy!r}")
