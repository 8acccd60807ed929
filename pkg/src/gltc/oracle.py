"""Brute-force reference solver.

Plain chronological backtracking over vertices in id order, trying each
vertex's permitted labels in ascending order. No propagation, no
heuristics: its only job is to be obviously correct so the dynamic
program can be validated against it on small instances.
"""

from __future__ import annotations

from .instance import Instance

Witness = dict[int, int]


def extension_predicate(assignment: dict[int, int], v: int, label: int,
                        inst: Instance) -> bool:
    """True iff labeling unassigned vertex v with ``label`` keeps things proper."""
    if label not in inst.lam[v]:
        return False
    for w in inst.graph.adjacency[v]:
        lab = assignment.get(w)
        if lab is not None and abs(label - lab) in inst.t_of(v, w):
            return False
    return True


def brute_force_solve(inst: Instance, descending: bool = False) -> tuple[bool, Witness | None]:
    """Search all labelings; returns (decision, first witness found or None).

    Intended for small instances (roughly n <= 10, labels <= 15); the
    caller is responsible for keeping sizes sane. ``descending`` flips
    the label trial order (decisions must not depend on it).
    """
    n = inst.graph.n
    if any(not inst.lam[v] for v in range(1, n + 1)):
        return False, None
    assignment: dict[int, int] = {}

    def dfs(i: int) -> bool:
        if i > n:
            return True
        for label in sorted(inst.lam[i], reverse=descending):
            if extension_predicate(assignment, i, label, inst):
                assignment[i] = label
                if dfs(i + 1):
                    return True
                del assignment[i]
        return False

    if dfs(1):
        return True, dict(assignment)
    return False, None
