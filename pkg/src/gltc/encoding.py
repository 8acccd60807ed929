"""Per-vertex state symbols and the level-advance operators of the solver.

With tau the largest forbidden difference, the state of a vertex at
level k of the dynamic program is one of tau+3 symbols:

    BLOCKED (-1)  unlabeled, the upcoming label is inadmissible
    OPEN    (0)   unlabeled, the upcoming label is admissible
    1             labeled at least tau levels ago; inert from now on
    j in 2..tau+1 labeled exactly k+j-tau-1; still close enough to
                  interact with future labels

Advancing a level ages every symbol by one and optionally hands the new
label to an OPEN vertex; a follow-up pass then recomputes OPEN/BLOCKED
for the unlabeled vertices against the next label.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Optional, Sequence

BLOCKED = -1
OPEN = 0

Vector = tuple[int, ...]


def symbol_alphabet(tau: int) -> tuple[int, ...]:
    """All tau+3 symbols in canonical order BLOCKED < OPEN < 1 < ... < tau+1."""
    return (BLOCKED,) + tuple(range(tau + 2))


def advance_symbol(x: int, assign: int, tau: int) -> Optional[int]:
    """Age one symbol by one level; with assign=1 give the new label to x.

    Partial: only an OPEN vertex can take the new label, so most (x, 1)
    combinations return None. None is a first-class "impossible" result,
    not an error.
    """
    if assign not in (0, 1):
        raise ValueError(f"assign bit must be 0 or 1, got {assign}")
    if not (x == BLOCKED or 0 <= x <= tau + 1):
        raise ValueError(f"symbol {x} outside alphabet for tau={tau}")
    if assign == 0:
        if x in (BLOCKED, OPEN):
            return OPEN
        if x <= 2:
            return 1
        return x - 1
    if x == OPEN:
        return tau + 1
    return None


def advance_vector(a: Sequence[int], mask: Sequence[int], tau: int) -> Optional[Vector]:
    """Coordinate-wise advance; None as soon as any coordinate is impossible."""
    assert len(a) == len(mask), "vector length mismatch"
    out = []
    for x, y in zip(a, mask):
        r = advance_symbol(x, y, tau)
        if r is None:
            return None
        out.append(r)
    return tuple(out)


@lru_cache(maxsize=None)
def advance_preimage_pairs(sym: int, tau: int) -> tuple[tuple[int, int], ...]:
    """All (x, assign) with advance_symbol(x, assign, tau) == sym, canonical order."""
    pairs = []
    for x in symbol_alphabet(tau):
        for y in (0, 1):
            if advance_symbol(x, y, tau) == sym:
                pairs.append((x, y))
    return tuple(pairs)


def instance_tau(inst) -> int:
    """Largest forbidden difference over all edges (0 when there are none)."""
    best = 0
    for diffs in inst.t.values():
        if diffs:
            best = max(best, max(diffs))
    return best


def mark_blocked(vec: Sequence[int], level: int, inst, ordering: Sequence[int] | None = None,
                 tau: int | None = None) -> Vector:
    """Recompute OPEN/BLOCKED for unlabeled coordinates against label level+2.

    Labeled coordinates (>= 1) pass through unchanged. An unlabeled
    coordinate stays OPEN iff level+2 is on its vertex's list and no
    neighbor carries a label whose difference with level+2 is forbidden;
    otherwise it becomes BLOCKED. Reference implementation; the solver
    uses a precomputed equivalent in its inner loop.
    """
    if ordering is None:
        ordering = tuple(range(1, inst.graph.n + 1))
    if tau is None:
        tau = instance_tau(inst)
    pos_of = {v: i for i, v in enumerate(ordering)}
    next_label = level + 2
    out = list(vec)
    for i, sym in enumerate(vec):
        if sym != OPEN:
            assert sym != BLOCKED, "input vectors never carry BLOCKED"
            continue
        v = ordering[i]
        if next_label not in inst.lam[v]:
            out[i] = BLOCKED
            continue
        for w in inst.graph.adjacency[v]:
            bw = vec[pos_of[w]]
            if bw >= 2 and (tau - bw + 2) in inst.t_of(v, w):
                out[i] = BLOCKED
                break
    return tuple(out)


def is_complete(vec: Sequence[int]) -> bool:
    """True iff every coordinate carries a label (no OPEN or BLOCKED)."""
    return all(sym >= 1 for sym in vec)


def format_vector(vec: Sequence[int]) -> str:
    """Debug rendering: 'B' for BLOCKED, digits otherwise, multi-digit bracketed."""
    parts = []
    for sym in vec:
        if sym == BLOCKED:
            parts.append("B")
        elif sym < 10:
            parts.append(str(sym))
        else:
            parts.append(f"[{sym}]")
    return "".join(parts)
