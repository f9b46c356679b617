"""Pure Python kernels for the two hot loops.

Both kernels work on a conflict structure given as one bitmask per edge:
bit f of masks[e] is set iff edge f cannot coexist with edge e in an induced
matching (the mask always includes e's own bit).  A set of edges M, encoded
as a bitmask, is an induced matching iff masks[e] & M == 1 << e for every
e in M.

The compiled module indmatch._ckernels implements the same two functions
with the same scan orders; the outputs must be bit-for-bit identical.
"""

from __future__ import annotations

from typing import Sequence

BACKEND_NAME = "python"


def local_search(masks: Sequence[int]) -> tuple[int, list[tuple]]:
    """Run the add/swap local search to a local optimum.

    Starting from the empty matching, repeatedly apply the first available
    improving move and rescan: first an add (lowest edge id whose conflicts
    miss M), otherwise a swap of one matched edge e (ascending) for two
    unmatched edges (lexicographically first pair), each move growing the
    matching by exactly one edge.

    Returns (matching_bitmask, moves) where moves is a list of
    ("add", e) and ("swap", e, e1, e2) tuples in application order.
    """
    m = len(masks)
    matched = 0
    moves: list[tuple] = []
    while True:
        move = _find_move(masks, m, matched)
        if move is None:
            return matched, moves
        if move[0] == "add":
            matched |= 1 << move[1]
        else:
            _, e, e1, e2 = move
            matched = (matched & ~(1 << e)) | (1 << e1) | (1 << e2)
        moves.append(move)


def _find_move(masks: Sequence[int], m: int, matched: int) -> tuple | None:
    for e in range(m):
        if masks[e] & matched == 0:
            return ("add", e)
    # no add applies, try swapping each matched edge for two others
    rest = matched
    while rest:
        e = (rest & -rest).bit_length() - 1
        rest &= rest - 1
        without = matched & ~(1 << e)
        # edges compatible with M - e; anything still in M - e conflicts
        # with itself, so only unmatched edges (and e) survive this filter
        cands = [c for c in range(m) if c != e and masks[c] & without == 0]
        for i, e1 in enumerate(cands):
            mask1 = masks[e1]
            for e2 in cands[i + 1 :]:
                if not (mask1 >> e2) & 1:
                    return ("swap", e, e1, e2)
    return None


def max_independent_set(
    masks: Sequence[int], node_budget: int
) -> tuple[int, int, bool]:
    """Branch and bound maximum independent set on the conflict structure.

    masks[v] must contain v's own bit, so it is the closed neighborhood of
    v.  Branches on the lowest-id vertex of maximum residual degree, taking
    the vertex first; prunes with a greedy clique cover of the residual
    candidates.  Stops expanding once node_budget nodes were visited.

    Returns (best_bitmask, nodes_explored, budget_exhausted).
    """
    full = (1 << len(masks)) - 1
    best_mask = 0
    best_size = 0
    nodes = 0
    exhausted = False

    def cover_bound(cand: int) -> int:
        count = 0
        rem = cand
        while rem:
            v = (rem & -rem).bit_length() - 1
            count += 1
            clique = 1 << v
            common = rem & masks[v] & ~(1 << v)
            while common:
                u = (common & -common).bit_length() - 1
                clique |= 1 << u
                common &= masks[u] & ~(1 << u)
            rem &= ~clique
        return count

    def dfs(cand: int, chosen: int, size: int) -> None:
        nonlocal best_mask, best_size, nodes, exhausted
        if exhausted:
            return
        nodes += 1
        if nodes > node_budget:
            exhausted = True
            return
        if size > best_size:
            best_size = size
            best_mask = chosen
        if cand == 0 or size + cover_bound(cand) <= best_size:
            return
        # lowest vertex of maximum degree within the candidate set
        pick = -1
        pick_deg = -1
        rem = cand
        while rem:
            v = (rem & -rem).bit_length() - 1
            rem &= rem - 1
            deg = (masks[v] & cand).bit_count()
            if deg > pick_deg:
                pick, pick_deg = v, deg
        dfs(cand & ~masks[pick], chosen | (1 << pick), size + 1)
        dfs(cand & ~(1 << pick), chosen, size)

    dfs(full, 0, 0)
    return best_mask, nodes, exhausted
