"""Pure-Python shelling search; the reference for the compiled kernel.

Facets are indexed ``0..n-1``. ``face_ids[f][m - 1]`` is the global id of
the proper face of facet ``f`` whose vertices are selected by the local
bitmask ``m`` (bit ``i`` picks the ``i``-th vertex of the facet). All
facets share one dimension, so the local mask layout is common.
"""
from __future__ import annotations

import time

FOUND, EXHAUSTED, TIMED_OUT = 0, 1, 2
CHECK_EVERY = 1024


def shell_search(face_ids, n_faces: int, k: int, budget_secs: float):
    """Depth-first search for a shelling order.

    Returns ``(status, order, nodes)``; ``order`` is a list of facet
    indices when ``status == FOUND``. Facets are tried in index order and
    facet subsets known not to extend to a shelling are memoized, so the
    first order found is deterministic.
    """
    n = len(face_ids)
    full = (1 << k) - 1
    ridge_masks = [full ^ (1 << i) for i in range(k)]
    count = [0] * n_faces
    dead: set[int] = set()
    order: list[int] = []
    deadline = time.monotonic() + budget_secs
    nodes = 0
    timed_out = False

    def can_add(f: int) -> bool:
        ids = face_ids[f]
        shared = 0
        for i in range(k):
            if count[ids[ridge_masks[i] - 1]]:
                shared |= 1 << i
        if not shared:
            return False
        for m in range(1, full):
            if count[ids[m - 1]] and not (shared & ~m):
                return False
        return True

    def place(f: int, delta: int) -> None:
        for fid in face_ids[f]:
            count[fid] += delta

    def dfs(placed: int, depth: int) -> bool:
        nonlocal nodes, timed_out
        if depth == n:
            return True
        if placed in dead:
            return False
        nodes += 1
        if nodes % CHECK_EVERY == 0 and time.monotonic() > deadline:
            timed_out = True
            return False
        for f in range(n):
            if placed >> f & 1:
                continue
            if depth and not can_add(f):
                continue
            place(f, 1)
            order.append(f)
            if dfs(placed | (1 << f), depth + 1):
                return True
            order.pop()
            place(f, -1)
            if timed_out:
                return False
        dead.add(placed)
        return False

    if n == 0:
        return EXHAUSTED, None, 0
    found = dfs(0, 0)
    if found:
        return FOUND, list(order), nodes
    return (TIMED_OUT if timed_out else EXHAUSTED), None, nodes
