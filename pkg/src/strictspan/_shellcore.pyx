# cython: language_level=3, boundscheck=False, wraparound=False
# distutils: language = c++
"""Compiled shelling search, bit-for-bit the same traversal as
:mod:`strictspan._shellcore_py` but limited to at most 64 facets."""
import time

from libc.stdint cimport uint64_t
from libcpp.unordered_set cimport unordered_set
from libcpp.vector cimport vector

cdef enum:
    CHECK_EVERY = 1024

FOUND, EXHAUSTED, TIMED_OUT = 0, 1, 2
MAX_FACETS = 64


cdef class _Search:
    cdef int n, k, full
    cdef int[:, ::1] ids
    cdef vector[int] count
    cdef vector[int] order
    cdef unordered_set[uint64_t] dead
    cdef long nodes
    cdef double deadline
    cdef bint timed_out

    def __init__(self, int[:, ::1] ids, int n_faces, int k, double budget_secs):
        self.ids = ids
        self.n = ids.shape[0]
        self.k = k
        self.full = (1 << k) - 1
        self.count.assign(n_faces, 0)
        self.nodes = 0
        self.deadline = time.monotonic() + budget_secs
        self.timed_out = False

    cdef bint can_add(self, int f) nogil:
        cdef int i, m, shared = 0
        for i in range(self.k):
            if self.count[self.ids[f, (self.full ^ (1 << i)) - 1]]:
                shared |= 1 << i
        if shared == 0:
            return False
        for m in range(1, self.full):
            if self.count[self.ids[f, m - 1]] and not (shared & ~m):
                return False
        return True

    cdef void place(self, int f, int delta) nogil:
        cdef int m
        for m in range(self.full - 1):
            self.count[self.ids[f, m]] += delta

    cdef bint dfs(self, uint64_t placed, int depth):
        cdef int f
        if depth == self.n:
            return True
        if self.dead.count(placed):
            return False
        self.nodes += 1
        if self.nodes % CHECK_EVERY == 0 and time.monotonic() > self.deadline:
            self.timed_out = True
            return False
        for f in range(self.n):
            if (placed >> f) & 1:
                continue
            if depth and not self.can_add(f):
                continue
            self.place(f, 1)
            self.order.push_back(f)
            if self.dfs(placed | ((<uint64_t>1) << f), depth + 1):
                return True
            self.order.pop_back()
            self.place(f, -1)
            if self.timed_out:
                return False
        self.dead.insert(placed)
        return False


def shell_search(face_ids, int n_faces, int k, double budget_secs):
    """See :func:`strictspan._shellcore_py.shell_search`."""
    import numpy as np

    ids = np.ascontiguousarray(face_ids, dtype=np.intc)
    if ids.shape[0] == 0:
        return EXHAUSTED, None, 0
    if ids.shape[0] > MAX_FACETS:
        raise ValueError(f"compiled kernel handles at most {MAX_FACETS} facets")
    cdef _Search s = _Search(ids, n_faces, k, budget_secs)
    if s.dfs(0, 0):
        return FOUND, [s.order[i] for i in range(s.order.size())], s.nodes
    return (TIMED_OUT if s.timed_out else EXHAUSTED), None, s.nodes
