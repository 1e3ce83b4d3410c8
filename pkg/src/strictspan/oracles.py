"""Exact shellability and constructibility deciders with replayable certificates.

Both searches are exponential and meant for desk-scale inputs. The
shelling search runs in the compiled kernel when available; certificates
are always replayed by verifiers that only use set operations on
complexes, never the search tables.
"""
from __future__ import annotations

import logging
import time
from dataclasses import dataclass
from itertools import combinations
from typing import Union

from . import _backend
from .complex import Complex, Simplex, intersection
from .errors import BudgetExceeded, ComplexError, MalformedTree, NonPure, NotAPermutation, Timeout
from .validation import is_0ball, is_1ball, is_2ball

log = logging.getLogger(__name__)

BALL = "ball"
LITERAL = "literal"
MODES = (BALL, LITERAL)
DEFAULT_BUDGET_SECS = 120.0
DEFAULT_FACET_CAP = 14


@dataclass(frozen=True)
class ShellingCertificate:
    order: tuple[Simplex, ...]

    def to_dict(self) -> dict:
        return {"type": "shelling", "order": [list(f) for f in self.order]}


@dataclass(frozen=True)
class Leaf:
    facet: Simplex

    def facets(self) -> list[Simplex]:
        return [self.facet]

    def to_dict(self) -> dict:
        return {"leaf": list(self.facet)}


@dataclass(frozen=True)
class Split:
    """One construction step.

    ``divide`` is the intersection of the two sides. In literal mode
    ``divide_tree`` certifies that the divide is itself constructible; a
    zero-dimensional divide needs no tree.
    """

    left: "ConstructionTree"
    right: "ConstructionTree"
    divide: Complex
    divide_tree: "ConstructionTree | None" = None

    def facets(self) -> list[Simplex]:
        return self.left.facets() + self.right.facets()

    def to_dict(self) -> dict:
        return {
            "left": self.left.to_dict(),
            "right": self.right.to_dict(),
            "divide": [list(f) for f in self.divide.sorted_facets()],
            "divide_tree": None if self.divide_tree is None else self.divide_tree.to_dict(),
        }


ConstructionTree = Union[Leaf, Split]


def tree_from_dict(data: dict) -> ConstructionTree:
    if "leaf" in data:
        return Leaf(tuple(data["leaf"]))
    sub = data.get("divide_tree")
    return Split(
        tree_from_dict(data["left"]),
        tree_from_dict(data["right"]),
        Complex(data["divide"]),
        None if sub is None else tree_from_dict(sub),
    )


def tree_depth(t: ConstructionTree) -> int:
    if isinstance(t, Leaf):
        return 0
    return 1 + max(tree_depth(t.left), tree_depth(t.right))


def _require_pure(c: Complex) -> int:
    if c.is_empty:
        raise ComplexError("empty complex")
    if not c.is_pure:
        raise NonPure("oracles need a pure complex")
    return c.dimension


# -- shellability ------------------------------------------------------------


def _shell_tables(facets: list[Simplex]) -> tuple[list[list[int]], int, int]:
    k = len(facets[0])
    full = (1 << k) - 1
    ids: dict[Simplex, int] = {}
    table = []
    for f in facets:
        row = []
        for m in range(1, full):
            face = tuple(f[i] for i in range(k) if m >> i & 1)
            row.append(ids.setdefault(face, len(ids)))
        table.append(row)
    return table, len(ids), k


def is_shellable(
    c: Complex, budget_secs: float = DEFAULT_BUDGET_SECS, backend: str | None = None
) -> ShellingCertificate | None:
    """Search for a shelling order of a pure complex.

    Returns ``None`` only after the search has been exhausted; raises
    :class:`Timeout` when the budget runs out first.
    """
    d = _require_pure(c)
    facets = c.sorted_facets()
    if len(facets) == 1:
        return ShellingCertificate(tuple(facets))
    if d == 0:
        return None
    table, n_faces, k = _shell_tables(facets)
    status, order, nodes = _backend.shell_search(table, n_faces, k, budget_secs, backend)
    log.debug("shelling search: status=%s nodes=%d", status, nodes)
    if status == _backend.TIMED_OUT:
        raise Timeout(f"no shelling decided within {budget_secs:g}s ({nodes} nodes)")
    if status == _backend.EXHAUSTED:
        return None
    return ShellingCertificate(tuple(facets[i] for i in order))


def verify_shelling(c: Complex, cert: ShellingCertificate) -> bool:
    """Replay a shelling order with explicit complex intersections."""
    order = [tuple(f) for f in cert.order]
    if len(order) != len(set(order)) or set(order) != set(c.facets):
        raise NotAPermutation("certificate is not a permutation of the facets")
    if not order:
        return False
    d = len(order[0]) - 1
    for j in range(1, len(order)):
        meet = intersection(Complex([order[j]]), Complex.from_faces(order[:j]))
        if meet.is_empty or not meet.is_pure or meet.dimension != d - 1:
            return False
    return True


# -- constructibility --------------------------------------------------------


def _is_ball_of_dim(c: Complex, k: int) -> bool:
    if k == 2:
        return is_2ball(c).passed
    if k == 1:
        return is_1ball(c)
    if k == 0:
        return is_0ball(c)
    raise ValueError(f"no ball recognizer for dimension {k}")


def _shelling_tree(order: list[Simplex], mode: str) -> ConstructionTree:
    """Left-leaning construction tree read off a shelling order."""
    tree: ConstructionTree = Leaf(order[0])
    for j in range(1, len(order)):
        divide = intersection(Complex.from_faces(order[:j]), Complex([order[j]]))
        sub = None
        if mode == LITERAL and divide.dimension:
            sub = _shelling_tree(divide.sorted_facets(), mode)
        tree = Split(tree, Leaf(order[j]), divide, sub)
    return tree


class _Search:
    """Memoized search over facet bipartitions of one pure complex."""

    def __init__(self, c: Complex, mode: str, deadline: float, use_shelling: bool, memo: dict):
        self.facets = c.sorted_facets()
        self.d = c.dimension
        self.mode = mode
        self.deadline = deadline
        self.use_shelling = use_shelling
        self.shared_memo = memo
        ids: dict[Simplex, int] = {}
        self.face_bits = []
        for f in self.facets:
            bits = 0
            for k in range(1, len(f) + 1):
                for s in combinations(f, k):
                    bits |= 1 << ids.setdefault(s, len(ids))
            self.face_bits.append(bits)
        self.face_of = {i: s for s, i in ids.items()}
        self.closure_memo: dict[int, int] = {}
        self.divide_memo: dict[int, tuple[bool, Complex, ConstructionTree | None]] = {}
        self.memo: dict[int, ConstructionTree | None] = {}
        self.steps = 0

    def closure(self, mask: int) -> int:
        got = self.closure_memo.get(mask)
        if got is None:
            got = 0
            m = mask
            while m:
                low = m & -m
                got |= self.face_bits[low.bit_length() - 1]
                m ^= low
            self.closure_memo[mask] = got
        return got

    def divide_ok(self, bits: int) -> tuple[bool, Complex, ConstructionTree | None]:
        hit = self.divide_memo.get(bits)
        if hit is not None:
            return hit
        faces = []
        m = bits
        while m:
            low = m & -m
            faces.append(self.face_of[low.bit_length() - 1])
            m ^= low
        divide = Complex.from_faces(faces)
        ok, sub = False, None
        if self.mode == BALL:
            ok = _is_ball_of_dim(divide, self.d - 1)
        elif divide.is_pure and divide.dimension == self.d - 1:
            sub = _literal_divide_tree(divide, self.deadline, self.use_shelling, self.shared_memo)
            ok = sub is not None or (self.d == 1 and len(divide.facets) <= 2)
        res = (ok, divide, sub)
        self.divide_memo[bits] = res
        return res

    def solve(self, mask: int) -> ConstructionTree | None:
        if mask & (mask - 1) == 0:
            return Leaf(self.facets[mask.bit_length() - 1])
        if mask in self.memo:
            return self.memo[mask]
        result = None
        if self.d == 0:
            # Zero-dimensional convention: constructible iff at most two vertices.
            if bin(mask).count("1") == 2:
                low = mask & -mask
                result = Split(self.solve(low), self.solve(mask ^ low), Complex())
            self.memo[mask] = result
            return result
        low = mask & -mask
        rest = mask ^ low
        sub = 0
        while True:
            self.steps += 1
            if self.steps % 512 == 0 and time.monotonic() > self.deadline:
                raise Timeout("constructibility search exceeded its budget")
            a, b = low | sub, rest ^ sub
            if b:
                meet = self.closure(a) & self.closure(b)
                if meet:
                    ok, divide, dtree = self.divide_ok(meet)
                    if ok:
                        ta = self.solve(a)
                        tb = self.solve(b) if ta is not None else None
                        if tb is not None:
                            result = Split(ta, tb, divide, dtree)
                            break
            sub = (sub - rest) & rest
            if sub == 0:
                break
        self.memo[mask] = result
        return result

    def run(self) -> ConstructionTree | None:
        return self.solve((1 << len(self.facets)) - 1)


def _literal_divide_tree(divide: Complex, deadline: float, use_shelling: bool, memo: dict) -> ConstructionTree | None:
    key = divide.facets
    if key in memo:
        return memo[key]
    tree = None
    if divide.dimension == 0:
        if len(divide.facets) == 1:
            tree = Leaf(divide.sorted_facets()[0])
    else:
        if use_shelling:
            try:
                cert = is_shellable(divide, max(deadline - time.monotonic(), 0.0))
            except Timeout:
                cert = None
            if cert is not None:
                tree = _shelling_tree(list(cert.order), LITERAL)
        if tree is None:
            tree = _Search(divide, LITERAL, deadline, use_shelling, memo).run()
    memo[key] = tree
    return tree


def is_constructible(
    c: Complex,
    mode: str = BALL,
    budget_secs: float = DEFAULT_BUDGET_SECS,
    facet_cap: int = DEFAULT_FACET_CAP,
    use_shelling: bool = True,
    backend: str | None = None,
) -> ConstructionTree | None:
    """Decide constructibility of a pure complex.

    A shelling, when found, is turned into a tree directly. Otherwise the
    bipartition search runs, with the lowest facet pinned to the left side;
    it refuses inputs above ``facet_cap`` facets. ``None`` means the
    exhaustive search completed without finding a construction.
    """
    if mode not in MODES:
        raise ValueError(f"mode must be one of {MODES}")
    d = _require_pure(c)
    if mode == BALL and d > 3:
        raise ValueError("ball mode handles complexes of dimension 0 to 3")
    facets = c.sorted_facets()
    if len(facets) == 1:
        return Leaf(facets[0])
    start = time.monotonic()
    deadline = start + budget_secs
    if use_shelling:
        share = budget_secs if len(facets) > facet_cap else budget_secs / 2
        try:
            cert = is_shellable(c, share, backend)
        except Timeout:
            cert = None
        if cert is not None:
            tree = _shelling_tree(list(cert.order), mode)
            if verify_construction(c, tree, mode):
                return tree
    if len(facets) > facet_cap:
        raise BudgetExceeded(f"{len(facets)} facets exceed the exhaustive-search cap of {facet_cap}")
    if d == 0 and mode == BALL:
        return None
    return _Search(c, mode, deadline, use_shelling, {}).run()


def verify_construction(c: Complex, tree: ConstructionTree, mode: str = BALL) -> bool:
    """Replay a construction tree against ``c`` without any search."""
    leaves = tree.facets()
    if len(leaves) != len(set(leaves)) or set(leaves) != set(c.facets):
        raise MalformedTree("tree leaves do not partition the facets")
    if c.is_empty or not c.is_pure:
        return False
    return _verify_node(tree, c.dimension, mode)


def _verify_node(t: ConstructionTree, d: int, mode: str) -> bool:
    if isinstance(t, Leaf):
        return True
    if not isinstance(t, Split):
        raise MalformedTree(f"unexpected node {t!r}")
    left, right = Complex(t.left.facets()), Complex(t.right.facets())
    if left.facets & right.facets:
        raise MalformedTree("sides of a split share a facet")
    meet = intersection(left, right)
    if meet != t.divide:
        return False
    if d == 0:
        return mode == LITERAL and len(left.facets) + len(right.facets) <= 2
    if mode == BALL:
        ok = _is_ball_of_dim(meet, d - 1)
    elif meet.is_empty or not meet.is_pure or meet.dimension != d - 1:
        ok = False
    elif d == 1:
        ok = len(meet.facets) <= 2
    else:
        ok = t.divide_tree is not None and verify_construction(meet, t.divide_tree, LITERAL)
    return ok and _verify_node(t.left, d, mode) and _verify_node(t.right, d, mode)


@dataclass
class ConsistencyResult:
    verdict: str
    constructible: bool | None
    consistent: bool
    tree: ConstructionTree | None = None


def consistency_check(c: Complex, mode: str = BALL, budget_secs: float = 30.0, facet_cap: int = DEFAULT_FACET_CAP) -> ConsistencyResult:
    """Cross-check the strict-spanning-edge verdict against the exhaustive oracle.

    A ``nonconstructible`` verdict contradicted by a verified construction
    tree is reported as inconsistent. ``constructible`` is ``None`` when the
    oracle did not finish.
    """
    from .ball import Verdict, theorem_decide

    verdict = theorem_decide(c).verdict
    try:
        tree = is_constructible(c, mode, budget_secs, facet_cap)
    except (Timeout, BudgetExceeded):
        return ConsistencyResult(verdict.value, None, True)
    found = tree is not None and verify_construction(c, tree, mode)
    consistent = not (verdict is Verdict.NONCONSTRUCTIBLE and found)
    return ConsistencyResult(verdict.value, found, consistent, tree)
