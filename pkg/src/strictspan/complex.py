"""Finite simplicial complexes stored by their facets.

A simplex is a strictly increasing tuple of integer vertex labels. A
:class:`Complex` keeps only its inclusion-maximal faces; every other face
is derived on demand from a face table that is computed once per instance.
"""
from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from functools import cached_property
from itertools import combinations
from typing import Iterable, Iterator, Union

from .errors import ComplexError, NonMaximalFacet, NonPure, NotASubcomplex, OverusedFace, UnknownVertex

Simplex = tuple[int, ...]


def simplex(vertices: Iterable[int]) -> Simplex:
    """Return the canonical form of a vertex collection."""
    vs = tuple(sorted(vertices))
    if not vs:
        raise ComplexError("a simplex needs at least one vertex")
    if any(a == b for a, b in zip(vs, vs[1:])):
        raise ComplexError(f"repeated vertex in {vs}")
    return vs


def simplex_key(s: Simplex) -> tuple[int, Simplex]:
    """Sort key giving the canonical order: by dimension, then lexicographic."""
    return (len(s), s)


def proper_faces(s: Simplex) -> Iterator[Simplex]:
    for k in range(1, len(s)):
        yield from combinations(s, k)


class Complex:
    """Simplicial complex given by a set of facets.

    Construction canonicalizes every facet and rejects a facet that is a
    face of another one. Use :meth:`from_faces` to build a complex from an
    arbitrary face collection, keeping the maximal ones.
    """

    __slots__ = ("facets", "__dict__")

    def __init__(self, facets: Iterable[Iterable[int]] = ()):
        fs = frozenset(simplex(f) for f in facets)
        by_size = sorted(fs, key=len)
        for i, small in enumerate(by_size):
            ss = set(small)
            for big in by_size[i + 1:]:
                if len(big) > len(small) and ss.issubset(big):
                    raise NonMaximalFacet(f"{small} is a face of {big}")
        self.facets: frozenset[Simplex] = fs

    @classmethod
    def from_faces(cls, faces: Iterable[Iterable[int]], canonical: bool = False) -> "Complex":
        """Complex generated by ``faces``; pass ``canonical=True`` for sorted tuples."""
        fs = set(faces) if canonical else {simplex(f) for f in faces}
        closure_minus_max = set()
        for f in fs:
            closure_minus_max.update(proper_faces(f))
        return cls._trusted(fs - closure_minus_max)

    @classmethod
    def _trusted(cls, facets: Iterable[Simplex]) -> "Complex":
        out = cls.__new__(cls)
        out.facets = frozenset(facets)
        return out

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Complex) and self.facets == other.facets

    def __hash__(self) -> int:
        return hash(self.facets)

    def __len__(self) -> int:
        return len(self.facets)

    def __repr__(self) -> str:
        return f"Complex({[list(f) for f in self.sorted_facets()]})"

    def sorted_facets(self) -> list[Simplex]:
        return sorted(self.facets, key=simplex_key)

    @property
    def is_empty(self) -> bool:
        return not self.facets

    @property
    def dimension(self) -> int | None:
        """Largest facet dimension, or ``None`` for the empty complex."""
        if not self.facets:
            return None
        return max(len(f) for f in self.facets) - 1

    @property
    def is_pure(self) -> bool:
        return len({len(f) for f in self.facets}) <= 1

    @cached_property
    def face_table(self) -> dict[int, frozenset[Simplex]]:
        table: dict[int, set[Simplex]] = defaultdict(set)
        for f in self.facets:
            for k in range(1, len(f) + 1):
                table[k - 1].update(combinations(f, k))
        return {k: frozenset(v) for k, v in table.items()}

    @cached_property
    def all_faces(self) -> frozenset[Simplex]:
        return frozenset().union(*self.face_table.values())

    @cached_property
    def vertices(self) -> frozenset[int]:
        return frozenset(v for f in self.facets for v in f)

    def has_face(self, s: Iterable[int]) -> bool:
        return simplex(s) in self.all_faces


@dataclass(frozen=True)
class Graph1Complex:
    """A graph viewed as a complex of dimension at most one."""

    vertices: frozenset[int]
    edges: frozenset[Simplex] = frozenset()

    def __post_init__(self):
        for e in self.edges:
            if len(e) != 2 or not set(e) <= self.vertices:
                raise ComplexError(f"edge {e} is not an edge on the vertex set")

    def as_complex(self) -> Complex:
        return Complex.from_faces([(v,) for v in self.vertices] + list(self.edges))

    @classmethod
    def induced(cls, c: Complex, vertices: Iterable[int]) -> "Graph1Complex":
        """Maximal subgraph of the 1-skeleton of ``c`` on the given vertices."""
        vs = frozenset(vertices)
        edges = frozenset(e for e in faces(c, 1) if e[0] in vs and e[1] in vs)
        return cls(vs, edges)


def faces(c: Complex, k: int) -> frozenset[Simplex]:
    """All k-dimensional faces of the closure of ``c``."""
    if k < 0:
        raise ValueError("face dimension must be non-negative")
    return c.face_table.get(k, frozenset())


def incidence(c: Complex, k: int) -> dict[Simplex, int]:
    """Number of facets containing each k-face."""
    counts: dict[Simplex, int] = defaultdict(int)
    for f in c.facets:
        for s in combinations(f, k + 1):
            counts[s] += 1
    return dict(counts)


def boundary_complex(b: Complex) -> Complex:
    """Codimension-one faces lying in exactly one facet of a pure complex."""
    if b.is_empty:
        return Complex()
    if not b.is_pure:
        raise NonPure("boundary is only defined here for pure complexes")
    d = b.dimension
    if d == 0:
        return Complex()
    counts = incidence(b, d - 1)
    over = sorted(s for s, n in counts.items() if n > 2)
    if over:
        raise OverusedFace(f"faces in three or more facets: {over[:5]}")
    return Complex._trusted(s for s, n in counts.items() if n == 1)


def _vertices_of(s: Union[Graph1Complex, Complex, Iterable[Iterable[int]]]) -> tuple[frozenset[int], list[Simplex]]:
    if isinstance(s, Graph1Complex):
        return s.vertices, [(v,) for v in s.vertices] + sorted(s.edges)
    if isinstance(s, Complex):
        return s.vertices, sorted(s.all_faces)
    simplices = [simplex(x) for x in s]
    return frozenset(v for x in simplices for v in x), simplices


def closed_star(c: Complex, s) -> Complex:
    """Closure of every facet of ``c`` meeting the subcomplex ``s``."""
    vs, simplices = _vertices_of(s)
    missing = [x for x in simplices if x not in c.all_faces]
    if missing:
        raise NotASubcomplex(f"not faces of the ambient complex: {missing[:5]}")
    return Complex._trusted(f for f in c.facets if not vs.isdisjoint(f))


def vertex_link(c: Complex, v: int) -> Complex:
    if v not in c.vertices:
        raise UnknownVertex(v)
    return Complex.from_faces((tuple(x for x in f if x != v) for f in c.facets if v in f and len(f) > 1), canonical=True)


def connected_components(c: Complex) -> list[Complex]:
    """Facets grouped by shared vertices, ordered by smallest vertex."""
    parent: dict[int, int] = {}

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for v in c.vertices:
        parent[v] = v
    for f in c.facets:
        r = find(f[0])
        for x in f[1:]:
            rx = find(x)
            if rx != r:
                parent[rx] = r
    groups: dict[int, list[Simplex]] = defaultdict(list)
    for f in c.facets:
        groups[find(f[0])].append(f)
    comps = [Complex._trusted(g) for g in groups.values()]
    comps.sort(key=lambda k: min(k.vertices))
    return comps


def intersection(a: Complex, b: Complex) -> Complex:
    """Common faces of both closures, returned by their maximal faces."""
    small, big = (a, b) if len(a.all_faces) <= len(b.all_faces) else (b, a)
    return Complex.from_faces((s for s in small.all_faces if s in big.all_faces), canonical=True)


def union(a: Complex, b: Complex) -> Complex:
    return Complex.from_faces(a.facets | b.facets)


def is_subcomplex(a: Complex, b: Complex) -> bool:
    return a.all_faces <= b.all_faces


def euler_characteristic(c: Complex) -> int:
    return sum((-1) ** k * len(fs) for k, fs in c.face_table.items())


def f_vector(c: Complex) -> list[int]:
    if c.is_empty:
        return []
    return [len(c.face_table[k]) for k in range(c.dimension + 1)]
