"""Interior structure, spanning edges, strictness and reducedness of 3-balls,
plus the nonconstructibility test built on them.

Also hosts the 2-ball operations used when reasoning about divides:
splitting a disk along a chord, picking outermost chords, and executable
forms of the two star/chord lemmas so they can be fuzzed.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass, field

from .complex import (
    Complex,
    Graph1Complex,
    Simplex,
    boundary_complex,
    closed_star,
    connected_components,
    faces,
    intersection,
    simplex,
)
from .errors import ComplexError, NotAChord, NotADisk, NotASpanningEdge, PreconditionViolated
from .validation import is_2ball, validate_3ball


class Verdict(enum.Enum):
    NONCONSTRUCTIBLE = "nonconstructible"
    UNKNOWN = "unknown"
    INVALID_INPUT = "invalid-input"


@dataclass(frozen=True)
class InteriorGraph:
    components: tuple[Graph1Complex, ...]

    @property
    def vertices(self) -> frozenset[int]:
        return frozenset().union(*(g.vertices for g in self.components))

    def to_dict(self) -> list[dict]:
        return [{"vertices": sorted(g.vertices), "edges": [list(e) for e in sorted(g.edges)]} for g in self.components]


@dataclass(frozen=True)
class ComponentCheck:
    """How one interior component bears on one spanning edge.

    ``pieces`` lists the vertex sets of the connected components of
    the boundary meeting the star of the component; ``endpoint_pieces``
    gives the index into ``pieces`` of each endpoint, ``None`` if the
    endpoint is outside the star.
    """

    component: int
    pieces: tuple[tuple[int, ...], ...]
    endpoint_pieces: tuple[int | None, int | None]

    @property
    def same_piece(self) -> bool:
        a, b = self.endpoint_pieces
        return a is not None and a == b

    @property
    def reason(self) -> str:
        a, b = self.endpoint_pieces
        if a is None or b is None:
            return "endpoint-outside-star"
        return "same-piece" if a == b else "different-pieces"

    def to_dict(self) -> dict:
        return {
            "component": self.component,
            "pieces": [list(p) for p in self.pieces],
            "endpoint_pieces": list(self.endpoint_pieces),
            "reason": self.reason,
        }


@dataclass(frozen=True)
class SpanningEdgeInfo:
    edge: Simplex
    strict: bool
    witness: tuple[int, int] | None = None
    checks: tuple[ComponentCheck, ...] = ()

    def to_dict(self) -> dict:
        return {
            "edge": list(self.edge),
            "strict": self.strict,
            "witness": None if self.witness is None else {"component": self.witness[0], "piece": self.witness[1]},
            "checks": [c.to_dict() for c in self.checks],
        }


@dataclass(frozen=True)
class Reducedness:
    reduced: bool
    violations: tuple[Simplex, ...] = ()

    def __bool__(self) -> bool:
        return self.reduced


@dataclass
class BallReport:
    spanning: list[SpanningEdgeInfo]
    interior: InteriorGraph
    reduced: bool
    verdict: Verdict
    reduced_violations: list[Simplex] = field(default_factory=list)
    diagnostics: list[str] = field(default_factory=list)

    def to_dict(self) -> dict:
        return {
            "verdict": self.verdict.value,
            "reduced": self.reduced,
            "reduced_violations": [list(t) for t in self.reduced_violations],
            "interior_components": self.interior.to_dict(),
            "spanning_edges": [s.to_dict() for s in self.spanning],
            "diagnostics": list(self.diagnostics),
        }


def interior_vertices(b: Complex) -> frozenset[int]:
    return b.vertices - boundary_complex(b).vertices


def interior_graph(b: Complex) -> InteriorGraph:
    """Maximal connected pieces of the graph of interior vertices and edges."""
    inner = interior_vertices(b)
    g = Graph1Complex.induced(b, inner)
    comps = []
    for piece in connected_components(g.as_complex()):
        vs = piece.vertices
        comps.append(Graph1Complex(vs, frozenset(e for e in g.edges if e[0] in vs)))
    return InteriorGraph(tuple(comps))


def classify_edges(b: Complex) -> dict[str, list[Simplex]]:
    """Partition the edges of ``b`` into boundary, spanning, interior and half-interior."""
    bd = boundary_complex(b)
    bd_edges = faces(bd, 1)
    bd_vertices = bd.vertices
    out: dict[str, list[Simplex]] = {"boundary": [], "spanning": [], "interior": [], "half": []}
    for e in sorted(faces(b, 1)):
        inside = sum(v not in bd_vertices for v in e)
        if e in bd_edges:
            out["boundary"].append(e)
        elif inside == 0:
            out["spanning"].append(e)
        elif inside == 2:
            out["interior"].append(e)
        else:
            out["half"].append(e)
    return out


def spanning_edges(b: Complex) -> list[Simplex]:
    return classify_edges(b)["spanning"]


def _strictness(b: Complex, bd: Complex, components, e: Simplex) -> SpanningEdgeInfo:
    u, v = e
    checks = []
    witness = None
    for idx, comp in enumerate(components):
        meet = intersection(bd, closed_star(b, comp))
        pieces = connected_components(meet)
        where = []
        for x in (u, v):
            where.append(next((i for i, p in enumerate(pieces) if x in p.vertices), None))
        chk = ComponentCheck(idx, tuple(tuple(sorted(p.vertices)) for p in pieces), (where[0], where[1]))
        checks.append(chk)
        if chk.same_piece and witness is None:
            witness = (idx, where[0])
    return SpanningEdgeInfo(e, witness is None, witness, tuple(checks))


def is_strict(b: Complex, e) -> SpanningEdgeInfo:
    """Decide strictness of a spanning edge.

    The edge is nonstrict when, for some maximal interior component ``I``,
    both endpoints lie in one connected component of the boundary
    intersected with the closed star of ``I``. With no interior components
    every spanning edge is strict.
    """
    e = simplex(e)
    if e not in spanning_edges(b):
        raise NotASpanningEdge(f"{e} is not a spanning edge")
    return _strictness(b, boundary_complex(b), interior_graph(b).components, e)


def is_reduced(b: Complex) -> Reducedness:
    bd = boundary_complex(b)
    bd_tris = faces(bd, 2)
    bd_edges = faces(bd, 1)
    bad = []
    for t in sorted(faces(b, 2)):
        if t in bd_tris:
            continue
        on_bd = sum(e in bd_edges for e in ((t[0], t[1]), (t[0], t[2]), (t[1], t[2])))
        if on_bd > 1:
            bad.append(t)
    return Reducedness(not bad, tuple(bad))


def verdict_for(reduced: bool, strict_flags: list[bool]) -> Verdict:
    if reduced and strict_flags and all(strict_flags):
        return Verdict.NONCONSTRUCTIBLE
    return Verdict.UNKNOWN


def theorem_decide(b: Complex) -> BallReport:
    """Apply the strict-spanning-edge test for nonconstructibility.

    ``NONCONSTRUCTIBLE`` is only returned for a reduced ball whose spanning
    edges exist and are all strict; anything else is ``UNKNOWN``, which
    never claims constructibility.
    """
    empty = InteriorGraph(())
    try:
        rep = validate_3ball(b)
    except ComplexError as exc:
        return BallReport([], empty, False, Verdict.INVALID_INPUT, diagnostics=[str(exc)])
    if not rep.passed:
        return BallReport([], empty, False, Verdict.INVALID_INPUT, diagnostics=list(rep.failures))
    bd = boundary_complex(b)
    interior = interior_graph(b)
    spanning = [_strictness(b, bd, interior.components, e) for e in spanning_edges(b)]
    red = is_reduced(b)
    verdict = verdict_for(red.reduced, [s.strict for s in spanning])
    return BallReport(spanning, interior, red.reduced, verdict, list(red.violations), [rep.summary])


# -- 2-ball operations -------------------------------------------------------


def _require_disk(d: Complex) -> Complex:
    rep = is_2ball(d)
    if not rep:
        raise NotADisk("; ".join(rep.failures))
    return boundary_complex(d)


def split_disk_along_edge(d: Complex, e) -> tuple[Complex, Complex]:
    """Cut a 2-ball along a chord into the two sub-disks on either side.

    The side holding the smallest triangle comes first; both sides
    contain the chord.
    """
    e = simplex(e)
    bd = _require_disk(d)
    if len(e) != 2 or e not in d.all_faces:
        raise NotAChord(f"{e} is not an edge of the disk")
    if e in bd.all_faces:
        raise NotAChord(f"{e} lies on the boundary")
    if not set(e) <= bd.vertices:
        raise NotAChord(f"{e} has an interior endpoint")
    tris = sorted(d.facets)
    by_edge: dict[Simplex, list[Simplex]] = {}
    for t in tris:
        for x in ((t[0], t[1]), (t[0], t[2]), (t[1], t[2])):
            if x != e:
                by_edge.setdefault(x, []).append(t)
    sides = []
    seen: set[Simplex] = set()
    for t in tris:
        if t in seen:
            continue
        comp = {t}
        stack = [t]
        while stack:
            s = stack.pop()
            for x in ((s[0], s[1]), (s[0], s[2]), (s[1], s[2])):
                for nb in by_edge.get(x, ()):
                    if nb not in comp:
                        comp.add(nb)
                        stack.append(nb)
        seen |= comp
        sides.append(Complex(comp))
    if len(sides) != 2:
        raise NotAChord(f"{e} does not separate the disk into two pieces")
    return sides[0], sides[1]


def outermost_spanning_edges(d: Complex, s) -> list[Simplex]:
    """Chords in ``s`` that cut off a sub-disk containing no other chord of ``s``."""
    chords = sorted({simplex(e) for e in s})
    out = []
    for e in chords:
        others = [x for x in chords if x != e]
        for side in split_disk_along_edge(d, e):
            if not any(x in side.all_faces for x in others):
                out.append(e)
                break
    return out


def _lemma_setup(d: Complex, w) -> tuple[Complex, frozenset[int], Graph1Complex, list[Complex]]:
    rep = is_2ball(d)
    if not rep:
        raise PreconditionViolated("not-a-disk", "; ".join(rep.failures))
    bd = boundary_complex(d)
    w = frozenset(w)
    if not w <= bd.vertices:
        raise PreconditionViolated("w-not-on-boundary", f"{sorted(w - bd.vertices)} are interior")
    g = Graph1Complex.induced(d, d.vertices - w)
    comps = connected_components(g.as_complex()) if g.vertices else []
    return bd, w, g, comps


def _w_chords(d: Complex, bd: Complex, w: frozenset[int]) -> list[Simplex]:
    return [e for e in sorted(faces(d, 1)) if e[0] in w and e[1] in w and e not in bd.all_faces]


def lemma_21_check(d: Complex, w) -> bool:
    """Whether the closed star of the graph spanned by the non-``w`` vertices is all of ``d``.

    Hypotheses, each raising :class:`PreconditionViolated` with the named
    tag: ``d`` is a 2-ball, ``w`` lies on its boundary, that graph is
    nonempty and connected, and no chord of ``d`` joins two ``w`` vertices.
    """
    bd, w, g, comps = _lemma_setup(d, w)
    if len(comps) != 1:
        raise PreconditionViolated("i-not-connected", f"{len(comps)} components")
    chords = _w_chords(d, bd, w)
    if chords:
        raise PreconditionViolated("w-chord", f"{chords[0]} joins two vertices of w off the boundary")
    return closed_star(d, g) == d


def lemma_22_witness(d: Complex, w) -> Simplex | None:
    """An edge off the boundary of ``d`` joining two ``w`` vertices, when the
    graph on the remaining vertices falls apart."""
    bd, w, _, comps = _lemma_setup(d, w)
    if len(comps) < 2:
        raise PreconditionViolated("i-connected", f"{len(comps)} component(s)")
    chords = _w_chords(d, bd, w)
    return chords[0] if chords else None
