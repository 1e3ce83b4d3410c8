"""Recognition of 2-balls and 2-spheres, and a battery of necessary
conditions for 3-balls.

Every check returns a :class:`ValidationReport` instead of raising; each
failure is a short ``name: detail`` string so reports can be diffed.
"""
from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field

from .complex import Complex, boundary_complex, connected_components, euler_characteristic, incidence, vertex_link
from .errors import ComplexError

BALL3 = "ball3"
BALL2 = "ball2"
SPHERE2 = "sphere2"
CATEGORIES = (BALL3, BALL2, SPHERE2)


@dataclass
class ValidationReport:
    category_claimed: str
    failures: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    def __bool__(self) -> bool:
        return self.passed

    @property
    def summary(self) -> str:
        if not self.passed:
            return f"not a {self.category_claimed}"
        if self.category_claimed == BALL3:
            return "consistent with a 3-ball"
        return f"is a {self.category_claimed}"

    def to_dict(self) -> dict:
        return {
            "category_claimed": self.category_claimed,
            "passed": self.passed,
            "summary": self.summary,
            "failures": list(self.failures),
        }


def graph_shape(g: Complex) -> str | None:
    """Classify a complex of dimension <= 1 as ``"path"``, ``"cycle"`` or neither.

    A lone vertex counts as a (degenerate) path.
    """
    if g.is_empty or g.dimension > 1:
        return None
    if len(connected_components(g)) != 1:
        return None
    if g.dimension == 0:
        return "path"
    if not g.is_pure:
        return None
    deg: dict[int, int] = defaultdict(int)
    for a, b in g.facets:
        deg[a] += 1
        deg[b] += 1
    nv, ne = len(g.vertices), len(g.facets)
    degrees = sorted(deg.values())
    if ne == nv and nv >= 3 and all(d == 2 for d in degrees):
        return "cycle"
    if ne == nv - 1 and degrees[:2] == [1, 1] and all(d == 2 for d in degrees[2:]):
        return "path"
    return None


def is_1ball(c: Complex) -> bool:
    return not c.is_empty and c.dimension == 1 and graph_shape(c) == "path"


def is_0ball(c: Complex) -> bool:
    return len(c.facets) == 1 and c.dimension == 0


def _pure_of_dim(c: Complex, d: int) -> bool:
    return not c.is_empty and c.is_pure and c.dimension == d


def is_2ball(c: Complex) -> ValidationReport:
    rep = ValidationReport(BALL2)
    if not _pure_of_dim(c, 2):
        rep.failures.append(f"pure-2: dimension {c.dimension}, pure={c.is_pure}")
        return rep
    if len(connected_components(c)) != 1:
        rep.failures.append("connected: more than one component")
    over = [e for e, n in incidence(c, 1).items() if n > 2]
    if over:
        rep.failures.append(f"edge-degree: {len(over)} edges in 3+ triangles")
        return rep
    bad = [v for v in sorted(c.vertices) if graph_shape(vertex_link(c, v)) is None]
    if bad:
        rep.failures.append(f"vertex-links: not a path or cycle at {bad}")
    chi = euler_characteristic(c)
    if chi != 1:
        rep.failures.append(f"euler: chi={chi}, expected 1")
    bd = boundary_complex(c)
    if bd.is_empty:
        rep.failures.append("boundary-cycle: no boundary edges")
    elif graph_shape(bd) != "cycle":
        rep.failures.append("boundary-cycle: boundary edges do not form one cycle")
    return rep


def is_2sphere(c: Complex) -> ValidationReport:
    rep = ValidationReport(SPHERE2)
    if not _pure_of_dim(c, 2):
        rep.failures.append(f"pure-2: dimension {c.dimension}, pure={c.is_pure}")
        return rep
    if len(connected_components(c)) != 1:
        rep.failures.append("connected: more than one component")
    wrong = [e for e, n in incidence(c, 1).items() if n != 2]
    if wrong:
        rep.failures.append(f"edge-degree: {len(wrong)} edges not in exactly two triangles")
        return rep
    bad = [v for v in sorted(c.vertices) if graph_shape(vertex_link(c, v)) != "cycle"]
    if bad:
        rep.failures.append(f"vertex-links: not a cycle at {bad}")
    chi = euler_characteristic(c)
    if chi != 2:
        rep.failures.append(f"euler: chi={chi}, expected 2")
    return rep


def strongly_connected(c: Complex) -> bool:
    """Whether the facets of a pure complex are linked through codimension-one faces."""
    if c.is_empty:
        return False
    d = c.dimension
    by_ridge: dict[tuple, list] = defaultdict(list)
    for f in c.facets:
        for i in range(len(f)):
            by_ridge[f[:i] + f[i + 1:]].append(f)
    start = next(iter(c.facets))
    seen = {start}
    stack = [start]
    while stack:
        f = stack.pop()
        if d == 0:
            break
        for i in range(len(f)):
            for g in by_ridge[f[:i] + f[i + 1:]]:
                if g not in seen:
                    seen.add(g)
                    stack.append(g)
    return len(seen) == len(c.facets)


def validate_3ball(c: Complex) -> ValidationReport:
    """Run necessary conditions for ``c`` to be a simplicial 3-ball.

    Passing means "consistent with a 3-ball"; simple connectivity of the
    interior is not checked.
    """
    rep = ValidationReport(BALL3)
    if not _pure_of_dim(c, 3):
        rep.failures.append(f"pure-3: dimension {c.dimension}, pure={c.is_pure}")
        return rep
    over = [t for t, n in incidence(c, 2).items() if n > 2]
    if over:
        rep.failures.append(f"pseudomanifold: {len(over)} triangles in 3+ facets")
        return rep
    if not strongly_connected(c):
        rep.failures.append("strongly-connected: facets split through triangles")
    chi = euler_characteristic(c)
    if chi != 1:
        rep.failures.append(f"euler: chi={chi}, expected 1")
    try:
        bd = boundary_complex(c)
    except ComplexError as exc:
        rep.failures.append(f"boundary: {exc}")
        return rep
    bd_rep = is_2sphere(bd)
    if not bd_rep:
        rep.failures.extend(f"boundary-sphere: {f}" for f in bd_rep.failures)
    bad = []
    for v in sorted(c.vertices):
        lk = vertex_link(c, v)
        if not (is_2ball(lk) or is_2sphere(lk)):
            bad.append(v)
    if bad:
        rep.failures.append(f"vertex-links: neither 2-ball nor 2-sphere at {bad}")
    return rep


def validate(c: Complex, claim: str) -> ValidationReport:
    if claim == BALL3:
        return validate_3ball(c)
    if claim == BALL2:
        return is_2ball(c)
    if claim == SPHERE2:
        return is_2sphere(c)
    raise ValueError(f"unknown category {claim!r}; choose from {CATEGORIES}")


def boundary_vertices(c: Complex) -> frozenset[int]:
    return boundary_complex(c).vertices

