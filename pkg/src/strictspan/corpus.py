"""Built-in instances and seeded generators of shellable balls and disks."""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from itertools import combinations
from typing import Callable

from .complex import Complex, Simplex, boundary_complex, simplex
from .errors import GenerationStuck, InstanceUnavailable
from .validation import is_2ball, validate_3ball

EXAMPLE_3_2_FACETS: tuple[Simplex, ...] = (
    (1, 2, 6, 7), (1, 2, 7, 8), (1, 2, 6, 8), (1, 3, 5, 8), (1, 3, 6, 8),
    (1, 3, 4, 6), (1, 4, 6, 7), (1, 4, 5, 7), (1, 5, 7, 8),
    (5, 8, 9, 11), (3, 5, 8, 9), (3, 6, 8, 9), (3, 6, 9, 10), (3, 4, 6, 10),
    (4, 6, 7, 10), (4, 7, 10, 11), (4, 5, 7, 11), (5, 7, 8, 11),
    (3, 4, 10, 13), (3, 10, 12, 13), (3, 9, 10, 12), (3, 5, 9, 12), (5, 9, 12, 14),
    (5, 9, 11, 14), (4, 5, 11, 14), (4, 11, 13, 14), (4, 10, 11, 13),
    (6, 7, 10, 13), (6, 10, 12, 13), (6, 9, 10, 12), (6, 8, 9, 12), (8, 9, 12, 14),
    (8, 9, 11, 14), (7, 8, 11, 14), (7, 11, 13, 14), (7, 10, 11, 13),
)


@dataclass
class NamedInstance:
    """A complex with the facts known about it ahead of any computation.

    ``expected`` keys, when present: ``valid`` (passes the 3-ball battery),
    ``reduced``, ``spanning`` (edge -> strict flag), ``interior`` (list of
    interior component vertex sets), ``verdict``, ``shellable``,
    ``constructible``. ``claims`` holds statements printed alongside the
    instance that full recomputation does not reproduce.
    """

    name: str
    complex: Complex
    expected: dict = field(default_factory=dict)
    note: str = ""
    claims: dict = field(default_factory=dict)


def example_3_2() -> NamedInstance:
    """Shellable reduced 3-ball mixing strict and nonstrict spanning edges.

    The accompanying description names four spanning edges, 1-2 strict and
    3-6, 4-7, 5-8 nonstrict. The facet list has six more: 1-6, 1-7, 1-8
    (strict) and the pillar diagonals 3-8, 4-6, 5-7 (nonstrict).
    """
    return NamedInstance(
        "example-3-2",
        Complex(EXAMPLE_3_2_FACETS),
        {
            "valid": True,
            "reduced": True,
            "spanning": {
                (1, 2): True, (1, 6): True, (1, 7): True, (1, 8): True,
                (3, 6): False, (3, 8): False, (4, 6): False, (4, 7): False, (5, 7): False, (5, 8): False,
            },
            "interior": [(9, 10, 11)],
            "verdict": "unknown",
            "shellable": True,
            "constructible": True,
        },
        "36 facets on vertices 1-14; some spanning edges are nonstrict, so the test does not fire",
        {"spanning": {(1, 2): True, (3, 6): False, (4, 7): False, (5, 8): False}},
    )


def example_3_1() -> NamedInstance:
    """Not available: no explicit triangulation of this ball is known."""
    raise InstanceUnavailable("example-3-1 has no explicit triangulation")


def trivial_instances() -> list[NamedInstance]:
    tet = (1, 2, 3, 4)
    return [
        NamedInstance("simplex", Complex([tet]), {
            "valid": True, "reduced": True, "spanning": {}, "interior": [],
            "verdict": "unknown", "shellable": True, "constructible": True,
        }),
        NamedInstance("bipyramid", Complex([tet, (2, 3, 4, 5)]), {
            "valid": True, "reduced": False, "spanning": {}, "interior": [],
            "verdict": "unknown", "shellable": True, "constructible": True,
        }),
        NamedInstance("apex-cone", Complex([(1, 2, 3, 5), (1, 2, 4, 5), (1, 3, 4, 5), (2, 3, 4, 5)]), {
            "valid": True, "reduced": True, "spanning": {}, "interior": [(5,)],
            "verdict": "unknown", "shellable": True, "constructible": True,
        }),
        NamedInstance("disjoint-tetrahedra", Complex([tet, (5, 6, 7, 8)]), {
            "valid": False, "verdict": "invalid-input", "shellable": False, "constructible": False,
        }),
        NamedInstance("vertex-pinched", Complex([tet, (4, 5, 6, 7)]), {
            "valid": False, "verdict": "invalid-input", "shellable": False, "constructible": False,
        }),
        NamedInstance("edge-pinched", Complex([tet, (3, 4, 5, 6)]), {
            "valid": False, "verdict": "invalid-input", "shellable": False, "constructible": False,
        }),
        NamedInstance("tetrahedron-boundary", Complex([(1, 2, 3), (1, 2, 4), (1, 3, 4), (2, 3, 4)]), {
            "valid": False, "verdict": "invalid-input",
        }),
    ]


def _registry() -> dict[str, Callable[[], NamedInstance]]:
    reg: dict[str, Callable[[], NamedInstance]] = {"example-3-2": example_3_2}
    for inst in trivial_instances():
        reg[inst.name] = (lambda i=inst: i)
    return reg


def names() -> list[str]:
    return sorted(_registry())


def get(name: str) -> NamedInstance:
    if name == "example-3-1":
        return example_3_1()
    try:
        return _registry()[name]()
    except KeyError:
        raise KeyError(f"no corpus instance named {name!r}") from None


def all_instances() -> list[NamedInstance]:
    return [get(n) for n in names()]


# -- generators --------------------------------------------------------------


def _shelling_step_ok(faces_so_far: set[Simplex], new: Simplex) -> bool:
    """Whether ``new`` meets the closure ``faces_so_far`` in a nonempty pure codim-1 complex."""
    k = len(new) - 1
    shared_missing = [i for i in range(len(new)) if new[:i] + new[i + 1:] in faces_so_far]
    if not shared_missing:
        return False
    for size in range(1, k):
        for idx in combinations(range(len(new)), size):
            s = tuple(new[i] for i in idx)
            if s in faces_so_far and all(new[i] in s for i in shared_missing):
                return False
    return True


def _closure(s: Simplex) -> list[Simplex]:
    return [c for k in range(1, len(s) + 1) for c in combinations(s, k)]


def random_shellable_ball(seed: int, n: int, *, retries: int = 500, order: list | None = None) -> Complex:
    """Grow a 3-ball one tetrahedron at a time along a shelling.

    Each step picks a boundary triangle uniformly and tries either a new
    apex or an existing vertex; a candidate is kept only if it meets the
    current ball in a nonempty pure 2-complex and the result still passes
    the 3-ball battery. When ``order`` is a list, the attachment order is
    appended to it.
    """
    if n < 1:
        raise ValueError("n must be at least 1")
    rng = random.Random(seed)
    tets: list[Simplex] = [(1, 2, 3, 4)]
    known: set[Simplex] = set(_closure(tets[0]))
    next_label = 5
    misses = 0
    while len(tets) < n:
        if misses > retries:
            raise GenerationStuck(f"seed {seed}: no admissible attachment after {retries} tries")
        cur = Complex(tets)
        bd_tris = sorted(boundary_complex(cur).facets)
        tri = rng.choice(bd_tris)
        verts = sorted(cur.vertices - set(tri))
        pick = rng.randrange(len(verts) + 1)
        apex = next_label if pick == len(verts) else verts[pick]
        cand = simplex(tri + (apex,))
        if cand in known or not _shelling_step_ok(known, cand):
            misses += 1
            continue
        grown = Complex(tets + [cand])
        if not validate_3ball(grown):
            misses += 1
            continue
        tets.append(cand)
        known.update(_closure(cand))
        if apex == next_label:
            next_label += 1
        misses = 0
    if order is not None:
        order.extend(tets)
    return Complex(tets)


def random_2ball(seed: int, n: int, *, retries: int = 500, order: list | None = None) -> Complex:
    """Two-dimensional analogue of :func:`random_shellable_ball`."""
    if n < 1:
        raise ValueError("n must be at least 1")
    rng = random.Random(seed)
    tris: list[Simplex] = [(1, 2, 3)]
    known: set[Simplex] = set(_closure(tris[0]))
    next_label = 4
    misses = 0
    while len(tris) < n:
        if misses > retries:
            raise GenerationStuck(f"seed {seed}: no admissible attachment after {retries} tries")
        cur = Complex(tris)
        bd_edges = sorted(boundary_complex(cur).facets)
        edge = rng.choice(bd_edges)
        verts = sorted(cur.vertices - set(edge))
        pick = rng.randrange(len(verts) + 1)
        apex = next_label if pick == len(verts) else verts[pick]
        cand = simplex(edge + (apex,))
        if cand in known or not _shelling_step_ok(known, cand):
            misses += 1
            continue
        grown = Complex(tris + [cand])
        if not is_2ball(grown):
            misses += 1
            continue
        tris.append(cand)
        known.update(_closure(cand))
        if apex == next_label:
            next_label += 1
        misses = 0
    if order is not None:
        order.extend(tris)
    return Complex(tris)

