"""Ribbon surfaces of sub-diagrams.

A state ``S`` is a bitmask over arrow ids.  The surface glues a disk into every
circle of the host diagram and an untwisted band along every arrow of ``S``.
Its boundary is traced by walking forward along the circles; on reaching an
endpoint of a band we cross to the band's other endpoint and keep walking
forward from there.  Arrows outside ``S`` are invisible.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import FrozenSet, Iterable, List, Sequence, Tuple

from .diagram import Coloring, GaussDiagram, StarColoring

__all__ = [
    "StateSubset",
    "mask_of",
    "arrows_of",
    "Passage",
    "Component",
    "SurfaceProfile",
    "Verdict",
    "boundary_orbits",
    "trace_boundary",
    "is_descending",
    "is_ascending",
    "color_respected",
]

StateSubset = int


def mask_of(arrows: Iterable[int]) -> StateSubset:
    m = 0
    for a in arrows:
        m |= 1 << a
    return m


def arrows_of(mask: StateSubset) -> Tuple[int, ...]:
    out = []
    a = 0
    while mask:
        if mask & 1:
            out.append(a)
        mask >>= 1
        a += 1
    return tuple(out)


@dataclass(frozen=True)
class Passage:
    arrow: int
    along: bool  # True when the band is crossed tail -> head
    boundary: int


@dataclass(frozen=True)
class Component:
    circles: Tuple[int, ...]
    n_arrows: int
    n_boundaries: int
    genus: int

    @property
    def euler(self) -> int:
        return len(self.circles) - self.n_arrows


@dataclass(frozen=True)
class SurfaceProfile:
    boundary_count: int
    boundary_of_position: Tuple[int, ...]
    components: Tuple[Component, ...]
    passages: Tuple[Passage, ...]
    separating: FrozenSet[int]

    @property
    def genus(self) -> int:
        return sum(c.genus for c in self.components)

    @property
    def genus_profile(self) -> Tuple[int, ...]:
        return tuple(c.genus for c in self.components)


@dataclass(frozen=True)
class Verdict:
    """Outcome of a descending/ascending test; truthy when accepted.

    ``certificate`` is the sequence of ``(arrow, along)`` band crossings in the
    order of the based traversal.
    """

    ok: bool
    reason: str = ""
    certificate: Tuple[Tuple[int, bool], ...] = field(default=())

    def __bool__(self) -> bool:
        return self.ok


def _succ_table(G: GaussDiagram, S: StateSubset) -> List[int]:
    fl = G._flat
    nxt, partner, arrow_at = fl.next, fl.partner, fl.arrow_at
    return [
        nxt[partner[p]] if arrow_at[p] >= 0 and (S >> arrow_at[p]) & 1 else nxt[p]
        for p in range(fl.size)
    ]


def boundary_orbits(G: GaussDiagram, S: StateSubset) -> Tuple[List[int], int]:
    """Boundary id of every flat position and the number of boundary components.

    Ids are assigned in order of each orbit's smallest position.
    """
    succ = _succ_table(G, S)
    orbit = [-1] * len(succ)
    b = 0
    for p in range(len(succ)):
        if orbit[p] < 0:
            q = p
            while orbit[q] < 0:
                orbit[q] = b
                q = succ[q]
            b += 1
    return orbit, b


def _components(G: GaussDiagram, S: StateSubset, orbit: Sequence[int]) -> Tuple[Component, ...]:
    parent = list(range(G.r))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    fl = G._flat
    arrows = arrows_of(S)
    for a in arrows:
        x, y = find(fl.circle_of[fl.head_pos[a]]), find(fl.circle_of[fl.tail_pos[a]])
        if x != y:
            parent[max(x, y)] = min(x, y)
    groups: dict = {}
    for c in range(G.r):
        groups.setdefault(find(c), []).append(c)
    out = []
    for root in sorted(groups):
        circles = tuple(groups[root])
        cset = set(circles)
        n = sum(1 for a in arrows if fl.circle_of[fl.head_pos[a]] in cset)
        bset = {orbit[p] for p in range(fl.size) if fl.circle_of[p] in cset}
        twice_genus = 2 - len(bset) - (len(circles) - n)
        if twice_genus < 0 or twice_genus % 2:
            raise AssertionError(f"non-integral genus on component {circles}")
        out.append(Component(circles, n, len(bset), twice_genus // 2))
    return tuple(out)


def trace_boundary(G: GaussDiagram, S: StateSubset) -> SurfaceProfile:
    fl = G._flat
    succ = _succ_table(G, S)
    orbit, b = boundary_orbits(G, S)
    passages: List[Passage] = []
    seen_orbit = set()
    for start in range(fl.size):
        o = orbit[start]
        if o in seen_orbit:
            continue
        seen_orbit.add(o)
        p = start
        while True:
            a = fl.arrow_at[p]
            if a >= 0 and (S >> a) & 1:
                passages.append(Passage(a, not fl.is_head[p], o))
            p = succ[p]
            if p == start:
                break
    sides: dict = {}
    for ps in passages:
        sides.setdefault(ps.arrow, []).append(ps.boundary)
    separating = frozenset(a for a, bs in sides.items() if bs[0] != bs[1])
    return SurfaceProfile(
        boundary_count=b,
        boundary_of_position=tuple(orbit),
        components=_components(G, S, orbit),
        passages=tuple(passages),
        separating=separating,
    )


def _based_check(G: GaussDiagram, S: StateSubset, based: Sequence[int], along: bool) -> Verdict:
    fl = G._flat
    succ = _succ_table(G, S)
    orbit, b = boundary_orbits(G, S)
    if b != len(based):
        return Verdict(False, f"{b} boundary components for {len(based)} base points")
    starts = [fl.label_pos[t] for t in based]
    if len({orbit[p] for p in starts}) != len(starts):
        return Verdict(False, "two base points on one boundary component")
    cert: List[Tuple[int, bool]] = []
    seen = set()
    bad = ""
    for start in starts:
        p = start
        while True:
            a = fl.arrow_at[p]
            if a >= 0 and (S >> a) & 1:
                crossing = not fl.is_head[p]
                cert.append((a, crossing))
                if a not in seen:
                    seen.add(a)
                    if crossing != along and not bad:
                        bad = f"arrow {a} first crossed {'tail->head' if crossing else 'head->tail'}"
            p = succ[p]
            if p == start:
                break
    return Verdict(not bad, bad, tuple(cert))


def is_descending(G: GaussDiagram, S: StateSubset, coloring: Coloring) -> Verdict:
    """Multibased and every band first crossed tail to head."""
    return _based_check(G, S, coloring.based, along=True)


def is_ascending(G: GaussDiagram, S: StateSubset, coloring: StarColoring) -> Verdict:
    """Multibased and every band first crossed head to tail."""
    return _based_check(G, S, coloring.based, along=False)


def color_respected(G: GaussDiagram, S: StateSubset, coloring: Coloring) -> bool:
    """Every colored arc lies on the boundary component of its base point."""
    fl = G._flat
    orbit, _ = boundary_orbits(G, S)
    for t, c in coloring.colors:
        if orbit[fl.label_pos[t]] != orbit[fl.label_pos[coloring.based[c - 1]]]:
            return False
    return True
