"""Braid Gauss diagrams and their colorings.

Each letter of the braid word becomes one arrow (its id is the letter
position).  Arrows point from the overpassing strand to the underpassing one;
at ``sigma_q`` the strand moving from position ``q`` to ``q+1`` passes over, at
``sigma_q^-1`` it passes under.  The labeled arc ``a_t`` is the closure arc
leaving the top of the braid at position ``t``.

Circles are ordered by their smallest arc label and every circle's event list
starts at that label.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property
from typing import Dict, Iterator, List, Tuple, Union

from .braid import BraidWord, closure_info, conway_triple

__all__ = [
    "ArrowEnd",
    "LabelMark",
    "Arrow",
    "GaussDiagram",
    "Coloring",
    "StarColoring",
    "gauss_from_braid",
    "enumerate_colorings",
    "enumerate_star_colorings",
    "conway_triple_diagrams",
]


@dataclass(frozen=True)
class ArrowEnd:
    arrow: int
    head: bool


@dataclass(frozen=True)
class LabelMark:
    strand: int


Event = Union[ArrowEnd, LabelMark]


@dataclass(frozen=True)
class Arrow:
    id: int
    sign: int
    head: Tuple[int, int]  # (circle, position in circle)
    tail: Tuple[int, int]


@dataclass(frozen=True)
class GaussDiagram:
    strands: int
    circles: Tuple[Tuple[Event, ...], ...]
    signs: Tuple[int, ...]

    @property
    def n_arrows(self) -> int:
        return len(self.signs)

    @property
    def r(self) -> int:
        return len(self.circles)

    @property
    def writhe(self) -> int:
        return sum(self.signs)

    @cached_property
    def _flat(self):
        circle_of: List[int] = []
        nxt: List[int] = []
        arrow_at: List[int] = []
        is_head: List[bool] = []
        label_at: List[int] = []
        head_pos = [0] * len(self.signs)
        tail_pos = [0] * len(self.signs)
        label_pos = [0] * (self.strands + 1)
        local: List[Tuple[int, int]] = []
        pos = 0
        for ci, circ in enumerate(self.circles):
            start = pos
            for li, ev in enumerate(circ):
                circle_of.append(ci)
                local.append((ci, li))
                nxt.append(pos + 1 if li + 1 < len(circ) else start)
                if isinstance(ev, ArrowEnd):
                    arrow_at.append(ev.arrow)
                    is_head.append(ev.head)
                    label_at.append(0)
                    (head_pos if ev.head else tail_pos)[ev.arrow] = pos
                else:
                    arrow_at.append(-1)
                    is_head.append(False)
                    label_at.append(ev.strand)
                    label_pos[ev.strand] = pos
                pos += 1
        partner = list(range(pos))
        for a in range(len(self.signs)):
            partner[head_pos[a]] = tail_pos[a]
            partner[tail_pos[a]] = head_pos[a]
        return _Flat(
            size=pos,
            circle_of=tuple(circle_of),
            next=tuple(nxt),
            arrow_at=tuple(arrow_at),
            is_head=tuple(is_head),
            label_at=tuple(label_at),
            head_pos=tuple(head_pos),
            tail_pos=tuple(tail_pos),
            label_pos=tuple(label_pos),
            partner=tuple(partner),
            local=tuple(local),
        )

    @cached_property
    def arrows(self) -> Tuple[Arrow, ...]:
        fl = self._flat
        return tuple(
            Arrow(a, s, fl.local[fl.head_pos[a]], fl.local[fl.tail_pos[a]])
            for a, s in enumerate(self.signs)
        )

    def label_location(self, strand: int) -> Tuple[int, int]:
        return self._flat.local[self._flat.label_pos[strand]]

    def circle_of_strand(self, strand: int) -> int:
        return self.label_location(strand)[0]

    def to_json(self) -> dict:
        circles = []
        for circ in self.circles:
            evs = []
            for ev in circ:
                if isinstance(ev, ArrowEnd):
                    evs.append({"arrow": ev.arrow, "role": "head" if ev.head else "tail"})
                else:
                    evs.append({"label": ev.strand})
            circles.append(evs)
        return {
            "strands": self.strands,
            "circles": circles,
            "arrows": [
                {"id": a.id, "sign": a.sign, "head": list(a.head), "tail": list(a.tail)}
                for a in self.arrows
            ],
            "labels": {str(t): list(self.label_location(t)) for t in range(1, self.strands + 1)},
        }


@dataclass(frozen=True)
class _Flat:
    """Flat position arrays, positions numbered circle after circle."""

    size: int
    circle_of: Tuple[int, ...]
    next: Tuple[int, ...]
    arrow_at: Tuple[int, ...]
    is_head: Tuple[bool, ...]
    label_at: Tuple[int, ...]
    head_pos: Tuple[int, ...]
    tail_pos: Tuple[int, ...]
    label_pos: Tuple[int, ...]
    partner: Tuple[int, ...]
    local: Tuple[Tuple[int, int], ...]


def gauss_from_braid(w: BraidWord) -> GaussDiagram:
    info = closure_info(w)
    circles = []
    for cyc in info.cycles:
        start = cyc[0]
        events: List[Event] = []
        p = start
        while True:
            events.append(LabelMark(p))
            for idx, x in enumerate(w.letters):
                q = abs(x)
                if p == q:
                    # moving q -> q+1: overpass for a positive letter
                    events.append(ArrowEnd(idx, head=x < 0))
                    p = q + 1
                elif p == q + 1:
                    events.append(ArrowEnd(idx, head=x > 0))
                    p = q
            if p == start:
                break
        _check_arcs(events)
        circles.append(tuple(events))
    signs = tuple(1 if x > 0 else -1 for x in w.letters)
    return GaussDiagram(w.strands, tuple(circles), signs)


def _check_arcs(events: List[Event]) -> None:
    # at most one label per arc, arcs taken cyclically
    if not any(isinstance(ev, ArrowEnd) for ev in events):
        if len(events) != 1:
            raise AssertionError("arrowless circle must carry exactly one label")
        return
    run = 0
    for ev in events + events[:1]:
        if isinstance(ev, LabelMark):
            run += 1
            if run > 1:
                raise AssertionError("two labeled points on one arc; strand walk is broken")
        else:
            run = 0


@dataclass(frozen=True)
class Coloring:
    """Base points ``*_1..*_k`` on arcs ``based`` and colors on the other arcs.

    ``colors`` lists ``(strand, color)`` pairs for non-based arcs in strand order.
    """

    strands: int
    based: Tuple[int, ...]
    colors: Tuple[Tuple[int, int], ...]

    @property
    def k(self) -> int:
        return len(self.based)

    def __post_init__(self) -> None:
        self._validate()

    def _validate(self) -> None:
        b = self.based
        if not b or b[0] != 1 or any(x >= y for x, y in zip(b, b[1:])):
            raise ValueError(f"base points must sit on ascending arcs starting at a_1: {b}")
        self._check_colors()

    def _check_colors(self) -> None:
        covered = sorted(set(self.based) | {t for t, _ in self.colors})
        if covered != list(range(1, self.strands + 1)) or len(self.colors) + self.k != self.strands:
            raise ValueError("every arc needs exactly one base point or color")
        for t, c in self.colors:
            if not 1 <= c <= self.limit(t):
                raise ValueError(f"arc a_{t} may take colors 1..{self.limit(t)}, got {c}")

    def limit(self, strand: int) -> int:
        """Largest color allowed on a non-based arc."""
        return sum(1 for b in self.based if b < strand)

    def color_of(self, strand: int) -> int:
        """Color of an arc; a based arc carries the index of its base point."""
        for i, b in enumerate(self.based, start=1):
            if b == strand:
                return i
        return dict(self.colors)[strand]

    def to_json(self) -> dict:
        return {"based": list(self.based), "colors": {str(t): c for t, c in self.colors}}


@dataclass(frozen=True)
class StarColoring(Coloring):
    """Mirror coloring: base points descend from ``a_m``."""

    def _validate(self) -> None:
        b = self.based
        if not b or b[0] != self.strands or any(x <= y for x, y in zip(b, b[1:])):
            raise ValueError(f"base points must sit on descending arcs starting at a_m: {b}")
        self._check_colors()

    def limit(self, strand: int) -> int:
        return sum(1 for b in self.based if b > strand)


def _strands(G: Union[GaussDiagram, int]) -> int:
    return G if isinstance(G, int) else G.strands


def _colorings(m: int, k: int, star: bool) -> Iterator[Coloring]:
    if k < 1:
        raise ValueError("need at least one base point")
    if k > m:
        return
    cls = StarColoring if star else Coloring
    first = m if star else 1
    rest = [t for t in range(1, m + 1) if t != first]
    for others in itertools.combinations(rest, k - 1):
        based = (first,) + (tuple(reversed(others)) if star else others)
        free = [t for t in range(1, m + 1) if t not in based]
        if star:
            limits = [sum(1 for b in based if b > t) for t in free]
        else:
            limits = [sum(1 for b in based if b < t) for t in free]
        for cols in itertools.product(*(range(1, lim + 1) for lim in limits)):
            yield cls(m, based, tuple(zip(free, cols)))


def enumerate_colorings(G: Union[GaussDiagram, int], k: int) -> List[Coloring]:
    """All colorings with ``k`` base points, lexicographic by (based arcs, colors)."""
    return list(_colorings(_strands(G), k, star=False))


def enumerate_star_colorings(G: Union[GaussDiagram, int], k: int) -> List[StarColoring]:
    return list(_colorings(_strands(G), k, star=True))


def conway_triple_diagrams(w: BraidWord, index: int) -> Tuple[GaussDiagram, GaussDiagram, GaussDiagram]:
    return tuple(gauss_from_braid(x) for x in conway_triple(w, index))  # type: ignore[return-value]
