"""Independent reference computations used only by the tests.

None of these reuse the traversal or enumeration code paths of the package.
"""

from __future__ import annotations

import itertools
from typing import List, Tuple

import sympy as sp

from braidsurf.algebra import LaurentPoly2
from braidsurf.diagram import ArrowEnd, GaussDiagram

a_sym, z_sym = sp.symbols("a z")


def to_sympy(p: LaurentPoly2) -> sp.Expr:
    return sum((c * a_sym**ea * z_sym**ez for (ea, ez), c in p.coeffs.items()), sp.Integer(0))


def from_sympy_z(expr, shift: int = 40) -> dict:
    """Coefficients ``{exp: int}`` of a Laurent polynomial in ``z`` alone."""
    poly = sp.Poly(sp.expand(expr * z_sym**shift), z_sym)
    return {e[0] - shift: int(c) for e, c in zip(poly.monoms(), poly.coeffs()) if c}


def corner_boundary_count(G: GaussDiagram, arrows: List[int]) -> int:
    """Boundary components of the ribbon surface via union-find on band corners.

    Each attaching interval of a band at endpoint ``p`` has an entry corner
    ``(p, 0)`` and an exit corner ``(p, 1)`` in circle orientation.  Boundary
    pieces are the circle stretches from an exit corner to the next entry
    corner and the two long sides of every untwisted band, which join the
    entry corner at one end with the exit corner at the other.
    """
    chosen = set(arrows)
    parent = {}

    def find(x):
        parent.setdefault(x, x)
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(x, y):
        parent[find(x)] = find(y)

    empty_circles = 0
    ends = {}
    for ci, circ in enumerate(G.circles):
        pts = [(ci, i) for i, ev in enumerate(circ) if isinstance(ev, ArrowEnd) and ev.arrow in chosen]
        if not pts:
            empty_circles += 1
            continue
        for i, p in enumerate(pts):
            union((p, 1), (pts[(i + 1) % len(pts)], 0))
        for p in pts:
            ev = circ[p[1]]
            ends.setdefault(ev.arrow, []).append(p)
    for arrow, (p, q) in ends.items():
        union((p, 0), (q, 1))
        union((p, 1), (q, 0))
    roots = {find(x) for x in list(parent)}
    return len(roots) + empty_circles


def brute_colorings(m: int, k: int, star: bool = False) -> List[Tuple[Tuple[int, ...], Tuple[int, ...]]]:
    """Every assignment of base points / colors to arcs, filtered by the definition.

    An assignment maps each arc ``1..m`` to ``('*', i)`` or ``('c', c)``.
    Returned as ``(based, colors-by-arc)`` pairs.
    """
    out = []
    options = [("*", i) for i in range(1, k + 1)] + [("c", c) for c in range(1, k + 1)]
    for assign in itertools.product(options, repeat=m):
        stars = {i: t + 1 for t, (kind, i) in enumerate(assign) if kind == "*"}
        if sorted(stars) != list(range(1, k + 1)):
            continue
        if len([x for x in assign if x[0] == "*"]) != k:
            continue
        based = tuple(stars[i] for i in range(1, k + 1))
        first = m if star else 1
        if based[0] != first:
            continue
        pairs = list(zip(based, based[1:]))
        if star and not all(x > y for x, y in pairs):
            continue
        if not star and not all(x < y for x, y in pairs):
            continue
        ok = True
        for t, (kind, c) in enumerate(assign, start=1):
            if kind != "c":
                continue
            if star:
                above = [i for i, b in enumerate(based, start=1) if b > t]
                lim = max(above) if above else 0  # rank of the smallest based index above t
            else:
                below = [i for i, b in enumerate(based, start=1) if b < t]
                lim = max(below) if below else 0
            if not 1 <= c <= lim:
                ok = False
        if ok:
            colors = tuple(c for kind, c in assign if kind == "c")
            out.append((based, colors))
    return sorted(out)
