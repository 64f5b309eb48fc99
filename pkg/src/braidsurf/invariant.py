"""Surface-counting invariants of braid Gauss diagrams.

``P(k, G)`` sums, over ``j = 1..k``, the weight ``f(j, k, G)`` times the signed
number of descending ``j``-based states of ``G``.  ``P_star`` is the mirror
construction using star colorings and ascending states.

Every arrow subset is visited once; its boundary components are traced and all
compatible base-point placements are read off from them.  Given a subset and
the arcs carrying base points, the color of each remaining arc is forced (it is
the index of the base point on its boundary component), so each (subset,
placement) pair accounts for at most one coloring.
"""

from __future__ import annotations

import itertools
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Dict, List, Optional, Tuple

from .algebra import A, LaurentPoly1, LaurentPoly2, ONE, derivative_a, eval_a1
from .diagram import (
    GaussDiagram,
    enumerate_colorings,
    enumerate_star_colorings,
)
from .errors import ResourceLimitError
from .surface import color_respected, is_ascending, is_descending, trace_boundary

__all__ = [
    "DEFAULT_MAX_ARROWS",
    "StateTables",
    "InvariantReport",
    "state_tables",
    "f",
    "D",
    "D_literal",
    "A_count",
    "A_literal",
    "P",
    "P_star",
    "A_kj",
    "invariant_report",
    "is_totally_ascending",
    "unlink_script_p",
]

DEFAULT_MAX_ARROWS = 20

DESC, ASC = "descending", "ascending"


@dataclass(frozen=True)
class StateTables:
    """Signed state counts keyed by ``(j, |S|)`` for both flavors.

    ``census`` (when collected) counts accepted states by
    ``(flavor, j, |S|, genus profile)``.
    """

    jmax: int
    descending: Dict[Tuple[int, int], int]
    ascending: Dict[Tuple[int, int], int]
    census: Dict[Tuple[str, int, int, Tuple[int, ...]], int] = field(default_factory=dict)

    def get(self, flavor: str, j: int, size: int) -> int:
        if j > self.jmax:
            raise ValueError(f"table only holds j <= {self.jmax}")
        table = self.descending if flavor == DESC else self.ascending
        return table.get((j, size), 0)


def _chunk_counts(G: GaussDiagram, jmax: int, lo: int, hi: int, census: bool):
    fl = G._flat
    m = G.strands
    size = fl.size
    nxt, partner, arrow_at, is_head = fl.next, fl.partner, fl.arrow_at, fl.is_head
    label_pos = fl.label_pos
    signs = G.signs
    desc: Counter = Counter()
    asc: Counter = Counter()
    cen: Counter = Counter()
    succ = [0] * size
    orbit = [0] * size
    for S in range(lo, hi):
        for p in range(size):
            a = arrow_at[p]
            succ[p] = nxt[partner[p]] if a >= 0 and (S >> a) & 1 else nxt[p]
        for p in range(size):
            orbit[p] = -1
        b = 0
        for p in range(size):
            if orbit[p] < 0:
                q = p
                while orbit[q] < 0:
                    orbit[q] = b
                    q = succ[q]
                b += 1
                if b > jmax:
                    break
        if b > jmax:
            continue
        labels: List[List[int]] = [[] for _ in range(b)]
        for t in range(1, m + 1):
            labels[orbit[label_pos[t]]].append(t)
        if any(not ls for ls in labels):
            continue
        n_s = bin(S).count("1")
        sign = 1
        for a in range(len(signs)):
            if (S >> a) & 1 and signs[a] < 0:
                sign = -sign
        for flavor, out in ((DESC, desc), (ASC, asc)):
            hits = _placements(labels, orbit, label_pos, succ, arrow_at, is_head, S, m, flavor)
            if hits:
                out[(b, n_s)] += sign * hits
                if census:
                    gp = trace_boundary(G, S).genus_profile
                    cen[(flavor, b, n_s, gp)] += hits
    return desc, asc, cen


def _placements(labels, orbit, label_pos, succ, arrow_at, is_head, S, m, flavor) -> int:
    """Number of valid base placements (equivalently colorings) for state ``S``."""
    first = 1 if flavor == DESC else m
    want_along = flavor == DESC
    home = orbit[label_pos[first]]
    choices = [[first] if o == home else ls for o, ls in enumerate(labels)]
    hits = 0
    for pick in itertools.product(*choices):
        based = sorted(pick, reverse=(flavor == ASC))
        rank = {orbit[label_pos[t]]: i for i, t in enumerate(based, start=1)}
        ok = True
        for o, ls in enumerate(labels):
            c = rank[o]
            for t in ls:
                if t == pick[o]:
                    continue
                if flavor == DESC:
                    lim = sum(1 for x in based if x < t)
                else:
                    lim = sum(1 for x in based if x > t)
                if c > lim:
                    ok = False
                    break
            if not ok:
                break
        if not ok:
            continue
        seen = 0
        for t in based:
            start = label_pos[t]
            p = start
            while True:
                a = arrow_at[p]
                if a >= 0 and (S >> a) & 1 and not (seen >> a) & 1:
                    seen |= 1 << a
                    if (not is_head[p]) != want_along:
                        ok = False
                        break
                p = succ[p]
                if p == start:
                    break
            if not ok:
                break
        if ok:
            hits += 1
    return hits


def _chunk_job(args):
    return _chunk_counts(*args)


def _check_size(G: GaussDiagram, max_arrows: Optional[int]) -> None:
    limit = DEFAULT_MAX_ARROWS if max_arrows is None else max_arrows
    if G.n_arrows > limit:
        raise ResourceLimitError(
            f"diagram has {G.n_arrows} arrows; exhaustive enumeration is capped at {limit}"
        )


def state_tables(
    G: GaussDiagram,
    jmax: int,
    *,
    census: bool = False,
    workers: int = 1,
    max_arrows: Optional[int] = None,
) -> StateTables:
    """Signed counts of descending and ascending states with at most ``jmax`` base points."""
    _check_size(G, max_arrows)
    jmax = max(0, min(jmax, G.strands))
    if workers <= 1:
        return _cached_tables(G, jmax, census)
    return _build_tables(G, jmax, census, workers)


@lru_cache(maxsize=512)
def _cached_tables(G: GaussDiagram, jmax: int, census: bool) -> StateTables:
    return _build_tables(G, jmax, census, 1)


def _build_tables(G: GaussDiagram, jmax: int, census: bool, workers: int) -> StateTables:
    total = 1 << G.n_arrows
    if workers <= 1 or total < 2:
        parts = [_chunk_counts(G, jmax, 0, total, census)]
    else:
        nchunks = min(workers, total)
        bounds = [total * i // nchunks for i in range(nchunks + 1)]
        jobs = [(G, jmax, bounds[i], bounds[i + 1], census) for i in range(nchunks)]
        with ProcessPoolExecutor(max_workers=workers) as ex:
            parts = list(ex.map(_chunk_job, jobs))
    desc: Counter = Counter()
    asc: Counter = Counter()
    cen: Counter = Counter()
    for d, a, c in parts:
        desc.update(d)
        asc.update(a)
        cen.update(c)
    clean = lambda ctr: {k: v for k, v in sorted(ctr.items()) if v}
    return StateTables(jmax, clean(desc), clean(asc), dict(sorted(cen.items())))


def f(j: int, k: int, G: GaussDiagram) -> int:
    """Weight of the ``j``-based count in ``P_k``."""
    if not 1 <= j <= k:
        raise ValueError(f"need 1 <= j <= k, got j={j}, k={k}")
    base = LaurentPoly2.monomial(-G.strands - G.writhe + 1, 0) * (A * A - ONE) ** (j - 1)
    return eval_a1(derivative_a(base, k - 1)).coefficient(0)


def D(n: int, k: int, j: int, G: GaussDiagram, *, max_arrows: Optional[int] = None) -> int:
    if not 1 <= j <= k:
        raise ValueError(f"need 1 <= j <= k, got j={j}, k={k}")
    size = n + j - k
    if n < 0 or size < 0 or j > G.strands:
        return 0
    return state_tables(G, j, max_arrows=max_arrows).get(DESC, j, size)


def A_count(n: int, k: int, j: int, G: GaussDiagram, *, max_arrows: Optional[int] = None) -> int:
    if not 1 <= j <= k:
        raise ValueError(f"need 1 <= j <= k, got j={j}, k={k}")
    size = n + j - k
    if n < 0 or size < 0 or j > G.strands:
        return 0
    return state_tables(G, j, max_arrows=max_arrows).get(ASC, j, size)


def _literal(n, k, j, G, star: bool) -> int:
    size = n + j - k
    if n < 0 or size < 0:
        return 0
    colorings = enumerate_star_colorings(G, j) if star else enumerate_colorings(G, j)
    test = is_ascending if star else is_descending
    total = 0
    for col in colorings:
        for S in range(1 << G.n_arrows):
            if bin(S).count("1") != size:
                continue
            if test(G, S, col) and color_respected(G, S, col):
                sign = 1
                for a, s in enumerate(G.signs):
                    if (S >> a) & 1:
                        sign *= s
                total += sign
    return total


def D_literal(n: int, k: int, j: int, G: GaussDiagram) -> int:
    """``D(n, k, j, G)`` by brute force over colorings and subsets (slow reference)."""
    return _literal(n, k, j, G, star=False)


def A_literal(n: int, k: int, j: int, G: GaussDiagram) -> int:
    return _literal(n, k, j, G, star=True)


def _poly(k: int, G: GaussDiagram, flavor: str, workers: int, max_arrows) -> LaurentPoly1:
    if k < 1:
        raise ValueError(f"P_k is defined for k >= 1, got {k}")
    tables = state_tables(G, k, workers=workers, max_arrows=max_arrows)
    src = tables.descending if flavor == DESC else tables.ascending
    coeffs: Dict[int, int] = {}
    for (j, size), count in src.items():
        if j > k:
            continue
        n = size + k - j
        coeffs[n] = coeffs.get(n, 0) + f(j, k, G) * count
    return LaurentPoly1(coeffs)


def P(k: int, G: GaussDiagram, *, workers: int = 1, max_arrows: Optional[int] = None) -> LaurentPoly1:
    return _poly(k, G, DESC, workers, max_arrows)


def P_star(k: int, G: GaussDiagram, *, workers: int = 1, max_arrows: Optional[int] = None) -> LaurentPoly1:
    return _poly(k, G, ASC, workers, max_arrows)


def A_kj(k: int, j: int, G: GaussDiagram) -> LaurentPoly1:
    """``sum_n D(n, k, j, G) z^(n + j - k)``."""
    tables = state_tables(G, j)
    return LaurentPoly1({size: c for (jj, size), c in tables.descending.items() if jj == j})


@dataclass(frozen=True)
class InvariantReport:
    k: int
    f: Dict[int, int]
    D: Dict[int, List[int]]  # j -> [D_{n,k,j} for n = 0..n_max]
    D_total: List[int]
    P: LaurentPoly1
    census: Dict[Tuple[int, int, Tuple[int, ...]], int]

    @property
    def n_max(self) -> int:
        return len(self.D_total) - 1

    def to_json(self) -> dict:
        return {
            "k": self.k,
            "f": {str(j): str(v) for j, v in self.f.items()},
            "D": {str(j): [str(v) for v in row] for j, row in self.D.items()},
            "D_total": [str(v) for v in self.D_total],
            "P": self.P.to_json(),
            "P_text": str(self.P),
            "census": [
                {"j": j, "arrows": s, "genus": list(g), "count": c}
                for (j, s, g), c in sorted(self.census.items())
            ],
        }


def invariant_report(
    G: GaussDiagram, k: int, *, workers: int = 1, max_arrows: Optional[int] = None
) -> InvariantReport:
    if k < 1:
        raise ValueError(f"P_k is defined for k >= 1, got {k}")
    tables = state_tables(G, k, census=True, workers=workers, max_arrows=max_arrows)
    n_max = G.n_arrows + k - 1
    weights = {j: f(j, k, G) for j in range(1, k + 1)}
    rows: Dict[int, List[int]] = {}
    for j in range(1, k + 1):
        rows[j] = [
            tables.descending.get((j, n + j - k), 0) if n + j - k >= 0 else 0
            for n in range(n_max + 1)
        ]
    totals = [sum(weights[j] * rows[j][n] for j in rows) for n in range(n_max + 1)]
    census = {
        (j, s, g): c for (fl, j, s, g), c in tables.census.items() if fl == DESC
    }
    poly = LaurentPoly1({n: v for n, v in enumerate(totals)})
    return InvariantReport(k, weights, rows, totals, poly, census)


def is_totally_ascending(G: GaussDiagram) -> bool:
    """Every arrow is met first at its head when the circles are walked in order."""
    seen = set()
    for circ in G.circles:
        for ev in circ:
            arrow = getattr(ev, "arrow", None)
            if arrow is None or arrow in seen:
                continue
            seen.add(arrow)
            if not ev.head:
                return False
    return True


def unlink_script_p(r: int, k: int) -> LaurentPoly1:
    """``z^k d^k/da^k P(O_r) |_{a=1}`` in closed form; zero unless ``r <= k + 1``."""
    if r < 1 or k < 0:
        raise ValueError("need r >= 1 and k >= 0")
    if r > k + 1:
        return LaurentPoly1()
    base = LaurentPoly2.monomial(-r + 1, 0) * (A * A - ONE) ** (r - 1)
    c = eval_a1(derivative_a(base, k)).coefficient(0)
    return LaurentPoly1.monomial(k - r + 1, c)
