import random

import pytest

from braidsurf.braid import parse, random_word
from braidsurf.diagram import (
    ArrowEnd,
    Coloring,
    LabelMark,
    StarColoring,
    conway_triple_diagrams,
    enumerate_colorings,
    enumerate_star_colorings,
    gauss_from_braid,
)

from oracles import brute_colorings


def _events(G):
    return [ev for circ in G.circles for ev in circ]


def test_trefoil_diagram(trefoil_G):
    G = trefoil_G
    assert G.r == 1
    evs = _events(G)
    assert sum(isinstance(e, ArrowEnd) for e in evs) == 6
    assert sum(isinstance(e, LabelMark) for e in evs) == 2
    assert G.signs == (1, 1, 1)
    # walk from a_1: tail of every arrow first on the overpassing strand
    assert G.circles[0][0] == LabelMark(1)
    assert G.circles[0][1] == ArrowEnd(0, head=False)


def test_identity_diagram():
    G = gauss_from_braid(parse("", 3))
    assert G.circles == ((LabelMark(1),), (LabelMark(2),), (LabelMark(3),))
    assert G.n_arrows == 0


def test_single_crossing_labels_on_distinct_arcs():
    G = gauss_from_braid(parse("1", 2))
    assert G.circles == ((LabelMark(1), ArrowEnd(0, False), LabelMark(2), ArrowEnd(0, True)),)


def test_negative_letter_swaps_roles():
    G = gauss_from_braid(parse("-1", 2))
    assert G.circles == ((LabelMark(1), ArrowEnd(0, True), LabelMark(2), ArrowEnd(0, False)),)
    assert G.signs == (-1,)


@pytest.mark.parametrize("seed", range(30))
def test_structural_invariants(seed):
    rng = random.Random(seed)
    w = random_word(rng, rng.randint(1, 5), rng.randint(0, 9))
    G = gauss_from_braid(w)
    evs = _events(G)
    ends = [e for e in evs if isinstance(e, ArrowEnd)]
    assert len(ends) == 2 * len(w)
    for a in range(len(w)):
        assert sorted(e.head for e in ends if e.arrow == a) == [False, True]
    assert sorted(e.strand for e in evs if isinstance(e, LabelMark)) == list(range(1, w.strands + 1))
    assert G.signs == tuple(1 if x > 0 else -1 for x in w.letters)
    # circles ordered by smallest label and each starts there
    firsts = [c[0] for c in G.circles]
    assert all(isinstance(f, LabelMark) for f in firsts)
    mins = [min(e.strand for e in c if isinstance(e, LabelMark)) for c in G.circles]
    assert [f.strand for f in firsts] == mins == sorted(mins)
    # arc count: 2*#letters over circles with arrows, 1 for each arrowless circle
    arcs = sum(
        sum(isinstance(e, ArrowEnd) for e in c) or 1 for c in G.circles
    )
    assert arcs == 2 * len(w) + sum(1 for c in G.circles if len(c) == 1)


def test_coloring_counts_examples(trefoil_G):
    assert [c.based for c in enumerate_colorings(trefoil_G, 2)] == [(1, 2)]
    one = enumerate_colorings(gauss_from_braid(parse("1 2 -3", 4)), 1)
    assert len(one) == 1
    assert one[0].based == (1,) and dict(one[0].colors) == {2: 1, 3: 1, 4: 1}
    G4 = gauss_from_braid(parse("1 2 3", 4))
    cols = enumerate_colorings(G4, 3)
    assert len(cols) == 6
    by_based = {}
    for c in cols:
        by_based.setdefault(c.based, []).append(dict(c.colors))
    assert {b: len(v) for b, v in by_based.items()} == {(1, 2, 3): 3, (1, 2, 4): 2, (1, 3, 4): 1}
    assert sorted(d[3] for d in by_based[(1, 2, 4)]) == [1, 2]
    assert enumerate_colorings(G4, 5) == []


def test_star_coloring_examples(trefoil_G):
    assert [c.based for c in enumerate_star_colorings(trefoil_G, 1)] == [(2,)]
    assert [c.based for c in enumerate_star_colorings(trefoil_G, 2)] == [(2, 1)]
    assert enumerate_star_colorings(trefoil_G, 3) == []


@pytest.mark.parametrize("m", range(1, 6))
@pytest.mark.parametrize("k", range(1, 6))
def test_colorings_match_brute_force(m, k):
    fast = sorted((c.based, tuple(c for _, c in c.colors)) for c in enumerate_colorings(m, k))
    assert fast == brute_colorings(m, k)
    star = sorted((c.based, tuple(c for _, c in c.colors)) for c in enumerate_star_colorings(m, k))
    assert star == brute_colorings(m, k, star=True)
    assert len(fast) == len(star)
    if k == 1:
        assert len(fast) == 1


def test_coloring_validation():
    with pytest.raises(ValueError):
        Coloring(3, (2,), ((1, 1), (3, 1)))
    with pytest.raises(ValueError):
        Coloring(3, (1, 3), ((2, 2),))
    with pytest.raises(ValueError):
        StarColoring(3, (1,), ((2, 1), (3, 1)))
    c = Coloring(4, (1, 2, 4), ((3, 2),))
    assert c.color_of(4) == 3 and c.color_of(3) == 2 and c.limit(3) == 2


def test_colorings_deterministic_order():
    a = enumerate_colorings(5, 3)
    assert a == enumerate_colorings(5, 3)
    assert a == sorted(a, key=lambda c: (c.based, c.colors))


def test_conway_triple_diagrams():
    w = parse("1 1 1", 2)
    gp, gm, g0 = conway_triple_diagrams(w, 0)
    assert gp == gauss_from_braid(w)
    assert gp.n_arrows == gm.n_arrows == 3 and g0.n_arrows == 2
    assert gm.signs == (-1, 1, 1)
    assert gp.writhe - gm.writhe == 2
    # switching flips the arrow direction
    assert gp.arrows[0].head == gm.arrows[0].tail and gp.arrows[0].tail == gm.arrows[0].head
    _, _, h0 = conway_triple_diagrams(parse("1 1", 2), 0)
    assert h0 == gauss_from_braid(parse("1", 2))


def test_json_layout(trefoil_G):
    data = trefoil_G.to_json()
    assert data["labels"] == {"1": [0, 0], "2": [0, 4]}
    assert data["arrows"][0] == {"id": 0, "sign": 1, "head": [0, 5], "tail": [0, 1]}
    assert data["circles"][0][0] == {"label": 1}
