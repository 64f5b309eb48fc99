"""Identity checks shared by the ``verify``/``random-check`` commands and the tests.

Each check returns a list of human-readable failure strings; empty means pass.
"""

from __future__ import annotations

from math import factorial
from typing import List

from .algebra import LaurentPoly1
from .braid import BraidWord, conjugate, conway_triple, stabilize
from .diagram import gauss_from_braid
from .invariant import A_kj, D, P, P_star
from .oracle import script_p

__all__ = [
    "main_theorem",
    "skein_D",
    "skein_A",
    "skein_P",
    "skein_script_p",
    "markov",
]

_z = LaurentPoly1.monomial(1)


def main_theorem(w: BraidWord, k: int) -> List[str]:
    G = gauss_from_braid(w)
    p, ps, sp = P(k + 1, G), P_star(k + 1, G), script_p(w, k)
    if p == ps == sp:
        return []
    return [f"k={k}: P_{k + 1}={p}  P*_{k + 1}={ps}  oracle={sp}"]


def skein_D(w: BraidWord, index: int, kmax: int, nmax: int) -> List[str]:
    """``D(n,k,j,G+) - D(n,k,j,G-) = D(n-1,k,j,G0)`` for ``n <= nmax``, ``j <= k <= kmax``."""
    gp, gm, g0 = (gauss_from_braid(x) for x in conway_triple(w, index))
    bad = []
    for k in range(1, kmax + 1):
        for j in range(1, k + 1):
            for n in range(nmax + 1):
                lhs = D(n, k, j, gp) - D(n, k, j, gm)
                rhs = D(n - 1, k, j, g0)
                if lhs != rhs:
                    bad.append(f"D skein n={n} k={k} j={j}: {lhs} != {rhs}")
    return bad


def skein_A(w: BraidWord, index: int, kmax: int) -> List[str]:
    gp, gm, g0 = (gauss_from_braid(x) for x in conway_triple(w, index))
    bad = []
    for k in range(1, kmax + 1):
        for j in range(1, k + 1):
            lhs = A_kj(k, j, gp) - A_kj(k, j, gm)
            rhs = _z * A_kj(k, j, g0)
            if lhs != rhs:
                bad.append(f"A skein k={k} j={j}: {lhs} != {rhs}")
    return bad


def _skein_rhs_terms(k: int, plus_lower, minus_lower) -> LaurentPoly1:
    """``k z X_k(+) + sum_i (-1)^(k-1-i) k!/i! z^(k-i) X_{i+1}(-)``."""
    out = LaurentPoly1()
    if k:
        out = out + _z * plus_lower(k) * k
    for i in range(k):
        coef = (-1) ** (k - 1 - i) * (factorial(k) // factorial(i))
        out = out + LaurentPoly1.monomial(k - i, coef) * minus_lower(i + 1)
    return out


def skein_P(w: BraidWord, index: int, kmax: int) -> List[str]:
    """Skein relation for ``P_{k+1}`` with ``k = 0..kmax``."""
    gp, gm, g0 = (gauss_from_braid(x) for x in conway_triple(w, index))
    bad = []
    for k in range(kmax + 1):
        lhs = P(k + 1, gp) - P(k + 1, gm)
        rhs = _z * P(k + 1, g0) - _skein_rhs_terms(
            k, lambda i: P(i, gp), lambda i: P(i, gm)
        )
        if lhs != rhs:
            bad.append(f"P skein k={k}: {lhs} != {rhs}")
    return bad


def skein_script_p(w: BraidWord, index: int, kmax: int) -> List[str]:
    """The same relation for the oracle's ``z^k P^(k)|_{a=1}``, with ``i`` shifted by one."""
    wp, wm, w0 = conway_triple(w, index)
    bad = []
    for k in range(kmax + 1):
        lhs = script_p(wp, k) - script_p(wm, k) + _skein_rhs_terms(
            k, lambda i: script_p(wp, i - 1), lambda i: script_p(wm, i - 1)
        )
        rhs = _z * script_p(w0, k)
        if lhs != rhs:
            bad.append(f"oracle skein k={k}: {lhs} != {rhs}")
    return bad


def markov(w: BraidWord, g: BraidWord, sign: int, kmax: int) -> List[str]:
    """``P_k`` for ``k = 1..kmax`` under conjugation by ``g`` and stabilization by ``sign``."""
    G = gauss_from_braid(w)
    Gc = gauss_from_braid(conjugate(w, g))
    Gs = gauss_from_braid(stabilize(w, sign))
    bad = []
    for k in range(1, kmax + 1):
        base = P(k, G)
        for what, H in (("conjugate", Gc), ("stabilize", Gs)):
            other = P(k, H)
            if other != base:
                bad.append(f"{what} changed P_{k}: {base} -> {other}")
    return bad
