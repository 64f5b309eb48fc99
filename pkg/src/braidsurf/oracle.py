"""HOMFLY-PT of closed braids by skein recursion.

Works on the braid word alone.  Components are walked in order of their
smallest closure position; a crossing is a *violation* when it is first met
on the overpassing strand.  The first violation is resolved with

    a P(L+) - a^-1 P(L-) = z P(L0),

switching the crossing (same length, later first violation) or smoothing it
(one letter fewer).  Words without violations close up to unlinks.
"""

from __future__ import annotations

from typing import Dict, Optional, Tuple

from .algebra import LaurentPoly1, LaurentPoly2, derivative_a, eval_a1, unlink_homfly
from .braid import BraidWord
from .errors import ResourceLimitError

__all__ = ["DEFAULT_MAX_LETTERS", "homfly", "conway", "script_p", "first_violation"]

DEFAULT_MAX_LETTERS = 16

_A_M2 = LaurentPoly2.monomial(-2, 0)
_A_M1_Z = LaurentPoly2.monomial(-1, 1)
_A_2 = LaurentPoly2.monomial(2, 0)
_A_Z = LaurentPoly2.monomial(1, 1)


def first_violation(strands: int, letters: Tuple[int, ...]) -> Tuple[Optional[int], int]:
    """Index of the first letter met on its overpass, and the component count."""
    seen = set()
    done = [False] * (strands + 1)
    r = 0
    for start in range(1, strands + 1):
        if done[start]:
            continue
        r += 1
        p = start
        while True:
            done[p] = True
            for idx, x in enumerate(letters):
                q = abs(x)
                if p == q:
                    over = x > 0
                    p = q + 1
                elif p == q + 1:
                    over = x < 0
                    p = q
                else:
                    continue
                if idx not in seen:
                    seen.add(idx)
                    if over:
                        return idx, -1
            if p == start:
                break
    return None, r


def _homfly(strands: int, letters: Tuple[int, ...], memo: Dict) -> LaurentPoly2:
    key = letters
    hit = memo.get(key)
    if hit is not None:
        return hit
    idx, r = first_violation(strands, letters)
    if idx is None:
        out = unlink_homfly(r)
    else:
        x = letters[idx]
        switched = letters[:idx] + (-x,) + letters[idx + 1:]
        smoothed = letters[:idx] + letters[idx + 1:]
        if x > 0:
            out = _A_M2 * _homfly(strands, switched, memo) + _A_M1_Z * _homfly(strands, smoothed, memo)
        else:
            out = _A_2 * _homfly(strands, switched, memo) - _A_Z * _homfly(strands, smoothed, memo)
    memo[key] = out
    return out


def homfly(w: BraidWord, *, max_letters: int = DEFAULT_MAX_LETTERS, memoize: bool = True) -> LaurentPoly2:
    if len(w.letters) > max_letters:
        raise ResourceLimitError(
            f"skein oracle bound: {len(w.letters)} letters > {max_letters}"
        )
    if memoize:
        return _homfly(w.strands, w.letters, {})
    return _homfly(w.strands, w.letters, _NoMemo())


class _NoMemo(dict):
    def __setitem__(self, key, value) -> None:
        pass


def conway(w: BraidWord, *, max_letters: int = DEFAULT_MAX_LETTERS) -> LaurentPoly1:
    return eval_a1(homfly(w, max_letters=max_letters))


def script_p(w: BraidWord, k: int, *, max_letters: int = DEFAULT_MAX_LETTERS) -> LaurentPoly1:
    """``z^k d^k/da^k P(L) |_{a=1}``."""
    if k < 0:
        raise ValueError("derivative order must be nonnegative")
    out = eval_a1(derivative_a(homfly(w, max_letters=max_letters), k)) * LaurentPoly1.monomial(k)
    if out and out.min_degree() < 0:
        raise AssertionError(f"negative power of z in z^{k} P^({k})|a=1: {out}")
    return out
