"""Braid words in Artin generators and their closures.

A letter ``+i`` stands for ``sigma_i`` and ``-i`` for its inverse.  Letters are
read left to right; at ``sigma_i^{+-1}`` the strands in positions ``i`` and
``i+1`` swap.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Optional, Sequence, Tuple

__all__ = [
    "BraidError",
    "BraidParseError",
    "BraidWord",
    "ClosureInfo",
    "parse",
    "format_word",
    "closure_info",
    "conjugate",
    "stabilize",
    "conway_triple",
    "random_word",
]


class BraidError(ValueError):
    pass


class BraidParseError(BraidError):
    def __init__(self, token: str, reason: str):
        super().__init__(f"bad braid token {token!r}: {reason}")
        self.token = token


@dataclass(frozen=True)
class BraidWord:
    strands: int
    letters: Tuple[int, ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "letters", tuple(self.letters))
        if not isinstance(self.strands, int) or self.strands < 1:
            raise BraidError(f"strand count must be a positive integer, got {self.strands!r}")
        for x in self.letters:
            if not isinstance(x, int) or x == 0 or abs(x) >= self.strands:
                raise BraidError(
                    f"letter {x!r} is not a generator of B_{self.strands}"
                )

    def __len__(self) -> int:
        return len(self.letters)

    def __str__(self) -> str:
        return format_word(self)

    @property
    def writhe(self) -> int:
        return sum(1 if x > 0 else -1 for x in self.letters)

    def inverse(self) -> "BraidWord":
        return BraidWord(self.strands, tuple(-x for x in reversed(self.letters)))

    def __mul__(self, other: "BraidWord") -> "BraidWord":
        if not isinstance(other, BraidWord):
            return NotImplemented
        if other.strands != self.strands:
            raise BraidError(f"strand mismatch: {self.strands} vs {other.strands}")
        return BraidWord(self.strands, self.letters + other.letters)


def parse(text: str, strands: Optional[int] = None) -> BraidWord:
    """Parse whitespace-separated signed generator indices.

    Without ``strands`` the braid lives on ``max|letter| + 1`` strands (one
    strand for the empty word).
    """
    letters = []
    for tok in text.split():
        try:
            x = int(tok)
        except ValueError:
            raise BraidParseError(tok, "not an integer") from None
        if x == 0:
            raise BraidParseError(tok, "generator index 0 does not exist")
        if strands is not None and abs(x) >= strands:
            raise BraidParseError(tok, f"needs at least {abs(x) + 1} strands, have {strands}")
        letters.append(x)
    if strands is None:
        strands = max((abs(x) for x in letters), default=0) + 1
    elif strands < 1:
        raise BraidError(f"strand count must be positive, got {strands}")
    return BraidWord(strands, tuple(letters))


def format_word(w: BraidWord) -> str:
    return " ".join(str(x) for x in w.letters)


@dataclass(frozen=True)
class ClosureInfo:
    """Closure combinatorics.  ``permutation[t - 1]`` is where strand ``t`` exits."""

    permutation: Tuple[int, ...]
    cycles: Tuple[Tuple[int, ...], ...]
    r: int
    writhe: int


def _exit_position(letters: Sequence[int], p: int) -> int:
    for x in letters:
        q = abs(x)
        if p == q:
            p = q + 1
        elif p == q + 1:
            p = q
    return p


def closure_info(w: BraidWord) -> ClosureInfo:
    perm = tuple(_exit_position(w.letters, t) for t in range(1, w.strands + 1))
    seen = set()
    cycles = []
    for t in range(1, w.strands + 1):
        if t in seen:
            continue
        cyc = []
        s = t
        while s not in seen:
            seen.add(s)
            cyc.append(s)
            s = perm[s - 1]
        cycles.append(tuple(cyc))
    return ClosureInfo(perm, tuple(cycles), len(cycles), w.writhe)


def conjugate(w: BraidWord, g: BraidWord) -> BraidWord:
    """Return ``g w g^-1`` verbatim (no free reduction)."""
    if w.strands != g.strands:
        raise BraidError(f"strand mismatch: word on {w.strands}, conjugator on {g.strands}")
    return g * w * g.inverse()


def stabilize(w: BraidWord, sign: int) -> BraidWord:
    if sign not in (1, -1):
        raise BraidError(f"stabilization sign must be +1 or -1, got {sign!r}")
    m = w.strands
    return BraidWord(m + 1, w.letters + (sign * m,))


def conway_triple(w: BraidWord, index: int) -> Tuple[BraidWord, BraidWord, BraidWord]:
    """Positive, negative and smoothed words at letter ``index``."""
    if not 0 <= index < len(w.letters):
        raise IndexError(f"letter index {index} out of range for a word of length {len(w)}")
    q = abs(w.letters[index])
    before, after = w.letters[:index], w.letters[index + 1:]
    plus = BraidWord(w.strands, before + (q,) + after)
    minus = BraidWord(w.strands, before + (-q,) + after)
    zero = BraidWord(w.strands, before + after)
    return plus, minus, zero


def random_word(rng: random.Random, strands: int, length: int) -> BraidWord:
    """Independent uniform letters from ``{+-1, ..., +-(strands-1)}``."""
    if strands < 2:
        return BraidWord(max(strands, 1), ())
    letters = tuple(rng.choice((1, -1)) * rng.randint(1, strands - 1) for _ in range(length))
    return BraidWord(strands, letters)
