"""Exact Laurent polynomials over the integers.

Two concrete types are provided: :class:`LaurentPoly1` in the single variable
``z`` and :class:`LaurentPoly2` in ``(a, z)``.  Both are immutable, store only
nonzero coefficients and compare structurally.
"""

from __future__ import annotations

from typing import Any, Dict, Iterable, Iterator, Mapping, Tuple, Union

__all__ = [
    "LaurentPoly1",
    "LaurentPoly2",
    "A",
    "Z",
    "ONE",
    "z_poly",
    "derivative_a",
    "eval_a1",
    "unlink_homfly",
    "falling_factorial",
]


def falling_factorial(e: int, k: int) -> int:
    """Return ``e (e-1) ... (e-k+1)``; this is 1 for ``k == 0``."""
    out = 1
    for i in range(k):
        out *= e - i
    return out


class _Laurent:
    """Shared sparse dict machinery.  Subclasses fix the key type."""

    __slots__ = ("_c", "_hash")

    def __init__(self, coeffs: Union[Mapping[Any, int], Iterable[Tuple[Any, int]], None] = None):
        items = coeffs.items() if isinstance(coeffs, Mapping) else (coeffs or ())
        c: Dict[Any, int] = {}
        for key, val in items:
            key = self._check_key(key)
            if not isinstance(val, int):
                raise TypeError(f"coefficients must be integers, got {type(val).__name__}")
            c[key] = c.get(key, 0) + val
        self._c = {k: v for k, v in c.items() if v}
        self._hash = None

    # subclass hooks
    @staticmethod
    def _check_key(key):
        raise NotImplementedError

    @staticmethod
    def _add_keys(k1, k2):
        raise NotImplementedError

    _zero_key: Any = None

    @classmethod
    def constant(cls, c: int):
        return cls({cls._zero_key: c})

    def _coerce(self, other):
        if isinstance(other, type(self)):
            return other
        if isinstance(other, int):
            return self.constant(other)
        return NotImplemented

    @property
    def coeffs(self) -> Dict[Any, int]:
        return dict(self._c)

    def items(self) -> Iterator[Tuple[Any, int]]:
        return iter(sorted(self._c.items()))

    def coefficient(self, key) -> int:
        return self._c.get(self._check_key(key), 0)

    def is_zero(self) -> bool:
        return not self._c

    def __bool__(self) -> bool:
        return bool(self._c)

    def __len__(self) -> int:
        return len(self._c)

    def __eq__(self, other) -> bool:
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self._c == other._c

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((type(self).__name__, frozenset(self._c.items())))
        return self._hash

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        c = dict(self._c)
        for k, v in other._c.items():
            c[k] = c.get(k, 0) + v
        return type(self)(c)

    __radd__ = __add__

    def __neg__(self):
        return type(self)({k: -v for k, v in self._c.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        if isinstance(other, int):
            return self.scale(other)
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        c: Dict[Any, int] = {}
        for k1, v1 in self._c.items():
            for k2, v2 in other._c.items():
                k = self._add_keys(k1, k2)
                c[k] = c.get(k, 0) + v1 * v2
        return type(self)(c)

    __rmul__ = __mul__

    def scale(self, c: int):
        return type(self)({k: c * v for k, v in self._c.items()})

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            raise ValueError("only nonnegative integer powers are supported")
        out = self.constant(1)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __repr__(self) -> str:
        return f"{type(self).__name__}({str(self)!r})"


def _fmt_terms(terms) -> str:
    """Join (coefficient, monomial-string) pairs as ``6*z^4 - 8*z^2``."""
    if not terms:
        return "0"
    parts = []
    for i, (c, mono) in enumerate(terms):
        sign = "-" if c < 0 else "+"
        mag = abs(c)
        if not mono:
            body = str(mag)
        elif mag == 1:
            body = mono
        else:
            body = f"{mag}*{mono}"
        if i == 0:
            parts.append(body if sign == "+" else f"-{body}")
        else:
            parts.append(f"{sign} {body}")
    return " ".join(parts)


def _fmt_power(var: str, e: int) -> str:
    if e == 0:
        return ""
    if e == 1:
        return var
    return f"{var}^{e}"


class LaurentPoly1(_Laurent):
    """Laurent polynomial in ``z``; keys are integer exponents."""

    __slots__ = ()
    _zero_key = 0

    @staticmethod
    def _check_key(key):
        if not isinstance(key, int):
            raise TypeError("LaurentPoly1 exponents are integers")
        return key

    @staticmethod
    def _add_keys(k1, k2):
        return k1 + k2

    @classmethod
    def monomial(cls, exp: int, c: int = 1) -> "LaurentPoly1":
        return cls({exp: c})

    def min_degree(self) -> int:
        return min(self._c) if self._c else 0

    def max_degree(self) -> int:
        return max(self._c) if self._c else 0

    def __str__(self) -> str:
        terms = [(c, _fmt_power("z", e)) for e, c in sorted(self._c.items(), reverse=True)]
        return _fmt_terms(terms)

    def to_json(self) -> list:
        return [{"z": e, "c": str(c)} for e, c in sorted(self._c.items())]

    @classmethod
    def from_json(cls, data: list) -> "LaurentPoly1":
        return cls({int(t["z"]): int(t["c"]) for t in data})


class LaurentPoly2(_Laurent):
    """Laurent polynomial in ``(a, z)``; keys are ``(a_exp, z_exp)`` pairs."""

    __slots__ = ()
    _zero_key = (0, 0)

    @staticmethod
    def _check_key(key):
        if not (isinstance(key, tuple) and len(key) == 2 and all(isinstance(e, int) for e in key)):
            raise TypeError("LaurentPoly2 keys are (a_exp, z_exp) integer pairs")
        return key

    @staticmethod
    def _add_keys(k1, k2):
        return (k1[0] + k2[0], k1[1] + k2[1])

    @classmethod
    def monomial(cls, a_exp: int, z_exp: int, c: int = 1) -> "LaurentPoly2":
        return cls({(a_exp, z_exp): c})

    def derivative_a(self, order: int = 1) -> "LaurentPoly2":
        return derivative_a(self, order)

    def eval_a1(self) -> LaurentPoly1:
        return eval_a1(self)

    def __str__(self) -> str:
        terms = []
        # z-degree descending, then a-degree descending
        for (ea, ez), c in sorted(self._c.items(), key=lambda kv: (-kv[0][1], -kv[0][0])):
            mono = "*".join(p for p in (_fmt_power("a", ea), _fmt_power("z", ez)) if p)
            terms.append((c, mono))
        return _fmt_terms(terms)

    def to_json(self) -> list:
        return [{"a": ea, "z": ez, "c": str(c)} for (ea, ez), c in sorted(self._c.items())]

    @classmethod
    def from_json(cls, data: list) -> "LaurentPoly2":
        return cls({(int(t["a"]), int(t["z"])): int(t["c"]) for t in data})


A = LaurentPoly2.monomial(1, 0)
Z = LaurentPoly2.monomial(0, 1)
ONE = LaurentPoly2.constant(1)


def z_poly(exp: int = 1, c: int = 1) -> LaurentPoly1:
    return LaurentPoly1.monomial(exp, c)


def derivative_a(p: LaurentPoly2, order: int) -> LaurentPoly2:
    """Formal ``order``-th partial derivative in ``a``."""
    if order < 0:
        raise ValueError("derivative order must be nonnegative")
    if order == 0:
        return p
    return LaurentPoly2(
        {(ea - order, ez): c * falling_factorial(ea, order) for (ea, ez), c in p._c.items()}
    )


def eval_a1(p: LaurentPoly2) -> LaurentPoly1:
    """Substitute ``a = 1``."""
    out: Dict[int, int] = {}
    for (_, ez), c in p._c.items():
        out[ez] = out.get(ez, 0) + c
    return LaurentPoly1(out)


def unlink_homfly(r: int) -> LaurentPoly2:
    """HOMFLY-PT value of the ``r``-component unlink, ``((a - 1/a)/z)^(r-1)``."""
    if not isinstance(r, int) or r < 1:
        raise ValueError(f"unlink needs at least one component, got r={r!r}")
    step = LaurentPoly2({(1, -1): 1, (-1, -1): -1})
    return step ** (r - 1)
