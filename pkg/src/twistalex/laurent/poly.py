"""One-variable Laurent polynomials over the integers."""

from __future__ import annotations

import re
from fractions import Fraction
from math import gcd as _igcd
from typing import Iterable, Mapping

from . import _dense as D


class UndefinedDegree(ValueError):
    """Raised when a degree-type query is made on the zero polynomial."""


class LaurentPoly:
    """An element of Z[t, 1/t].

    Stored densely as ``t**low * (c[0] + c[1] t + ...)`` with ``c[0]`` and
    ``c[-1]`` nonzero; the zero polynomial has ``c == ()``.  Instances are
    immutable and hashable.
    """

    __slots__ = ("low", "c", "_hash")

    def __init__(self, coeffs: Mapping[int, int] | None = None):
        if not coeffs:
            self._set(0, ())
            return
        lo = min(coeffs)
        hi = max(coeffs)
        dense = [0] * (hi - lo + 1)
        for e, v in coeffs.items():
            dense[e - lo] += int(v)
        k, dense = D.strip_low(D.trim(dense))
        self._set(lo + k, dense)

    def _set(self, low, c):
        object.__setattr__(self, "low", low if c else 0)
        object.__setattr__(self, "c", c)
        object.__setattr__(self, "_hash", None)

    def __setattr__(self, name, value):
        raise AttributeError("LaurentPoly is immutable")

    @classmethod
    def from_dense(cls, low: int, c) -> LaurentPoly:
        """Build from t**low * poly(c); c may have leading/trailing zeros."""
        k, c = D.strip_low(D.trim(tuple(c)))
        p = cls.__new__(cls)
        p._set(low + k if c else 0, c)
        return p

    @classmethod
    def const(cls, n: int) -> LaurentPoly:
        return cls.from_dense(0, (n,))

    @classmethod
    def monomial(cls, e: int, coeff: int = 1) -> LaurentPoly:
        return cls.from_dense(e, (coeff,))

    @classmethod
    def from_coeffs(cls, low: int, coeffs: Iterable[int]) -> LaurentPoly:
        return cls.from_dense(low, tuple(coeffs))

    # -- views -----------------------------------------------------------

    @property
    def coeffs(self) -> dict[int, int]:
        """Exponent -> nonzero coefficient."""
        return {self.low + i: x for i, x in enumerate(self.c) if x}

    def is_zero(self) -> bool:
        return not self.c

    def __bool__(self):
        return bool(self.c)

    @property
    def min_exp(self) -> int:
        if not self.c:
            raise UndefinedDegree("zero polynomial has no exponents")
        return self.low

    @property
    def max_exp(self) -> int:
        if not self.c:
            raise UndefinedDegree("zero polynomial has no exponents")
        return self.low + len(self.c) - 1

    def leading_coefficient(self) -> int:
        if not self.c:
            raise UndefinedDegree("zero polynomial has no leading coefficient")
        return self.c[-1]

    def lowest_coefficient(self) -> int:
        if not self.c:
            raise UndefinedDegree("zero polynomial has no lowest coefficient")
        return self.c[0]

    def content(self) -> int:
        return D.content(self.c)

    def primitive(self) -> LaurentPoly:
        """Divide out the integer content (sign of the leading term kept)."""
        g = D.content(self.c)
        if g <= 1:
            return self
        return LaurentPoly.from_dense(self.low, tuple(x // g for x in self.c))

    # -- arithmetic ------------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, int):
            other = LaurentPoly.const(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self.low == other.low and self.c == other.c

    def __hash__(self):
        h = self._hash
        if h is None:
            h = hash((self.low, self.c))
            object.__setattr__(self, "_hash", h)
        return h

    @staticmethod
    def _coerce(x):
        if isinstance(x, LaurentPoly):
            return x
        if isinstance(x, int):
            return LaurentPoly.const(x)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if not self.c:
            return other
        if not other.c:
            return self
        lo = min(self.low, other.low)
        a = D.shift(self.c, self.low - lo)
        b = D.shift(other.c, other.low - lo)
        return LaurentPoly.from_dense(lo, D.add(a, b))

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly.from_dense(self.low, D.neg(self.c))

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return LaurentPoly.from_dense(self.low + other.low, D.mul(self.c, other.c))

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            if len(self.c) == 1 and abs(self.c[0]) == 1:
                return LaurentPoly.monomial(self.low * n, self.c[0] ** (-n))
            raise ValueError("only units have negative powers")
        out = LaurentPoly.const(1)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def shift(self, k: int) -> LaurentPoly:
        """Multiply by t**k."""
        return LaurentPoly.from_dense(self.low + k, self.c)

    def exact_div(self, other: LaurentPoly) -> LaurentPoly:
        """Quotient in Z[t^{+-1}]; raises ValueError when not exact."""
        if not other.c:
            raise ZeroDivisionError("division by the zero polynomial")
        return LaurentPoly.from_dense(self.low - other.low, D.divexact(self.c, other.c))

    def divides(self, other: LaurentPoly) -> bool:
        """True iff self divides other in Z[t^{+-1}]."""
        if not other.c:
            return True
        if not self.c:
            return False
        try:
            D.divexact(other.c, self.c)
        except ValueError:
            return False
        return True

    def __call__(self, x):
        if not self.c:
            return 0
        if self.low < 0:
            x = Fraction(x)
        return D.evaluate(self.c, x) * x ** self.low

    def substitute_power(self, n: int) -> LaurentPoly:
        """Return p(t**n); n may be negative."""
        if n == 0:
            return LaurentPoly.const(sum(self.c))
        return LaurentPoly({n * e: v for e, v in self.coeffs.items()})

    def involution(self) -> LaurentPoly:
        """p(t) -> p(1/t)."""
        return self.substitute_power(-1)

    # -- printing --------------------------------------------------------

    def __repr__(self):
        return f"LaurentPoly({self})"

    def __str__(self):
        if not self.c:
            return "0"
        parts = []
        for e in range(self.max_exp, self.low - 1, -1):
            v = self.c[e - self.low]
            if not v:
                continue
            sign = "-" if v < 0 else "+"
            a = abs(v)
            if e == 0:
                body = str(a)
            else:
                mono = "t" if e == 1 else f"t^{e}"
                body = mono if a == 1 else f"{a}*{mono}"
            parts.append((sign, body))
        s0, b0 = parts[0]
        out = ("-" if s0 == "-" else "") + b0
        for s, b in parts[1:]:
            out += f" {s} {b}"
        return out

    @classmethod
    def parse(cls, text: str) -> LaurentPoly:
        """Parse strings like ``"t^2 - 3*t + 1"`` or ``"t^-1 - 1"``."""
        s = text.replace(" ", "").replace("^-", "^~")
        if not s or s == "0":
            return cls()
        if s[0] not in "+-":
            s = "+" + s
        terms = re.findall(r"[+-][^+-]+", s)
        if "".join(terms) != s:
            raise ValueError(f"cannot parse Laurent polynomial {text!r}")
        acc: dict[int, int] = {}
        pat = re.compile(r"([+-])(\d+)?(\*?t(?:\^(~?\d+))?)?$")
        for term in terms:
            m = pat.match(term)
            if not m or (m.group(2) is None and m.group(3) is None):
                raise ValueError(f"bad term {term!r} in {text!r}")
            if m.group(2) is None and m.group(3).startswith("*"):
                raise ValueError(f"bad term {term!r} in {text!r}")
            coef = int(m.group(2)) if m.group(2) else 1
            if m.group(1) == "-":
                coef = -coef
            if m.group(3) is None:
                e = 0
            elif m.group(4) is None:
                e = 1
            else:
                e = int(m.group(4).replace("~", "-"))
            acc[e] = acc.get(e, 0) + coef
        return cls(acc)


T = LaurentPoly.monomial(1)


def normalize_unit(p: LaurentPoly) -> LaurentPoly:
    """Canonical associate: minimum exponent 0 and positive lowest coefficient."""
    if not p.c:
        return p
    c = p.c if p.c[0] > 0 else D.neg(p.c)
    return LaurentPoly.from_dense(0, c)


def span_degree(p: LaurentPoly) -> int:
    """Exponent span max - min."""
    if not p.c:
        raise UndefinedDegree("degree of the zero polynomial is undefined")
    return len(p.c) - 1


def is_monic(p: LaurentPoly) -> bool:
    if not p.c:
        raise UndefinedDegree("monicness of the zero polynomial is undefined")
    return abs(p.c[-1]) == 1


def is_unit(p: LaurentPoly) -> bool:
    return len(p.c) == 1 and abs(p.c[0]) == 1


def gcd_laurent(p: LaurentPoly, q: LaurentPoly) -> LaurentPoly:
    """Gcd in Z[t^{+-1}], unit-normalized.

    gcd(content) times the primitive gcd over Q[t] (Gauss's lemma).
    """
    if not p.c and not q.c:
        raise ValueError("gcd of two zero polynomials is undefined")
    if not q.c:
        return normalize_unit(p)
    if not p.c:
        return normalize_unit(q)
    g = D.scale(D.gcd_primitive(p.c, q.c), _igcd(D.content(p.c), D.content(q.c)))
    return normalize_unit(LaurentPoly.from_dense(0, g))


def gcd_many(polys: Iterable[LaurentPoly]) -> LaurentPoly:
    """Gcd of a sequence; zero if every entry is zero."""
    g = LaurentPoly()
    for p in polys:
        if not p.c:
            continue
        g = normalize_unit(p) if not g.c else gcd_laurent(g, p)
        if is_unit(g):
            break
    return g


def is_symmetric(p: LaurentPoly) -> bool:
    """True iff p(1/t) is an associate of p."""
    return normalize_unit(p) == normalize_unit(p.involution())
