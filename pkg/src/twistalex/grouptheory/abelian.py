"""Abelianization and classes phi: pi -> Z."""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Sequence

from ..laurent.linalg import integer_smith
from ..laurent.matrix import IntMatrix
from .words import Presentation, Word


class NotAHomomorphism(ValueError):
    """Generator values that do not kill every relator."""


def abelianization(p: Presentation) -> tuple[int, list[int]]:
    """(b1, torsion invariant factors > 1) of H1 from the relator exponent matrix."""
    if p.l == 0:
        return p.k, []
    diag = integer_smith(IntMatrix.from_rows(p.exponent_matrix(), cols=p.k))
    nonzero = [d for d in diag if d]
    return p.k - len(nonzero), [d for d in nonzero if d > 1]


@dataclass(frozen=True)
class PhiClass:
    """phi given by its value on each generator."""

    exponents: tuple[int, ...]

    def __call__(self, w: Word) -> int:
        e = self.exponents
        return sum(s * e[g] for g, s in w.letters)

    @property
    def divisibility(self) -> int:
        """gcd of the generator values; 1 iff phi is primitive, 0 iff phi = 0."""
        g = 0
        for x in self.exponents:
            g = gcd(g, x)
        return g

    @property
    def primitive(self) -> bool:
        return self.divisibility == 1

    def is_zero(self) -> bool:
        return not any(self.exponents)

    def scaled(self, n: int) -> PhiClass:
        return PhiClass(tuple(n * x for x in self.exponents))


def phi_from_exponents(p: Presentation, exponents: Sequence[int]) -> PhiClass:
    """Validate generator values as a homomorphism to Z."""
    exponents = tuple(int(x) for x in exponents)
    if len(exponents) != p.k:
        raise ValueError(f"phi needs {p.k} values, got {len(exponents)}")
    phi = PhiClass(exponents)
    for i, r in enumerate(p.relators):
        v = phi(r)
        if v:
            raise NotAHomomorphism(f"relator {i} ({r.format(p.generators)}) has phi-value {v}")
    return phi


def infinite_cyclic_phi(p: Presentation) -> PhiClass:
    """The primitive class of a presentation with b1 = 1, sign fixed so the first nonzero value is positive."""
    k = p.k
    rows = p.exponent_matrix()
    # kernel of the exponent matrix over Q, scaled to a primitive integer vector
    from fractions import Fraction
    A = [[Fraction(x) for x in r] for r in rows]
    piv_cols, r = [], 0
    for c in range(k):
        pr = next((i for i in range(r, len(A)) if A[i][c]), None)
        if pr is None:
            continue
        A[r], A[pr] = A[pr], A[r]
        inv = 1 / A[r][c]
        A[r] = [x * inv for x in A[r]]
        for i in range(len(A)):
            if i != r and A[i][c]:
                f = A[i][c]
                A[i] = [x - f * y for x, y in zip(A[i], A[r])]
        piv_cols.append(c)
        r += 1
    free = [c for c in range(k) if c not in piv_cols]
    if len(free) != 1:
        raise ValueError(f"presentation has b1 = {len(free)}, expected 1")
    f = free[0]
    v = [Fraction(0)] * k
    v[f] = Fraction(1)
    for i, c in enumerate(piv_cols):
        v[c] = -A[i][f]
    from math import lcm
    den = 1
    for x in v:
        den = lcm(den, x.denominator)
    ints = [int(x * den) for x in v]
    g = 0
    for x in ints:
        g = gcd(g, x)
    ints = [x // g for x in ints]
    if next(x for x in ints if x) < 0:
        ints = [-x for x in ints]
    return phi_from_exponents(p, ints)
