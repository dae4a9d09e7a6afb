"""Integral group ring of a free group and Fox derivatives."""

from __future__ import annotations

from typing import Iterable, Mapping

from ..grouptheory.words import Word


class GroupRingElem:
    """Finite Z-combination of freely reduced words."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[Word, int] | Iterable[tuple[Word, int]] = ()):
        acc: dict[Word, int] = {}
        items = terms.items() if isinstance(terms, Mapping) else terms
        for w, c in items:
            if c:
                acc[w] = acc.get(w, 0) + c
        self.terms = {w: c for w, c in acc.items() if c}

    @classmethod
    def word(cls, w: Word, coeff: int = 1) -> GroupRingElem:
        return cls({w: coeff})

    @classmethod
    def one(cls) -> GroupRingElem:
        return cls({Word(): 1})

    def __add__(self, other: GroupRingElem) -> GroupRingElem:
        return GroupRingElem(list(self.terms.items()) + list(other.terms.items()))

    def __neg__(self):
        return GroupRingElem({w: -c for w, c in self.terms.items()})

    def __sub__(self, other: GroupRingElem) -> GroupRingElem:
        return self + (-other)

    def __mul__(self, other: GroupRingElem) -> GroupRingElem:
        out = []
        for u, a in self.terms.items():
            for v, b in other.terms.items():
                out.append((u * v, a * b))
        return GroupRingElem(out)

    def __eq__(self, other):
        return isinstance(other, GroupRingElem) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def is_zero(self) -> bool:
        return not self.terms

    def augmentation(self) -> int:
        return sum(self.terms.values())

    def __repr__(self):
        return f"GroupRingElem({self.terms})"


def fox_derivative(w: Word, j: int) -> GroupRingElem:
    """d w / d x_j.

    Uses d(uv) = du + u dv with d(x_j) = 1 and d(x_j^-1) = -x_j^-1, which
    unrolls to a sum over the occurrences of x_j^{+-1} in w.
    """
    out = []
    letters = w.letters
    for pos, (g, s) in enumerate(letters):
        if g != j:
            continue
        if s > 0:
            out.append((Word.of(letters[:pos]), 1))
        else:
            out.append((Word.of(letters[:pos + 1]), -1))
    return GroupRingElem(out)


def fox_jacobian(relators, k: int) -> list[list[GroupRingElem]]:
    return [[fox_derivative(r, j) for j in range(k)] for r in relators]
