"""The twisted representation and the presentation 2-complex chain maps."""

from __future__ import annotations

from dataclasses import dataclass

from ..grouptheory.abelian import PhiClass, phi_from_exponents
from ..grouptheory.epimorphisms import Epimorphism, validate_epimorphism
from ..grouptheory.words import Presentation, Word
from ..laurent.matrix import PolyMatrix
from ..laurent.poly import LaurentPoly
from .fox import GroupRingElem, fox_derivative


class TwistRep:
    """x -> t^phi(x) P(alpha(x)) on Z[G][t^{+-1}], with P the right-regular representation.

    Row r of P(g) has its single 1 in the column of elements[r] * g, so
    P(gh) = P(g) P(h).
    """

    def __init__(self, alpha: Epimorphism, phi: PhiClass):
        self.alpha = alpha
        self.phi = phi
        self.group = alpha.target
        self.d = self.group.order

    def word_data(self, w: Word) -> tuple[int, int]:
        """(phi(w), index of alpha(w))."""
        return self.phi(w), self.alpha.index_of(w)

    def monomial_matrix(self, exponent: int, g: int, coeff: int = 1) -> PolyMatrix:
        d = self.d
        tab = self.group.table
        zero = LaurentPoly()
        mono = LaurentPoly.monomial(exponent, coeff)
        entries = [zero] * (d * d)
        for r in range(d):
            entries[r * d + tab[r][g]] = mono
        return PolyMatrix(d, d, entries)

    def block(self, i: int) -> PolyMatrix:
        """Matrix of generator x_i."""
        return self.monomial_matrix(self.phi.exponents[i], self.alpha.image_indices[i])

    def inverse_block(self, i: int) -> PolyMatrix:
        return self.monomial_matrix(-self.phi.exponents[i], self.group.inv[self.alpha.image_indices[i]])

    def letter_product(self, w: Word) -> PolyMatrix:
        """Product of per-letter blocks; the slow reference for sigma on a word."""
        out = PolyMatrix.identity(self.d)
        for g, s in w.letters:
            out = out @ (self.block(g) if s > 0 else self.inverse_block(g))
        return out


def _accumulate(acc: dict, rep: TwistRep, e: GroupRingElem, row0: int, col0: int):
    tab = rep.group.table
    for w, c in e.terms.items():
        f, g = rep.word_data(w)
        for r in range(rep.d):
            key = (row0 + r, col0 + tab[r][g])
            slot = acc.setdefault(key, {})
            slot[f] = slot.get(f, 0) + c


def _materialize(acc: dict, rows: int, cols: int) -> PolyMatrix:
    zero = LaurentPoly()
    entries = [zero] * (rows * cols)
    for (i, j), coeffs in acc.items():
        entries[i * cols + j] = LaurentPoly(coeffs)
    return PolyMatrix(rows, cols, entries)


def sigma_eval(e: GroupRingElem, rep: TwistRep) -> PolyMatrix:
    """Linear extension of the representation to the group ring."""
    acc: dict = {}
    _accumulate(acc, rep, e, 0, 0)
    return _materialize(acc, rep.d, rep.d)


@dataclass(frozen=True)
class TwistedComplex:
    """Row-vector chain complex C2 --d2--> C1 --d1--> C0 of the presentation 2-complex.

    d2 is (l*d) x (k*d) with block (i, j) = sigma(d r_i / d x_j); d1 is
    (k*d) x d with block j = sigma(x_j) - 1.  The chain condition reads
    d2 @ d1 == 0.
    """

    presentation: Presentation
    rep: TwistRep
    d2: PolyMatrix
    d1: PolyMatrix

    @property
    def k(self) -> int:
        return self.presentation.k

    @property
    def l(self) -> int:
        return self.presentation.l

    @property
    def d(self) -> int:
        return self.rep.d

    def d1_block(self, j: int) -> PolyMatrix:
        d = self.d
        return self.d1.submatrix(range(j * d, (j + 1) * d), range(d))

    def d2_without_block_column(self, j: int) -> PolyMatrix:
        d = self.d
        return self.d2.delete_columns(range(j * d, (j + 1) * d))


def build_complex(p: Presentation, alpha: Epimorphism, phi: PhiClass, validate: bool = True) -> TwistedComplex:
    if validate:
        phi_from_exponents(p, phi.exponents)
        if not validate_epimorphism(p, alpha.target, alpha.images):
            raise ValueError("alpha is not an epimorphism of this presentation")
    rep = TwistRep(alpha, phi)
    d, k, l = rep.d, p.k, p.l
    acc: dict = {}
    for i, r in enumerate(p.relators):
        for j in range(k):
            _accumulate(acc, rep, fox_derivative(r, j), i * d, j * d)
    d2 = _materialize(acc, l * d, k * d)
    acc = {}
    one = GroupRingElem.one()
    for j in range(k):
        _accumulate(acc, rep, GroupRingElem.word(Word.gen(j)) - one, j * d, 0)
    d1 = _materialize(acc, k * d, d)
    return TwistedComplex(p, rep, d2, d1)
