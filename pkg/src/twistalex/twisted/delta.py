"""Orders of the twisted homology modules: Delta_0, Delta_1 and the Wada quotient."""

from __future__ import annotations

from dataclasses import dataclass, field

from ..laurent import _dense as D
from ..laurent.linalg import (
    _global_shifted, det_poly, echelon_q_dense, minors_gcd, module_order,
    prod_dense, smith_q_dense,
)
from ..laurent.poly import LaurentPoly, normalize_unit
from .complex import TwistedComplex

CONVENTION = "presentation-2-complex"


class NoValidColumn(ValueError):
    """Every block sigma(x_j) - 1 of d1 is singular."""


def delta0(c: TwistedComplex) -> LaurentPoly:
    """Order of H0: gcd of the d x d minors of d1."""
    return minors_gcd(c.d1, c.d)


@dataclass(frozen=True)
class _KernelRoute:
    primitive: LaurentPoly
    rank_d1: int
    rank_d2: int
    kernel_rank: int


def _kernel_route(c: TwistedComplex) -> _KernelRoute:
    """Primitive part of ord(ker d1 / im d2) over the PID Q[t].

    A unimodular row reduction of [d1 | I] exposes a basis K of ker d1;
    the rows of d2 are rewritten in an echelonized copy of that basis and
    the resulting relation matrix is diagonalized.
    """
    kd, d = c.k * c.d, c.d
    D1, _ = _global_shifted(c.d1)
    aug = [D1[i] + [D.ONE if j == i else D.ZERO for j in range(kd)] for i in range(kd)]
    aug, piv = echelon_q_dense(aug, d)
    rank1 = len(piv)
    K = [row[d:] for row in aug[rank1:]]
    m = len(K)
    if m == 0:
        return _KernelRoute(LaurentPoly.const(1), rank1, 0, 0)
    K, kpiv = echelon_q_dense(K, kd)
    if len(kpiv) != m:
        raise ArithmeticError("kernel rows are not independent")
    D2, _ = _global_shifted(c.d2)
    C = []
    for y in D2:
        y = list(y)
        coef = [D.ZERO] * m
        for i, pc in enumerate(kpiv):
            a = y[pc]
            if not a:
                continue
            piv_entry = K[i][pc]
            mlt, q, r = D.pdivmod(a, piv_entry)
            if r:
                raise ArithmeticError("row of d2 is not in the span of ker d1")
            if mlt != 1:
                y = [D.scale(x, mlt) for x in y]
                coef = [D.scale(x, mlt) for x in coef]
            coef[i] = q
            Ki = K[i]
            y = [D.sub(x, D.mul(q, kx)) if kx else x for x, kx in zip(y, Ki)]
        if any(y):
            raise ArithmeticError("row of d2 is not in the span of ker d1")
        g = 0
        for x in coef:
            if x:
                g = D._igcd(g, D.content(x))
        if g > 1:
            coef = [tuple(v // g for v in x) if x else x for x in coef]
        C.append(coef)
    # C has m columns; its order over Q[t] is the product of the echelon pivots.
    E, cpiv = echelon_q_dense(C, m) if C else ([], [])
    diag = [E[i][c] for i, c in enumerate(cpiv)]
    rank2 = len(diag)
    if rank2 < m:
        return _KernelRoute(LaurentPoly(), rank1, rank2, m)
    _, f = D.strip_low(D.primitive(prod_dense(diag)))
    return _KernelRoute(normalize_unit(LaurentPoly.from_dense(0, f)), rank1, rank2, m)


def _block_dets(c: TwistedComplex):
    for j in range(c.k):
        yield j, det_poly(c.d1_block(j))


def wada_torsion(c: TwistedComplex, j: int | None = None) -> tuple[LaurentPoly, LaurentPoly]:
    """(numerator, denominator) of the Wada quotient for column j.

    The numerator is the order of the module presented by d2 with block
    column j removed (its determinant when that matrix is square); the
    denominator is det(sigma(x_j) - 1).  Without ``j`` the first generator
    with a nonzero denominator is used.
    """
    if j is None:
        for jj, den in _block_dets(c):
            if den:
                j = jj
                break
        else:
            raise NoValidColumn("det(sigma(x_j) - 1) vanishes for every generator")
    else:
        den = det_poly(c.d1_block(j))
        if not den:
            raise NoValidColumn(f"det(sigma(x_{j}) - 1) = 0")
    sub = c.d2_without_block_column(j)
    if sub.rows == sub.cols:
        num = normalize_unit(det_poly(sub))
    else:
        num = module_order(sub)
    return num, normalize_unit(den)


def _first_valid_column(c: TwistedComplex):
    for j, den in _block_dets(c):
        if den:
            return j
    return None


@dataclass(frozen=True)
class DeltaBundle:
    """Everything computed from one twisted complex.

    ``delta1`` is the primitive, unit-normalized part of the order of H1;
    ``delta1_content`` is its integer content when the Wada relation
    determines it (None otherwise).
    """

    delta0: LaurentPoly
    delta1: LaurentPoly
    delta1_content: int | None
    wada_num: LaurentPoly | None
    wada_den: LaurentPoly | None
    column_used: int | None
    rank_d1: int
    rank_d2: int
    kernel_rank: int
    wada_consistent: bool | None
    convention: str = field(default=CONVENTION)

    @property
    def nonzero(self) -> bool:
        return bool(self.delta1)

    @property
    def order(self) -> LaurentPoly:
        """The twisted Alexander polynomial itself (content included when known)."""
        if self.delta1_content is None:
            return self.delta1
        return self.delta1 * self.delta1_content


def delta_bundle(c: TwistedComplex) -> DeltaBundle:
    d0 = delta0(c)
    route = _kernel_route(c)
    j = _first_valid_column(c)
    num = den = None
    content = None
    consistent = None
    if j is not None:
        num, den = wada_torsion(c, j)
    if not route.primitive:
        content = 0 if j is not None else None
        if num is not None:
            consistent = not (num * d0)
    elif num is not None and d0:
        q = (num * d0).exact_div(den)
        content = q.content()
        consistent = normalize_unit(q.primitive()) == route.primitive
    return DeltaBundle(
        delta0=d0, delta1=route.primitive, delta1_content=content,
        wada_num=num, wada_den=den, column_used=j,
        rank_d1=route.rank_d1, rank_d2=route.rank_d2, kernel_rank=route.kernel_rank,
        wada_consistent=consistent,
    )


def delta1(c: TwistedComplex) -> LaurentPoly:
    """The twisted Alexander polynomial: order of H1 of the twisted complex, unit-normalized."""
    return normalize_unit(delta_bundle(c).order)


def reparametrize(p: LaurentPoly, n: int) -> LaurentPoly:
    """p(t) -> p(t^n)."""
    if n < 1:
        raise ValueError("reparametrization needs n >= 1")
    return p.substitute_power(n)
