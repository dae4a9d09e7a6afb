"""Exact linear algebra over Z[t^{+-1}], Q[t] and Z.

Laurent entries are moved into Z[t] by multiplying rows by powers of t,
which are units, so orders and gcds of minors are unaffected up to
normalization.  Over Q[t] every nonzero integer is a unit as well, which
lets the Euclidean routines below stay fraction-free: rows and columns
are rescaled by integers whenever a pseudo-division needs it.
"""

from __future__ import annotations

import itertools
from math import comb, prod

from . import _dense as D
from .matrix import IntMatrix, PolyMatrix
from .poly import LaurentPoly, gcd_laurent, is_unit, normalize_unit

# Above this many minors, minors_gcd switches from enumeration to elimination.
ENUMERATION_LIMIT = 400


# -- conversion ---------------------------------------------------------

def _row_shifted(m: PolyMatrix):
    """Dense polynomial rows, each row multiplied by t^-(its min exponent)."""
    rows, total = [], 0
    for i in range(m.rows):
        r = m.row(i)
        lows = [a.low for a in r if a.c]
        lo = min(lows) if lows else 0
        total += lo
        rows.append([D.shift(a.c, a.low - lo) if a.c else D.ZERO for a in r])
    return rows, total


def _global_shifted(m: PolyMatrix):
    """Dense rows after the smallest uniform shift making every entry polynomial."""
    lows = [a.low for a in m.entries if a.c]
    lo = min(min(lows), 0) if lows else 0
    return [[D.shift(a.c, a.low - lo) if a.c else D.ZERO for a in m.row(i)]
            for i in range(m.rows)], lo


def _to_laurent(c, low=0) -> LaurentPoly:
    return LaurentPoly.from_dense(low, c)


def _row_primitive(row, start=0):
    g = 0
    for a in row[start:]:
        if a:
            g = D._igcd(g, D.content(a))
            if g == 1:
                return row
    if g > 1:
        return row[:start] + [tuple(x // g for x in a) if a else a for a in row[start:]]
    return row


# -- determinants and rank ------------------------------------------------

def _bareiss(A, steps, pick):
    """Fraction-free elimination with full pivoting, in place.

    ``pick(entry)`` ranks candidate pivots (lower is preferred).  Returns the
    list of successive pivots; entry k is a (k+1)x(k+1) minor of the input.
    Stops early when the remaining block is zero.
    """
    n = len(A)
    m = len(A[0]) if n else 0
    prev = D.ONE
    pivots = []
    for k in range(min(steps, n, m)):
        best = None
        for i in range(k, n):
            Ai = A[i]
            for j in range(k, m):
                a = Ai[j]
                if a:
                    key = pick(a)
                    if best is None or key < best[0]:
                        best = (key, i, j)
        if best is None:
            break
        _, i, j = best
        if i != k:
            A[i], A[k] = A[k], A[i]
        if j != k:
            for r in A:
                r[j], r[k] = r[k], r[j]
        pk = A[k][k]
        Ak = A[k]
        for i in range(k + 1, n):
            Ai = A[i]
            aik = Ai[k]
            for j in range(k + 1, m):
                x = D.mul(pk, Ai[j])
                if aik and Ak[j]:
                    x = D.sub(x, D.mul(aik, Ak[j]))
                Ai[j] = D.divexact(x, prev) if x and prev != D.ONE else x
            Ai[k] = D.ZERO
        prev = pk
        pivots.append(pk)
    return pivots


def _size_key(a):
    return (len(a), sum(abs(x).bit_length() for x in a))


def det_poly(m: PolyMatrix) -> LaurentPoly:
    """Exact determinant by fraction-free (Bareiss) elimination."""
    if not m.is_square():
        raise ValueError(f"determinant of a non-square {m.rows}x{m.cols} matrix")
    n = m.rows
    if n == 0:
        return LaurentPoly.const(1)
    A, shift = _row_shifted(m)
    # Track the permutation sign by pivoting on rows only.
    sign = 1
    prev = D.ONE
    for k in range(n):
        cand = [i for i in range(k, n) if A[i][k]]
        if not cand:
            return LaurentPoly()
        i = min(cand, key=lambda r: _size_key(A[r][k]))
        if i != k:
            A[i], A[k] = A[k], A[i]
            sign = -sign
        pk = A[k][k]
        Ak = A[k]
        for i in range(k + 1, n):
            Ai = A[i]
            aik = Ai[k]
            for j in range(k + 1, n):
                x = D.mul(pk, Ai[j])
                if aik and Ak[j]:
                    x = D.sub(x, D.mul(aik, Ak[j]))
                Ai[j] = D.divexact(x, prev) if x and prev != D.ONE else x
            Ai[k] = D.ZERO
        prev = pk
    return _to_laurent(D.scale(A[n - 1][n - 1], sign), shift)


def rank_over_fraction_field(m: PolyMatrix) -> int:
    """Rank over Q(t), by fraction-free elimination."""
    if m.rows == 0 or m.cols == 0:
        return 0
    A, _ = _row_shifted(m)
    return len(_bareiss(A, min(m.rows, m.cols), _size_key))


# -- Euclidean routines over Q[t] -------------------------------------------

def smith_q_dense(A):
    """Nonzero invariant factors over Q[t] of a dense polynomial matrix.

    A is a list of row lists and is consumed.  Factors are primitive
    integer polynomials with positive leading coefficient, each dividing
    the next.
    """
    n = len(A)
    m = len(A[0]) if n else 0
    diag = []
    t = 0
    while t < min(n, m):
        best = None
        for i in range(t, n):
            for j in range(t, m):
                a = A[i][j]
                if a and (best is None or _size_key(a) < best[0]):
                    best = (_size_key(a), i, j)
        if best is None:
            break
        _, i, j = best
        A[i], A[t] = A[t], A[i]
        if j != t:
            for r in A:
                r[j], r[t] = r[t], r[j]
        while True:
            piv = A[t][t]
            changed = False
            for i in range(t + 1, n):
                a = A[i][t]
                if not a:
                    continue
                mlt, q, r = D.pdivmod(a, piv)
                Ai, At = A[i], A[t]
                A[i] = _row_primitive(
                    [D.sub(D.scale(Ai[j], mlt), D.mul(q, At[j])) if j >= t else D.ZERO
                     for j in range(m)], t)
                if r:
                    changed = True
            for j in range(t + 1, m):
                a = A[t][j]
                if not a:
                    continue
                mlt, q, r = D.pdivmod(a, piv)
                g = 0
                for i in range(t, n):
                    A[i][j] = D.sub(D.scale(A[i][j], mlt), D.mul(q, A[i][t]))
                    if A[i][j]:
                        g = D._igcd(g, D.content(A[i][j]))
                if g > 1:
                    for i in range(t, n):
                        if A[i][j]:
                            A[i][j] = tuple(x // g for x in A[i][j])
                if r:
                    changed = True
            if changed:
                cands = [(_size_key(A[i][t]), i, t) for i in range(t + 1, n) if A[i][t]]
                cands += [(_size_key(A[t][j]), t, j) for j in range(t + 1, m) if A[t][j]]
                _, i, j = min(cands)
                if i != t:
                    A[i], A[t] = A[t], A[i]
                else:
                    for r in A:
                        r[j], r[t] = r[t], r[j]
                continue
            bad = None
            for i in range(t + 1, n):
                for j in range(t + 1, m):
                    if A[i][j] and not D.divides_over_q(piv, A[i][j]):
                        bad = i
                        break
                if bad is not None:
                    break
            if bad is None:
                break
            A[t] = [D.add(x, y) for x, y in zip(A[t], A[bad])]
        diag.append(D.primitive(A[t][t]))
        t += 1
    return diag


def smith_diagonal_over_rationals(m: PolyMatrix) -> list[LaurentPoly]:
    """Invariant factors d1 | d2 | ... over Q[t], padded with zeros to min(rows, cols).

    Entries are first moved into Q[t] by the smallest uniform power of t.
    Each factor is returned as a primitive integer polynomial with positive
    leading coefficient.
    """
    A, _ = _global_shifted(m)
    diag = smith_q_dense(A) if A else []
    out = [_to_laurent(d) for d in diag]
    out += [LaurentPoly()] * (min(m.rows, m.cols) - len(out))
    return out


def echelon_q_dense(A, ncols):
    """Row echelon form over Q[t] restricted to the first ncols columns.

    Operations are applied to full rows (so trailing columns act as an
    augmentation).  Returns (A, pivot_columns); rows[:len(pivots)] are the
    pivot rows, the others vanish on the first ncols columns.
    """
    n = len(A)
    width = len(A[0]) if n else 0
    r = 0
    pivots = []
    for c in range(ncols):
        if r == n:
            break
        while True:
            nz = [i for i in range(r, n) if A[i][c]]
            if not nz:
                break
            p = min(nz, key=lambda i: _size_key(A[i][c]))
            if len(nz) == 1:
                A[p], A[r] = A[r], A[p]
                pivots.append(c)
                r += 1
                break
            Ap = A[p]
            for i in nz:
                if i == p:
                    continue
                mlt, q, _ = D.pdivmod(A[i][c], Ap[c])
                Ai = A[i]
                A[i] = _row_primitive(
                    [D.sub(D.scale(Ai[j], mlt), D.mul(q, Ap[j])) for j in range(width)])
    return A, pivots


# -- p-adic part ------------------------------------------------------------

def _pvaluation_of_minors(A, s, p):
    """v_p of the gcd of all s x s minors, over the localization of Z[t] at (p).

    Greedy pivoting on the smallest content valuation is Smith's algorithm
    over that discrete valuation ring; Bareiss keeps all entries integral.
    Returns None when every s x s minor vanishes.
    """
    def key(a):
        return (D.valuation(D.content(a), p), len(a))

    piv = _bareiss(A, s, key)
    if len(piv) < s:
        return None
    return D.valuation(D.content(piv[-1]), p)


_SMALL_PRIMES = None


def _prime_factors(n: int) -> list[int]:
    global _SMALL_PRIMES
    n = abs(n)
    if _SMALL_PRIMES is None:
        sieve = bytearray([1]) * 10001
        sieve[0] = sieve[1] = 0
        for i in range(2, 101):
            if sieve[i]:
                sieve[i * i::i] = bytearray(len(sieve[i * i::i]))
        _SMALL_PRIMES = [i for i, v in enumerate(sieve) if v]
    out = []
    for q in _SMALL_PRIMES:
        if q * q > n:
            break
        if n % q == 0:
            out.append(q)
            while n % q == 0:
                n //= q
    if n > 1:
        if n < 10001 ** 2:
            out.append(n)
        else:
            from sympy import factorint  # rare: large cofactor
            out.extend(sorted(factorint(n)))
    return out


def _content_of_minors_gcd(A, s):
    """Integer content of the gcd of the s x s minors (A is not consumed)."""
    work = [list(r) for r in A]
    piv = _bareiss(work, s, lambda a: (abs(D.content(a)), len(a)))
    if len(piv) < s:
        return 0
    c0 = D.content(piv[-1])
    c = 1
    for q in _prime_factors(c0):
        v = _pvaluation_of_minors([list(r) for r in A], s, q)
        c *= q ** v
    return c


# -- gcd of minors ------------------------------------------------------------

def _minors_gcd_enumerate(m: PolyMatrix, s: int) -> LaurentPoly:
    g = LaurentPoly()
    for rows in itertools.combinations(range(m.rows), s):
        for cols in itertools.combinations(range(m.cols), s):
            d = det_poly(m.submatrix(rows, cols))
            if not d:
                continue
            g = normalize_unit(d) if not g else gcd_laurent(g, d)
            if is_unit(g):
                return g
    return g


def minors_gcd(m: PolyMatrix, s: int, method: str = "auto") -> LaurentPoly:
    """Gcd of all s x s minors, unit-normalized (zero if they all vanish).

    ``method`` is "enumerate" (combinatorial, stops once the running gcd is
    a unit), "eliminate" (echelon or Smith form over Q[t] for the primitive
    part, p-adic elimination for the integer content) or "auto".
    """
    if s < 0 or s > min(m.rows, m.cols):
        raise ValueError(f"minor size {s} out of range for a {m.rows}x{m.cols} matrix")
    if s == 0:
        return LaurentPoly.const(1)
    if method == "auto":
        method = "enumerate" if comb(m.rows, s) * comb(m.cols, s) <= ENUMERATION_LIMIT else "eliminate"
    if method == "enumerate":
        return _minors_gcd_enumerate(m, s)
    if method != "eliminate":
        raise ValueError(f"unknown method {method!r}")
    if s == m.rows and s < m.cols:
        m = m.transpose()
    A, _ = _row_shifted(m)
    if s == m.cols:
        # maximal minors: the product of echelon pivots is enough
        E, piv = echelon_q_dense([list(r) for r in A], s)
        diag = [E[i][c] for i, c in enumerate(piv)]
    else:
        diag = smith_q_dense([list(r) for r in A])
    if len(diag) < s:
        return LaurentPoly()
    f = D.primitive(prod_dense(diag[:s]))
    c = _content_of_minors_gcd(A, s)
    return normalize_unit(_to_laurent(D.scale(f, c)))


def prod_dense(polys):
    out = D.ONE
    for p in polys:
        out = D.mul(out, p)
    return out


def module_order(m: PolyMatrix) -> LaurentPoly:
    """Order of the module presented by m (rows are relations): gcd of the cols x cols minors."""
    if m.cols == 0:
        return LaurentPoly.const(1)
    if m.rows < m.cols:
        return LaurentPoly()
    return minors_gcd(m, m.cols)


# -- integers -----------------------------------------------------------------

def integer_smith(m: IntMatrix) -> list[int]:
    """Smith normal form diagonal over Z, length min(rows, cols), nonnegative."""
    A = m.to_rows()
    n, k = m.rows, m.cols
    diag = []
    t = 0
    while t < min(n, k):
        nz = [(abs(A[i][j]), i, j) for i in range(t, n) for j in range(t, k) if A[i][j]]
        if not nz:
            break
        _, i, j = min(nz)
        A[i], A[t] = A[t], A[i]
        for r in A:
            r[j], r[t] = r[t], r[j]
        while True:
            p = A[t][t]
            changed = False
            for i in range(t + 1, n):
                q = A[i][t] // p
                if q:
                    A[i] = [x - q * y for x, y in zip(A[i], A[t])]
                if A[i][t]:
                    changed = True
            for j in range(t + 1, k):
                q = A[t][j] // p
                if q:
                    for r in A:
                        r[j] -= q * r[t]
                if A[t][j]:
                    changed = True
            if changed:
                cands = [(abs(A[i][t]), i, t) for i in range(t + 1, n) if A[i][t]]
                cands += [(abs(A[t][j]), t, j) for j in range(t + 1, k) if A[t][j]]
                _, i, j = min(cands)
                if i != t:
                    A[i], A[t] = A[t], A[i]
                else:
                    for r in A:
                        r[j], r[t] = r[t], r[j]
                continue
            bad = next((i for i in range(t + 1, n) for j in range(t + 1, k) if A[i][j] % p), None)
            if bad is None:
                break
            A[t] = [x + y for x, y in zip(A[t], A[bad])]
        diag.append(abs(A[t][t]))
        t += 1
    return diag + [0] * (min(n, k) - len(diag))
