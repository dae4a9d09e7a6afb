import random
from fractions import Fraction
from itertools import combinations, permutations

import pytest

from twistalex.laurent import LaurentPoly, PolyMatrix


def rand_poly(rng: random.Random, deg: int = 4, lo: int = -2, coeff: int = 9) -> LaurentPoly:
    low = rng.randint(lo, 0)
    return LaurentPoly.from_coeffs(low, [rng.randint(-coeff, coeff) for _ in range(rng.randint(0, deg) + 1)])


def rand_matrix(rng: random.Random, n: int, m: int, deg: int = 2, coeff: int = 5) -> PolyMatrix:
    return PolyMatrix.from_rows([[rand_poly(rng, deg, -1, coeff) for _ in range(m)] for _ in range(n)])


def cofactor_det(rows):
    """Laplace expansion along the first row; independent determinant oracle."""
    n = len(rows)
    if n == 0:
        return LaurentPoly.const(1)
    if n == 1:
        return rows[0][0]
    out = LaurentPoly()
    for j in range(n):
        if rows[0][j].is_zero():
            continue
        minor = [r[:j] + r[j + 1:] for r in rows[1:]]
        term = rows[0][j] * cofactor_det(minor)
        out = out + term if j % 2 == 0 else out - term
    return out


def leibniz_det(rows):
    """Sum over permutations; used for tiny integer matrices."""
    n = len(rows)
    total = 0
    for perm in permutations(range(n)):
        inv = sum(1 for i, j in combinations(range(n), 2) if perm[i] > perm[j])
        prod = 1
        for i in range(n):
            prod *= rows[i][perm[i]]
        total += -prod if inv % 2 else prod
    return total


def fraction_rank(rows) -> int:
    """Rank of a rational matrix by Gaussian elimination."""
    A = [[Fraction(x) for x in r] for r in rows]
    rank = 0
    ncols = len(A[0]) if A else 0
    for c in range(ncols):
        piv = next((i for i in range(rank, len(A)) if A[i][c] != 0), None)
        if piv is None:
            continue
        A[rank], A[piv] = A[piv], A[rank]
        for i in range(len(A)):
            if i != rank and A[i][c] != 0:
                f = A[i][c] / A[rank][c]
                A[i] = [a - f * b for a, b in zip(A[i], A[rank])]
        rank += 1
    return rank


@pytest.fixture
def rng():
    return random.Random(20240611)


def trefoil():
    from twistalex.grouptheory import Presentation
    p = Presentation(("a", "b"))
    return p.with_relators([p.word("a b a b^-1 a^-1 b^-1")])


def corpus_presentation(label):
    from twistalex.frontend import corpus_entry
    return corpus_entry(label).load().presentation
