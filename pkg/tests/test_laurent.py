import random
from itertools import combinations, product

import pytest

from twistalex.laurent import (
    T, IntMatrix, LaurentPoly, PolyMatrix, UndefinedDegree, det_poly, gcd_laurent, gcd_many,
    integer_smith, is_monic, is_symmetric, is_unit, minors_gcd, module_order, normalize_unit,
    rank_over_fraction_field, smith_diagonal_over_rationals, span_degree,
)

from conftest import cofactor_det, fraction_rank, leibniz_det, rand_matrix, rand_poly

P = LaurentPoly.parse


# -- polynomial arithmetic ----------------------------------------------------

def test_zero_is_empty_map():
    z = LaurentPoly({3: 0, -1: 0})
    assert z.is_zero() and z.coeffs == {}
    assert (T - T).coeffs == {}


def test_parse_and_print_round_trip():
    for text in ["t^2 - 3*t + 1", "-t^3 + 5", "t^-2 + t^3", "7", "0", "2*t^-1 - t"]:
        p = P(text)
        assert P(str(p)) == p


def test_ring_axioms(rng):
    for _ in range(200):
        a, b, c = (rand_poly(rng) for _ in range(3))
        assert a + b == b + a
        assert a * b == b * a
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c


def test_evaluation_is_a_ring_map(rng):
    for _ in range(100):
        a, b = rand_poly(rng), rand_poly(rng)
        from fractions import Fraction
        x = Fraction(rng.choice([2, 3, -5, 7]), rng.choice([1, 2, 3]))
        assert (a * b)(x) == a(x) * b(x)
        assert (a + b)(x) == a(x) + b(x)


def test_exact_division(rng):
    for _ in range(100):
        a, b = rand_poly(rng), rand_poly(rng)
        if b.is_zero():
            continue
        assert (a * b).exact_div(b) == a
    with pytest.raises(ValueError):
        P("t^2 + 1").exact_div(P("t - 1"))
    with pytest.raises(ZeroDivisionError):
        T.exact_div(LaurentPoly())


@pytest.mark.parametrize("text, expected", [("-t^2 + 3*t - 1", "t^2 - 3*t + 1"),
                                            ("t^-1 - 1", "1 - t"), ("0", "0"),
                                            ("-3*t^5", "3")])
def test_normalize_unit_examples(text, expected):
    assert normalize_unit(P(text)) == P(expected)


def test_normalize_unit_properties(rng):
    for _ in range(300):
        p, q = rand_poly(rng), rand_poly(rng)
        n = normalize_unit(p)
        assert normalize_unit(n) == n
        k = rng.randint(-4, 4)
        assert normalize_unit(-p.shift(k)) == n
        assert normalize_unit(p * q) == normalize_unit(normalize_unit(p) * normalize_unit(q))


@pytest.mark.parametrize("text, span", [("t^2 - 3*t + 1", 2), ("5", 0), ("t^-2 + t^3", 5)])
def test_span_degree(text, span):
    assert span_degree(P(text)) == span


@pytest.mark.parametrize("text, monic", [("t^2 - 3*t + 1", True), ("2*t - 1", False),
                                         ("-t^3 + 5", True)])
def test_is_monic(text, monic):
    assert is_monic(P(text)) is monic


def test_zero_has_no_degree_or_leading_coefficient():
    with pytest.raises(UndefinedDegree):
        span_degree(LaurentPoly())
    with pytest.raises(UndefinedDegree):
        is_monic(LaurentPoly())


def test_units_and_symmetry():
    assert is_unit(-T ** 3) and not is_unit(P("2"))
    assert is_symmetric(P("t^2 - t + 1")) and is_symmetric(P("t^-1 - 3 + t"))
    assert not is_symmetric(P("t^2 - 2*t + 3"))


def test_reparametrize_substitution():
    assert P("t^2 - 3*t + 1").substitute_power(2) == P("t^4 - 3*t^2 + 1")
    assert P("t^-1 + 2").involution() == P("t + 2")


# -- gcd ----------------------------------------------------------------------

def _divisors_bruteforce(p: LaurentPoly, bound: int = 4):
    """All normalized integer polynomials of degree <= span(p), coefficients in [-bound, bound], dividing p."""
    out = set()
    n = span_degree(p)
    for deg in range(n + 1):
        for cs in product(range(-bound, bound + 1), repeat=deg + 1):
            if cs[0] <= 0 or cs[-1] == 0:
                continue
            d = LaurentPoly.from_coeffs(0, cs)
            if d.divides(p):
                out.add(d)
    return out


def test_gcd_examples():
    assert gcd_laurent(P("t^2 - 1"), P("t^3 - 1")) == normalize_unit(P("t - 1"))
    g = gcd_laurent(P("2*t + 2"), P("4*t^2 - 4"))
    assert g == P("2*t + 2")
    common = _divisors_bruteforce(P("2*t + 2")) & _divisors_bruteforce(P("4*t^2 - 4"))
    best = max(common, key=lambda d: (span_degree(d), abs(d.leading_coefficient())))
    assert best == g
    p = P("-t^3 + 2*t")
    assert gcd_laurent(p, LaurentPoly()) == normalize_unit(p)
    with pytest.raises(ValueError):
        gcd_laurent(LaurentPoly(), LaurentPoly())


def test_gcd_divides_both_arguments():
    rng = random.Random(1)
    for _ in range(1000):
        p = LaurentPoly.from_coeffs(0, [rng.randint(-9, 9) for _ in range(rng.randint(1, 9))])
        q = LaurentPoly.from_coeffs(0, [rng.randint(-9, 9) for _ in range(rng.randint(1, 9))])
        if p.is_zero() and q.is_zero():
            continue
        g = gcd_laurent(p, q)
        assert g.divides(p) and g.divides(q)


def test_gcd_recovers_planted_factor(rng):
    for _ in range(100):
        f, a, b = rand_poly(rng, 3), rand_poly(rng, 3), rand_poly(rng, 3)
        if f.is_zero() or a.is_zero() or b.is_zero():
            continue
        g = gcd_laurent(f * a, f * b)
        assert g.divides(f * a) and g.divides(f * b)
        assert f.divides(g)


def test_gcd_many():
    assert gcd_many([P("t^2 - 1"), LaurentPoly(), P("t^2 - 2*t + 1")]) == normalize_unit(P("t - 1"))
    assert gcd_many([LaurentPoly(), LaurentPoly()]).is_zero()


# -- matrices -------------------------------------------------------------------

def test_det_examples():
    assert det_poly(PolyMatrix.from_rows([[T, 0], [0, T ** -1]])) == LaurentPoly.const(1)
    assert det_poly(PolyMatrix.from_rows([[1, T], [T, 1]])) == P("1 - t^2")
    with pytest.raises(ValueError):
        det_poly(PolyMatrix.from_rows([[1, 2, 3]]))


def test_det_matches_integer_oracle():
    rng = random.Random(5)
    rows = [[rng.randint(-9, 9) for _ in range(5)] for _ in range(5)]
    m = PolyMatrix.from_rows(rows)
    assert det_poly(m) == LaurentPoly.const(leibniz_det(rows))


def test_det_matches_cofactor_expansion(rng):
    for n in range(1, 7):
        for _ in range(6 if n < 5 else 2):
            m = rand_matrix(rng, n, n, deg=2, coeff=4)
            assert det_poly(m) == cofactor_det(m.to_rows())


def test_det_block_triangular_multiplicative(rng):
    for _ in range(10):
        a, b = rand_matrix(rng, 2, 2), rand_matrix(rng, 3, 3)
        c = rand_matrix(rng, 2, 3)
        z = PolyMatrix.zeros(3, 2)
        m = PolyMatrix.block([[a, c], [z, b]])
        assert det_poly(m) == det_poly(a) * det_poly(b)


def _all_minors(m, s):
    rows = m.to_rows()
    for R in combinations(range(m.rows), s):
        for C in combinations(range(m.cols), s):
            yield cofactor_det([[rows[i][j] for j in C] for i in R])


def test_minors_gcd_examples():
    d = PolyMatrix.from_rows([[T - 1, 0], [0, T - 1]])
    assert minors_gcd(d, 2) == normalize_unit((T - 1) ** 2)
    m = PolyMatrix.from_rows([[T - 1, 0], [0, T + 1], [1, 1]])
    assert minors_gcd(m, 2) == LaurentPoly.const(1)
    assert gcd_many(_all_minors(m, 2)) == LaurentPoly.const(1)
    with pytest.raises(ValueError):
        minors_gcd(m, 3)


def test_minors_gcd_square_is_determinant(rng):
    for _ in range(20):
        m = rand_matrix(rng, 3, 3)
        assert minors_gcd(m, 3) == normalize_unit(det_poly(m))


@pytest.mark.parametrize("method", ["enumerate", "eliminate"])
def test_minors_gcd_matches_enumeration_oracle(rng, method):
    for _ in range(25):
        n, k = rng.randint(2, 5), rng.randint(1, 4)
        m = rand_matrix(rng, n, k, deg=2, coeff=4)
        for s in range(1, min(n, k) + 1):
            g = minors_gcd(m, s, method=method)
            oracle = gcd_many(_all_minors(m, s))
            assert g == oracle
            for minor in _all_minors(m, s):
                assert g.is_zero() or g.divides(minor)


def test_minors_gcd_detects_integer_content():
    m = PolyMatrix.from_rows([[3 * T, 3], [0, 3 * T - 3], [6, 0]])
    for method in ("enumerate", "eliminate"):
        assert minors_gcd(m, 2, method=method) == gcd_many(_all_minors(m, 2))


def test_module_order_edge_cases():
    assert module_order(PolyMatrix.zeros(2, 0)) == LaurentPoly.const(1)
    assert module_order(PolyMatrix.from_rows([[T - 1, 0]])).is_zero()
    m = PolyMatrix.from_rows([[T - 1, 0], [0, T + 2]])
    assert module_order(m) == normalize_unit((T - 1) * (T + 2))


def test_rank_examples():
    assert rank_over_fraction_field(PolyMatrix.zeros(3, 3)) == 0
    assert rank_over_fraction_field(PolyMatrix.from_rows([[T, 1], [T ** 2, T]])) == 1


def test_rank_planted():
    rng = random.Random(11)
    a = [[rng.randint(-5, 5) for _ in range(4)] for _ in range(6)]
    b = [[rng.randint(-5, 5) for _ in range(6)] for _ in range(4)]
    prod_rows = [[sum(a[i][k] * b[k][j] for k in range(4)) for j in range(6)] for i in range(6)]
    m = PolyMatrix.from_rows(prod_rows)
    assert rank_over_fraction_field(m) == 4 == fraction_rank(m.evaluate(7))


def test_rank_matches_evaluation_at_primes():
    rng = random.Random(7)
    mismatches = 0
    for _ in range(200):
        n, k = rng.randint(1, 5), rng.randint(1, 5)
        r = rng.randint(0, min(n, k))
        left = rand_matrix(rng, n, r, deg=1, coeff=3) if r else PolyMatrix.zeros(n, 0)
        right = rand_matrix(rng, r, k, deg=1, coeff=3) if r else PolyMatrix.zeros(0, k)
        m = left @ right if r else PolyMatrix.zeros(n, k)
        got = rank_over_fraction_field(m)
        at = fraction_rank(m.evaluate(101))
        if got != at:
            at = fraction_rank(m.evaluate(1009))
            mismatches += 1
        assert got == at
    assert mismatches < 5


def test_smith_over_rationals_examples():
    assert smith_diagonal_over_rationals(PolyMatrix.from_rows([[T, 0], [0, T ** 2]])) == [T, T ** 2]
    d = smith_diagonal_over_rationals(PolyMatrix.from_rows([[T - 1, 1], [0, T - 1]]))
    assert [normalize_unit(x) for x in d] == [LaurentPoly.const(1), normalize_unit((T - 1) ** 2)]
    assert all(x.is_zero() for x in smith_diagonal_over_rationals(PolyMatrix.zeros(2, 3)))


def test_smith_product_matches_minors_gcd(rng):
    for _ in range(20):
        m = rand_matrix(rng, 4, 4, deg=1, coeff=4)
        r = rank_over_fraction_field(m)
        d = [x for x in smith_diagonal_over_rationals(m) if not x.is_zero()]
        assert len(d) == r
        prod = LaurentPoly.const(1)
        for x in d:
            prod = prod * x
        assert normalize_unit(prod.primitive()) == normalize_unit(minors_gcd(m, r).primitive())
        for a, b in zip(d, d[1:]):
            # divisibility over Q[t] is divisibility of primitive parts over Z
            assert a.primitive().divides(b.primitive())


@pytest.mark.parametrize("rows, expected", [([[2, 0], [0, 4]], [2, 4]), ([[1, 1], [1, -1]], [1, 2]),
                                            ([[0]], [0]), ([[4, 6], [6, 9]], [1, 0])])
def test_integer_smith(rows, expected):
    assert integer_smith(IntMatrix.from_rows(rows)) == expected


def test_integer_smith_determinant_and_divisibility(rng):
    for _ in range(50):
        rows = [[rng.randint(-6, 6) for _ in range(3)] for _ in range(3)]
        d = integer_smith(IntMatrix.from_rows(rows))
        assert d[0] * d[1] * d[2] == abs(leibniz_det(rows))
        for a, b in zip(d, d[1:]):
            assert b % a == 0 if a else b == 0
