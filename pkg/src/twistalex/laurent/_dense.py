"""Dense integer polynomials as coefficient tuples, lowest degree first.

The zero polynomial is the empty tuple and no representation carries a
trailing zero.  These helpers are the inner loop of every matrix routine
in this package, so they work on plain tuples rather than objects.
"""

from math import gcd as _igcd

ZERO = ()
ONE = (1,)


def trim(c):
    n = len(c)
    while n and not c[n - 1]:
        n -= 1
    return tuple(c[:n])


def degree(a):
    return len(a) - 1


def add(a, b):
    if len(a) < len(b):
        a, b = b, a
    if not b:
        return a
    out = list(a)
    for i, x in enumerate(b):
        out[i] += x
    return trim(out)


def sub(a, b):
    n = max(len(a), len(b))
    out = [0] * n
    for i, x in enumerate(a):
        out[i] = x
    for i, x in enumerate(b):
        out[i] -= x
    return trim(out)


def neg(a):
    return tuple(-x for x in a)


def scale(a, k):
    if not k or not a:
        return ZERO
    if k == 1:
        return a
    return tuple(k * x for x in a)


def shift(a, k):
    """Multiply by t**k, k >= 0."""
    if not a or not k:
        return a
    return (0,) * k + a


def mul(a, b):
    if not a or not b:
        return ZERO
    if len(a) == 1:
        return scale(b, a[0])
    if len(b) == 1:
        return scale(a, b[0])
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return tuple(out)


def content(a):
    g = 0
    for x in a:
        g = _igcd(g, x)
        if g == 1:
            break
    return g


def primitive(a):
    """Primitive part with positive leading coefficient."""
    if not a:
        return ZERO
    g = content(a)
    if a[-1] < 0:
        g = -g
    if g == 1:
        return a
    return tuple(x // g for x in a)


def strip_low(a):
    """Remove the largest power of t dividing a; returns (k, a / t**k)."""
    k = 0
    while k < len(a) and not a[k]:
        k += 1
    return k, a[k:]


def pdivmod(a, b):
    """Pseudo-division: returns (m, q, r) with m*a == q*b + r and deg r < deg b.

    m is a positive integer chosen as small as the leading coefficients allow.
    """
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    db = len(b) - 1
    lb = b[-1]
    r = list(a)
    if len(r) - 1 < db:
        return 1, ZERO, trim(r)
    m = 1
    q = [0] * (len(r) - db)
    while True:
        while r and not r[-1]:
            r.pop()
        dr = len(r) - 1
        if dr < db:
            break
        lr = r[-1]
        if lr % lb:
            g = _igcd(lr, lb)
            f = abs(lb // g)
            m *= f
            r = [f * x for x in r]
            q = [f * x for x in q]
            lr = r[-1]
        c = lr // lb
        off = dr - db
        q[off] += c
        for i, x in enumerate(b):
            r[off + i] -= c * x
    return m, trim(q), tuple(r)


def divexact(a, b):
    """Exact quotient a / b in Z[t]; raises ValueError if b does not divide a."""
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    if not a:
        return ZERO
    db = len(b) - 1
    lb = b[-1]
    r = list(a)
    if len(r) - 1 < db:
        raise ValueError("inexact polynomial division")
    q = [0] * (len(r) - db)
    for off in range(len(r) - 1 - db, -1, -1):
        lr = r[off + db]
        if not lr:
            continue
        c, rem = divmod(lr, lb)
        if rem:
            raise ValueError("inexact polynomial division")
        q[off] = c
        for i, x in enumerate(b):
            r[off + i] -= c * x
    if any(r):
        raise ValueError("inexact polynomial division")
    return trim(q)


def divides_over_q(b, a):
    """True iff b divides a in Q[t]."""
    if not a:
        return True
    if not b:
        return False
    return not pdivmod(a, b)[2]


def _prem_primitive(a, b):
    return primitive(pdivmod(a, b)[2])


def gcd_primitive(a, b):
    """Primitive gcd of a and b over Q[t] (primitive-PRS), positive leading coefficient."""
    a = primitive(a)
    b = primitive(b)
    if len(a) < len(b):
        a, b = b, a
    while b:
        if len(b) == 1:
            return ONE
        a, b = b, _prem_primitive(a, b)
    return a


def gcd(a, b):
    """Gcd in Z[t] with positive leading coefficient."""
    if not a:
        return primitive(b) if content(b) == 1 else scale(primitive(b), content(b))
    if not b:
        return scale(primitive(a), content(a))
    c = _igcd(content(a), content(b))
    return scale(gcd_primitive(a, b), c)


def evaluate(a, x):
    acc = 0
    for c in reversed(a):
        acc = acc * x + c
    return acc


def valuation(n, p):
    """p-adic valuation of a nonzero integer."""
    n = abs(n)
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v
