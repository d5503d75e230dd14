"""Dense univariate polynomials over a field.

Coefficient lists are ascending: ``p[k]`` is the coefficient of ``t**k``.
The empty list is the zero polynomial. Entries may be GaussianRational
(exact field arithmetic) or complex (float, used only for evaluation).
"""

from __future__ import annotations

from fractions import Fraction

from .scalars import GaussianRational


def trim(p):
    p = list(p)
    while p and p[-1] == 0:
        p.pop()
    return p


def degree(p) -> int:
    return len(trim(p)) - 1


def add(p, q):
    n = max(len(p), len(q))
    return trim([(p[i] if i < len(p) else 0) + (q[i] if i < len(q) else 0) for i in range(n)])


def sub(p, q):
    n = max(len(p), len(q))
    return trim([(p[i] if i < len(p) else 0) - (q[i] if i < len(q) else 0) for i in range(n)])


def scale(p, c):
    return trim([c * a for a in p])


def mul(p, q):
    if not p or not q:
        return []
    out = [0] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a == 0:
            continue
        for j, b in enumerate(q):
            out[i + j] = out[i + j] + a * b
    return trim(out)


def divmod_poly(p, q):
    p, q = trim(p), trim(q)
    if not q:
        raise ZeroDivisionError("polynomial division by zero")
    r = list(p)
    lead = q[-1]
    quot = [0] * max(len(p) - len(q) + 1, 0)
    for k in range(len(p) - len(q), -1, -1):
        c = r[k + len(q) - 1] / lead
        quot[k] = c
        if c == 0:
            continue
        for j, b in enumerate(q):
            r[k + j] = r[k + j] - c * b
    return trim(quot), trim(r[: len(q) - 1])


def exact_div(p, q):
    quot, rem = divmod_poly(p, q)
    if rem:
        raise ArithmeticError("inexact polynomial division")
    return quot


def monic(p):
    p = trim(p)
    if not p:
        return p
    lead = p[-1]
    return [a / lead for a in p]


def derivative(p):
    return trim([k * p[k] for k in range(1, len(p))])


def gcd(p, q):
    """Monic gcd by Euclid's algorithm (exact coefficients only)."""
    a, b = trim(p), trim(q)
    while b:
        a, b = b, divmod_poly(a, b)[1]
    return monic(a)


def evaluate(p, t):
    acc = 0
    for a in reversed(p):
        acc = acc * t + a
    return acc


def squarefree_decomposition(p):
    """Yun's algorithm: ``[(m, g_m), ...]`` with p = lead * prod g_m**m, g_m monic square-free.

    Only factors of positive degree are returned.
    """
    p = trim(p)
    if not p:
        raise ZeroDivisionError("square-free decomposition of the zero polynomial")
    if len(p) == 1:
        return []
    dp = derivative(p)
    a = gcd(p, dp)
    b = exact_div(p, a)
    c = exact_div(dp, a)
    d = sub(c, derivative(b))
    out = []
    m = 1
    while degree(b) > 0:
        g = gcd(b, d)
        if degree(g) > 0:
            out.append((m, g))
        b_next = exact_div(b, g)
        c = exact_div(d, g)
        d = sub(c, derivative(b_next))
        b = b_next
        m += 1
    return out


def squarefree_part(p):
    """Monic product of the distinct irreducible factors."""
    out = [1]
    for _, g in squarefree_decomposition(p):
        out = mul(out, g)
    return monic(out)


def to_fraction_poly(p):
    """Real exact polynomial as a list of Fractions; raises if any part is imaginary."""
    out = []
    for a in p:
        if isinstance(a, GaussianRational):
            if a.im:
                raise ValueError("polynomial has non-real coefficients")
            out.append(a.re)
        else:
            out.append(Fraction(a))
    return trim(out)


def count_real_roots(p) -> int:
    """Number of distinct real roots of a real exact polynomial (Sturm's theorem)."""
    p = to_fraction_poly(p)
    if len(p) <= 1:
        return 0
    seq = [p, derivative(p)]
    while True:
        r = divmod_poly(seq[-2], seq[-1])[1]
        if not r:
            break
        seq.append([-a for a in r])

    def sign_changes(signs):
        signs = [s for s in signs if s != 0]
        return sum(1 for s0, s1 in zip(signs, signs[1:]) if s0 != s1)

    at_pos_inf = [1 if q[-1] > 0 else -1 for q in seq]
    at_neg_inf = [(1 if q[-1] > 0 else -1) * (-1) ** (len(q) - 1) for q in seq]
    return sign_changes(at_neg_inf) - sign_changes(at_pos_inf)


def taylor_coefficients(p, c, k: int):
    """First ``k`` Taylor coefficients of p at c, i.e. p^(j)(c)/j! for j < k."""
    q = list(p)
    out = []
    for _ in range(k):
        if not q:
            out.append(0)
            continue
        # synthetic division by (t - c): remainder is the next coefficient
        acc = 0
        quotient = [0] * (len(q) - 1)
        for i in range(len(q) - 1, -1, -1):
            acc = acc * c + q[i]
            if i > 0:
                quotient[i - 1] = acc
        out.append(acc)
        q = quotient
    return out
