"""Truncated Frobenius matrix of x^i dx/y over Q, exact rational arithmetic.

phi(x^i dx/y) = sum_{k<K} binom(-1/2,k) p^{k+1} x^{ip+p-1} Delta^k dx / y^{p(2k+1)}
with Delta = (P(x^p) - P(x)^p) / p, reduced term by term: no base-P digits,
no fixed-point scaling, every division done in Q.  Pole reduction uses
A = aP + bP' with b = A * P'^{-1} mod P (inverse from sympy over Q);
degree reduction uses d(x^s y).  Entries are printed as fractions and frozen
into tests/test_kedlaya.cpp as residues of p^3 M modulo p^11 (the entries
can have small p-power denominators); the C++ result must agree modulo the
precision it claims.
"""
import sys
from fractions import Fraction

import sympy as sp


def trim(a):
    while a and a[-1] == 0:
        a.pop()
    return a


def add(a, b):
    r = [Fraction(0)] * max(len(a), len(b))
    for i, x in enumerate(a):
        r[i] += x
    for i, x in enumerate(b):
        r[i] += x
    return trim(r)


def scale(a, c):
    return trim([x * c for x in a])


def mul(a, b):
    if not a or not b:
        return []
    r = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                r[i + j] += x * y
    return trim(r)


def divmod_poly(a, b):
    a = list(a)
    q = [Fraction(0)] * max(len(a) - len(b) + 1, 0)
    lb = b[-1]
    for k in range(len(a) - len(b), -1, -1):
        c = a[k + len(b) - 1] / lb
        q[k] = c
        if c:
            for j, y in enumerate(b):
                a[k + j] -= c * y
    return trim(q), trim(a[: len(b) - 1])


def deriv(a):
    return trim([k * a[k] for k in range(1, len(a))])


def binom_mhalf(k):
    r = Fraction(1)
    for i in range(k):
        r = r * (Fraction(-1, 2) - i) / (i + 1)
    return r


def frobenius_matrix(p, P, K):
    P = [Fraction(c) for c in P]
    d = len(P) - 1
    g = (d - 1) // 2
    dP = deriv(P)
    x = sp.Symbol("x")
    s, t, h = sp.gcdex(sum(sp.Rational(c.numerator, c.denominator) * x ** i for i, c in enumerate(P)),
                       sum(sp.Rational(c.numerator, c.denominator) * x ** i for i, c in enumerate(dP)), x)
    assert h == 1
    tpoly = sp.Poly(t, x).all_coeffs()[::-1]
    tinv = [Fraction(int(sp.numer(c)), int(sp.denom(c))) for c in tpoly]
    Pxp = [Fraction(0)] * (d * p + 1)
    for i, c in enumerate(P):
        Pxp[i * p] = c
    Pp = [Fraction(1)]
    for _ in range(p):
        Pp = mul(Pp, P)
    Delta = scale(add(Pxp, scale(Pp, -1)), Fraction(1, p))

    def reduce(levels):
        top = max(levels)
        inc = []
        for m in range(top, 0, -1):
            A = add(levels.get(m, []), inc)
            if not A:
                inc = []
                continue
            _, r = divmod_poly(A, P)
            _, b = divmod_poly(mul(tinv, r), P)
            a, rem = divmod_poly(add(A, scale(mul(b, dP), -1)), P)
            assert not rem
            inc = add(a, scale(deriv(b), Fraction(2, 2 * m - 1)))
        A = add(levels.get(0, []), inc)
        A = A + [Fraction(0)] * max(0, 2 * g - len(A))
        for D in range(len(A) - 1, 2 * g - 1, -1):
            c = A[D] if D < len(A) else 0
            if not c:
                continue
            s_ = D - 2 * g
            xcoef = c / Fraction(2 * s_ + d, 2)
            rel = add([Fraction(0)] * (s_ - 1) + scale(P, s_) if s_ > 0 else [],
                      [Fraction(0)] * s_ + scale(dP, Fraction(1, 2)))
            A = add(A, scale(rel, -xcoef))
            A = A + [Fraction(0)] * max(0, 2 * g - len(A))
        return A[: 2 * g]

    cols = []
    for i in range(2 * g):
        levels = {}
        Dk = [Fraction(0)] * (i * p + p - 1) + [Fraction(1)]
        for k in range(K):
            if k:
                Dk = mul(Dk, Delta)
            m = (p * (2 * k + 1) - 1) // 2
            levels[m] = scale(Dk, binom_mhalf(k) * p ** (k + 1))
        cols.append(reduce(levels))
    return [[cols[j][i] for j in range(2 * g)] for i in range(2 * g)]


if __name__ == "__main__":
    for p, P, K in [(3, [0, -1, 0, 1], 10), (5, [3, 1, 2, 0, 0, 1], 9), (3, [1, 0, 1, 0, 0, 1], 11)]:
        M = frobenius_matrix(p, P, K)
        print(p, P, K)
        mod = p ** 11
        for row in M:
            out = []
            for c in row:
                v = c * p ** 3
                assert v.denominator % p != 0
                out.append(v.numerator * pow(v.denominator, -1, mod) % mod)
            print("  ", ", ".join(str(c) for c in out))
        sys.stdout.flush()
