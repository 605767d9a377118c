"""Independent brute-force oracles shared by the test suite.

Everything here is deliberately naive and separate from the package code:
minors-based Smith invariants, fraction-free determinants, stars-and-bars
monomial enumeration, Gaussian binomials via exact polynomial division.
"""

from __future__ import annotations

import itertools
import math
from math import gcd


def determinant(rows) -> int:
    """Fraction-free (Bareiss) determinant of a square integer matrix."""
    a = [list(r) for r in rows]
    n = len(a)
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[-1][-1]


def smith_invariants_by_minors(rows) -> list[int]:
    """Invariant factors d_i = g_i / g_{i-1}, g_k = gcd of all k x k minors.

    Exponential in the matrix size; only use on small matrices.
    """
    a = [list(r) for r in rows]
    m = len(a)
    n = len(a[0]) if m else 0
    gs = [1]
    for k in range(1, min(m, n) + 1):
        g = 0
        for ri in itertools.combinations(range(m), k):
            for ci in itertools.combinations(range(n), k):
                sub = [[a[i][j] for j in ci] for i in ri]
                g = gcd(g, determinant(sub))
        if g == 0:
            break
        gs.append(g)
    return [gs[i] // gs[i - 1] for i in range(1, len(gs))]


def rational_rank(rows) -> int:
    """Row rank over Q by fraction-free elimination."""
    a = [[x for x in r] for r in rows]
    rank = 0
    cols = len(a[0]) if a else 0
    for j in range(cols):
        piv = next((i for i in range(rank, len(a)) if a[i][j] != 0), None)
        if piv is None:
            continue
        a[rank], a[piv] = a[piv], a[rank]
        for i in range(len(a)):
            if i != rank and a[i][j] != 0:
                p, q = a[rank][j], a[i][j]
                a[i] = [p * y - q * x for x, y in zip(a[rank], a[i])]
        rank += 1
    return rank


def count_monomials(degrees, d) -> int:
    """Number of exponent vectors e with sum(e_i * degrees_i) == d, by brute force."""
    if d < 0:
        return 0
    if not degrees:
        return 1 if d == 0 else 0
    first, rest = degrees[0], degrees[1:]
    return sum(count_monomials(rest, d - k * first) for k in range(d // first + 1))


def poly_mul(p, q):
    out = [0] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        for j, b in enumerate(q):
            out[i + j] += a * b
    return out


def poly_divexact(p, q):
    """Exact division of integer coefficient lists; raises if not exact."""
    p = list(p)
    out = [0] * (len(p) - len(q) + 1)
    for i in range(len(out) - 1, -1, -1):
        c, r = divmod(p[i + len(q) - 1], q[-1])
        if r:
            raise ArithmeticError("inexact polynomial division")
        out[i] = c
        for j, b in enumerate(q):
            p[i + j] -= c * b
    if any(p):
        raise ArithmeticError("inexact polynomial division")
    return out


def gaussian_binomial(a, b):
    """Coefficient list of the q-binomial [a choose b]_q."""
    num = [1]
    den = [1]
    for i in range(1, b + 1):
        num = poly_mul(num, [-1] + [0] * (a - b + i - 1) + [1])  # q^(a-b+i) - 1
        den = poly_mul(den, [-1] + [0] * (i - 1) + [1])          # q^i - 1
    return poly_divexact(num, den)


def grassmannian_poincare(n, m):
    """Rank of H^d(Gr(n,m)) indexed by degree d (Gaussian binomial in t^2)."""
    qcoeffs = gaussian_binomial(n + m, n)
    out = [0] * (2 * len(qcoeffs) - 1)
    for i, c in enumerate(qcoeffs):
        out[2 * i] = c
    return out


def flag_total_rank(blocks) -> int:
    """Total rank of H*(U(N)/U(a1)x...xU(ak)): the multinomial N!/(a1!...ak!)."""
    n = math.factorial(sum(blocks))
    for a in blocks:
        n //= math.factorial(a)
    return n
