"""Exact dense linear algebra over Q on lists of lists of Fractions."""

from __future__ import annotations

from fractions import Fraction
from math import lcm


def as_matrix(rows):
    return [[Fraction(a) for a in row] for row in rows]


def identity(n):
    return [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]


def zeros(m, n=None):
    return [[Fraction(0)] * (m if n is None else n) for _ in range(m)]


def matmul(a, b):
    bt = list(zip(*b))
    return [[sum((x * y for x, y in zip(row, col)), Fraction(0)) for col in bt] for row in a]


def matpow(m, k):
    result = identity(len(m))
    base = m
    while k:
        if k & 1:
            result = matmul(result, base)
        base = matmul(base, base)
        k >>= 1
    return result


def _integer_rows(m):
    # Scaling a row by a nonzero constant preserves rank.
    out = []
    for row in m:
        den = lcm(*(Fraction(a).denominator for a in row)) if row else 1
        out.append([int(Fraction(a) * den) for a in row])
    return out


def bareiss_rank(m):
    """Rank by fraction-free (Bareiss) elimination with row pivoting."""
    a = _integer_rows(m)
    if not a:
        return 0
    nrows, ncols = len(a), len(a[0])
    rank = 0
    prev = 1
    for col in range(ncols):
        pivot = next((r for r in range(rank, nrows) if a[r][col]), None)
        if pivot is None:
            continue
        a[rank], a[pivot] = a[pivot], a[rank]
        p = a[rank][col]
        for r in range(rank + 1, nrows):
            arc = a[r][col]
            row_r, row_p = a[r], a[rank]
            for c in range(col + 1, ncols):
                # Exact division is guaranteed by Sylvester's identity.
                row_r[c] = (p * row_r[c] - arc * row_p[c]) // prev
            row_r[col] = 0
        prev = p
        rank += 1
        if rank == nrows:
            break
    return rank


def bareiss_det(m):
    """Determinant of a square rational matrix, fraction-free."""
    n = len(m)
    if n == 0:
        return Fraction(1)
    dens = [lcm(*(Fraction(a).denominator for a in row)) for row in m]
    a = [[int(Fraction(x) * d) for x in row] for row, d in zip(m, dens)]
    scale = 1
    for d in dens:
        scale *= d
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            swap = next((r for r in range(k + 1, n) if a[r][k]), None)
            if swap is None:
                return Fraction(0)
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[k][k] * a[i][j] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return Fraction(sign * a[n - 1][n - 1], scale)


def rref(m):
    """Reduced row echelon form and pivot columns (Fraction arithmetic)."""
    a = [list(map(Fraction, row)) for row in m]
    pivots = []
    r = 0
    nrows = len(a)
    ncols = len(a[0]) if a else 0
    for c in range(ncols):
        pivot = next((i for i in range(r, nrows) if a[i][c]), None)
        if pivot is None:
            continue
        a[r], a[pivot] = a[pivot], a[r]
        inv = 1 / a[r][c]
        a[r] = [x * inv for x in a[r]]
        for i in range(nrows):
            if i != r and a[i][c]:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return a, pivots


def nullspace(m, ncols=None):
    """Basis of {x : M x = 0}."""
    if not m:
        return [[Fraction(int(i == j)) for i in range(ncols)] for j in range(ncols)]
    a, pivots = rref(m)
    ncols = len(m[0])
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        v = [Fraction(0)] * ncols
        v[f] = Fraction(1)
        for row, p in zip(a, pivots):
            v[p] = -row[f]
        basis.append(v)
    return basis


def generalized_kernel_dim(m):
    """N - rank(M^N): total algebraic multiplicity of the eigenvalue 0."""
    n = len(m)
    if n == 0:
        return 0
    return n - bareiss_rank(matpow(as_matrix(m), n))


def joint_generalized_kernel_dim(mats):
    """Dimension of the common generalized 0-eigenspace of commuting matrices."""
    n = len(mats[0]) if mats else 0
    if n == 0:
        return 0
    stacked = []
    for m in mats:
        stacked.extend(matpow(as_matrix(m), n))
    return n - bareiss_rank(stacked)


def charpoly(m):
    """Coefficients [c_0, ..., c_N] of det(t I - M), via Faddeev-LeVerrier."""
    n = len(m)
    a = as_matrix(m)
    coeffs = [Fraction(0)] * (n + 1)
    coeffs[n] = Fraction(1)
    mk = zeros(n)
    for k in range(1, n + 1):
        mk = matmul(a, mk)
        for i in range(n):
            mk[i][i] += coeffs[n - k + 1]
        am = matmul(a, mk)
        coeffs[n - k] = -sum(am[i][i] for i in range(n)) / k
    return coeffs


def _divisors(k):
    k = abs(k)
    out = set()
    i = 1
    while i * i <= k:
        if k % i == 0:
            out.add(i)
            out.add(k // i)
        i += 1
    return out


def _synthetic_division(coeffs, r):
    # coeffs low-to-high; returns quotient and remainder of division by (t - r)
    high = list(reversed(coeffs))
    out = [high[0]]
    for c in high[1:]:
        out.append(c + out[-1] * r)
    rem = out.pop()
    return list(reversed(out)), rem


def rational_roots(coeffs):
    """Rational roots with multiplicities of a polynomial given low-to-high."""
    coeffs = [Fraction(c) for c in coeffs]
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    roots = {}
    while len(coeffs) > 1 and coeffs[0] == 0:
        roots[Fraction(0)] = roots.get(Fraction(0), 0) + 1
        coeffs = coeffs[1:]
    if len(coeffs) <= 1:
        return roots
    den = lcm(*(c.denominator for c in coeffs))
    ints = [int(c * den) for c in coeffs]
    candidates = set()
    for p in _divisors(ints[0]):
        for q in _divisors(ints[-1]):
            candidates.add(Fraction(p, q))
            candidates.add(Fraction(-p, q))
    for r in sorted(candidates):
        while len(coeffs) > 1:
            quotient, rem = _synthetic_division(coeffs, r)
            if rem != 0:
                break
            roots[r] = roots.get(r, 0) + 1
            coeffs = quotient
    return roots
