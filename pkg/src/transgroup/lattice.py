"""Exact integer lattice algebra: HNF, kernels, solving, and LLL.

Everything runs on arbitrary-precision Python ints; rational inputs are
handled by clearing denominators column-wise, which preserves left
kernels, solvability and spans.  The LLL reduction is the classic
all-integer formulation (Gram determinants d_i and scaled coefficients
lambda_ij), so reduced bases are exact and deterministic.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm


def xgcd(a: int, b: int) -> tuple[int, int, int]:
    """(x, y, g) with x*a + y*b == g == gcd(a, b), g >= 0."""
    x, nx = 1, 0
    y, ny = 0, 1
    g, ng = a, b
    while ng:
        q = g // ng
        x, nx = nx, x - q * nx
        y, ny = ny, y - q * ny
        g, ng = ng, g - q * ng
    if g < 0:
        x, y, g = -x, -y, -g
    return x, y, g


def hnf_row(rows: list[list[int]]) -> tuple[list[list[int]], list[list[int]]]:
    """Row-style Hermite normal form H = U * A with U unimodular.

    H has positive pivots, entries above each pivot reduced into
    [0, pivot), and zero rows collected at the bottom.
    """
    m = len(rows)
    n = len(rows[0]) if m else 0
    H = [list(r) for r in rows]
    U = [[1 if i == j else 0 for j in range(m)] for i in range(m)]
    pivot_row = 0
    for col in range(n):
        # find a row at or below pivot_row with a nonzero entry in col
        nz = [r for r in range(pivot_row, m) if H[r][col]]
        if not nz:
            continue
        r0 = nz[0]
        for r in nz[1:]:
            a, b = H[r0][col], H[r][col]
            x, y, g = xgcd(a, b)
            aa, bb = a // g, b // g
            row_r0 = [x * H[r0][j] + y * H[r][j] for j in range(n)]
            row_r = [-bb * H[r0][j] + aa * H[r][j] for j in range(n)]
            H[r0], H[r] = row_r0, row_r
            u_r0 = [x * U[r0][j] + y * U[r][j] for j in range(m)]
            u_r = [-bb * U[r0][j] + aa * U[r][j] for j in range(m)]
            U[r0], U[r] = u_r0, u_r
        if H[r0][col] < 0:
            H[r0] = [-v for v in H[r0]]
            U[r0] = [-v for v in U[r0]]
        H[pivot_row], H[r0] = H[r0], H[pivot_row]
        U[pivot_row], U[r0] = U[r0], U[pivot_row]
        p = H[pivot_row][col]
        for r in range(pivot_row):
            q = H[r][col] // p
            if q:
                H[r] = [H[r][j] - q * H[pivot_row][j] for j in range(n)]
                U[r] = [U[r][j] - q * U[pivot_row][j] for j in range(m)]
        pivot_row += 1
        if pivot_row == m:
            break
    # move zero rows to the bottom, preserving order of nonzero rows
    order = [r for r in range(m) if any(H[r])] + [r for r in range(m) if not any(H[r])]
    H = [H[r] for r in order]
    U = [U[r] for r in order]
    return H, U


def rank_int(rows: list[list[int]]) -> int:
    if not rows:
        return 0
    H, _ = hnf_row(rows)
    return sum(1 for r in H if any(r))


def left_kernel(rows: list[list[int]]) -> list[list[int]]:
    """Basis of {m : m * A = 0} as rows."""
    if not rows:
        return []
    H, U = hnf_row(rows)
    return [U[i] for i in range(len(rows)) if not any(H[i])]


def solve_left(rows: list[list[int]], target: list[int]) -> list[int] | None:
    """Some integer m with m * A = target, or None."""
    m = len(rows)
    if m == 0:
        return None if any(target) else []
    n = len(rows[0])
    H, U = hnf_row(rows)
    c = list(target)
    y = [0] * m
    for i in range(m):
        row = H[i]
        piv = next((j for j in range(n) if row[j]), None)
        if piv is None:
            break
        if c[piv] % row[piv]:
            return None
        q = c[piv] // row[piv]
        y[i] = q
        if q:
            c = [c[j] - q * row[j] for j in range(n)]
    if any(c):
        return None
    out = [0] * m
    for i in range(m):
        if y[i]:
            out = [out[j] + y[i] * U[i][j] for j in range(m)]
    return out


# ---------------------------------------------------------------------------
# Rational matrices
# ---------------------------------------------------------------------------


def clear_columns(rows: list[list[Fraction]]) -> tuple[list[list[int]], list[int]]:
    """Scale each column by the lcm of its denominators.

    Column scaling preserves left kernels, ranks and integer solvability
    (when the target is scaled identically).
    """
    if not rows:
        return [], []
    n = len(rows[0])
    mults = []
    for j in range(n):
        m = 1
        for r in rows:
            m = lcm(m, Fraction(r[j]).denominator)
        mults.append(m)
    out = [[int(Fraction(r[j]) * mults[j]) for j in range(n)] for r in rows]
    return out, mults


def rank_rational(rows: list[list[Fraction]]) -> int:
    cleared, _ = clear_columns(rows)
    return rank_int(cleared)


def left_kernel_rational(rows: list[list[Fraction]]) -> list[list[int]]:
    cleared, _ = clear_columns(rows)
    return left_kernel(cleared)


def solve_left_rational(
    rows: list[list[Fraction]], target: list[Fraction]
) -> list[int] | None:
    """Integer m with m * A = target for rational A, target."""
    if not rows:
        return None if any(target) else []
    joint = rows + [list(target)]
    cleared, _ = clear_columns(joint)
    return solve_left(cleared[:-1], cleared[-1])


def primitive_span_basis(rows: list[list[Fraction]]) -> list[list[Fraction]]:
    """HNF basis of the Z-module generated by rational coordinate rows."""
    cleared, mults = clear_columns(rows)
    H, _ = hnf_row(cleared)
    out = []
    for r in H:
        if any(r):
            out.append([Fraction(r[j], mults[j]) for j in range(len(r))])
    return out


# ---------------------------------------------------------------------------
# LLL (all-integer, Cohen's formulation)
# ---------------------------------------------------------------------------

LLL_DELTA = Fraction(99, 100)


def _dot(a, b):
    return sum(x * y for x, y in zip(a, b))


def lll_reduce(basis: list[list[int]], delta: Fraction = LLL_DELTA) -> list[list[int]]:
    """LLL-reduced basis of the lattice spanned by independent int rows.

    All arithmetic is exact; raises ValueError on dependent input rows.
    """
    n = len(basis)
    if n <= 1:
        return [list(r) for r in basis]
    b = [list(r) for r in basis]
    d = [0] * (n + 1)
    d[0] = 1
    lam = [[0] * n for _ in range(n)]
    dp, dq = delta.numerator, delta.denominator

    def incremental_gram(k: int):
        for j in range(k + 1):
            u = _dot(b[k], b[j])
            for i in range(j):
                u = (d[i + 1] * u - lam[k][i] * lam[j][i]) // d[i]
            if j < k:
                lam[k][j] = u
            else:
                if u == 0:
                    raise ValueError("dependent rows in lll_reduce")
                d[k + 1] = u

    def redi(k: int, l: int):
        if 2 * abs(lam[k][l]) > d[l + 1]:
            q = (2 * lam[k][l] + d[l + 1]) // (2 * d[l + 1])
            b[k] = [x - q * y for x, y in zip(b[k], b[l])]
            lam[k][l] -= q * d[l + 1]
            for i in range(l):
                lam[k][i] -= q * lam[l][i]

    def swap(k: int, kmax: int):
        b[k], b[k - 1] = b[k - 1], b[k]
        for j in range(k - 1):
            lam[k][j], lam[k - 1][j] = lam[k - 1][j], lam[k][j]
        lam_ = lam[k][k - 1]
        B = (d[k - 1] * d[k + 1] + lam_ * lam_) // d[k]
        for i in range(k + 1, kmax + 1):
            t = lam[i][k]
            lam[i][k] = (d[k + 1] * lam[i][k - 1] - lam_ * t) // d[k]
            lam[i][k - 1] = (B * t + lam_ * lam[i][k]) // d[k + 1]
        d[k] = B

    incremental_gram(0)
    k, kmax = 1, 0
    while k < n:
        if k > kmax:
            kmax = k
            incremental_gram(k)
        redi(k, k - 1)
        # Lovasz: d[k+1]*d[k-1] >= delta*d[k]^2 - lam^2
        if dq * d[k + 1] * d[k - 1] < dp * d[k] * d[k] - dq * lam[k][k - 1] ** 2:
            swap(k, kmax)
            k = max(k - 1, 1)
        else:
            for l in range(k - 2, -1, -1):
                redi(k, l)
            k += 1
    return b


def lll_alpha(delta: Fraction = LLL_DELTA) -> Fraction:
    """alpha with ||b1||^2 <= alpha^(n-1) * lambda_1^2 for delta-LLL bases."""
    return 1 / (delta - Fraction(1, 4))


def shortest_vector_lower_bound(
    reduced: list[list[int]], delta: Fraction = LLL_DELTA
) -> Fraction:
    """Rigorous lower bound on lambda_1(L)^2 from a delta-LLL-reduced basis."""
    n = len(reduced)
    if not n:
        return Fraction(0)
    b1 = _dot(reduced[0], reduced[0])
    return Fraction(b1) / (lll_alpha(delta) ** (n - 1))
