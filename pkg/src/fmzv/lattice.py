"""Exact integer lattice tools: row HNF, membership, congruence cuts, and LLL.

Everything is plain Python ints, so no precision is ever lost; the LLL
reduction keeps the Gram-Schmidt data in integral form (denominators d[i],
numerators lam[i][j]) and only performs divisions that are exact.
"""

from .modmath import mod_inv

__all__ = ["dot", "hnf", "hnf_contains", "congruence_cut", "lll_reduce"]


def dot(u, v):
    if len(u) != len(v):
        raise ValueError("length mismatch %d != %d" % (len(u), len(v)))
    return sum(a * b for a, b in zip(u, v))


def hnf(rows):
    """Row-style Hermite normal form.

    Returns the nonzero rows of an upper-echelon basis with positive pivots
    and entries above each pivot reduced into [0, pivot).  The row lattice is
    unchanged.
    """
    work = [list(r) for r in rows if any(r)]
    if not work:
        return []
    ncols = len(work[0])
    if any(len(r) != ncols for r in work):
        raise ValueError("ragged rows")
    r = 0
    for col in range(ncols):
        # gcd-eliminate below row r in this column
        while True:
            live = [i for i in range(r, len(work)) if work[i][col]]
            if not live:
                break
            i0 = min(live, key=lambda i: abs(work[i][col]))
            work[r], work[i0] = work[i0], work[r]
            if all(work[i][col] == 0 for i in range(r + 1, len(work))):
                break
            piv = work[r][col]
            for i in range(r + 1, len(work)):
                q = work[i][col] // piv
                if q:
                    work[i] = [a - q * b for a, b in zip(work[i], work[r])]
        if r < len(work) and work[r][col]:
            if work[r][col] < 0:
                work[r] = [-a for a in work[r]]
            piv = work[r][col]
            for i in range(r):
                q = work[i][col] // piv
                if q:
                    work[i] = [a - q * b for a, b in zip(work[i], work[r])]
            r += 1
            if r == len(work):
                break
    return [row for row in work[:r]]


def hnf_contains(hnf_rows, vector):
    """Membership of an integer vector in the row lattice given by hnf()."""
    v = list(vector)
    for row in hnf_rows:
        col = next(j for j, x in enumerate(row) if x)
        if v[col] % row[col]:
            return False
        q = v[col] // row[col]
        if q:
            v = [a - q * b for a, b in zip(v, row)]
    return not any(v)


def congruence_cut(basis, weights, p):
    """Sublattice of the row span meeting one congruence: v . weights = 0 mod p.

    basis rows must be integer vectors; returns a new HNF basis of the same
    rank.  If every basis row already satisfies the congruence the basis is
    returned unchanged.
    """
    residues = [dot(b, weights) % p for b in basis]
    pivot = next((j for j, s in enumerate(residues) if s), None)
    if pivot is None:
        return [list(b) for b in basis]
    inv = mod_inv(residues[pivot], p)
    out = []
    for j, b in enumerate(basis):
        if j == pivot:
            continue
        t = residues[j] * inv % p
        out.append([a - t * c for a, c in zip(b, basis[pivot])])
    out.append([p * c for c in basis[pivot]])
    return hnf(out)


def lll_reduce(rows, delta_num=99, delta_den=100):
    """LLL-reduce a basis of linearly independent integer rows, exactly.

    Uses the all-integer Gram-Schmidt representation: d[0..n] with d[0] = 1,
    mu[i][j] = lam[i][j] / d[j+1], |b*_i|^2 = d[i+1] / d[i].  All divisions
    below are exact by construction.
    """
    B = [list(r) for r in rows]
    n = len(B)
    if n <= 1:
        return B

    d = [1] * (n + 1)
    lam = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(i + 1):
            u = dot(B[i], B[j])
            for t in range(j):
                u = (d[t + 1] * u - lam[i][t] * lam[j][t]) // d[t]
            if j < i:
                lam[i][j] = u
            else:
                if u == 0:
                    raise ValueError("rows are linearly dependent")
                d[i + 1] = u

    def red(k, l):
        if 2 * abs(lam[k][l]) > d[l + 1]:
            q = (2 * lam[k][l] + d[l + 1]) // (2 * d[l + 1])
            B[k] = [a - q * b for a, b in zip(B[k], B[l])]
            lam[k][l] -= q * d[l + 1]
            for t in range(l):
                lam[k][t] -= q * lam[l][t]

    k = 1
    while k < n:
        red(k, k - 1)
        if delta_den * (d[k + 1] * d[k - 1] + lam[k][k - 1] ** 2) < delta_num * d[k] ** 2:
            B[k], B[k - 1] = B[k - 1], B[k]
            for t in range(k - 1):
                lam[k][t], lam[k - 1][t] = lam[k - 1][t], lam[k][t]
            lam_kk = lam[k][k - 1]
            dk_new = (d[k - 1] * d[k + 1] + lam_kk ** 2) // d[k]
            for i in range(k + 1, n):
                t = lam[i][k]
                lam[i][k] = (d[k + 1] * lam[i][k - 1] - lam_kk * t) // d[k]
                lam[i][k - 1] = (dk_new * t + lam_kk * lam[i][k]) // d[k + 1]
            d[k] = dk_new
            k = max(1, k - 1)
        else:
            for l in range(k - 2, -1, -1):
                red(k, l)
            k += 1
    return B
