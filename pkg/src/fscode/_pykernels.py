"""Pure-Python elimination kernels.

Reference implementation of the compiled ``_ckernels`` module; both expose the
same functions with the same semantics, and ``fscode.kernels`` picks one at
import time.

Matrices are lists of rows of canonical integers. Inputs are never mutated.
Table fields pass ``exp`` (length ``2*(Q-1)``), ``log`` (``log[0] == -1``) and,
for odd characteristic, ``zech`` with ``zech[n] = log(1 + alpha**n)`` or -1.
"""

BACKEND = "python"


def prepare_tables(exp, log, zech):
    return list(exp), list(log), list(zech)


def rref_prime(rows, ncols, p):
    """Reduced row echelon form over GF(p). Returns ``(rows, rank, pivots)``."""
    A = [[x % p for x in r] for r in rows]
    n = len(A)
    pivots = []
    r = 0
    for c in range(ncols):
        if r == n:
            break
        sel = -1
        for i in range(r, n):
            if A[i][c]:
                sel = i
                break
        if sel < 0:
            continue
        A[r], A[sel] = A[sel], A[r]
        row = A[r]
        inv = pow(row[c], p - 2, p)
        if inv != 1:
            row = [x * inv % p for x in row]
            A[r] = row
        for i in range(n):
            if i == r:
                continue
            other = A[i]
            f = other[c]
            if f:
                for j in range(c, ncols):
                    if row[j]:
                        other[j] = (other[j] - f * row[j]) % p
        pivots.append(c)
        r += 1
    return A, r, pivots


def rref_table(rows, ncols, q, exp, log, zech):
    """Reduced row echelon form over GF(q^m) given log/antilog tables."""
    A = [list(r) for r in rows]
    n = len(A)
    q1 = len(log) - 1
    half = q1 // 2
    pivots = []
    r = 0
    for c in range(ncols):
        if r == n:
            break
        sel = -1
        for i in range(r, n):
            if A[i][c]:
                sel = i
                break
        if sel < 0:
            continue
        A[r], A[sel] = A[sel], A[r]
        row = A[r]
        il = q1 - log[row[c]]
        if il != q1:
            row = [exp[log[x] + il] if x else 0 for x in row]
            A[r] = row
        lrow = [log[x] for x in row]
        for i in range(n):
            if i == r:
                continue
            other = A[i]
            f = other[c]
            if not f:
                continue
            lf = log[f]
            if q == 2:
                for j in range(c, ncols):
                    lb = lrow[j]
                    if lb >= 0:
                        other[j] ^= exp[lf + lb]
            else:
                # subtract f*row == add (-f)*row; -1 = alpha**half
                lf = (lf + half) % q1
                for j in range(c, ncols):
                    lb = lrow[j]
                    if lb < 0:
                        continue
                    t = lf + lb
                    if t >= q1:
                        t -= q1
                    a = other[j]
                    if not a:
                        other[j] = exp[t]
                        continue
                    la = log[a]
                    d = t - la
                    if d < 0:
                        d += q1
                    z = zech[d]
                    other[j] = 0 if z < 0 else exp[la + z]
        pivots.append(c)
        r += 1
    return A, r, pivots
