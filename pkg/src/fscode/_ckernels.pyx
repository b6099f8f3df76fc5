# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled elimination kernels; drop-in replacement for ``_pykernels``."""

from array import array
from libc.stdlib cimport malloc, free

BACKEND = "cython"


def prepare_tables(exp, log, zech):
    return array("q", exp), array("q", log), array("q", zech if len(zech) else [0])


cdef long long _inv_mod(long long a, long long p):
    cdef long long t = 0, newt = 1, r = p, newr = a, qq, tmp
    while newr != 0:
        qq = r // newr
        tmp = t - qq * newt
        t = newt
        newt = tmp
        tmp = r - qq * newr
        r = newr
        newr = tmp
    if t < 0:
        t += p
    return t


cdef long long* _load(list rows, Py_ssize_t n, Py_ssize_t ncols) except NULL:
    cdef long long* A = <long long*> malloc(max(n * ncols, 1) * sizeof(long long))
    if A == NULL:
        raise MemoryError()
    cdef Py_ssize_t i, j
    cdef list row
    for i in range(n):
        row = rows[i]
        for j in range(ncols):
            A[i * ncols + j] = row[j]
    return A


cdef list _dump(long long* A, Py_ssize_t n, Py_ssize_t ncols):
    cdef Py_ssize_t i, j
    cdef list out = []
    for i in range(n):
        out.append([A[i * ncols + j] for j in range(ncols)])
    return out


cdef inline void _swap(long long* A, Py_ssize_t a, Py_ssize_t b, Py_ssize_t ncols):
    cdef Py_ssize_t j
    cdef long long t
    for j in range(ncols):
        t = A[a * ncols + j]
        A[a * ncols + j] = A[b * ncols + j]
        A[b * ncols + j] = t


def rref_prime(list rows, Py_ssize_t ncols, long long p):
    cdef Py_ssize_t n = len(rows)
    cdef long long* A = _load(rows, n, ncols)
    cdef Py_ssize_t r = 0, c, i, j, sel
    cdef long long inv, f
    cdef list pivots = []
    try:
        for i in range(n * ncols):
            A[i] %= p
            if A[i] < 0:
                A[i] += p
        for c in range(ncols):
            if r == n:
                break
            sel = -1
            for i in range(r, n):
                if A[i * ncols + c] != 0:
                    sel = i
                    break
            if sel < 0:
                continue
            if sel != r:
                _swap(A, r, sel, ncols)
            inv = _inv_mod(A[r * ncols + c], p)
            for j in range(c, ncols):
                A[r * ncols + j] = A[r * ncols + j] * inv % p
            for i in range(n):
                if i == r:
                    continue
                f = A[i * ncols + c]
                if f == 0:
                    continue
                for j in range(c, ncols):
                    A[i * ncols + j] = (A[i * ncols + j] + (p - f) * A[r * ncols + j]) % p
            pivots.append(c)
            r += 1
        return _dump(A, n, ncols), r, pivots
    finally:
        free(A)


def rref_table(list rows, Py_ssize_t ncols, long long q,
               const long long[:] exp, const long long[:] log, const long long[:] zech):
    cdef Py_ssize_t n = len(rows)
    cdef long long* A = _load(rows, n, ncols)
    cdef long long* L = <long long*> malloc(max(ncols, 1) * sizeof(long long))
    cdef long long q1 = log.shape[0] - 1
    cdef long long half = q1 // 2
    cdef Py_ssize_t r = 0, c, i, j, sel
    cdef long long il, lf, lb, t, a, la, d, z
    cdef list pivots = []
    if L == NULL:
        free(A)
        raise MemoryError()
    try:
        for c in range(ncols):
            if r == n:
                break
            sel = -1
            for i in range(r, n):
                if A[i * ncols + c] != 0:
                    sel = i
                    break
            if sel < 0:
                continue
            if sel != r:
                _swap(A, r, sel, ncols)
            il = q1 - log[A[r * ncols + c]]
            for j in range(c, ncols):
                a = A[r * ncols + j]
                if a != 0:
                    t = log[a] + il
                    A[r * ncols + j] = exp[t]
                    L[j] = t - q1 if t >= q1 else t
                else:
                    L[j] = -1
            for i in range(n):
                if i == r:
                    continue
                a = A[i * ncols + c]
                if a == 0:
                    continue
                lf = log[a]
                if q == 2:
                    for j in range(c, ncols):
                        lb = L[j]
                        if lb >= 0:
                            A[i * ncols + j] ^= exp[lf + lb]
                else:
                    lf = (lf + half) % q1
                    for j in range(c, ncols):
                        lb = L[j]
                        if lb < 0:
                            continue
                        t = lf + lb
                        if t >= q1:
                            t -= q1
                        a = A[i * ncols + j]
                        if a == 0:
                            A[i * ncols + j] = exp[t]
                            continue
                        la = log[a]
                        d = t - la
                        if d < 0:
                            d += q1
                        z = zech[d]
                        A[i * ncols + j] = 0 if z < 0 else exp[la + z]
            pivots.append(c)
            r += 1
        return _dump(A, n, ncols), r, pivots
    finally:
        free(A)
        free(L)
