"""Brute-force reference implementations used only by the tests."""

from itertools import product


def poly_mulmod_ref(a, b, q, mod):
    """Schoolbook product of coefficient lists reduced by a monic modulus."""
    m = len(mod) - 1
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] = (out[i + j] + x * y) % q
    for d in range(len(out) - 1, m - 1, -1):
        c = out[d]
        if c:
            for i in range(m + 1):
                out[d - m + i] = (out[d - m + i] - c * mod[i]) % q
    return (out + [0] * m)[:m]


def to_digits(a, q, m):
    return [(a // q**i) % q for i in range(m)]


def from_digits(ds, q):
    return sum(d * q**i for i, d in enumerate(ds))


def x_order(q, mod):
    """Multiplicative order of x modulo ``mod`` by repeated multiplication (None if x is not a unit)."""
    m = len(mod) - 1
    one = [1] + [0] * (m - 1)
    x = [0, 1] + [0] * (m - 2) if m > 1 else [(-mod[0]) % q]
    cur = list(x)
    for e in range(1, q**m):
        if cur == one:
            return e
        cur = poly_mulmod_ref(cur, x, q, mod)
    return None


def all_subspaces(N):
    """Every subspace of GF(2)^N as a frozenset of int vectors, by closure."""
    zero = frozenset([0])
    seen = {zero}
    frontier = [zero]
    while frontier:
        nxt = []
        for S in frontier:
            for v in range(1, 2**N):
                if v in S:
                    continue
                T = frozenset(S | {s ^ v for s in S})
                if T not in seen:
                    seen.add(T)
                    nxt.append(T)
        frontier = nxt
    return seen


def dim2(S):
    return len(S).bit_length() - 1


def set_distance(A, B):
    return dim2(A) + dim2(B) - 2 * dim2(A & B)


def span_f2(vectors):
    S = {0}
    for v in vectors:
        S |= {s ^ v for s in S}
    return frozenset(S)


def span_fq(vectors, q, length):
    """All GF(q)-combinations of digit vectors; returns a set of tuples."""
    out = set()
    for coeffs in product(range(q), repeat=len(vectors)):
        out.add(tuple(sum(c * v[i] for c, v in zip(coeffs, vectors)) % q for i in range(length)))
    return out
