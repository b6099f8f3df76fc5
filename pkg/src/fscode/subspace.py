"""Subspaces of GF(q^m)^c viewed as GF(q)-row spaces.

A vector ``(v_0, ..., v_{c-1})`` over GF(q^m) is expanded to ``c*m`` base-field
coordinates (``v_0``'s first, see :func:`fscode.algebra.expand_to_base`) and
packed into one integer ``sum d_k q^k``. For q = 2 that packing is
``sum v_i << (i*m)`` and row reduction becomes XOR on Python ints.

Subspaces are kept in reduced row echelon form (pivots leftmost, i.e. lowest
coordinate first), so two :class:`SubspaceBasis` values are equal exactly when
they describe the same space.
"""

from dataclasses import dataclass

from .algebra import Mat, PrimeField, _digits, _undigits, rref_rows
from .errors import AmbientMismatch, NontrivialIntersection


def pack(F, v):
    q, m = F.q, F.m
    if q == 2:
        out = 0
        for i, x in enumerate(v):
            out |= x << (i * m)
        return out
    out = 0
    base = 1
    step = q**m
    for x in v:
        out += x * base
        base *= step
    return out


def unpack(F, x, c):
    q, m = F.q, F.m
    if q == 2:
        mask = (1 << m) - 1
        return [(x >> (i * m)) & mask for i in range(c)]
    step = q**m
    out = []
    for _ in range(c):
        x, r = divmod(x, step)
        out.append(r)
    return out


class Echelon:
    """Incrementally maintained reduced echelon basis of packed GF(q) vectors."""

    __slots__ = ("q", "length", "_rows")

    def __init__(self, q, length, vectors=()):
        self.q = q
        self.length = length
        # q == 2: list of (pivot mask, row int); otherwise (pivot index, digit list)
        self._rows = []
        for v in vectors:
            self.add(v)

    @property
    def dim(self):
        return len(self._rows)

    def copy(self):
        e = Echelon(self.q, self.length)
        e._rows = [(p, r if self.q == 2 else list(r)) for p, r in self._rows]
        return e

    def _reduce_digits(self, d):
        q = self.q
        for p, row in self._rows:
            c = d[p]
            if c:
                d = [(x - c * y) % q for x, y in zip(d, row)]
        return d

    def reduce(self, v):
        """Residue of ``v`` modulo the current span (zero iff ``v`` lies in it)."""
        if self.q == 2:
            for pm, row in self._rows:
                if v & pm:
                    v ^= row
            return v
        return _undigits(self._reduce_digits(_digits(v, self.q, self.length)), self.q)

    def add(self, v):
        """Insert ``v``; returns False when it was already in the span."""
        if self.q == 2:
            for pm, row in self._rows:
                if v & pm:
                    v ^= row
            if not v:
                return False
            pm = v & -v
            self._rows = [(p, r ^ v if r & pm else r) for p, r in self._rows]
            self._rows.append((pm, v))
            return True
        q = self.q
        d = self._reduce_digits(_digits(v, q, self.length))
        piv = next((i for i, x in enumerate(d) if x), None)
        if piv is None:
            return False
        inv = pow(d[piv], q - 2, q)
        d = [x * inv % q for x in d]
        new = []
        for p, row in self._rows:
            c = row[piv]
            if c:
                row = [(x - c * y) % q for x, y in zip(row, d)]
            new.append((p, row))
        new.append((piv, d))
        self._rows = new
        return True

    def rows(self):
        """Packed RREF rows ordered by pivot."""
        ordered = sorted(self._rows, key=lambda pr: pr[0])
        if self.q == 2:
            return tuple(r for _, r in ordered)
        return tuple(_undigits(r, self.q) for _, r in ordered)


@dataclass(frozen=True)
class SubspaceBasis:
    """Canonical basis of a GF(q)-subspace of GF(q^m)^c.

    ``rows`` holds the packed RREF rows; ``dim`` is their number.
    """

    field: object
    c: int
    rows: tuple

    @property
    def dim(self):
        return len(self.rows)

    @property
    def ambient_dim(self):
        return self.c * self.field.m

    def vectors(self):
        """Basis rows as vectors over GF(q^m)."""
        return [unpack(self.field, r, self.c) for r in self.rows]

    def matrix(self):
        """The RREF basis as a matrix over GF(q)."""
        F = self.field
        n = self.c * F.m
        return Mat(PrimeField(F.q), [_digits(r, F.q, n) for r in self.rows], n)

    def echelon(self):
        e = Echelon(self.field.q, self.ambient_dim)
        for r in self.rows:
            e.add(r)
        return e


def _canonical_rows(F, packed, length):
    if F.q == 2:
        return Echelon(2, length, packed).rows()
    rows = [_digits(v, F.q, length) for v in packed]
    R, rk, _ = rref_rows(PrimeField(F.q), rows, length)
    return tuple(_undigits(r, F.q) for r in R[:rk])


def canonicalize(F, vectors, c):
    """Row space of ``vectors`` (each of length ``c`` over GF(q^m))."""
    for v in vectors:
        if len(v) != c:
            raise ValueError(f"vector of length {len(v)} in ambient of {c} columns")
    packed = [pack(F, [int(x) for x in v]) for v in vectors]
    return SubspaceBasis(F, c, _canonical_rows(F, packed, c * F.m))


def _check_same(U, V):
    if U.c != V.c or U.field != V.field:
        raise AmbientMismatch("subspaces live in different ambient spaces")


def sum_dim(U, V):
    _check_same(U, V)
    e = Echelon(U.field.q, U.ambient_dim, U.rows)
    for r in V.rows:
        e.add(r)
    return e.dim


def intersection_dim(U, V):
    return U.dim + V.dim - sum_dim(U, V)


def subspace_distance(U, V):
    """``dim U + dim V - 2 dim(U & V)``."""
    return 2 * sum_dim(U, V) - U.dim - V.dim


def subspace_sum(U, V):
    _check_same(U, V)
    return SubspaceBasis(U.field, U.c, _canonical_rows(U.field, list(U.rows) + list(V.rows), U.ambient_dim))


def direct_sum(U, E):
    """``U + E`` when the two meet only in zero; raises NontrivialIntersection otherwise."""
    S = subspace_sum(U, E)
    if S.dim != U.dim + E.dim:
        raise NontrivialIntersection(f"dim(U & E) = {U.dim + E.dim - S.dim}")
    return S
