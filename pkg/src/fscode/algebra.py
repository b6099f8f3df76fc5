"""Exact arithmetic in GF(q) and GF(q^m) and dense linear algebra over both.

Elements of GF(q^m) are handled as canonical integers ``sum(c_i * q**i)``
where ``c_i`` is the coordinate of ``alpha**i`` in the polynomial basis. The
field objects expose arithmetic on those integers directly (the fast path used
by the coder); :class:`FieldElem` wraps an integer together with its field for
convenient interactive use.
"""

from functools import lru_cache

from . import kernels
from .errors import (
    DegreeOutOfRange,
    FieldMismatch,
    NoPrimitivePolynomialFound,
    NotPrime,
)

# Fields up to this order get log/antilog tables; larger ones use polynomial
# arithmetic on the canonical integers.
TABLE_LIMIT = 1 << 16
MAX_ORDER = 1 << 61


def is_prime(n):
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


@lru_cache(maxsize=None)
def prime_factors(n):
    """Distinct prime factors of ``n`` (``n`` up to ~2**61)."""
    from sympy import factorint

    return tuple(sorted(factorint(n)))


def _digits(a, q, n):
    out = []
    for _ in range(n):
        a, d = divmod(a, q)
        out.append(d)
    return out


def _undigits(ds, q):
    v = 0
    for d in reversed(ds):
        v = v * q + d
    return v


def _polymulmod(a, b, q, m, mod):
    """Product of canonical integers ``a*b`` modulo the monic ``mod`` (coefficient list)."""
    if q == 2:
        r = 0
        while b:
            if b & 1:
                r ^= a
            b >>= 1
            a <<= 1
        modint = _undigits(mod, 2)
        for d in range(r.bit_length() - 1, m - 1, -1):
            if (r >> d) & 1:
                r ^= modint << (d - m)
        return r
    da, db = _digits(a, q, m), _digits(b, q, m)
    prod = [0] * (2 * m - 1)
    for i, x in enumerate(da):
        if x:
            for j, y in enumerate(db):
                prod[i + j] += x * y
    for d in range(2 * m - 2, m - 1, -1):
        c = prod[d] % q
        if c:
            for i in range(m):
                prod[d - m + i] -= c * mod[i]
    return _undigits([x % q for x in prod[:m]], q)


def _polypowmod(a, e, q, m, mod):
    r = 1
    while e:
        if e & 1:
            r = _polymulmod(r, a, q, m, mod)
        e >>= 1
        if e:
            a = _polymulmod(a, a, q, m, mod)
    return r


def _x_residue(q, m, mod):
    # the class of x in F_q[x]/(mod); for m == 1 it is -c_0
    return (-mod[0]) % q if m == 1 else q


def x_is_primitive(q, m, mod, factors=None):
    """True iff ``x`` has multiplicative order ``q**m - 1`` modulo ``mod``.

    This also certifies that ``mod`` is irreducible: a reducible modulus has
    fewer than ``q**m - 1`` units.
    """
    if mod[0] % q == 0:
        return False
    order = q**m - 1
    x = _x_residue(q, m, mod)
    if _polypowmod(x, order, q, m, mod) != 1:
        return False
    if factors is None:
        factors = prime_factors(order) if order > 1 else []
    return all(_polypowmod(x, order // p, q, m, mod) != 1 for p in factors)


class PrimeField:
    """The prime field GF(q)."""

    def __init__(self, q):
        if not (2 <= q <= 251 and is_prime(q)):
            raise NotPrime(f"q={q} is not a prime in [2, 251]")
        self.q = q
        self.p = q
        self.m = 1
        self.order = q

    def __repr__(self):
        return f"PrimeField({self.q})"

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.q == self.q

    def __hash__(self):
        return hash(("GF", self.q))

    def add(self, a, b):
        return (a + b) % self.q

    def sub(self, a, b):
        return (a - b) % self.q

    def neg(self, a):
        return -a % self.q

    def mul(self, a, b):
        return a * b % self.q

    def inv(self, a):
        if a % self.q == 0:
            raise ZeroDivisionError("inverse of zero")
        return pow(a, self.q - 2, self.q)

    def div(self, a, b):
        return a * self.inv(b) % self.q

    def random(self, rng):
        return rng.randrange(self.q)


class ExtField:
    """GF(q^m) in the polynomial basis of a primitive root ``alpha`` of ``modulus``.

    ``modulus`` is the monic coefficient list, lowest degree first, of length m+1.
    Use :func:`ext_field_new` to obtain the canonical field for ``(q, m)``.
    """

    def __init__(self, q, m, modulus):
        if not (2 <= q <= 251 and is_prime(q)):
            raise NotPrime(f"q={q} is not a prime in [2, 251]")
        if not 1 <= m <= 24 or q**m > MAX_ORDER:
            raise DegreeOutOfRange(f"m={m} outside [1, 24] or q^m above 2^61")
        modulus = [int(c) % q for c in modulus]
        if len(modulus) != m + 1 or modulus[-1] != 1:
            raise ValueError("modulus must be monic of degree m")
        if not x_is_primitive(q, m, modulus):
            raise ValueError(f"x is not primitive modulo {modulus}")
        self.q = q
        self.m = m
        self.modulus = tuple(modulus)
        self.order = q**m
        self.q1 = self.order - 1
        self.alpha = _x_residue(q, m, modulus)
        self.base = PrimeField(q)
        self._mod = list(modulus)
        self._qpow = [pow(q, i, self.q1) if self.q1 > 1 else 0 for i in range(m)]
        self._frob = {}
        self.tabled = self.order <= TABLE_LIMIT
        if self.tabled:
            self._build_tables()

    # -- construction helpers --------------------------------------------

    def _mul_x(self, a):
        q, m = self.q, self.m
        if m == 1:
            return a * self.alpha % q
        if q == 2:
            a <<= 1
            if a >> m:
                a ^= _undigits(list(self.modulus), 2)
            return a
        ds = [0] + _digits(a, q, m)
        top = ds.pop()
        if top:
            ds = [(d - top * c) % q for d, c in zip(ds, self._mod)]
        return _undigits(ds, q)

    def _build_tables(self):
        q1 = self.q1
        exp = [0] * (2 * q1 if q1 else 2)
        log = [-1] * self.order
        a = 1
        for i in range(q1):
            exp[i] = a
            log[a] = i
            a = self._mul_x(a)
        if q1 == 1 or self.order == 2:
            exp[0] = exp[1] = 1
            log[1] = 0
        for i in range(q1, 2 * q1):
            exp[i] = exp[i - q1]
        zech = []
        if self.q != 2:
            q = self.q
            zech = [-1] * q1
            for n in range(q1):
                v = exp[n]
                d0 = v % q
                w = v - d0 + (d0 + 1) % q
                zech[n] = log[w] if w else -1
        self._exp, self._log, self._zech = exp, log, zech
        self.ktables = kernels.prepare_tables(exp, log, zech)

    # -- identity ---------------------------------------------------------

    def __repr__(self):
        return f"ExtField(q={self.q}, m={self.m}, modulus={list(self.modulus)})"

    def __eq__(self, other):
        return isinstance(other, ExtField) and (self.q, self.modulus) == (other.q, other.modulus)

    def __hash__(self):
        return hash(("GF", self.q, self.modulus))

    def __reduce__(self):
        return (ext_field_from_descriptor, (self.descriptor(),))

    def descriptor(self):
        return {"q": self.q, "m": self.m, "modulus": list(self.modulus)}

    def __call__(self, value):
        return FieldElem(self, value)

    # -- arithmetic on canonical integers -----------------------------------

    def add(self, a, b):
        if self.q == 2:
            return a ^ b
        if not a:
            return b
        if not b:
            return a
        if self.tabled:
            log = self._log
            la = log[a]
            d = log[b] - la
            if d < 0:
                d += self.q1
            z = self._zech[d]
            return 0 if z < 0 else self._exp[la + z]
        q, m = self.q, self.m
        return _undigits([(x + y) % q for x, y in zip(_digits(a, q, m), _digits(b, q, m))], q)

    def neg(self, a):
        if self.q == 2 or not a:
            return a
        q, m = self.q, self.m
        return _undigits([-x % q for x in _digits(a, q, m)], q)

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def mul(self, a, b):
        if not a or not b:
            return 0
        if self.tabled:
            return self._exp[self._log[a] + self._log[b]]
        return _polymulmod(a, b, self.q, self.m, self._mod)

    def inv(self, a):
        if not a:
            raise ZeroDivisionError("inverse of zero in GF(q^m)")
        if self.tabled:
            return self._exp[self.q1 - self._log[a]]
        return _polypowmod(a, self.order - 2, self.q, self.m, self._mod)

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def pow(self, a, e):
        if e < 0:
            a, e = self.inv(a), -e
        if not a:
            return 0 if e else 1
        if self.tabled:
            return self._exp[self._log[a] * e % self.q1]
        return _polypowmod(a, e % self.q1, self.q, self.m, self._mod)

    def alpha_pow(self, e):
        """``alpha**e`` for any integer ``e``."""
        if self.tabled:
            return self._exp[e % self.q1]
        return self.pow(self.alpha, e % self.q1)

    def frob(self, a, i):
        """Frobenius power ``a^(q^(i mod m))``."""
        i %= self.m
        if not i or not a:
            return a
        if self.tabled:
            return self._exp[self._log[a] * self._qpow[i] % self.q1]
        return _polypowmod(a, self.q**i, self.q, self.m, self._mod)

    def frob_table(self, i):
        """Lookup list ``t`` with ``t[a] == frob(a, i)`` (table fields only)."""
        i %= self.m
        t = self._frob.get(i)
        if t is None:
            if not self.tabled:
                raise ValueError("frobenius tables need a tabled field")
            exp, qi, q1 = self._exp, self._qpow[i], self.q1
            t = [0] + [exp[self._log[a] * qi % q1] for a in range(1, self.order)]
            self._frob[i] = t
        return t

    def random(self, rng):
        if self.q == 2:
            return rng.getrandbits(self.m)
        return rng.randrange(self.order)

    def digits(self, a):
        """Coordinates of ``a`` in the basis alpha^0..alpha^(m-1)."""
        return _digits(a, self.q, self.m)

    def from_digits(self, ds):
        return _undigits([d % self.q for d in ds], self.q)

    def check(self, a):
        if not 0 <= a < self.order:
            raise ValueError(f"{a} is not a canonical element of GF({self.q}^{self.m})")
        return a


@lru_cache(maxsize=None)
def ext_field_new(q, m):
    """The canonical GF(q^m): the smallest primitive monic modulus.

    Candidates ``x^m + c_{m-1} x^{m-1} + ... + c_0`` are scanned in increasing
    order of ``sum(c_i q^i)``; the first one with ``x`` primitive wins, so the
    same ``(q, m)`` always yields the same field.
    """
    if not (2 <= q <= 251 and is_prime(q)):
        raise NotPrime(f"q={q} is not a prime in [2, 251]")
    if not 1 <= m <= 24 or q**m > MAX_ORDER:
        raise DegreeOutOfRange(f"m={m} outside [1, 24] or q^m above 2^61")
    order = q**m - 1
    factors = prime_factors(order) if order > 1 else []
    for tail in range(1, q**m):
        mod = _digits(tail, q, m) + [1]
        if x_is_primitive(q, m, mod, factors):
            return ExtField(q, m, mod)
    raise NoPrimitivePolynomialFound(f"no primitive polynomial for q={q}, m={m}")


def ext_field_from_descriptor(desc):
    q, m = int(desc["q"]), int(desc["m"])
    mod = [int(c) for c in desc["modulus"]]
    canonical = ext_field_new(q, m)
    if canonical.modulus == tuple(c % q for c in mod):
        return canonical
    return ExtField(q, m, mod)


class FieldElem:
    """An element of an :class:`ExtField` with operator overloading."""

    __slots__ = ("field", "value")

    def __init__(self, field, value):
        if isinstance(value, FieldElem):
            value = value.value
        self.field = field
        self.value = field.check(int(value))

    def _other(self, other):
        if isinstance(other, FieldElem):
            if other.field is not self.field and other.field != self.field:
                raise FieldMismatch(f"{self.field!r} vs {other.field!r}")
            return other.value
        if isinstance(other, int):
            return self.field.check(other)
        return NotImplemented

    def _wrap(self, v):
        return FieldElem(self.field, v)

    def __add__(self, other):
        o = self._other(other)
        return NotImplemented if o is NotImplemented else self._wrap(self.field.add(self.value, o))

    __radd__ = __add__

    def __sub__(self, other):
        o = self._other(other)
        return NotImplemented if o is NotImplemented else self._wrap(self.field.sub(self.value, o))

    def __rsub__(self, other):
        o = self._other(other)
        return NotImplemented if o is NotImplemented else self._wrap(self.field.sub(o, self.value))

    def __mul__(self, other):
        o = self._other(other)
        return NotImplemented if o is NotImplemented else self._wrap(self.field.mul(self.value, o))

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._other(other)
        return NotImplemented if o is NotImplemented else self._wrap(self.field.div(self.value, o))

    def __neg__(self):
        return self._wrap(self.field.neg(self.value))

    def __pow__(self, e):
        return self._wrap(self.field.pow(self.value, e))

    def inverse(self):
        return self._wrap(self.field.inv(self.value))

    def frobenius(self, i):
        return self._wrap(self.field.frob(self.value, i))

    @property
    def coeffs(self):
        return self.field.digits(self.value)

    def __eq__(self, other):
        if isinstance(other, FieldElem):
            return self.field == other.field and self.value == other.value
        if isinstance(other, int):
            return self.value == other
        return NotImplemented

    def __hash__(self):
        return hash((self.field.q, self.field.modulus, self.value))

    def __int__(self):
        return self.value

    __index__ = __int__

    def __bool__(self):
        return self.value != 0

    def __repr__(self):
        return f"FieldElem({self.value}, GF({self.field.q}^{self.field.m}))"


def frobenius(a, i):
    """``a^(q^i)``; negative ``i`` gives the inverse automorphism."""
    return a.frobenius(i)


# -- matrices -------------------------------------------------------------------


class Mat:
    """Dense matrix of canonical integers over a single field."""

    __slots__ = ("field", "rows", "ncols")

    def __init__(self, field, rows, ncols=None):
        rows = [[int(x) for x in r] for r in rows]
        if ncols is None:
            if not rows:
                raise ValueError("ncols is required for a matrix without rows")
            ncols = len(rows[0])
        if any(len(r) != ncols for r in rows):
            raise ValueError("ragged matrix")
        self.field = field
        self.rows = rows
        self.ncols = ncols

    @classmethod
    def zeros(cls, field, nrows, ncols):
        return cls(field, [[0] * ncols for _ in range(nrows)], ncols)

    @classmethod
    def identity(cls, field, n):
        return cls(field, [[int(i == j) for j in range(n)] for i in range(n)], n)

    @property
    def nrows(self):
        return len(self.rows)

    @property
    def shape(self):
        return (len(self.rows), self.ncols)

    @property
    def T(self):
        return Mat(self.field, [list(c) for c in zip(*self.rows)] if self.rows else
                   [[] for _ in range(self.ncols)], self.nrows)

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def __eq__(self, other):
        return (isinstance(other, Mat) and self.field == other.field
                and self.ncols == other.ncols and self.rows == other.rows)

    def __repr__(self):
        return f"Mat({self.nrows}x{self.ncols}, {self.rows})"

    def apply(self, v):
        """Matrix-vector product ``M v``."""
        F = self.field
        out = []
        for row in self.rows:
            acc = 0
            for a, b in zip(row, v):
                if a and b:
                    acc = F.add(acc, F.mul(a, b))
            out.append(acc)
        return out


def _rref_generic(F, rows, ncols):
    A = [list(r) for r in rows]
    n = len(A)
    pivots = []
    r = 0
    for c in range(ncols):
        if r == n:
            break
        sel = next((i for i in range(r, n) if A[i][c]), None)
        if sel is None:
            continue
        A[r], A[sel] = A[sel], A[r]
        inv = F.inv(A[r][c])
        A[r] = [F.mul(inv, x) for x in A[r]]
        for i in range(n):
            f = A[i][c]
            if i != r and f:
                nf = F.neg(f)
                A[i] = [F.add(x, F.mul(nf, y)) if y else x for x, y in zip(A[i], A[r])]
        pivots.append(c)
        r += 1
    return A, r, pivots


def rref_rows(F, rows, ncols):
    """Dispatch RREF of raw rows to the best available kernel."""
    if isinstance(F, PrimeField):
        return kernels.rref_prime(rows, ncols, F.q)
    if F.tabled:
        return kernels.rref_table(rows, ncols, F.q, *F.ktables)
    return _rref_generic(F, rows, ncols)


def rref(M):
    """Reduced row echelon form: ``(R, rank, pivots)``.

    Pivot search is leftmost column first and, within a column, the first
    nonzero row at or below the current one.
    """
    R, rank, pivots = rref_rows(M.field, M.rows, M.ncols)
    return Mat(M.field, R, M.ncols), rank, list(pivots)


def rank(M):
    return rref(M)[1]


def _kernel_from_rref(F, R, rank, pivots, ncols):
    pivset = set(pivots)
    basis = []
    for free in range(ncols):
        if free in pivset:
            continue
        v = [0] * ncols
        v[free] = 1
        for r in range(rank):
            x = R[r][free]
            if x:
                v[pivots[r]] = F.neg(x)
        basis.append(v)
    return basis


def kernel_rows(F, rows, ncols):
    R, rk, pivots = rref_rows(F, rows, ncols)
    return _kernel_from_rref(F, R, rk, pivots, ncols)


def kernel_basis(M):
    """Basis of ``{v : M v^T = 0}``, one vector per free column in ascending order."""
    return Mat(M.field, kernel_rows(M.field, M.rows, M.ncols), M.ncols)


def solve_affine(M, b):
    """Solve ``M x = b``.

    Returns ``(x, K)`` with ``K`` a kernel basis of ``M``; ``x`` is ``None``
    when the system is inconsistent.
    """
    if len(b) != M.nrows:
        raise ValueError("right-hand side length must equal the row count")
    F = M.field
    aug = [list(r) + [int(x)] for r, x in zip(M.rows, b)]
    n = M.ncols
    R, rk, pivots = rref_rows(F, aug, n + 1)
    if pivots and pivots[-1] == n:
        x = None
        rk -= 1
        pivots = pivots[:-1]
    else:
        x = [0] * n
        for r, c in enumerate(pivots):
            x[c] = R[r][n]
    kern = _kernel_from_rref(F, R, rk, pivots, n)
    return x, Mat(F, kern, n)


def expand_to_base(F, v):
    """Coordinates over GF(q) of a vector over GF(q^m), components concatenated."""
    out = []
    for a in v:
        out.extend(F.digits(int(a)))
    return out
