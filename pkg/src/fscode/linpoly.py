"""Linearized polynomials over GF(q^m).

``LinPoly(F, [p0, p1, ...])`` is ``sum p_i x^(q^i)``. Coefficients are canonical
integers of ``F``; trailing zeros are stripped so the zero polynomial has an
empty coefficient tuple and ``qdeg`` None.
"""

from .algebra import FieldElem, Mat
from .errors import FieldMismatch


class LinPoly:
    __slots__ = ("field", "coeffs")

    def __init__(self, field, coeffs=()):
        cs = [int(c) for c in coeffs]
        while cs and not cs[-1]:
            cs.pop()
        self.field = field
        self.coeffs = tuple(cs)

    @classmethod
    def identity(cls, field):
        return cls(field, [1])

    @classmethod
    def scalar(cls, field, c):
        """The map ``x -> c*x``."""
        return cls(field, [c])

    @property
    def qdeg(self):
        return len(self.coeffs) - 1 if self.coeffs else None

    def is_zero(self):
        return not self.coeffs

    def coeff(self, i):
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def _same(self, other):
        if other.field is not self.field and other.field != self.field:
            raise FieldMismatch("linearized polynomials over different fields")

    def __call__(self, x):
        return lp_eval(self, x)

    def __add__(self, other):
        self._same(other)
        F = self.field
        n = max(len(self.coeffs), len(other.coeffs))
        return LinPoly(F, [F.add(self.coeff(i), other.coeff(i)) for i in range(n)])

    def __sub__(self, other):
        self._same(other)
        F = self.field
        n = max(len(self.coeffs), len(other.coeffs))
        return LinPoly(F, [F.sub(self.coeff(i), other.coeff(i)) for i in range(n)])

    def __neg__(self):
        return LinPoly(self.field, [self.field.neg(c) for c in self.coeffs])

    def __matmul__(self, other):
        return lp_compose(self, other)

    def __eq__(self, other):
        return isinstance(other, LinPoly) and self.field == other.field and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"LinPoly({list(self.coeffs)})"

    def to_json(self):
        return list(self.coeffs)

    @classmethod
    def from_json(cls, field, data):
        return cls(field, [field.check(int(c)) for c in data])


def lp_eval(p, x):
    """``sum p_i * x^(q^i)``. Accepts a canonical integer or a FieldElem."""
    F = p.field
    if isinstance(x, FieldElem):
        return FieldElem(F, lp_eval(p, x.value))
    if not x:
        return 0
    acc = 0
    for i, c in enumerate(p.coeffs):
        if c:
            acc = F.add(acc, F.mul(c, F.frob(x, i)))
    return acc


def lp_compose(f, g):
    """``f(g(x))``: coefficient ``t`` is ``sum_{i+j=t} f_i * g_j^(q^i)``."""
    f._same(g)
    F = f.field
    if f.is_zero() or g.is_zero():
        return LinPoly(F)
    out = [0] * (len(f.coeffs) + len(g.coeffs) - 1)
    for i, fi in enumerate(f.coeffs):
        if not fi:
            continue
        for j, gj in enumerate(g.coeffs):
            if gj:
                out[i + j] = F.add(out[i + j], F.mul(fi, F.frob(gj, i)))
    return LinPoly(F, out)


def moore_matrix(F, r, a):
    """``r x n`` matrix with entry ``(i, j) = a_j^(q^i)``."""
    if r < 1 or not a:
        raise ValueError("moore_matrix needs r >= 1 and a nonempty vector")
    a = [int(x) for x in a]
    return Mat(F, [[F.frob(x, i) for x in a] for i in range(r)], len(a))


def lp_random(F, max_qdeg_exclusive, rng):
    """Uniform polynomial with q-degree below ``max_qdeg_exclusive``."""
    if max_qdeg_exclusive < 1:
        raise ValueError("bound must be at least 1")
    return LinPoly(F, [F.random(rng) for _ in range(max_qdeg_exclusive)])


class OrdPoly:
    """Ordinary polynomial ``sum c_i x^i`` over GF(q^m); used for root finding."""

    __slots__ = ("field", "coeffs")

    def __init__(self, field, coeffs):
        self.field = field
        self.coeffs = tuple(int(c) for c in coeffs)

    def __call__(self, x):
        F = self.field
        acc = 0
        for c in reversed(self.coeffs):
            acc = F.add(F.mul(acc, x), c)
        return acc

    def __repr__(self):
        return f"OrdPoly({list(self.coeffs)})"
