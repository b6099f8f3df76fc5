"""h-folded subspace codes: parameters, encoder and closed-form radii."""

from dataclasses import dataclass
from fractions import Fraction
from math import ceil

from .algebra import ext_field_new
from .errors import BadS, DegreeTooLarge, FoldingTooLarge, MessageDegreeTooLarge
from .linpoly import LinPoly, lp_eval


@dataclass(frozen=True)
class FSCodeParams:
    field: object
    h: int
    n_t: int
    k: int
    s: int

    @property
    def q(self):
        return self.field.q

    @property
    def m(self):
        return self.field.m

    @property
    def N(self):
        """Dimension of the ambient space ``n_t + h*m``."""
        return self.n_t + self.h * self.m

    @property
    def rate(self):
        return Fraction(self.k * self.m, self.n_t * (self.n_t + self.h * self.m))

    @property
    def rate_float(self):
        return float(self.rate)

    def to_json(self):
        return {"q": self.q, "m": self.m, "h": self.h, "n_t": self.n_t, "k": self.k, "s": self.s}

    @classmethod
    def from_json(cls, d):
        return params_new(int(d["q"]), int(d["m"]), int(d["h"]), int(d["n_t"]), int(d["k"]), int(d["s"]))


def params_new(q, m, h, n_t, k, s):
    if h < 1 or n_t < 1:
        raise ValueError("h and n_t must be positive")
    if h * n_t > m:
        raise FoldingTooLarge(f"h*n_t = {h * n_t} exceeds m = {m}")
    if not 1 <= k <= h * n_t:
        raise DegreeTooLarge(f"k = {k} outside [1, h*n_t = {h * n_t}]")
    if not 1 <= s <= h:
        raise BadS(f"s = {s} outside [1, h = {h}]")
    return FSCodeParams(ext_field_new(q, m), h, n_t, k, s)


@dataclass(frozen=True)
class Codeword:
    """Basis rows ``(alpha^(jh), f(alpha^(jh)), ..., f(alpha^((j+1)h-1)))``."""

    rows: tuple

    def to_json(self):
        return {"n_t": len(self.rows), "rows": [list(r) for r in self.rows]}


def encode(params, f):
    if f.qdeg is not None and f.qdeg >= params.k:
        raise MessageDegreeTooLarge(f"deg_q f = {f.qdeg} but k = {params.k}")
    F, h = params.field, params.h
    rows = []
    for j in range(params.n_t):
        loc = F.alpha_pow(j * h)
        rows.append((loc,) + tuple(lp_eval(f, F.alpha_pow(j * h + i)) for i in range(h)))
    return Codeword(tuple(rows))


def message_from_json(params, data):
    f = LinPoly.from_json(params.field, data)
    if f.qdeg is not None and f.qdeg >= params.k:
        raise MessageDegreeTooLarge(f"deg_q f = {f.qdeg} but k = {params.k}")
    return f


def min_distance(params):
    return 2 * (params.n_t - ceil(params.k / params.h) + 1)


def _radius_terms(params):
    s, h = params.s, params.h
    w = h - s + 1
    return s * (params.n_t * w - (params.k - 1)), w


def list_radius(params):
    """Largest integer ``tau`` with ``tau < s(n_t - (k-1)/(h-s+1))``.

    Negative when no combination of insertions and deletions is covered.
    """
    num, den = _radius_terms(params)
    return -(-num // den) - 1


def unique_radius(params, mu):
    if mu < 1:
        raise ValueError("mu must be at least 1")
    num, den = _radius_terms(params)
    return (num - mu) // den


def within_list_radius(params, gamma, delta):
    return gamma + params.s * delta <= list_radius(params)


def within_unique_radius(params, gamma, delta, mu):
    return gamma + params.s * delta <= unique_radius(params, mu)


def tau_f(h, s, R):
    """Normalized list-decoding radius for ``n_t*h ~ m``, clipped at zero."""
    return max(0.0, s * (1 - (1 / h + h) / (h - s + 1) * R))


def tau_u(h, s, mu, R, n_t):
    return max(0.0, s * (1 - (1 / h + h) / (h - s + 1) * R) - mu / ((h - s + 1) * n_t))


def tau_kk(R):
    return max(0.0, 1 - 2 * R)


def normalized_radii(h, s, mu, grid, n_t=None):
    """Rows ``(R, tau_f, tau_u)`` over a rate grid.

    ``n_t`` enters only the unique-decoding offset; it defaults to ``h``.
    """
    if not 1 <= s <= h:
        raise BadS(f"s = {s} outside [1, h = {h}]")
    n_t = h if n_t is None else n_t
    return [(R, tau_f(h, s, R), tau_u(h, s, mu, R, n_t)) for R in grid]
