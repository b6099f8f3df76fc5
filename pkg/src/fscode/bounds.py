"""Grassmannian counting and the list-size / failure-probability bounds.

Counts are exact Python integers; the bounds come back both as exact
``Fraction`` values and as floats.
"""

from dataclasses import dataclass
from fractions import Fraction
from math import log10

from .errors import OutOfRange, RadiusViolation
from .folded import list_radius


def gaussian_binom(n, ell, q):
    """Number of ``ell``-dimensional subspaces of GF(q)^n."""
    if not 0 <= ell <= n:
        raise OutOfRange(f"need 0 <= ell <= n, got n={n}, ell={ell}")
    num = den = 1
    for i in range(ell):
        num *= q ** (n - i) - 1
        den *= q ** (ell - i) - 1
    return num // den


def _binom0(n, ell, q):
    return gaussian_binom(n, ell, q) if 0 <= ell <= n else 0


def shell_count(n_r, n_t, t, N, q):
    """``n_t``-subspaces at distance exactly ``t`` from a fixed ``n_r``-subspace of GF(q)^N."""
    if t < 0:
        return 0
    twice_u = n_r - n_t + t
    if twice_u % 2:
        return 0
    u = twice_u // 2
    if not (0 <= u <= n_r and 0 <= t - u <= N - n_r):
        return 0
    return q ** (u * (t - u)) * _binom0(n_r, u, q) * _binom0(N - n_r, t - u, q)


def ball_volume(n_r, n_t, tau, N, q):
    """``n_t``-subspaces within distance ``tau`` of a fixed ``n_r``-subspace."""
    if tau < 0:
        return 0
    lo = -(-(n_r - n_t) // 2)
    hi = (n_r - n_t + tau) // 2
    total = 0
    for j in range(max(lo, 0, n_r - n_t), hi + 1):
        total += q ** (j * (j - n_r + n_t)) * _binom0(n_r, j, q) * _binom0(N - n_r, j - n_r + n_t, q)
    return total


@dataclass(frozen=True)
class AvgListBound:
    exponent: int        # mk + (n_r - u_m)(n_t + u_m - N)
    excess: Fraction     # 16 (tau/2 + 1) q^exponent
    exact_excess: Fraction  # (q^mk - 1) * ball / [N, n_t]_q
    log10_excess: float

    @property
    def bound(self):
        return 1 + self.excess

    @property
    def bound_float(self):
        return 1.0 + 10.0**self.log10_excess


def avg_list_bound(params, n_r, tau):
    """Upper bound on the average list size at radius ``tau = gamma + s*delta``."""
    if tau < 0 or tau > list_radius(params):
        raise RadiusViolation(f"tau = {tau} outside [0, list radius {list_radius(params)}]")
    q, m, k, n_t, N = params.q, params.m, params.k, params.n_t, params.N
    u_m = (n_r - n_t + tau) // 2
    e = m * k + (n_r - u_m) * (n_t + u_m - N)
    factor = 16 * (Fraction(tau, 2) + 1)
    excess = factor * (Fraction(q) ** e)
    exact = Fraction((q ** (m * k) - 1) * ball_volume(n_r, n_t, tau, N, q), gaussian_binom(N, n_t, q))
    return AvgListBound(e, excess, exact, log10(factor) + e * log10(q))


def failure_bound(k, q, m, exponent):
    """``k (k/q^m)^exponent`` as an exact fraction."""
    if exponent < 1:
        raise ValueError("exponent must be at least 1")
    return k * Fraction(k, q**m) ** exponent
