"""Operator channel: ``U = H ⊕ E`` with H a random subspace of the sent space.

Every randomized function takes an explicit ``random.Random`` handle.
"""

from dataclasses import dataclass

from .algebra import _digits
from .errors import DimensionOverflow
from .subspace import Echelon, SubspaceBasis, canonicalize, pack


@dataclass(frozen=True)
class ChannelParams:
    """``delta`` deletions and ``gamma`` insertions.

    With ``restrict_locators`` the first coordinate of inserted vectors is drawn
    from the span of the codeword's locators, so insertions live in the same
    ``n_t + h*m``-dimensional ambient space as the code.
    """

    delta: int = 0
    gamma: int = 0
    restrict_locators: bool = True


@dataclass(frozen=True)
class ReceivedWord:
    rows: tuple

    @property
    def n_r(self):
        return len(self.rows)

    def to_json(self):
        return {"n_r": self.n_r, "rows": [list(r) for r in self.rows]}

    @classmethod
    def from_json(cls, F, data):
        rows = tuple(tuple(F.check(int(x)) for x in r) for r in data["rows"])
        if "n_r" in data and int(data["n_r"]) != len(rows):
            raise ValueError("n_r does not match the number of rows")
        return cls(rows)


def random_full_rank(q, nrows, ncols, rng):
    """Uniform full-row-rank ``nrows x ncols`` matrix over GF(q), by rejection."""
    if nrows > ncols:
        raise ValueError("cannot have full row rank with more rows than columns")
    ech = Echelon(q, ncols)
    rows = []
    while len(rows) < nrows:
        if q == 2:
            v = rng.getrandbits(ncols) if ncols else 0
        else:
            v = rng.randrange(q**ncols)
        if ech.add(v):
            rows.append(_digits(v, q, ncols))
    return rows


def combine(F, coeffs, rows):
    """GF(q)-linear combination ``sum coeffs[j] * rows[j]`` of GF(q^m) vectors."""
    out = [0] * len(rows[0])
    for lam, row in zip(coeffs, rows):
        if not lam:
            continue
        if F.q == 2:
            out = [a ^ b for a, b in zip(out, row)]
        else:
            out = [F.add(a, F.mul(lam, b)) for a, b in zip(out, row)]
    return out


def _deletion_rows(F, rows, delta, rng):
    n = len(rows)
    if delta > n:
        raise ValueError(f"delta = {delta} exceeds dim V = {n}")
    A = random_full_rank(F.q, n - delta, n, rng)
    return [combine(F, a, rows) for a in A]


def sample_deletion(V, delta, rng):
    """Uniformly random ``(dim V - delta)``-dimensional subspace of ``V``."""
    F = V.field
    if delta > V.dim:
        raise ValueError(f"delta = {delta} exceeds dim V = {V.dim}")
    if delta == V.dim:
        return SubspaceBasis(F, V.c, ())
    return canonicalize(F, _deletion_rows(F, V.vectors(), delta, rng), V.c)


def ambient_dim(F, c, locators=None):
    first = F.m if locators is None else len(locators)
    return first + (c - 1) * F.m


def _error_rows(F, c, v_echelon, gamma, rng, locators):
    N = ambient_dim(F, c, locators)
    if gamma + v_echelon.dim > N:
        raise DimensionOverflow(f"gamma = {gamma} with dim V = {v_echelon.dim} exceeds N = {N}")
    ech = v_echelon.copy()
    out = []
    while len(out) < gamma:
        if locators is None:
            first = F.random(rng)
        else:
            first = combine(F, [rng.randrange(F.q) for _ in locators], [[a] for a in locators])[0]
        v = [first] + [F.random(rng) for _ in range(c - 1)]
        if ech.add(pack(F, v)):
            out.append(v)
    return out


def sample_error_space(V, gamma, rng, locators=None):
    """``gamma``-dimensional space meeting ``V`` only in zero.

    ``locators`` restricts the first coordinate to their GF(q)-span; ``None``
    leaves the whole of GF(q^m)^c as ambient space.
    """
    F = V.field
    rows = _error_rows(F, V.c, V.echelon(), gamma, rng, locators)
    return canonicalize(F, rows, V.c)


def transmit(F, codeword, params, rng):
    """Send the row space of ``codeword`` through the operator channel."""
    rows = [list(r) for r in codeword.rows]
    n_t = len(rows)
    c = len(rows[0])
    if params.delta > n_t:
        raise ValueError(f"delta = {params.delta} exceeds n_t = {n_t}")
    H = _deletion_rows(F, rows, params.delta, rng) if params.delta < n_t else []
    E = []
    if params.gamma:
        locators = [r[0] for r in rows] if params.restrict_locators else None
        E = _error_rows(F, c, Echelon(F.q, c * F.m, [pack(F, r) for r in rows]),
                        params.gamma, rng, locators)
    stacked = H + E
    n_r = len(stacked)
    if not n_r:
        return ReceivedWord(())
    T = random_full_rank(F.q, n_r, n_r, rng)
    return ReceivedWord(tuple(tuple(combine(F, t, stacked)) for t in T))
