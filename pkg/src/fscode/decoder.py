"""Interpolation-based list and probabilistic unique decoding.

Pipeline: received basis -> interpolation tuples -> kernel of the Moore-type
interpolation matrix (a basis of polynomials ``Q(x, y_1..y_s)``) -> block
lower-triangular root-finding system for the twisted message coefficients
``f_j^(q^-j)`` -> forward substitution.
"""

from dataclasses import dataclass

from .algebra import Mat, kernel_rows
from .errors import DegreeTooSmall
from .folded import encode, list_radius
from .linpoly import LinPoly, lp_compose
from .subspace import Echelon, pack

UNIQUE = "unique"
LIST = "list"
FAILURE = "failure"

RANK_DEFICIENT = "rank-deficient"
INCONSISTENT = "inconsistent"
LIST_CAP = "list-cap"

DEFAULT_LIST_CAP = 1 << 20


@dataclass(frozen=True)
class DecodeResult:
    status: str
    messages: tuple = ()
    reason: str | None = None
    D: int | None = None
    d_I: int | None = None

    @property
    def message(self):
        return self.messages[0] if self.status == UNIQUE else None

    def contains(self, f):
        return self.status != FAILURE and f in self.messages

    def to_json(self):
        out = {"status": self.status, "D": self.D, "d_I": self.d_I}
        if self.status == FAILURE:
            out["reason"] = self.reason
        else:
            out["messages"] = [m.to_json() for m in self.messages]
        return out


@dataclass(frozen=True)
class InterpolationTupleSet:
    """Rows ``(x_j alpha^i, y_{j,i}, ..., y_{j,i+s-1})``, j outer, i inner."""

    tuples: tuple
    s: int

    def __len__(self):
        return len(self.tuples)

    def column(self, ell):
        return [t[ell] for t in self.tuples]


def build_tuples(F, received, h, s):
    if not 1 <= s <= h:
        raise ValueError(f"s = {s} outside [1, h = {h}]")
    shifts = [F.alpha_pow(i) for i in range(h - s + 1)]
    out = []
    for row in received.rows:
        if len(row) != h + 1:
            raise ValueError(f"received row has {len(row)} entries, expected h+1 = {h + 1}")
        x = row[0]
        for i, a in enumerate(shifts):
            out.append((F.mul(x, a),) + tuple(row[1 + i:1 + i + s]))
    return InterpolationTupleSet(tuple(out), s)


def degree_bound(n_r, h, s, k, mu):
    """``ceil((n_r(h-s+1) + s(k-1) + mu) / (s+1))``."""
    if mu < 1:
        raise ValueError("mu must be at least 1")
    return -(-(n_r * (h - s + 1) + s * (k - 1) + mu) // (s + 1))


def _interp_rows(F, tuples, D, k):
    if D <= k - 1:
        raise DegreeTooSmall(f"D = {D} must exceed k - 1 = {k - 1}")
    d1 = D - k + 1
    if F.tabled:
        tabs = [F.frob_table(d) for d in range(D)]
        return [[tabs[d][t[0]] for d in range(D)]
                + [tabs[d][y] for y in t[1:] for d in range(d1)]
                for t in tuples.tuples]
    frob = F.frob
    return [[frob(t[0], d) for d in range(D)] + [frob(y, d) for y in t[1:] for d in range(d1)]
            for t in tuples.tuples]


def build_interpolation_matrix(F, tuples, D, k):
    """The ``n_r(h-s+1) x (D(s+1) - s(k-1))`` system whose kernel holds the Q's."""
    s = tuples.s
    return Mat(F, _interp_rows(F, tuples, D, k), D * (s + 1) - s * (k - 1))


@dataclass(frozen=True)
class InterpolationBasis:
    """Kernel vectors laid out as ``(q_0,0..q_0,D-1 | q_1,0..q_1,D-k | ... | q_s,...)``."""

    field: object
    s: int
    D: int
    k: int
    vectors: tuple

    @property
    def d_I(self):
        return len(self.vectors)

    def coeff(self, vec, ell, i):
        """``q_{ell,i}`` of one kernel vector; zero beyond the degree bound."""
        if ell == 0:
            return vec[i] if i < self.D else 0
        d1 = self.D - self.k + 1
        return vec[self.D + (ell - 1) * d1 + i] if i < d1 else 0

    def polys(self):
        """Each basis element as the tuple ``(Q_0, Q_1, ..., Q_s)``."""
        D, d1 = self.D, self.D - self.k + 1
        out = []
        for v in self.vectors:
            parts = [LinPoly(self.field, v[:D])]
            for ell in range(self.s):
                parts.append(LinPoly(self.field, v[D + ell * d1:D + (ell + 1) * d1]))
            out.append(tuple(parts))
        return out


def interpolate_basis(F, tuples, D, k):
    s = tuples.s
    ncols = D * (s + 1) - s * (k - 1)
    vecs = kernel_rows(F, _interp_rows(F, tuples, D, k), ncols)
    return InterpolationBasis(F, s, D, k, tuple(tuple(v) for v in vecs))


def verify_root_identity(Q, f, params):
    """True iff ``Q_0(x) + sum_l Q_l(f(alpha^(l-1) x))`` is the zero polynomial."""
    F = params.field
    P = Q[0]
    for ell in range(1, len(Q)):
        shifted = lp_compose(f, LinPoly.scalar(F, F.alpha_pow(ell - 1)))
        P = P + lp_compose(Q[ell], shifted)
    return P.is_zero()


@dataclass(frozen=True)
class RootFindingSystem:
    """Block lower-triangular system ``B f' = -q`` in ``f'_j = f_j^(q^-j)``.

    ``blocks[j][c]`` (``c <= j``) is the column block ``b_{j-c,j}^(q^-j)`` with
    one entry per interpolation polynomial; ``rhs[j]`` is ``q_{0,j}^(q^-j)``.
    """

    field: object
    k: int
    d_I: int
    blocks: tuple
    rhs: tuple

    def diagonal_zero(self, j):
        return not any(self.blocks[j][j])

    def matrix(self):
        rows = []
        for j in range(self.k):
            for ell in range(self.d_I):
                rows.append([self.blocks[j][c][ell] if c <= j else 0 for c in range(self.k)])
        return Mat(self.field, rows, self.k)

    def rhs_vector(self):
        return [x for block in self.rhs for x in block]


def build_root_system(basis, params, which=None):
    """Root-finding system from the basis polynomials selected by ``which`` (default all)."""
    F, k, s = basis.field, params.k, params.s
    vecs = basis.vectors if which is None else [basis.vectors[i] for i in which]
    conj = [F.frob(F.alpha, t) for t in range(k)]
    cpow = [[F.pow(a, e) for e in range(s)] for a in conj]
    coeff = basis.coeff
    # B_i(a) = sum_l q_{l,i} a^(l-1), per polynomial
    qcoef = [[[coeff(v, ell, i) for ell in range(1, s + 1)] for i in range(k)] for v in vecs]
    frob = F.frob
    blocks = []
    rhs = []
    for j in range(k):
        pw = cpow[j]
        row = []
        for c in range(j + 1):
            i = j - c
            entry = []
            for qc in qcoef:
                acc = 0
                for a, b in zip(qc[i], pw):
                    if a:
                        acc = F.add(acc, F.mul(a, b))
                entry.append(frob(acc, -j))
            row.append(tuple(entry))
        blocks.append(tuple(row))
        rhs.append(tuple(frob(coeff(v, 0, j), -j) for v in vecs))
    return RootFindingSystem(F, k, len(vecs), tuple(blocks), tuple(rhs))


def _step(F, system, j, fp):
    """Residuals ``-q_j - sum_{c<j} B[j][c] f'_c`` for block row ``j``."""
    blocks = system.blocks[j]
    res = []
    for ell in range(system.d_I):
        acc = F.neg(system.rhs[j][ell])
        for c in range(j):
            b = blocks[c][ell]
            if b and fp[c]:
                acc = F.sub(acc, F.mul(b, fp[c]))
        res.append(acc)
    return res


def _solve_block(F, diag, res):
    """Value of ``f'_j`` from one block, or None if its equations disagree."""
    piv = next(ell for ell, d in enumerate(diag) if d)
    x = F.div(res[piv], diag[piv])
    for d, r in zip(diag, res):
        if F.mul(d, x) != r:
            return None
    return x


def _untwist(F, fp):
    return LinPoly(F, [F.frob(x, j) for j, x in enumerate(fp)])


def solve_root_system(system, mode=UNIQUE, accept=None, cap=DEFAULT_LIST_CAP):
    """Forward substitution.

    Unique mode fails with ``rank-deficient`` when some diagonal block vanishes
    and with ``inconsistent`` when a block's equations disagree. List mode lets
    each vanishing diagonal block range over the whole field and keeps the
    completions for which ``accept(f)`` holds.
    """
    F, k = system.field, system.k
    zero_diag = [system.diagonal_zero(j) for j in range(k)]
    if mode == UNIQUE:
        if any(zero_diag):
            return DecodeResult(FAILURE, reason=RANK_DEFICIENT)
        fp = []
        for j in range(k):
            x = _solve_block(F, system.blocks[j][j], _step(F, system, j, fp))
            if x is None:
                return DecodeResult(FAILURE, reason=INCONSISTENT)
            fp.append(x)
        return DecodeResult(UNIQUE, (_untwist(F, fp),))

    if F.order ** sum(zero_diag) > cap:
        return DecodeResult(FAILURE, reason=LIST_CAP)
    solutions = []
    stack = [[]]
    while stack:
        fp = stack.pop()
        j = len(fp)
        if j == k:
            solutions.append(fp)
            continue
        res = _step(F, system, j, fp)
        if zero_diag[j]:
            if not any(res):
                stack.extend(fp + [x] for x in range(F.order - 1, -1, -1))
            continue
        x = _solve_block(F, system.blocks[j][j], res)
        if x is not None:
            stack.append(fp + [x])
    if not solutions:
        return DecodeResult(FAILURE, reason=INCONSISTENT)
    cands = [_untwist(F, fp) for fp in solutions]
    if accept is not None:
        cands = [f for f in cands if accept(f)]
    return DecodeResult(LIST, tuple(sorted(cands, key=lambda f: f.coeffs)))


def _root_selection(d_I, mu, root_polys):
    if root_polys == "all":
        return None
    if root_polys == "mu":
        return list(range(min(mu, d_I)))
    raise ValueError(f"root_polys must be 'mu' or 'all', not {root_polys!r}")


def interpolate(received, params, mu):
    """Interpolation stage shared by both decoders: ``(D, basis)``."""
    F = params.field
    tuples = build_tuples(F, received, params.h, params.s)
    D = degree_bound(received.n_r, params.h, params.s, params.k, mu)
    basis = interpolate_basis(F, tuples, D, params.k)
    # every kernel vector respects deg_q Q_0 < D by construction, so the
    # degree filter of the unique decoder keeps the whole basis
    return D, basis


def decode_unique(received, params, mu=1, root_polys="mu"):
    """Probabilistic unique decoding.

    ``root_polys="mu"`` sets up root finding with the first ``mu`` basis
    polynomials; ``"all"`` uses the full interpolation basis.
    """
    D, basis = interpolate(received, params, mu)
    if not basis.d_I:
        return DecodeResult(FAILURE, reason=RANK_DEFICIENT, D=D, d_I=0)
    system = build_root_system(basis, params, _root_selection(basis.d_I, mu, root_polys))
    res = solve_root_system(system, UNIQUE)
    return DecodeResult(res.status, res.messages, res.reason, D, basis.d_I)


def candidate_filter(received, params):
    """Predicate accepting messages whose codeword is within the list radius of ``received``."""
    F = params.field
    c = params.h + 1
    U = Echelon(F.q, c * F.m, [pack(F, list(r)) for r in received.rows])
    n_r, n_t, s = U.dim, params.n_t, params.s
    radius = list_radius(params)

    def accept(f):
        e = U.copy()
        for row in encode(params, f).rows:
            e.add(pack(F, list(row)))
        w = n_r + n_t - e.dim
        return (n_r - w) + s * (n_t - w) <= radius

    return accept


def decode_list(received, params, cap=DEFAULT_LIST_CAP, root_polys="all"):
    """List decoding with ``mu = 1``; candidates are verified by re-encoding."""
    D, basis = interpolate(received, params, 1)
    if not basis.d_I:
        return DecodeResult(FAILURE, reason=RANK_DEFICIENT, D=D, d_I=0)
    system = build_root_system(basis, params, _root_selection(basis.d_I, 1, root_polys))
    res = solve_root_system(system, LIST, accept=candidate_filter(received, params), cap=cap)
    return DecodeResult(res.status, res.messages, res.reason, D, basis.d_I)
