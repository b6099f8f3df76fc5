import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from fscode.algebra import ext_field_new, rref
from fscode.errors import AmbientMismatch, NontrivialIntersection
from fscode.subspace import (Echelon, SubspaceBasis, canonicalize, direct_sum, intersection_dim,
                             pack, subspace_distance, subspace_sum, sum_dim, unpack)

from oracles import span_f2, span_fq

F2 = ext_field_new(2, 1)
F3 = ext_field_new(3, 1)
F8 = ext_field_new(2, 3)


def test_pack_unpack():
    for F in (ext_field_new(2, 9), ext_field_new(3, 2)):
        rng = random.Random(1)
        for _ in range(50):
            v = [F.random(rng) for _ in range(4)]
            assert unpack(F, pack(F, v), 4) == v


def test_canonicalize_examples():
    assert canonicalize(F8, [[0, 0], [0, 0]], 2).dim == 0
    U = canonicalize(F8, [[1, 0], [0, 1], [2, 0]], 2)
    assert U.dim == 3
    assert canonicalize(F3, [[1, 2], [2, 1]], 2).dim == 1
    with pytest.raises(ValueError):
        canonicalize(F8, [[1, 0, 0]], 2)


def test_canonical_form_is_rref():
    F = ext_field_new(3, 2)
    rng = random.Random(2)
    vecs = [[F.random(rng) for _ in range(2)] for _ in range(3)]
    U = canonicalize(F, vecs, 2)
    M = U.matrix()
    R, rk, _ = rref(M)
    assert R == M and rk == U.dim


def test_distance_examples():
    U = canonicalize(F2, [[1, 0, 0]], 3)
    V = canonicalize(F2, [[0, 1, 0]], 3)
    assert subspace_distance(U, V) == 2
    assert subspace_distance(U, U) == 0
    W = canonicalize(F2, [[1, 0, 0], [0, 1, 0]], 3)
    assert subspace_distance(U, W) == 1
    with pytest.raises(AmbientMismatch):
        subspace_distance(U, canonicalize(F2, [[1, 0]], 2))


def test_direct_sum_examples():
    U = canonicalize(F2, [[1, 0, 0, 0], [0, 1, 0, 0]], 4)
    Z = canonicalize(F2, [], 4)
    assert direct_sum(U, Z) == U
    E = canonicalize(F2, [[0, 0, 1, 0], [0, 0, 0, 1]], 4)
    assert direct_sum(U, E).dim == 4
    with pytest.raises(NontrivialIntersection):
        direct_sum(U, canonicalize(F2, [[1, 1, 0, 0]], 4))


def _random_space(F, c, rng, maxdim):
    return canonicalize(F, [[F.random(rng) for _ in range(c)] for _ in range(rng.randrange(maxdim + 1))], c)


def _as_set(U):
    # element set via enumeration of all combinations of the basis (q = 2 packing)
    return span_f2(U.rows)


@settings(max_examples=100, deadline=None)
@given(st.integers(0, 2**32))
def test_metric_axioms_f2_6(seed):
    rng = random.Random(seed)
    F = ext_field_new(2, 3)
    U, V, W = (_random_space(F, 2, rng, 5) for _ in range(3))
    d = subspace_distance
    assert d(U, V) == d(V, U)
    assert (d(U, V) == 0) == (U == V)
    assert d(U, W) <= d(U, V) + d(V, W)
    # modular law and distance against element-set enumeration
    su, sv = _as_set(U), _as_set(V)
    inter = len(su & sv).bit_length() - 1
    assert intersection_dim(U, V) == inter
    assert sum_dim(U, V) + inter == U.dim + V.dim
    assert _as_set(subspace_sum(U, V)) == span_f2(list(su | sv))


@settings(max_examples=30, deadline=None)
@given(st.integers(0, 2**32))
def test_modular_law_odd_q(seed):
    rng = random.Random(seed)
    F = ext_field_new(3, 2)
    U, V = _random_space(F, 2, rng, 3), _random_space(F, 2, rng, 3)
    digits = lambda S: [[(r // 3**i) % 3 for i in range(4)] for r in S.rows]
    su, sv = span_fq(digits(U), 3, 4), span_fq(digits(V), 3, 4)
    inter = len(su & sv)
    assert 3 ** intersection_dim(U, V) == inter
    assert 3 ** U.dim == len(su)


def test_echelon_incremental():
    e = Echelon(2, 6)
    assert e.add(0b101) and e.add(0b011)
    assert not e.add(0b110)
    assert e.reduce(0b110) == 0 and e.dim == 2
    e3 = Echelon(3, 3)
    assert e3.add(1 + 2 * 3) and not e3.add(2 + 1 * 3)
    c = e3.copy()
    c.add(9)
    assert e3.dim == 1 and c.dim == 2


def test_equality_is_structural():
    F = ext_field_new(2, 4)
    a = canonicalize(F, [[1, 2], [3, 4]], 2)
    b = canonicalize(F, [[1 ^ 3, 2 ^ 4], [3, 4]], 2)
    assert a == b and hash(a) == hash(b)
    assert isinstance(a, SubspaceBasis) and a.ambient_dim == 8
