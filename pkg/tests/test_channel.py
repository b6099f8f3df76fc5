import random
from collections import Counter

import pytest
from scipy.stats import chisquare

from fscode.algebra import ext_field_new
from fscode.channel import (ChannelParams, ReceivedWord, ambient_dim, random_full_rank, sample_deletion,
                            sample_error_space, transmit)
from fscode.errors import DimensionOverflow
from fscode.folded import encode, params_new
from fscode.linpoly import lp_random
from fscode.subspace import canonicalize, direct_sum, intersection_dim, subspace_distance


def _send(P, delta, gamma, seed):
    rng = random.Random(seed)
    f = lp_random(P.field, P.k, rng)
    cw = encode(P, f)
    rx = transmit(P.field, cw, ChannelParams(delta, gamma), rng)
    c = P.h + 1
    return canonicalize(P.field, cw.rows, c), canonicalize(P.field, rx.rows, c), rx


def test_noiseless(sim_code):
    V, U, _ = _send(sim_code, 0, 0, 1)
    assert U == V


def test_all_deleted(sim_code):
    _, U, rx = _send(sim_code, 3, 0, 2)
    assert U.dim == 0 and rx.n_r == 0


def test_two_insertions(sim_code):
    V, U, rx = _send(sim_code, 0, 2, 3)
    assert rx.n_r == 5
    assert subspace_distance(U, V) == 2


@pytest.mark.parametrize("q,m,h,n_t,k,s", [(2, 9, 3, 3, 4, 2), (3, 4, 2, 2, 2, 1), (2, 8, 1, 4, 2, 1)])
def test_dimensions(q, m, h, n_t, k, s):
    P = params_new(q, m, h, n_t, k, s)
    rng = random.Random(4)
    for t in range(1000 if q == 2 else 200):
        delta = rng.randrange(n_t + 1)
        gamma = rng.randrange(3)
        V, U, rx = _send(P, delta, gamma, t)
        assert rx.n_r == n_t - delta + gamma
        assert U.dim == rx.n_r  # rows independent
        assert intersection_dim(U, V) == n_t - delta


def test_insertions_stay_in_locator_span(sim_code):
    # first coordinates of all received rows lie in span{alpha^0, alpha^h, alpha^2h}
    F = sim_code.field
    span = {0}
    for j in range(sim_code.n_t):
        span |= {x ^ F.alpha_pow(j * sim_code.h) for x in span}
    for seed in range(200):
        _, _, rx = _send(sim_code, 0, 2, seed)
        assert all(r[0] in span for r in rx.rows)


def test_sample_deletion_edges():
    F = ext_field_new(2, 4)
    V = canonicalize(F, [[1, 0], [0, 1], [2, 0]], 2)
    rng = random.Random(5)
    assert sample_deletion(V, 0, rng) == V
    assert sample_deletion(V, 3, rng).dim == 0


def test_sample_deletion_uniform_over_lines():
    F = ext_field_new(2, 4)
    V = canonicalize(F, [[1, 0], [0, 1]], 2)
    rng = random.Random(6)
    counts = Counter(sample_deletion(V, 1, rng).rows for _ in range(10_000))
    assert len(counts) == 3  # [2 choose 1]_2 lines
    assert chisquare(list(counts.values())).pvalue > 1e-3


def test_error_space():
    F = ext_field_new(2, 3)
    rng = random.Random(7)
    V = canonicalize(F, [[1, 0], [0, 1]], 2)
    assert sample_error_space(V, 0, rng).dim == 0
    N = ambient_dim(F, 2)
    E = sample_error_space(V, N - V.dim, rng)
    assert direct_sum(V, E).dim == N
    for _ in range(100):
        E = sample_error_space(V, 2, rng)
        assert E.dim == 2 and intersection_dim(V, E) == 0
    with pytest.raises(DimensionOverflow):
        sample_error_space(V, N - V.dim + 1, rng)


def test_overflow_in_transmit():
    P = params_new(2, 4, 2, 2, 2, 1)
    cw = encode(P, lp_random(P.field, 2, random.Random(0)))
    with pytest.raises(DimensionOverflow):
        transmit(P.field, cw, ChannelParams(0, P.N - 1), random.Random(0))


def test_random_full_rank():
    rng = random.Random(8)
    for q in (2, 3):
        for _ in range(50):
            A = random_full_rank(q, 3, 5, rng)
            F = ext_field_new(q, 1)
            assert canonicalize(F, A, 5).dim == 3


def test_received_json(sim_code):
    _, _, rx = _send(sim_code, 0, 2, 9)
    d = rx.to_json()
    assert d["n_r"] == 5
    assert ReceivedWord.from_json(sim_code.field, d) == rx
    with pytest.raises(ValueError):
        ReceivedWord.from_json(sim_code.field, {"n_r": 4, "rows": d["rows"]})
