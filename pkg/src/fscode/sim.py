"""Seeded Monte Carlo harness.

Trial ``i`` of a run draws everything from ``random.Random(trial_seed(master, i))``,
so the statistics depend only on the configuration and the master seed, not on
how trials are split across worker processes.
"""

import json
import random
import time
from collections import Counter
from dataclasses import asdict, dataclass, field, fields
from multiprocessing import get_context

from .channel import ChannelParams, transmit
from .decoder import FAILURE, INCONSISTENT, LIST_CAP, RANK_DEFICIENT, UNIQUE, decode_list, decode_unique
from .errors import ConfigInvalid, FSCodeError
from .folded import (encode, list_radius, normalized_radii, params_new, tau_kk,
                     unique_radius)
from .linpoly import lp_random

MASK64 = (1 << 64) - 1


def trial_seed(master_seed, index):
    """SplitMix64 finalizer applied to ``master + (index+1) * golden``."""
    z = (master_seed + (index + 1) * 0x9E3779B97F4A7C15) & MASK64
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
    return z ^ (z >> 31)


@dataclass(frozen=True)
class SimConfig:
    q: int = 2
    m: int = 9
    h: int = 3
    n_t: int = 3
    k: int = 4
    s: int = 2
    delta: int = 0
    gamma: int = 2
    mode: str = "unique"
    mu: int = 1
    trials: int = 1000
    master_seed: int = 0
    workers: int = 1
    root_polys: str | None = None

    def __post_init__(self):
        if self.trials < 1:
            raise ConfigInvalid("trials must be at least 1")
        if self.mode not in ("unique", "list"):
            raise ConfigInvalid(f"mode must be 'unique' or 'list', not {self.mode!r}")
        if self.mu < 1:
            raise ConfigInvalid("mu must be at least 1")
        if self.workers < 1:
            raise ConfigInvalid("workers must be at least 1")
        if not 0 <= self.master_seed <= MASK64:
            raise ConfigInvalid("master_seed must fit in 64 bits")
        if self.delta < 0 or self.gamma < 0 or self.delta > self.n_t:
            raise ConfigInvalid("need 0 <= delta <= n_t and gamma >= 0")
        if self.root_polys not in (None, "mu", "all"):
            raise ConfigInvalid("root_polys must be 'mu' or 'all'")
        try:
            self.params()
        except FSCodeError as e:
            raise ConfigInvalid(str(e)) from e

    def params(self):
        return params_new(self.q, self.m, self.h, self.n_t, self.k, self.s)

    @property
    def tau(self):
        return self.gamma + self.s * self.delta

    def active_radius(self):
        P = self.params()
        return unique_radius(P, self.mu) if self.mode == "unique" else list_radius(P)

    def to_json(self):
        return asdict(self)

    @classmethod
    def from_json(cls, data, **overrides):
        if not isinstance(data, dict):
            raise ConfigInvalid("config must be a JSON object")
        names = {f.name for f in fields(cls)}
        unknown = set(data) - names
        if unknown:
            raise ConfigInvalid(f"unknown config keys: {sorted(unknown)}")
        merged = dict(data)
        merged.update({k: v for k, v in overrides.items() if v is not None})
        try:
            return cls(**merged)
        except TypeError as e:
            raise ConfigInvalid(str(e)) from e


@dataclass
class TrialStats:
    trials: int = 0
    unique_successes: int = 0
    list_successes: int = 0
    failures_rank_deficient: int = 0
    failures_inconsistent: int = 0
    failures_list_cap: int = 0
    miscorrections: int = 0
    list_size_histogram: dict = field(default_factory=dict)
    dI_histogram: dict = field(default_factory=dict)
    kernel_bound_checked: int = 0
    kernel_bound_violations: int = 0
    dI_below_mu: int = 0
    elapsed: float = 0.0

    @property
    def failures(self):
        return self.failures_rank_deficient + self.failures_inconsistent + self.failures_list_cap

    @property
    def failure_fraction(self):
        return self.failures / self.trials if self.trials else 0.0

    @property
    def rank_deficient_fraction(self):
        return self.failures_rank_deficient / self.trials if self.trials else 0.0

    @property
    def mean_d_I(self):
        n = sum(self.dI_histogram.values())
        return sum(d * c for d, c in self.dI_histogram.items()) / n if n else 0.0

    @property
    def mean_list_size(self):
        n = sum(self.list_size_histogram.values())
        return sum(s * c for s, c in self.list_size_histogram.items()) / n if n else 0.0

    def merge(self, other):
        for f in fields(self):
            a, b = getattr(self, f.name), getattr(other, f.name)
            if isinstance(a, dict):
                setattr(self, f.name, dict(Counter(a) + Counter(b)))
            elif f.name == "elapsed":
                self.elapsed = max(a, b)
            else:
                setattr(self, f.name, a + b)
        return self

    def to_json(self):
        out = asdict(self)
        out["list_size_histogram"] = {str(k): v for k, v in sorted(self.list_size_histogram.items())}
        out["dI_histogram"] = {str(k): v for k, v in sorted(self.dI_histogram.items())}
        out["mean_d_I"] = self.mean_d_I
        out["failure_fraction"] = self.failure_fraction
        return out

    def deterministic_json(self):
        out = self.to_json()
        del out["elapsed"]
        return out


def kernel_dim_bound(D, k, s, h, gamma):
    return s * (D - k + 1) - gamma * (h - s + 1)


def run_one(cfg, P, index, stats):
    """One trial with seed ``trial_seed(cfg.master_seed, index)``, tallied into ``stats``."""
    F = P.field
    rng = random.Random(trial_seed(cfg.master_seed, index))
    f = lp_random(F, P.k, rng)
    rx = transmit(F, encode(P, f), ChannelParams(cfg.delta, cfg.gamma), rng)
    if cfg.mode == "unique":
        res = decode_unique(rx, P, cfg.mu, cfg.root_polys or "mu")
    else:
        res = decode_list(rx, P, root_polys=cfg.root_polys or "all")

    stats.trials += 1
    d_I = res.d_I
    stats.dI_histogram[d_I] = stats.dI_histogram.get(d_I, 0) + 1
    if cfg.tau <= list_radius(P):
        stats.kernel_bound_checked += 1
        if d_I < kernel_dim_bound(res.D, P.k, P.s, P.h, cfg.gamma):
            stats.kernel_bound_violations += 1
        if cfg.mode == "unique" and cfg.tau <= unique_radius(P, cfg.mu) and d_I < cfg.mu:
            stats.dI_below_mu += 1

    if res.status == FAILURE:
        if res.reason == RANK_DEFICIENT:
            stats.failures_rank_deficient += 1
        elif res.reason == INCONSISTENT:
            stats.failures_inconsistent += 1
        elif res.reason == LIST_CAP:
            stats.failures_list_cap += 1
        return res
    if res.status == UNIQUE:
        if res.message == f:
            stats.unique_successes += 1
        else:
            stats.miscorrections += 1
        return res
    size = len(res.messages)
    stats.list_size_histogram[size] = stats.list_size_histogram.get(size, 0) + 1
    if f in res.messages:
        stats.list_successes += 1
    else:
        stats.miscorrections += 1
    return res


def _run_range(args):
    cfg, start, stop = args
    P = cfg.params()
    stats = TrialStats()
    for i in range(start, stop):
        run_one(cfg, P, i, stats)
    return stats


def _chunks(n, parts):
    size = max(1, -(-n // parts))
    return [(a, min(n, a + size)) for a in range(0, n, size)]


def run_trials(cfg):
    t0 = time.perf_counter()
    if cfg.workers == 1:
        stats = _run_range((cfg, 0, cfg.trials))
    else:
        jobs = [(cfg, a, b) for a, b in _chunks(cfg.trials, cfg.workers * 4)]
        with get_context("spawn").Pool(cfg.workers) as pool:
            parts = pool.map(_run_range, jobs)
        stats = TrialStats()
        for p in parts:
            stats.merge(p)
    stats.elapsed = time.perf_counter() - t0
    return stats


CSV_COLUMNS = ("q", "m", "h", "n_t", "k", "s", "delta", "gamma", "mode", "mu", "trials",
               "master_seed", "unique_successes", "list_successes", "failures_rank_deficient",
               "failures_inconsistent", "failures_list_cap", "miscorrections", "failure_fraction",
               "mean_d_I", "mean_list_size")


def csv_row(cfg, stats):
    vals = []
    for c in CSV_COLUMNS:
        v = getattr(cfg, c) if hasattr(cfg, c) else getattr(stats, c)
        vals.append(f"{v:.6g}" if isinstance(v, float) else str(v))
    return ",".join(vals)


def emit_radius_table(h, s, mu, grid, n_t=None):
    """CSV text with columns ``R, tau_f, tau_u, tau_kk``."""
    lines = ["R,tau_f,tau_u,tau_kk"]
    for R, tf, tu in normalized_radii(h, s, mu, grid, n_t):
        lines.append(f"{R:.6g},{tf:.6g},{tu:.6g},{tau_kk(R):.6g}")
    return "\n".join(lines) + "\n"


def parse_grid(text):
    """``"a:b:step"`` -> list of floats from a to b inclusive (up to rounding)."""
    try:
        a, b, step = (float(x) for x in text.split(":"))
    except ValueError as e:
        raise ValueError(f"grid must look like a:b:step, got {text!r}") from e
    if step <= 0 or b < a:
        raise ValueError("grid needs step > 0 and b >= a")
    n = int(round((b - a) / step))
    return [round(a + i * step, 12) for i in range(n + 1)]


def load_configs(path, **overrides):
    """A single config object or a list of them (sweep)."""
    with open(path) as fh:
        data = json.load(fh)
    if isinstance(data, list):
        return [SimConfig.from_json(d, **overrides) for d in data]
    return [SimConfig.from_json(data, **overrides)]
