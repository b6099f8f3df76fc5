"""Command line entry point: ``fscode {simulate,radius,bounds,roundtrip}``."""

import argparse
import json
import random
import sys

from .bounds import avg_list_bound, ball_volume, failure_bound
from .channel import ChannelParams, transmit
from .decoder import FAILURE, UNIQUE, decode_list, decode_unique, interpolate, verify_root_identity
from .errors import FSCodeError
from .folded import FSCodeParams, encode, list_radius, message_from_json, unique_radius
from .sim import CSV_COLUMNS, csv_row, emit_radius_table, load_configs, parse_grid, run_trials

EX_USAGE = 64
EX_FAILURE = 2


class InputError(Exception):
    pass


def _load_json(path):
    try:
        with open(path) as fh:
            return json.load(fh)
    except OSError as e:
        raise InputError(f"cannot read {path}: {e.strerror}") from e
    except json.JSONDecodeError as e:
        raise InputError(f"malformed JSON in {path}: {e}") from e


def _load_params(path):
    data = _load_json(path)
    if not isinstance(data, dict):
        raise InputError(f"{path}: expected a JSON object")
    try:
        return FSCodeParams.from_json(data)
    except KeyError as e:
        raise InputError(f"{path}: missing key {e}") from e


def cmd_simulate(args):
    try:
        cfgs = load_configs(args.config, master_seed=args.seed, workers=args.workers, trials=args.trials)
    except json.JSONDecodeError as e:
        raise InputError(f"malformed JSON in {args.config}: {e}") from e
    except OSError as e:
        raise InputError(f"cannot read {args.config}: {e.strerror}") from e
    results = []
    rows = [",".join(CSV_COLUMNS)]
    for cfg in cfgs:
        st = run_trials(cfg)
        results.append({"config": cfg.to_json(), "stats": st.to_json()})
        rows.append(csv_row(cfg, st))
        print(f"{cfg.mode} mu={cfg.mu} delta={cfg.delta} gamma={cfg.gamma}: "
              f"{st.trials} trials, {st.failures} failures ({st.failure_fraction:.3g}), "
              f"{st.miscorrections} miscorrections, mean d_I {st.mean_d_I:.3f}, {st.elapsed:.1f}s")
    if args.out:
        with open(args.out, "w") as fh:
            json.dump(results[0] if len(results) == 1 else results, fh, indent=2)
    if args.csv:
        with open(args.csv, "w") as fh:
            fh.write("\n".join(rows) + "\n")
    return 0


def cmd_radius(args):
    text = emit_radius_table(args.h, args.s, args.mu, parse_grid(args.grid), args.n_t)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0


def cmd_bounds(args):
    P = _load_params(args.config)
    mus = [int(x) for x in args.mu.split(",") if x]
    N = P.N
    vol = ball_volume(args.nr, P.n_t, args.tau, N, P.q)
    print(f"code q={P.q} m={P.m} h={P.h} n_t={P.n_t} k={P.k} s={P.s}  N={N}")
    print(f"list radius {list_radius(P)}; unique radius " +
          ", ".join(f"mu={mu}: {unique_radius(P, mu)}" for mu in mus))
    print(f"ball volume (n_r={args.nr}, tau={args.tau}): {vol}")
    try:
        b = avg_list_bound(P, args.nr, args.tau)
        print(f"average list size <= 1 + {b.excess} ~ 1 + {10.0**b.log10_excess:.6g}")
        print(f"  exact average excess {b.exact_excess} ~ {float(b.exact_excess):.6g}")
    except FSCodeError as e:
        print(f"average list size: {e}")
    for mu in mus:
        fb = failure_bound(P.k, P.q, P.m, mu)
        print(f"failure bound mu={mu}: {fb} ~ {float(fb):.4g}")
    return 0


def cmd_roundtrip(args):
    P = _load_params(args.config)
    data = _load_json(args.message)
    if isinstance(data, dict):
        data = data.get("coeffs", data.get("message"))
    if not isinstance(data, list):
        raise InputError(f"{args.message}: expected a list of coefficients")
    f = message_from_json(P, data)
    rng = random.Random(args.seed)
    cw = encode(P, f)
    rx = transmit(P.field, cw, ChannelParams(args.delta, args.gamma), rng)
    print("codeword:", json.dumps(cw.to_json()["rows"]))
    print("received:", json.dumps(rx.to_json()["rows"]))
    if args.mode == "unique":
        res = decode_unique(rx, P, args.mu)
    else:
        res = decode_list(rx, P)
    _, basis = interpolate(rx, P, args.mu if args.mode == "unique" else 1)
    ok = all(verify_root_identity(Q, f, P) for Q in basis.polys())
    print(f"D = {res.D}, d_I = {res.d_I}")
    if res.status == FAILURE:
        print(f"result: failure ({res.reason})")
    elif res.status == UNIQUE:
        print(f"result: unique {res.message.to_json()}"
              + ("" if res.message == f else "  (differs from the sent message)"))
    else:
        print(f"result: list of {len(res.messages)}: " + json.dumps([m.to_json() for m in res.messages]))
    if ok:
        print(f"root identity for sent message: holds for all {basis.d_I} basis polynomials")
    else:
        print("root identity for sent message: fails")
    return 0 if res.contains(f) else EX_FAILURE


def build_parser():
    p = argparse.ArgumentParser(prog="fscode", description="Folded subspace codes: simulate, decode, bound.")
    sub = p.add_subparsers(dest="cmd", required=True)

    s = sub.add_parser("simulate", help="Monte Carlo decoding runs")
    s.add_argument("--config", required=True, help="SimConfig JSON (object or list of objects)")
    s.add_argument("--seed", type=int, help="override master_seed")
    s.add_argument("--workers", type=int, help="override workers")
    s.add_argument("--trials", type=int, help="override trials")
    s.add_argument("--out", help="write full stats as JSON")
    s.add_argument("--csv", help="write one CSV row per config")
    s.set_defaults(func=cmd_simulate)

    r = sub.add_parser("radius", help="normalized decoding radius vs rate")
    r.add_argument("--h", type=int, required=True)
    r.add_argument("--s", type=int, required=True)
    r.add_argument("--mu", type=int, default=1)
    r.add_argument("--n-t", dest="n_t", type=int, default=None)
    r.add_argument("--grid", default="0:1:0.01", help="a:b:step")
    r.add_argument("--out")
    r.set_defaults(func=cmd_radius)

    b = sub.add_parser("bounds", help="ball volume, list size and failure bounds")
    b.add_argument("--config", required=True)
    b.add_argument("--nr", type=int, required=True)
    b.add_argument("--tau", type=int, required=True)
    b.add_argument("--mu", default="1")
    b.set_defaults(func=cmd_bounds)

    t = sub.add_parser("roundtrip", help="encode, transmit and decode one message")
    t.add_argument("--config", required=True)
    t.add_argument("--message", required=True, help="JSON list of k coefficients")
    t.add_argument("--delta", type=int, default=0)
    t.add_argument("--gamma", type=int, default=0)
    t.add_argument("--seed", type=int, default=0)
    t.add_argument("--mu", type=int, default=1)
    t.add_argument("--mode", choices=("unique", "list"), default="unique")
    t.set_defaults(func=cmd_roundtrip)
    return p


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except InputError as e:
        print(f"fscode: {e}", file=sys.stderr)
        return EX_USAGE
    except (FSCodeError, ValueError) as e:
        print(f"fscode: {type(e).__name__}: {e}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
