"""Command-line front end.

Commands:
    dim {y|tl|ftl|ctl} -d D -n N
    enumerate {dpartitions|tableaux|jonespairs|cosets} ...
    rep -d D -n N --shape JSON
    mul -d D -n N "expr"
    basis {ftl|ctl} -d D -n N
    verify -d D -n N [--suite relations|idempotents|iso|quotients|dims|basis|all]

Output is JSON (stdout or --output). Exit codes: 0 success, 1 verification
failure, 2 usage error. Results of verify and basis runs are cached on disk
(override the directory with --cache-dir or the YTL_CACHE_DIR variable);
cached entries are keyed by the command parameters and a convention version,
so warm results are bit-identical to cold ones.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .exprparse import EvalError, ParseError, parse_and_evaluate
from .permutations import Composition, compositions, coset_system
from .reps import rep_e, rep_g, rep_module, rep_t
from .tableaux import (catalan, dim_CTL, dim_FTL, dim_TL, dim_Y,
                       enumerate_d_partitions, jones_pairs, standard_tableaux)
from . import isomaps as iso
from .verify import run_suite

CONVENTION_VERSION = 1


# ---------------------------------------------------------------------------
# cache


def _cache_dir(args):
    if getattr(args, "cache_dir", None):
        return args.cache_dir
    env = os.environ.get("YTL_CACHE_DIR")
    if env:
        return env
    return os.path.join(os.path.expanduser("~"), ".cache", "ytl")


def _cache_path(args, kind, key):
    name = "%s-%s-v%d.json" % (kind, key, CONVENTION_VERSION)
    return os.path.join(_cache_dir(args), name)


def _cache_load(args, kind, key):
    if getattr(args, "no_cache", False):
        return None
    path = _cache_path(args, kind, key)
    if os.path.exists(path):
        with open(path) as fh:
            return json.load(fh)
    return None


def _cache_store(args, kind, key, payload):
    if getattr(args, "no_cache", False):
        return
    directory = _cache_dir(args)
    os.makedirs(directory, exist_ok=True)
    with open(_cache_path(args, kind, key), "w") as fh:
        json.dump(payload, fh, sort_keys=True)


# ---------------------------------------------------------------------------
# output


def _emit(args, payload):
    text = json.dumps(payload, indent=2, sort_keys=True)
    if getattr(args, "output", None):
        with open(args.output, "w") as fh:
            fh.write(text + "\n")
    else:
        print(text)


def _error(args, message, code=2):
    _emit(args, {"error": message})
    return code


# ---------------------------------------------------------------------------
# commands


def cmd_dim(args):
    kind = args.kind
    d, n = args.d, args.n
    if kind == "y":
        value = dim_Y(d, n)
    elif kind == "tl":
        value = dim_TL(n)
    elif kind == "ftl":
        value = dim_FTL(d, n) if n >= 3 else dim_Y(d, n)
    else:
        value = dim_CTL(d, n) if n >= 3 else dim_Y(d, n)
    _emit(args, {"kind": kind, "d": d, "n": n, "dim": value})
    return 0


def cmd_enumerate(args):
    d, n = args.d, args.n
    what = args.what
    if what == "dpartitions":
        payload = {"dpartitions": [[list(comp) for comp in s]
                                   for s in enumerate_d_partitions(d, n)]}
    elif what == "tableaux":
        if args.shape:
            shapes = [_parse_shape(args.shape, d, n)]
        else:
            shapes = enumerate_d_partitions(d, n)
        payload = {"tableaux": [
            {"shape": [list(c) for c in s],
             "standard": [t.to_json() for t in standard_tableaux(s)]}
            for s in shapes]}
    elif what == "jonespairs":
        payload = {"mode": args.mode, "count": None,
                   "pairs": [p.to_json() for p in jones_pairs(n, args.mode)]}
        payload["count"] = len(payload["pairs"])
    else:  # cosets
        mu = Composition(tuple(args.mu)) if args.mu else None
        mus = [mu] if mu else compositions(d, n)
        payload = {"cosets": [
            {"mu": list(m.parts),
             "representatives": [w.to_json() for w in coset_system(m).reps]}
            for m in mus]}
    _emit(args, payload)
    return 0


def _parse_shape(text, d, n):
    data = json.loads(text)
    shape = tuple(tuple(part) for part in data)
    if len(shape) != d:
        raise ValueError("shape must have %d components" % d)
    if sum(sum(c) for c in shape) != n:
        raise ValueError("shape must have %d nodes" % n)
    return shape


def cmd_rep(args):
    d, n = args.d, args.n
    try:
        shape = _parse_shape(args.shape, d, n)
    except (ValueError, json.JSONDecodeError) as exc:
        return _error(args, "bad shape: %s" % exc)
    module = rep_module(d, shape)
    def render(mat):
        return [[entry.pretty() for entry in row] for row in mat]
    payload = {
        "d": d, "n": n, "shape": [list(c) for c in shape],
        "dim": module.dim,
        "basis": [t.to_json() for t in module.basis],
        "t": {str(j): render(rep_t(module, j)) for j in range(1, n + 1)},
        "g": {str(i): render(rep_g(module, i)) for i in range(1, n)},
        "e": {str(i): render(rep_e(module, i)) for i in range(1, n)},
    }
    from .verify import suite_relations
    report = suite_relations(d, n)
    payload["relation_check"] = {"ok": report["ok"],
                                 "checks": report["checks"]}
    _emit(args, payload)
    return 0 if report["ok"] else 1


def cmd_mul(args):
    d, n = args.d, args.n
    try:
        element = parse_and_evaluate(args.expr, d, n)
    except (ParseError, EvalError) as exc:
        return _error(args, str(exc))
    payload = {"d": d, "n": n, "expr": args.expr,
               "element": element.to_json(),
               "pretty": repr(element)}
    _emit(args, payload)
    return 0


def _pair_json(key):
    if hasattr(key, "to_json"):
        return key.to_json()
    return key


def cmd_basis(args):
    d, n = args.d, args.n
    kind = args.kind.upper()
    key = "%s-d%d-n%d" % (args.kind, d, n)
    cached = _cache_load(args, "basis", key)
    if cached is not None:
        _emit(args, cached)
        return 0
    descriptors = iso.ftl_basis(d, n) if kind == "FTL" else iso.ctl_basis(d, n)
    items = []
    for mu, bkey, k, l in descriptors:
        if kind == "FTL":
            rendered = [p.to_json() for p in bkey]
        else:
            b1, rest = bkey
            rendered = {"first": b1.to_json(),
                        "rest": [w.to_json() for w in rest]}
        items.append({"mu": list(mu.parts), "key": rendered, "k": k, "l": l})
    expected = (dim_FTL(d, n) if kind == "FTL" else dim_CTL(d, n)) \
        if n >= 3 else dim_Y(d, n)
    payload = {"kind": args.kind, "d": d, "n": n,
               "count": len(items), "expected": expected,
               "elements": items}
    _cache_store(args, "basis", key, payload)
    _emit(args, payload)
    return 0 if len(items) == expected else 1


def cmd_verify(args):
    d, n = args.d, args.n
    key = "%s-d%d-n%d-s%d" % (args.suite, d, n, args.seed)
    cached = _cache_load(args, "verify", key)
    if cached is not None:
        _emit(args, cached)
        return 0 if cached["ok"] else 1
    try:
        report = run_suite(d, n, args.suite, seed=args.seed)
    except ValueError as exc:
        return _error(args, str(exc))
    _cache_store(args, "verify", key, report)
    _emit(args, report)
    return 0 if report["ok"] else 1


# ---------------------------------------------------------------------------
# argument parsing


def build_parser():
    parser = argparse.ArgumentParser(
        prog="ytl",
        description="Exact computations in framed Hecke algebras and their "
                    "Temperley-Lieb-type quotients.")
    parser.add_argument("--output", "-o", help="write JSON to this file")
    parser.add_argument("--cache-dir", help="cache directory "
                        "(default: YTL_CACHE_DIR or ~/.cache/ytl)")
    parser.add_argument("--no-cache", action="store_true",
                        help="disable the on-disk cache")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_dn(p, need_d=True):
        if need_d:
            p.add_argument("-d", type=int, default=1, help="framing order (>= 1)")
        p.add_argument("-n", type=int, required=True, help="number of strands")

    p = sub.add_parser("dim", help="dimension of an algebra")
    p.add_argument("kind", choices=["y", "tl", "ftl", "ctl"])
    add_dn(p)
    p.set_defaults(func=cmd_dim)

    p = sub.add_parser("enumerate", help="combinatorial enumerations")
    p.add_argument("what", choices=["dpartitions", "tableaux", "jonespairs", "cosets"])
    add_dn(p)
    p.add_argument("--shape", help="restrict tableaux to one shape (JSON)")
    p.add_argument("--mode", choices=["TL", "All"], default="TL",
                   help="jonespairs flavor")
    p.add_argument("--mu", type=int, nargs="+", help="composition for cosets")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("rep", help="representation matrices for one shape")
    add_dn(p)
    p.add_argument("--shape", required=True, help="d-partition as JSON, "
                   "e.g. '[[2,1],[1]]'")
    p.set_defaults(func=cmd_rep)

    p = sub.add_parser("mul", help="evaluate an expression to normal form")
    add_dn(p)
    p.add_argument("expr", help="e.g. 'g1*g1 - (q-1)*e1*g1'")
    p.set_defaults(func=cmd_mul)

    p = sub.add_parser("basis", help="explicit quotient basis")
    p.add_argument("kind", choices=["ftl", "ctl"])
    add_dn(p)
    p.set_defaults(func=cmd_basis)

    p = sub.add_parser("verify", help="run a verification suite")
    add_dn(p)
    p.add_argument("--suite", default="all",
                   choices=["relations", "idempotents", "iso", "quotients",
                            "dims", "basis", "all"])
    p.add_argument("--seed", type=int, default=0,
                   help="seed for randomized property checks")
    p.set_defaults(func=cmd_verify)

    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.d < 1 or args.n < 1:
        print(json.dumps({"error": "d and n must be positive"}), file=sys.stderr)
        return 2
    try:
        return args.func(args)
    except (ParseError, EvalError, ValueError) as exc:
        return _error(args, str(exc))


if __name__ == "__main__":
    sys.exit(main())
