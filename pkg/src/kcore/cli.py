"""Command-line entry point: ``kcore transform | orders | vertices | random``.

Exit codes: 0 success, 2 input error, 3 guard refusal, 4 internal invariant breach.
"""

from __future__ import annotations

import argparse
import json
import sys
import warnings
from contextlib import contextmanager
from pathlib import Path

from . import io, oracle
from .achievable import build_atlas
from .corevert import (
    CoreVariant,
    core_constraints,
    order_vertices,
    verify_vertex,
    vertices_n_minus_1,
)
from .errors import DomainError, GuardError, InputError, InvariantError, StructureError
from .orders import FILTERS, classify, enumerate_orders
from .setfn import (
    MobiusVector,
    additivity_degree,
    card,
    is_infinitely_monotone,
    is_k_monotone,
    is_monotone,
    label,
    mobius_transform,
    random_game,
    random_monotone_game,
    random_totally_monotone_game,
)

EXIT_OK, EXIT_INPUT, EXIT_GUARD, EXIT_INTERNAL = 0, 2, 3, 4
MODES = ("orders", "theorem-n-1", "oracle")


def _num(x) -> str:
    exact = io.fraction_str(x)
    approx = io.decimal_str(x)
    return exact if exact == approx else f"{exact} ({approx})"


def _yes(flag) -> str:
    return "yes" if flag else "no"


def _read(path: str) -> str:
    try:
        return Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None


@contextmanager
def _output(path):
    if path is None:
        yield sys.stdout
    else:
        with open(path, "w", encoding="utf-8") as fh:
            yield fh


# -- transform -------------------------------------------------------------

def transform_report(v) -> dict:
    m = mobius_transform(v)
    try:
        degree = additivity_degree(m)
    except DomainError:
        degree = None
    return {
        "n": v.n,
        "game": {io.mask_key(A): io.fraction_str(v[A]) for A in range(1, 1 << v.n)},
        "mobius": {io.mask_key(A): io.fraction_str(m[A]) for A in range(1, 1 << v.n)},
        "monotone": is_monotone(v),
        "k_monotone": {str(k): is_k_monotone(v, k) for k in range(2, v.n + 1)},
        "infinitely_monotone": is_infinitely_monotone(v),
        "additivity_degree": degree,
    }


def cmd_transform(args, out):
    v = io.game_from_json(_read(args.game), args.game)
    rep = transform_report(v)
    if args.format == "json":
        print(io.dumps(rep), file=out)
        return
    m = mobius_transform(v)
    print(f"game on n={v.n}", file=out)
    width = max(len(label(A)) for A in range(1, 1 << v.n)) + 2
    col = max(len(_num(v[A])) for A in range(1, 1 << v.n)) + 2
    print(f"{'A':<{width}}{'v(A)':<{col}}m(A)", file=out)
    for A in range(1, 1 << v.n):
        print(f"{label(A):<{width}}{_num(v[A]):<{col}}{_num(m[A])}", file=out)
    print(f"monotone: {_yes(rep['monotone'])}", file=out)
    for k, flag in rep["k_monotone"].items():
        print(f"{k}-monotone: {_yes(flag)}", file=out)
    print(f"infinitely monotone: {_yes(rep['infinitely_monotone'])}", file=out)
    deg = rep["additivity_degree"]
    print(f"additivity degree: {deg if deg is not None else 'undefined (zero game)'}", file=out)


# -- orders ----------------------------------------------------------------

def _family_line(fam) -> str:
    members = "{" + ", ".join(label(A) for A in fam.sorted_members()) + "}" if fam.members else "∅"
    if fam.empty:
        status = "empty"
    elif fam.is_lattice:
        status = f"lattice, top {label(fam.top)}"
    else:
        status = "not a lattice"
    return f"A({label(fam.b)}) = {members}  [{status}]"


def cmd_orders(args, out):
    if args.order:
        orders = [io.order_from_json(_read(p), p) for p in args.order]
        truncated = False
    else:
        if args.n is None or args.k is None:
            raise InputError("orders: give --n and --k, or one or more --order files")
        batch = enumerate_orders(args.n, args.k, args.filter, args.cap)
        orders, truncated = batch.orders, batch.truncated
    records = []
    for order in orders:
        rep = classify(order)
        rec = {
            "sequence": io.order_to_dict(order)["sequence"],
            "compatible": rep.compatible,
            "subset_compatible": rep.subset_compatible,
            "strongly_compatible": rep.strongly_compatible,
        }
        atlas = build_atlas(order, strict=True) if args.atlas else None
        if atlas is not None:
            rec["atlas"] = io.atlas_to_list(atlas)
        records.append(rec)
        if args.format == "text":
            print(f"{order} | compatible={_yes(rep.compatible)} "
                  f"subset_compatible={_yes(rep.subset_compatible)} "
                  f"strongly_compatible={_yes(rep.strongly_compatible)}", file=out)
            for b in order.sequence if atlas is not None else ():
                print("    " + _family_line(atlas[b]), file=out)
    if args.format == "json":
        print(io.dumps({"count": len(records), "truncated": truncated, "orders": records}), file=out)
    if truncated:
        print(f"truncated: stopped after {len(records)} orders (cap {args.cap})", file=sys.stderr)


# -- vertices --------------------------------------------------------------

def _run_mode(mode, v, args):
    """Return (certificates, extra report fields) for one generator."""
    k = args.k
    if mode == "orders":
        require = args.require
        implied = "plain" if require == "strong" else "infinite"
        if args.variant not in (None, implied):
            raise InputError(f"mode 'orders' with --require {require} certifies against the {implied} core")
        with warnings.catch_warnings():
            warnings.simplefilter("ignore")
            certs = order_vertices(v, k, require, args.cap, args.threads)
        extra = {"orders_seen": certs.orders_seen, "truncated": certs.truncated,
                 "guaranteed": is_k_monotone(v, k + 1), "variant": implied}
        return list(certs), extra
    if mode == "theorem-n-1":
        if k != v.n - 1:
            raise InputError(f"mode theorem-n-1 needs k = n-1 = {v.n - 1}, got k = {k}")
        if args.variant not in (None, "plain"):
            raise InputError("mode theorem-n-1 describes the plain core only")
        return vertices_n_minus_1(v), {"variant": "plain"}
    variant = args.variant or "plain"
    system = core_constraints(v, k, variant)
    summary = oracle.enumerate_vertices(system)
    certs = []
    for x in summary.vertices:
        cert = verify_vertex(MobiusVector.from_vector(v.n, k, x), v, k, variant, system)
        cert.source = "oracle"
        if not cert.is_vertex:
            raise InvariantError("oracle vertex failed certification")
        certs.append(cert)
    extra = io.summary_to_dict(summary, system.variables)
    del extra["vertices"]
    extra["variant"] = variant
    return certs, extra


def _print_certs(certs, v, k, out):
    for j, cert in enumerate(certs, 1):
        head = f"vertex #{j}"
        if cert.source:
            head += f" [{cert.source}]"
        print(f"{head}: feasible={_yes(cert.feasible)} rank={cert.rank}/{cert.num_vars} "
              f"vertex={_yes(cert.is_vertex)}", file=out)
        for A in range(1, 1 << v.n):
            if card(A) <= k:
                print(f"    m*({label(A)}) = {_num(cert.point[A])}", file=out)
        if cert.violated_rows:
            print(f"    violated rows: {cert.violated_rows}", file=out)


def cmd_vertices(args, out):
    v = io.game_from_json(_read(args.game), args.game)
    if not 1 <= args.k <= v.n:
        raise InputError(f"--k must lie in [1, n={v.n}]")
    certs, extra = _run_mode(args.mode, v, args)
    report = {"mode": args.mode, "k": args.k, **extra,
              "vertices": [io.certificate_to_dict(c) for c in certs]}
    if args.compare:
        other, _ = _run_mode(args.compare, v, args)
        mine = {c.vector() for c in certs}
        theirs = {c.vector() for c in other}
        variables = core_constraints(v, args.k).variables
        report["compare"] = {
            "against": args.compare,
            "identical": mine == theirs,
            "only_in_" + args.mode: [io.point_to_dict(variables, x) for x in sorted(mine - theirs)],
            "only_in_" + args.compare: [io.point_to_dict(variables, x) for x in sorted(theirs - mine)],
        }
    if args.format == "json":
        print(io.dumps(report), file=out)
        return
    print(f"mode={args.mode} k={args.k} variant={extra.get('variant')} n={v.n}", file=out)
    if "feasible" in extra:
        print(f"feasible: {_yes(extra['feasible'])}  bounded: {_yes(extra['bounded'])}", file=out)
    if "guaranteed" in extra and not extra["guaranteed"]:
        print(f"warning: game is not {args.k + 1}-monotone; vertexhood of order points not guaranteed", file=out)
    if extra.get("truncated"):
        print(f"warning: order enumeration truncated at cap {args.cap}", file=out)
    print(f"{len(certs)} point(s)", file=out)
    _print_certs(certs, v, args.k, out)
    for j, ray in enumerate(extra.get("rays", []), 1):
        comps = ", ".join(f"{key}: {val}" for key, val in ray.items())
        print(f"ray #{j}: {comps}", file=out)
    if args.compare:
        cmp = report["compare"]
        print(f"compare {args.mode} vs {args.compare}: identical={_yes(cmp['identical'])}", file=out)
        for key in (f"only_in_{args.mode}", f"only_in_{args.compare}"):
            for point in cmp[key]:
                print(f"    {key}: {point}", file=out)


# -- random ----------------------------------------------------------------

def cmd_random(args, out):
    if args.kind == "totally-monotone":
        v = random_totally_monotone_game(args.seed, args.n, args.k_cap or args.n)
    elif args.kind == "monotone":
        v = random_monotone_game(args.seed, args.n)
    else:
        v = random_game(args.seed, args.n)
    print(io.game_to_json(v, args.form), file=out)


# -- parser ----------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="kcore", description="Exact k-additive core toolkit.")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--out", help="write the report to FILE instead of stdout")
        p.add_argument("--format", choices=("text", "json"), default="text")
        p.add_argument("--threads", type=int, default=1, help="worker processes for certification")

    p = sub.add_parser("transform", help="Möbius transform and classification of a game")
    p.add_argument("--game", required=True)
    common(p)
    p.set_defaults(func=cmd_transform)

    p = sub.add_parser("orders", help="enumerate and classify orders on P^k_*(N)")
    p.add_argument("--n", type=int)
    p.add_argument("--k", type=int)
    p.add_argument("--filter", choices=FILTERS, default="all")
    p.add_argument("--cap", type=int)
    p.add_argument("--order", action="append", help="order JSON file (repeatable)")
    p.add_argument("--atlas", action="store_true", help="also dump achievable families")
    common(p)
    p.set_defaults(func=cmd_orders)

    p = sub.add_parser("vertices", help="generate and certify core vertices")
    p.add_argument("--game", required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--mode", choices=MODES, default="orders")
    p.add_argument("--variant", choices=[c.value for c in CoreVariant])
    p.add_argument("--require", choices=("strong", "compatible"), default="strong")
    p.add_argument("--compare", choices=MODES, help="second generator whose vertex set is diffed exactly")
    p.add_argument("--cap", type=int)
    common(p)
    p.set_defaults(func=cmd_vertices)

    p = sub.add_parser("random", help="emit a reproducible random game as JSON")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--kind", choices=("totally-monotone", "monotone", "any"), default="totally-monotone")
    p.add_argument("--k-cap", type=int)
    p.add_argument("--form", choices=("game", "mobius"), default="game")
    p.add_argument("--out")
    p.set_defaults(func=cmd_random)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        with _output(getattr(args, "out", None)) as out:
            args.func(args, out)
    except GuardError as exc:
        print(f"kcore: refused: {exc}", file=sys.stderr)
        return EXIT_GUARD
    except (InvariantError, StructureError) as exc:
        print(f"kcore: internal invariant breached: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    except (InputError, DomainError, json.JSONDecodeError) as exc:
        print(f"kcore: input error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
