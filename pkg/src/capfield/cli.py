"""Command-line front end.

Exit status: 0 when every checked property holds, 1 when a mathematical
assertion fails (a witness is printed), 2 for usage or configuration errors.
"""

from __future__ import annotations

import argparse
import json
import random
import sys

from . import cards
from .caps import (
    cap_arity,
    is_cap,
    is_complete_naive,
    is_complete_subgroup_reduced,
    strong_structure_char2,
    strong_structure_char3,
)
from .cosetsearch import (
    FAMILY_MAX_N,
    SearchBudgetExceeded,
    find_pair_partition,
    general_family_check,
    pair_difference_spectrum,
    subgroup_cap_scan,
    union_cap_search,
)
from .ffield import DEFAULT_MAX_Q, FieldCtx, FieldError, make_field
from .groups import coset_family, subgroup_of_order

OK, FAILED, USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _field(args) -> FieldCtx:
    if args.p is None or args.n is None:
        raise UsageError("--p and --n are required")
    if args.p ** args.n > DEFAULT_MAX_Q:
        raise UsageError(f"q={args.p}^{args.n} exceeds the table bound {DEFAULT_MAX_Q}")
    return make_field(args.p, args.n, args.modulus)


def _subgroup(args, ctx):
    if args.d is None:
        raise UsageError("--d is required")
    return subgroup_of_order(ctx, args.d)


def _field_json(ctx: FieldCtx) -> dict:
    return {"p": ctx.p, "n": ctx.n, "q": ctx.q, "modulus": str(ctx.modulus), "generator": str(ctx.to_poly(ctx.generator))}


def _spot_check(ctx: FieldCtx, samples: int, seed: int) -> bool:
    """Random field-axiom and Frobenius checks; the table product must match polynomial multiplication."""
    rng = random.Random(seed)
    for _ in range(samples):
        a, b, c = (rng.randrange(ctx.q) for _ in range(3))
        if ctx.mul(a, ctx.add(b, c)) != ctx.add(ctx.mul(a, b), ctx.mul(a, c)):
            return False
        if ctx.mul(a, b) != ctx.poly_mul(a, b):
            return False
        if ctx.pow(ctx.add(a, b), ctx.p) != ctx.add(ctx.pow(a, ctx.p), ctx.pow(b, ctx.p)):
            return False
    return True


def cmd_verify(args):
    ctx = _field(args)
    G = _subgroup(args, ctx)
    rep = is_cap(G)
    strong = (strong_structure_char3 if ctx.p == 3 else strong_structure_char2)(G)
    out = {
        "command": "verify",
        "field": _field_json(ctx),
        "d": G.order,
        "e": G.index,
        "field_spot_check": _spot_check(ctx, args.samples, args.seed),
        "cap": rep.to_json(),
        "strong": strong,
    }
    ok = out["field_spot_check"] and rep.verdict and strong
    if args.complete:
        if not rep.verdict:
            out["complete"] = None
        else:
            m = cap_arity(ctx)
            naive = is_complete_naive(G, m)
            reduced = is_complete_subgroup_reduced(G, m)
            out["complete"] = {"naive": naive.to_json(), "reduced": reduced.to_json(), "agree": naive.complete == reduced.complete}
            ok = ok and naive.complete and reduced.complete
    out["pass"] = bool(ok)
    lines = [
        f"field GF({ctx.q}) modulus {ctx.modulus}, subgroup d={G.order} e={G.index}",
        f"field spot check ({args.samples} samples, seed {args.seed}): {'ok' if out['field_spot_check'] else 'FAILED'}",
        f"cap: {rep.verdict} (zero-sum tuples: {rep.distinct_zero_sum_count})",
    ]
    if rep.witness:
        lines.append("witness: " + " + ".join(f"g^{ctx.log[a]}" if a else "0" for a in rep.witness) + " = 0")
    lines.append(f"strong structure: {strong}")
    if args.complete and out["complete"]:
        c = out["complete"]
        lines.append(f"complete (naive): {c['naive']['complete']}, complete (reduced, {c['reduced']['targets_checked']} targets): {c['reduced']['complete']}")
    lines.append("PASS" if ok else "FAIL")
    return (OK if ok else FAILED), out, lines


def cmd_scan(args):
    ctx = _field(args)
    rows = subgroup_cap_scan(ctx, complete=not args.no_complete)
    out = {"command": "scan", "field": _field_json(ctx), "rows": [r.to_json() for r in rows]}
    fmt = lambda v: "-" if v is None else str(v).lower()
    lines = [f"GF({ctx.q}) modulus {ctx.modulus}", f"{'d':>8} {'is_cap':>7} {'strong':>7} {'complete':>9}"]
    lines += [f"{r.d:>8} {fmt(r.is_cap):>7} {fmt(r.strong):>7} {fmt(r.complete):>9}" for r in rows]
    return OK, out, lines


def cmd_tables(args):
    out = cards.table_json(args.deck)
    return OK, out, cards.emit_table(args.deck).rstrip("\n").split("\n")


def cmd_cosets(args):
    ctx = _field(args)
    G = _subgroup(args, ctx)
    fam = coset_family(G)
    m = cap_arity(ctx)
    rows = []
    for j, c in enumerate(fam.cosets):
        rep = is_cap(c, ctx)
        row = {"label": j, "size": int(c.size), "cap": rep.verdict, "elements": sorted(int(a) for a in c)}
        if args.complete and rep.verdict:
            row["complete"] = is_complete_naive(c, m, ctx).complete
        rows.append(row)
    covered = sorted(a for r in rows for a in r["elements"])
    partition = covered == list(range(1, ctx.q))
    ok = partition and all(r["cap"] and r.get("complete", True) for r in rows)
    out = {"command": "cosets", "field": _field_json(ctx), "d": G.order, "e": G.index, "partition": partition, "cosets": rows, "pass": ok}
    lines = [f"GF({ctx.q}): {G.index} cosets of size {G.order}, partition of F_q^x: {partition}"]
    for r in rows:
        extra = f" complete={r['complete']}" if "complete" in r else ""
        lines.append(f"coset {r['label']}: size {r['size']} cap={r['cap']}{extra}")
    lines.append("PASS" if ok else "FAIL")
    return (OK if ok else FAILED), out, lines


def cmd_pairs(args):
    ctx = _field(args)
    G = _subgroup(args, ctx)
    if not is_cap(G):
        raise FieldError(f"G_{{{ctx.q},{G.order}}} is not a cap")
    spectrum = pair_difference_spectrum(G)
    out = {"command": "pairs", "field": _field_json(ctx), "d": G.order, "e": G.index, "spectrum": spectrum}
    lines = [f"GF({ctx.q}), d={G.order}, e={G.index}", f"pair difference spectrum: {spectrum}"]
    if G.index % 2 == 0:
        partition = find_pair_partition(G)
        out["partition"] = partition and [list(pr) for pr in partition]
        if partition:
            lines.append(f"pair partition into {len(partition)} caps of size {2 * G.order}: {partition}")
        else:
            lines.append("no pair partition")
    if args.r is not None:
        res = union_cap_search(G, args.r)
        out["union_search"] = res.to_json()
        if res.found:
            lines.append(f"{args.r}-coset union cap: labels {list(res.found.coset_labels)} (size {res.found.union_size})")
        else:
            lines.append(f"no {args.r}-coset union cap ({res.candidates_checked} of {res.total_candidates} candidates checked)")
    return OK, out, lines


def cmd_family(args):
    if args.n_max > FAMILY_MAX_N and not args.force:
        raise UsageError(f"--n-max above {FAMILY_MAX_N} needs --force")
    reports = [general_family_check(n, bound=max(args.n_max, FAMILY_MAX_N)) for n in range(args.n_min, args.n_max + 1)]
    ok = all(r.passed for r in reports)
    out = {"command": "family", "rows": [r.to_json() for r in reports], "pass": ok}
    lines = []
    for r in reports:
        aug = "cap" if r.zero_augmented_is_cap else f"not a cap, witness {list(r.zero_witness)}"
        lines.append(
            f"n={r.n} q={r.q} d={r.d}: subgroup cap={r.subgroup_is_cap} strong={r.strong}; "
            f"G+{{0}} (size {r.zero_augmented_size}) {aug}; {'pass' if r.passed else 'FAIL'}"
        )
    lines.append("PASS" if ok else "FAIL")
    return (OK if ok else FAILED), out, lines


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--p", type=int, help="characteristic")
    common.add_argument("--n", type=int, help="extension degree")
    common.add_argument("--modulus", help='modulus override, e.g. "x^6+x+2" or "[2,1,0,0,0,0,1]"')
    common.add_argument("--d", type=int, help="subgroup order")
    common.add_argument("--format", choices=["text", "json"], default="text")
    common.add_argument("--seed", type=int, default=0, help="seed for randomized checks")

    parser = argparse.ArgumentParser(prog="capfield", description="Subgroups of finite fields as cap sets.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verify", parents=[common], help="cap / strong structure / completeness of G_{q,d}")
    p.add_argument("--complete", action="store_true", help="also check completeness (naive and reduced)")
    p.add_argument("--samples", type=int, default=200, help="random field spot checks")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("scan", parents=[common], help="check every subgroup of F_q^x")
    p.add_argument("--no-complete", action="store_true", help="skip completeness column")
    p.set_defaults(func=cmd_scan)

    p = sub.add_parser("tables", parents=[common], help="SET / EvenQuads card-code tables")
    p.add_argument("deck", choices=["set", "quads"])
    p.set_defaults(func=cmd_tables)

    p = sub.add_parser("cosets", parents=[common], help="coset partition of F_q^x by G_{q,d}")
    p.add_argument("--complete", action="store_true", help="check each coset for completeness")
    p.set_defaults(func=cmd_cosets)

    p = sub.add_parser("pairs", parents=[common], help="coset-pair caps and coset-union searches")
    p.add_argument("--r", type=int, help="search for an r-coset union cap")
    p.set_defaults(func=cmd_pairs)

    p = sub.add_parser("family", parents=[common], help="G_{2^(2n), 2^n+1} family checks")
    p.add_argument("--n-min", type=int, default=2)
    p.add_argument("--n-max", type=int, default=FAMILY_MAX_N)
    p.add_argument("--force", action="store_true", help="allow n beyond the default bound")
    p.set_defaults(func=cmd_family)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        status, out, lines = args.func(args)
    except (UsageError, FieldError, SearchBudgetExceeded) as exc:
        print(f"capfield: error: {exc}", file=sys.stderr)
        return USAGE
    if args.format == "json":
        print(json.dumps(out, indent=2))
    else:
        print("\n".join(lines))
    return status


if __name__ == "__main__":
    sys.exit(main())
