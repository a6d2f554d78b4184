"""The ``rif`` command line.

Families travel between subcommands as rif-family/1 files or through
stdin/stdout, e.g. ``rif construct pp --q 2 | rif verify``.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from typing import Sequence

from rif import bounds, construct, search
from rif.core import (
    KSetFamily,
    degree_profile,
    diversity,
    inner_distribution,
    irregularity_ratio,
    is_intersecting,
    is_regular,
    is_subset_regular,
)
from rif.errors import RifError, TimeLimitExceeded
from rif.io import dumps, read_family, write_family
from rif.scheme import gamma_coefficients, lp_max_regular_intersecting, macwilliams_transform, scheme_tables

JSON_KEYS = ("n", "k", "size", "delta", "regular", "intersecting", "bounds", "inner_distribution")


def fmt(x) -> str:
    """Rationals as p/q in lowest terms, integers without /1."""
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def _bool(b: bool) -> str:
    return "true" if b else "false"


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(2, f"{self.prog}: error: {message}\n")


def _positive(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from None
    if v < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {v}")
    return v


def _positive_float(text: str) -> float:
    try:
        v = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a number, got {text!r}") from None
    if v <= 0:
        raise argparse.ArgumentTypeError(f"expected a positive number, got {v}")
    return v


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", default=argparse.SUPPRESS, help="machine-readable output")

    ap = _Parser(prog="rif", description="Regular k-uniform intersecting families.", parents=[common])
    sub = ap.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("bounds", parents=[common], help="all bounds for (n, k)")
    p.add_argument("--n", type=_positive, required=True)
    p.add_argument("--k", type=_positive, required=True)
    p.add_argument("--s", type=_positive, default=1, help="odd s for the subset-regular Hoffman bound")
    p.add_argument("--no-lp", action="store_true", help="skip the Delsarte LP")

    p = sub.add_parser("construct", parents=[common], help="build a family")
    recipes = p.add_subparsers(dest="recipe", required=True, parser_class=_Parser)
    r = recipes.add_parser("pp", parents=[common], help="projective plane of order q")
    r.add_argument("--q", type=_positive, required=True)
    r = recipes.add_parser("complete", parents=[common], help="all m-subsets of [z]")
    r.add_argument("--z", type=_positive, required=True)
    r.add_argument("--m", type=_positive, required=True)
    r = recipes.add_parser("extend", parents=[common], help="add l fresh points to every member")
    r.add_argument("--input", required=True)
    r.add_argument("--l", type=_positive, required=True)
    for name, text in (("sum", "disjoint sum of two families"), ("product", "product of two families")):
        r = recipes.add_parser(name, parents=[common], help=text)
        r.add_argument("--input", required=True)
        r.add_argument("--input2", required=True)
    r = recipes.add_parser("prop3", parents=[common], help="plane plus a complete uniform family")
    r.add_argument("--q", type=_positive, required=True)
    r.add_argument("--l", type=_positive, required=True)
    for name in ("brace-daykin", "neq2k"):
        r = recipes.add_parser(name, parents=[common], help=f"{name} family for n = 2k")
        r.add_argument("--k", type=_positive, required=True)
    for r in recipes.choices.values():
        r.add_argument("--out", help="write the family here instead of stdout")

    p = sub.add_parser("verify", parents=[common], help="check a family file")
    p.add_argument("--input", help="family file (default: stdin)")
    p.add_argument("--s", type=_positive, help="also test s-subset-regularity")

    p = sub.add_parser("search", parents=[common], help="look for a large regular intersecting family")
    p.add_argument("--n", type=_positive, required=True)
    p.add_argument("--k", type=_positive, required=True)
    p.add_argument("--strategy", choices=("cyclic", "dfs"), default="cyclic")
    p.add_argument("--target", type=_positive, help="dfs only: look for exactly this size")
    p.add_argument("--time-limit", type=_positive_float, help="seconds before giving up (exit 1)")
    p.add_argument("--seed", type=int, default=0, help="recorded in the result; the search is deterministic")
    p.add_argument("--threads", type=_positive, default=1, help="dfs worker threads")
    p.add_argument("--out", help="write the family found here")

    p = sub.add_parser("scheme", parents=[common], help="Johnson scheme tables")
    p.add_argument("--n", type=_positive, required=True)
    p.add_argument("--k", type=_positive, required=True)
    p.add_argument("--matrix", choices=("P", "Q"), default="P")
    p.add_argument("--gamma", action="store_true", help="print the gamma coefficients instead")

    p = sub.add_parser("lp", parents=[common], help="Delsarte LP bound")
    p.add_argument("--n", type=_positive, required=True)
    p.add_argument("--k", type=_positive, required=True)
    g = p.add_mutually_exclusive_group()
    g.add_argument("--regular", dest="regular", action="store_true", default=True)
    g.add_argument("--no-regular", dest="regular", action="store_false")
    return ap


# --------------------------------------------------------------------------
# output helpers


def _record(**fields) -> dict:
    out = {key: None for key in JSON_KEYS}
    out["bounds"] = []
    out["inner_distribution"] = []
    out.update(fields)
    return out


def _family_record(fam: KSetFamily, **extra) -> dict:
    reg, delta = is_regular(fam) if len(fam) else (False, None)
    dist = inner_distribution(fam).a if len(fam) else ()
    return _record(
        n=fam.n,
        k=fam.k,
        size=len(fam),
        delta=delta,
        regular=reg,
        intersecting=is_intersecting(fam),
        inner_distribution=[int(x) for x in dist],
        **extra,
    )


def _bound_dicts(rep: bounds.BoundReport) -> list[dict]:
    return [
        {
            "name": e.name,
            "value": e.value,
            "applicable": e.applicable,
            "kind": e.kind,
            "exact": None if e.exact is None else fmt(e.exact),
            "note": e.note,
        }
        for e in rep.entries
    ]


def _emit_json(obj: dict, out) -> None:
    json.dump(obj, out, indent=2, sort_keys=False)
    out.write("\n")


# --------------------------------------------------------------------------
# subcommands


def cmd_bounds(args, out) -> None:
    rep = bounds.bound_report(args.n, args.k, args.s, with_lp=not args.no_lp)
    if args.json:
        _emit_json(_record(n=args.n, k=args.k, bounds=_bound_dicts(rep), verdict=rep.verdict), out)
        return
    for e in rep.entries:
        value = "-" if e.value is None else str(e.value)
        out.write(f"{e.name} {value} {'applicable' if e.applicable else 'n/a'}: {e.note}\n")
    line = f"verdict {rep.verdict}"
    if rep.notes:
        line += " (" + "; ".join(rep.notes) + ")"
    out.write(line + "\n")


def _build(args) -> KSetFamily:
    recipe = args.recipe
    if recipe == "pp":
        return construct.projective_plane(args.q)
    if recipe == "complete":
        return construct.complete_uniform(args.z, args.m)
    if recipe == "extend":
        return construct.extend_family(read_family(args.input), args.l)
    if recipe == "sum":
        return construct.disjoint_sum(read_family(args.input), read_family(args.input2))
    if recipe == "product":
        return construct.product_family(read_family(args.input), read_family(args.input2))
    if recipe == "prop3":
        return construct.prop3_construction(args.q, args.l)
    if recipe == "brace-daykin":
        return construct.brace_daykin(args.k)
    return construct.neq2k_construction(args.k)


def cmd_construct(args, out) -> None:
    fam = _build(args)
    if args.out:
        write_family(fam, args.out)
        if args.json:
            _emit_json(_family_record(fam, file=args.out), out)
        else:
            out.write(f"wrote {len(fam)} sets (n={fam.n}, k={fam.k}) to {args.out}\n")
    elif args.json:
        _emit_json(_family_record(fam, family=[list(s) for s in fam.sets]), out)
    else:
        out.write(dumps(fam))


def cmd_verify(args, out) -> None:
    fam = read_family(args.input if args.input else sys.stdin)
    inter = is_intersecting(fam)
    if not len(fam):
        if args.json:
            _emit_json(_family_record(fam), out)
        else:
            out.write(f"regular: false, intersecting: {_bool(inter)}, size 0\n")
        return
    reg, delta = is_regular(fam)
    prof = degree_profile(fam)
    dist = inner_distribution(fam)
    head = f"regular: {_bool(reg)}" + (f" (δ={delta})" if reg else "")
    lines = [
        f"{head}, intersecting: {_bool(inter)}, size {len(fam)}",
        f"n {fam.n}",
        f"k {fam.k}",
        f"size {len(fam)}",
        f"intersecting {_bool(inter)}",
        f"degree min {prof.min} max {prof.max}",
        f"regular {_bool(reg)}" + (f" δ={delta}" if reg else ""),
        f"diversity {diversity(fam)}",
        f"irregularity " + (fmt(irregularity_ratio(fam)) if prof.min else "undefined (uncovered element)"),
        f"ratio {fmt(fam.ratio())}",
        "inner distribution " + " ".join(fmt(x) for x in dist.a),
    ]
    extra: dict = {}
    if fam.n >= 2 * fam.k:
        mw = macwilliams_transform(scheme_tables(fam.n, fam.k), dist)
        ok = all(x >= 0 for x in mw)
        lines.append("macwilliams " + " ".join(fmt(x) for x in mw) + f" (nonnegative: {_bool(ok)})")
        extra["macwilliams"] = [fmt(x) for x in mw]
    if args.s is not None:
        sreg, ds = is_subset_regular(fam, args.s)
        lines.append(f"{args.s}-subset-regular {_bool(sreg)}" + (f" δ_{args.s}={ds}" if sreg else ""))
        extra["subset_regular"] = {"s": args.s, "regular": sreg, "delta": ds}
    if args.json:
        _emit_json(_family_record(fam, **extra), out)
    else:
        out.write("\n".join(lines) + "\n")


def _search_lines(res: search.SearchResult) -> list[str]:
    return [
        f"strategy {res.strategy}",
        f"size {res.size}",
        f"δ {'-' if res.delta is None else res.delta}",
        f"exhaustive {_bool(res.exhaustive)}",
        f"scope {res.scope} ({'complete' if res.scope_complete else 'partial'})",
        f"nodes {res.explored_nodes}",
        f"elapsed {res.elapsed:.3f}s",
    ]


def _search_record(res: search.SearchResult, n: int, k: int) -> dict:
    extra = {
        "strategy": res.strategy,
        "exhaustive": res.exhaustive,
        "scope": res.scope,
        "scope_complete": res.scope_complete,
        "explored_nodes": res.explored_nodes,
        "seed": res.seed,
        "timed_out": res.timed_out,
    }
    if res.family is None:
        return _record(n=n, k=k, size=0, **extra)
    return _family_record(res.family, **extra)


def cmd_search(args, out) -> None:
    if args.strategy == "cyclic":
        if args.target is not None:
            raise RifError("--target only applies to --strategy dfs")
        res = search.cyclic_orbit_search(args.n, args.k, seed=args.seed)
    else:
        try:
            res = search.dfs_search(
                args.n, args.k, args.target, time_limit=args.time_limit, seed=args.seed, threads=args.threads
            )
        except TimeLimitExceeded as exc:
            if exc.result is not None:
                _write_search(exc.result, args, out)
            raise
    _write_search(res, args, out)


def _write_search(res: search.SearchResult, args, out) -> None:
    if res.family is not None and args.out:
        write_family(res.family, args.out)
    if args.json:
        _emit_json(_search_record(res, args.n, args.k), out)
    else:
        out.write("\n".join(_search_lines(res)) + "\n")


def cmd_scheme(args, out) -> None:
    if args.gamma:
        g = gamma_coefficients(args.n, args.k)
        if args.json:
            _emit_json(_record(n=args.n, k=args.k, gamma=list(g)), out)
        else:
            out.write(" ".join(str(x) for x in g) + "\n")
        return
    t = scheme_tables(args.n, args.k)
    mat = t.P if args.matrix == "P" else t.Q
    rows = [[fmt(x) for x in row] for row in mat]
    if args.json:
        _emit_json(_record(n=args.n, k=args.k, matrix=args.matrix, rows=rows), out)
    else:
        out.write("\n".join("\t".join(row) for row in rows) + "\n")


def cmd_lp(args, out) -> None:
    res = lp_max_regular_intersecting(args.n, args.k, args.regular)
    witness = None if res.witness is None else [fmt(x) for x in res.witness]
    if args.json:
        opt = None if res.optimum is None else fmt(res.optimum)
        _emit_json(_record(n=args.n, k=args.k, status=res.status, optimum=opt, witness=witness), out)
        return
    out.write(f"status {res.status}\n")
    if res.optimum is not None:
        out.write(f"optimum {fmt(res.optimum)}\n")
        out.write("witness a_1..a_{k-1} " + " ".join(witness) + "\n")


COMMANDS = {
    "bounds": cmd_bounds,
    "construct": cmd_construct,
    "verify": cmd_verify,
    "search": cmd_search,
    "scheme": cmd_scheme,
    "lp": cmd_lp,
}


def run(argv: Sequence[str] | None = None, out=None, err=None) -> int:
    out = sys.stdout if out is None else out
    err = sys.stderr if err is None else err
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    if not hasattr(args, "json"):
        args.json = False
    try:
        COMMANDS[args.command](args, out)
    except RifError as exc:
        err.write(f"{type(exc).__name__}: {exc}\n")
        return 1
    except OSError as exc:
        err.write(f"{type(exc).__name__}: {exc}\n")
        return 1
    return 0


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
