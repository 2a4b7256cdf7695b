"""Command-line frontend.

Subcommands map one-to-one onto the library: analyze, bound, solve-k,
normal-form, transform, pipeline, propagate, reduce, search, verify.
Reports print as JSON (bound defaults to a table; pass --json for the
mirror).  With --out DIR, commands also write matrix files, JSON reports,
and figures into DIR.

Exit codes: 0 success, 1 domain error (typed message on stderr), 2 usage.
"""

from __future__ import annotations

import argparse
import os
import sys
from fractions import Fraction
from pathlib import Path

from . import acceptance, bounds, code as code_mod, lrc, reports, search as search_mod, transform
from .code import LinearCode
from .errors import WorkbenchError


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.handler(args)
    except WorkbenchError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1


def _build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="lrc-lab",
        description="workbench for Singleton-optimal locally repairable codes",
    )
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, handler, help_):
        sp = sub.add_parser(name, help=help_)
        sp.set_defaults(handler=handler)
        return sp

    sp = add("analyze", _cmd_analyze, "locality, slack and normal-form report for a code file")
    sp.add_argument("code", help="code file (G/H blocks)")
    _common_code_flags(sp)

    sp = add("bound", _cmd_bound, "evaluate every applicable bound")
    sp.add_argument("--q", type=int)
    sp.add_argument("--n", type=int)
    sp.add_argument("--k", type=int)
    sp.add_argument("--d", type=int)
    sp.add_argument("--r", type=int)
    sp.add_argument("--lambda", dest="lam", help="distance fraction d/n as p/q")
    sp.add_argument("--assume-mds-conjecture", action="store_true")
    sp.add_argument("--divisible", action="store_true", help="(r+1) divides n")
    sp.add_argument("--disjoint", action="store_true", help="recovery sets are disjoint")
    sp.add_argument("--json", action="store_true")
    sp.add_argument("--out", help="directory for bounds.tsv / bounds.json / bounds.png")

    sp = add("solve-k", _cmd_solve_k, "the unique dimension fitting (n, d, r), if any")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--d", type=int, required=True)
    sp.add_argument("--r", type=int, required=True)

    sp = add("normal-form", _cmd_normal_form, "build the [H1; H2] parity-check normal form")
    sp.add_argument("code")
    _common_code_flags(sp)

    sp = add("transform", _cmd_transform, "row/column deletion derivations")
    sp.add_argument("code")
    sp.add_argument("--op", choices=["ci", "residual", "mds"], required=True)
    sp.add_argument("--rows", default="", help="comma-separated cover rows for --op ci")
    _common_code_flags(sp)

    sp = add("pipeline", _cmd_pipeline, "run the block column-operation pipeline")
    sp.add_argument("code")
    _common_code_flags(sp)

    sp = add("propagate", _cmd_propagate, "shorten/puncture one recovery set")
    sp.add_argument("code")
    sp.add_argument("--a", type=int, required=True, help="coordinates to shorten (0..r+1)")
    _common_code_flags(sp)

    sp = add("reduce", _cmd_reduce, "iterate propagation until d drops to its residue")
    sp.add_argument("code")
    _common_code_flags(sp)

    sp = add("search", _cmd_search, "search subspaces for Singleton-optimal codes")
    sp.add_argument("--q", type=int, required=True)
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--k", type=int, required=True)
    sp.add_argument("--d", type=int, required=True)
    sp.add_argument("--r", type=int, required=True)
    mode = sp.add_mutually_exclusive_group()
    mode.add_argument("--exhaustive", action="store_true", default=True)
    mode.add_argument("--random", type=int, metavar="N", help="try N random codes instead")
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--require-disjoint", action="store_true")
    sp.add_argument("--require-divisible", action="store_true")
    sp.add_argument("--jobs", type=int, default=1)
    sp.add_argument("--cap", type=int, help="subspace cap (default 1e8; env LRC_LAB_CAP)")
    sp.add_argument("--out", help="directory for witness code files + outcome JSON")

    sp = add("verify", _cmd_verify, "run the acceptance suites")
    sp.add_argument("tier", choices=["quick", "full"])

    return p


def _common_code_flags(sp: argparse.ArgumentParser) -> None:
    sp.add_argument("--r", default="auto", help="locality to assert, or 'auto'")
    sp.add_argument("--json", action="store_true", help="print JSON (default for reports)")
    sp.add_argument("--out", help="directory for report files and figures")


def _load(args) -> tuple[LinearCode, int]:
    c = code_mod.read_code(args.code)
    code_mod.min_distance(c)
    if args.r == "auto":
        prof = lrc.locality(c)
        return c, prof.r
    r = int(args.r)
    prof = lrc.locality(c, r_max=r)
    return c, prof.r


def _emit(args, payload: dict, stem: str) -> None:
    text = reports.dump_pretty(payload)
    sys.stdout.write(text)
    if args.out:
        out = Path(args.out)
        out.mkdir(parents=True, exist_ok=True)
        (out / f"{stem}.json").write_text(text)


# ---------------------------------------------------------------------------

def _cmd_analyze(args) -> int:
    c, r = _load(args)
    rep = lrc.analyze(c, r=None if args.r == "auto" else int(args.r))
    _emit(args, reports.analyze_payload(rep), "analyze")
    if args.out:
        from . import plotting

        out = Path(args.out)
        wd = code_mod.weight_distribution(c)
        plotting.weight_distribution_figure(
            wd, f"[{c.n},{c.k},{rep.d}] over GF({c.field.q})", out / "weights.png"
        )
        code_mod.write_code(out / "analyzed.code", c)
    return 0


def _cmd_bound(args) -> int:
    lam = None
    if args.lam:
        lam = Fraction(args.lam)
    query = bounds.BoundQuery(
        q=args.q,
        n=args.n,
        k=args.k,
        d=args.d,
        r=args.r,
        lam=lam,
        assume_mds_conjecture=args.assume_mds_conjecture,
        divisible=args.divisible,
        disjoint_recovery=args.disjoint,
    )
    rows = bounds.collect_reports(query)
    payload = reports.bound_payload(rows)
    table = _bound_table(rows)
    if args.json:
        sys.stdout.write(reports.dump_pretty(payload))
    else:
        sys.stdout.write(table)
    if args.out:
        from . import plotting

        out = Path(args.out)
        out.mkdir(parents=True, exist_ok=True)
        (out / "bounds.json").write_text(reports.dump_pretty(payload))
        (out / "bounds.tsv").write_text(table)
        plotting.bounds_figure(rows, args.q, out / "bounds.png")
    return 0


def _bound_table(rows: list[bounds.BoundReport]) -> str:
    header = ["name", "kind", "value", "conditions", "statement"]
    lines = ["\t".join(header)]
    for r in rows:
        lines.append(
            "\t".join(
                [r.name, r.kind, r.render_value(), ",".join(r.conditions) or "-", r.statement]
            )
        )
    return "\n".join(lines) + "\n"


def _cmd_solve_k(args) -> int:
    k = lrc.solve_k(args.n, args.d, args.r)
    print(k if k is not None else "none")
    return 0


def _cmd_normal_form(args) -> int:
    c, r = _load(args)
    nf = lrc.build_normal_form(c, r)
    _emit(args, reports.normal_form_payload(nf), "normal_form")
    if args.out:
        from . import matrix as matrix_mod
        from . import plotting

        out = Path(args.out)
        matrix_mod.write_matrix(out / "h1.matrix", nf.h1)
        matrix_mod.write_matrix(out / "h2.matrix", nf.h2)
        plotting.normal_form_figure(nf, out / "normal_form.png")
    return 0


def _cmd_transform(args) -> int:
    c, r = _load(args)
    if args.op == "ci":
        rows = tuple(int(x) for x in args.rows.split(",") if x.strip())
        nf = lrc.build_normal_form(c, r)
        rep = transform.derive_ci(nf, rows, r=r)
    elif args.op == "residual":
        rep = transform.derive_residual(c, r)
    else:
        rep = transform.derive_mds(c, r)
    _emit(args, reports.derivation_payload(rep), f"derivation_{args.op}")
    if args.out:
        out = Path(args.out)
        code_mod.write_code(out / "before.code", c)
        code_mod.write_code(out / "after.code", rep.result)
    return 0


def _cmd_pipeline(args) -> int:
    c, r = _load(args)
    nf = lrc.build_normal_form(c, r)
    rep = transform.run_pipeline(nf)
    _emit(args, reports.pipeline_payload(rep), "pipeline")
    if args.out:
        from . import matrix as matrix_mod

        out = Path(args.out)
        matrix_mod.write_matrix(out / "l1.matrix", rep.l1)
        matrix_mod.write_matrix(out / "l3.matrix", rep.l3)
        matrix_mod.write_matrix(out / "k.matrix", rep.k_matrix)
        if rep.ck is not None:
            code_mod.write_code(out / "ck.code", rep.ck)
    return 0


def _cmd_propagate(args) -> int:
    c, r = _load(args)
    rep = transform.propagate_optimal(c, r, args.a)
    _emit(args, reports.propagation_payload(rep), "propagation")
    if args.out:
        out = Path(args.out)
        code_mod.write_code(out / "before.code", c)
        code_mod.write_code(out / "after.code", rep.result)
    return 0


def _cmd_reduce(args) -> int:
    c, r = _load(args)
    rep = transform.reduce_distance(c, r)
    _emit(args, reports.reduction_payload(rep), "reduction")
    if args.out:
        out = Path(args.out)
        code_mod.write_code(out / "before.code", c)
        code_mod.write_code(out / "after.code", rep.result)
    return 0


def _cmd_search(args) -> int:
    task = search_mod.SearchTask(
        q=args.q,
        n=args.n,
        k=args.k,
        d_target=args.d,
        r_target=args.r,
        mode="random" if args.random else "exhaustive",
        random_count=args.random or 0,
        seed=args.seed,
        require_disjoint=args.require_disjoint,
        require_divisible=args.require_divisible,
        cap=args.cap,
        workers=args.jobs,
    )
    out = search_mod.search_singleton_optimal(task)
    payload = reports.search_payload(out)
    sys.stdout.write(reports.dump(payload))
    if args.out:
        outdir = Path(args.out)
        outdir.mkdir(parents=True, exist_ok=True)
        (outdir / "outcome.json").write_text(reports.dump(payload))
        for i, w in enumerate(out.witnesses):
            code_mod.write_code(outdir / f"witness_{i:03d}.code", w.code)
    return 0 if out.status != "budget_exceeded" else 1


def _cmd_verify(args) -> int:
    results = acceptance.run_suite(args.tier)
    failed = 0
    for res in results:
        status = "PASS" if res.ok else "FAIL"
        print(f"[{status}] {res.name}  ({res.seconds:.1f}s)  {res.detail}")
        if not res.ok:
            failed += 1
    print(f"{len(results) - failed}/{len(results)} criteria passed ({args.tier} tier)")
    return 0 if failed == 0 else 1


if __name__ == "__main__":
    sys.exit(main())
