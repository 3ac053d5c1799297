"""Command line front end: analyze orbits, sweep partitions, emit tables,
run the verification suites.  JSON is the machine interface; markdown and
ascii render the same report objects.  Exit codes: 0 success, 1 counter-
examples found, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time
from concurrent.futures import ProcessPoolExecutor

from . import analysis, exceptional
from .matrixalg import SuperPartition, pyramid
from .superalg import TableAlgebra, check_super_jacobi

CHECK = "✓"

EXCEPTIONAL_NAMES = {"D21", "G3", "F4"}
FAMILY_NAMES = {"gl", "sl", "psl", "osp"}


def _cache_dir():
    return os.environ.get("SUPERORBIT_CACHE")


def build_exceptional_cached(name, alpha="symbolic"):
    cache = _cache_dir()
    if cache:
        tag = "symbolic" if alpha == "symbolic" else str(alpha).replace("/", "_")
        path = os.path.join(cache, f"{name}-{tag}.json")
        if os.path.exists(path):
            with open(path) as fh:
                return TableAlgebra.from_json_dict(json.load(fh))
    alg = exceptional.build_exceptional(name, alpha)
    if cache:
        os.makedirs(cache, exist_ok=True)
        with open(path, "w") as fh:
            json.dump(alg.to_json_dict(), fh)
    return alg


def _flag_mark(v):
    return CHECK if v else ""


def report_markdown_row(rep):
    f = rep.flags
    return (f"| {rep.label} | {_flag_mark(f['reachable'])} "
            f"| {_flag_mark(f['strongly_reachable'])} "
            f"| {_flag_mark(f['panyushev_generated'])} |")


TABLE_HEADER = ("| orbit | reachable | strongly reachable | Panyushev |\n"
                "|---|---|---|---|")


def exceptional_table_markdown(name, alpha="symbolic"):
    alg = build_exceptional_cached(name, alpha)
    reports = [analysis.analyze_exceptional_orbit(alg, rep)
               for rep in exceptional.orbit_reps(alg)]
    lines = [f"# {alg.name}: reachable, strongly reachable and Panyushev orbits",
             "", TABLE_HEADER]
    lines += [report_markdown_row(rep) for rep in reports]
    return "\n".join(lines) + "\n"


def report_json(rep):
    return json.dumps(rep.to_dict(), indent=2, sort_keys=False)


def report_ascii(rep, pyr=None):
    lines = [f"algebra: {rep.algebra_name}", f"orbit:   {rep.label}"]
    if pyr is not None:
        lines.append("pyramid:")
        lines.extend("  " + ln for ln in pyr.ascii_art().splitlines())
    lines.append("dims:    " + ", ".join(f"{k}={v}" for k, v in rep.dims.items()))
    lines.append("grades:  " + ", ".join(f"{j}:{d}" for j, d in sorted(rep.graded_dims.items())))
    flag_names = {
        "reachable": "reachable",
        "strongly_reachable": "strongly reachable",
        "panyushev_generated": "Panyushev (generated)",
        "panyushev_layerwise": "Panyushev (layerwise)",
        "e_in_bracket_grade1": "e in [g^e(1),g^e(1)]",
        "criterion": "partition criterion",
    }
    for key, label in flag_names.items():
        if key in rep.flags:
            lines.append(f"{label + ':':24s}{'yes' if rep.flags[key] else 'no'}")
    if rep.diagram is not None:
        lines.append(f"diagram: {rep.diagram.render()}  (n2={rep.diagram.n2()})")
    return "\n".join(lines) + "\n"


def cmd_analyze(args):
    if args.algebra in EXCEPTIONAL_NAMES:
        if not args.orbit:
            print("analyze: exceptional algebras need --orbit", file=sys.stderr)
            return 2
        alpha = args.alpha if args.algebra == "D21" else "symbolic"
        if args.algebra == "D21" and alpha == "default":
            alpha = 2  # fast rational sample unless --alpha symbolic
        alg = build_exceptional_cached(args.algebra, alpha)
        reps = {r.label: r for r in exceptional.orbit_reps(alg)}
        label = args.orbit.replace(" ", "")
        if label not in reps:
            print(f"unknown orbit {label!r} for {alg.name}; valid labels:",
                  file=sys.stderr)
            for known in reps:
                print(f"  {known}", file=sys.stderr)
            return 2
        rep = analysis.analyze_exceptional_orbit(alg, reps[label],
                                                 with_center=not args.no_center)
        pyr = None
    else:
        if not args.partition:
            print("analyze: matrix families need --partition", file=sys.stderr)
            return 2
        try:
            lam = SuperPartition.parse(args.partition)
        except ValueError as ex:
            print(f"bad partition: {ex}", file=sys.stderr)
            return 2
        if args.algebra == "psl" and lam.m != lam.n:
            print("psl needs a partition of (n|n)", file=sys.stderr)
            return 2
        if args.algebra == "osp" and not lam.osp_valid():
            print(f"partition {lam} violates the osp multiplicity constraints",
                  file=sys.stderr)
            return 2
        rep = analysis.analyze_partition(args.algebra, lam,
                                         with_center=not args.no_center)
        pyr = pyramid(lam)
    if args.format == "json":
        print(report_json(rep))
    elif args.format == "md":
        print(TABLE_HEADER)
        print(report_markdown_row(rep))
    else:
        print(report_ascii(rep, pyr), end="")
    return 0


def _enumerate_worker(job):
    family, text = job
    rep = analysis.analyze_partition(family, SuperPartition.parse(text))
    return rep.to_dict()


def cmd_enumerate(args):
    lams = [lam.text() for lam in analysis.sweep_partitions(args.family, args.max)]
    jobs = [(args.family, t) for t in lams]
    if args.jobs > 1:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            dicts = list(pool.map(_enumerate_worker, jobs))
    else:
        dicts = [_enumerate_worker(j) for j in jobs]
    if args.format == "json":
        print(json.dumps(dicts, indent=2, sort_keys=False))
    else:
        print("| partition | reachable | strongly reachable | Panyushev | criterion |")
        print("|---|---|---|---|---|")
        for d in dicts:
            f = d["flags"]
            print(f"| {d['orbit']} | {_flag_mark(f['reachable'])} "
                  f"| {_flag_mark(f['strongly_reachable'])} "
                  f"| {_flag_mark(f['panyushev_generated'])} "
                  f"| {_flag_mark(f['criterion'])} |")
    return 0


def cmd_tables(args):
    alpha = "symbolic" if args.alpha == "default" else args.alpha
    out = []
    for name in ("D21", "G3", "F4"):
        out.append(exceptional_table_markdown(name, alpha))
    text = "\n".join(out)
    if args.out:
        os.makedirs(args.out, exist_ok=True)
        for name, body in zip(("table_d21.md", "table_g3.md", "table_f4.md"),
                              out):
            with open(os.path.join(args.out, name), "w") as fh:
                fh.write(body)
        print(f"wrote 3 tables to {args.out}")
    else:
        print(text, end="")
    return 0


def _sweep_theorem_parallel(name, bound, jobs):
    """theorem1/theorem2 over all families with a process pool per partition."""
    tasks = []
    for family in ("sl", "psl", "osp"):
        tasks.extend((family, lam.text())
                     for lam in analysis.sweep_partitions(family, bound))
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        dicts = list(pool.map(_enumerate_worker, tasks))
    bad = []
    for d in dicts:
        f = d["flags"]
        if name == "theorem1":
            failed = f["reachable"] != f["criterion"]
        else:
            failed = len({f["reachable"], f["criterion"], f["panyushev_generated"],
                          f["panyushev_layerwise"], f["e_in_bracket_grade1"]}) != 1
        if failed:
            bad.append((d["algebra"], d["orbit"], f))
    return bad, len(tasks)


def cmd_verify(args):
    alpha = "symbolic" if args.alpha == "default" else args.alpha
    started = time.time()
    if args.theorem == "jacobi":
        if args.algebra in EXCEPTIONAL_NAMES:
            alg = build_exceptional_cached(args.algebra, alpha)
        else:
            print("verify jacobi needs --algebra D21|G3|F4", file=sys.stderr)
            return 2
        bad = check_super_jacobi(alg)
        print(f"jacobi {alg.name}: {len(bad)} violations "
              f"({time.time() - started:.1f}s)")
        return 1 if bad else 0
    if args.theorem not in analysis.THEOREM_NAMES:
        print(f"unknown theorem {args.theorem!r}; choose from "
              f"{', '.join(analysis.THEOREM_NAMES)} or jacobi", file=sys.stderr)
        return 2
    if args.jobs > 1 and args.theorem in ("theorem1", "theorem2"):
        bad, count = _sweep_theorem_parallel(args.theorem, args.max, args.jobs)
    else:
        bad, count = analysis.verify_theorem(args.theorem, args.max, alpha)
    elapsed = time.time() - started
    print(f"{args.theorem}: {len(bad)} counterexamples over {count} instances "
          f"({elapsed:.1f}s)")
    for b in bad:
        print("  counterexample:", json.dumps(b, default=str))
    return 1 if bad else 0


def main(argv=None):
    parser = argparse.ArgumentParser(
        prog="superorbit",
        description="Nilpotent orbits in basic classical Lie superalgebras: "
                    "reachability, strong reachability, Panyushev property.")
    sub = parser.add_subparsers(dest="command")

    pa = sub.add_parser("analyze", help="analyze a single nilpotent orbit")
    pa.add_argument("--algebra", required=True,
                    choices=sorted(FAMILY_NAMES | EXCEPTIONAL_NAMES))
    pa.add_argument("--partition", help='super-partition "p1,p2,...|q1,q2,..."')
    pa.add_argument("--orbit", help="orbit label for D21/G3/F4 (see --orbit help)")
    pa.add_argument("--format", choices=("json", "md", "ascii"), default="ascii")
    pa.add_argument("--alpha", default="default",
                    help="'symbolic' or a rational value for D(2,1;a)")
    pa.add_argument("--no-center", action="store_true",
                    help="skip the centre-of-centralizer computation")
    pa.set_defaults(func=cmd_analyze)

    pe = sub.add_parser("enumerate", help="sweep all partitions of a family")
    pe.add_argument("--family", required=True, choices=("sl", "psl", "osp"))
    pe.add_argument("--max", type=int, default=None,
                    help="size bound (m+n for sl, n for psl, m+2n for osp)")
    pe.add_argument("--jobs", type=int, default=1)
    pe.add_argument("--format", choices=("json", "md"), default="md")
    pe.set_defaults(func=cmd_enumerate)

    pt = sub.add_parser("tables", help="regenerate the classification tables")
    pt.add_argument("--out", help="directory for the markdown files")
    pt.add_argument("--alpha", default="default")
    pt.set_defaults(func=cmd_tables)

    pv = sub.add_parser("verify", help="run a named verification suite")
    pv.add_argument("theorem",
                    help=f"one of {', '.join(analysis.THEOREM_NAMES)}, jacobi")
    pv.add_argument("--max", type=int, default=None)
    pv.add_argument("--algebra", help="for 'verify jacobi'")
    pv.add_argument("--alpha", default="default")
    pv.add_argument("--jobs", type=int, default=1)
    pv.set_defaults(func=cmd_verify)

    args = parser.parse_args(argv)
    if not args.command:
        parser.print_help()
        return 2
    try:
        return args.func(args)
    except ValueError as ex:
        print(f"error: {ex}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
