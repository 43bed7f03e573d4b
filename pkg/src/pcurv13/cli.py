"""Command-line interface.

Subcommands mirror the library layout: ``bazaikin`` (parameter checks and
catalog enumeration), ``group`` (build/analyze multiplication tables),
``fixedpoint`` (profile census, exact-sequence solver, divisibility
obstruction), ``ss`` (spectral-sequence verdict) and ``theorem-a`` (the
full case engine).  Exit code 0 on success, 2 on invalid input.

The environment variable PCURV13_THREADS caps internal parallelism; the
current engines are sequential, so any positive value is accepted and a
cap of 1 is honored trivially.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction

from . import bazaikin, cohomology, groups, pipeline, spectral


def thread_cap() -> int:
    raw = os.environ.get("PCURV13_THREADS")
    if raw is None:
        return 1
    try:
        val = int(raw)
    except ValueError:
        raise SystemExit2(f"PCURV13_THREADS must be an integer, got {raw!r}")
    if val < 1:
        raise SystemExit2("PCURV13_THREADS must be at least 1")
    return val


class SystemExit2(Exception):
    """Invalid input; mapped to exit code 2."""


def _emit(data) -> None:
    json.dump(data, sys.stdout, indent=2, sort_keys=False)
    sys.stdout.write("\n")


# ---------------------------------------------------------------------------
# bazaikin


def _bazaikin_check_payload(q: bazaikin.QTuple) -> dict:
    report = bazaikin.check_free(q)
    curv = bazaikin.check_curvature(q)
    e3 = bazaikin.e3(q)
    m = bazaikin.h6_order(q)
    return {
        "q": list(q),
        "free": report.verdict,
        "all_odd": report.all_odd,
        "failing_pairs": [
            [list(ij), list(kl), g] for ij, kl, g in report.failing_pairs
        ],
        "curvature": curv.value,
        "e3": e3,
        "m": f"{e3}/8",
        "m_integral": m.is_integral,
        "mod3_type": bazaikin.mod3_type(q),
    }


def cmd_bazaikin_check(args) -> int:
    q = bazaikin.QTuple.of(*args.q)
    payload = _bazaikin_check_payload(q)
    if args.json:
        _emit(payload)
        return 0
    print(f"q (canonical): {tuple(q)}")
    if payload["free"]:
        print("free action: yes (all entries odd, all 15 pair gcds equal 2)")
    else:
        print("free action: NO")
        if not payload["all_odd"]:
            print("  some entry is even")
        for ij, kl, g in payload["failing_pairs"]:
            print(f"  pair sums at indices {ij} and {kl} have gcd {g}")
    print(f"curvature pair-sums: {payload['curvature']}")
    integral = "integral" if payload["m_integral"] else "NOT integral"
    print(f"torsion order m = {payload['m']} = {Fraction(payload['e3'], 8)} ({integral})")
    print(f"mod-3 cohomology type: {payload['mod3_type']}")
    return 0


def cmd_bazaikin_enumerate(args) -> int:
    if args.bound < 1:
        raise SystemExit2("--bound must be at least 1")
    spaces = bazaikin.enumerate_spaces(args.bound)
    if args.format == "json":
        _emit(
            {
                "bound": args.bound,
                "count": len(spaces),
                "spaces": [_bazaikin_check_payload(q) for q in spaces],
            }
        )
    else:
        print("q1\tq2\tq3\tq4\tq5\te3\tm\tm_integral\tmod3_type")
        for q in spaces:
            p = _bazaikin_check_payload(q)
            print(
                "\t".join(
                    [*(str(x) for x in q), str(p["e3"]), p["m"],
                     str(p["m_integral"]).lower(), p["mod3_type"]]
                )
            )
    return 0


# ---------------------------------------------------------------------------
# group


def cmd_group_build(args) -> int:
    if args.burnside and args.name:
        raise SystemExit2("give either --burnside or --name, not both")
    if args.burnside:
        m, n, r = args.burnside
        try:
            G = groups.build_burnside(groups.BurnsideParams(m, n, r))
        except groups.GroupError as exc:
            raise SystemExit2(str(exc))
    elif args.name:
        try:
            G = groups.build_standard(args.name)
        except groups.GroupError as exc:
            raise SystemExit2(str(exc))
    else:
        raise SystemExit2("one of --burnside m n r or --name NAME is required")
    if args.out:
        groups.write_group_file(G, args.out)
        print(f"wrote order-{G.order} table to {args.out}")
    else:
        sys.stdout.write(f"order {G.order}\n")
        for row in G.table:
            sys.stdout.write(" ".join(str(int(x)) for x in row) + "\n")
    return 0


def cmd_group_analyze(args) -> int:
    try:
        G = groups.read_group_file(args.infile)
    except (OSError, groups.GroupError, ValueError) as exc:
        raise SystemExit2(f"cannot read group table: {exc}")
    primes = groups.prime_divisors(G.order)
    is_p_group = len(primes) == 1
    davis = groups.davis_decomposition(G)
    payload = {
        "order": G.order,
        "abelian": G.is_abelian,
        "exponent": G.exponent,
        "sylow": {str(p): groups.sylow(G, p).is_cyclic for p in primes},
        "p2": {str(p): groups.p2_condition(G, p) for p in primes},
        "two_p": groups.two_p_condition(G),
        "min_cyclic_index": groups.min_cyclic_index(G),
        "normal_rank": (
            groups.normal_rank(G, primes[0]) if is_p_group else None
        ),
        "davis": (
            None
            if davis is None
            else {
                "a": davis[0].bit_length() - 1,
                "two_part": davis[0],
                "odd_order": davis[1].order,
            }
        ),
    }
    if args.json:
        _emit(payload)
    else:
        for k, v in payload.items():
            print(f"{k}: {v}")
    return 0


# ---------------------------------------------------------------------------
# fixedpoint


def cmd_fixedpoint_profiles(args) -> int:
    try:
        profiles = cohomology.enumerate_profiles(args.budget, args.dim)
    except ValueError as exc:
        raise SystemExit2(str(exc))
    payload = {"profiles": [list(p.components) for p in profiles]}
    if args.json:
        _emit(payload)
    else:
        for p in profiles:
            print(" + ".join(p.components))
    return 0


def _parse_space(label: str) -> tuple[int, ...]:
    if label in cohomology.COMPONENT_BETTI:
        return cohomology.COMPONENT_BETTI[label]
    raise SystemExit2(
        f"unknown space {label!r}; choose from {sorted(cohomology.COMPONENT_BETTI)}"
    )


def cmd_fixedpoint_gysin(args) -> int:
    bX = _parse_space(args.space)
    dim = len(bX) - 1
    if args.fixed == "empty":
        bF = None
    else:
        parts = [_parse_space(s.strip()) for s in args.fixed.split(",") if s.strip()]
        acc = [0] * (dim + 1)
        for b in parts:
            for i, x in enumerate(b):
                acc[i] += x
        bF = tuple(acc)
    sols = cohomology.smith_gysin_solve(bX, bF, dim)
    payload = {
        "space": args.space,
        "fixed": args.fixed,
        "solutions": [{"R": list(s.R), "chi_bar": s.chi_bar} for s in sols],
    }
    if len(sols) == 1:
        payload["R"] = list(sols[0].R)
        payload["chi_bar"] = sols[0].chi_bar
    _emit(payload)
    return 0


def cmd_fixedpoint_obstruct(args) -> int:
    try:
        group = cohomology.QuotientIndex.parse(args.group)
    except ValueError as exc:
        raise SystemExit2(f"bad --group (want cd:D or zpxzp:P): {exc}")
    try:
        lef = [int(x) for x in args.lef.split(",") if x.strip()]
    except ValueError:
        raise SystemExit2("--lef wants a comma-separated integer list")
    res = cohomology.divisibility_obstruction(group, lef)
    _emit(
        {
            "group": {"kind": group.kind, "value": group.value},
            "lef_values": lef,
            "excluded": res.excluded,
            "surviving": sorted(res.surviving),
        }
    )
    return 0


# ---------------------------------------------------------------------------
# ss / theorem-a


def cmd_ss_verify(args) -> int:
    try:
        report = spectral.exhaustive_verdict(args.p)
    except ValueError as exc:
        raise SystemExit2(str(exc))
    payload = {
        "p": report.p,
        "choices": report.choices_examined,
        "min_deg6_survivors": report.min_deg6_survivors,
        "free_action_possible": not report.verdict,
    }
    if args.trace:
        pages = spectral.run_choice_pages(args.p, report.minimizing_choice)
        payload["minimizing_choice"] = {
            "a": list(report.minimizing_choice.a),
            "d3y": list(report.minimizing_choice.d3y),
            "d4x": _opt(report.minimizing_choice.d4x),
            "d4xy": _opt(report.minimizing_choice.d4xy),
            "d6xy": _opt(report.minimizing_choice.d6xy),
        }
        payload["pages"] = [
            {
                "r": pg.r if pg.r is not None else "inf",
                "dims": {f"{m},{n}": d for (m, n), d in sorted(pg.dims.items())},
                "total_degree_6": pg.total_degree(6),
            }
            for pg in pages
        ]
    _emit(payload)
    return 0


def _opt(v):
    return None if v is None else list(v)


def cmd_theorem_a(args) -> int:
    scenario = pipeline.ScenarioInput(args.rank, args.cohomology)
    report = pipeline.theorem_a_report(scenario)
    if args.explain:
        print(report.explain())
    elif args.json:
        _emit(report.to_json())
    else:
        print(
            f"rank-{args.rank} torus, {args.cohomology} type: admissible "
            "cyclic-subgroup indices "
            + ", ".join(str(d) for d in sorted(report.index_bound_set))
        )
    return 0


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="pcurv13",
        description=(
            "obstruction calculus for fundamental groups of positively "
            "curved 13-manifolds with torus symmetry"
        ),
    )
    sub = ap.add_subparsers(dest="cmd", required=True)

    bz = sub.add_parser("bazaikin", help="parameter admissibility and catalog")
    bzsub = bz.add_subparsers(dest="sub", required=True)
    chk = bzsub.add_parser("check", help="check one weight tuple")
    chk.add_argument("q", nargs=5, type=int, metavar="qi")
    chk.add_argument("--json", action="store_true")
    chk.set_defaults(func=cmd_bazaikin_check)
    en = bzsub.add_parser("enumerate", help="catalog admissible tuples")
    en.add_argument("--bound", type=int, required=True)
    en.add_argument("--format", choices=("json", "tsv"), default="json")
    en.set_defaults(func=cmd_bazaikin_enumerate)

    gp = sub.add_parser("group", help="finite group tables")
    gpsub = gp.add_subparsers(dest="sub", required=True)
    gb = gpsub.add_parser("build", help="emit a multiplication table")
    gb.add_argument("--burnside", nargs=3, type=int, metavar=("M", "N", "R"))
    gb.add_argument("--name", type=str)
    gb.add_argument("--out", type=str)
    gb.set_defaults(func=cmd_group_build)
    ga = gpsub.add_parser("analyze", help="analyze a table file")
    ga.add_argument("--in", dest="infile", required=True)
    ga.add_argument("--json", action="store_true")
    ga.set_defaults(func=cmd_group_analyze)

    fp = sub.add_parser("fixedpoint", help="fixed-point bookkeeping")
    fpsub = fp.add_subparsers(dest="sub", required=True)
    pr = fpsub.add_parser("profiles", help="census of fixed-set profiles")
    pr.add_argument("--budget", type=int, default=6)
    pr.add_argument("--dim", type=int, default=5)
    pr.add_argument("--json", action="store_true")
    pr.set_defaults(func=cmd_fixedpoint_profiles)
    gy = fpsub.add_parser("gysin", help="solve the circle-quotient sequence")
    gy.add_argument("--space", required=True)
    gy.add_argument("--fixed", default="empty")
    gy.set_defaults(func=cmd_fixedpoint_gysin)
    ob = fpsub.add_parser("obstruct", help="divisibility obstruction")
    ob.add_argument("--group", required=True, help="cd:D or zpxzp:P")
    ob.add_argument("--lef", required=True, help="comma-separated integers")
    ob.set_defaults(func=cmd_fixedpoint_obstruct)

    ssp = sub.add_parser("ss", help="spectral-sequence engine")
    sssub = ssp.add_subparsers(dest="sub", required=True)
    vf = sssub.add_parser("verify", help="exhaustive differential sweep")
    vf.add_argument("--p", type=int, required=True)
    vf.add_argument("--trace", action="store_true")
    vf.set_defaults(func=cmd_ss_verify)

    ta = sub.add_parser("theorem-a", help="full case engine")
    ta.add_argument("--rank", type=int, choices=(2, 3), required=True)
    ta.add_argument(
        "--cohomology", choices=(pipeline.RATIONAL, pipeline.MOD3),
        default=pipeline.RATIONAL,
    )
    ta.add_argument("--json", action="store_true")
    ta.add_argument("--explain", action="store_true")
    ta.set_defaults(func=cmd_theorem_a)
    return ap


def main(argv=None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    try:
        thread_cap()
        return args.func(args)
    except SystemExit2 as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (ValueError, groups.GroupError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
