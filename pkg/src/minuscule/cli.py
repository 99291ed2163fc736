"""Command-line interface: one binary, subcommands per engine capability.

Exit codes: 0 all good, 1 mathematical mismatch against golden data,
2 resource cap exceeded, 3 bad input.  Output is canonical (sorted,
newline-terminated) so identical inputs give byte-identical output
regardless of worker count.
"""

import argparse
import hashlib
import json
import sys
import time
from collections import Counter
from importlib import resources
from pathlib import Path

from .errors import ParameterError, StateCapExceeded, UnsupportedPosetError
from .ideals import rowmotion_orbits
from .orbits import (
    build_gapless_table,
    frame_check,
    load_or_build_table,
    promotion_order,
    verify_csp,
)
from .poset import cayley_moufang, freudenthal, parse_poset_spec, propeller
from .qpoly import plane_partition_gf

EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_RESOURCE = 2
EXIT_BAD_INPUT = 3


def _emit_table(rows: list[list], header: list[str], fmt: str) -> str:
    """Render rows as text, csv, or json; rows are emitted in the given order."""
    if fmt == "json":
        return json.dumps([dict(zip(header, row)) for row in rows], sort_keys=True) + "\n"
    if fmt == "csv":
        lines = [",".join(header)]
        lines.extend(",".join(str(v) for v in row) for row in rows)
        return "\n".join(lines) + "\n"
    widths = [max(len(h), *(len(str(r[i])) for r in rows)) if rows else len(h) for i, h in enumerate(header)]
    lines = ["  ".join(h.ljust(w) for h, w in zip(header, widths)).rstrip()]
    lines.extend(
        "  ".join(str(v).ljust(w) for v, w in zip(row, widths)).rstrip() for row in rows
    )
    return "\n".join(lines) + "\n"


def emit(payload, fmt: str = "text") -> str:
    """Canonical rendering of a payload: a (header, rows) table or a JSON-able dict."""
    if isinstance(payload, tuple) and len(payload) == 2:
        header, rows = payload
        return _emit_table(rows, header, fmt)
    if fmt == "json" or isinstance(payload, dict):
        return json.dumps(payload, sort_keys=True, indent=None) + "\n"
    return str(payload) + "\n"


def _golden_dir(args) -> "resources.abc.Traversable | Path":
    if args.golden_dir:
        return Path(args.golden_dir)
    return resources.files("minuscule").joinpath("data/golden")


def _load_golden(root, name: str) -> dict:
    path = root.joinpath(name) if hasattr(root, "joinpath") else root / name
    return json.loads(path.read_text())


def _cmd_rowmotion_orbits(args) -> tuple[int, str]:
    poset = parse_poset_spec(args.poset)
    summary = rowmotion_orbits(poset, args.k, cap=args.state_cap)
    rows = [[size, mult] for size, mult in summary.orbit_sizes]
    out = emit((["orbit_size", "multiplicity"], rows), args.format)
    out += emit({"total_states": summary.total_states}, "json" if args.format == "json" else "text")
    return EXIT_OK, out


def _cmd_gapless_table(args) -> tuple[int, str]:
    poset = parse_poset_spec(args.poset)
    if args.fresh:
        table = build_gapless_table(poset, workers=args.threads, cap=args.state_cap)
    else:
        table = load_or_build_table(
            poset, cache_dir=args.cache_dir, workers=args.threads, cap=args.state_cap
        )
    rows = table.triples()
    out = emit((["m_t", "period", "orbits"], rows), args.format)
    if args.format != "csv":
        out += emit({"total": table.total}, "json" if args.format == "json" else "text")
    return EXIT_OK, out


def _cmd_verify_csp(args) -> tuple[int, str]:
    poset = parse_poset_spec(args.poset)
    verdict = verify_csp(poset, args.k, cache_dir=args.cache_dir, workers=args.threads)
    if args.json:
        return EXIT_OK, emit(verdict.to_dict(), "json")
    rows = [
        [r.d, r.fixed_count, r.value.value if r.value.is_integer else "non-integer", r.match]
        for r in verdict.records
    ]
    out = _emit_table(rows, ["d", "fixed", "value", "match"], "text")
    out += f"verdict: {'holds' if verdict.holds else 'fails'} (order {verdict.order}, m {verdict.m})\n"
    return EXIT_OK, out


def _cmd_period(args) -> tuple[int, str]:
    poset = parse_poset_spec(args.poset)
    report = promotion_order(poset, args.m, cache_dir=args.cache_dir, workers=args.threads)
    payload = {"m": report.m, "period": report.period, "max_orbit": report.max_orbit}
    return EXIT_OK, emit(payload, "json")


def _cmd_frame_check(args) -> tuple[int, str]:
    poset = parse_poset_spec(args.poset) if args.poset else freudenthal()
    report = frame_check(poset, cache_dir=args.cache_dir, workers=args.threads)
    payload = {
        "frame": list(report.frame_elements),
        "stable": list(report.stable_elements),
        "match": report.match,
    }
    return (EXIT_OK if report.match else EXIT_MISMATCH), emit(payload, "json")


def _cmd_qpoly(args) -> tuple[int, str]:
    poset = parse_poset_spec(args.poset)
    gf = plane_partition_gf(poset, args.k)
    return EXIT_OK, json.dumps(list(gf.coeffs)) + "\n"


def _expected_csp(family: str, k: int) -> bool:
    return k <= 4 if family == "freudenthal" else True


def reproduce_all(threads: int = 1, golden_root=None, out=sys.stdout) -> int:
    """Recompute the headline results and compare them with the golden files.

    Emits one PASS/FAIL line per item; returns the number of failures.
    Tables are rebuilt from scratch (never read from cache).
    """
    if golden_root is None:
        golden_root = resources.files("minuscule").joinpath("data/golden")
    failures = 0

    def check(name: str, ok: bool, detail: str = "") -> None:
        nonlocal failures
        line = f"{'PASS' if ok else 'FAIL'}  {name}"
        if detail and not ok:
            line += f"  ({detail})"
        print(line, file=out)
        if not ok:
            failures += 1

    cm = cayley_moufang()
    cm_table = build_gapless_table(cm, workers=threads)
    golden = _load_golden(golden_root, "table_cayley_moufang.json")
    check(
        "gapless-table cayley-moufang",
        cm_table.triples() == golden["rows"] and cm_table.total == golden["total"],
        f"got total {cm_table.total}",
    )

    for p in (3, 4, 5, 6):
        pp = propeller(p)
        p_table = build_gapless_table(pp, workers=threads)
        golden = _load_golden(golden_root, f"table_propeller_{p}.json")
        check(
            f"gapless-table propeller-{p}",
            p_table.triples() == golden["rows"] and p_table.total == golden["total"],
            f"got {p_table.triples()}",
        )

    pf = freudenthal()
    pf_table = build_gapless_table(pf, workers=threads)
    golden = _load_golden(golden_root, "table_freudenthal.json")
    check(
        "gapless-table freudenthal",
        pf_table.triples() == golden["rows"] and pf_table.total == golden["total"],
        f"got total {pf_table.total}",
    )

    for k in range(0, 9):
        verdict = verify_csp(cm, k, table=cm_table)
        check(f"verify-csp cayley-moufang k={k}", verdict.holds == _expected_csp("cayley-moufang", k))
    for k in range(0, 6):
        verdict = verify_csp(pf, k, table=pf_table)
        check(
            f"verify-csp freudenthal k={k} ({'holds' if _expected_csp('freudenthal', k) else 'fails'})",
            verdict.holds == _expected_csp("freudenthal", k),
        )

    # Spot checks of the action order.  The full action order and the largest
    # single orbit differ on the 27-element shape once the ceiling reaches 24;
    # both are checked.
    for m, period, max_orbit in ((12, 12, 12), (17, 17, 17), (30, 30, 30)):
        rep = promotion_order(cm, m, table=cm_table)
        check(
            f"period cayley-moufang m={m}",
            rep.period == period and rep.max_orbit == max_orbit,
            f"got {rep.period}/{rep.max_orbit}",
        )
    for m, period, max_orbit in (
        (18, 18, 18), (21, 21, 21), (22, 66, 66), (23, 69, 69), (24, 144, 72), (25, 150, 75),
    ):
        rep = promotion_order(pf, m, table=pf_table)
        check(
            f"period freudenthal m={m}",
            rep.period == period and rep.max_orbit == max_orbit,
            f"got {rep.period}/{rep.max_orbit}",
        )
    p4 = propeller(4)
    p4_table = build_gapless_table(p4, workers=threads)
    for m in (8, 13):
        rep = promotion_order(p4, m, table=p4_table)
        check(f"period propeller-4 m={m}", rep.period == m, f"got {rep.period}")

    report = frame_check(pf, table=pf_table)
    check("frame-check freudenthal", report.match, f"frame {report.frame_elements} vs stable {report.stable_elements}")

    check("tableau operator fixtures", _tableau_fixtures_ok())

    for shape, k in ((cm, 1), (propeller(3), 2)):
        psi = Counter(dict(rowmotion_orbits(shape, k).orbit_sizes))
        pro = _promotion_census(shape, shape.rk + k + 1)
        check(f"orbit multisets agree ({shape.family}, k={k})", psi == pro, f"{psi} vs {pro}")

    check(
        "generating function point counts",
        plane_partition_gf(cm, 1)(1) == 27 and plane_partition_gf(pf, 1)(1) == 56,
    )

    print(f"{'OK' if failures == 0 else 'MISMATCH'}: {failures} failure(s)", file=out)
    return failures


def _tableau_fixtures_ok() -> bool:
    from .tableaux import IncreasingTableau, content_vector, deflate, inflate, k_bender_knuth, promotion

    fixtures = resources.files("minuscule").joinpath("data/golden/tableaux")
    load = lambda name, m=None: IncreasingTableau.from_text(fixtures.joinpath(name).read_text(), m=m)
    base = load("kbk_base.txt")
    ok = all(k_bender_knuth(base, i) == load(f"kbk_swap_{i}.txt") for i in (3, 4, 5))
    ok = ok and promotion(load("promotion_cm_m13_input.txt")) == load("promotion_cm_m13_output.txt")
    gappy = load("deflation_input_m7.txt", m=7)
    gapless = load("deflation_output.txt")
    ok = ok and deflate(gappy) == gapless
    ok = ok and content_vector(gappy) == (1, 1, 0, 1, 1, 1, 0)
    ok = ok and inflate(gapless, (1, 1, 0, 1, 1, 1, 0)) == gappy
    first, second = _gapless_with_ceiling(propeller(4), 8)
    ok = ok and {load("propeller4_m8_first.txt"), load("propeller4_m8_second.txt")} == {first, second}
    ok = ok and promotion(first) == second and promotion(second) == first
    return ok


def _gapless_with_ceiling(shape, m):
    from .tableaux import enumerate_gapless

    return [t for t in enumerate_gapless(shape) if t.m == m]


def _promotion_census(shape, m) -> "Counter":
    from .tableaux import enumerate_increasing, promotion

    seen = set()
    sizes = Counter()
    for T in enumerate_increasing(shape, m):
        if T in seen:
            continue
        orbit = [T]
        cur = promotion(T)
        while cur != T:
            orbit.append(cur)
            cur = promotion(cur)
        seen.update(orbit)
        sizes[len(orbit)] += 1
    return sizes


def _cmd_reproduce(args) -> tuple[int, str]:
    import io

    buf = io.StringIO()
    failures = reproduce_all(threads=args.threads, golden_root=_golden_dir(args), out=buf)
    return (EXIT_OK if failures == 0 else EXIT_MISMATCH), buf.getvalue()


def _add_common(sub: argparse.ArgumentParser, poset_required: bool = True) -> None:
    if poset_required:
        sub.add_argument("--poset", required=True, help="family (e.g. cayley-moufang, freudenthal, propeller-5, rectangle-2x3) or a JSON file")
    else:
        sub.add_argument("--poset", default=None, help="poset family or JSON file (default: freudenthal)")
    sub.add_argument("--threads", type=int, default=1, help="worker processes for table building")
    sub.add_argument("--cache-dir", default=None, help="directory for gapless-table caches")
    sub.add_argument("--state-cap", type=int, default=None, help="cap on exhaustive traversals (env MINUSCULE_STATE_CAP)")
    sub.add_argument("--manifest", default=None, help="write a run manifest JSON to this path")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="minuscule",
        description="Exact rowmotion, K-promotion, and cyclic-sieving engine over minuscule posets.",
    )
    subs = parser.add_subparsers(dest="command", required=True)

    s = subs.add_parser("rowmotion-orbits", help="rowmotion orbit sizes on ideals of poset x k")
    _add_common(s)
    s.add_argument("--k", type=int, required=True, help="chain height")
    s.add_argument("--format", choices=("text", "json", "csv"), default="text")
    s.set_defaults(func=_cmd_rowmotion_orbits)

    s = subs.add_parser("gapless-table", help="promotion orbit table of gapless tableaux")
    _add_common(s)
    s.add_argument("--format", choices=("text", "json", "csv"), default="text")
    s.add_argument("--fresh", action="store_true", help="rebuild even if a cached table exists")
    s.set_defaults(func=_cmd_gapless_table)

    s = subs.add_parser("verify-csp", help="exact cyclic-sieving verdict for (poset, k)")
    _add_common(s)
    s.add_argument("--k", type=int, required=True, help="plane partition height bound")
    s.add_argument("--json", action="store_true", help="emit the verdict as JSON")
    s.set_defaults(func=_cmd_verify_csp)

    s = subs.add_parser("period", help="order of promotion on ceiling-m tableaux")
    _add_common(s)
    s.add_argument("--m", type=int, required=True, help="label ceiling")
    s.set_defaults(func=_cmd_period)

    s = subs.add_parser("frame-check", help="structural frame vs promotion-stable elements")
    _add_common(s, poset_required=False)
    s.set_defaults(func=_cmd_frame_check)

    s = subs.add_parser("qpoly", help="coefficients of the plane-partition generating function")
    _add_common(s)
    s.add_argument("--k", type=int, required=True, help="plane partition height bound")
    s.set_defaults(func=_cmd_qpoly)

    s = subs.add_parser("reproduce", help="recompute headline results and compare against golden files")
    s.add_argument("--threads", type=int, default=1)
    s.add_argument("--golden-dir", default=None, help="directory of golden JSON files")
    s.add_argument("--manifest", default=None)
    s.set_defaults(func=_cmd_reproduce)

    return parser


def _write_manifest(path: str, args, command: str, wall: float, output: str, code: int) -> None:
    params = {
        k: v
        for k, v in vars(args).items()
        if k not in ("func", "manifest") and v is not None
    }
    manifest = {
        "subcommand": command,
        "parameters": params,
        "wall_time_s": round(wall, 3),
        "exit_code": code,
        "output_sha256": hashlib.sha256(output.encode()).hexdigest(),
        "output_bytes": len(output.encode()),
    }
    Path(path).write_text(json.dumps(manifest, sort_keys=True, indent=1) + "\n")


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    start = time.monotonic()
    try:
        code, output = args.func(args)
    except (ParameterError, UnsupportedPosetError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BAD_INPUT
    except StateCapExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    except FileNotFoundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BAD_INPUT
    wall = time.monotonic() - start
    sys.stdout.write(output)
    if getattr(args, "manifest", None):
        _write_manifest(args.manifest, args, args.command, wall, output, code)
    return code


if __name__ == "__main__":
    raise SystemExit(main())
