"""Command-line front end: map, unmap, gen, verify, census, render.

Exit codes: 0 success / all comparisons match, 1 a verified mismatch was
found, 2 input error, 3 guard violation (enumeration bound exceeded without
--force).  Every command is deterministic: identical inputs produce
byte-identical outputs.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .avoidance import parse_class
from .biane import involution_to_path, path_to_involution
from .counting import (
    GuardError,
    census_bfile,
    census_csv,
    check_guard,
    count_class,
    first_bfile_divergence,
    gen_involutions,
    parse_bfile,
    run_census,
)
from .motzkin import encode_path, irreducible_components, parse_path, path_height
from .permutations import (
    as_involution,
    avoids_all,
    connected_components,
    format_permutation,
    parse_permutation,
)
from .svg import render_path_svg
from .theorems import THEOREMS


def _print_json(payload: dict) -> None:
    print(json.dumps(payload, separators=(", ", ": ")))


def _cmd_map(args: argparse.Namespace) -> int:
    tau = as_involution(parse_permutation(args.permutation))
    path = involution_to_path(tau)
    if args.json:
        _print_json(
            {
                "schema": "invmotz.map/1",
                "input": format_permutation(tau),
                "output": encode_path(path),
                "height": path_height(path),
                "components": [encode_path(c) for c in irreducible_components(path)],
            }
        )
    else:
        print(encode_path(path))
    return 0


def _cmd_unmap(args: argparse.Namespace) -> int:
    path = parse_path(args.path)
    tau = path_to_involution(path)
    if args.json:
        _print_json(
            {
                "schema": "invmotz.unmap/1",
                "input": encode_path(path),
                "output": format_permutation(tau),
                "height": path_height(path),
                "components": [format_permutation(c) for c in connected_components(tau)],
            }
        )
    else:
        print(format_permutation(tau))
    return 0


def _cmd_gen(args: argparse.Namespace) -> int:
    descriptor = parse_class(args.cls)
    check_guard(descriptor.base, args.n, args.force)
    if args.count_only:
        count = count_class(descriptor, args.n)
        if args.json:
            _print_json(
                {
                    "schema": "invmotz.gen/1",
                    "class": descriptor.text(),
                    "n": args.n,
                    "count": count,
                }
            )
        else:
            print(count)
        return 0
    items = []
    for tau in gen_involutions(args.n, descriptor.base):
        if avoids_all(tau, descriptor.avoid):
            if args.as_paths:
                items.append(encode_path(involution_to_path(tau)))
            else:
                items.append(format_permutation(tau))
    if args.json:
        _print_json(
            {
                "schema": "invmotz.gen/1",
                "class": descriptor.text(),
                "n": args.n,
                "items": items,
            }
        )
    else:
        for item in items:
            print(item)
    return 0


def _cmd_verify(args: argparse.Namespace) -> int:
    theorem = THEOREMS.get(args.theorem)
    if theorem is None:
        print(
            f"error: unknown theorem {args.theorem!r}; known ids:\n  "
            + "\n  ".join(sorted(THEOREMS)),
            file=sys.stderr,
        )
        return 2
    check_guard(theorem.base, args.n_max, args.force)
    rows = list(theorem.runner(args.n_max))
    total_mismatches = sum(r.mismatches for r in rows)
    if args.json:
        _print_json(
            {
                "schema": "invmotz.verify/1",
                "theorem": theorem.ident,
                "description": theorem.description,
                "n_max": args.n_max,
                "rows": [
                    {"n": r.n, "checked": r.checked, "mismatches": r.mismatches} for r in rows
                ],
                "total_mismatches": total_mismatches,
                "ok": total_mismatches == 0,
            }
        )
    else:
        print(f"{theorem.ident}: {theorem.description}")
        for r in rows:
            print(f"  n={r.n} checked={r.checked} mismatches={r.mismatches}")
        print("OK" if total_mismatches == 0 else f"MISMATCH ({total_mismatches})")
    return 0 if total_mismatches == 0 else 1


def _cmd_census(args: argparse.Namespace) -> int:
    class_texts = [part for part in args.classes.split(";") if part.strip()]
    if not class_texts:
        raise ValueError("no classes given")
    classes = [parse_class(text) for text in class_texts]
    if args.diff and len(classes) != 1:
        raise ValueError("--diff compares a single class against a b-file")
    reports = run_census(classes, args.n_max, force=args.force)

    diff_result = None
    if args.diff:
        try:
            text = Path(args.diff).read_text()
        except OSError as exc:
            print(f"error: cannot read b-file: {exc}", file=sys.stderr)
            return 2
        entries = parse_bfile(text)
        diff_result = first_bfile_divergence(reports[0], entries)

    if args.out:
        out_dir = Path(args.out)
        out_dir.mkdir(parents=True, exist_ok=True)
        written = []
        if args.format == "csv":
            target = out_dir / "census.csv"
            target.write_text(census_csv(reports))
            written.append(target)
        else:
            from .figures import class_slug

            for report in reports:
                target = out_dir / f"b_{class_slug(report.descriptor.text())}.txt"
                target.write_text(census_bfile(report))
                written.append(target)
        meta = {
            "schema": "invmotz.census-meta/1",
            "n_max": args.n_max,
            "classes": [
                {
                    "class": r.descriptor.text(),
                    "n_min": r.n_min,
                    "mismatch_ns": list(r.mismatch_ns),
                    "note": r.note,
                }
                for r in reports
            ],
        }
        meta_path = out_dir / "census_meta.json"
        meta_path.write_text(json.dumps(meta, indent=2) + "\n")
        written.append(meta_path)
        if not args.no_figures:
            from .figures import class_slug, save_count_figure

            for report in reports:
                written.append(
                    save_count_figure(
                        report, out_dir / f"{class_slug(report.descriptor.text())}.png"
                    )
                )
        for target in written:
            print(target)
    else:
        if args.format == "csv":
            sys.stdout.write(census_csv(reports))
        else:
            for report in reports:
                sys.stdout.write(census_bfile(report))
        for report in reports:
            if report.note:
                print(f"note: {report.descriptor.text()}: {report.note}", file=sys.stderr)
            if report.mismatch_ns:
                print(
                    f"mismatch: {report.descriptor.text()} at n in {list(report.mismatch_ns)}"
                    + (f" (validated from n={report.n_min})" if report.n_min is not None else ""),
                    file=sys.stderr,
                )

    if diff_result is not None:
        n, observed, filed = diff_result
        print(f"diff: first divergence at n={n}: observed {observed}, b-file {filed}")
        return 1
    if args.diff:
        print("diff: match")
    return 0 if all(r.ok for r in reports) else 1


def _cmd_render(args: argparse.Namespace) -> int:
    path = parse_path(args.path)
    Path(args.output).write_text(render_path_svg(path))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="invmotz",
        description=(
            "Involutions and labelled Motzkin paths: map between them, generate "
            "and count restricted classes, verify structural statements, and "
            "render path diagrams."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_map = sub.add_parser("map", help="involution (one-line text) to labelled path")
    p_map.add_argument("permutation", help='e.g. "4 7 5 1 3 6 2 9 8"')
    p_map.add_argument("--json", action="store_true")
    p_map.set_defaults(handler=_cmd_map)

    p_unmap = sub.add_parser("unmap", help="labelled path text to involution")
    p_unmap.add_argument("path", help='e.g. "UUUD1D2HD1UD1"')
    p_unmap.add_argument("--json", action="store_true")
    p_unmap.set_defaults(handler=_cmd_unmap)

    p_gen = sub.add_parser("gen", help="list or count a class at one size")
    p_gen.add_argument("cls", metavar="class", help='e.g. "I:4321,132", "DI:", "CI:3412"')
    p_gen.add_argument("n", type=int)
    p_gen.add_argument("--count-only", action="store_true")
    p_gen.add_argument("--as-paths", action="store_true", help="print the path images")
    p_gen.add_argument("--force", action="store_true", help="override the size guard")
    p_gen.add_argument("--json", action="store_true")
    p_gen.set_defaults(handler=_cmd_gen)

    p_verify = sub.add_parser("verify", help="exhaustively re-check a named statement")
    p_verify.add_argument("theorem", help="statement id; see --list via an unknown id")
    p_verify.add_argument("n_max", type=int)
    p_verify.add_argument("--force", action="store_true")
    p_verify.add_argument("--json", action="store_true")
    p_verify.set_defaults(handler=_cmd_verify)

    p_census = sub.add_parser("census", help="observed vs expected counts over 0..n_max")
    p_census.add_argument("classes", help='";"-separated class list, e.g. "I:4321;DI:3412"')
    p_census.add_argument("n_max", type=int)
    p_census.add_argument("--format", choices=("csv", "bfile"), default="csv")
    p_census.add_argument("--out", help="write files into this directory instead of stdout")
    p_census.add_argument("--diff", metavar="BFILE", help="compare one class against a b-file")
    p_census.add_argument("--no-figures", action="store_true", help="skip the report figures")
    p_census.add_argument("--force", action="store_true")
    p_census.set_defaults(handler=_cmd_census)

    p_render = sub.add_parser("render", help="render path text to an SVG file")
    p_render.add_argument("path", help='path text, e.g. "UUUD1D2HD1UD1"')
    p_render.add_argument("output", help="output SVG file")
    p_render.set_defaults(handler=_cmd_render)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.handler(args)
    except GuardError as exc:
        print(f"guard: {exc}", file=sys.stderr)
        return 3
    except (ValueError, OverflowError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
