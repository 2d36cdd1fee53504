"""Command line interface.

Exit status: 0 success, 1 usage error, 2 domain error (the error code is
printed, e.g. ``NOT_REALIZABLE``), 3 a verification suite failed.
"""

from __future__ import annotations

import argparse
import json
import sys

from subchord import census
from subchord.embed import some_embedding
from subchord.errors import NotRealizable, SiteInvalid, SubchordError
from subchord.flype import apply_flype, list_flype_sites
from subchord.invariant import MOVESETS, invariant_report, trivializable
from subchord.moves import MoveSite, apply_move, list_sites, pattern_delta
from subchord.pattern import count_named
from subchord.render import chord_svg
from subchord.word import (
    GaussWord,
    canonical_form,
    decompose,
    is_prime,
    is_reduced,
    parse_gauss_word,
)

EXIT_OK, EXIT_USAGE, EXIT_DOMAIN, EXIT_VERIFY = 0, 1, 2, 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def _read_word(code: str) -> GaussWord:
    if code == "-":
        code = sys.stdin.read()
    return parse_gauss_word(code)


def _realizable_embedding(w: GaussWord):
    e = some_embedding(w)
    if e is None:
        raise NotRealizable(f"{w} is not the word of a spherical curve")
    return e


def analysis(w: GaussWord) -> dict:
    """Everything ``analyze`` reports, as a JSON-ready dict."""
    _realizable_embedding(w)
    report = invariant_report(w)
    return {
        "word": str(canonical_form(w)),
        "n": w.n,
        "realizable": True,
        "counts": count_named(w).as_dict(),
        **report.as_dict(),
        "prime": is_prime(w),
        "reduced": is_reduced(w),
        "factors": [str(f) for f in decompose(w)],
        "trivializable": {name: trivializable(w, ms) for name, ms in MOVESETS.items()},
    }


def _print_aligned(d: dict, out):
    width = max(len(k) for k in d)
    for k, v in d.items():
        if isinstance(v, dict):
            v = ", ".join(f"{a}={b}" for a, b in v.items())
        elif isinstance(v, list):
            v = " | ".join(v) if v else "-"
        print(f"{k:<{width}}  {v}", file=out)


def cmd_analyze(args, out):
    d = analysis(_read_word(args.code))
    if args.json:
        print(json.dumps(d), file=out)
    else:
        _print_aligned(d, out)


def _sites(w: GaussWord):
    return list_sites(w, _realizable_embedding(w))


def cmd_moves(args, out):
    w = _read_word(args.code)
    rows = []
    for i, s in enumerate(_sites(w)):
        rep = pattern_delta(w, s)
        rows.append({"id": i, **s.as_dict(), "delta": rep.delta.as_dict(),
                     "result": str(canonical_form(apply_move(w, s)))})
    if args.json:
        print(json.dumps(rows), file=out)
        return
    if args.table:
        _delta_table(rows, out)
        return
    for r in rows:
        where = (f"labels={list(r['labels'])}" if r["labels"] else "") + \
                (f" gaps={list(r['gaps'])}" if r["gaps"] else "") + \
                (f" darts={list(r['darts'])}" if r["darts"] else "")
        d = r["delta"]
        print(
            f"{r['id']:>4}  {r['kind']:<15} {where.strip():<28} "
            f"d=({d['cross']},{d['triple']},{d['h']},{d['iii']},{d['hh']})  -> {r['result']}",
            file=out,
        )


TABLE_COLUMNS = (("RI", "RI"), ("sRII", "RII_strong"), ("wRII", "RII_weak"),
                 ("sRIII", "RIII_strong"), ("wRIII", "RIII_weak"))


def _delta_table(rows, out):
    """Observed deltas, add direction, with patterns as rows and moves as columns."""
    seen = {col: {p: set() for p in ("cross", "triple", "h", "iii", "hh")} for col, _ in TABLE_COLUMNS}
    for r in rows:
        sign = -1 if r["kind"].endswith("_del") else 1
        for col, prefix in TABLE_COLUMNS:
            if r["kind"] == prefix or r["kind"].startswith(prefix + "_"):
                for p, v in r["delta"].items():
                    seen[col][p].add(sign * v)
    print(f"{'':<8}" + "".join(f"{col:>14}" for col, _ in TABLE_COLUMNS), file=out)
    for p in ("cross", "triple", "h", "iii", "hh"):
        cells = []
        for col, _ in TABLE_COLUMNS:
            vals = sorted(seen[col][p])
            cells.append(",".join(map(str, vals)) if vals else "-")
        print(f"{p:<8}" + "".join(f"{c:>14}" for c in cells), file=out)


def cmd_apply(args, out):
    w = _read_word(args.code)
    site = args.site.strip()
    if site.startswith("{"):
        try:
            s = MoveSite.from_dict(json.loads(site))
        except (ValueError, KeyError) as exc:
            raise UsageError(f"bad site JSON: {exc}") from exc
    else:
        try:
            idx = int(site)
        except ValueError as exc:
            raise UsageError(f"--site takes an index or a JSON object, got {site!r}") from exc
        sites = _sites(w)
        if not 0 <= idx < len(sites):
            raise SiteInvalid(f"site {idx} out of range (0..{len(sites) - 1})")
        s = sites[idx]
    print(canonical_form(apply_move(w, s)), file=out)


def cmd_flype(args, out):
    w = _read_word(args.code)
    _realizable_embedding(w)
    sites = list_flype_sites(w)
    if args.apply is not None:
        if not 0 <= args.apply < len(sites):
            raise SiteInvalid(f"flype site {args.apply} out of range (0..{len(sites) - 1})")
        print(canonical_form(apply_flype(w, sites[args.apply])), file=out)
        return
    rows = []
    for i, f in enumerate(sites):
        rows.append({"id": i, **f.as_dict(), "result": str(canonical_form(apply_flype(w, f)))})
    if args.json:
        print(json.dumps(rows), file=out)
        return
    for r in rows:
        if not r["arcs"]:
            print(f"{r['id']:>4}  Q={r['q']}  identity", file=out)
            continue
        print(
            f"{r['id']:>4}  Q={r['q']}  {r['case']}  arcs={[list(a) for a in r['arcs']]} "
            f"west={list(r['west'])} east={list(r['east'])}  -> {r['result']}",
            file=out,
        )


def cmd_census(args, out):
    filt = "prime_reduced" if args.prime_reduced else "all"
    if args.summary:
        counts: dict[int, int] = {}
        for r in census.enumerate_records(args.n, filt):
            counts[r.n] = counts.get(r.n, 0) + 1
        for n in sorted(counts):
            print(f"n={n}: {counts[n]}", file=out)
        return
    out.write(census.catalog(args.n, args.format, filt))


def cmd_verify(args, out):
    rep = census.verify(args.suite, args.n)
    if args.json:
        print(json.dumps(rep.as_dict()), file=out)
    else:
        print(rep.render(), file=out)
    return EXIT_OK if rep.passed else EXIT_VERIFY


def cmd_render(args, out):
    w = _read_word(args.code)
    svg = chord_svg(w)
    if args.svg == "-":
        out.write(svg)
    else:
        with open(args.svg, "w", encoding="utf-8") as fh:
            fh.write(svg)


def cmd_decompose(args, out):
    w = _read_word(args.code)
    factors = decompose(w)
    if args.json:
        print(json.dumps([str(f) for f in factors]), file=out)
        return
    for f in factors:
        print(f if f.letters else "(simple closed curve)", file=out)


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="subchord", description="Sub-chord diagram invariants of spherical curves.")
    sub = p.add_subparsers(dest="command", parser_class=_Parser)

    def with_code(name, help_):
        sp = sub.add_parser(name, help=help_)
        sp.add_argument("code", help='Gauss word such as "1 2 3 1 2 3" ("-" reads stdin)')
        return sp

    sp = with_code("analyze", "counts, invariants and trivializability of a word")
    sp.add_argument("--json", action="store_true")
    sp.set_defaults(func=cmd_analyze)

    sp = with_code("moves", "list Reidemeister move sites with their count deltas")
    sp.add_argument("--json", action="store_true")
    sp.add_argument("--table", action="store_true", help="summarize deltas per move kind")
    sp.set_defaults(func=cmd_moves)

    sp = with_code("apply", "apply one move site and print the canonical result")
    sp.add_argument("--site", required=True, help="index from `moves`, or a site JSON object")
    sp.set_defaults(func=cmd_apply)

    sp = with_code("flype", "list flype sites, or apply one with --apply")
    sp.add_argument("--apply", type=int, metavar="ID")
    sp.add_argument("--json", action="store_true")
    sp.set_defaults(func=cmd_flype)

    sp = sub.add_parser("census", help="catalog of realizable words")
    sp.add_argument("-n", type=int, required=True, help="maximum number of double points")
    sp.add_argument("--prime-reduced", action="store_true")
    sp.add_argument("--format", choices=("json", "csv"), default="json")
    sp.add_argument("--summary", action="store_true", help="print only the per-n record counts")
    sp.set_defaults(func=cmd_census)

    sp = sub.add_parser("verify", help="run a verification suite")
    sp.add_argument("suite", choices=sorted(census.SUITES))
    sp.add_argument("-n", type=int, required=True)
    sp.add_argument("--json", action="store_true")
    sp.set_defaults(func=cmd_verify)

    sp = with_code("render", "write a schematic chord diagram")
    sp.add_argument("--svg", required=True, metavar="PATH", help='output file, "-" for stdout')
    sp.set_defaults(func=cmd_render)

    sp = with_code("decompose", "print the connected-sum factors")
    sp.add_argument("--json", action="store_true")
    sp.set_defaults(func=cmd_decompose)
    return p


def run(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if args.command is None:
            raise UsageError("subchord: a subcommand is required")
        status = args.func(args, out)
    except UsageError as exc:
        print(parser.format_usage().rstrip(), file=err)
        print(exc, file=err)
        return EXIT_USAGE
    except SubchordError as exc:
        print(f"error: {exc}", file=err)
        return EXIT_DOMAIN
    except OSError as exc:
        print(f"error: {exc}", file=err)
        return EXIT_USAGE
    return status or EXIT_OK


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
