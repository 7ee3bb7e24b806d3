"""Command-line front end: ``polytile <command> ...``.

Exit codes: 0 success (or tileable), 2 not tileable (``check`` only),
1 usage or input error.
"""

from __future__ import annotations

import argparse
import json
import math
import os
import random
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path

import numpy as np

from . import families
from .admissible import all_admissible
from .factorization import BnFactorization, count_tilings, enumerate_factorizations
from .oracle import MAX_AREA, corpus_words, oracle_diff
from .tiling import lattice_of, patch, render_svg
from .words import BoundaryWord, WordError, boundary_of_cells, parse_cells, parse_word, validate

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_NOT_TILEABLE = 2

MUTATIONS = {
    "square-pass": {"square_pass": False},
    "lr-check": {"strict": False},
}


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_ERROR, f"{self.prog}: error: {message}\n")


def _strip_comments(text: str) -> str:
    return " ".join(line.split("#", 1)[0] for line in text.splitlines())


def read_input(args) -> BoundaryWord:
    sources = [s for s in (args.word, args.word_file, args.cells_file) if s is not None]
    if len(sources) != 1:
        raise UsageError("give exactly one of --word, --word-file, --cells-file")
    if args.word is not None:
        return validate(parse_word(args.word))
    if args.word_file is not None:
        text = Path(args.word_file).read_text(encoding="utf-8")
        return validate(parse_word(_strip_comments(text)))
    return boundary_of_cells(parse_cells(Path(args.cells_file).read_text(encoding="utf-8")))


def _emit(args, data: str | bytes) -> None:
    if isinstance(data, str):
        data = data.encode("utf-8")
    if args.out:
        Path(args.out).write_bytes(data)
    else:
        sys.stdout.buffer.write(data)
        sys.stdout.flush()


def _factor_json(w: BoundaryWord, f) -> dict:
    return {"start": f.start, "len": f.length, "text": w.text(f)}


def factorization_record(w: BoundaryWord, f: BnFactorization) -> dict:
    lat = lattice_of(w, f)
    a, b, c = f.factors[:3]
    return {
        "A": _factor_json(w, a),
        "B": _factor_json(w, b),
        "C": _factor_json(w, c),
        "tA": list(lat.tA),
        "tB": list(lat.tB),
        "tC": list(lat.tC),
        "lattice": [list(v) for v in lat.hnf],
    }


def enumerate_report(w: BoundaryWord) -> dict:
    fs = enumerate_factorizations(w)
    return {
        "word": w.word,
        "n": len(w),
        "factorizations": [factorization_record(w, f) for f in fs],
        "factorization_count": len(fs),
        "tiling_count": count_tilings(w, fs),
    }


def _vec(v) -> str:
    return f"({v[0]},{v[1]})"


def cmd_check(args) -> int:
    w = read_input(args)
    if enumerate_factorizations(w):
        print("tileable")
        return EXIT_OK
    print("not tileable")
    return EXIT_NOT_TILEABLE


def cmd_enumerate(args) -> int:
    w = read_input(args)
    report = enumerate_report(w)
    if args.format == "json":
        _emit(args, json.dumps(report, indent=2) + "\n")
        return EXIT_OK
    lines = []
    for rec in report["factorizations"]:
        texts = "|".join(rec[k]["text"] or "ε" for k in "ABC")
        lines.append(f"{texts} @ {_vec(rec['tA'])} {_vec(rec['tB'])}")
    _emit(args, "".join(line + "\n" for line in lines))
    return EXIT_OK


def cmd_render(args) -> int:
    w = read_input(args)
    fs = enumerate_factorizations(w)
    if not 0 <= args.index < len(fs):
        raise UsageError(f"index {args.index} out of range: {len(fs)} factorization(s)")
    if args.radius < 0:
        raise UsageError("radius must be non-negative")
    _emit(args, render_svg(w, patch(w, fs[args.index], args.radius)))
    return EXIT_OK


def cmd_factors(args) -> int:
    w = read_input(args)
    table = all_admissible(w)
    rows = [
        {
            "center": {"kind": f.center.kind, "pos": f.center.pos},
            "start": f.span.start,
            "len": f.span.length,
            "text": w.text(f.span),
            "partner": f.partner.start,
        }
        for f in sorted(table.factors(), key=lambda f: (f.span.start, f.span.length))
    ]
    _emit(args, json.dumps({"word": w.word, "n": len(w), "admissible": rows}, indent=2) + "\n")
    return EXIT_OK


def threads() -> int:
    raw = os.environ.get("POLYTILE_THREADS", "1")
    try:
        k = int(raw)
    except ValueError:
        raise UsageError(f"POLYTILE_THREADS must be an integer, got {raw!r}") from None
    if k < 0:
        raise UsageError("POLYTILE_THREADS must be >= 0")
    return k or os.cpu_count() or 1


def _diff_one(job) -> dict:
    word, opts = job
    return oracle_diff(validate(word), **opts)


def cmd_oracle(args) -> int:
    if not 1 <= args.max_area <= MAX_AREA:
        raise UsageError(f"--max-area must be in 1..{MAX_AREA}")
    opts = MUTATIONS[args.mutate] if args.mutate else {}
    jobs = [(w.word, opts) for w in corpus_words(args.max_area)]
    k = threads()
    if k == 1:
        reports = list(map(_diff_one, jobs))
    else:
        with ProcessPoolExecutor(max_workers=k) as pool:
            reports = list(pool.map(_diff_one, jobs, chunksize=32))
    diffs = [r for r in reports if r]
    for r in diffs[: args.show]:
        print(json.dumps(r), file=sys.stderr)
    print(f"{len(jobs)} shapes checked, {len(diffs)} diffs")
    return EXIT_OK if not diffs else EXIT_ERROR


def cmd_gen(args) -> int:
    g = families.generate(args.family, args.param, args.seed)
    print(g.word)
    if g.witness is not None:
        print("# witness " + "|".join(x or "ε" for x in g.witness))
    return EXIT_OK


def parse_size(text: str) -> int:
    base, sep, exp = text.partition("^")
    try:
        return int(base) ** int(exp) if sep else int(text)
    except ValueError:
        raise UsageError(f"bad size {text!r}") from None


def bench_word(family: str, n: int, seed: int) -> BoundaryWord:
    if family == "bar":
        return families.bar_of_length(n)
    return validate(families.random_tileable(random.Random(seed), n // 2).word)


def run_bench(sizes: list[int], family: str = "bar", repeat: int = 3, seed: int = 0) -> dict:
    """Best-of-``repeat`` wall time of ``all_admissible`` plus enumeration per size."""
    rows = []
    for n in sizes:
        w = bench_word(family, n, seed)
        best = math.inf
        count = 0
        for _ in range(repeat):
            t0 = time.perf_counter()
            count = len(enumerate_factorizations(w, all_admissible(w)))
            best = min(best, time.perf_counter() - t0)
        rows.append({"n": len(w), "seconds": best, "factorizations": count, "ratio": None})
    for prev, row in zip(rows, rows[1:]):
        if row["n"] == 2 * prev["n"]:
            row["ratio"] = row["seconds"] / prev["seconds"]
    exponent = None
    if len(rows) >= 2:
        exponent = float(np.polyfit(np.log([r["n"] for r in rows]), np.log([r["seconds"] for r in rows]), 1)[0])
    return {
        "family": family,
        "rows": rows,
        "exponent": exponent,
        "max_count_ratio": max(r["factorizations"] / r["n"] for r in rows),
    }


def cmd_bench(args) -> int:
    sizes = [parse_size(s) for s in args.sizes]
    if sizes != sorted(sizes):
        raise UsageError("sizes must be ascending")
    if any(n < 4 or n % 2 for n in sizes):
        raise UsageError("sizes must be even and at least 4")
    if args.repeat < 1:
        raise UsageError("--repeat must be positive")
    result = run_bench(sizes, args.family, args.repeat, args.seed)
    if args.format == "json":
        _emit(args, json.dumps(result, indent=2) + "\n")
        return EXIT_OK
    lines = [f"{'n':>9} {'seconds':>9} {'count':>9} {'ratio':>6}"]
    for r in result["rows"]:
        ratio = "-" if r["ratio"] is None else f"{r['ratio']:.2f}"
        lines.append(f"{r['n']:>9} {r['seconds']:>9.3f} {r['factorizations']:>9} {ratio:>6}")
    if result["exponent"] is not None:
        lines.append(f"fitted exponent {result['exponent']:.2f}")
    lines.append(f"max factorizations/n {result['max_count_ratio']:.3f}")
    _emit(args, "".join(line + "\n" for line in lines))
    return EXIT_OK


def _add_input(p: argparse.ArgumentParser) -> None:
    p.add_argument("--word", help="boundary word, e.g. 'u r^3 d l^3'")
    p.add_argument("--word-file", help="file holding a boundary word ('#' starts a comment)")
    p.add_argument("--cells-file", help="file with one 'x y' cell per line")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="polytile", description="Decide and enumerate translational tilings of polyominoes.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("check", help="print whether the polyomino tiles the plane")
    _add_input(p)
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("enumerate", help="list all factorizations and their lattices")
    _add_input(p)
    p.add_argument("--format", choices=("json", "text"), default="json")
    p.add_argument("--out")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("render", help="draw a tiling patch as SVG")
    _add_input(p)
    p.add_argument("--index", type=int, default=0)
    p.add_argument("--radius", type=int, default=1)
    p.add_argument("--out")
    p.set_defaults(func=cmd_render)

    p = sub.add_parser("factors", help="dump the admissible factors as JSON")
    _add_input(p)
    p.add_argument("--out")
    p.set_defaults(func=cmd_factors)

    p = sub.add_parser("oracle", help="compare fast paths with brute force over all small polyominoes")
    p.add_argument("--max-area", type=int, default=7)
    p.add_argument("--show", type=int, default=5, help="number of diffs to print")
    p.add_argument("--mutate", choices=sorted(MUTATIONS), help=argparse.SUPPRESS)
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("gen", help="print a word from a named family")
    p.add_argument("family", choices=families.FAMILIES)
    p.add_argument("param", nargs="?")
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("bench", help="time the decision pipeline over word sizes")
    p.add_argument("sizes", nargs="+", help="word lengths, e.g. 2^16 2^17")
    p.add_argument("--family", choices=("bar", "random-tileable"), default="bar")
    p.add_argument("--repeat", type=int, default=3)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--format", choices=("json", "text"), default="text")
    p.add_argument("--out")
    p.set_defaults(func=cmd_bench)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (WordError, UsageError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
