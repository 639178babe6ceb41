"""Command-line interface: ``python -m eulermahonian <command> ...``.

Exit codes: 0 success, 1 verification failure, 2 usage or parse error,
3 precondition violation.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys

from . import stats, verification as ver
from .bijections import phi, phi_den, phi_den_inverse, phi_maj, phi_maj_inverse, psi
from .core import Multiset, ParameterError, ParseError, Partition, Word
from .enumeration import StatSpec, joint_dist, stat_table

FORMAT_VERSION = 1
THREADS_ENV = "EULERMAHONIAN_THREADS"

TABLE_PAIRS = [
    ("2des", "2maj"),
    ("des:l=2", "maj:l=2"),
    ("exc:l=2", "den:h=2"),
    ("exc:l=2", "den"),
    ("exc:l=2", "den:h=3"),
]

CLAIMS = ["den-r-h", "regular", "mahonian", "bij-den", "bij-maj", "phi-psi", "equi"]
MAPS = ["phi", "psi", "phi-den", "phi-den-inv", "phi-maj", "phi-maj-inv"]


class Output:
    """Result of a command in the three renderings."""

    def __init__(self, command, parameters, result, text, rows, code=0):
        self.command = command
        self.parameters = parameters
        self.result = result
        self.text = text
        self.rows = rows
        self.code = code

    def envelope(self) -> dict:
        return {
            "format_version": FORMAT_VERSION,
            "command": self.command,
            "parameters": self.parameters,
            "result": self.result,
        }

    def render(self, fmt: str) -> str:
        if fmt == "json":
            return json.dumps(self.envelope(), sort_keys=True, indent=2) + "\n"
        if fmt == "csv":
            buf = io.StringIO()
            csv.writer(buf, lineterminator="\n").writerows(self.rows)
            return buf.getvalue()
        return self.text.rstrip("\n") + "\n"


def _kv_rows(d: dict) -> list[list]:
    rows = [["field", "value"]]
    for key in sorted(d):
        value = d[key]
        if isinstance(value, (list, dict)) or value is None:
            value = json.dumps(value, sort_keys=True)
        rows.append([key, value])
    return rows


def _word(text) -> Word:
    return Word.parse(text)


def _spec(text) -> StatSpec:
    return StatSpec.parse(text)


def _pair(text) -> tuple[str, str]:
    items = [s.strip() for s in text.split(",")]
    if len(items) != 2:
        raise ParseError(f"expected a pair A,B of statistics, got {text!r}")
    _spec(items[0]), _spec(items[1])
    return items[0], items[1]


def _threads(args) -> int:
    if args.threads is not None:
        return max(args.threads, 1)
    env = os.environ.get(THREADS_ENV)
    if env:
        try:
            return max(int(env), 1)
        except ValueError:
            raise ParseError(f"{THREADS_ENV} must be an integer, got {env!r}") from None
    return os.cpu_count() or 1


# commands

def cmd_stats(args) -> Output:
    w = _word(args.word)
    rep = stats.report(w, args.g, args.l, args.h)
    d = rep.to_dict()
    d["word"] = str(w)
    lines = [f"word {w}  (g={args.g}, l={args.l}, h={args.h})"]
    for key in ("des", "maj", "inv", "imv", "exc", "den", "gdes", "gmaj", "gexc", "gden"):
        lines.append(f"{key:5s} {d[key]}")
    lines.append(f"descent set          {d['descents']}")
    lines.append(f"excedance places     {d['excedance_places']}")
    lines.append(f"gap descent set      {d['gap_descents']}")
    lines.append(f"gap excedance places {d['gap_excedance_places']}")
    params = {"word": str(w), "g": args.g, "l": args.l, "h": args.h}
    return Output("stats", params, d, "\n".join(lines), _kv_rows(d))


def _grid_text(grid) -> str:
    if not grid:
        return "(empty)"
    width = max(len(str(c)) for row in grid for c in row)
    head = "t\\q " + " ".join(str(j).rjust(width) for j in range(len(grid[0])))
    body = [f"{i:<3d} " + " ".join(str(c).rjust(width) for c in row) for i, row in enumerate(grid)]
    return "\n".join([head] + body)


def cmd_dist(args) -> Output:
    M = Multiset.parse(args.multiset)
    t, q = _spec(args.t), _spec(args.q)
    poly = joint_dist(M, t, q, _threads(args))
    result = {
        "polynomial": str(poly),
        "terms": [[a, b, c] for (a, b), c in sorted(poly.terms.items())],
        "grid": poly.grid(),
        "total": poly.evaluate(1, 1),
    }
    params = {"multiset": str(M), "t": str(t), "q": str(q)}
    text = f"{poly}\n\n{_grid_text(poly.grid())}"
    rows = [["t", "q", "coefficient"]] + result["terms"]
    return Output("dist", params, result, text, rows)


def cmd_table(args) -> Output:
    M = Multiset.parse(args.multiset)
    pairs = [_pair(p) for p in args.pair] if args.pair else TABLE_PAIRS
    specs = [(_spec(a), _spec(b)) for a, b in pairs]
    heads = [f"({a},{b})" for a, b in pairs]
    rows_out = []
    for w, values in stat_table(M, specs):
        rows_out.append({"word": str(Word(w)), "values": [list(v) for v in values]})
    cell = lambda v: f"({v[0]},{v[1]})"
    rows = [["word"] + heads] + [[r["word"]] + [cell(v) for v in r["values"]] for r in rows_out]
    width = max(len(h) for h in heads + ["(00,00)"])
    text = "\n".join(
        [" ".join([rows[0][0].ljust(M.m)] + [h.ljust(width) for h in heads])]
        + [" ".join([r[0].ljust(M.m)] + [c.ljust(width) for c in r[1:]]) for r in rows[1:]]
    )
    params = {"multiset": str(M), "pairs": [list(p) for p in pairs]}
    return Output("table", params, {"columns": heads, "rows": rows_out}, text, rows)


def _need(args, *names):
    for name in names:
        if getattr(args, name) is None:
            raise ParseError(f"map {args.name} requires --{name.replace('_', '-')}")


def cmd_map(args) -> Output:
    name = args.name
    _need(args, "word")
    w = _word(args.word)
    params = {"map": name, "word": str(w)}
    result: dict = {}
    trace = None
    if name == "phi":
        _need(args, "label")
        n = args.n if args.n is not None else max(w) + 1
        params.update(label=args.label, n=n, g=args.g, h=args.h)
        u = phi(w, args.label, n, args.g, args.h)
        result["word"] = str(Word(u))
    elif name == "psi":
        n = args.n if args.n is not None else max(w)
        params.update(n=n, g=args.g, h=args.h)
        v, c = psi(w, n, args.g, args.h)
        result.update(word=str(Word(v)), label=c)
    elif name in ("phi-den", "phi-maj"):
        _need(args, "lam")
        lam = Partition.parse(args.lam).parts
        if name == "phi-den":
            params.update(partition=list(lam), g=args.g, h=args.h, n_mult=args.n_mult)
            u, trace = phi_den(w, lam, args.g, args.h, args.n_mult)
        else:
            params.update(partition=list(lam), g=args.g, l=args.l, n_mult=args.n_mult)
            u, trace = phi_maj(w, lam, args.g, args.l, args.n_mult)
        result["word"] = str(Word(u))
    else:
        if name == "phi-den-inv":
            params.update(g=args.g, h=args.h)
            v, lam = phi_den_inverse(w, args.g, args.h)
        else:
            params.update(g=args.g, l=args.l)
            v, lam = phi_maj_inverse(w, args.g, args.l)
        result.update(word=str(Word(v)), partition=list(lam.parts))
    params["trace"] = bool(args.trace)
    lines = [f"{k}: {v if not isinstance(v, list) else ','.join(map(str, v))}" for k, v in result.items()]
    rows = [["field", "value"]] + [[k, v if not isinstance(v, list) else ",".join(map(str, v))] for k, v in result.items()]
    if args.trace and trace is not None:
        steps = [s.to_dict() for s in trace.steps]
        for s in steps:
            s["word"] = str(Word(s["word"]))
        result["trace"] = steps
        lines.append("b  word            labels                        y  label  remaining")
        rows.append([])
        rows.append(["b", "word", "labels", "y", "label", "remaining"])
        for s in steps:
            lab = ",".join(map(str, s["labels"]))
            rem = ",".join(map(str, s["remaining"]))
            lines.append(f"{s['b']:<2d} {s['word']:<15s} ({lab})  {s['y']}  {s['label']}  ({rem})")
            rows.append([s["b"], s["word"], lab, s["y"], s["label"], rem])
    return Output("map", params, result, "\n".join(lines), rows)


def _multiset_arg(args) -> Multiset:
    if args.multiset is None:
        raise ParseError(f"verify {args.claim} requires --multiset (or --sweep)")
    return Multiset.parse(args.multiset)


def _verify_report(args) -> ver.Report:
    claim, workers = args.claim, _threads(args)
    g, l, h = args.g, args.l, args.h
    if args.sweep:
        max_m = args.max_m
        if claim == "den-r-h":
            return ver.sweep_theorem_den_r_h(max_m, args.max_n, workers=workers)
        if claim == "regular":
            return ver.sweep_theorem_regular(max_m, workers=workers)
        if claim == "mahonian":
            return ver.sweep_mahonian(max_m, workers=workers)
        if claim == "bij-den":
            return ver.sweep_bijection_den(max_m, args.max_n)
        if claim == "bij-maj":
            return ver.sweep_bijection_maj(max_m, args.max_n)
        if claim == "phi-psi":
            return ver.sweep_phi_psi(max_m, args.max_n)
        raise ParseError("verify equi has no sweep form")
    if claim == "den-r-h":
        return ver.check_theorem_den_r_h(_multiset_arg(args), g, l, h, workers)
    if claim == "regular":
        if args.multiset is not None:
            n, k = ver.uniform_shape(Multiset.parse(args.multiset))
        elif args.n is not None and args.k is not None:
            n, k = args.n, args.k
        else:
            raise ParseError("verify regular requires --multiset or both --n and --k")
        return ver.check_theorem_regular(n, k, g, l, h, workers)
    if claim == "mahonian":
        return ver.check_mahonian(_multiset_arg(args), g, h, workers)
    if claim == "bij-den":
        return ver.check_bijection_den(_multiset_arg(args), g, h, args.l_given)
    if claim == "bij-maj":
        return ver.check_bijection_maj(_multiset_arg(args), g, l)
    if claim == "phi-psi":
        base = _multiset_arg(args)
        n = args.n if args.n is not None else base.n + 1
        return ver.check_phi_psi(base, n, g, h)
    if args.a is None or args.b is None:
        raise ParseError("verify equi requires --a and --b")
    pa, pb = _pair(args.a), _pair(args.b)
    return ver.check_equidistribution(
        _multiset_arg(args), tuple(map(_spec, pa)), tuple(map(_spec, pb)), workers)


def cmd_verify(args) -> Output:
    args.l_given = args.l if args.l_explicit else None
    rep = _verify_report(args)
    result = rep.to_dict()
    params = {"claim": args.claim, "sweep": bool(args.sweep)}
    for key in ("multiset", "g", "l", "h", "n", "k", "a", "b", "max_m", "max_n"):
        value = getattr(args, key)
        if value is not None:
            params[key] = str(Multiset.parse(value)) if key == "multiset" else value
    lines = [
        f"claim     {rep.claim}",
        f"params    {json.dumps(rep.params, sort_keys=True)}",
        f"instances {rep.instances}",
        f"outcome   {'pass' if rep.passed else 'FAIL'}",
    ]
    if rep.counterexample:
        lines.append("counterexample:")
        lines += [f"  {k}: {v}" for k, v in sorted(rep.counterexample.items())]
    # wall time goes to stderr so stdout stays reproducible
    print(f"elapsed {rep.elapsed:.3f}s", file=sys.stderr)
    return Output("verify", params, result, "\n".join(lines), _kv_rows(result), 0 if rep.passed else 1)


class _ArgParser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        raise ParseError(message)


class _Explicit(argparse.Action):
    def __call__(self, parser, namespace, values, option_string=None):
        setattr(namespace, self.dest, values)
        setattr(namespace, "l_explicit", True)


def build_parser() -> argparse.ArgumentParser:
    common = _ArgParser(add_help=False)
    common.add_argument("--format", choices=["text", "json", "csv"], default="text")
    common.add_argument("--threads", type=int, default=None,
                        help=f"worker processes (default: ${THREADS_ENV} or CPU count)")

    parser = _ArgParser(prog="eulermahonian", description="Gap/level Euler-Mahonian statistics on multiset permutations.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_ArgParser)

    p = sub.add_parser("stats", parents=[common], help="all statistics of one word")
    p.add_argument("--word", required=True)
    p.add_argument("--g", type=int, default=1)
    p.add_argument("--l", type=int, default=1)
    p.add_argument("--h", type=int, default=1)
    p.set_defaults(func=cmd_stats)

    p = sub.add_parser("dist", parents=[common], help="joint distribution polynomial")
    p.add_argument("--multiset", required=True)
    p.add_argument("--t", required=True, help="statistic for the t exponent")
    p.add_argument("--q", required=True, help="statistic for the q exponent")
    p.set_defaults(func=cmd_dist)

    p = sub.add_parser("table", parents=[common], help="per-word values of statistic pairs")
    p.add_argument("--multiset", required=True)
    p.add_argument("--pair", action="append", help="A,B (repeatable)")
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("map", parents=[common], help="apply an insertion map or bijection")
    p.add_argument("name", choices=MAPS)
    p.add_argument("--word")
    p.add_argument("--lambda", dest="lam")
    p.add_argument("--label", type=int)
    p.add_argument("--n", type=int)
    p.add_argument("--n-mult", dest="n_mult", type=int)
    p.add_argument("--g", type=int, default=1)
    p.add_argument("--l", type=int, default=1)
    p.add_argument("--h", type=int, default=1)
    p.add_argument("--trace", action="store_true")
    p.set_defaults(func=cmd_map)

    p = sub.add_parser("verify", parents=[common], help="check an identity exhaustively")
    p.add_argument("claim", choices=CLAIMS)
    p.add_argument("--multiset")
    p.add_argument("--g", type=int, default=1)
    p.add_argument("--l", type=int, default=1, action=_Explicit)
    p.add_argument("--h", type=int, default=1)
    p.add_argument("--n", type=int)
    p.add_argument("--k", type=int)
    p.add_argument("--a", help="first statistic pair A,B (equi)")
    p.add_argument("--b", help="second statistic pair A,B (equi)")
    p.add_argument("--sweep", action="store_true", help="run the desk-scale parameter sweep")
    p.add_argument("--max-m", dest="max_m", type=int, default=None)
    p.add_argument("--max-n", dest="max_n", type=int, default=None)
    p.set_defaults(func=cmd_verify, l_explicit=False)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    fmt = "text"
    try:
        args = parser.parse_args(argv)
        fmt = args.format
        if getattr(args, "sweep", False):
            args.max_m = args.max_m or 8
            args.max_n = args.max_n or 4
        out = args.func(args)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ParameterError as exc:
        print(f"precondition violated: {exc}", file=sys.stderr)
        return 3
    sys.stdout.write(out.render(fmt))
    return out.code


if __name__ == "__main__":
    sys.exit(main())
