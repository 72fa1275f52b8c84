"""Command line entry point: ``nonrep gen|colour|verify|replay|reconstruct|analyze``.

Structured output is JSON with sorted keys, so equal command lines give
byte-identical output.  Exit status is 0 only for a verified success, 1 for
a failed or refuted run, 2 for bad usage or inconsistent inputs.
"""
from __future__ import annotations

import argparse
import json
import os
import random
import sys
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from pathlib import Path

from . import bounds, pathwidth, probabilistic, strategies
from .engine import (dyck_of_record, lexicographic_priority, reconstruct_input, record_from_json,
                     record_to_json, run, trace_to_json)
from .errors import ExhaustionError, NonrepError
from .generators import named_graph, random_caterpillar, random_pathwidth_graph, caterpillar
from .graph import (Graph, ListAssignment, colouring_from_json, colouring_to_json,
                    is_nonrepetitive, respects_lists, verify_star)

SEED_ENV = "NONREP_SEED"

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


@dataclass
class RunReport:
    strategy: str
    seed: int | None
    success: bool
    verified: bool | None
    colours_used: int = 0
    steps: int | None = None
    retries: int | None = None
    extras: dict = field(default_factory=dict)


def _default_seed() -> int:
    raw = os.environ.get(SEED_ENV, "0")
    try:
        return int(raw)
    except ValueError:
        raise UsageError(f"{SEED_ENV} must be an integer, got {raw!r}") from None


def _emit(obj, fmt: str, out=None) -> None:
    out = out or sys.stdout
    if fmt == "text" and isinstance(obj, dict):
        for k in sorted(obj):
            v = obj[k]
            out.write(f"{k}: {v if not isinstance(v, (dict, list)) else json.dumps(v, sort_keys=True)}\n")
    else:
        out.write(json.dumps(obj, sort_keys=True) + "\n")


def _read(path: str) -> str:
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise UsageError(str(exc)) from None


def _write(path: str, text: str) -> None:
    # whole-file replace so readers never see a partial file
    tmp = Path(path + ".tmp")
    tmp.write_text(text)
    os.replace(tmp, path)


def _load_graph(args) -> Graph:
    if getattr(args, "graph", None):
        return Graph.from_text(_read(args.graph))
    if getattr(args, "base", None):
        return named_graph(args.base)
    raise UsageError("need --graph FILE")


def _load_lists(args, n: int, default_size: int) -> ListAssignment:
    if getattr(args, "lists", None):
        lists = ListAssignment.from_json(_read(args.lists))
        if len(lists) != n:
            raise UsageError(f"lists cover {len(lists)} vertices, graph has {n}")
        return lists
    return ListAssignment.uniform(n, args.list_size or default_size)


# ---------------------------------------------------------------- gen

def cmd_gen(args) -> int:
    kind = args.kind
    if kind == "thue":
        if not args.n:
            raise UsageError("gen thue needs --n")
        word = "".join(map(str, bounds.thue_word(args.n)))
        if args.out:
            _write(args.out, word + "\n")
        _emit({"kind": "thue", "n": args.n, "word": word}, args.format)
        return EXIT_OK
    if kind == "subdivision":
        base = named_graph(args.base) if args.base else _load_graph(args)
        counts = args.count
        sg = strategies.subdivide(base, counts, args.constant_c)
        meta = sg.metadata_json()
        if args.out:
            _write(args.out + ".graph", sg.graph.to_text())
            _write(args.out + ".meta.json", meta + "\n")
        _emit({"kind": "subdivision", "n": sg.graph.n, "m": sg.graph.m,
               "division_counts": {f"{a}-{b}": len(p) for (a, b), p in sg.edge_paths.items()}},
              args.format)
        return EXIT_OK
    if kind == "caterpillar":
        if args.spine:
            t = caterpillar(args.spine, args.leaves)
        else:
            t = random_caterpillar(random.Random(args.seed))
        if args.out:
            _write(args.out + ".graph", t.to_text())
        _emit({"kind": "caterpillar", "n": t.n, "m": t.m,
               "spine": probabilistic.caterpillar_spine(t)}, args.format)
        return EXIT_OK
    if kind == "random-pw":
        if args.n is None or args.k is None:
            raise UsageError("gen random-pw needs --n and --k")
        g, bags = random_pathwidth_graph(args.n, args.k, random.Random(args.seed))
        pd = pathwidth.PathDecomposition(bags)
        if args.out:
            _write(args.out + ".graph", g.to_text())
            _write(args.out + ".pd", pd.to_text())
        _emit({"kind": "random-pw", "n": g.n, "m": g.m, "width": pd.width}, args.format)
        return EXIT_OK
    if kind == "lists":
        g = _load_graph(args)
        size = args.list_size or 5
        lists = ListAssignment.random(g.n, size, random.Random(args.seed), args.palette)
        if args.out:
            _write(args.out, lists.to_json() + "\n")
        else:
            sys.stdout.write(lists.to_json() + "\n")
        return EXIT_OK
    raise UsageError(f"unknown kind {kind!r}")


# ---------------------------------------------------------------- colour

def _finish(report: RunReport, colour, args) -> int:
    if colour is not None and args.out:
        _write(args.out, colouring_to_json(colour) + "\n")
    _emit(asdict(report), args.format)
    return EXIT_OK if report.success and report.verified else EXIT_FAIL


def cmd_colour(args) -> int:
    s = args.strategy
    seed = args.seed
    if s == "degree":
        g = _load_graph(args)
        lists = _load_lists(args, g.n, strategies.list_size_for_degree(max(g.max_degree(), 2)))
        try:
            res = strategies.colour_bounded_degree(g, lists, seed, args.max_steps)
        except ExhaustionError as exc:
            return _finish(RunReport(s, seed, False, None, extras={"error": str(exc)}), None, args)
        verified = bool(is_nonrepetitive(g, res.colouring)) and respects_lists(res.colouring, lists)
        rep = RunReport(s, seed, True, verified, len(set(res.colouring)), res.steps,
                        extras={"dyck": res.dyck, "record_entries": len(res.record)})
        return _finish(rep, res.colouring, args)
    if s == "subdivision":
        if args.meta:
            sg = strategies.SubdividedGraph.from_metadata(_read(args.meta))
        else:
            base = named_graph(args.base) if args.base else _load_graph(args)
            sg = strategies.subdivide(base, None, args.constant_c)
        lists = _load_lists(args, sg.graph.n, 5)
        try:
            res = strategies.colour_subdivision(sg, lists, seed, args.max_steps, keep_trace=True)
        except ExhaustionError as exc:
            return _finish(RunReport(s, seed, False, None, extras={"error": str(exc)}), None, args)
        dyck = res.dyck
        verified = (bool(is_nonrepetitive(sg.graph, res.colouring))
                    and respects_lists(res.colouring, lists)
                    and all(strategies.is_nice(sg, x) for x in res.trace))
        rep = RunReport(s, seed, True, verified, len(set(res.colouring)), res.steps,
                        extras={"dyck": dyck, "special": bounds.is_special(dyck), "n": sg.graph.n})
        if args.record_out:
            _write(args.record_out, record_to_json(res.record) + "\n")
        return _finish(rep, res.colouring, args)
    if s in ("pathwidth", "star"):
        if not args.pd:
            raise UsageError(f"strategy {s} needs --pd FILE")
        g = _load_graph(args)
        pd = pathwidth.PathDecomposition.from_text(_read(args.pd))
        k = max(pathwidth.validate_pd(g, pd), 0)
        if s == "pathwidth":
            colour = pathwidth.colour_pathwidth(g, pd, verify=False)
            verified = bool(is_nonrepetitive(g, colour))
            bound = pathwidth.pathwidth_colour_bound(k)
        else:
            colour = pathwidth.star_colour_pathwidth(g, pd, verify=False)
            verified = bool(verify_star(g, colour))
            bound = pathwidth.star_colour_bound(k)
        used = len(set(colour))
        rep = RunReport(s, None, True, verified and used <= bound, used,
                        extras={"width": k, "bound": bound})
        return _finish(rep, colour, args)
    if s == "lll-subdivision":
        base = named_graph(args.base) if args.base else _load_graph(args)
        try:
            res = probabilistic.lll_colour_subdivision(base, None, args.r, seed, args.max_retries,
                                                       args.method)
        except ExhaustionError as exc:
            return _finish(RunReport(s, seed, False, None, extras={"error": str(exc)}), None, args)
        verified = bool(is_nonrepetitive(res.graph, res.colouring))
        rep = RunReport(s, seed, True, verified, len(set(res.colouring)), retries=res.attempts,
                        extras={"n": res.graph.n})
        return _finish(rep, res.colouring, args)
    if s == "caterpillar":
        t = _load_graph(args)
        lists = _load_lists(args, t.n, probabilistic.CATERPILLAR_LIST_SIZE)
        try:
            res = probabilistic.colour_caterpillar(t, lists, seed, args.max_retries)
        except ExhaustionError as exc:
            return _finish(RunReport(s, seed, False, None, extras={"error": str(exc)}), None, args)
        verified = bool(is_nonrepetitive(t, res.colouring)) and respects_lists(res.colouring, lists)
        rep = RunReport(s, seed, True, verified, len(set(res.colouring)), retries=res.attempts)
        return _finish(rep, res.colouring, args)
    raise UsageError(f"unknown strategy {s!r}")


# ---------------------------------------------------------------- verify / replay / reconstruct

def cmd_verify(args) -> int:
    g = _load_graph(args)
    colour = colouring_from_json(_read(args.colouring))
    if len(colour) != g.n:
        raise UsageError("colouring does not match the graph")
    verdict = verify_star(g, colour) if args.star else is_nonrepetitive(g, colour)
    out = {"ok": bool(verdict), "witness": list(verdict.witness) if verdict.witness else None,
           "property": "star" if args.star else "nonrepetitive"}
    if args.lists:
        lists = ListAssignment.from_json(_read(args.lists))
        out["respects_lists"] = respects_lists(colour, lists)
        out["ok"] = out["ok"] and out["respects_lists"]
    _emit(out, args.format)
    return EXIT_OK if out["ok"] else EXIT_FAIL


def _engine_setup(args):
    """Graph, working lists, priority and precolouring for replay/reconstruct."""
    if args.meta:
        sg = strategies.SubdividedGraph.from_metadata(_read(args.meta))
        lists5 = _load_lists(args, sg.graph.n, 5)
        pre = strategies.precolour_originals(sg, lists5)
        return sg.graph, strategies.adjust_lists(sg, lists5, pre), strategies.SubdivisionPriority(sg), pre
    g = _load_graph(args)
    return g, _load_lists(args, g.n, 4), lexicographic_priority, None


def _parse_vector(text: str) -> list[int]:
    try:
        return [int(tok) for tok in text.split()]
    except ValueError:
        raise UsageError("vector file must hold whitespace-separated integers") from None


def _format_vector(vector) -> str:
    return " ".join(map(str, vector)) + "\n"


def cmd_replay(args) -> int:
    g, lists, priority, pre = _engine_setup(args)
    vector = _parse_vector(_read(args.vector))
    res = run(g, lists, priority, pre, vector, keep_trace=True)
    out = {"success": res.success, "steps": res.steps,
           "record": json.loads(record_to_json(res.record)),
           "trace": json.loads(trace_to_json(res.trace)),
           "colouring": res.colouring}
    if res.record:
        try:
            out["dyck"] = dyck_of_record(res.record)
        except NonrepError as exc:
            out["dyck_error"] = str(exc)
    if args.out:
        _write(args.out, colouring_to_json(res.colouring) + "\n")
    if args.record_out:
        _write(args.record_out, record_to_json(res.record) + "\n")
    _emit(out, args.format)
    return EXIT_OK


def cmd_reconstruct(args) -> int:
    g, lists, priority, pre = _engine_setup(args)
    final = colouring_from_json(_read(args.colouring))
    record = record_from_json(_read(args.record))
    vector = reconstruct_input(g, lists, priority, pre, final, record)
    text = _format_vector(vector)
    if args.out:
        _write(args.out, text)
    sys.stdout.write(text)
    return EXIT_OK


# ---------------------------------------------------------------- analyze

def cmd_analyze(args) -> int:
    what, vals = args.what, args.values

    def need(k):
        if len(vals) != k:
            raise UsageError(f"analyze {what} takes {k} argument(s)")
        return vals

    if what == "ell":
        (d,) = map(int, need(1))
        out = {"delta": d, "list_size": strategies.list_size_for_degree(d)}
    elif what == "growth":
        (d,) = map(int, need(1))
        tau, rho = bounds.characteristic_root(d)
        out = {"delta": d, "growth_rate": bounds.growth_rate(d),
               "closed_form": bounds.growth_closed_form(d), "tau": tau, "rho": rho,
               "optimal_rate": 1 / rho}
    elif what == "coeffs":
        d, t = map(int, need(2))
        exact = bounds.series_B(d, t)
        out = {"delta": d, "B": [str(x) for x in exact], "B_float": [float(x) for x in exact]}
    elif what == "dyck":
        (t,) = map(int, need(1))
        cnt = bounds.count_special_dyck(t)
        out = {"t": t, "special_dyck": cnt, "bound": bounds.SPECIAL_DYCK_BASE ** (t + 1),
               "dprime": {str(q): v for q, v in bounds.enumerate_Dprime(t).items()}}
    elif what == "spread":
        q, c, eps = need(3)
        q, c, eps = int(q), int(c), Fraction(eps)
        params = bounds.SpreadParams(c, eps)
        count = bounds.count_c_spread(q, c)
        out = {"q": q, "c": c, "eps": str(eps), "count": count,
               "recurrence": bounds.spread_recurrence_bound(q, c),
               "hypotheses": params.holds(), "bound": float((1 + eps) ** q)}
    elif what == "thue":
        (n,) = map(int, need(1))
        word = bounds.thue_word(n)
        out = {"n": n, "word": "".join(map(str, word)), "square_free": bounds.is_square_free(word)}
    elif what == "lll":
        if args.preset not in probabilistic.LLL_PRESETS:
            raise UsageError("analyze lll needs --preset subdivision|caterpillar")
        out = probabilistic.LLL_PRESETS[args.preset]().as_dict()
    else:
        raise UsageError(f"unknown analysis {what!r}")
    _emit(out, args.format)
    return EXIT_OK


# ---------------------------------------------------------------- parser

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "text"), default="json")
    common.add_argument("--seed", type=int, default=None)

    p = argparse.ArgumentParser(prog="nonrep", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    g = sub.add_parser("gen", parents=[common], help="generate instances")
    g.add_argument("kind", choices=("thue", "subdivision", "caterpillar", "random-pw", "lists"))
    g.add_argument("--n", type=int)
    g.add_argument("--k", type=int)
    g.add_argument("--base", help="named base graph: k4, p5, c5, star3, petersen")
    g.add_argument("--graph")
    g.add_argument("--count", type=int, help="division vertices per edge (default: formula)")
    g.add_argument("--constant-c", type=int, default=10**5)
    g.add_argument("--spine", type=int)
    g.add_argument("--leaves", type=int, default=0)
    g.add_argument("--list-size", type=int)
    g.add_argument("--palette", type=int)
    g.add_argument("--out")
    g.set_defaults(func=cmd_gen)

    c = sub.add_parser("colour", parents=[common], help="colour a graph")
    c.add_argument("--strategy", required=True,
                   choices=("degree", "subdivision", "pathwidth", "star", "lll-subdivision",
                            "caterpillar"))
    c.add_argument("--graph")
    c.add_argument("--base")
    c.add_argument("--meta")
    c.add_argument("--lists")
    c.add_argument("--list-size", type=int)
    c.add_argument("--pd")
    c.add_argument("--r", type=int, help="division vertices per edge for lll-subdivision")
    c.add_argument("--method", choices=("retry", "resample"), default="retry",
                   help="lll-subdivision: redraw everything, or only the witness path")
    c.add_argument("--constant-c", type=int, default=10**5)
    c.add_argument("--max-steps", type=int, default=10**5)
    c.add_argument("--max-retries", type=int, default=100)
    c.add_argument("--out")
    c.add_argument("--record-out")
    c.set_defaults(func=cmd_colour)

    v = sub.add_parser("verify", parents=[common], help="check a colouring")
    v.add_argument("--graph", required=True)
    v.add_argument("--colouring", required=True)
    v.add_argument("--lists")
    v.add_argument("--star", action="store_true")
    v.set_defaults(func=cmd_verify)

    for name, func, hint in (("replay", cmd_replay, "run the engine on an input vector"),
                             ("reconstruct", cmd_reconstruct,
                              "recover the input vector from a colouring and record")):
        r = sub.add_parser(name, parents=[common], help=hint)
        r.add_argument("--graph")
        r.add_argument("--meta", help="subdivision metadata: use its priority and precolouring")
        r.add_argument("--lists")
        r.add_argument("--list-size", type=int)
        r.add_argument("--out")
        if name == "replay":
            r.add_argument("--vector", required=True)
            r.add_argument("--record-out")
        else:
            r.add_argument("--colouring", required=True)
            r.add_argument("--record", required=True)
        r.set_defaults(func=func)

    a = sub.add_parser("analyze", parents=[common], help="evaluate bounds and counts")
    a.add_argument("what", choices=("ell", "growth", "coeffs", "dyck", "spread", "thue", "lll"))
    a.add_argument("values", nargs="*")
    a.add_argument("--preset")
    a.set_defaults(func=cmd_analyze)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if getattr(args, "seed", None) is None:
            args.seed = _default_seed()
        return args.func(args)
    except UsageError as exc:
        print(f"nonrep: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except NonrepError as exc:
        print(f"nonrep: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
