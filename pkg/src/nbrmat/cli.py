"""``nbrmat`` command-line front end.

Exit codes: 0 success, 1 usage error, 2 unreadable or invalid input.
Results go to stdout (or ``-o``), diagnostics to stderr.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from typing import Sequence, TextIO

from . import comparison, influence, invariants, neighbor
from .graph import FAMILIES, EdgeListError, FamilySpec, Graph, generate, read_edge_list, to_edge_list

log = logging.getLogger("nbrmat")


class UsageError(Exception):
    pass


class InputError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.format_usage()}{self.prog}: error: {message}")


def _build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="nbrmat", description="Neighbor-matrix graph analysis.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def fmt_flag(sp, default="text"):
        sp.add_argument("--format", choices=("json", "csv", "text"), default=default)

    def out_flag(sp):
        sp.add_argument("-o", "--output", help="write results here instead of stdout")

    g = sub.add_parser("generate", help="write a named graph family as an edge list")
    g.add_argument("--family", required=True, choices=FAMILIES)
    g.add_argument("--n", type=int)
    g.add_argument("--m", type=int)
    g.add_argument("--p", type=int)
    out_flag(g)

    m = sub.add_parser("matrix", help="print the neighbor matrix")
    m.add_argument("graph")
    order = m.add_mutually_exclusive_group()
    order.add_argument("--sorted", dest="sorted", action="store_true", default=True)
    order.add_argument("--unsorted", dest="sorted", action="store_false")
    m.add_argument("--method", choices=("bfs", "powers", "boolean"), default="bfs")
    fmt_flag(m, "csv")
    out_flag(m)

    i = sub.add_parser("invariants", help="invariants read off the neighbor matrix")
    i.add_argument("graph")
    i.add_argument("--method", choices=("bfs", "powers", "boolean"), default="bfs")
    fmt_flag(i, "json")
    out_flag(i)

    c = sub.add_parser("compare", help="comparison metrics for two or more graphs")
    c.add_argument("graphs", nargs="+")
    c.add_argument("--smax-bound", type=int, default=comparison.DEFAULT_SMAX_BOUND)
    fmt_flag(c)
    out_flag(c)

    r = sub.add_parser("rank", help="rank vertices by influence")
    r.add_argument("graph")
    r.add_argument("--norm", choices=("l1", "l2"), default="l1")
    r.add_argument("--lost-pair-weight", default="diam+1")
    fmt_flag(r, "csv")
    out_flag(r)

    nz = sub.add_parser("noniso", help="try to certify two graphs non-isomorphic")
    nz.add_argument("first")
    nz.add_argument("second")
    fmt_flag(nz)
    out_flag(nz)
    return p


def _load(path: str) -> Graph:
    try:
        return read_edge_list(path)
    except EdgeListError as e:
        raise InputError(f"{path}: {e}") from e
    except (OSError, UnicodeDecodeError) as e:
        raise InputError(f"{path}: {e}") from e


def _matrix_text(rows, labels) -> str:
    width = max((len(s) for s in labels), default=0)
    return "".join(
        f"{lab:<{width}}  {' '.join(str(v) for v in row)}\n" for lab, row in zip(labels, rows.tolist())
    )


def _cmd_generate(args) -> str:
    spec = FamilySpec(args.family, n=args.n, m=args.m, p=args.p)
    try:
        g = generate(spec)
    except ValueError as e:
        raise UsageError(str(e)) from e
    return to_edge_list(g) + "\n"


def _cmd_matrix(args) -> str:
    g = _load(args.graph)
    x = neighbor.build(g, args.method)
    if args.sorted:
        nm = neighbor.sort_rows(x)
        rows, labels = nm.rows, [g.labels[v] for v in nm.order]
    else:
        rows, labels = x, list(g.labels)
    if args.format == "csv":
        return neighbor.to_csv(rows)
    if args.format == "json":
        return neighbor.to_json(rows, labels) + "\n"
    return _matrix_text(rows, labels)


def _cmd_invariants(args) -> str:
    g = _load(args.graph)
    x = neighbor.build(g, args.method)
    rep = invariants.report(x)
    if not rep.connected:
        log.warning("graph is disconnected (%d components); connected-only invariants omitted",
                    rep.component_count)
    doc = rep.to_dict(g.labels)
    if args.format == "json":
        return json.dumps(doc) + "\n"
    lines = []
    for key, val in doc.items():
        if isinstance(val, float):
            val = comparison.fmt(val)
        elif isinstance(val, dict):
            val = " ".join(f"{k}:{comparison.fmt(v)}" for k, v in val.items())
        elif isinstance(val, list):
            val = " ".join(str(v) for v in val)
        elif val is None:
            val = "n/a"
        lines.append(f"{key},{val}" if args.format == "csv" else f"{key}: {val}")
    return "\n".join(lines) + "\n"


def _cmd_compare(args) -> str:
    graphs = [_load(p) for p in args.graphs]
    rep = comparison.compare_many(graphs, args.graphs, args.smax_bound)
    if args.format == "json":
        return rep.to_json() + "\n"
    if args.format == "csv":
        return rep.to_csv()
    lines = []
    for p in rep.graphs:
        lines.append(
            f"{p.name}: dimension {p.dimension}, frobenius {comparison.fmt(p.frobenius)}, "
            f"avg distance {comparison.fmt(p.average_distance)}, "
            f"avg clustering {comparison.fmt(p.average_clustering)}, "
            f"pearson {comparison.fmt(p.pearson)}, "
            f"s-metric {p.s} (normalized {comparison.fmt(p.s_normalized, 'unavailable')})"
        )
    for r in rep.pairs:
        lines.append(
            f"{r.first} vs {r.second}: similar={str(r.similar).lower()} {r.noniso} "
            f"distance={comparison.fmt(r.distance, 'n/a')}"
        )
    return "\n".join(lines) + "\n"


def _cmd_rank(args) -> str:
    g = _load(args.graph)
    if args.lost_pair_weight == "diam+1":
        weight = None
    else:
        try:
            weight = float(args.lost_pair_weight)
        except ValueError as e:
            raise UsageError(f"--lost-pair-weight: expected a number or 'diam+1'") from e
    try:
        cfg = influence.InfluenceConfig(norm=args.norm, lost_pair_weight=weight)
    except ValueError as e:
        raise UsageError(str(e)) from e
    if g.n < 2:
        raise InputError(f"{args.graph}: ranking needs at least two vertices")
    ranking = influence.rank_vertices(g, cfg)
    if args.format == "json":
        return ranking.to_json(g.labels) + "\n"
    if args.format == "csv":
        return ranking.to_csv(g.labels)
    return "".join(
        f"{r:>4}  {g.labels[v]}  {comparison.fmt(ranking.scores[v])}\n"
        for r, v in enumerate(ranking.order, start=1)
    )


def _cmd_noniso(args) -> str:
    g, h = _load(args.first), _load(args.second)
    verdict = comparison.noniso_certificate(g, h)
    if args.format == "json":
        return json.dumps({"verdict": verdict}) + "\n"
    return verdict + "\n"


COMMANDS = {
    "generate": _cmd_generate,
    "matrix": _cmd_matrix,
    "invariants": _cmd_invariants,
    "compare": _cmd_compare,
    "rank": _cmd_rank,
    "noniso": _cmd_noniso,
}


def run(argv: Sequence[str] | None = None, stdout: TextIO | None = None, stderr: TextIO | None = None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    handler = logging.StreamHandler(stderr)
    handler.setFormatter(logging.Formatter("nbrmat: %(levelname)s: %(message)s"))
    root = logging.getLogger()
    root.addHandler(handler)
    try:
        args = _build_parser().parse_args(argv)
        text = COMMANDS[args.command](args)
        if getattr(args, "output", None):
            try:
                with open(args.output, "w", encoding="utf-8") as fh:
                    fh.write(text)
            except OSError as e:
                raise InputError(f"{args.output}: {e}") from e
        else:
            stdout.write(text)
        return 0
    except UsageError as e:
        print(e, file=stderr)
        return 1
    except InputError as e:
        print(f"nbrmat: error: {e}", file=stderr)
        return 2
    except SystemExit as e:  # --help
        return int(e.code or 0)
    finally:
        root.removeHandler(handler)


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
