"""Command-line entry point: ``topoindex compute|verify|generate``.

Exit codes: 0 success (no violations), 1 a bound violation was found,
2 usage, input or generation error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from dataclasses import dataclass

from . import bounds, generators
from .formats import FormatError, read_graphs, write_graph6
from .graph import Graph, GraphError
from .indices import IndexReport, index_report

EXIT_OK, EXIT_VIOLATION, EXIT_USAGE = 0, 1, 2
UNDEFINED = "undefined(disconnected)"


class UsageError(Exception):
    pass


@dataclass
class RunConfig:
    command: str
    input: str | None
    input_format: str
    family: str | None
    params: dict
    bounds: list[str]
    seed: int | None
    output_format: str
    jobs: int
    output: str | None


def _bound_list(text: str) -> list[str]:
    ids = [t.strip() for t in text.split(",") if t.strip()]
    try:
        return bounds.resolve_bounds(ids)
    except KeyError as exc:
        raise argparse.ArgumentTypeError(exc.args[0]) from None


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="topoindex", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def source(p, required_family=False):
        g = p.add_argument_group("graph source")
        if not required_family:
            g.add_argument("--input", "-i", help="graph6 or edge-list file ('-' for stdin)")
            g.add_argument("--input-format", choices=("auto", "graph6", "edgelist"), default="auto")
        g.add_argument("--family", choices=generators.FAMILIES, required=required_family)
        g.add_argument("--n", type=int)
        g.add_argument("--n-min", type=int)
        g.add_argument("--n-max", type=int)
        g.add_argument("--count", type=int, default=1, help="number of graphs for random families")
        g.add_argument("--seed", type=int, help="mandatory for random families")
        g.add_argument("--m", type=int, help="edge count for random_gnm_connected")
        g.add_argument("--n1", type=int)
        g.add_argument("--n2", type=int)
        g.add_argument("--p", type=float, help="edge probability for random_bipartite_diam3")
        p.add_argument("--output", "-o", help="write to this file instead of stdout")

    p = sub.add_parser("compute", help="print every index of each input graph")
    source(p)
    p.add_argument("--format", dest="output_format", choices=("plain", "json", "csv"), default="plain")

    p = sub.add_parser("verify", help="check bounds over a batch of graphs")
    source(p)
    sel = p.add_mutually_exclusive_group()
    sel.add_argument("--bounds", type=_bound_list, help="comma-separated bound ids: " + ", ".join(bounds.BOUNDS))
    sel.add_argument("--all-bounds", action="store_true", help="check every bound (default)")
    p.add_argument("--format", dest="output_format", choices=("plain", "json", "csv"), default="plain")
    p.add_argument("--jobs", "-j", type=int, default=1, help="worker processes")

    p = sub.add_parser("generate", help="write graph6 lines for a generated family")
    source(p, required_family=True)
    return parser


def make_config(args: argparse.Namespace) -> RunConfig:
    params = {k: getattr(args, k) for k in ("n", "n_min", "n_max", "count", "m", "n1", "n2", "p")}
    params = {k: v for k, v in params.items() if v is not None}
    family = args.family
    inp = getattr(args, "input", None)
    if (inp is None) == (family is None):
        raise UsageError("give exactly one of --input or --family")
    if family in generators.RANDOM and args.seed is None:
        raise UsageError(f"--seed is required for random family {family!r}")
    return RunConfig(
        command=args.command,
        input=inp,
        input_format=getattr(args, "input_format", "auto"),
        family=family,
        params=params,
        bounds=getattr(args, "bounds", None) or list(bounds.BOUNDS),
        seed=args.seed,
        output_format=getattr(args, "output_format", "plain"),
        jobs=max(1, getattr(args, "jobs", 1)),
        output=args.output,
    )


def load_graphs(cfg: RunConfig) -> list[Graph]:
    if cfg.input is not None:
        try:
            if cfg.input == "-":
                text = sys.stdin.read()
            else:
                with open(cfg.input, encoding="ascii") as fh:
                    text = fh.read()
        except (OSError, UnicodeDecodeError) as exc:
            raise UsageError(f"cannot read {cfg.input}: {exc}") from None
        try:
            return read_graphs(text, cfg.input_format)
        except (FormatError, GraphError) as exc:
            raise UsageError(f"{cfg.input}: {exc}") from None
    params = dict(cfg.params)
    count = params.pop("count", 1)
    needs_range = "n" not in params and "n_max" not in params
    if cfg.family == "complete_bipartite" and "n1" in params and "n2" in params:
        needs_range = False
        params.setdefault("n_max", params["n1"] + params["n2"])
    if needs_range:
        raise UsageError(f"family {cfg.family!r} needs --n or --n-max")
    try:
        return generators.batch(cfg.family, count=count, seed=cfg.seed, **params)
    except GraphError as exc:
        raise UsageError(str(exc)) from None


def _report_values(g: Graph, rep: IndexReport) -> dict[str, str]:
    out = {"graph6": write_graph6(g) if g.n <= 62 else ""}
    for key, val in rep.as_dict().items():
        out[key] = UNDEFINED if val is None else bounds.fmt_value(val)
    return out


def render_reports(graphs: list[Graph], fmt: str) -> str:
    rows = [_report_values(g, index_report(g)) for g in graphs]
    if fmt == "json":
        doc = []
        for g, row in zip(graphs, rows):
            rep = index_report(g).as_dict()
            doc.append({"graph6": row["graph6"], **{k: UNDEFINED if v is None else bounds.json_value(v) for k, v in rep.items()}})
        return json.dumps(doc, indent=2) + "\n"
    if fmt == "csv":
        buf = io.StringIO()
        if rows:
            w = csv.DictWriter(buf, fieldnames=list(rows[0]), lineterminator="\n")
            w.writeheader()
            w.writerows(rows)
        return buf.getvalue()
    blocks = ["\n".join(f"{k}: {v}" for k, v in row.items()) for row in rows]
    return "\n\n".join(blocks) + "\n"


def _emit(text: str, cfg: RunConfig) -> None:
    if cfg.output:
        with open(cfg.output, "w", encoding="ascii") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def cmd_compute(cfg: RunConfig) -> int:
    _emit(render_reports(load_graphs(cfg), cfg.output_format), cfg)
    return EXIT_OK


def cmd_verify(cfg: RunConfig) -> int:
    graphs = load_graphs(cfg)
    result = bounds.run_suite(graphs, cfg.bounds, jobs=cfg.jobs)
    if cfg.output_format == "json":
        text = result.to_json() + "\n"
    elif cfg.output_format == "csv":
        text = result.to_csv()
    else:
        text = result.to_text()
    _emit(text, cfg)
    return EXIT_OK if result.ok else EXIT_VIOLATION


def cmd_generate(cfg: RunConfig) -> int:
    graphs = load_graphs(cfg)
    try:
        text = "".join(write_graph6(g) + "\n" for g in graphs)
    except FormatError as exc:
        raise UsageError(str(exc)) from None
    _emit(text, cfg)
    return EXIT_OK


COMMANDS = {"compute": cmd_compute, "verify": cmd_verify, "generate": cmd_generate}


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        cfg = make_config(args)
        return COMMANDS[cfg.command](cfg)
    except UsageError as exc:
        print(f"topoindex {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
