"""Command-line front end: ``bsassign <command> --type A2 --word 2,1,2``.

Exit codes: 0 ok, 2 usage, 3 row reduction obstruction, 4 Groebner budget
exceeded, 5 non-polarizing covector.  Data goes to stdout, diagnostics to
stderr.  Set ``BSASSIGN_LOG=DEBUG`` (or INFO, ...) for progress logging.
"""

from __future__ import annotations

import argparse
import json
import logging
import os
import sys
from dataclasses import dataclass
from pathlib import Path

from . import gb
from .assignmod import (
    RREFObstruction,
    assignment_basis,
    assignment_from_json,
    cohomology_basis,
    defect_report,
    delta_vertex,
    express_in_cohomology,
    integrate,
    is_assignment,
    is_cohomological,
)
from .bsgraph import build_graph, export_dot, graph_to_json, parse_word
from .morse import morse_generators, parse_xi, report_to_json, report_to_text
from .polyring import Poly, ratfun_to_json, render
from .rootsys import NotPolarizing, RootSystem

log = logging.getLogger("bsassign")

EXIT_OK, EXIT_USAGE, EXIT_RREF, EXIT_BUDGET, EXIT_POLAR = 0, 2, 3, 4, 5


class UsageError(ValueError):
    pass


@dataclass(frozen=True)
class RunConfig:
    command: str
    rootsys: RootSystem
    word: tuple
    fmt: str = "text"
    K: int = 4
    budget: int = gb.DEFAULT_BUDGET
    xi: tuple | None = None
    assignment: Path | None = None
    delta: str | None = None

    @classmethod
    def from_args(cls, ns: argparse.Namespace) -> "RunConfig":
        try:
            rs = RootSystem.parse(ns.type)
            word = parse_word(ns.word)
            build_graph(rs, word)
            xi = parse_xi(ns.xi, rs.rank) if getattr(ns, "xi", None) else None
        except (ValueError, KeyError) as exc:
            raise UsageError(str(exc)) from exc
        if ns.K < 0:
            raise UsageError("-K must be non-negative")
        if ns.budget < 1:
            raise UsageError("--budget must be positive")
        allowed = {"graph": ("text", "json", "dot")}.get(ns.command, ("text", "json"))
        if ns.format not in allowed:
            raise UsageError(f"{ns.command} does not support --format {ns.format}")
        if ns.command == "morse" and xi is None:
            raise UsageError("morse requires --xi")
        cfg = cls(
            ns.command,
            rs,
            word,
            ns.format,
            ns.K,
            ns.budget,
            xi,
            Path(ns.assignment) if getattr(ns, "assignment", None) else None,
            getattr(ns, "delta", None),
        )
        if cfg.command == "check" and cfg.assignment is None:
            raise UsageError("check requires --assignment FILE")
        if cfg.command == "integrate" and (cfg.assignment is None) == (cfg.delta is None):
            raise UsageError("integrate needs exactly one of --assignment FILE or --delta VERTEX")
        return cfg


def matrix_text(title, basis):
    g = basis.graph
    names = [g.name(v) for v in g.vertices]
    cells = [[render(x) for x in row] for row in basis.matrix]
    width = max([len(c) for row in cells for c in row] + [len(n) for n in names])
    lines = [title, " " * (len(names[0]) + 3) + " ".join(n.rjust(width) for n in names)]
    for name, row in zip(names, cells):
        lines.append(f"{name} | " + " ".join(c.rjust(width) for c in row))
    return "\n".join(lines) + "\n"


def _dump(obj):
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"


def _header(cfg):
    return f"BS^[{','.join(map(str, cfg.word))}] in {cfg.rootsys}"


def _load_assignment(cfg):
    try:
        obj = json.loads(cfg.assignment.read_text())
        eta = assignment_from_json(obj, cfg.rootsys)
    except (OSError, ValueError, KeyError, TypeError) as exc:
        raise UsageError(f"cannot read assignment {cfg.assignment}: {exc}") from exc
    if tuple(eta.graph.word) != cfg.word:
        raise UsageError(f"assignment word {list(eta.graph.word)} differs from --word {list(cfg.word)}")
    return eta


def cmd_graph(cfg: RunConfig) -> str:
    g = build_graph(cfg.rootsys, cfg.word)
    if cfg.fmt == "dot":
        return export_dot(g, cfg.xi)
    if cfg.fmt == "json":
        return _dump(graph_to_json(g))
    lines = [f"{_header(cfg)}: {len(g.vertices)} vertices, {len(g.undirected_edges())} edges"]
    for v, w, lab in g.undirected_edges():
        lines.append(f"{g.name(v)} -> {g.name(w)}: {render_label(lab)}")
    return "\n".join(lines) + "\n"


def render_label(lab):
    return render(Poly.linear(lab))


def cmd_basis(cfg: RunConfig) -> str:
    A = assignment_basis(cfg.rootsys, cfg.word)
    return _dump(A.to_json()) if cfg.fmt == "json" else matrix_text(f"A for {_header(cfg)}", A)


def cmd_cohomology(cfg: RunConfig) -> str:
    H = cohomology_basis(cfg.rootsys, cfg.word)
    return _dump(H.to_json()) if cfg.fmt == "json" else matrix_text(f"H for {_header(cfg)}", H)


def cmd_check(cfg: RunConfig) -> str:
    eta = _load_assignment(cfg)
    ok = is_assignment(eta.graph, eta.values)
    coeffs = express_in_cohomology(eta) if ok else []
    coh = ok and is_cohomological(eta)
    g = eta.graph
    if cfg.fmt == "json":
        return _dump(
            {
                "assignment": ok,
                "cohomological": coh,
                "coefficients": {g.name(v): ratfun_to_json(c) for v, c in zip(g.vertices, coeffs)},
            }
        )
    lines = [f"assignment: {'yes' if ok else 'no'}", f"cohomological: {'yes' if coh else 'no'}"]
    lines += [f"  H_{g.name(v)}: {c}" for v, c in zip(g.vertices, coeffs) if c.num]
    return "\n".join(lines) + "\n"


def cmd_defect(cfg: RunConfig) -> str:
    rep = defect_report(cfg.rootsys, cfg.word)
    g = rep.basis.graph
    if cfg.fmt == "json":
        return _dump(
            {
                "type": str(cfg.rootsys),
                "word": list(cfg.word),
                "defects": [
                    {
                        "column": g.name(J),
                        "coefficients": {g.name(K): ratfun_to_json(c) for K, c in enumerate(cvec) if c.num},
                    }
                    for J, cvec in rep.defects
                ],
            }
        )
    lines = [f"{_header(cfg)}: {len(rep.defects)} defect column(s)"]
    for J, cvec in rep.defects:
        lines.append(f"A_{g.name(J)}:")
        lines += [f"  H_{g.name(K)}: {c}" for K, c in enumerate(cvec) if c.num]
    return "\n".join(lines) + "\n"


def cmd_integrate(cfg: RunConfig) -> str:
    if cfg.delta is not None:
        g = build_graph(cfg.rootsys, cfg.word)
        try:
            v = g.parse(cfg.delta)
        except ValueError as exc:
            raise UsageError(str(exc)) from exc
        eta = delta_vertex(g, v)
    else:
        eta = _load_assignment(cfg)
        if not is_assignment(eta.graph, eta.values):
            raise UsageError("input violates an edge congruence")
    val = integrate(eta)
    if cfg.fmt == "json":
        return _dump({"value": ratfun_to_json(val), "polynomial": val.is_polynomial()})
    return f"{val}\npolynomial: {'yes' if val.is_polynomial() else 'no'}\n"


def cmd_morse(cfg: RunConfig) -> str:
    rep = morse_generators(cfg.rootsys, cfg.word, cfg.xi, cfg.budget)
    return _dump(report_to_json(rep)) if cfg.fmt == "json" else report_to_text(rep)


def cmd_oracle(cfg: RunConfig) -> str:
    from .oracle import completeness_table  # sympy import is slow; keep it lazy

    rows = completeness_table(cfg.rootsys, cfg.word, cfg.K)
    if cfg.fmt == "json":
        return _dump(
            [{"degree": r.degree, "brute_force": r.brute_force, "from_basis": r.from_basis, "agrees": r.agrees} for r in rows]
        )
    lines = [f"{_header(cfg)}, degree <= {cfg.K}", "k  brute  basis  agree"]
    lines += [f"{r.degree:<2} {r.brute_force:>5}  {r.from_basis:>5}  {'yes' if r.agrees else 'NO'}" for r in rows]
    return "\n".join(lines) + "\n"


COMMANDS = {
    "graph": (cmd_graph, "labeled fixed-point graph"),
    "basis": (cmd_basis, "assignment basis A"),
    "cohomology": (cmd_cohomology, "cohomological basis H"),
    "check": (cmd_check, "test an assignment JSON file"),
    "defect": (cmd_defect, "columns of A with non-polynomial H-coordinates"),
    "integrate": (cmd_integrate, "localization integral"),
    "morse": (cmd_morse, "Morse generators and generating ideals"),
    "oracle": (cmd_oracle, "brute-force completeness check up to degree K"),
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="bsassign", description="Assignment modules of Bott-Samelson graphs.")
    sub = parser.add_subparsers(dest="command", required=True)
    for name, (_, help_text) in COMMANDS.items():
        p = sub.add_parser(name, help=help_text)
        p.add_argument("--type", required=True, help="Lie type, e.g. A2, B2, G2")
        p.add_argument("--word", required=True, help='comma list of 1-based letters; "" for the empty word')
        p.add_argument("--format", default="text", choices=("text", "json", "dot"))
        p.add_argument("-K", type=int, default=4, help="oracle degree bound")
        p.add_argument("--budget", type=int, default=gb.DEFAULT_BUDGET, help="Groebner S-pair budget")
        if name in ("morse", "graph"):
            p.add_argument("--xi", help='values alpha_i(xi), e.g. "1,1", or "positive"')
        if name in ("check", "integrate"):
            p.add_argument("--assignment", help="assignment JSON file")
        if name == "integrate":
            p.add_argument("--delta", help="vertex like 000: integrate its delta class")
    return parser


def _setup_logging():
    level = os.environ.get("BSASSIGN_LOG", "WARNING").upper()
    logging.basicConfig(level=getattr(logging, level, logging.WARNING), stream=sys.stderr, format="%(levelname)s %(name)s: %(message)s")


def main(argv=None) -> int:
    _setup_logging()
    parser = build_parser()
    try:
        ns = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        cfg = RunConfig.from_args(ns)
        out = COMMANDS[cfg.command][0](cfg)
    except UsageError as exc:
        print(f"bsassign: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except RREFObstruction as exc:
        print(exc.dump(), file=sys.stderr)
        return EXIT_RREF
    except gb.BudgetExceeded as exc:
        print(f"bsassign: budget exceeded: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except NotPolarizing as exc:
        print(f"bsassign: not polarizing: {exc}", file=sys.stderr)
        return EXIT_POLAR
    sys.stdout.write(out)
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
