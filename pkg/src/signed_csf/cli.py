"""Command-line interface.

Exit status: 0 success, 1 verification failed, 2 bad input, 3 cap exceeded.
"""

from __future__ import annotations

import argparse
import sys
from dataclasses import dataclass
from pathlib import Path

from . import __version__
from .arrangement import (
    MAX_CHAMBER_EDGES,
    MAX_CHAMBER_VERTICES,
    brute_x_truncated,
    brute_xbar_truncated,
    enumerate_chambers,
    multiplicity_crosscheck,
)
from .chromatic import (
    DEFAULT_SUBSET_CAP,
    chromatic_polynomials,
    connectivity_certificate,
    is_connected,
    x_flats,
    x_subset,
    xbar_flats,
)
from .errors import CapExceeded, GraphFormatError, VerificationError
from .flats import DEFAULT_FLAT_CAP, characteristic_polynomial, enumerate_flats, evaluate
from .graph import SignedGraph, parse_graph
from .paths import DEFAULT_PATH_CAP, search_collisions
from .ssym import omega, serialize, specialize, truncate

EXIT_OK, EXIT_FAILED, EXIT_INPUT, EXIT_CAP = 0, 1, 2, 3


@dataclass(frozen=True)
class Config:
    subset_cap: int = DEFAULT_SUBSET_CAP
    flat_cap: int = DEFAULT_FLAT_CAP
    chamber_max_vertices: int = MAX_CHAMBER_VERTICES
    chamber_max_edges: int = MAX_CHAMBER_EDGES
    path_cap: int = DEFAULT_PATH_CAP
    threads: int = 1
    machine: bool = False

    def __post_init__(self):
        for name in ("subset_cap", "flat_cap", "chamber_max_vertices", "chamber_max_edges", "path_cap", "threads"):
            if getattr(self, name) < 1:
                raise ValueError(f"{name} must be positive")


def _load(path: str) -> SignedGraph:
    try:
        text = sys.stdin.read() if path == "-" else Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise GraphFormatError(str(exc)) from None
    return parse_graph(text)


def _header(cmd: str, fmt: str) -> str:
    return f"# signed-csf {__version__} command={cmd} format={fmt}\n"


def cmd_x(g: SignedGraph, cfg: Config) -> tuple[str, int]:
    x = x_subset(g, cfg.subset_cap)
    if g.n_edges <= cfg.flat_cap and x != x_flats(g, cfg.flat_cap):
        return "subset and flat expansions disagree\n" + serialize(x), EXIT_FAILED
    return serialize(x), EXIT_OK


def cmd_xbar(g: SignedGraph, cfg: Config) -> tuple[str, int]:
    return serialize(xbar_flats(g, cfg.flat_cap)), EXIT_OK


def cmd_reciprocity(g: SignedGraph, cfg: Config) -> tuple[str, int]:
    wx = omega(x_subset(g, cfg.subset_cap))
    xbar = xbar_flats(g, cfg.flat_cap)
    if wx == xbar:
        return "pass\n", EXIT_OK
    return f"FAIL\nomega(X)\n{serialize(wx)}Xbar\n{serialize(xbar)}", EXIT_FAILED


def cmd_chrompoly(g: SignedGraph, cfg: Config) -> tuple[str, int]:
    chi, chi_star = chromatic_polynomials(g, x_subset(g, cfg.subset_cap))
    return f"{' '.join(map(str, chi))}\n{' '.join(map(str, chi_star))}\n", EXIT_OK


def cmd_flats(g: SignedGraph, cfg: Config) -> tuple[str, int]:
    return enumerate_flats(g, cfg.flat_cap).dump(), EXIT_OK


def cmd_chambers(g: SignedGraph, cfg: Config) -> tuple[str, int]:
    return enumerate_chambers(g, cfg.chamber_max_vertices, cfg.chamber_max_edges).dump(), EXIT_OK


def _brute_counts(g: SignedGraph, n: int) -> tuple[int, int]:
    poly = brute_x_truncated(g, n)
    full = sum(poly.terms.values())
    zero_free = sum(c for e, c in poly.terms.items() if e[n] == 0)
    return full, zero_free


def cmd_oracle(g: SignedGraph, cfg: Config, radius: int) -> tuple[str, int]:
    x = x_subset(g, cfg.subset_cap)
    xbar = xbar_flats(g, cfg.flat_cap)
    lattice = enumerate_flats(g, cfg.flat_cap)
    chambers = enumerate_chambers(g, cfg.chamber_max_vertices, cfg.chamber_max_edges)
    checks = [
        ("x_subset=x_flats", x == x_flats(g, cfg.flat_cap)),
        ("omega(X)=Xbar", omega(x) == xbar),
        (f"truncate(X,{radius})=brute", truncate(x, radius) == brute_x_truncated(g, radius)),
        (f"truncate(Xbar,{radius})=brute", truncate(xbar, radius) == brute_xbar_truncated(g, radius, chambers)),
        ("chambers=|chi(-1)|", len(chambers) == abs(evaluate(characteristic_polynomial(lattice), -1))),
        (f"multiplicity(N={radius})", multiplicity_crosscheck(g, radius, chambers, cfg.flat_cap).passed),
    ]
    spec_ok = True
    for n in range(radius + 1):
        full, zero_free = _brute_counts(g, n)
        spec_ok &= specialize(x, n, False) == full and specialize(x, n, True) == zero_free
    checks.append((f"specialize(n<={radius})", spec_ok))
    checks.append(("connectivity", connectivity_certificate(g, x) == is_connected(g)))
    out = "".join(f"{'pass' if ok else 'FAIL'} {name}\n" for name, ok in checks)
    return out, EXIT_OK if all(ok for _, ok in checks) else EXIT_FAILED


def cmd_paths(n: int, cfg: Config) -> tuple[str, int]:
    report = search_collisions(n, cfg.path_cap, cfg.threads)
    return report.render(), EXIT_FAILED if report.violations else EXIT_OK


GRAPH_COMMANDS = {
    "x": (cmd_x, "chromatic signed-symmetric function X (power-sum lines)"),
    "xbar": (cmd_xbar, "Xbar from the |mu|-weighted flat expansion"),
    "reciprocity": (cmd_reciprocity, "check omega(X) = Xbar"),
    "chrompoly": (cmd_chrompoly, "chromatic and zero-free chromatic polynomials, ascending"),
    "flats": (cmd_flats, "flat lattice with Moebius values"),
    "chambers": (cmd_chambers, "chambers as sign vectors with witness points"),
}


def _common_options(suppress: bool) -> argparse.ArgumentParser:
    def d(value):
        return argparse.SUPPRESS if suppress else value

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--threads", type=int, default=d(1), help="worker processes for path search")
    common.add_argument("--cap-edges", type=int, default=d(None), help="override every edge-count cap")
    common.add_argument("--cap-path-n", type=int, default=d(DEFAULT_PATH_CAP), help="largest n for path search")
    common.add_argument("--radius", type=int, default=d(2), help="color radius N for oracle checks")
    common.add_argument("--machine", action="store_true", default=d(False), help="prefix output with a stable header")
    return common


def build_parser() -> argparse.ArgumentParser:
    # options are accepted before or after the subcommand
    parser = argparse.ArgumentParser(
        prog="signed-csf", description=__doc__.splitlines()[0], parents=[_common_options(False)]
    )
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)
    common = _common_options(True)
    for name, (_, help_text) in GRAPH_COMMANDS.items():
        p = sub.add_parser(name, help=help_text, parents=[common])
        p.add_argument("graph", help="graph file, or - for stdin")
    p = sub.add_parser("oracle", help="run every oracle cross-check at radius N", parents=[common])
    p.add_argument("graph")
    p.add_argument("N", nargs="?", type=int, default=None)
    p = sub.add_parser("paths", help="search signed paths on n vertices for equal X", parents=[common])
    p.add_argument("n", type=int)
    return parser


def _config(args) -> Config:
    kw = dict(path_cap=args.cap_path_n, threads=args.threads, machine=args.machine)
    if args.cap_edges is not None:
        kw.update(subset_cap=args.cap_edges, flat_cap=args.cap_edges, chamber_max_edges=args.cap_edges)
    return Config(**kw)


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    try:
        cfg = _config(args)
        if args.command in GRAPH_COMMANDS:
            out, code = GRAPH_COMMANDS[args.command][0](_load(args.graph), cfg)
            fmt = "ssym-lines" if args.command in ("x", "xbar") else args.command
        elif args.command == "oracle":
            radius = args.N if args.N is not None else args.radius
            out, code = cmd_oracle(_load(args.graph), cfg, radius)
            fmt = "oracle"
        else:
            out, code = cmd_paths(args.n, cfg)
            fmt = "collision-report"
    except (GraphFormatError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except CapExceeded as exc:
        print(f"cap exceeded: {exc}", file=sys.stderr)
        return EXIT_CAP
    except VerificationError as exc:
        print(f"verification failed: {exc}", file=sys.stderr)
        return EXIT_FAILED
    if cfg.machine:
        out = _header(args.command, fmt) + out
    sys.stdout.write(out)
    return code


if __name__ == "__main__":
    sys.exit(main())
