"""Command-line surface and file formats.

Instance files are plain text: full-line ``#`` comments, one
``vertices:`` declaration listing labels in index order, then ``red:``
and ``blue:`` edge lines (pair instances) or ``edge:`` lines (plain
hypergraphs). Solution output is one solution per line with vertices
sorted by label, ``s | b`` for bi-objective solutions; ``--format json``
switches to a JSON array (arrays of labels, or objects with "s" and "b"
fields). Output bytes are deterministic for identical inputs and flags;
bench timings are the one exception.

Exit codes: 0 success, 1 usage or parse error, 2 unsatisfiable input
(empty red edge), 3 resource cap exceeded, 4 oracle mismatch.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from pathlib import Path

from .core import (
    BiInstance,
    BitSet,
    Error,
    Hypergraph,
    ParseError,
    ResourceLimitError,
    UnsatisfiableError,
    hit_edges,
)
from .dualize import DEFAULT_MAX_PARTIALS, berge_dualize, brute_force_dualize
from .biobj import (
    BiSolution,
    bi_transversals,
    brute_force_btr,
    brute_force_minimal_bsets,
    minimal_bsets,
)
from .formula import format_formula, formula_to_instance, instance_to_formula, parse_formula
from .generators import parse_dimacs, random_bi_instance, reduce_deg3, reduce_dim2


class OracleMismatchError(Error):
    """The enumeration engine and the brute-force oracle disagree."""


# --- file formats ---------------------------------------------------------


def _parse_lines(text: str) -> list[tuple[str, list[str]]]:
    entries = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        key, sep, rest = line.partition(":")
        if not sep:
            raise ParseError(f"line {lineno}: expected 'key: values', got {line!r}")
        entries.append((key.strip(), rest.split()))
    return entries


def _collect(entries: list[tuple[str, list[str]]], kind: str):
    labels: list[str] = []
    edges: dict[str, list[list[int]]] = {"red": [], "blue": [], "edge": []}
    index: dict[str, int] = {}
    allowed = {"vertices", "red", "blue"} if kind == "instance" else {"vertices", "edge"}
    for key, values in entries:
        if key not in allowed:
            raise ParseError(f"unexpected line kind {key!r} in a {kind} file")
        if key == "vertices":
            for label in values:
                if label in index:
                    raise ParseError(f"duplicate vertex label {label!r}")
                index[label] = len(labels)
                labels.append(label)
        else:
            members = []
            seen = set()
            kind_word = key if key == "edge" else f"{key} edge"
            for label in values:
                if label not in index:
                    raise ParseError(f"unknown vertex label {label!r} in {kind_word} line")
                if label in seen:
                    raise ParseError(f"duplicate vertex {label!r} in one {kind_word} line")
                seen.add(label)
                members.append(index[label])
            edges[key].append(members)
    return labels, edges


def load_instance(text: str) -> BiInstance:
    """Parse a pair-instance file into a labelled :class:`BiInstance`."""
    labels, edges = _collect(_parse_lines(text), "instance")
    if any(not e for e in edges["red"]):
        raise UnsatisfiableError("instance declares an empty red edge")
    return BiInstance.from_edges(len(labels), edges["red"], edges["blue"], labels=labels or None)


def load_hypergraph(text: str) -> Hypergraph:
    """Parse a plain hypergraph file into a labelled :class:`Hypergraph`."""
    labels, edges = _collect(_parse_lines(text), "hypergraph")
    if any(not e for e in edges["edge"]):
        raise UnsatisfiableError("hypergraph declares an empty edge")
    return Hypergraph(len(labels), tuple(BitSet(e) for e in edges["edge"]), tuple(labels) or None)


def load_any(text: str) -> BiInstance | Hypergraph:
    entries = _parse_lines(text)
    kinds = {key for key, _ in entries}
    if "edge" in kinds and (kinds & {"red", "blue"}):
        raise ParseError("file mixes edge: lines with red:/blue: lines")
    if "edge" in kinds:
        return load_hypergraph(text)
    return load_instance(text)


def _labels_of(obj: BiInstance | Hypergraph) -> list[str]:
    labels = obj.labels
    if labels is None:
        return [f"v{i}" for i in range(obj.vertex_count)]
    return list(labels)


def format_instance(inst: BiInstance) -> str:
    """Render an instance in the file format; loading it back round-trips."""
    labels = _labels_of(inst)
    lines = ["vertices: " + " ".join(labels)]
    lines += ["red: " + " ".join(labels[v] for v in e) for e in inst.red.edges]
    lines += ["blue: " + " ".join(labels[v] for v in e) for e in inst.blue.edges]
    return "\n".join(line.rstrip() for line in lines) + "\n"


def format_hypergraph(h: Hypergraph) -> str:
    labels = _labels_of(h)
    lines = ["vertices: " + " ".join(labels)]
    lines += ["edge: " + " ".join(labels[v] for v in e) for e in h.edges]
    return "\n".join(line.rstrip() for line in lines) + "\n"


# --- solution rendering ---------------------------------------------------


def _blue_names(inst: BiInstance) -> list[str]:
    return [f"B{i + 1}" for i in range(len(inst.blue.edges))]


def _name_list(s: BitSet, names: list[str]) -> list[str]:
    return sorted(names[v] for v in s)


def _print_sets(sets, names: list[str], fmt: str) -> None:
    if fmt == "json":
        print(json.dumps([_name_list(s, names) for s in sets]))
    else:
        for s in sets:
            print(" ".join(_name_list(s, names)))


def _print_bisolutions(sols: list[BiSolution], inst: BiInstance, fmt: str) -> None:
    labels = _labels_of(inst)
    blue = _blue_names(inst)
    if fmt == "json":
        payload = [{"s": _name_list(c.s, labels), "b": _name_list(c.b, blue)} for c in sols]
        print(json.dumps(payload))
    else:
        for c in sols:
            print(" ".join(_name_list(c.s, labels)) + " | " + " ".join(_name_list(c.b, blue)))


# --- commands -------------------------------------------------------------


def _read(path: str) -> str:
    return Path(path).read_text(encoding="utf-8")


def cmd_dualize(args) -> int:
    h = load_hypergraph(_read(args.file))
    sol = berge_dualize(h, max_partials=args.max_partials)
    if args.oracle and brute_force_dualize(h) != sol:
        raise OracleMismatchError("Berge enumeration disagrees with the brute-force oracle")
    _print_sets(sol, _labels_of(h), args.format)
    return 0


def cmd_btr(args) -> int:
    inst = load_instance(_read(args.file))
    sols = bi_transversals(inst, max_partials=args.max_partials)
    if args.oracle and brute_force_btr(inst) != sols:
        raise OracleMismatchError("two-phase enumeration disagrees with the brute-force oracle")
    _print_bisolutions(sols, inst, args.format)
    return 0


def cmd_bsets(args) -> int:
    inst = load_instance(_read(args.file))
    sol = minimal_bsets(inst, max_partials=args.max_partials)
    if args.oracle and brute_force_minimal_bsets(inst) != sol:
        raise OracleMismatchError("B-set enumeration disagrees with the brute-force oracle")
    _print_sets(sol, _blue_names(inst), args.format)
    return 0


def cmd_to_formula(args) -> int:
    inst = load_instance(_read(args.file))
    print(format_formula(instance_to_formula(inst)))
    return 0


def cmd_from_formula(args) -> int:
    phi = parse_formula(_read(args.file))
    print(format_instance(formula_to_instance(phi)), end="")
    return 0


def cmd_gen(args) -> int:
    sat = parse_dimacs(_read(args.file))
    build = reduce_dim2 if args.variant == "dim2" else reduce_deg3
    inst, seeds = build(sat)
    base = Path(args.output) if args.output else Path(Path(args.file).stem + "." + args.variant)
    inst_path = base.with_name(base.name + ".instance.txt")
    sols_path = base.with_name(base.name + ".solutions.txt")
    inst_path.parent.mkdir(parents=True, exist_ok=True)
    inst_path.write_text(format_instance(inst), encoding="utf-8")
    labels = _labels_of(inst)
    blue = _blue_names(inst)
    lines = []
    for s in seeds:
        b = hit_edges(s, inst.blue)
        lines.append(" ".join(_name_list(s, labels)) + " | " + " ".join(_name_list(b, blue)))
    sols_path.write_text("\n".join(lines) + "\n", encoding="utf-8")
    print(f"wrote {inst_path} and {sols_path}")
    return 0


def cmd_check(args) -> int:
    obj = load_any(_read(args.file))
    if isinstance(obj, Hypergraph):
        if berge_dualize(obj, max_partials=args.max_partials) != brute_force_dualize(obj):
            raise OracleMismatchError("Berge enumeration disagrees with the brute-force oracle")
        print("ok: Berge matches brute-force dualization")
        return 0
    if berge_dualize(obj.red, max_partials=args.max_partials) != brute_force_dualize(obj.red):
        raise OracleMismatchError("Berge enumeration disagrees with the brute-force oracle on the red hypergraph")
    print("ok: Berge matches brute-force dualization on the red hypergraph")
    if minimal_bsets(obj, max_partials=args.max_partials) != brute_force_minimal_bsets(obj):
        raise OracleMismatchError("B-set enumeration disagrees with the brute-force oracle")
    print("ok: B-set construction matches the brute-force minimal true sets")
    if bi_transversals(obj, max_partials=args.max_partials) != brute_force_btr(obj):
        raise OracleMismatchError("two-phase enumeration disagrees with the brute-force oracle")
    print("ok: two-phase enumeration matches the brute-force solution set")
    return 0


def cmd_bench(args) -> int:
    sizes = [int(s) for s in args.sizes.split(",") if s]
    rows = []
    for n in sizes:
        berge_total = 0.0
        brute_total = 0.0
        solutions = 0
        for k in range(args.per_size):
            inst = random_bi_instance(
                n, args.edges, 1, args.density, seed=args.seed * 1_000_000 + n * 1_000 + k
            )
            h = inst.red
            t0 = time.perf_counter()
            sol = berge_dualize(h)
            t1 = time.perf_counter()
            brute_force_dualize(h)
            t2 = time.perf_counter()
            berge_total += t1 - t0
            brute_total += t2 - t1
            solutions += len(sol)
        rows.append(
            (
                n,
                args.edges,
                args.per_size,
                1000 * berge_total / args.per_size,
                1000 * brute_total / args.per_size,
                solutions / args.per_size,
            )
        )
    header = "n,edges,instances,berge_ms,brute_ms,solutions"
    lines = [header] + [
        f"{n},{e},{i},{bg:.3f},{bf:.3f},{sols:.1f}" for n, e, i, bg, bf, sols in rows
    ]
    table = "\n".join(lines) + "\n"
    print(table, end="")
    if args.out_dir:
        out = Path(args.out_dir)
        out.mkdir(parents=True, exist_ok=True)
        csv_path = out / "bench.csv"
        csv_path.write_text(table, encoding="utf-8")
        png_path = out / "bench.png"
        import matplotlib

        matplotlib.use("Agg")
        import matplotlib.pyplot as plt

        fig, ax = plt.subplots(figsize=(6, 4))
        ax.plot(sizes, [r[3] for r in rows], marker="o", label="incremental (Berge)")
        ax.plot(sizes, [r[4] for r in rows], marker="s", label="brute force")
        ax.set_yscale("log")
        ax.set_xlabel("vertices")
        ax.set_ylabel("mean time (ms)")
        ax.set_title(f"Dualization timing, {args.edges} edges, density {args.density}")
        ax.grid(True, alpha=0.4)
        ax.legend()
        fig.tight_layout()
        fig.savefig(png_path, dpi=150)
        plt.close(fig)
        print(f"wrote {csv_path} and {png_path}", file=sys.stderr)
    return 0


# --- argument parsing -----------------------------------------------------


class _ArgumentParser(argparse.ArgumentParser):
    def error(self, message):
        raise ParseError(message)


def _add_output_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.add_argument(
        "--json", dest="format", action="store_const", const="json", help="shorthand for --format json"
    )


def _add_engine_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--max-partials", type=int, default=DEFAULT_MAX_PARTIALS, metavar="N")
    p.add_argument("--oracle", action="store_true", help="verify against the brute-force oracle")


def build_parser() -> argparse.ArgumentParser:
    parser = _ArgumentParser(prog="bitrans", description=__doc__.split("\n\n", 1)[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("dualize", help="minimal transversals of a plain hypergraph file")
    p.add_argument("file")
    _add_engine_flags(p)
    _add_output_flags(p)
    p.set_defaults(func=cmd_dualize)

    p = sub.add_parser("btr", help="bi-objective minimal transversals of an instance file")
    p.add_argument("file")
    _add_engine_flags(p)
    _add_output_flags(p)
    p.set_defaults(func=cmd_btr)

    p = sub.add_parser("bsets", help="minimal B-sets of an instance file")
    p.add_argument("file")
    _add_engine_flags(p)
    _add_output_flags(p)
    p.set_defaults(func=cmd_bsets)

    p = sub.add_parser("to-formula", help="print the depth-3 formula of an instance")
    p.add_argument("file")
    p.set_defaults(func=cmd_to_formula)

    p = sub.add_parser("from-formula", help="print the instance derived from a formula file")
    p.add_argument("file")
    p.set_defaults(func=cmd_from_formula)

    p = sub.add_parser("gen", help="build a reduction gadget from a DIMACS CNF file")
    p.add_argument("file")
    p.add_argument("--variant", choices=["dim2", "deg3"], default="dim2")
    p.add_argument("--output", metavar="BASE", help="output base path (default: derived from the input name)")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("check", help="compare enumeration against the brute-force oracles")
    p.add_argument("file")
    p.add_argument("--max-partials", type=int, default=DEFAULT_MAX_PARTIALS, metavar="N")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("bench", help="time the engines over a seeded corpus")
    p.add_argument("--sizes", default="8,10,12", help="comma-separated vertex counts")
    p.add_argument("--edges", type=int, default=6)
    p.add_argument("--per-size", type=int, default=3)
    p.add_argument("--density", type=float, default=0.35)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out-dir", metavar="DIR", help="also write bench.csv and bench.png here")
    p.set_defaults(func=cmd_bench)

    return parser


def main(argv=None) -> int:
    try:
        args = build_parser().parse_args(argv)
        return args.func(args)
    except ParseError as e:
        print(f"error: {e}", file=sys.stderr)
        return 1
    except (ValueError, OSError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 1
    except UnsatisfiableError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    except ResourceLimitError as e:
        print(f"error: {e}", file=sys.stderr)
        return 3
    except OracleMismatchError as e:
        print(f"error: {e}", file=sys.stderr)
        return 4
    except Error as e:
        print(f"error: {e}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
