"""Command-line front end: compute, construct, verify, and export certificates.

JSON is the interchange format (canonical key order, edges sorted within
each tree, byte-identical across runs); DOT is export-only.  When the
caller names the larger part first, certificates are emitted in the
caller's orientation, so their x/y labels survive the round trip.

Exit codes: 0 success, 1 invalid arguments or instance-too-large,
2 verification failure (verify subcommand only).
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from pathlib import Path
from typing import Sequence

from .connectivity import kappa_bipartite, kappa_terminal, min_terminal_index
from .core import (
    BipartiteOrder,
    InstanceTooLargeError,
    InvalidArgumentError,
    InvalidTerminalSetError,
    Side,
    Tree,
    ValidationReport,
    Violation,
    normalize,
    terminal_set,
    validate_tree,
)
from .oracle import oracle_kappa_k, oracle_spanning_packing
from .packing import SpanningTreePacking, build_packing
from .witness import SteinerWitness, _family_report, build_witness

DOT_PALETTE = (
    "#a6cee3", "#1f78b4", "#b2df8a", "#33a02c", "#fb9a99", "#e31a1c",
    "#fdbf6f", "#ff7f00", "#cab2d6", "#6a3d9a", "#ffff99", "#b15928",
)


@dataclass(frozen=True)
class DocumentTree:
    """One tree of a certificate document; edges kept lexicographically sorted."""

    edges: tuple[tuple[int, int], ...]
    tree_class: str | None = None

    def __post_init__(self) -> None:
        object.__setattr__(self, "edges", tuple(sorted((x, y) for x, y in self.edges)))


@dataclass(frozen=True)
class CertificateDocument:
    """Serializable certificate: a packing or a witness, caller-oriented."""

    kind: str
    a: int
    b: int
    k: int | None = None
    i: int | None = None
    trees: tuple[DocumentTree, ...] = ()


def _convert_edges(edges, swapped: bool) -> tuple[tuple[int, int], ...]:
    if swapped:
        return tuple((y, x) for x, y in edges)
    return tuple((x, y) for x, y in edges)


def packing_document(packing: SpanningTreePacking) -> CertificateDocument:
    """Certificate for a spanning-tree packing, in the caller's orientation."""
    order = packing.order
    a_out, b_out = (order.b, order.a) if order.swapped else (order.a, order.b)
    return CertificateDocument(
        kind="packing",
        a=a_out,
        b=b_out,
        trees=tuple(
            DocumentTree(edges=_convert_edges(t.edges, order.swapped)) for t in packing.trees
        ),
    )


def witness_document(order: BipartiteOrder, witness: SteinerWitness) -> CertificateDocument:
    """Certificate for a witness, in the caller's orientation."""
    k, i = witness.terminal.k, witness.terminal.i
    a_out, b_out = (order.b, order.a) if order.swapped else (order.a, order.b)
    i_out = k - i if order.swapped else i
    return CertificateDocument(
        kind="witness",
        a=a_out,
        b=b_out,
        k=k,
        i=i_out,
        trees=tuple(
            DocumentTree(
                edges=_convert_edges(ct.tree.edges, order.swapped),
                tree_class=ct.klass.value,
            )
            for ct in witness.trees
        ),
    )


def emit_json(doc: CertificateDocument) -> str:
    """Canonical JSON: fixed key order, per-tree edges sorted, no whitespace."""
    payload: dict = {"kind": doc.kind, "a": doc.a, "b": doc.b}
    if doc.k is not None:
        payload["k"] = doc.k
    if doc.i is not None:
        payload["i"] = doc.i
    trees = []
    for t in doc.trees:
        entry: dict = {}
        if t.tree_class is not None:
            entry["class"] = t.tree_class
        entry["edges"] = [list(e) for e in sorted(t.edges)]
        trees.append(entry)
    payload["trees"] = trees
    return json.dumps(payload, separators=(",", ":"))


def emit_dot(doc: CertificateDocument) -> str:
    """One undirected graph; per-tree edge colors; boxed terminals for witnesses."""
    terminal_names: set[str] = set()
    if doc.kind == "witness" and doc.k is not None and doc.i is not None:
        terminal_names = {f"x{s}" for s in range(1, doc.i + 1)} | {
            f"y{t}" for t in range(1, doc.k - doc.i + 1)
        }
    lines = ["graph certificate {"]
    for s in range(1, doc.a + 1):
        name = f"x{s}"
        lines.append(f"  {name} [shape=box];" if name in terminal_names else f"  {name};")
    for t in range(1, doc.b + 1):
        name = f"y{t}"
        lines.append(f"  {name} [shape=box];" if name in terminal_names else f"  {name};")
    for index, tree in enumerate(doc.trees):
        color = DOT_PALETTE[index % len(DOT_PALETTE)]
        for x, y in sorted(tree.edges):
            lines.append(f'  x{x} -- y{y} [color="{color}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def parse_document(text: str) -> CertificateDocument:
    """Parse and schema-check a JSON certificate; malformed input raises."""
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InvalidArgumentError(f"not valid JSON: {exc}") from None
    if not isinstance(data, dict):
        raise InvalidArgumentError("certificate must be a JSON object")
    kind = data.get("kind")
    if kind not in ("packing", "witness"):
        raise InvalidArgumentError("kind must be 'packing' or 'witness'")

    def int_field(name: str, required: bool) -> int | None:
        value = data.get(name)
        if value is None:
            if required:
                raise InvalidArgumentError(f"missing integer field '{name}'")
            return None
        if not isinstance(value, int) or isinstance(value, bool):
            raise InvalidArgumentError(f"field '{name}' must be an integer")
        return value

    a = int_field("a", required=True)
    b = int_field("b", required=True)
    k = int_field("k", required=(kind == "witness"))
    i = int_field("i", required=(kind == "witness"))
    raw_trees = data.get("trees")
    if not isinstance(raw_trees, list):
        raise InvalidArgumentError("field 'trees' must be a list")
    trees = []
    for position, raw in enumerate(raw_trees):
        if not isinstance(raw, dict) or not isinstance(raw.get("edges"), list):
            raise InvalidArgumentError(f"tree {position} must be an object with an 'edges' list")
        tree_class = raw.get("class")
        if tree_class is not None and tree_class not in ("A0", "A1", "A2"):
            raise InvalidArgumentError(f"tree {position} has unknown class {tree_class!r}")
        edges = []
        for edge in raw["edges"]:
            if (
                not isinstance(edge, list)
                or len(edge) != 2
                or not all(isinstance(v, int) and not isinstance(v, bool) for v in edge)
            ):
                raise InvalidArgumentError(f"tree {position} has a malformed edge {edge!r}")
            edges.append((edge[0], edge[1]))
        trees.append(DocumentTree(edges=tuple(edges), tree_class=tree_class))
    return CertificateDocument(kind=kind, a=a, b=b, k=k, i=i, trees=tuple(trees))


def verify_document(doc: CertificateDocument) -> ValidationReport:
    """Re-validate a certificate document structurally."""
    order = normalize(doc.a, doc.b)
    if doc.kind == "packing":
        required = order.vertices()
        trees = [Tree(_convert_edges(t.edges, order.swapped)) for t in doc.trees]
        for tree in trees:
            report = validate_tree(order, required, tree)
            if not report.ok:
                return report
        for p1 in range(len(trees)):
            for p2 in range(p1 + 1, len(trees)):
                shared = trees[p1].edge_set & trees[p2].edge_set
                if shared:
                    x, y = min(shared)
                    return ValidationReport(
                        (Violation("edge-overlap", f"trees {p1} and {p2} share edge (x{x}, y{y})"),)
                    )
        return ValidationReport()

    assert doc.k is not None and doc.i is not None
    i_norm = doc.k - doc.i if order.swapped else doc.i
    try:
        terminal = terminal_set(order, doc.k, i_norm)
    except InvalidTerminalSetError as exc:
        return ValidationReport((Violation("wrong-terminals", str(exc)),))
    terminals = terminal.vertices()
    members = []
    for t in doc.trees:
        tree = Tree(_convert_edges(t.edges, order.swapped))
        members.append((tree, tree.vertices() - terminals))
    return _family_report(order, terminals, members)


class _Parser(argparse.ArgumentParser):
    """argparse exits 2 on bad usage; the contract here is exit 1."""

    def error(self, message: str) -> None:  # type: ignore[override]
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def _add_sizes(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("--a", type=int, required=True, help="size of the first part")
    sub.add_argument("--b", type=int, required=True, help="size of the second part")


def _build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="treeconn", description=__doc__.splitlines()[0])
    commands = parser.add_subparsers(dest="command", required=True)

    kappa = commands.add_parser("kappa", help="k-connectivity, or one terminal profile's value")
    _add_sizes(kappa)
    kappa.add_argument("--k", type=int, required=True, help="number of terminals")
    kappa.add_argument("--i", type=int, default=None, help="terminals taken from the first part")
    kappa.add_argument("--breakdown", action="store_true", help="print the (a2, a1, a0) composition")
    kappa.set_defaults(func=_cmd_kappa)

    pack = commands.add_parser("pack", help="emit a maximum spanning-tree packing")
    _add_sizes(pack)
    pack.add_argument("--format", choices=("json", "dot"), default="json")
    pack.set_defaults(func=_cmd_pack)

    witness = commands.add_parser("witness", help="emit a maximum witness for one terminal set")
    _add_sizes(witness)
    witness.add_argument("--k", type=int, required=True)
    witness.add_argument("--i", type=int, default=None, help="default: a profile attaining kappa_k")
    witness.add_argument("--format", choices=("json", "dot"), default="json")
    witness.set_defaults(func=_cmd_witness)

    verify = commands.add_parser("verify", help="re-validate a JSON certificate")
    verify.add_argument("--input", required=True, help="path to a certificate file")
    verify.set_defaults(func=_cmd_verify)

    oracle = commands.add_parser("oracle", help="brute-force small instances (guards apply)")
    _add_sizes(oracle)
    oracle.add_argument("--k", type=int, default=None, help="omit to count spanning trees")
    oracle.set_defaults(func=_cmd_oracle)

    table = commands.add_parser("table", help="kappa_k for every k, one line each")
    _add_sizes(table)
    table.set_defaults(func=_cmd_table)

    return parser


def _cmd_kappa(args: argparse.Namespace) -> int:
    order = normalize(args.a, args.b)

    def to_normalized(i_caller: int) -> int:
        return args.k - i_caller if order.swapped else i_caller

    if args.breakdown:
        if args.i is not None:
            i_caller = args.i
        else:
            i_norm = min_terminal_index(order, args.k)
            i_caller = args.k - i_norm if order.swapped else i_norm
        breakdown = kappa_terminal(order, args.k, to_normalized(i_caller))
        side = breakdown.a1_side
        if side is not None and order.swapped:
            side = Side.Y if side is Side.X else Side.X
        payload = {
            "i": i_caller,
            "a2": breakdown.a2,
            "a1": breakdown.a1,
            "a1_side": side.value if side is not None else "none",
            "a0": breakdown.a0,
            "kappa": breakdown.kappa,
        }
        print(json.dumps(payload, separators=(",", ":")))
    elif args.i is not None:
        print(kappa_terminal(order, args.k, to_normalized(args.i)).kappa)
    else:
        print(kappa_bipartite(order, args.k))
    return 0


def _cmd_pack(args: argparse.Namespace) -> int:
    doc = packing_document(build_packing(normalize(args.a, args.b)))
    emit = emit_json(doc) + "\n" if args.format == "json" else emit_dot(doc)
    sys.stdout.write(emit)
    return 0


def _cmd_witness(args: argparse.Namespace) -> int:
    order = normalize(args.a, args.b)
    if args.i is None:
        i_norm = min_terminal_index(order, args.k)
    else:
        i_norm = args.k - args.i if order.swapped else args.i
    witness = build_witness(order, args.k, i_norm)
    doc = witness_document(order, witness)
    emit = emit_json(doc) + "\n" if args.format == "json" else emit_dot(doc)
    sys.stdout.write(emit)
    return 0


def _cmd_verify(args: argparse.Namespace) -> int:
    try:
        text = Path(args.input).read_text()
    except OSError as exc:
        print(f"error: cannot read {args.input}: {exc}", file=sys.stderr)
        return 1
    report = verify_document(parse_document(text))
    if report.ok:
        print("ok")
        return 0
    print(report.violations[0], file=sys.stderr)
    return 2


def _cmd_oracle(args: argparse.Namespace) -> int:
    if args.k is None:
        print(oracle_spanning_packing(args.a, args.b))
    else:
        print(oracle_kappa_k(args.a, args.b, args.k))
    return 0


def _cmd_table(args: argparse.Namespace) -> int:
    order = normalize(args.a, args.b)
    for k in range(2, args.a + args.b + 1):
        print(f"{k}\t{kappa_bipartite(order, k)}")
    return 0


def run(argv: Sequence[str] | None = None) -> int:
    """Dispatch one CLI invocation and return its exit code."""
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 0
    try:
        return args.func(args)
    except (InvalidArgumentError, InstanceTooLargeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def main() -> None:
    raise SystemExit(run(sys.argv[1:]))
