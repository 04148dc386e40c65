"""Explicit maximum sets of internally disjoint trees connecting S_i.

All trees come in three standard shapes: terminal-only trees (A0),
trees with a single non-terminal hub adjacent to every opposite-side
terminal (A1), and two-hub trees T_{u,v} whose hubs cover each side's
terminals and are joined by the edge uv (A2).  Exchange arguments show
that restricting to these shapes loses nothing, so the builder only ever
emits them; the verifier accepts any internally disjoint family.

Greedy order: as many A2 trees as spare vertex pairs allow, then single
hubs on whichever side has spares left, then terminal-only trees from
the remaining internal-edge budget.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .connectivity import kappa_terminal
from .core import (
    BipartiteOrder,
    ConstructionBugError,
    InvalidArgumentError,
    InvalidTerminalSetError,
    Side,
    TerminalSet,
    Tree,
    ValidationReport,
    Vertex,
    Violation,
    terminal_set,
    validate_tree,
    xv,
    yv,
)
from .packing import build_tree, degree_sequence, verify_shift_capacity


class TreeClass(str, Enum):
    """How many non-terminal hubs a standard-structure tree uses."""

    A0 = "A0"
    A1 = "A1"
    A2 = "A2"


@dataclass(frozen=True)
class ClassifiedTree:
    """A tree of the witness together with its shape and hub vertices."""

    tree: Tree
    klass: TreeClass
    extras: frozenset[Vertex]


@dataclass(frozen=True)
class SteinerWitness:
    """A set of internally disjoint trees connecting one terminal set."""

    terminal: TerminalSet
    trees: tuple[ClassifiedTree, ...]

    def __len__(self) -> int:
        return len(self.trees)


class ResidualLedger:
    """Internal edges (both ends terminals) not yet used by any tree.

    Terminal-only trees consume internal edges wholesale; each single-hub
    tree then needs one remaining internal edge per same-side terminal.
    The packing below spreads its edges so evenly that after p
    terminal-only trees every terminal still has at least the needed
    number of partners.
    """

    def __init__(self, x_count: int, y_count: int) -> None:
        self.x_count = x_count
        self.y_count = y_count
        self._free: set[tuple[int, int]] = {
            (x, y) for x in range(1, x_count + 1) for y in range(1, y_count + 1)
        }

    def consume(self, x: int, y: int) -> None:
        """Mark one internal edge as used."""
        if (x, y) not in self._free:
            raise ConstructionBugError(f"internal edge (x{x}, y{y}) already used or absent")
        self._free.remove((x, y))

    def capacity(self, v: Vertex) -> int:
        """Remaining internal edges at a terminal."""
        if v.side is Side.X:
            return sum(1 for x, _ in self._free if x == v.index)
        return sum(1 for _, y in self._free if y == v.index)

    def take_lowest(self, v: Vertex) -> tuple[int, int]:
        """Pop the lowest-indexed remaining internal edge at a terminal."""
        if v.side is Side.X:
            partners = sorted(y for x, y in self._free if x == v.index)
            if not partners:
                raise ConstructionBugError(f"no internal edges left at {v}")
            edge = (v.index, partners[0])
        else:
            partners = sorted(x for x, y in self._free if y == v.index)
            if not partners:
                raise ConstructionBugError(f"no internal edges left at {v}")
            edge = (partners[0], v.index)
        self._free.remove(edge)
        return edge


def build_a2_trees(
    order: BipartiteOrder, terminal: TerminalSet, count: int
) -> tuple[ClassifiedTree, ...]:
    """``count`` two-hub trees, pairing spare vertices in index order.

    Tree c uses hubs x_{i+c} and y_{(k-i)+c}: the x-hub covers every
    Y-terminal, the y-hub covers every X-terminal, and the hub-hub edge
    joins the two stars (without it the two stars would be a forest).
    No internal edges are consumed.
    """
    i, m = terminal.x_count, terminal.y_count
    supply = min(order.a - i, order.b - m)
    if not 0 <= count <= supply:
        raise InvalidArgumentError(f"requested {count} two-hub trees, only {supply} spare pairs")
    out = []
    for c in range(1, count + 1):
        u, v = i + c, m + c
        edges = (
            [(u, t) for t in range(1, m + 1)]
            + [(s, v) for s in range(1, i + 1)]
            + [(u, v)]
        )
        out.append(
            ClassifiedTree(tree=Tree(tuple(edges)), klass=TreeClass.A2, extras=frozenset({xv(u), yv(v)}))
        )
    return tuple(out)


def build_internal_trees(
    order: BipartiteOrder,
    terminal: TerminalSet,
    p: int,
    q: int,
    side: Side,
    spare_offset: int = 0,
) -> tuple[ClassifiedTree, ...]:
    """p terminal-only trees followed by q single-hub trees on ``side``.

    Requires the budget p(k-1) + q*cost <= i(k-i), where cost is the
    number of same-side terminals each hub tree must attach through an
    internal edge (i for X hubs, k-i for Y hubs).

    Phase one packs p edge-disjoint spanning trees of the internal
    complete bipartite graph on (X-terminals, Y-terminals), reusing the
    packing machinery with its row side on ``side`` so the per-terminal
    usage there is a balanced window sum; phase two hands each hub tree
    one hub (skipping ``spare_offset`` spares already taken by two-hub
    trees) and attaches each same-side terminal through the
    lowest-indexed internal edge still in the ledger.
    """
    i, m, k = terminal.x_count, terminal.y_count, terminal.k
    if p < 0 or q < 0:
        raise InvalidArgumentError(f"tree counts must be nonnegative, got p={p}, q={q}")
    if i == 0 or m == 0:
        raise InvalidArgumentError("internal trees need terminals on both sides")
    cost = i if side is Side.X else m
    if p * (k - 1) + q * cost > i * m:
        raise InvalidArgumentError(
            f"budget exceeded: {p}*(k-1) + {q}*{cost} > {i * m} internal edges"
        )
    spare_total = (order.a - i) if side is Side.X else (order.b - m)
    if spare_offset + q > spare_total:
        raise InvalidArgumentError(f"need {q} spare hubs on side {side.value}, have {spare_total - spare_offset}")

    ledger = ResidualLedger(i, m)
    trees: list[ClassifiedTree] = []

    if p > 0:
        # Rows on the attachment side: its per-terminal edge usage across
        # the p trees is then a width-p window sum, balanced within one,
        # which is what guarantees the ledger can serve phase two.
        rows, cols = (i, m) if side is Side.X else (m, i)
        dseq = degree_sequence(rows, cols, p)
        if not verify_shift_capacity(dseq, cols, p):
            raise ConstructionBugError(f"internal packing capacity failed at p={p} for ({i}, {m})")
        for shift_index in range(1, p + 1):
            packed = build_tree(dseq, cols, shift_index)
            if side is Side.X:
                real = [(r, c) for r, c in packed.edges]
            else:
                real = [(c, r) for r, c in packed.edges]
            for x, y in real:
                ledger.consume(x, y)
            trees.append(ClassifiedTree(tree=Tree(tuple(real)), klass=TreeClass.A0, extras=frozenset()))

    for hub_number in range(1, q + 1):
        if side is Side.X:
            hub = xv(i + spare_offset + hub_number)
            edges = [(hub.index, t) for t in range(1, m + 1)]
            edges += [ledger.take_lowest(xv(s)) for s in range(1, i + 1)]
        else:
            hub = yv(m + spare_offset + hub_number)
            edges = [(s, hub.index) for s in range(1, i + 1)]
            edges += [ledger.take_lowest(yv(t)) for t in range(1, m + 1)]
        trees.append(ClassifiedTree(tree=Tree(tuple(edges)), klass=TreeClass.A1, extras=frozenset({hub})))

    return tuple(trees)


def build_witness(order: BipartiteOrder, k: int, i: int) -> SteinerWitness:
    """A maximum internally disjoint tree set for S_i, sized by kappa_terminal.

    One-sided terminal sets get the forced star witnesses (every opposite
    vertex hubs one star); otherwise the A2 / A0 / A1 counts of the
    breakdown are realized directly.
    """
    terminal = terminal_set(order, k, i)
    breakdown = kappa_terminal(order, k, i)
    if i == 0:
        trees = tuple(
            ClassifiedTree(
                tree=Tree(tuple((c, t) for t in range(1, k + 1))),
                klass=TreeClass.A1,
                extras=frozenset({xv(c)}),
            )
            for c in range(1, order.a + 1)
        )
    elif i == k:
        trees = tuple(
            ClassifiedTree(
                tree=Tree(tuple((s, c) for s in range(1, k + 1))),
                klass=TreeClass.A1,
                extras=frozenset({yv(c)}),
            )
            for c in range(1, order.b + 1)
        )
    else:
        side = breakdown.a1_side if breakdown.a1_side is not None else Side.X
        trees = build_a2_trees(order, terminal, breakdown.a2) + build_internal_trees(
            order,
            terminal,
            p=breakdown.a0,
            q=breakdown.a1,
            side=side,
            spare_offset=breakdown.a2,
        )
    if len(trees) != breakdown.kappa:
        raise ConstructionBugError(
            f"built {len(trees)} trees, breakdown promises {breakdown.kappa}"
        )
    return SteinerWitness(terminal=terminal, trees=trees)


def _family_report(
    order: BipartiteOrder,
    terminals: frozenset[Vertex],
    members: list[tuple[Tree, frozenset[Vertex]]],
) -> ValidationReport:
    """Shared checks for witness families: per-tree shape, then pairwise."""
    vertex_sets = []
    for tree, extras in members:
        report = validate_tree(order, terminals | extras, tree)
        if not report.ok:
            kind = "wrong-terminals" if report.first_kind == "missing-terminal" else "bad-tree"
            return ValidationReport((Violation(kind, str(report.violations[0])),))
        vertex_sets.append(tree.vertices())
    for p1 in range(len(members)):
        for p2 in range(p1 + 1, len(members)):
            shared_vertices = vertex_sets[p1] & vertex_sets[p2]
            if shared_vertices != terminals:
                culprit = min(shared_vertices - terminals)
                return ValidationReport(
                    (Violation("vertex-overlap", f"trees {p1} and {p2} share {culprit}"),)
                )
            shared_edges = members[p1][0].edge_set & members[p2][0].edge_set
            if shared_edges:
                x, y = min(shared_edges)
                return ValidationReport(
                    (Violation("edge-overlap", f"trees {p1} and {p2} share edge (x{x}, y{y})"),)
                )
    return ValidationReport()


def verify_witness(order: BipartiteOrder, witness: SteinerWitness) -> ValidationReport:
    """Check a witness: valid trees over S_i, no shared edges, no shared hubs.

    Kinds: ``bad-tree`` (not a tree / out of range), ``wrong-terminals``
    (a tree misses a terminal or a declared hub, or the profile itself is
    invalid), ``vertex-overlap`` and ``edge-overlap``.
    """
    try:
        terminal_set(order, witness.terminal.k, witness.terminal.i)
    except InvalidTerminalSetError as exc:
        return ValidationReport((Violation("wrong-terminals", str(exc)),))
    return _family_report(
        order,
        witness.terminal.vertices(),
        [(ct.tree, ct.extras) for ct in witness.trees],
    )
