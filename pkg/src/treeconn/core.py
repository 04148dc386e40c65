"""Basic types for complete bipartite graphs and their tree certificates.

The host graph is always a complete bipartite graph with parts X (size a)
and Y (size b), so it is never materialized: an edge is just a pair
(x-index, y-index) and membership is a range check.  All indices are
1-based on the public surface, so emitted certificates read like the
usual x_1..x_a / y_1..y_b labels.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Iterable


class TreeconnError(Exception):
    """Base class for errors raised by this package."""


class InvalidArgumentError(TreeconnError, ValueError):
    """An argument is out of its documented domain."""


class InvalidTerminalSetError(InvalidArgumentError):
    """The requested (k, i) profile does not describe a terminal set."""


class NotConstructibleError(TreeconnError):
    """A requested certificate cannot be built from the given data."""


class ConstructionBugError(TreeconnError):
    """An internal guarantee of a construction failed; this is a bug."""


class InstanceTooLargeError(TreeconnError):
    """A brute-force guard was exceeded."""


class Side(str, Enum):
    """Which part of the bipartition a vertex belongs to."""

    X = "X"
    Y = "Y"


@dataclass(frozen=True, order=True)
class Vertex:
    """A vertex of the host graph, addressed as (side, 1-based index)."""

    side: Side
    index: int

    def __str__(self) -> str:
        return f"{self.side.value.lower()}{self.index}"


def xv(index: int) -> Vertex:
    """Vertex x_index."""
    return Vertex(Side.X, index)


def yv(index: int) -> Vertex:
    """Vertex y_index."""
    return Vertex(Side.Y, index)


@dataclass(frozen=True)
class BipartiteOrder:
    """Normalized part sizes of the host graph, with a <= b.

    ``swapped`` records that the caller named the larger part first, so
    emitters must swap side labels back when printing certificates.
    """

    a: int
    b: int
    swapped: bool = False

    def __post_init__(self) -> None:
        if self.a < 1 or self.b < 1:
            raise InvalidArgumentError(f"part sizes must be positive, got ({self.a}, {self.b})")
        if self.a > self.b:
            raise InvalidArgumentError(f"expected a <= b, got ({self.a}, {self.b}); use normalize()")

    @property
    def vertex_count(self) -> int:
        return self.a + self.b

    @property
    def edge_count(self) -> int:
        return self.a * self.b

    def vertices(self) -> frozenset[Vertex]:
        """All a + b vertices."""
        return frozenset(
            [xv(i) for i in range(1, self.a + 1)] + [yv(j) for j in range(1, self.b + 1)]
        )

    def contains(self, v: Vertex) -> bool:
        limit = self.a if v.side is Side.X else self.b
        return 1 <= v.index <= limit


def normalize(a_raw: int, b_raw: int) -> BipartiteOrder:
    """Order the two part sizes so a <= b, remembering whether they swapped.

    Downstream constructions all assume the normalized orientation; the
    ``swapped`` flag only affects how labels are printed, never values.
    """
    if a_raw < 1 or b_raw < 1:
        raise InvalidArgumentError(f"part sizes must be positive, got ({a_raw}, {b_raw})")
    if a_raw <= b_raw:
        return BipartiteOrder(a_raw, b_raw, swapped=False)
    return BipartiteOrder(b_raw, a_raw, swapped=True)


@dataclass(frozen=True)
class Tree:
    """An edge list over (x-index, y-index) pairs.

    The type itself stores whatever it is given; ``validate_tree`` is the
    judge of whether the edges actually form a tree, so that invalid data
    (e.g. parsed from a corrupted certificate file) can be diagnosed
    rather than rejected at construction time.
    """

    edges: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "edges", tuple((int(x), int(y)) for x, y in self.edges))

    @property
    def edge_set(self) -> frozenset[tuple[int, int]]:
        return frozenset(self.edges)

    def vertices(self) -> frozenset[Vertex]:
        """All endpoints of the edge list."""
        verts: set[Vertex] = set()
        for x, y in self.edges:
            verts.add(xv(x))
            verts.add(yv(y))
        return frozenset(verts)

    def degree(self, v: Vertex) -> int:
        if v.side is Side.X:
            return sum(1 for x, _ in self.edges if x == v.index)
        return sum(1 for _, y in self.edges if y == v.index)


@dataclass(frozen=True)
class TerminalSet:
    """The canonical k-vertex terminal set with i vertices taken from X.

    Denotes {x_1, ..., x_i} union {y_1, ..., y_{k-i}}.  Since all X
    vertices are interchangeable (and likewise all Y vertices), every
    k-subset of the host graph is equivalent to exactly one such profile.
    """

    i: int
    k: int

    @property
    def x_count(self) -> int:
        return self.i

    @property
    def y_count(self) -> int:
        return self.k - self.i

    def vertices(self) -> frozenset[Vertex]:
        return frozenset(
            [xv(s) for s in range(1, self.i + 1)] + [yv(s) for s in range(1, self.k - self.i + 1)]
        )


def terminal_set(order: BipartiteOrder, k: int, i: int) -> TerminalSet:
    """The canonical terminal set S_i, or raise if (k, i) is out of range.

    Valid profiles have 2 <= k <= a + b and max(0, k - b) <= i <= min(a, k).
    """
    if not 2 <= k <= order.a + order.b:
        raise InvalidTerminalSetError(f"k={k} outside [2, {order.a + order.b}] for {order.a}x{order.b}")
    lo, hi = max(0, k - order.b), min(order.a, k)
    if not lo <= i <= hi:
        raise InvalidTerminalSetError(f"i={i} outside [{lo}, {hi}] for k={k} on {order.a}x{order.b}")
    return TerminalSet(i=i, k=k)


def terminal_range(order: BipartiteOrder, k: int) -> range:
    """All valid i for the given k, smallest first."""
    if not 2 <= k <= order.a + order.b:
        raise InvalidArgumentError(f"k={k} outside [2, {order.a + order.b}]")
    return range(max(0, k - order.b), min(order.a, k) + 1)


@dataclass(frozen=True)
class Violation:
    """One named defect found by a verifier."""

    kind: str
    detail: str

    def __str__(self) -> str:
        return f"{self.kind}: {self.detail}"


@dataclass(frozen=True)
class ValidationReport:
    """Outcome of a structural check; an empty violation list means valid."""

    violations: tuple[Violation, ...] = field(default=())

    @property
    def ok(self) -> bool:
        return not self.violations

    @property
    def first_kind(self) -> str | None:
        return self.violations[0].kind if self.violations else None

    def __bool__(self) -> bool:
        return self.ok


def _report(kind: str, detail: str) -> ValidationReport:
    return ValidationReport((Violation(kind, detail),))


def validate_tree(
    order: BipartiteOrder,
    required_vertices: Iterable[Vertex],
    tree: Tree,
) -> ValidationReport:
    """Check that an edge list is a tree covering the required vertices.

    Violations are data, not exceptions; the first one found is reported
    with kind ``out-of-range``, ``cycle``, ``disconnected`` or
    ``missing-terminal`` (checked in that order).  Duplicate edges count
    as a cycle.
    """
    a = order.a
    for x, y in tree.edges:
        if not 1 <= x <= a or not 1 <= y <= order.b:
            return _report("out-of-range", f"edge (x{x}, y{y}) outside {order.a}x{order.b}")

    required = frozenset(required_vertices)
    if not tree.edges:
        if required:
            return _report("missing-terminal", "tree has no edges")
        return ValidationReport()

    # Union-find over the induced vertex set (x_i as i, y_j as a + j): a
    # repeated union closes a cycle, more than one final root means
    # disconnected.
    parent: dict[int, int] = {}

    def find(v: int) -> int:
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    for x, y in tree.edges:
        w = a + y
        if x not in parent:
            parent[x] = x
        if w not in parent:
            parent[w] = w
        rx, ry = find(x), find(w)
        if rx == ry:
            return _report("cycle", f"edge (x{x}, y{y}) closes a cycle")
        parent[rx] = ry

    root = find(next(iter(parent)))
    if any(find(v) != root for v in parent):
        return _report("disconnected", "edge set splits into several components")

    missing = [
        v
        for v in required
        if (v.index if v.side is Side.X else a + v.index) not in parent
    ]
    if missing:
        return _report("missing-terminal", f"{min(missing)} not covered")

    return ValidationReport()
