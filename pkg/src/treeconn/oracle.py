"""Brute-force ground truth for small instances.

Everything here is independent of the constructive modules: trees are
enumerated exhaustively and packings maximized by depth-first search, so
the results can be used to validate the closed forms and constructions.

Candidate trees are restricted to those whose every leaf is a terminal.
This loses nothing: pruning a non-terminal leaf from any tree keeps the
terminals connected and only shrinks its edge and vertex footprint, so
some maximum packing consists of leaf-pruned trees.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .core import InstanceTooLargeError, InvalidArgumentError

MAX_TREE_SET_VERTICES = 10
MAX_PACKING_EDGE_COUNT = 20
MAX_KAPPA_VERTEX_COUNT = 8


@dataclass(frozen=True)
class SmallGraph:
    """A simple undirected graph on vertices 0..n-1 given by its edge list."""

    n: int
    edges: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        seen: set[tuple[int, int]] = set()
        for u, v in self.edges:
            if not (0 <= u < self.n and 0 <= v < self.n) or u == v:
                raise InvalidArgumentError(f"bad edge ({u}, {v}) on {self.n} vertices")
            seen.add((min(u, v), max(u, v)))
        object.__setattr__(self, "edges", tuple(sorted(seen)))

    def is_connected(self) -> bool:
        if self.n <= 1:
            return True
        adj: dict[int, list[int]] = {v: [] for v in range(self.n)}
        for u, v in self.edges:
            adj[u].append(v)
            adj[v].append(u)
        seen = {0}
        stack = [0]
        while stack:
            for w in adj[stack.pop()]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        return len(seen) == self.n


def complete_bipartite(a: int, b: int) -> SmallGraph:
    """K_{a,b} with the standard labeling: x_j -> j-1, y_j -> a+j-1."""
    if a < 1 or b < 1:
        raise InvalidArgumentError(f"part sizes must be positive, got ({a}, {b})")
    return SmallGraph(a + b, tuple((x, a + y) for x in range(a) for y in range(b)))


def complete_graph(n: int) -> SmallGraph:
    """K_n on vertices 0..n-1."""
    if n < 1:
        raise InvalidArgumentError(f"vertex count must be positive, got {n}")
    return SmallGraph(n, tuple(combinations(range(n), 2)))


def bipartite_terminal_vertices(a: int, b: int, k: int, i: int) -> frozenset[int]:
    """Vertices of the canonical terminal set S_i under the standard labeling."""
    return frozenset(range(i)) | frozenset(range(a, a + (k - i)))


def _spanning_trees(n: int, edges: list[tuple[int, int]]) -> list[tuple[int, ...]]:
    """All spanning trees of a connected graph, as tuples of edge indices.

    Include/exclude recursion along the edge list: every tree is emitted
    exactly once.  The exclude branch is cut as soon as the remaining
    edges can no longer join the current components.
    """
    m = len(edges)
    out: list[tuple[int, ...]] = []
    chosen: list[int] = []

    def find(parent: list[int], v: int) -> int:
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    def still_connectable(parent: list[int], idx: int, comps: int) -> bool:
        trial = parent.copy()
        for j in range(idx, m):
            u, v = edges[j]
            ru, rv = find(trial, u), find(trial, v)
            if ru != rv:
                trial[ru] = rv
                comps -= 1
                if comps == 1:
                    return True
        return comps == 1

    def rec(idx: int, parent: list[int], comps: int) -> None:
        if comps == 1:
            out.append(tuple(chosen))
            return
        if m - idx < comps - 1:
            return
        u, v = edges[idx]
        ru, rv = find(parent, u), find(parent, v)
        if ru != rv:
            merged = parent.copy()
            merged[ru] = rv
            chosen.append(idx)
            rec(idx + 1, merged, comps - 1)
            chosen.pop()
        if still_connectable(parent, idx + 1, comps):
            rec(idx + 1, parent, comps)

    rec(0, list(range(n)), n)
    return out


@dataclass(frozen=True)
class _Candidate:
    edge_mask: int
    extra_mask: int
    edges: tuple[tuple[int, int], ...]


@dataclass(frozen=True)
class TreeSetResult:
    """Maximum count plus one maximum packing (trees as sorted edge tuples)."""

    count: int
    trees: tuple[tuple[tuple[int, int], ...], ...]


def _max_disjoint(
    candidates: list[_Candidate],
    k: int,
    edge_count: int,
    terminal_masks: list[int],
) -> TreeSetResult:
    """Depth-first maximum packing of pairwise compatible candidates.

    Two candidates are compatible when they share no edge and no
    non-terminal vertex.  Pruning: remaining candidate count, free-edge
    budget (every tree needs at least k-1 edges), and the free degree at
    the tightest terminal (every tree touches every terminal).  The
    search stops once the root bound is attained, and is a deterministic
    function of the candidate order.
    """
    candidates = sorted(candidates, key=lambda c: (len(c.edges), c.edges))
    root_bound = min(
        len(candidates),
        edge_count // (k - 1),
        min(mask.bit_count() for mask in terminal_masks),
    )
    best_count = 0
    best: tuple[tuple[tuple[int, int], ...], ...] = ()
    chosen: list[_Candidate] = []
    done = False

    def dfs(avail: list[_Candidate], used_edges: int) -> None:
        nonlocal best_count, best, done
        if len(chosen) > best_count:
            best_count = len(chosen)
            best = tuple(c.edges for c in chosen)
            if best_count >= root_bound:
                done = True
                return
        free = edge_count - used_edges.bit_count()
        tightest = min((mask & ~used_edges).bit_count() for mask in terminal_masks)
        if len(chosen) + min(len(avail), free // (k - 1), tightest) <= best_count:
            return
        for pos, cand in enumerate(avail):
            if len(chosen) + len(avail) - pos <= best_count:
                return
            rest = [
                c
                for c in avail[pos + 1 :]
                if not (c.edge_mask & cand.edge_mask) and not (c.extra_mask & cand.extra_mask)
            ]
            chosen.append(cand)
            dfs(rest, used_edges | cand.edge_mask)
            chosen.pop()
            if done:
                return

    dfs(candidates, 0)
    return TreeSetResult(count=best_count, trees=best)


def _terminal_tree_candidates(graph: SmallGraph, terminals: frozenset[int]) -> list[_Candidate]:
    """Every subtree connecting the terminals whose leaves are all terminals."""
    edge_index = {e: idx for idx, e in enumerate(graph.edges)}
    spares = [v for v in range(graph.n) if v not in terminals]
    base = sorted(terminals)
    out: list[_Candidate] = []
    for size in range(len(spares) + 1):
        for extra_combo in combinations(spares, size):
            vertices = base + list(extra_combo)
            local = {v: idx for idx, v in enumerate(vertices)}
            sub_edges = [
                (local[u], local[v]) for u, v in graph.edges if u in local and v in local
            ]
            if len(sub_edges) < len(vertices) - 1:
                continue
            extra_mask = sum(1 << v for v in extra_combo)
            for tree in _spanning_trees(len(vertices), sub_edges):
                degree = [0] * len(vertices)
                for idx in tree:
                    u, v = sub_edges[idx]
                    degree[u] += 1
                    degree[v] += 1
                if any(degree[local[v]] < 2 for v in extra_combo):
                    continue
                real = tuple(
                    sorted(
                        (vertices[sub_edges[idx][0]], vertices[sub_edges[idx][1]])
                        for idx in tree
                    )
                )
                out.append(
                    _Candidate(
                        edge_mask=sum(1 << edge_index[e] for e in real),
                        extra_mask=extra_mask,
                        edges=real,
                    )
                )
    return out


def oracle_max_tree_set(graph: SmallGraph, terminals: frozenset[int]) -> TreeSetResult:
    """Exact maximum set of internally disjoint trees connecting the terminals.

    The trees are pairwise edge-disjoint, each contains every terminal,
    and any two intersect exactly in the terminal set.
    """
    if graph.n > MAX_TREE_SET_VERTICES:
        raise InstanceTooLargeError(f"{graph.n} vertices exceeds guard {MAX_TREE_SET_VERTICES}")
    if len(terminals) < 2:
        raise InvalidArgumentError("need at least two terminals")
    if not terminals <= set(range(graph.n)):
        raise InvalidArgumentError("terminals outside vertex range")
    if not graph.is_connected():
        raise InvalidArgumentError("graph must be connected")
    candidates = _terminal_tree_candidates(graph, terminals)
    terminal_masks = [
        sum(1 << idx for idx, (u, v) in enumerate(graph.edges) if s in (u, v))
        for s in sorted(terminals)
    ]
    return _max_disjoint(candidates, len(terminals), len(graph.edges), terminal_masks)


def oracle_spanning_packing(a: int, b: int) -> int:
    """Exact maximum number of edge-disjoint spanning trees of K_{a,b}."""
    if a < 1 or b < 1:
        raise InvalidArgumentError(f"part sizes must be positive, got ({a}, {b})")
    if a * b > MAX_PACKING_EDGE_COUNT:
        raise InstanceTooLargeError(f"{a * b} edges exceeds guard {MAX_PACKING_EDGE_COUNT}")
    graph = complete_bipartite(a, b)
    n = graph.n
    edge_list = list(graph.edges)
    candidates = [
        _Candidate(
            edge_mask=sum(1 << idx for idx in tree),
            extra_mask=0,
            edges=tuple(sorted(edge_list[idx] for idx in tree)),
        )
        for tree in _spanning_trees(n, edge_list)
    ]
    terminal_masks = [
        sum(1 << idx for idx, (u, v) in enumerate(edge_list) if s in (u, v)) for s in range(n)
    ]
    return _max_disjoint(candidates, n, len(edge_list), terminal_masks).count


def oracle_kappa_k(a: int, b: int, k: int) -> int:
    """Exact k-connectivity of K_{a,b} by minimizing over canonical terminal sets.

    All X vertices are interchangeable and likewise all Y vertices, so
    the canonical profiles S_i cover every k-subset up to relabeling.
    """
    if a < 1 or b < 1:
        raise InvalidArgumentError(f"part sizes must be positive, got ({a}, {b})")
    if a + b > MAX_KAPPA_VERTEX_COUNT:
        raise InstanceTooLargeError(f"{a + b} vertices exceeds guard {MAX_KAPPA_VERTEX_COUNT}")
    if not 2 <= k <= a + b:
        raise InvalidArgumentError(f"k={k} outside [2, {a + b}]")
    graph = complete_bipartite(a, b)
    return min(
        oracle_max_tree_set(graph, bipartite_terminal_vertices(a, b, k, i)).count
        for i in range(max(0, k - b), min(a, k) + 1)
    )
