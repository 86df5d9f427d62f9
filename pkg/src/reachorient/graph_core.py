"""Core graph types and reachability machinery.

Simple undirected graphs, full and partial edge orientations, reachability
counting over the induced digraph, bridge finding, and contraction of the
2-edge-connected components into a vertex-weighted tree.

Vertices are 0-indexed ints internally; the text formats in `formats`
are 1-indexed. All types are immutable values; every operation is a pure
function of its inputs.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from functools import cached_property
from typing import Iterable, Optional, Sequence

from .errors import DisconnectedGraphError


def _normalize_edge(u: int, v: int) -> tuple[int, int]:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph: no self-loops, no parallel edges.

    Edge endpoints are stored normalized as (min, max); edge order is
    significant (orientations refer to edges by index).
    """

    n: int
    edges: tuple[tuple[int, int], ...]

    def __post_init__(self):
        if self.n < 0:
            raise ValueError("vertex count must be nonnegative")
        normalized = []
        seen = set()
        for u, v in self.edges:
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={self.n}")
            e = _normalize_edge(u, v)
            if e in seen:
                raise ValueError(f"duplicate edge {e}")
            seen.add(e)
            normalized.append(e)
        object.__setattr__(self, "edges", tuple(normalized))

    @property
    def m(self) -> int:
        return len(self.edges)

    @cached_property
    def adjacency(self) -> tuple[tuple[tuple[int, int], ...], ...]:
        """Per-vertex list of (neighbor, edge index)."""
        adj: list[list[tuple[int, int]]] = [[] for _ in range(self.n)]
        for i, (u, v) in enumerate(self.edges):
            adj[u].append((v, i))
            adj[v].append((u, i))
        return tuple(tuple(a) for a in adj)

    @cached_property
    def edge_index(self) -> dict[tuple[int, int], int]:
        return {e: i for i, e in enumerate(self.edges)}

    def has_edge(self, u: int, v: int) -> bool:
        return _normalize_edge(u, v) in self.edge_index


class EdgeState(Enum):
    """Orientation state of one edge in a partially oriented graph."""

    UNDIRECTED = "undirected"
    FORWARD = "forward"    # min endpoint -> max endpoint
    BACKWARD = "backward"  # max endpoint -> min endpoint


@dataclass(frozen=True)
class Orientation:
    """A direction for every edge of a graph.

    forward[i] is True when edges[i] = (u, v) is directed u -> v
    (endpoints normalized u < v).
    """

    graph: Graph
    forward: tuple[bool, ...]

    def __post_init__(self):
        if len(self.forward) != self.graph.m:
            raise ValueError("need exactly one direction per edge")

    def arc(self, i: int) -> tuple[int, int]:
        u, v = self.graph.edges[i]
        return (u, v) if self.forward[i] else (v, u)

    def arcs(self) -> list[tuple[int, int]]:
        return [self.arc(i) for i in range(self.graph.m)]

    @cached_property
    def out_adjacency(self) -> tuple[tuple[int, ...], ...]:
        adj: list[list[int]] = [[] for _ in range(self.graph.n)]
        for t, h in self.arcs():
            adj[t].append(h)
        return tuple(tuple(a) for a in adj)


@dataclass(frozen=True)
class MixedGraph:
    """Graph with a per-edge state: undirected, or fixed in one direction."""

    graph: Graph
    states: tuple[EdgeState, ...]

    def __post_init__(self):
        if len(self.states) != self.graph.m:
            raise ValueError("need one state per edge")

    @property
    def fully_oriented(self) -> bool:
        return all(s is not EdgeState.UNDIRECTED for s in self.states)

    def to_orientation(self) -> Orientation:
        if not self.fully_oriented:
            raise ValueError("mixed graph still has undirected edges")
        return Orientation(self.graph, tuple(s is EdgeState.FORWARD for s in self.states))

    def arc(self, i: int) -> Optional[tuple[int, int]]:
        u, v = self.graph.edges[i]
        s = self.states[i]
        if s is EdgeState.FORWARD:
            return (u, v)
        if s is EdgeState.BACKWARD:
            return (v, u)
        return None


@dataclass(frozen=True)
class ReachabilityReport:
    """Count (and optionally the set) of ordered reachable vertex pairs."""

    r: int
    pairs: Optional[frozenset[tuple[int, int]]] = None

    def __post_init__(self):
        if self.pairs is not None and self.r != len(self.pairs):
            raise ValueError("count disagrees with the pair set")


@dataclass(frozen=True)
class WeightedTree:
    """Tree with positive integer vertex weights."""

    b: int
    wt: tuple[int, ...]
    edges: tuple[tuple[int, int], ...]

    def __post_init__(self):
        if self.b < 1:
            raise ValueError("tree needs at least one vertex")
        if len(self.wt) != self.b:
            raise ValueError("need one weight per vertex")
        if any(w < 1 for w in self.wt):
            raise ValueError("weights must be positive integers")
        if len(self.edges) != self.b - 1:
            raise ValueError(f"a tree on {self.b} vertices has {self.b - 1} edges")
        normalized = []
        parent = list(range(self.b))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for u, v in self.edges:
            if not (0 <= u < self.b and 0 <= v < self.b) or u == v:
                raise ValueError(f"bad tree edge ({u}, {v})")
            ru, rv = find(u), find(v)
            if ru == rv:
                raise ValueError("edges contain a cycle")
            parent[ru] = rv
            normalized.append(_normalize_edge(u, v))
        object.__setattr__(self, "edges", tuple(normalized))

    @property
    def total_weight(self) -> int:
        return sum(self.wt)

    @cached_property
    def adjacency(self) -> tuple[tuple[tuple[int, int], ...], ...]:
        adj: list[list[tuple[int, int]]] = [[] for _ in range(self.b)]
        for i, (u, v) in enumerate(self.edges):
            adj[u].append((v, i))
            adj[v].append((u, i))
        return tuple(tuple(a) for a in adj)


@dataclass(frozen=True)
class CondensationMap:
    """Correspondence between a graph and its contracted bridge tree.

    component_of[v] is the tree vertex holding original vertex v;
    members_of[x] lists the original vertices contracted into tree vertex x;
    bridge_of_tree_edge[j] is the original edge index of the bridge that
    became tree edge j.
    """

    component_of: tuple[int, ...]
    members_of: tuple[tuple[int, ...], ...]
    bridge_of_tree_edge: tuple[int, ...]


# ---------------------------------------------------------------------------
# Connectivity / SCC plumbing


def connected_components(g: Graph) -> list[list[int]]:
    seen = [False] * g.n
    comps = []
    for s in range(g.n):
        if seen[s]:
            continue
        stack = [s]
        seen[s] = True
        comp = []
        while stack:
            v = stack.pop()
            comp.append(v)
            for w, _ in g.adjacency[v]:
                if not seen[w]:
                    seen[w] = True
                    stack.append(w)
        comps.append(sorted(comp))
    return comps


def is_connected(g: Graph) -> bool:
    return g.n <= 1 or len(connected_components(g)) == 1


def strongly_connected_components(n: int, out_adj: Sequence[Sequence[int]]) -> list[list[int]]:
    """Tarjan's algorithm, iterative. Components come out sinks-first
    (reverse topological order of the condensation)."""
    index = [-1] * n
    low = [0] * n
    on_stack = [False] * n
    stack: list[int] = []
    comps: list[list[int]] = []
    counter = 0
    for root in range(n):
        if index[root] != -1:
            continue
        work = [(root, 0)]
        while work:
            v, pi = work[-1]
            if pi == 0:
                index[v] = low[v] = counter
                counter += 1
                stack.append(v)
                on_stack[v] = True
            advanced = False
            neighbors = out_adj[v]
            while pi < len(neighbors):
                w = neighbors[pi]
                pi += 1
                if index[w] == -1:
                    work[-1] = (v, pi)
                    work.append((w, 0))
                    advanced = True
                    break
                if on_stack[w]:
                    low[v] = min(low[v], index[w])
            if advanced:
                continue
            work.pop()
            if low[v] == index[v]:
                comp = []
                while True:
                    w = stack.pop()
                    on_stack[w] = False
                    comp.append(w)
                    if w == v:
                        break
                comps.append(comp)
            if work:
                u, _ = work[-1]
                low[u] = min(low[u], low[v])
    return comps


def _component_reach_bitsets(
    n: int, out_adj: Sequence[Sequence[int]]
) -> tuple[list[list[int]], list[int], list[int]]:
    """SCCs plus, per component, the bitset of components reachable from it
    (including itself). Returns (components, comp_of_vertex, reach_bitsets)."""
    comps = strongly_connected_components(n, out_adj)
    comp_of = [0] * n
    for ci, comp in enumerate(comps):
        for v in comp:
            comp_of[v] = ci
    reach = [0] * len(comps)
    # comps are emitted sinks-first, so successors are always already done
    for ci, comp in enumerate(comps):
        bits = 1 << ci
        for v in comp:
            for w in out_adj[v]:
                cw = comp_of[w]
                if cw != ci:
                    bits |= reach[cw]
        reach[ci] = bits
    return comps, comp_of, reach


def count_reachability_digraph(
    n: int, out_adj: Sequence[Sequence[int]], include_pairs: bool = False
) -> ReachabilityReport:
    """Reachability of an arbitrary digraph given as adjacency lists.

    Counts ordered pairs (x, y), x != y, joined by a directed path of
    length >= 1. Works SCC-by-SCC so strongly connected regions cost
    size^2 without any search.
    """
    comps, comp_of, reach = _component_reach_bitsets(n, out_adj)
    sizes = [len(c) for c in comps]
    r = 0
    for ci, s in enumerate(sizes):
        r += s * (s - 1)
        bits = reach[ci] & ~(1 << ci)
        while bits:
            low = bits & -bits
            r += s * sizes[low.bit_length() - 1]
            bits ^= low
    if not include_pairs:
        return ReachabilityReport(r)
    pairs = set()
    for ci, comp in enumerate(comps):
        targets = []
        bits = reach[ci]
        while bits:
            low = bits & -bits
            targets.extend(comps[low.bit_length() - 1])
            bits ^= low
        for x in comp:
            for y in targets:
                if x != y:
                    pairs.add((x, y))
    return ReachabilityReport(r, frozenset(pairs))


def count_reachability(o: Orientation, include_pairs: bool = False) -> ReachabilityReport:
    """Number of ordered vertex pairs (x, y), x != y, with a directed path
    from x to y under the orientation."""
    return count_reachability_digraph(o.graph.n, o.out_adjacency, include_pairs)


def is_strongly_connected(o: Orientation) -> bool:
    n = o.graph.n
    if n <= 1:
        return True
    return len(strongly_connected_components(n, o.out_adjacency)) == 1


def is_acyclic(o: Orientation) -> bool:
    # no self-loops, so a directed cycle is exactly an SCC of size >= 2
    comps = strongly_connected_components(o.graph.n, o.out_adjacency)
    return all(len(c) == 1 for c in comps)


# ---------------------------------------------------------------------------
# Bridges and the contracted weighted tree


def _bridge_edge_indices(g: Graph) -> set[int]:
    """Indices of cut edges, by iterative DFS lowpoint computation."""
    disc = [-1] * g.n
    low = [0] * g.n
    bridges: set[int] = set()
    counter = 0
    for root in range(g.n):
        if disc[root] != -1:
            continue
        # stack entries: (vertex, incoming edge index, iterator position)
        stack = [(root, -1, 0)]
        while stack:
            v, in_edge, pi = stack[-1]
            if pi == 0:
                disc[v] = low[v] = counter
                counter += 1
            advanced = False
            adj = g.adjacency[v]
            while pi < len(adj):
                w, ei = adj[pi]
                pi += 1
                if ei == in_edge:
                    continue
                if disc[w] == -1:
                    stack[-1] = (v, in_edge, pi)
                    stack.append((w, ei, 0))
                    advanced = True
                    break
                low[v] = min(low[v], disc[w])
            if advanced:
                continue
            stack.pop()
            if stack:
                u = stack[-1][0]
                low[u] = min(low[u], low[v])
                if low[v] > disc[u]:
                    bridges.add(in_edge)
    return bridges


def find_bridges(g: Graph) -> frozenset[tuple[int, int]]:
    """Cut edges of a connected graph, as normalized (u, v) pairs."""
    if not is_connected(g):
        raise DisconnectedGraphError("bridge finding requires a connected graph")
    return frozenset(g.edges[i] for i in _bridge_edge_indices(g))


def condense(g: Graph) -> tuple[WeightedTree, CondensationMap]:
    """Contract each 2-edge-connected component to one tree vertex.

    Tree vertices carry the component sizes as weights; tree edges are
    exactly the bridges of g.
    """
    if not is_connected(g):
        raise DisconnectedGraphError("condensation requires a connected graph")
    bridge_idx = _bridge_edge_indices(g)
    comp_of = [-1] * g.n
    members: list[list[int]] = []
    for s in range(g.n):
        if comp_of[s] != -1:
            continue
        ci = len(members)
        comp_of[s] = ci
        comp = [s]
        stack = [s]
        while stack:
            v = stack.pop()
            for w, ei in g.adjacency[v]:
                if ei in bridge_idx or comp_of[w] != -1:
                    continue
                comp_of[w] = ci
                comp.append(w)
                stack.append(w)
        members.append(sorted(comp))
    tree_edges = []
    bridge_of = []
    for ei in sorted(bridge_idx):
        u, v = g.edges[ei]
        tree_edges.append((comp_of[u], comp_of[v]))
        bridge_of.append(ei)
    tree = WeightedTree(len(members), tuple(len(c) for c in members), tuple(tree_edges))
    cmap = CondensationMap(tuple(comp_of), tuple(tuple(c) for c in members), tuple(bridge_of))
    return tree, cmap


def orientation_from_arcs(g: Graph, arcs: Iterable[tuple[int, int]]) -> Orientation:
    """Build an Orientation from (tail, head) pairs covering every edge once."""
    forward: list[Optional[bool]] = [None] * g.m
    for t, h in arcs:
        i = g.edge_index.get(_normalize_edge(t, h))
        if i is None:
            raise ValueError(f"arc ({t}, {h}) is not an edge of the graph")
        if forward[i] is not None:
            raise ValueError(f"edge {g.edges[i]} directed twice")
        forward[i] = g.edges[i][0] == t
    if any(f is None for f in forward):
        missing = g.edges[forward.index(None)]
        raise ValueError(f"edge {missing} left undirected")
    return Orientation(g, tuple(forward))  # type: ignore[arg-type]
