"""Simple undirected graphs with dense edge ids, plus the classical algorithms
the rest of the package is built on: BFS distances, girth, diameter, spanning
trees, bridges and 2-edge-connected components.

Edge ids are assigned in input order and index every per-edge structure
downstream (cotree coordinates, label bits, cut coordinates), so input order
is part of the interface.  All structures are immutable after construction and
all functions are pure.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass


class GraphError(ValueError):
    """Invalid graph construction or an unsatisfiable precondition."""


class Graph:
    """Immutable simple undirected graph.

    Vertices are ``0..n-1``.  ``edges[i]`` is the endpoint pair of edge id
    ``i`` as given on input; ``adj[v]`` lists ``(neighbor, edge_id)`` in edge
    id order.  Self-loops and parallel edges are rejected.
    """

    __slots__ = ("n", "edges", "adj", "_index")

    def __init__(self, n, pairs):
        if n < 0:
            raise GraphError(f"vertex count must be non-negative, got {n}")
        edges = []
        index = {}
        adj = [[] for _ in range(n)]
        for pair in pairs:
            u, v = pair
            if not (0 <= u < n) or not (0 <= v < n):
                raise GraphError(f"edge {pair!r} has an endpoint outside 0..{n - 1}")
            if u == v:
                raise GraphError(f"self-loop at vertex {u} is not allowed")
            key = (u, v) if u < v else (v, u)
            if key in index:
                raise GraphError(f"duplicate edge {pair!r} (already present as edge {index[key]})")
            eid = len(edges)
            index[key] = eid
            edges.append((u, v))
            adj[u].append((v, eid))
            adj[v].append((u, eid))
        self.n = n
        self.edges = tuple(edges)
        self.adj = tuple(tuple(a) for a in adj)
        self._index = index

    @property
    def m(self):
        return len(self.edges)

    def degree(self, v):
        return len(self.adj[v])

    def endpoints(self, eid):
        return self.edges[eid]

    def edge_between(self, u, v):
        """Edge id joining u and v, or None if they are not adjacent."""
        return self._index.get((u, v) if u < v else (v, u))

    def regularity(self):
        """The common degree k if the graph is k-regular, else None."""
        if self.n == 0:
            return None
        k = len(self.adj[0])
        return k if all(len(a) == k for a in self.adj) else None

    def __repr__(self):
        return f"Graph(n={self.n}, m={self.m})"


def build_graph(n, pairs):
    """Validate and build a Graph; edge ids follow the input order of pairs."""
    return Graph(n, pairs)


@dataclass(eq=False)
class TreeDecomposition:
    """A spanning tree T plus the ordered cotree S indexing label coordinates.

    ``cotree[i]`` is the edge id carrying coordinate ``i``; the ordering is by
    ascending edge id so the coordinate layout is reproducible from the input
    edge order alone.  ``parent[v]`` is ``(parent_vertex, tree_edge_id)`` and
    ``None`` for the root.
    """

    graph: Graph
    root: int
    strategy: str
    tree_edges: frozenset
    cotree: tuple
    parent: tuple
    coord: dict  # edge id -> cotree coordinate index

    @property
    def num_coords(self):
        return len(self.cotree)


@dataclass(eq=False)
class BridgeDecomposition:
    """Bridges and 2-edge-connected components of a graph.

    ``component_of[v]`` labels v's 2-edge-connected component (components are
    numbered in order of their smallest vertex); ``component_edge_counts``
    maps each label to its count of non-bridge edges (0 for trivial
    components).
    """

    bridge_ids: frozenset
    component_of: tuple
    component_edge_counts: dict


def bfs_distances(g, source):
    """Exact shortest-path edge counts from source; unreachable vertices get -1."""
    if not (0 <= source < g.n):
        raise GraphError(f"source {source} out of range")
    dist = [-1] * g.n
    dist[source] = 0
    frontier = [source]
    d = 0
    adj = g.adj
    while frontier:
        d += 1
        nxt = []
        for v in frontier:
            for w, _ in adj[v]:
                if dist[w] < 0:
                    dist[w] = d
                    nxt.append(w)
        frontier = nxt
    return dist


def is_connected(g):
    if g.n == 0:
        return True
    return bfs_distances(g, 0).count(-1) == 0


def diameter(g):
    """Maximum shortest-path distance over all vertex pairs; errors if disconnected."""
    if g.n == 0:
        raise GraphError("diameter of the empty graph is undefined")
    best = 0
    for src in range(g.n):
        dist = bfs_distances(g, src)
        far = max(dist)
        if min(dist) < 0:
            raise GraphError("diameter requires a connected graph")
        best = max(best, far)
    return best


def girth(g):
    """Length of a shortest cycle, or math.inf for forests.

    Per-vertex BFS detecting the shortest cycle through the BFS root; overall
    O(n*m) and exact on simple graphs.
    """
    best = math.inf
    for src in range(g.n):
        dist = [-1] * g.n
        via = [-1] * g.n  # edge id used to discover the vertex
        dist[src] = 0
        queue = deque([src])
        while queue:
            v = queue.popleft()
            dv = dist[v]
            if 2 * dv >= best:
                break  # no shorter cycle through src can appear deeper
            for w, eid in g.adj[v]:
                if dist[w] < 0:
                    dist[w] = dv + 1
                    via[w] = eid
                    queue.append(w)
                elif eid != via[v]:
                    cand = dv + dist[w] + 1
                    if cand < best:
                        best = cand
    return best


def spanning_tree(g, strategy="bfs", root=0):
    """Deterministic spanning tree; cotree coordinates ordered by edge id.

    The tree depends only on (strategy, root, input edge order): both
    traversals scan adjacency lists in edge id order.
    """
    if strategy not in ("bfs", "dfs"):
        raise GraphError(f"unknown spanning tree strategy {strategy!r}")
    if not (0 <= root < g.n):
        raise GraphError(f"root {root} out of range")
    parent = [None] * g.n
    seen = [False] * g.n
    seen[root] = True
    tree = set()
    count = 1
    if strategy == "bfs":
        queue = deque([root])
        while queue:
            v = queue.popleft()
            for w, eid in g.adj[v]:
                if not seen[w]:
                    seen[w] = True
                    parent[w] = (v, eid)
                    tree.add(eid)
                    count += 1
                    queue.append(w)
    else:
        stack = [(root, iter(g.adj[root]))]
        while stack:
            v, it = stack[-1]
            for w, eid in it:
                if not seen[w]:
                    seen[w] = True
                    parent[w] = (v, eid)
                    tree.add(eid)
                    count += 1
                    stack.append((w, iter(g.adj[w])))
                    break
            else:
                stack.pop()
    if count != g.n:
        raise GraphError("spanning tree requires a connected graph")
    cotree = tuple(eid for eid in range(g.m) if eid not in tree)
    coord = {eid: i for i, eid in enumerate(cotree)}
    return TreeDecomposition(
        graph=g,
        root=root,
        strategy=strategy,
        tree_edges=frozenset(tree),
        cotree=cotree,
        parent=tuple(parent),
        coord=coord,
    )


def tree_split(td, tree_edge):
    """The two vertex sets of T minus a tree edge.

    A is the side containing the lower-numbered endpoint of the edge; this
    orientation convention pins down the 0-side of every tree-edge cut.
    """
    if tree_edge not in td.tree_edges:
        raise GraphError(f"edge {tree_edge} is not a tree edge")
    g = td.graph
    u, v = g.edges[tree_edge]
    start = min(u, v)
    in_a = [False] * g.n
    in_a[start] = True
    stack = [start]
    while stack:
        x = stack.pop()
        for y, eid in g.adj[x]:
            if eid != tree_edge and eid in td.tree_edges and not in_a[y]:
                in_a[y] = True
                stack.append(y)
    a = frozenset(x for x in range(g.n) if in_a[x])
    b = frozenset(x for x in range(g.n) if not in_a[x])
    return a, b


def bridges_and_2ecc(g):
    """Bridges plus 2-edge-connected component labels, via iterative lowlink DFS.

    Works per connected component.  Component labels are assigned in order of
    each component's smallest vertex; counts tally non-bridge edges only.
    """
    n = g.n
    disc = [-1] * n
    low = [0] * n
    bridges = set()
    timer = 0
    for root in range(n):
        if disc[root] >= 0:
            continue
        disc[root] = low[root] = timer
        timer += 1
        stack = [(root, -1, iter(g.adj[root]))]
        while stack:
            v, in_edge, it = stack[-1]
            advanced = False
            for w, eid in it:
                if eid == in_edge:
                    continue  # simple graph: at most one edge back to the parent
                if disc[w] < 0:
                    disc[w] = low[w] = timer
                    timer += 1
                    stack.append((w, eid, iter(g.adj[w])))
                    advanced = True
                    break
                if disc[w] < low[v]:
                    low[v] = disc[w]
            if not advanced:
                stack.pop()
                if stack:
                    p = stack[-1][0]
                    if low[v] < low[p]:
                        low[p] = low[v]
                    if low[v] == disc[v]:
                        bridges.add(in_edge)

    # components of the graph minus its bridges
    comp = [-1] * n
    labels = 0
    for v in range(n):
        if comp[v] >= 0:
            continue
        comp[v] = labels
        stack = [v]
        while stack:
            x = stack.pop()
            for y, eid in g.adj[x]:
                if eid not in bridges and comp[y] < 0:
                    comp[y] = labels
                    stack.append(y)
        labels += 1
    counts = {label: 0 for label in range(labels)}
    for eid, (u, v) in enumerate(g.edges):
        if eid not in bridges:
            counts[comp[u]] += 1
    return BridgeDecomposition(
        bridge_ids=frozenset(bridges),
        component_of=tuple(comp),
        component_edge_counts=counts,
    )


# --- edge-list text interchange format -------------------------------------
#
# First line "n m", then m lines "u v" with 0-indexed endpoints in ascending
# edge id order.  This is the interchange unit for all CLI commands.


def parse_edge_list(text):
    lines = [ln for ln in (raw.strip() for raw in text.splitlines()) if ln and not ln.startswith("#")]
    if not lines:
        raise GraphError("empty edge-list input")
    head = lines[0].split()
    if len(head) != 2:
        raise GraphError(f"bad header {lines[0]!r}: expected 'n m'")
    try:
        n, m = int(head[0]), int(head[1])
    except ValueError:
        raise GraphError(f"bad header {lines[0]!r}: expected integers") from None
    body = lines[1:]
    if len(body) != m:
        raise GraphError(f"header promises {m} edges but {len(body)} lines follow")
    pairs = []
    for ln in body:
        parts = ln.split()
        if len(parts) != 2:
            raise GraphError(f"bad edge line {ln!r}")
        try:
            pairs.append((int(parts[0]), int(parts[1])))
        except ValueError:
            raise GraphError(f"bad edge line {ln!r}: expected two integers") from None
    return build_graph(n, pairs)


def format_edge_list(g):
    lines = [f"{g.n} {g.m}"]
    lines.extend(f"{u} {v}" for u, v in g.edges)
    return "\n".join(lines) + "\n"


def load_edge_list(path):
    with open(path, "r", encoding="utf-8") as fh:
        return parse_edge_list(fh.read())


def save_edge_list(g, path):
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(format_edge_list(g))
