"""Lifted graphs over the label space {0,1}^S defined by a spanning-tree
decomposition.

For a base graph G with spanning tree T and ordered cotree S, the lift has
vertex set V(G) x {0,1}^S.  Every base edge contributes a perfect matching
between the fibers of its endpoints: a tree edge matches equal labels, cotree
edge i matches labels differing exactly in bit i.  Lifted vertices are encoded
densely as ``base << s | label`` (bit i of the label is cotree coordinate i),
so XOR with a label vector is both the matching rule and the translation
automorphism.

Adjacency is computed on demand from (base adjacency, rule masks); nothing of
size n * 2^s is materialized except BFS/distance arrays, and an explicit cap
guards those.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass

from .graph import GraphError

DEFAULT_MAX_VERTICES = 1 << 22


class LiftTooLargeError(GraphError):
    """The requested lift exceeds the vertex cap."""

    def __init__(self, required, cap):
        super().__init__(
            f"lift would have {required} vertices, above the cap of {cap}; "
            f"raise --max-vertices (or TREELIFT_MAX_VERTICES) to proceed"
        )
        self.required = required
        self.cap = cap


@dataclass(eq=False)
class LiftedGraph:
    """The lift of ``base`` along ``td``, with vertices encoded as ints.

    ``rule[e]`` is the label XOR mask of base edge e (0 for tree edges,
    ``1 << coord`` for cotree edges).  ``fault``, if set, XORs an extra mask
    into one edge's rule; it exists solely so verification sweeps can prove
    they detect a broken matching, and is reported loudly by the CLI.
    """

    base: object
    td: object
    s: int
    mask: int
    rule: tuple
    coord_of: tuple
    fault: tuple = None  # (edge id, extra xor mask) test hook

    @property
    def num_vertices(self):
        return self.base.n << self.s

    @property
    def num_edges(self):
        return self.base.m << self.s

    def encode(self, base_vertex, label):
        if not (0 <= base_vertex < self.base.n):
            raise GraphError(f"base vertex {base_vertex} out of range")
        if not (0 <= label <= self.mask):
            raise GraphError(f"label {label} out of range for {self.s} coordinates")
        return (base_vertex << self.s) | label

    def decode(self, x):
        return x >> self.s, x & self.mask

    def project_vertex(self, x):
        return x >> self.s

    def project_edge(self, x, y):
        """Base edge id of a lifted edge, validating that (x, y) really is one."""
        u, f = self.decode(x)
        v, h = self.decode(y)
        eid = self.base.edge_between(u, v)
        if eid is None or f ^ h != self.rule[eid]:
            raise GraphError(f"({x}, {y}) is not an edge of the lift")
        return eid

    def neighbors(self, x):
        """Neighbor list of x, ordered by base edge id."""
        u, f = self.decode(x)
        s = self.s
        rule = self.rule
        return [(v << s) | (f ^ rule[eid]) for v, eid in self.base.adj[u]]

    def degree(self, x):
        return len(self.base.adj[x >> self.s])

    def translate(self, x, gvec):
        """Label translation (u, f) -> (u, f ^ gvec); a graph automorphism."""
        if not (0 <= gvec <= self.mask):
            raise GraphError(f"translation vector {gvec} out of range")
        return x ^ gvec

    def label_bits(self, label):
        """Label as a binary string, coordinate 0 rightmost."""
        return format(label, f"0{self.s}b") if self.s else ""

    def vertex_name(self, x):
        u, f = self.decode(x)
        return (u, self.label_bits(f))


def build_lift(g, td, max_vertices=DEFAULT_MAX_VERTICES, fault=None, check_connected=True):
    """Build the lift of g along td, guarded by a vertex cap.

    The tree/cotree rule always yields a connected lift of a connected base
    (the fundamental cycle of cotree edge i carries exactly the bit-i flip, so
    the flips generate the whole label group); this is asserted on every build
    unless check_connected is False.
    """
    s = len(td.cotree)
    required = g.n << s
    if required > max_vertices:
        raise LiftTooLargeError(required, max_vertices)
    coord_of = [-1] * g.m
    rule = [0] * g.m
    for eid, i in td.coord.items():
        coord_of[eid] = i
        rule[eid] = 1 << i
    if fault is not None:
        eid, extra = fault
        if not (0 <= eid < g.m) or not (0 <= extra <= (1 << s) - 1):
            raise GraphError(f"bad fault spec {fault!r}")
        rule[eid] ^= extra
    lg = LiftedGraph(
        base=g,
        td=td,
        s=s,
        mask=(1 << s) - 1,
        rule=tuple(rule),
        coord_of=tuple(coord_of),
        fault=fault,
    )
    if check_connected and bfs_lifted(lg, 0).count(-1) != 0:
        raise GraphError("constructed lift is not connected")
    return lg


def bfs_lifted(lg, source):
    """Exact BFS distances in the lift from one encoded vertex (-1 unreachable)."""
    s = lg.s
    adj = lg.base.adj
    rule = lg.rule
    dist = [-1] * lg.num_vertices
    dist[source] = 0
    frontier = [source]
    d = 0
    while frontier:
        d += 1
        nxt = []
        for x in frontier:
            u = x >> s
            f = x ^ (u << s)
            for v, eid in adj[u]:
                y = (v << s) | (f ^ rule[eid])
                if dist[y] < 0:
                    dist[y] = d
                    nxt.append(y)
        frontier = nxt
    return dist


def representative_tables(lg):
    """BFS distance arrays from the n representatives (v, 0).

    Together with the translation automorphism these determine every pairwise
    distance: d((u,f),(v,h)) = tables[u][encode(v, f^h)].
    """
    s = lg.s
    return [bfs_lifted(lg, u << s) for u in range(lg.base.n)]


def lifted_distance(lg, tables, x, y):
    """Distance via the symmetry-reduced tables."""
    u, f = lg.decode(x)
    return tables[u][y ^ f]


def iter_orbit_reps(lg):
    """Canonical representatives of unordered vertex pairs under label translation.

    Translating both endpoints by the first endpoint's label maps any pair
    {(u,f),(v,h)} to {(u,0),(v,f^h)}, so the representatives are exactly the
    encoded pairs (x, y) with x = (u, 0) and y > x.  Yields (x, y, covered)
    where covered is the orbit size: 2^s when the bases differ, 2^(s-1) for
    pairs within one fiber (translation by f^h swaps the endpoints).
    """
    s = lg.s
    nn = lg.num_vertices
    full = 1 << s
    half = full >> 1 if s else 1
    for u in range(lg.base.n):
        x = u << s
        fiber_end = x + full
        for y in range(x + 1, nn):
            yield x, y, (half if y < fiber_end else full)


def orbit_rep(lg, x, y):
    """The canonical representative pair of the translation orbit of {x, y}."""
    if x == y:
        raise GraphError("orbit representative requires two distinct vertices")
    s = lg.s
    u, f = lg.decode(x)
    v, h = lg.decode(y)
    delta = f ^ h
    if u > v:
        u, v = v, u
    return (u << s, (v << s) | delta)


def sample_pair_list(lg, tables, count, seed):
    """The canonical sampled pair family: every adjacent pair, the pair
    realizing the lifted diameter, and ``count`` seeded uniform pairs.

    Adjacent pairs pin the Lipschitz constant, the diameter pair is the likely
    worst contraction witness.  Deduplicated and sorted, so reports iterate in
    encoded-pair order regardless of draw order.
    """
    if not count or count < 1:
        raise GraphError("sample mode needs sample_count >= 1")
    if seed is None:
        raise GraphError("sample mode needs an explicit seed")
    rng = random.Random(seed)
    nn = lg.num_vertices
    s = lg.s
    pairs = set()
    for eid, (u, v) in enumerate(lg.base.edges):
        rule = lg.rule[eid]
        for f in range(1 << s):
            x = (u << s) | f
            y = (v << s) | (f ^ rule)
            pairs.add((x, y) if x < y else (y, x))
    pairs.add(tuple(sorted(diameter_witness(lg, tables))))
    for _ in range(count):
        x = rng.randrange(nn)
        y = rng.randrange(nn)
        while y == x:
            y = rng.randrange(nn)
        pairs.add((x, y) if x < y else (y, x))
    return sorted(pairs)


def lift_walk(g, td, walk, start):
    """Lift a base walk to the unique lifted walk starting at ``start``.

    ``walk`` is a sequence of base edge ids; each must be incident to the
    current vertex, which fixes the traversal direction.  ``start`` is a
    (vertex, label) pair.  Returns the lifted vertex sequence as (vertex,
    label) pairs; tree edges keep the label, cotree edge i flips bit i,
    independent of direction.
    """
    u, f = start
    if not (0 <= u < g.n):
        raise GraphError(f"start vertex {u} out of range")
    if not (0 <= f < (1 << len(td.cotree))):
        raise GraphError(f"start label {f} out of range")
    out = [(u, f)]
    for eid in walk:
        a, b = g.edges[eid]
        if u == a:
            u = b
        elif u == b:
            u = a
        else:
            raise GraphError(f"walk is not incident-consistent: edge {eid} does not touch vertex {u}")
        i = td.coord.get(eid)
        if i is not None:
            f ^= 1 << i
        out.append((u, f))
    return out


def lifted_girth(lg):
    """Exact girth of the lift, or math.inf if it is acyclic.

    BFS only from the n representatives (v, 0): label translations act
    transitively on each fiber, so every cycle passes through the orbit of
    some representative.
    """
    s = lg.s
    adj = lg.base.adj
    rule = lg.rule
    nn = lg.num_vertices
    best = math.inf
    for u0 in range(lg.base.n):
        src = u0 << s
        dist = [-1] * nn
        parent = [-1] * nn
        dist[src] = 0
        frontier = [src]
        d = 0
        while frontier:
            if 2 * d >= best:
                break
            nxt = []
            for x in frontier:
                u = x >> s
                f = x ^ (u << s)
                px = parent[x]
                for v, eid in adj[u]:
                    y = (v << s) | (f ^ rule[eid])
                    if dist[y] < 0:
                        dist[y] = d + 1
                        parent[y] = x
                        nxt.append(y)
                    elif y != px:
                        cand = d + dist[y] + 1
                        if cand < best:
                            best = cand
            frontier = nxt
            d += 1
    return best


def lifted_diameter(lg, tables=None):
    """Exact diameter of the lift from the representative tables."""
    if tables is None:
        tables = representative_tables(lg)
    best = 0
    for table in tables:
        far = max(table)
        if min(table) < 0:
            raise GraphError("lift is not connected")
        best = max(best, far)
    return best


def diameter_witness(lg, tables):
    """A pair realizing the lifted diameter, smallest encoded pair first."""
    best = -1
    pair = (0, 0)
    for u, table in enumerate(tables):
        x = u << lg.s
        for y, d in enumerate(table):
            if d > best:
                best = d
                pair = (x, y)
    return pair


# --- materialization ---------------------------------------------------------


def lift_edge_list_text(lg):
    """The materialized lift in edge-list text format.

    Lifted edges are emitted per base edge id, then per label of the
    lower-numbered endpoint, so the output is canonical.
    """
    lines = [f"{lg.num_vertices} {lg.num_edges}"]
    for eid, (u, v) in enumerate(lg.base.edges):
        rule = lg.rule[eid]
        for f in range(1 << lg.s):
            x = (u << lg.s) | f
            y = (v << lg.s) | (f ^ rule)
            if x > y:
                x, y = y, x
            lines.append(f"{x} {y}")
    return "\n".join(lines) + "\n"


def lift_mapping_text(lg):
    """Sidecar mapping: lines 'lifted_id base_vertex label_bits' (bit 0 rightmost)."""
    lines = []
    for x in range(lg.num_vertices):
        u, f = lg.decode(x)
        lines.append(f"{x} {u} {lg.label_bits(f)}".rstrip())
    return "\n".join(lines) + "\n"
