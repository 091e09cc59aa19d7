"""The cut-indicator embedding of a lifted graph into {0,1}^(base edges),
carrying the l1 metric.

Every base edge defines an edge cut of the lift (the fiber of matchings over
it), and each lifted vertex gets one indicator bit per cut saying which side
it is on.  For a cotree edge the side is its label bit, read directly.  For a
tree edge, removing it splits the tree into sides A and B (A holds the
lower-numbered endpoint), and the side of (v, f) is the parity of f over the
cotree coordinates crossing the split, flipped when v lies in B; the 0-side
is the even-parity-in-A side.

Rows are packed as m-bit integers, so l1 distances are XOR popcounts.  The
row map is affine-linear over the label group: row(u, f) = row(u, 0) ^
column(f), which fills the whole table in O(n * 2^s + m) integer XORs.

All Lipschitz quantities are exact rationals; there are no float tolerances
anywhere in this module.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .graph import GraphError, tree_split
from .lift import iter_orbit_reps, lifted_distance, representative_tables, sample_pair_list


class CutStructure:
    """Precomputed cut data for every base edge against one tree decomposition.

    For tree edges, ``crossing[e]`` is the bitmask of cotree coordinates whose
    edges cross the split of e, and ``in_b[e]`` is the vertex bitmask of the
    B side, making each side lookup a popcount parity plus one bit test.
    """

    __slots__ = ("graph", "td", "crossing", "in_b")

    def __init__(self, g, td):
        self.graph = g
        self.td = td
        crossing = [0] * g.m
        in_b = [0] * g.m
        for eid in td.tree_edges:
            a, b = tree_split(td, eid)
            bmask = 0
            for v in b:
                bmask |= 1 << v
            in_b[eid] = bmask
            cmask = 0
            for c in td.cotree:
                cu, cv = g.edges[c]
                if (cu in b) != (cv in b):
                    cmask |= 1 << td.coord[c]
            crossing[eid] = cmask
        self.crossing = tuple(crossing)
        self.in_b = tuple(in_b)

    def side(self, eid, vertex, label):
        """Cut side of the lifted vertex (vertex, label): 0 on the 0-side, else 1."""
        i = self.td.coord.get(eid)
        if i is not None:
            return (label >> i) & 1
        parity = (label & self.crossing[eid]).bit_count() & 1
        return parity ^ ((self.in_b[eid] >> vertex) & 1)


def cut_side(g, td, eid, vertex, label, cuts=None):
    """One side query; build a CutStructure once for repeated use."""
    if not (0 <= eid < g.m):
        raise GraphError(f"edge id {eid} out of range")
    if cuts is None:
        cuts = CutStructure(g, td)
    return cuts.side(eid, vertex, label)


@dataclass(eq=False)
class EmbeddingTable:
    """One m-bit row per lifted vertex; row bit e is the vertex's side of cut e."""

    lg: object
    m: int
    rows: list
    cuts: CutStructure

    def row(self, x):
        return self.rows[x]


def embed(lg):
    """The full embedding table of a lift, rows indexed by encoded vertex id."""
    g = lg.base
    td = lg.td
    cuts = CutStructure(g, td)
    s = lg.s

    # rows of the zero-label fiber: cotree bits are 0, tree bit e is [u in B]
    base_rows = []
    for u in range(g.n):
        row = 0
        for eid in td.tree_edges:
            row |= ((cuts.in_b[eid] >> u) & 1) << eid
        base_rows.append(row)

    # flipping label bit i toggles the cotree-edge bit carrying coordinate i
    # and every tree-edge bit whose split it crosses
    cols = [1 << eid for eid in td.cotree]
    for eid in td.tree_edges:
        cmask = cuts.crossing[eid]
        while cmask:
            low = cmask & -cmask
            cols[low.bit_length() - 1] |= 1 << eid
            cmask ^= low

    lin = [0] * (1 << s)
    for f in range(1, 1 << s):
        low = f & -f
        lin[f] = lin[f ^ low] ^ cols[low.bit_length() - 1]

    rows = []
    for u in range(g.n):
        bu = base_rows[u]
        rows.extend(bu ^ l for l in lin)
    return EmbeddingTable(lg=lg, m=g.m, rows=rows, cuts=cuts)


def l1_distance(table, x, y):
    """The l1 distance between two rows: a Hamming distance, all coordinates are bits."""
    return (table.rows[x] ^ table.rows[y]).bit_count()


def assert_injective(table):
    """Hard check that no two vertices share a row (distances would silently lie)."""
    if len(set(table.rows)) != len(table.rows):
        raise RuntimeError("embedding is not injective: two lifted vertices share a row")


def distortion_bound(base_girth, base_diam):
    """Per-instance distortion bound max(1, 1 + 6*diam/girth), exact.

    Assembled from the walk-accounting chain: twice-used bridges contribute
    at most bridge_paths*diam <= (2*components+1)*diam while component edges
    contribute at least components*girth.  A forest base (infinite girth)
    gives exactly 1.
    """
    if base_girth == math.inf:
        return Fraction(1)
    return max(Fraction(1), 1 + Fraction(6 * base_diam, base_girth))


@dataclass(eq=False)
class DistortionReport:
    """Exact Lipschitz data of the embedding of one lift.

    lip and colip are exact rationals; distortion = lip * colip.  In
    exhaustive mode colip is the true maximum of d(x,y) over l1(x,y) (every
    unordered pair is covered through its translation orbit); in sampled mode
    it is a maximum over the examined pairs only.
    """

    lip: Fraction
    colip: Fraction
    distortion: Fraction
    witness_pair: tuple
    pairs_examined: int
    mode: str
    orbits_examined: int = None
    sample_count: int = None
    seed: int = None


def _scan(pairs, rows, dist_of):
    """Max h/d and d/h over pairs, exact via cross-multiplication."""
    lip_n, lip_d = 0, 1
    co_n, co_d = 0, 1
    witness = None
    count = 0
    for x, y in pairs:
        d = dist_of(x, y)
        h = (rows[x] ^ rows[y]).bit_count()
        if h == 0:
            raise RuntimeError(
                f"embedding collision between distinct vertices {x} and {y}: "
                f"F must be injective; this indicates an implementation bug"
            )
        count += 1
        if h * lip_d > lip_n * d:
            lip_n, lip_d = h, d
        if d * co_d > co_n * h:
            co_n, co_d, witness = d, h, (x, y)
    return (lip_n, lip_d), (co_n, co_d), witness, count


def distortion(lg, table, tables=None, mode="exhaustive", sample_count=None, seed=None):
    """Exact distortion data of the embedding under a pair-examination policy.

    mode "exhaustive" covers every unordered pair via canonical translation
    orbits.  mode "sample" examines ``sample_count`` seeded uniform pairs plus
    all adjacent pairs (they pin lip) plus the pair realizing the lifted
    diameter (the likely colip witness).  Ratios are compared exactly;
    witnesses tie-break toward the smallest encoded pair.
    """
    nn = lg.num_vertices
    if nn < 2:
        raise GraphError("distortion requires at least two lifted vertices")
    if tables is None:
        tables = representative_tables(lg)
    rows = table.rows

    if mode == "exhaustive":
        reps = ((x, y) for x, y, _ in iter_orbit_reps(lg))
        s = lg.s
        lip_pair, co_pair, witness, orbits = _scan(reps, rows, lambda x, y: tables[x >> s][y])
        examined = nn * (nn - 1) // 2
        extra = {"orbits_examined": orbits}
    elif mode == "sample":
        ordered = sample_pair_list(lg, tables, sample_count, seed)
        lip_pair, co_pair, witness, examined = _scan(
            ordered, rows, lambda x, y: lifted_distance(lg, tables, x, y)
        )
        extra = {"sample_count": sample_count, "seed": seed}
    else:
        raise GraphError(f"unknown distortion mode {mode!r}")

    lip = Fraction(*lip_pair)
    colip = Fraction(*co_pair)
    if lip != 1:
        raise RuntimeError(
            f"embedding is not 1-Lipschitz (measured lip = {lip}); the cut partition is broken"
        )
    return DistortionReport(
        lip=lip,
        colip=colip,
        distortion=lip * colip,
        witness_pair=witness,
        pairs_examined=examined,
        mode=mode,
        **extra,
    )
