"""Simple graphs, the benchmark families, exact coloring counts, and
stable-partition machinery.

Vertices are 0..n-1 and edges are stored sorted with each pair
normalized to (min, max), so structurally equal graphs compare equal.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Sequence

from .compositions import Partition, dominance_leq, partitions


class ResourceLimitError(RuntimeError):
    """An enumeration would exceed its configured size bound."""


Edge = tuple[int, int]


def _normalize_edge(e) -> Edge:
    u, v = e
    if u == v:
        raise ValueError(f"loops are not allowed: vertex {u}")
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    """Immutable simple graph on vertices 0..n-1."""

    n: int
    edges: tuple[Edge, ...]

    def __post_init__(self):
        if self.n < 1:
            raise ValueError(f"graph needs at least one vertex, got n={self.n}")
        norm = sorted(_normalize_edge(e) for e in self.edges)
        for u, v in norm:
            if not 0 <= u < v < self.n:
                raise ValueError(f"edge ({u}, {v}) out of range for n={self.n}")
        for a, b in zip(norm, norm[1:]):
            if a == b:
                raise ValueError(f"duplicate edge {a}")
        object.__setattr__(self, "edges", tuple(norm))

    @property
    def m(self) -> int:
        return len(self.edges)

    def adjacency_masks(self) -> list[int]:
        """Neighborhoods as bitmasks, one per vertex."""
        adj = [0] * self.n
        for u, v in self.edges:
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return adj

    def has_edge(self, u: int, v: int) -> bool:
        return _normalize_edge((u, v)) in set(self.edges)


class UnionFind:
    """Array-based disjoint sets with union by size."""

    __slots__ = ("parent", "size", "components")

    def __init__(self, n: int):
        self.parent = list(range(n))
        self.size = [1] * n
        self.components = n

    def find(self, x: int) -> int:
        parent = self.parent
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(self, x: int, y: int) -> bool:
        rx, ry = self.find(x), self.find(y)
        if rx == ry:
            return False
        if self.size[rx] < self.size[ry]:
            rx, ry = ry, rx
        self.parent[ry] = rx
        self.size[rx] += self.size[ry]
        self.components -= 1
        return True

    def component_sizes(self) -> Partition:
        sizes = [self.size[v] for v in range(len(self.parent)) if self.find(v) == v]
        return tuple(sorted(sizes, reverse=True))


# ---------------------------------------------------------- constructors

def path_graph(n: int) -> Graph:
    """Path on n vertices, edges i -- i+1."""
    if n < 1:
        raise ValueError(f"path needs at least one vertex, got {n}")
    return Graph(n, tuple((i, i + 1) for i in range(n - 1)))


def cycle_graph(n: int) -> Graph:
    """Cycle on n vertices; a simple cycle needs n >= 3."""
    if n < 3:
        raise ValueError(f"cycle needs at least 3 vertices, got {n}")
    return Graph(n, tuple((i, (i + 1) % n) for i in range(n)))


def tadpole_graph(m: int, tail: int) -> Graph:
    """Cycle on m vertices with a path of tail extra vertices hung off
    cycle vertex 0.  tail = 0 gives the plain cycle."""
    if m < 3:
        raise ValueError(f"tadpole cycle needs at least 3 vertices, got {m}")
    if tail < 0:
        raise ValueError(f"tail length must be nonnegative, got {tail}")
    edges = [(i, (i + 1) % m) for i in range(m)]
    prev = 0
    for v in range(m, m + tail):
        edges.append((prev, v))
        prev = v
    return Graph(m + tail, tuple(edges))


def cycle_chord_graph(a: int, b: int) -> Graph:
    """Cycle on a + b vertices with a chord joining vertices 0 and a,
    splitting the cycle into arcs of a and b edges.

    When a or b is 1 the chord coincides with a cycle edge and is
    dropped, leaving the plain cycle.
    """
    if a < 1 or b < 1:
        raise ValueError(f"both arcs need at least one edge, got ({a}, {b})")
    n = a + b
    if n < 3:
        raise ValueError(f"cycle needs at least 3 vertices, got {n}")
    edges = {_normalize_edge((i, (i + 1) % n)) for i in range(n)}
    edges.add(_normalize_edge((0, a)))
    return Graph(n, tuple(edges))


def multipath_graph(path_lengths: Iterable[int]) -> Graph:
    """Two hub vertices 0 and 1 joined by internally disjoint paths,
    one of each given edge length.

    A second length-1 path would duplicate the hub edge, so at most one
    part may equal 1.  The vertex count is (sum of lengths) - (number
    of paths) + 2.
    """
    lam = tuple(sorted(path_lengths, reverse=True))
    if not lam:
        raise ValueError("need at least one path length")
    if any(p < 1 for p in lam):
        raise ValueError(f"path lengths must be positive: {lam}")
    if sum(1 for p in lam if p == 1) > 1:
        raise ValueError(
            "at most one path may have length 1: a second one would "
            "repeat the edge between the two hub vertices"
        )
    edges = []
    nxt = 2
    for length in lam:
        chain = [0] + list(range(nxt, nxt + length - 1)) + [1]
        nxt += length - 1
        edges.extend(zip(chain, chain[1:]))
    return Graph(nxt, tuple(edges))


def theta_graph(a: int, b: int, c: int) -> Graph:
    """Two vertices joined by three internally disjoint paths of a, b,
    and c edges."""
    return multipath_graph((a, b, c))


# -------------------------------------------------------------- GraphSpec

class Family(Enum):
    PATH = "path"
    CYCLE = "cycle"
    TADPOLE = "tadpole"
    CYCLE_CHORD = "cc"
    THETA = "theta"
    MULTIPATH = "glambda"
    EDGES = "edges"


@dataclass(frozen=True)
class GraphSpec:
    """Parsed description of a graph: a family plus its parameters.

    For EDGES, params holds just the vertex count and edge_list the
    explicit edges.  THETA and MULTIPATH params are canonicalized to
    weakly decreasing order so equal descriptions compare equal.
    """

    family: Family
    params: tuple[int, ...]
    edge_list: tuple[Edge, ...] = ()

    def __post_init__(self):
        if self.family in (Family.THETA, Family.MULTIPATH):
            object.__setattr__(
                self, "params", tuple(sorted(self.params, reverse=True))
            )
        if self.edge_list:
            if self.family is not Family.EDGES:
                raise ValueError("explicit edges only make sense for the edges family")
            object.__setattr__(
                self,
                "edge_list",
                tuple(sorted(_normalize_edge(e) for e in self.edge_list)),
            )


FAMILY_ARITY = {
    Family.PATH: 1,
    Family.CYCLE: 1,
    Family.TADPOLE: 2,
    Family.CYCLE_CHORD: 2,
    Family.THETA: 3,
}


def build_graph(spec: GraphSpec) -> Graph:
    fam = spec.family
    want = FAMILY_ARITY.get(fam)
    if want is not None and len(spec.params) != want:
        raise ValueError(
            f"{fam.value} takes {want} parameter(s), got {len(spec.params)}"
        )
    if fam is Family.PATH:
        return path_graph(spec.params[0])
    if fam is Family.CYCLE:
        return cycle_graph(spec.params[0])
    if fam is Family.TADPOLE:
        return tadpole_graph(*spec.params)
    if fam is Family.CYCLE_CHORD:
        return cycle_chord_graph(*spec.params)
    if fam is Family.THETA:
        return theta_graph(*spec.params)
    if fam is Family.MULTIPATH:
        return multipath_graph(spec.params)
    if fam is Family.EDGES:
        if len(spec.params) != 1:
            raise ValueError("edges family takes exactly one vertex count")
        return Graph(spec.params[0], spec.edge_list)
    raise ValueError(f"unknown family {fam!r}")


def render_graph_spec(spec: GraphSpec) -> str:
    """Inverse of the CLI spec parser, in canonical form."""
    if spec.family is Family.EDGES:
        pairs = ",".join(f"{u}-{v}" for u, v in build_graph(spec).edges)
        return f"edges:{spec.params[0]};{pairs}"
    return f"{spec.family.value}:" + ",".join(str(p) for p in spec.params)


# ------------------------------------------------------------- colorings

def component_partition(graph: Graph, subset: Sequence[Edge]) -> Partition:
    """Component sizes of the spanning subgraph keeping only subset."""
    known = set(graph.edges)
    uf = UnionFind(graph.n)
    for e in subset:
        e = _normalize_edge(e)
        if e not in known:
            raise ValueError(f"edge {e} is not in the graph")
        uf.union(*e)
    return uf.component_sizes()


_CHROM_CACHE: dict[tuple[int, tuple[Edge, ...]], tuple[int, ...]] = {}


def _poly_sub(pa: tuple[int, ...], pb: tuple[int, ...]) -> tuple[int, ...]:
    size = max(len(pa), len(pb))
    return tuple(
        (pa[i] if i < len(pa) else 0) - (pb[i] if i < len(pb) else 0)
        for i in range(size)
    )


def _chrom_normalized(n: int, edges: tuple[Edge, ...]) -> tuple[int, ...]:
    """Chromatic polynomial with isolated vertices stripped and the rest
    relabeled by first appearance, so the memo key is stable."""
    if not edges:
        return (0,) * n + (1,)
    used = sorted({v for e in edges for v in e})
    relabel = {v: i for i, v in enumerate(used)}
    kernel_edges = tuple(sorted(_normalize_edge((relabel[u], relabel[v])) for u, v in edges))
    isolated = n - len(used)
    kernel = _chrom_kernel(len(used), kernel_edges)
    return (0,) * isolated + kernel


def _chrom_kernel(n: int, edges: tuple[Edge, ...]) -> tuple[int, ...]:
    """Deletion-contraction on a graph with no isolated vertices."""
    key = (n, edges)
    cached = _CHROM_CACHE.get(key)
    if cached is not None:
        return cached
    u, v = edges[0]
    deleted = _chrom_normalized(n, edges[1:])
    merged = set()
    for a, b in edges[1:]:
        if a == v:
            a = u
        if b == v:
            b = u
        if a != b:
            merged.add(_normalize_edge((a, b)))
    shifted = tuple(
        sorted(
            (a - (a > v), b - (b > v))
            for a, b in merged
        )
    )
    contracted = _chrom_normalized(n - 1, shifted)
    poly = _poly_sub(deleted, contracted)
    _CHROM_CACHE[key] = poly
    return poly


def chromatic_polynomial(graph: Graph) -> tuple[int, ...]:
    """Exact power-basis coefficients, index i giving the k**i term."""
    return _chrom_normalized(graph.n, graph.edges)


def count_proper_colorings(graph: Graph, k: int) -> int:
    """Number of maps from vertices to k colors with no monochromatic
    edge.  Computed by deletion-contraction, independently of any
    symmetric-function machinery."""
    if not isinstance(k, int) or isinstance(k, bool):
        raise TypeError(f"color count must be int, got {k!r}")
    if k < 0:
        raise ValueError(f"color count must be nonnegative, got {k}")
    total = 0
    for coeff in reversed(chromatic_polynomial(graph)):
        total = total * k + coeff
    return total


# ------------------------------------------------------ stable partitions

def stable_partition_types(graph: Graph, max_vertices: int = 12) -> set[Partition]:
    """All partition shapes realized by partitions of the vertex set
    into independent blocks.

    Exponential in n; refuses graphs larger than max_vertices.
    """
    n = graph.n
    if n > max_vertices:
        raise ResourceLimitError(
            f"stable-partition search capped at {max_vertices} vertices, "
            f"graph has {n} (raise max_vertices to force it)"
        )
    adj = graph.adjacency_masks()
    return {lam for lam in partitions(n) if _has_stable_partition(n, adj, lam)}


def _independent_blocks(adj, anchor: int, pool: int, size: int):
    """Independent sets of the given size inside pool containing anchor.

    Candidates are restricted to vertices above the last chosen one, so
    each block is produced once.
    """
    start = pool & ~adj[anchor] & ~((1 << (anchor + 1)) - 1)

    def extend(block: int, cand: int, left: int):
        if left == 0:
            yield block
            return
        while cand:
            low = cand & -cand
            cand ^= low
            w = low.bit_length() - 1
            yield from extend(block | low, cand & ~adj[w], left - 1)

    yield from extend(1 << anchor, start, size - 1)


def _has_stable_partition(n: int, adj, shape: Partition) -> bool:
    full = (1 << n) - 1
    memo: dict[tuple[int, Partition], bool] = {}

    def solve(uncovered: int, sizes: Partition) -> bool:
        if not uncovered:
            return True
        key = (uncovered, sizes)
        hit = memo.get(key)
        if hit is not None:
            return hit
        anchor = (uncovered & -uncovered).bit_length() - 1
        ok = False
        for i, s in enumerate(sizes):
            if i and sizes[i - 1] == s:
                continue
            rest = sizes[:i] + sizes[i + 1:]
            for block in _independent_blocks(adj, anchor, uncovered, s):
                if solve(uncovered & ~block, rest):
                    ok = True
                    break
            if ok:
                break
        memo[key] = ok
        return ok

    return solve(full, shape)


def is_nice(graph: Graph, max_vertices: int = 12) -> tuple[bool, tuple[Partition, Partition] | None]:
    """Whether the attained stable-partition shapes are downward closed
    under dominance.

    Returns (True, None) or (False, (attained, missing)) where missing
    is dominated by attained yet not realized.  Scans shapes in
    descending lexicographic order, so the witness is deterministic.
    """
    attained = stable_partition_types(graph, max_vertices)
    shapes = list(partitions(graph.n))
    for lam in shapes:
        if lam not in attained:
            continue
        for mu in shapes:
            if mu not in attained and dominance_leq(mu, lam):
                return (False, (lam, mu))
    return (True, None)


# --------------------------------------------------------- triple linking

def triple_split_graphs(graph: Graph, v1: int, v2: int, v3: int) -> dict[frozenset, Graph]:
    """The eight graphs made by adding any subset of the three edges
    v1v2, v1v3, v2v3 between pairwise non-adjacent vertices.

    Keys are frozensets over {1, 2, 3} naming which of the three edges
    (in that order) are present.
    """
    trio = (v1, v2, v3)
    if len(set(trio)) != 3:
        raise ValueError(f"need three distinct vertices, got {trio}")
    present = set(graph.edges)
    links = {1: (v1, v2), 2: (v1, v3), 3: (v2, v3)}
    for e in links.values():
        if _normalize_edge(e) in present:
            raise ValueError(f"vertices {e} are already adjacent")
    out = {}
    for r in range(4):
        for chosen in itertools.combinations((1, 2, 3), r):
            extra = tuple(links[i] for i in chosen)
            out[frozenset(chosen)] = Graph(graph.n, graph.edges + extra)
    return out
