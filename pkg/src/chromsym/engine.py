"""Chromatic symmetric functions: closed-form evaluators for the
benchmark families, an edge-subset oracle, cross-verification, and an
e-positivity scanner for theta graphs.

Every formula here expands in the elementary basis as a weighted sum
over compositions of the vertex count, with composition_weight carrying
the part-size factors and a per-family coefficient on top.  The oracle
recomputes the same functions from scratch by inclusion-exclusion over
edge subsets, sharing no code path with the formulas.
"""

from __future__ import annotations

import json
import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Callable, Iterator

from .compositions import (
    Composition,
    Partition,
    chord_weight,
    composition_weight,
    compositions,
    deficiency,
    partition_of,
    surplus,
)
from .graphs import (
    FAMILY_ARITY,
    Family,
    Graph,
    GraphSpec,
    ResourceLimitError,
    build_graph,
    count_proper_colorings,
    theta_graph,
    triple_split_graphs,
)
from .symfunc import (
    Basis,
    EPositivityReport,
    SymFunc,
    is_e_positive,
    p_to_e,
    principal_specialization,
)

DEFAULT_MAX_EDGES = 24

# Edge subsets are enumerated in blocks: the bits above this many are
# frozen per block and their union-find state is built once, then the
# low bits vary in plain binary order within the block.
_ORACLE_BLOCK_BITS = 12


# --------------------------------------------------------------- formulas

def _aggregate(n: int, coeff: Callable[[Composition], int]) -> SymFunc:
    """Sum coeff(comp) * composition_weight(comp) * e_shape over all
    compositions of n, collected by underlying partition."""
    acc: dict[Partition, int] = {}
    for comp in compositions(n):
        w = composition_weight(comp)
        if w == 0:
            continue
        c = coeff(comp)
        if c == 0:
            continue
        lam = partition_of(comp)
        new = acc.get(lam, 0) + c * w
        if new:
            acc[lam] = new
        else:
            del acc[lam]
    return SymFunc(Basis.ELEMENTARY, acc)


def csf_path(n: int) -> SymFunc:
    """Chromatic symmetric function of the path on n vertices."""
    if n < 1:
        raise ValueError(f"path needs at least one vertex, got {n}")
    return _aggregate(n, lambda comp: 1)


def csf_cycle(n: int) -> SymFunc:
    """Chromatic symmetric function of the cycle on n vertices.

    The expansion is valid down to n = 2, where the multigraph cycle
    degenerates to a single edge and the value is 2 e_2.
    """
    if n < 2:
        raise ValueError(f"cycle formula needs n >= 2, got {n}")
    return _aggregate(n, lambda comp: comp[0] - 1)


def csf_tadpole(m: int, tail: int) -> SymFunc:
    """Chromatic symmetric function of the cycle on m vertices with a
    path of tail extra vertices attached.

    The coefficient of a composition is the surplus of its prefix sums
    over tail + 1.  tail = 0 recovers the cycle and m = 2 degenerates
    to the path on tail + 2 vertices.
    """
    if m < 2:
        raise ValueError(f"tadpole formula needs cycle length >= 2, got {m}")
    if tail < 0:
        raise ValueError(f"tail length must be nonnegative, got {tail}")
    n = m + tail
    return _aggregate(n, lambda comp: surplus(comp, tail + 1))


def csf_cycle_chord(a: int, b: int) -> SymFunc:
    """Chromatic symmetric function of the cycle on a + b vertices with
    a chord cutting it into arcs of a and b edges.

    Expands with the nonnegative chord_weight coefficients, so
    e-positivity is visible term by term.  Needs both arcs >= 2; for a
    degenerate arc use csf_cycle or csf_cycle_chord_signed.
    """
    if a < 2 or b < 2:
        raise ValueError(f"both arcs need at least two edges, got ({a}, {b})")
    n = a + b
    return _aggregate(n, lambda comp: chord_weight(comp, b))


def signed_chord_weight(comp: Composition, b: int) -> int:
    """Telescoped coefficient for the chorded cycle: the sum of
    surpluses at 1..b minus the sum of reversed deficiencies at
    1..b-1.  Agrees with chord_weight on [2, n-2] but individual
    values may be negative outside the window where both are defined.
    """
    n = sum(comp)
    if not 1 <= b <= n - 1:
        raise ValueError(f"chord distance must lie in [1, {n - 1}], got {b}")
    rev = comp[::-1]
    up = sum(surplus(comp, i) for i in range(1, b + 1))
    down = sum(deficiency(rev, i) for i in range(1, b))
    return up - down


def csf_cycle_chord_signed(a: int, b: int) -> SymFunc:
    """Same function as csf_cycle_chord, computed from the alternating
    surplus/deficiency coefficients instead of the split-point case
    analysis.  Valid for any arcs a, b >= 1 with a + b >= 3."""
    if a < 1 or b < 1:
        raise ValueError(f"both arcs need at least one edge, got ({a}, {b})")
    n = a + b
    if n < 3:
        raise ValueError(f"cycle needs at least 3 vertices, got {n}")
    return _aggregate(n, lambda comp: signed_chord_weight(comp, b))


# ----------------------------------------------------------------- oracle

def csf_oracle(graph: Graph, max_edges: int = DEFAULT_MAX_EDGES) -> SymFunc:
    """Chromatic symmetric function by inclusion-exclusion over edge
    subsets, returned in the elementary basis.

    Each subset contributes its sign times the power sum indexed by the
    component sizes of the spanning subgraph.  Runtime is 2**m for m
    edges, so the call refuses graphs above max_edges.
    """
    m = graph.m
    if m > max_edges:
        raise ResourceLimitError(
            f"oracle capped at {max_edges} edges, graph has {m} "
            f"(raise max_edges to force the 2**{m} enumeration)"
        )
    n = graph.n
    low_edges = graph.edges[:_ORACLE_BLOCK_BITS]
    high_edges = graph.edges[_ORACLE_BLOCK_BITS:]
    low_count = len(low_edges)
    acc: dict[Partition, int] = {}
    for high_mask in range(1 << len(high_edges)):
        base_parent = list(range(n))
        base_size = [1] * n
        _absorb(base_parent, base_size, high_edges, high_mask)
        high_sign = -1 if high_mask.bit_count() & 1 else 1
        for low_mask in range(1 << low_count):
            parent = base_parent.copy()
            size = base_size.copy()
            _absorb(parent, size, low_edges, low_mask)
            shape = _root_sizes(parent, size)
            sign = -high_sign if low_mask.bit_count() & 1 else high_sign
            acc[shape] = acc.get(shape, 0) + sign
    terms = {lam: c for lam, c in acc.items() if c}
    return p_to_e(SymFunc(Basis.POWERSUM, terms))


def _absorb(parent: list[int], size: list[int], edges, mask: int) -> None:
    """Union the edges selected by mask into the parent/size arrays."""
    idx = 0
    while mask:
        if mask & 1:
            u, v = edges[idx]
            ru = _find(parent, u)
            rv = _find(parent, v)
            if ru != rv:
                if size[ru] < size[rv]:
                    ru, rv = rv, ru
                parent[rv] = ru
                size[ru] += size[rv]
        mask >>= 1
        idx += 1


def _find(parent: list[int], x: int) -> int:
    while parent[x] != x:
        parent[x] = parent[parent[x]]
        x = parent[x]
    return x


def _root_sizes(parent: list[int], size: list[int]) -> Partition:
    return tuple(
        sorted(
            (size[v] for v in range(len(parent)) if parent[v] == v),
            reverse=True,
        )
    )


# ----------------------------------------------------------- verification

# Families whose e-positivity is established, so a negative coefficient
# is a hard failure rather than a finding.
def _e_positivity_expected(spec: GraphSpec) -> bool:
    fam = spec.family
    if fam in (Family.PATH, Family.CYCLE, Family.TADPOLE, Family.CYCLE_CHORD):
        return True
    if fam in (Family.THETA, Family.MULTIPATH):
        lengths = spec.params
        if len(lengths) <= 2:
            return True
        return len(lengths) == 3 and min(lengths) <= 2
    return False


def closed_formula(spec: GraphSpec) -> SymFunc | None:
    """Dispatch to a closed-form evaluator when one covers the spec,
    None when only the oracle can answer."""
    fam = spec.family
    params = spec.params
    want = FAMILY_ARITY.get(fam)
    if want is not None and len(params) != want:
        raise ValueError(
            f"{fam.value} takes {want} parameter(s), got {len(params)}"
        )
    if fam is Family.PATH:
        return csf_path(params[0])
    if fam is Family.CYCLE:
        return csf_cycle(params[0])
    if fam is Family.TADPOLE:
        return csf_tadpole(*params)
    if fam is Family.CYCLE_CHORD:
        a, b = params
        if min(a, b) == 1:
            return csf_cycle(a + b)
        return csf_cycle_chord(a, b)
    if fam in (Family.THETA, Family.MULTIPATH):
        lengths = spec.params
        if len(lengths) == 1:
            return csf_path(lengths[0] + 1)
        if len(lengths) == 2:
            return csf_cycle(lengths[0] + lengths[1])
        if len(lengths) == 3 and lengths[2] == 1:
            a, b = lengths[0], lengths[1]
            if b == 1:
                return csf_cycle(a + 1)
            return csf_cycle_chord(a, b)
    return None


@dataclass
class VerificationReport:
    """Everything verify() learned about one graph.

    formula is None when no closed form covers the family; equal is
    None in that case.  colorings_match records the principal
    specialization against the deletion-contraction coloring count for
    k = 0..n.  timings maps phase name to seconds.
    """

    spec: GraphSpec
    graph: Graph
    formula: SymFunc | None
    oracle: SymFunc
    equal: bool | None
    e_positivity: EPositivityReport
    e_positivity_expected: bool
    colorings_match: bool
    timings: dict[str, float]

    @property
    def passed(self) -> bool:
        if self.equal is False:
            return False
        if not self.colorings_match:
            return False
        if self.e_positivity_expected and not self.e_positivity.positive:
            return False
        return True


def verify(spec: GraphSpec, max_edges: int = DEFAULT_MAX_EDGES) -> VerificationReport:
    """Compute a graph's function by every route available and compare.

    Always runs the edge-subset oracle; adds the closed formula when
    the family has one, and checks the principal specialization against
    the independent coloring count at k = 0..n.
    """
    graph = build_graph(spec)
    timings: dict[str, float] = {}

    start = time.perf_counter()
    oracle = csf_oracle(graph, max_edges)
    timings["oracle"] = time.perf_counter() - start

    formula = None
    equal = None
    start = time.perf_counter()
    formula = closed_formula(spec)
    if formula is not None:
        equal = formula == oracle
    timings["formula"] = time.perf_counter() - start

    start = time.perf_counter()
    colorings_match = all(
        principal_specialization(oracle, k) == count_proper_colorings(graph, k)
        for k in range(graph.n + 1)
    )
    timings["colorings"] = time.perf_counter() - start

    return VerificationReport(
        spec=spec,
        graph=graph,
        formula=formula,
        oracle=oracle,
        equal=equal,
        e_positivity=is_e_positive(oracle),
        e_positivity_expected=_e_positivity_expected(spec),
        colorings_match=colorings_match,
        timings=timings,
    )


def check_triple_deletion(
    graph: Graph, v1: int, v2: int, v3: int, max_edges: int = DEFAULT_MAX_EDGES
) -> bool:
    """Check the two three-edge deletion identities on a base graph
    with three pairwise non-adjacent vertices.

    With subscripts naming which of the edges v1v2, v1v3, v2v3 are
    added: X_{12} = X_1 + X_{23} - X_3 and X_{123} = X_{13} + X_{23}
    - X_3.
    """
    split = triple_split_graphs(graph, v1, v2, v3)

    def x(*which: int) -> SymFunc:
        return csf_oracle(split[frozenset(which)], max_edges)

    x3 = x(3)
    x23 = x(2, 3)
    first = x(1, 2) == x(1) + x23 - x3
    second = x(1, 2, 3) == x(1, 3) + x23 - x3
    return first and second


# ------------------------------------------------------------ theta scan

SCAN_SCHEMA = 1


@dataclass(frozen=True)
class ThetaScanRow:
    """One scanned theta graph: path lengths a >= b >= c, vertex count,
    and the e-positivity verdict with the minimal coefficient seen."""

    a: int
    b: int
    c: int
    n: int
    e_positive: bool
    min_coeff: int
    min_coeff_shape: Partition

    def cell(self) -> tuple[int, int, int]:
        return (self.a, self.b, self.c)

    def to_json(self) -> str:
        return json.dumps(
            {
                "schema": SCAN_SCHEMA,
                "a": self.a,
                "b": self.b,
                "c": self.c,
                "n": self.n,
                "e_positive": self.e_positive,
                "min_coeff": self.min_coeff,
                "min_coeff_shape": list(self.min_coeff_shape),
            }
        )

    @classmethod
    def from_json(cls, line: str) -> "ThetaScanRow":
        data = json.loads(line)
        if data.get("schema") != SCAN_SCHEMA:
            raise ValueError(f"unsupported scan row schema: {data.get('schema')!r}")
        return cls(
            a=data["a"],
            b=data["b"],
            c=data["c"],
            n=data["n"],
            e_positive=data["e_positive"],
            min_coeff=data["min_coeff"],
            min_coeff_shape=tuple(data["min_coeff_shape"]),
        )


def theta_scan_cells(n_max: int) -> list[tuple[int, int, int]]:
    """All theta path-length triples a >= b >= c >= 1 with at most
    n_max vertices, excluding b = c = 1 (those duplicate the hub edge).

    Ordered by (n, a, b, c), so scans are deterministic and resumable.
    """
    cells = []
    for n in range(4, n_max + 1):
        total = n + 1
        for c in range(1, total // 3 + 1):
            for b in range(c, (total - c) // 2 + 1):
                a = total - b - c
                if a < b:
                    continue
                if b == 1 and c == 1:
                    continue
                cells.append((a, b, c))
    cells.sort(key=lambda cell: (sum(cell) - 1, cell))
    return cells


def _scan_cell(cell: tuple[int, int, int]) -> ThetaScanRow:
    a, b, c = cell
    n = a + b + c - 1
    if c == 1:
        # chorded-cycle formula, no subset enumeration needed
        x = csf_cycle_chord(a, b)
    else:
        x = csf_oracle(theta_graph(a, b, c), max_edges=n + 1)
    report = is_e_positive(x)
    lam, coeff = min(x.sorted_terms(), key=lambda item: (item[1], item[0]))
    return ThetaScanRow(
        a=a,
        b=b,
        c=c,
        n=n,
        e_positive=report.positive,
        min_coeff=coeff,
        min_coeff_shape=lam,
    )


def _load_checkpoint(path: str) -> dict[tuple[int, int, int], ThetaScanRow]:
    done = {}
    if path and os.path.exists(path):
        with open(path, encoding="utf-8") as fh:
            for line in fh:
                line = line.strip()
                if not line:
                    continue
                row = ThetaScanRow.from_json(line)
                done[row.cell()] = row
    return done


def scan_theta(
    n_max: int,
    max_edges: int = DEFAULT_MAX_EDGES,
    checkpoint: str | None = None,
    jobs: int = 1,
) -> Iterator[ThetaScanRow]:
    """Stream e-positivity rows for every theta graph with at most
    n_max vertices, in (n, a, b, c) order.

    With a checkpoint path, finished rows are appended as JSON lines
    and a rerun replays them without recomputation.  Cells needing an
    oracle call beyond max_edges are skipped, never checkpointed, and
    reported in one ResourceLimitError once everything runnable has
    been yielded; cells covered by the closed formula have no edge
    bound at all.
    """
    done = _load_checkpoint(checkpoint) if checkpoint else {}
    cells = theta_scan_cells(n_max)
    skipped = [
        cell
        for cell in cells
        if cell not in done and cell[2] >= 2 and sum(cell) > max_edges
    ]
    over = set(skipped)
    pending = [cell for cell in cells if cell not in done and cell not in over]

    fresh: Iterator[ThetaScanRow]
    if jobs > 1 and pending:
        pool = ProcessPoolExecutor(max_workers=jobs)
        fresh = pool.map(_scan_cell, pending)
    else:
        pool = None
        fresh = map(_scan_cell, pending)

    sink = open(checkpoint, "a", encoding="utf-8") if checkpoint else None
    try:
        for cell in cells:
            if cell in done:
                yield done[cell]
                continue
            if cell in over:
                continue
            row = next(fresh)
            if sink:
                sink.write(row.to_json() + "\n")
                sink.flush()
            yield row
    finally:
        if sink:
            sink.close()
        if pool:
            pool.shutdown()
    if skipped:
        raise ResourceLimitError(
            f"{len(skipped)} theta cell(s) need oracles beyond max_edges="
            f"{max_edges}, first {skipped[0]}; raise the bound to scan them"
        )
