"""Partition quality measures and stability procedures.

For a 2k-uniform hypergraph with a candidate bipartition, a 2k-subset
is "good" when it meets both parts in an odd number of vertices and
"bad" otherwise; a perfect parity construction has every edge good and
every good tuple present.  classify_tuples reports the full census and
improve_partition runs the obvious local search: while some vertex is
incident to strictly more bad than good edges, move the first such
vertex to the other side (each move strictly lowers the bad-edge count,
so the search terminates).

simonovits_partition approximately partitions a K_{s+1}-free graph G on
N vertices into s classes with few internal edges.  Write
e(G) = ((s-1)/(2s) - c) N^2.  First repeatedly delete a vertex of
degree strictly below (1 - 1/s - 2 sqrt(c)) times the current order
(threshold comparisons are exact: c is rational and the square root is
compared by squaring).  Deleting more than sqrt(c) N vertices is
impossible under the density hypothesis, so the loop stops early and
flags the run instead.  On the residual graph an s-clique A = a_1..a_s
is located by exact search; every vertex adjacent to all of A except
a_i joins class i, and the remaining vertices (including the deleted
ones) go, in ascending vertex order, to the currently smallest class
(ties to the lowest class index).

Text formats:

    turan-g v1                       partition file
    n=<int>                          p <vertex> <1|2>
    g <i> <j>                        (one line per vertex)
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from .construct import Bipartition
from .core import FormatError, Hypergraph, _data_lines, _parse_header_fields, binom_exact
from .freeness import find_clique


@dataclass(frozen=True)
class SimpleGraph:
    """An undirected graph on 0..n-1 as adjacency bitmask rows."""

    n: int
    adj: tuple[int, ...]

    def __post_init__(self):
        if len(self.adj) != self.n:
            raise ValueError(f"adjacency has {len(self.adj)} rows, expected {self.n}")
        full = (1 << self.n) - 1 if self.n else 0
        for v, row in enumerate(self.adj):
            if row & ~full:
                raise ValueError(f"row {v} mentions vertices >= {self.n}")
            if row >> v & 1:
                raise ValueError(f"self loop at {v}")
            w = row
            while w:
                low = w & -w
                u = low.bit_length() - 1
                if not self.adj[u] >> v & 1:
                    raise ValueError(f"edge ({v}, {u}) is not symmetric")
                w ^= low
    @property
    def edge_count(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2

    def edges(self) -> list[tuple[int, int]]:
        out = []
        for v in range(self.n):
            w = self.adj[v] >> (v + 1) << (v + 1)
            while w:
                low = w & -w
                out.append((v, low.bit_length() - 1))
                w ^= low
        return out

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()


def simple_graph(n: int, edges) -> SimpleGraph:
    """Build a SimpleGraph from (i, j) pairs."""
    adj = [0] * n
    for i, j in edges:
        if i == j or not (0 <= i < n and 0 <= j < n):
            raise ValueError(f"({i}, {j}) is not an edge on 0..{n - 1}")
        adj[i] |= 1 << j
        adj[j] |= 1 << i
    return SimpleGraph(n, tuple(adj))


def turan_graph(s: int, n: int) -> SimpleGraph:
    """The complete s-partite graph on n vertices with balanced parts."""
    if s < 1 or n < 0:
        raise ValueError(f"need s >= 1 and n >= 0, got s={s} n={n}")
    sizes = [n // s + (1 if i < n % s else 0) for i in range(s)]
    masks = []
    start = 0
    for size in sizes:
        masks.append(((1 << size) - 1) << start)
        start += size
    full = (1 << n) - 1 if n else 0
    adj = []
    for m in masks:
        row = full & ~m
        adj.extend([row] * m.bit_count())
    return SimpleGraph(n, tuple(adj))


def turan_graph_count(s: int, n: int) -> int:
    """Edge count of the balanced complete s-partite graph on n vertices."""
    if s < 1 or n < 0:
        raise ValueError(f"need s >= 1 and n >= 0, got s={s} n={n}")
    sizes = [n // s + (1 if i < n % s else 0) for i in range(s)]
    return binom_exact(n, 2) - sum(binom_exact(size, 2) for size in sizes)


@dataclass(frozen=True)
class TupleCensus:
    """Counts of 2k-subsets by parity quality and edge membership."""

    good_edges: int
    bad_edges: int
    good_non_edges: int
    bad_non_edges: int

    @property
    def incorrect(self) -> int:
        """Tuples out of line with a perfect parity construction."""
        return self.bad_edges + self.good_non_edges


def classify_tuples(
    h: Hypergraph, part: Bipartition, *, cap: int = 24, force: bool = False
) -> TupleCensus:
    """Full census over all C(n, 2k) tuples; capped unless force=True."""
    if part.n != h.n:
        raise ValueError(f"partition is over {part.n} vertices, hypergraph over {h.n}")
    if h.n > cap and not force:
        raise ValueError(
            f"n={h.n} exceeds the census cap {cap}; pass force=True to run anyway"
        )
    mask1 = part.mask(1)
    edge_set = h.edge_set()
    counts = [0, 0, 0, 0]  # good edge, bad edge, good non-edge, bad non-edge
    for combo in combinations(range(h.n), 2 * h.k):
        m = 0
        for v in combo:
            m |= 1 << v
        good = (m & mask1).bit_count() & 1
        is_edge = m in edge_set
        counts[(0 if good else 1) + (0 if is_edge else 2)] += 1
    return TupleCensus(*counts)


def bad_edge_count(h: Hypergraph, part: Bipartition) -> int:
    """Edges meeting part 1 in an even number of vertices."""
    mask1 = part.mask(1)
    return sum(1 for e in h.edges if not (e & mask1).bit_count() & 1)


def improve_partition(
    h: Hypergraph, start: Bipartition, *, trace: list[int] | None = None
) -> Bipartition:
    """Move-one-vertex local search from the given bipartition.

    Scans vertices in ascending order; the first vertex incident to
    strictly more bad than good edges is moved to the other part and the
    scan restarts.  The returned partition has no such vertex.  When a
    list is passed as trace, the bad-edge count is appended before the
    first move and after every move.
    """
    if start.n != h.n:
        raise ValueError(f"partition is over {start.n} vertices, hypergraph over {h.n}")
    incident: list[list[int]] = [[] for _ in range(h.n)]
    for e in h.edges:
        rest = e
        while rest:
            low = rest & -rest
            incident[low.bit_length() - 1].append(e)
            rest ^= low
    mask1 = start.mask(1)
    total_bad = bad_edge_count(h, start)
    if trace is not None:
        trace.append(total_bad)
    moved = True
    while moved:
        moved = False
        for v in range(h.n):
            good = bad = 0
            for e in incident[v]:
                if (e & mask1).bit_count() & 1:
                    good += 1
                else:
                    bad += 1
            if bad > good:
                mask1 ^= 1 << v
                new_bad = total_bad - bad + good
                assert new_bad < total_bad
                total_bad = new_bad
                if trace is not None:
                    trace.append(total_bad)
                moved = True
                break
    return Bipartition(
        h.n, tuple(1 if mask1 >> v & 1 else 2 for v in range(h.n))
    )


@dataclass(frozen=True)
class SimonovitsReport:
    """Outcome of simonovits_partition.

    parts: the s vertex classes (sorted tuples covering 0..n-1).
    internal_edges: total edge count inside the classes.
    deleted: vertices removed by the low-degree loop, in removal order.
    c: the density defect, e(G) = ((s-1)/(2s) - c) n^2.
    alpha: the min-degree slack, delta(G) = (1 - 1/s - alpha) n.
    clique: the located s-clique, or None.
    hypothesis_failure: None, or why the guarantees do not apply.
    """

    parts: tuple[tuple[int, ...], ...]
    internal_edges: int
    deleted: tuple[int, ...]
    c: Fraction
    alpha: Fraction
    clique: tuple[int, ...] | None
    hypothesis_failure: str | None


def _internal_edges(g: SimpleGraph, parts: list[list[int]]) -> int:
    total = 0
    for part in parts:
        m = 0
        for v in part:
            m |= 1 << v
        total += sum((g.adj[v] & m).bit_count() for v in part) // 2
    return total


def simonovits_partition(g: SimpleGraph, s: int) -> SimonovitsReport:
    """Partition a K_{s+1}-free graph into s classes with few internal edges.

    Raises ValueError when the graph contains K_{s+1}.  All threshold
    comparisons are exact; the low-degree loop deletes only on strict
    inequality, so graphs sitting exactly at the degree threshold (the
    balanced complete s-partite graphs) are left untouched.
    """
    if s < 2:
        raise ValueError(f"need s >= 2, got {s}")
    if g.n < 1:
        raise ValueError("need at least one vertex")
    witness = find_clique(g.adj, s + 1)
    if witness is not None:
        raise ValueError(f"graph contains K_{s + 1}: {witness}")

    n = g.n
    c = Fraction(s - 1, 2 * s) - Fraction(g.edge_count, n * n)
    assert c >= 0  # guaranteed by the clique-free check
    min_deg = min(g.degree(v) for v in range(n)) if n else 0
    alpha = Fraction(s - 1, s) - Fraction(min_deg, n)

    failure = None
    alive = (1 << n) - 1
    deleted: list[int] = []
    while True:
        m = alive.bit_count()
        target = None
        for v in range(n):
            if not alive >> v & 1:
                continue
            # degree < (1 - 1/s - 2 sqrt(c)) m, compared exactly
            slack = Fraction((g.adj[v] & alive).bit_count()) - Fraction(m * (s - 1), s)
            if slack < 0 and slack * slack > 4 * c * m * m:
                target = v
                break
        if target is None:
            break
        if (len(deleted) + 1) ** 2 > c * n * n:
            failure = "deletion budget exceeded"
            break
        alive ^= 1 << target
        deleted.append(target)

    alive_list = [v for v in range(n) if alive >> v & 1]
    pos = {v: i for i, v in enumerate(alive_list)}
    sub_adj = []
    for v in alive_list:
        row = 0
        w = g.adj[v] & alive
        while w:
            low = w & -w
            row |= 1 << pos[low.bit_length() - 1]
            w ^= low
        sub_adj.append(row)
    clique_idx = find_clique(tuple(sub_adj), s)

    parts: list[list[int]] = [[] for _ in range(s)]
    leftovers: list[int] = []
    clique = None
    if clique_idx is None:
        failure = failure or "residual graph contains no K_s"
        leftovers = list(range(n))
    else:
        clique = tuple(sorted(alive_list[i] for i in clique_idx))
        a_mask = 0
        for a in clique:
            a_mask |= 1 << a
        for i, a in enumerate(clique):
            parts[i].append(a)
        for v in alive_list:
            if v in clique:
                continue
            nbrs = g.adj[v] & a_mask
            cnt = nbrs.bit_count()
            assert cnt < s  # else clique + v would be a K_{s+1}
            if cnt == s - 1:
                missing = (a_mask & ~nbrs).bit_length() - 1
                parts[clique.index(missing)].append(v)
            else:
                leftovers.append(v)
        leftovers.extend(deleted)
        leftovers.sort()

    for v in leftovers:
        smallest = min(range(s), key=lambda i: (len(parts[i]), i))
        parts[smallest].append(v)

    parts_sorted = [sorted(p) for p in parts]
    return SimonovitsReport(
        parts=tuple(tuple(p) for p in parts_sorted),
        internal_edges=_internal_edges(g, parts_sorted),
        deleted=tuple(deleted),
        c=c,
        alpha=alpha,
        clique=clique,
        hypothesis_failure=failure,
    )


# --- turan-g v1 and partition files --------------------------------------

_G_MAGIC = "turan-g v1"


def read_graph(text: str) -> SimpleGraph:
    """Parse turan-g v1; raises FormatError with line numbers."""
    lines = _data_lines(text)
    try:
        lineno, line = next(lines)
    except StopIteration:
        raise FormatError(f"missing `{_G_MAGIC}` header") from None
    if line != _G_MAGIC:
        raise FormatError(f"expected `{_G_MAGIC}` header, got `{line}`", lineno)
    try:
        lineno, line = next(lines)
    except StopIteration:
        raise FormatError("missing `n=<int>` line") from None
    (n,) = _parse_header_fields(line, lineno, ("n",))
    if n < 0:
        raise FormatError("n must be nonnegative", lineno)
    adj = [0] * n
    for lineno, line in lines:
        parts = line.split()
        if parts[0] != "g" or len(parts) != 3:
            raise FormatError("expected `g <i> <j>`", lineno)
        try:
            i, j = int(parts[1]), int(parts[2])
        except ValueError:
            raise FormatError("vertex indices must be integers", lineno) from None
        if i == j:
            raise FormatError(f"self loop at {i}", lineno)
        if not (0 <= i < n and 0 <= j < n):
            raise FormatError(f"vertex index out of range 0..{n - 1}", lineno)
        if adj[i] >> j & 1:
            raise FormatError(f"duplicate edge ({min(i, j)}, {max(i, j)})", lineno)
        adj[i] |= 1 << j
        adj[j] |= 1 << i
    return SimpleGraph(n, tuple(adj))


def write_graph(g: SimpleGraph) -> str:
    """Serialize to turan-g v1, edges lexicographic."""
    out = [_G_MAGIC, f"n={g.n}"]
    for i, j in g.edges():
        out.append(f"g {i} {j}")
    return "\n".join(out) + "\n"


def read_bipartition(text: str, n: int) -> Bipartition:
    """Parse `p <vertex> <1|2>` lines; every vertex must appear once."""
    part_of: dict[int, int] = {}
    for lineno, line in _data_lines(text):
        parts = line.split()
        if parts[0] != "p" or len(parts) != 3:
            raise FormatError("expected `p <vertex> <1|2>`", lineno)
        try:
            v, side = int(parts[1]), int(parts[2])
        except ValueError:
            raise FormatError("entries must be integers", lineno) from None
        if not 0 <= v < n:
            raise FormatError(f"vertex index out of range 0..{n - 1}", lineno)
        if side not in (1, 2):
            raise FormatError(f"part must be 1 or 2, got {side}", lineno)
        if v in part_of:
            raise FormatError(f"vertex {v} assigned twice", lineno)
        part_of[v] = side
    missing = [v for v in range(n) if v not in part_of]
    if missing:
        raise FormatError(f"vertex {missing[0]} has no part assignment")
    return Bipartition(n, tuple(part_of[v] for v in range(n)))


def write_bipartition(b: Bipartition) -> str:
    return "".join(f"p {v} {side}\n" for v, side in enumerate(b.part_of))
