"""Shared ground types: bitmask subsets, exact binomials, hypergraphs.

Conventions used across the package:

* Vertices of an n-vertex structure are the integers 0..n-1.
* A subset of vertices is an int bitmask; vertex v is in the set iff
  bit v is set.  All arithmetic on counts is exact (Python ints).
* k-subsets are enumerated in lexicographic order on their sorted
  index lists, i.e. the order of itertools.combinations.
* Hypergraph edge lists are kept sorted by mask value and duplicate
  free, so equal hypergraphs compare equal structurally.

The text format `turan-hg v1` stores a 2k-uniform hypergraph:

    turan-hg v1
    n=<int> k=<int>
    e v1 v2 ... v2k        (vertex indices, strictly increasing)

Blank lines and lines starting with `#` are ignored.  Readers report
offending line numbers on malformed input.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator, Sequence

try:
    import numpy as _np
except ImportError:  # pragma: no cover - numpy is a declared dependency
    _np = None


class FormatError(ValueError):
    """Malformed text input; carries the 1-based offending line number."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


def binom_exact(n: int, k: int) -> int:
    """Binomial coefficient C(n, k) as an exact integer (0 when k > n)."""
    if n < 0 or k < 0:
        raise ValueError(f"binom_exact needs nonnegative arguments, got ({n}, {k})")
    return math.comb(n, k)


def binom_real(x: float, k: int) -> float:
    """Real-argument binomial x(x-1)...(x-k+1) / k! as a float."""
    if k < 0:
        raise ValueError(f"binom_real needs k >= 0, got {k}")
    out = 1.0
    for i in range(k):
        out *= (x - i) / (i + 1)
    return out


def mask_of(indices: Iterable[int]) -> int:
    """Bitmask of a vertex index collection."""
    m = 0
    for v in indices:
        m |= 1 << v
    return m


def indices_of(mask: int) -> tuple[int, ...]:
    """Sorted vertex indices of a bitmask."""
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return tuple(out)


def enumerate_ksubsets(n: int, k: int) -> Iterator[int]:
    """All k-subset masks of 0..n-1, lexicographic on sorted index lists."""
    if n < 0 or k < 0:
        raise ValueError(f"enumerate_ksubsets needs nonnegative arguments, got ({n}, {k})")
    for combo in combinations(range(n), k):
        m = 0
        for v in combo:
            m |= 1 << v
        yield m


def _check_members(n: int, size: int, masks: Sequence[int], what: str) -> None:
    full = (1 << n) - 1 if n else 0
    for m in masks:
        if m < 0 or m & ~full:
            raise ValueError(f"{what} {indices_of(m & ~full) or m} out of range for n={n}")
        if m.bit_count() != size:
            raise ValueError(
                f"{what} {indices_of(m)} has {m.bit_count()} vertices, expected {size}"
            )


@dataclass(frozen=True)
class Hypergraph:
    """A 2k-uniform hypergraph on vertices 0..n-1.

    `edges` holds one bitmask per edge, sorted ascending, no duplicates.
    """

    n: int
    k: int
    edges: tuple[int, ...]

    def __post_init__(self):
        if self.n < 0 or self.k < 1:
            raise ValueError(f"need n >= 0 and k >= 1, got n={self.n} k={self.k}")
        _check_members(self.n, 2 * self.k, self.edges, "edge")
        if any(a >= b for a, b in zip(self.edges, self.edges[1:])):
            raise ValueError("edges must be sorted ascending and duplicate free")

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def edge_set(self) -> frozenset[int]:
        return frozenset(self.edges)


def hypergraph(n: int, k: int, edges: Iterable[int]) -> Hypergraph:
    """Build a Hypergraph, canonicalizing the edge order."""
    return Hypergraph(n, k, tuple(sorted(set(edges))))


@dataclass(frozen=True)
class SetFamily:
    """A family of k-subsets of a ground set 0..m-1, sorted, duplicate free."""

    m: int
    k: int
    members: tuple[int, ...]

    def __post_init__(self):
        if self.m < 0 or self.k < 0:
            raise ValueError(f"need m >= 0 and k >= 0, got m={self.m} k={self.k}")
        _check_members(self.m, self.k, self.members, "member")
        if any(a >= b for a, b in zip(self.members, self.members[1:])):
            raise ValueError("members must be sorted ascending and duplicate free")

    @property
    def size(self) -> int:
        return len(self.members)


def set_family(m: int, k: int, members: Iterable[int]) -> SetFamily:
    """Build a SetFamily, canonicalizing the member order."""
    return SetFamily(m, k, tuple(sorted(set(members))))


def vertex_degrees(h: Hypergraph) -> list[int]:
    """Degree of every vertex, i.e. the number of edges containing it."""
    if _np is not None and h.n <= 63 and h.edges:
        arr = _np.fromiter(h.edges, dtype=_np.uint64, count=len(h.edges))
        return [
            int(_np.count_nonzero(arr & _np.uint64(1 << v))) for v in range(h.n)
        ]
    degs = [0] * h.n
    for e in h.edges:
        while e:
            low = e & -e
            degs[low.bit_length() - 1] += 1
            e ^= low
    return degs


# --- turan-hg v1 ---------------------------------------------------------

_HG_MAGIC = "turan-hg v1"


def _data_lines(text: str) -> Iterator[tuple[int, str]]:
    """(1-based line number, stripped content) for non-blank non-comment lines."""
    for i, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        yield i, line


def _parse_header_fields(line: str, lineno: int, keys: tuple[str, ...]) -> list[int]:
    parts = line.split()
    if len(parts) != len(keys):
        raise FormatError(f"expected `{' '.join(k + '=<int>' for k in keys)}`", lineno)
    vals = []
    for part, key in zip(parts, keys):
        prefix = key + "="
        if not part.startswith(prefix):
            raise FormatError(f"expected `{prefix}<int>`, got `{part}`", lineno)
        try:
            vals.append(int(part[len(prefix):]))
        except ValueError:
            raise FormatError(f"`{part}` is not an integer assignment", lineno) from None
    return vals


def _parse_index_line(line: str, lineno: int, tag: str) -> list[int]:
    parts = line.split()
    if parts[0] != tag:
        raise FormatError(f"expected a `{tag}` line, got `{parts[0]}`", lineno)
    try:
        idx = [int(p) for p in parts[1:]]
    except ValueError:
        raise FormatError("vertex indices must be integers", lineno) from None
    return idx


def read_hypergraph(text: str) -> Hypergraph:
    """Parse the turan-hg v1 format; raises FormatError with line numbers."""
    lines = _data_lines(text)
    try:
        lineno, line = next(lines)
    except StopIteration:
        raise FormatError(f"missing `{_HG_MAGIC}` header") from None
    if line != _HG_MAGIC:
        raise FormatError(f"expected `{_HG_MAGIC}` header, got `{line}`", lineno)
    try:
        lineno, line = next(lines)
    except StopIteration:
        raise FormatError("missing `n=<int> k=<int>` line") from None
    n, k = _parse_header_fields(line, lineno, ("n", "k"))
    if n < 0 or k < 1:
        raise FormatError(f"need n >= 0 and k >= 1, got n={n} k={k}", lineno)

    edges = []
    seen = set()
    for lineno, line in lines:
        idx = _parse_index_line(line, lineno, "e")
        if len(idx) != 2 * k:
            raise FormatError(f"edge has {len(idx)} vertices, expected {2 * k}", lineno)
        if any(a >= b for a, b in zip(idx, idx[1:])):
            raise FormatError("edge vertices must be strictly increasing", lineno)
        if idx[0] < 0 or idx[-1] >= n:
            raise FormatError(f"vertex index out of range 0..{n - 1}", lineno)
        m = mask_of(idx)
        if m in seen:
            raise FormatError(f"duplicate edge {' '.join(map(str, idx))}", lineno)
        seen.add(m)
        edges.append(m)
    return Hypergraph(n, k, tuple(sorted(edges)))


def write_hypergraph(h: Hypergraph) -> str:
    """Serialize to turan-hg v1, edges in canonical (sorted mask) order."""
    out = [_HG_MAGIC, f"n={h.n} k={h.k}"]
    for e in h.edges:
        out.append("e " + " ".join(map(str, indices_of(e))))
    return "\n".join(out) + "\n"
