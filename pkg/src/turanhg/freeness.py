"""Expanded-clique detection via the auxiliary k-subset graph.

An expanded clique with r branch sets in a 2k-uniform hypergraph H is a
family of r pairwise disjoint k-subsets whose C(r, 2) pairwise unions
are all edges of H.  Build the auxiliary graph G whose vertices are the
k-subsets of 0..n-1 and whose edges join P and Q exactly when P union Q
is an edge of H (which forces P and Q disjoint): copies of the expanded
clique correspond to r-cliques of G, and every edge of H splits into
C(2k, k)/2 auxiliary edges, so e(G) = C(2k, k)/2 * e(H).

Clique search is exact branch and bound with a greedy coloring bound.
The auxiliary graph is materialized only for small n (its vertex count
is C(n, k)); above the cap the same search runs on implicit adjacency.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .core import Hypergraph, binom_exact, enumerate_ksubsets, indices_of


@dataclass(frozen=True)
class AuxGraph:
    """Materialized auxiliary graph; vertex i is the k-subset subsets[i]."""

    n: int
    k: int
    subsets: tuple[int, ...]
    adj: tuple[int, ...]  # adjacency bitsets over subset indices

    @property
    def edge_count(self) -> int:
        return sum(a.bit_count() for a in self.adj) // 2


def _edge_splits(edge: int, k: int):
    """Unordered pairs (P, Q) of disjoint k-subsets with P | Q == edge."""
    verts = indices_of(edge)
    low = verts[0]
    for rest in combinations(verts[1:], k - 1):
        p = 1 << low
        for v in rest:
            p |= 1 << v
        yield p, edge ^ p


def auxiliary_graph(h: Hypergraph) -> AuxGraph:
    """Build the auxiliary graph of H and check its edge-count identity."""
    subsets = tuple(enumerate_ksubsets(h.n, h.k))
    index = {s: i for i, s in enumerate(subsets)}
    adj = [0] * len(subsets)
    for e in h.edges:
        for p, q in _edge_splits(e, h.k):
            ip, iq = index[p], index[q]
            adj[ip] |= 1 << iq
            adj[iq] |= 1 << ip
    g = AuxGraph(h.n, h.k, subsets, tuple(adj))
    assert g.edge_count * 2 == binom_exact(2 * h.k, h.k) * h.edge_count
    return g


def find_clique(adj: tuple[int, ...], r: int) -> tuple[int, ...] | None:
    """Some r-clique of the graph given as adjacency bitsets, or None.

    Exact branch and bound: candidates are greedily colored at each node
    and a branch is cut when clique size plus the candidate's color
    index cannot reach r.
    """
    if r <= 0:
        return ()
    n = len(adj)
    found: list[tuple[int, ...]] = []
    stack: list[int] = []

    def expand(cand: int) -> bool:
        if len(stack) == r:
            found.append(tuple(stack))
            return True
        if len(stack) + cand.bit_count() < r:
            return False
        colored: list[tuple[int, int]] = []  # (vertex, color index)
        rem = cand
        color = 0
        while rem:
            color += 1
            avail = rem
            cls = 0
            while avail:
                lowbit = avail & -avail
                v = lowbit.bit_length() - 1
                colored.append((v, color))
                cls |= lowbit
                avail &= ~(adj[v] | lowbit)
            rem &= ~cls
        local = cand
        for v, color in reversed(colored):
            if len(stack) + color < r:
                return False
            stack.append(v)
            if expand(local & adj[v]):
                return True
            stack.pop()
            local &= ~(1 << v)
        return False

    if n == 0:
        return None
    if expand((1 << n) - 1):
        return found[0]
    return None


def _implicit_search(
    edge_set: frozenset[int], r: int, chosen: list[int], cands: list[int]
) -> tuple[int, ...] | None:
    if len(chosen) == r:
        return tuple(chosen)
    if len(chosen) + len(cands) < r:
        return None
    for i, s in enumerate(cands):
        if len(chosen) + len(cands) - i < r:
            break
        chosen.append(s)
        nxt = [q for q in cands[i + 1 :] if q & s == 0 and (q | s) in edge_set]
        got = _implicit_search(edge_set, r, chosen, nxt)
        chosen.pop()
        if got is not None:
            return got
    return None


def find_expansion(
    h: Hypergraph, r: int, *, materialize_cap: int = 14
) -> tuple[int, ...] | None:
    """Branch sets of some expanded-clique copy with r parts, or None.

    Returns r pairwise disjoint k-subset masks whose pairwise unions are
    all edges of h.  For h.n <= materialize_cap the search runs on the
    materialized auxiliary graph; beyond that adjacency is computed on
    the fly.
    """
    if r < 1:
        raise ValueError(f"need r >= 1, got {r}")
    if r == 1:
        first = next(enumerate_ksubsets(h.n, h.k), None) if h.n >= h.k else None
        return (first,) if first is not None else None
    if h.n <= materialize_cap:
        g = auxiliary_graph(h)
        got = find_clique(g.adj, r)
        if got is None:
            return None
        return tuple(g.subsets[i] for i in got)
    return _implicit_search(
        h.edge_set(), r, [], list(enumerate_ksubsets(h.n, h.k))
    )


def is_maximal_free(h: Hypergraph, r: int, *, materialize_cap: int = 14) -> bool:
    """True iff h is expanded-clique free and adding any new edge is not.

    Raises ValueError when h already contains a copy.
    """
    if find_expansion(h, r, materialize_cap=materialize_cap) is not None:
        raise ValueError("hypergraph already contains an expanded clique")
    if r < 2:
        return False  # any k-subset alone is a copy with r = 1
    edge_set = h.edge_set()
    for cand in enumerate_ksubsets(h.n, 2 * h.k):
        if cand in edge_set:
            continue
        grown = frozenset(edge_set | {cand})
        created = False
        for p, q in _edge_splits(cand, h.k):
            rest = [
                s
                for s in enumerate_ksubsets(h.n, h.k)
                if s & cand == 0
                and (s | p) in grown
                and (s | q) in grown
            ]
            if _implicit_search(grown, r, [p, q], rest) is not None:
                created = True
                break
        if not created:
            return False
    return True
