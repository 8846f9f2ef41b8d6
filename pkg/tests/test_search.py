from itertools import combinations

import pytest

from turanhg import search as sr
from turanhg.core import binom_exact, enumerate_ksubsets, mask_of
from turanhg.freeness import find_expansion
from turanhg.krawtchouk import optimal_shift


def test_conflict_triples_n6():
    system = sr.conflict_triples(6)
    # one 6-subset, 15 perfect matchings of K_6 on its pairs
    assert len(system.conflicts) == 15
    items = list(system.items)
    assert items == list(enumerate_ksubsets(6, 4))
    appearances = [0] * len(items)
    for a, b, c in system.conflicts:
        # the three 4-sets of a conflict pairwise union to the 6-set
        assert items[a] | items[b] == items[a] | items[c] == 0b111111
        for x in (a, b, c):
            appearances[x] += 1
    assert all(v == 3 for v in appearances)


def test_conflict_triples_counts():
    # C(n,6) 6-subsets, 15 matchings each, all distinct as triples
    for n in (6, 7, 8):
        triples = sr.conflict_triples(n).conflicts
        assert len(triples) == 15 * binom_exact(n, 6)
        assert len(set(triples)) == len(triples)
        assert all(a < b < c for a, b, c in triples)


def test_conflicts_are_exactly_expansion_copies():
    # a triple of 4-sets is a conflict iff making them all edges yields a copy
    n = 7
    system = sr.conflict_triples(n)
    items = list(system.items)
    conflicts = set(system.conflicts)
    from turanhg.core import hypergraph

    for t in list(combinations(range(len(items)), 3))[:2000]:
        masks = [items[i] for i in t]
        if len({m for m in masks}) < 3:
            continue
        h = hypergraph(n, 2, masks)
        has_copy = find_expansion(h, 3) is not None
        assert (t in conflicts) == has_copy


def test_lower_bound_construction():
    for n in range(4, 12):
        h = sr.lower_bound_construction(n)
        rep = optimal_shift(n, 2)
        assert h.edge_count == rep.max_edges
        assert find_expansion(h, 3) is None


def brute_force_max(n):
    items = list(enumerate_ksubsets(n, 4))
    conflict_masks = [
        (1 << a) | (1 << b) | (1 << c)
        for a, b, c in sr.conflict_triples(n).conflicts
    ]
    best = 0
    for bits in range(1 << len(items)):
        if bits.bit_count() <= best:
            continue
        if all((bits & cm) != cm for cm in conflict_masks):
            best = bits.bit_count()
    return best


def test_exact_turan_brute_force_n6():
    assert sr.exact_turan(6).value == brute_force_max(6)


def test_exact_turan_frozen_values():
    assert sr.exact_turan(4).value == 1
    r5 = sr.exact_turan(5)
    assert r5.value == 5 and r5.proof_of_optimality
    r6 = sr.exact_turan(6)
    assert r6.value == 10 and r6.proof_of_optimality
    r7 = sr.exact_turan(7)
    assert r7.value == 20 and r7.proof_of_optimality


def test_exact_turan_witness_is_free():
    for n in range(4, 8):
        r = sr.exact_turan(n)
        assert r.witness.n == n and r.witness.k == 2
        assert r.witness.edge_count == r.value
        assert find_expansion(r.witness, 3) is None


def test_exact_turan_dominates_construction():
    for n in range(4, 8):
        assert sr.exact_turan(n).value >= optimal_shift(n, 2).max_edges


def test_exact_turan_seed_invariance():
    vals = {sr.exact_turan(7, seed=s).value for s in (None, 0, 1, 2, 77)}
    assert vals == {20}


def test_exact_turan_trivial_sizes():
    # below 6 vertices no conflict exists: every 4-subset family is free
    assert sr.exact_turan(4).value == binom_exact(4, 4)
    assert sr.exact_turan(5).value == binom_exact(5, 4)


def test_exact_turan_cap():
    with pytest.raises(ValueError):
        sr.exact_turan(9)
    with pytest.raises(ValueError):
        sr.exact_turan(-1)
    # below the conflict threshold nothing is refused
    assert sr.exact_turan(3).value == 0


def test_exact_turan_truncation():
    r = sr.exact_turan(7, max_nodes=2)
    assert not r.proof_of_optimality
    assert r.nodes <= 3
    # incumbent from the parity construction survives truncation
    assert r.value >= optimal_shift(7, 2).max_edges
    assert find_expansion(r.witness, 3) is None


def test_conflict_system_container():
    cs = sr.conflict_triples(6)
    assert isinstance(cs, sr.ConflictSystem)
    assert cs.n == 6
    assert len(cs.items) == 15
