import math

import pytest
from hypothesis import given, strategies as st

from turanhg import krawtchouk as kw
from turanhg.core import binom_exact


# hand-expanded rows of (1-z)^x (1+z)^(4-x)
KNOWN_N4 = {
    0: [1, 4, 6, 4, 1],
    1: [1, 2, 0, -2, -1],
    2: [1, 0, -2, 0, 1],
    3: [1, -2, 0, 2, -1],
    4: [1, -4, 6, -4, 1],
}


def test_known_rows_n4():
    for x, row in KNOWN_N4.items():
        assert kw.genfunc_row(4, x) == row
        assert [kw.kraw_eval(m, 4, x) for m in range(5)] == row


def test_eval_matches_genfunc_small():
    for n in range(0, 16):
        for x in range(n + 1):
            row = kw.genfunc_row(n, x)
            for m in range(n + 1):
                assert kw.kraw_eval(m, n, x) == row[m]


def test_eval_domain_errors():
    with pytest.raises(ValueError):
        kw.kraw_eval(-1, 4, 2)
    with pytest.raises(ValueError):
        kw.kraw_eval(5, 4, 2)
    with pytest.raises(ValueError):
        kw.kraw_eval(2, 4, 5)


@given(st.integers(0, 30).flatmap(lambda n: st.tuples(
    st.just(n), st.integers(0, n), st.integers(0, n))))
def test_reflection_symmetry(args):
    n, m, x = args
    # K_m(n-x) = (-1)^m K_m(x)
    assert kw.kraw_eval(m, n, n - x) == (-1) ** m * kw.kraw_eval(m, n, x)


@given(st.integers(0, 30).flatmap(lambda n: st.tuples(
    st.just(n), st.integers(0, n), st.integers(0, n))))
def test_dual_symmetry(args):
    n, m, x = args
    # C(n,x) K_m(x) = C(n,m) K_x(m)
    lhs = binom_exact(n, x) * kw.kraw_eval(m, n, x)
    rhs = binom_exact(n, m) * kw.kraw_eval(x, n, m)
    assert lhs == rhs


def test_orthogonality():
    # sum_x C(n,x) K_m(x) K_l(x) = 2^n C(n,m) [m == l]
    for n in range(1, 13):
        for m in range(n + 1):
            for l in range(m, n + 1):
                s = sum(
                    binom_exact(n, x) * kw.kraw_eval(m, n, x) * kw.kraw_eval(l, n, x)
                    for x in range(n + 1)
                )
                want = 2**n * binom_exact(n, m) if m == l else 0
                assert s == want


def test_top_values():
    for n in range(0, 20):
        for m in range(n + 1):
            assert kw.kraw_eval(m, n, 0) == binom_exact(n, m)
            assert kw.kraw_eval(m, n, n) == (-1) ** m * binom_exact(n, m)
            assert kw.kraw_eval(0, n, m) == 1


def test_shift_feasibility():
    assert kw.Shift(0).feasible(4)
    assert kw.Shift(2).feasible(4)
    assert not kw.Shift(1).feasible(4)  # parity mismatch
    assert kw.Shift(3).feasible(5)
    assert not kw.Shift(6).feasible(4)  # |2t| > n
    assert kw.Shift(-2).feasible(4)
    assert kw.Shift(4).part_sizes(8) == (6, 2)
    assert kw.Shift(-2).part_sizes(8) == (3, 5)


def test_shifted_form_matches_eval():
    for n in range(2, 25):
        for two_t in range(n % 2, n + 1, 2):
            x = (n + two_t) // 2
            for m in range(n + 1):
                assert kw.kraw_shifted(m, n, kw.Shift(two_t)) == kw.kraw_eval(m, n, x)


def test_shifted_form_rejects_negative_shift():
    with pytest.raises(ValueError):
        kw.kraw_shifted(2, 8, kw.Shift(-2))


def test_levenshtein_window_contains_roots():
    # outside [n/2 - sqrt(mn), n/2 + sqrt(mn)] the polynomial cannot vanish
    for n in range(1, 40):
        for m in range(1, n + 1):
            lo, hi = kw.levenshtein_window(m, n)
            assert lo == pytest.approx(n - hi, abs=1e-9)
            for x in range(n + 1):
                if x < lo or x > hi:
                    assert kw.kraw_eval(m, n, x) != 0


def test_optimal_shift_matches_full_scan():
    for k in (1, 2, 3):
        for n in range(2 * k, 26):
            fast = kw.optimal_shift(n, k)
            slow = kw.optimal_shift(n, k, full_scan=True)
            assert fast == slow


def test_optimal_shift_frozen_values():
    r = kw.optimal_shift(8, 2)
    assert r.max_edges == 40
    assert [s.two_t for s in r.maximizers] == [4]
    r = kw.optimal_shift(7, 2)  # tie
    assert r.max_edges == 20
    assert [s.two_t for s in r.maximizers] == [3, 5]
    r = kw.optimal_shift(6, 2)
    assert r.max_edges == 10
    assert [s.two_t for s in r.maximizers] == [4]


def test_optimal_shift_value_is_max():
    # report value actually dominates every feasible nonnegative shift
    for n in range(4, 30):
        rep = kw.optimal_shift(n, 2, full_scan=True)
        best = max(
            (math.comb(n, 4) - kw.kraw_eval(4, n, (n + tt) // 2)) // 2
            for tt in range(n % 2, n + 1, 2)
        )
        assert rep.max_edges == best


def test_optimal_shift_domain():
    with pytest.raises(ValueError):
        kw.optimal_shift(3, 2)
    with pytest.raises(ValueError):
        kw.optimal_shift(8, 0)
