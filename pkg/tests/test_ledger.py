import itertools
from fractions import Fraction

import pytest
from hypothesis import given, settings
import hypothesis.strategies as st

from multidom import (
    Graph,
    Mode,
    build_ledger,
    check_harmonic_inequalities,
    check_harmonic_log_bound,
    check_neighborhood_bound,
    check_residual_decomposition,
    check_subset_cost_bound,
    check_sum_identity,
    greedy_dominating_set,
    greedy_kdominating_set,
    greedy_ktuple_dominating_set,
    harmonic,
    solve,
)
from conftest import graphs


def star(leaves):
    return Graph(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def path(n):
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def _solvable_modes(g, k_candidates=(1, 2, 3)):
    yield Mode.DOM, 1
    for k in k_candidates:
        if k <= g.min_degree() + 1:
            yield Mode.KTUPLE, k
    for k in k_candidates:
        yield Mode.KDOM, k


# -- harmonic numbers ----------------------------------------------------------


def test_harmonic_values():
    assert harmonic(0) == 0
    assert harmonic(1) == 1
    assert harmonic(3) == Fraction(11, 6)
    assert harmonic(4) == Fraction(25, 12)
    assert harmonic(7) == Fraction(363, 140)
    assert harmonic(8) == Fraction(761, 280)
    with pytest.raises(ValueError):
        harmonic(-1)


def test_harmonic_inequalities_small():
    assert check_harmonic_inequalities(200)
    assert check_harmonic_log_bound(500)
    with pytest.raises(ValueError):
        check_harmonic_inequalities(0)
    with pytest.raises(ValueError):
        check_harmonic_log_bound(0)


def test_harmonic_difference_bound_by_hand():
    # (x - y)/x <= H(x) - H(y) is tight at y = x - 1 scaled cases; sample a few.
    for x, y in ((1, 0), (5, 2), (10, 9), (100, 50)):
        assert Fraction(x - y, x) <= harmonic(x) - harmonic(y)


# -- frozen ledger examples ----------------------------------------------------


def test_dom_ledger_on_p3():
    g = path(3)
    sol = greedy_dominating_set(g)
    led = build_ledger(g, sol)
    for v in range(3):
        assert led.cost(v, 1) == Fraction(1, 3)
    assert check_sum_identity(led) == 1
    lhs, bound = check_neighborhood_bound(led, 1)
    assert lhs == 1
    assert bound == Fraction(11, 6)


def test_ktuple_ledger_on_star():
    g = star(6)
    sol = greedy_ktuple_dominating_set(g, 2)
    led = build_ledger(g, sol)
    # The first pick is the center with score 7; it contributes to every
    # vertex, so every cost charged to it is 1/7.
    for v in range(7):
        assert led.cost(v, 0) == Fraction(1, 7)
    assert check_sum_identity(led) == 7


def test_kdom_ledger_on_star():
    g = star(6)
    sol = greedy_kdominating_set(g, 2)
    led = build_ledger(g, sol)
    # Iteration 1 places 8 tokens, so every cost referencing it is 1/8.
    assert sol.iterations[0].score == 8
    for v in range(7):
        assert led.cost(v, 0) == Fraction(1, 8)
    assert check_sum_identity(led) == 7


def test_arrival_bookkeeping():
    g = star(6)
    led = build_ledger(g, greedy_ktuple_dominating_set(g, 2))
    # Center: covered once vertex 1 joins (its 2nd closed-neighborhood pick).
    assert led.arrivals[0] == (1, 2)
    assert led.contributors[0] == (0, 1)
    assert led.covered_at(0) == 2
    # Leaf 6 waits for its own selection.
    assert led.arrivals[6] == (1, 7)
    assert led.contributors[6] == (0, 6)
    led2 = build_ledger(g, greedy_kdominating_set(g, 2))
    # KDOM: the center tops itself up with 2 tokens at iteration 1.
    assert led2.arrivals[0] == (1, 1)
    assert led2.contributors[0] == (0, 0)


def test_build_ledger_rejects_wrong_graph():
    g = star(6)
    sol = greedy_dominating_set(g)
    with pytest.raises(ValueError):
        build_ledger(star(5), sol)


def test_cost_domain_checked():
    g = path(4)
    led = build_ledger(g, greedy_dominating_set(g))
    with pytest.raises(ValueError):
        led.cost(0, 3)  # not adjacent


def test_subset_bound_preconditions():
    g = star(6)
    led = build_ledger(g, greedy_kdominating_set(g, 2))
    with pytest.raises(ValueError):
        check_subset_cost_bound(led, 1, {1})  # too small for k=2
    with pytest.raises(ValueError):
        check_subset_cost_bound(led, 1, {1, 5})  # 5 not in N[1]
    assert check_subset_cost_bound(led, 1, {1, 0})


# -- property checks over random runs ------------------------------------------


@settings(deadline=None, max_examples=60)
@given(graphs(max_n=8))
def test_sum_identity_everywhere(g):
    for mode, k in _solvable_modes(g):
        sol = solve(g, mode, k)
        led = build_ledger(g, sol)
        total = check_sum_identity(led)
        assert isinstance(total, Fraction)
        assert total == sol.size


@settings(deadline=None, max_examples=40)
@given(graphs(max_n=8))
def test_neighborhood_bounds_everywhere(g):
    for mode, k in _solvable_modes(g):
        led = build_ledger(g, solve(g, mode, k))
        for w in range(g.n):
            lhs, bound = check_neighborhood_bound(led, w)
            assert lhs <= bound
            assert check_residual_decomposition(led, w)


@settings(deadline=None, max_examples=30)
@given(graphs(max_n=7))
def test_subset_bounds_exhaustive_small(g):
    for mode, k in _solvable_modes(g, k_candidates=(1, 2)):
        led = build_ledger(g, solve(g, mode, k))
        for v in range(g.n):
            closed = sorted(g.closed_neighborhood(v))
            for size in range(k, len(closed) + 1):
                for subset in itertools.combinations(closed, size):
                    assert check_subset_cost_bound(led, v, subset)


@settings(deadline=None, max_examples=40)
@given(graphs(max_n=8), st.integers(1, 3))
def test_arrival_structure(g, k):
    k = min(k, g.min_degree() + 1)
    led = build_ledger(g, greedy_ktuple_dominating_set(g, k))
    for v in range(g.n):
        arr = led.arrivals[v]
        assert len(arr) == k
        assert list(arr) == sorted(arr)
        # closed-neighborhood picks are distinct iterations and contributors
        assert len(set(arr)) == k
        assert len(set(led.contributors[v])) == k
        # cost monotonicity: earlier contributors are never cheaper than the last
        costs = [Fraction(1, led.scores[it - 1]) for it in arr]
        assert all(c <= costs[-1] for c in costs)


@settings(deadline=None, max_examples=40)
@given(graphs(max_n=8), st.integers(1, 3))
def test_residual_sequences(g, k):
    sol = greedy_kdominating_set(g, k)
    led = build_ledger(g, sol)
    for w in range(g.n):
        r = led.residual_sequence(w)
        assert r[0] == g.degree(w) + k
        assert r[-1] == 0
        assert all(a >= b for a, b in zip(r, r[1:]))
        assert all(x > 0 for x in r[:-1])


@settings(deadline=None, max_examples=40)
@given(graphs(max_n=8))
def test_residual_sequences_dom(g):
    led = build_ledger(g, greedy_dominating_set(g))
    for w in range(g.n):
        r = led.residual_sequence(w)
        assert r[0] == g.degree(w) + 1
        assert r[-1] == 0
        assert all(a >= b for a, b in zip(r, r[1:]))
