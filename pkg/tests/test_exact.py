import pytest
from hypothesis import given, settings

from multidom import (
    Graph,
    InstanceTooLargeError,
    KOutOfRangeError,
    Mode,
    exact_minimum,
    exact_minimum_naive,
    verify_monotonicity,
)
from conftest import graphs


def cycle(n):
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def star(leaves):
    return Graph(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def complete(n):
    return Graph(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def _validator(g, mode, k):
    if mode is Mode.DOM:
        return g.is_dominating
    if mode is Mode.KTUPLE:
        return lambda xs: g.is_ktuple_dominating(k, xs)
    return lambda xs: g.is_k_dominating(k, xs)


@pytest.mark.parametrize(
    "g,mode,k,expect",
    [
        (cycle(6), Mode.DOM, 1, 2),
        (cycle(5), Mode.KDOM, 2, 3),
        (star(6), Mode.KDOM, 2, 6),
        (star(6), Mode.KTUPLE, 2, 7),
        (cycle(4), Mode.DOM, 1, 2),
        (complete(5), Mode.KTUPLE, 3, 3),
        (complete(5), Mode.KDOM, 3, 3),
    ],
)
def test_spot_values(g, mode, k, expect):
    for solver in (exact_minimum, exact_minimum_naive):
        result = solver(g, mode, k)
        assert result.optimum == expect
        assert len(result.witness) == expect
        assert _validator(g, mode, k)(frozenset(result.witness))


def test_naive_witness_is_lexicographically_first():
    result = exact_minimum_naive(cycle(6), Mode.DOM)
    assert result.witness == (0, 3)


def test_kdom_k_above_max_degree_short_circuits():
    g = cycle(8)
    result = exact_minimum(g, Mode.KDOM, 3)
    assert result.optimum == 8
    assert result.witness == tuple(range(8))
    assert result.nodes_explored == 0
    # naive agrees the hard way
    assert exact_minimum_naive(cycle(6), Mode.KDOM, 3).optimum == 6


def test_size_caps():
    big = Graph(30, [(i, i + 1) for i in range(29)])
    with pytest.raises(InstanceTooLargeError):
        exact_minimum(big, Mode.DOM)
    exact_minimum(big, Mode.DOM, max_n=30)  # override works
    with pytest.raises(InstanceTooLargeError):
        exact_minimum_naive(Graph(9, []), Mode.DOM)


def test_k_range_errors():
    g = star(4)
    with pytest.raises(KOutOfRangeError):
        exact_minimum(g, Mode.KTUPLE, 3)
    with pytest.raises(KOutOfRangeError):
        exact_minimum(g, Mode.KDOM, 0)
    with pytest.raises(KOutOfRangeError):
        exact_minimum(g, Mode.DOM, 2)


def test_nodes_explored_reproducible():
    g = cycle(9)
    a = exact_minimum(g, Mode.KDOM, 2)
    b = exact_minimum(g, Mode.KDOM, 2)
    assert a.nodes_explored == b.nodes_explored
    assert a.witness == b.witness


def test_monotonicity_known():
    assert verify_monotonicity(cycle(6), 2)
    assert verify_monotonicity(complete(5), 4)
    with pytest.raises(ValueError):
        verify_monotonicity(cycle(6), 0)


@settings(deadline=None, max_examples=60)
@given(graphs(max_n=7))
def test_oracles_agree(g):
    assert exact_minimum(g, Mode.DOM).optimum == exact_minimum_naive(g, Mode.DOM).optimum
    for k in (1, 2, 3):
        if k <= g.min_degree() + 1:
            assert (
                exact_minimum(g, Mode.KTUPLE, k).optimum
                == exact_minimum_naive(g, Mode.KTUPLE, k).optimum
            )
        assert (
            exact_minimum(g, Mode.KDOM, k).optimum
            == exact_minimum_naive(g, Mode.KDOM, k).optimum
        )


@settings(deadline=None, max_examples=40)
@given(graphs(max_n=7))
def test_witnesses_always_valid(g):
    for mode, k in ((Mode.DOM, 1), (Mode.KDOM, 2)):
        result = exact_minimum(g, mode, k)
        assert _validator(g, mode, k)(frozenset(result.witness))
        assert len(result.witness) == result.optimum


@settings(deadline=None, max_examples=40)
@given(graphs(max_n=7))
def test_chain_inequalities(g):
    # gamma <= gamma_2 and gamma_k <= gamma_xk wherever both are defined.
    assert verify_monotonicity(g, 3)
