import pytest

from besforge import (
    GuardExceededError,
    ParameterError,
    exists_config,
    group_system,
    min_span,
    random_linear,
    verify_configuration,
)


def test_group2_all_edges():
    assert min_span(group_system(2), 4).v == 6


def test_single_edge_spans_three():
    assert min_span(group_system(5), 1).v == 3


def test_group3_seven_edges_span_nine():
    assert min_span(group_system(3), 7).v == 9


def test_witness_revalidates():
    lts = group_system(3)
    result = min_span(lts, 5)
    assert verify_configuration(lts, result.witness, result.v, 5)


def test_monotone_in_e():
    lts = group_system(3)
    values = [min_span(lts, e).v for e in range(1, 10)]
    assert values == sorted(values)


def test_exists_config():
    lts = group_system(2)
    assert exists_config(lts, 6, 4)
    assert not exists_config(lts, 5, 4)
    # any e edges span at most 3e
    assert exists_config(lts, 9, 3)


def test_guard_and_parameter_errors():
    lts = group_system(3)
    with pytest.raises(GuardExceededError):
        min_span(lts, 4, guard=10)
    with pytest.raises(ParameterError):
        min_span(lts, 10)
    with pytest.raises(ParameterError):
        min_span(lts, 0)


def test_brute_force_cross_check_on_random_instance():
    from itertools import combinations

    lts = random_linear(5, 5, 5, 10, seed=4)
    e = 4
    expected = min(
        len({k for x in sub for k in lts.edge_keys(x)})
        for sub in combinations(lts.edges, e)
    )
    assert min_span(lts, e).v == expected
