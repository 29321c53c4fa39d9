import json

import pytest

from besforge import (
    DriverParams,
    ExhaustionError,
    ParameterError,
    find_be_s_configuration,
    group_system,
    min_span,
    paper_constant_d,
    verify_configuration,
)

PRACTICAL = DriverParams(t=4, tau_max=4, base_e=4)


def test_paper_constant_values():
    assert paper_constant_d(4, 1) == 1920048
    assert paper_constant_d(1, 10**6) == 24_000_000
    assert paper_constant_d(4, 80002) == 1920048  # both branches equal


def test_paper_constant_rejects_bad_input():
    with pytest.raises(ParameterError):
        paper_constant_d(0, 1)


def test_single_edge():
    report = find_be_s_configuration(group_system(4), 1, PRACTICAL)
    assert report.span == 3 and report.d_achieved == 2


def test_group3_e7_matches_oracle():
    lts = group_system(3)
    report = find_be_s_configuration(lts, 7, PRACTICAL)
    assert report.configuration.e == 7
    assert report.span == 9 == min_span(lts, 7).v
    assert report.d_achieved == 2


def test_group20_e40_contract():
    lts = group_system(20)
    params = DriverParams(t=4, tau_max=4, base_e=4, seed=1)
    report = find_be_s_configuration(lts, 40, params)
    assert report.configuration.e == 40
    assert verify_configuration(lts, report.configuration, report.span, 40)
    assert report.span <= 2 * 40  # greedy base alone achieves span <= 3e


def test_exact_edge_count_and_distinctness():
    lts = group_system(8)
    for e in (5, 11, 23):
        report = find_be_s_configuration(lts, e, PRACTICAL)
        assert len(report.configuration.edges) == e
        assert len(set(report.configuration.edges)) == e
        assert report.d_achieved == report.span - e


def test_recurse_frames_were_self_sustaining():
    lts = group_system(10)
    report = find_be_s_configuration(lts, 30, PRACTICAL)
    for frame in report.frames:
        if frame.branch == "recurse":
            assert frame.unpack_e >= frame.unpack_v > 0


def test_determinism_per_seed():
    lts = group_system(9)
    params = DriverParams(t=4, tau_max=4, base_e=4, seed=5)
    a = find_be_s_configuration(lts, 25, params)
    b = find_be_s_configuration(lts, 25, params)
    assert json.dumps(a.to_json_dict()) == json.dumps(b.to_json_dict())


def test_paper_mode_short_circuits_to_base():
    lts = group_system(5)
    params = DriverParams(t=4, k0=1, paper_mode=True)
    report = find_be_s_configuration(lts, 10, params)
    assert [f.branch for f in report.frames] == ["base"]
    assert not report.any_flagged
    assert report.d_achieved <= report.d_paper


def test_exhaustion_error():
    with pytest.raises(ExhaustionError):
        find_be_s_configuration(group_system(2), 5, PRACTICAL)


def test_oracle_dominance_small():
    lts = group_system(3)
    for e in range(1, 9):
        report = find_be_s_configuration(lts, e, PRACTICAL)
        assert report.span >= min_span(lts, e).v
