from collections import OrderedDict

import numpy as np
import pytest

from default_rate.errors import InsufficientObservations, MissingColumn
from default_rate.pipeline import (
    PipelineConfig,
    load_config,
    load_csv,
    render_report,
    run_pipeline,
)
from default_rate.series import Dataset, Period, align


@pytest.fixture(scope="module")
def bundled(panel_path, config_path):
    data = load_csv(panel_path)
    config = load_config(config_path)
    return data, config, run_pipeline(data, config)


def normal_equations(y, X):
    return np.linalg.solve(X.T @ X, X.T @ y)


def test_report_contents(bundled):
    data, config, report = bundled
    assert list(report.integration) == [config.dependent] + list(config.regressors)
    declared = {e.variable for e in config.expected_signs}
    assert set(report.sign_check) == declared
    assert list(report.sign_check) == [n for n in config.regressors if n in declared]
    assert report.ladder.candidates == config.regressors
    assert report.r_squared == report.ladder.final.r_squared
    assert set(report.final_equation) <= set(report.ladder.final.names)
    assert "C" in report.final_equation
    assert report.dependent == "TX_DEF"
    assert report.ladder.direction == "backward"


def test_final_regressors_significant(bundled):
    _, config, report = bundled
    final = report.ladder.final
    assert all(final.p_values[name] <= config.alpha for name in final.regressors)


def test_every_series_differenced_by_its_order(bundled):
    data, _, report = bundled
    orders = report.orders
    for name, integration in report.integration.items():
        assert integration.order in (0, 1, 2)
        assert len(integration.stationarized) == len(data) - integration.order
        start = Period(2005, 1).shift(integration.order)
        assert integration.stationarized.start == start
    for step in report.ladder.steps:
        assert step.fit.nobs == len(data) - max(orders.values())


def test_coefficients_match_oracle(bundled):
    _, _, report = bundled
    final = report.ladder.final
    stationary = [
        rep.stationarized.rename(name) for name, rep in report.integration.items()
    ]
    aligned = OrderedDict((s.name, s.values) for s in align(*stationary))
    y = aligned["TX_DEF"]
    X = np.column_stack(
        [np.ones(y.size)] + [aligned[name] for name in final.regressors]
    )
    beta = normal_equations(y, X)
    assert np.allclose([final.coefficients[n] for n in final.names], beta, rtol=1e-8)
    assert np.allclose(
        [report.final_equation[n] for n in final.names], beta, rtol=1e-8
    )


def test_determinism(panel_path, config_path):
    reports = [
        render_report(
            run_pipeline(load_csv(panel_path), load_config(config_path)), "structured"
        )
        for _ in range(2)
    ]
    assert reports[0] == reports[1]


def test_threads_give_the_same_report(bundled):
    data, config, report = bundled
    threaded = run_pipeline(data, config.override(workers=4))
    assert render_report(threaded, "structured") == render_report(report, "structured")


def test_forward_direction(bundled):
    data, config, _ = bundled
    report = run_pipeline(data, config.override(direction="forward"))
    assert report.ladder.direction == "forward"
    assert report.ladder.steps[0].fit.names == ("C",)


def test_missing_column(bundled):
    data, config, _ = bundled
    only_dependent = Dataset(data.periods, {"TX_DEF": data.columns["TX_DEF"]})
    with pytest.raises(MissingColumn):
        run_pipeline(only_dependent, config)


def test_too_few_observations():
    rng = np.random.default_rng(0)
    periods = tuple(Period(2005, 1).shift(t) for t in range(11))
    sign = np.array([(-1.0) ** t for t in range(11)])
    data = Dataset(
        periods,
        OrderedDict(
            (name, sign * (1.0 + 0.1 * rng.normal(size=11))) for name in ("Y", "A")
        ),
    )
    with pytest.raises(InsufficientObservations):
        run_pipeline(data, PipelineConfig("Y", ("A",)))


def test_integrated_regressor_enters_differenced(
    random_walk_panel_path, random_walk_config_path
):
    data = load_csv(random_walk_panel_path)
    report = run_pipeline(data, load_config(random_walk_config_path))

    assert report.integration["EPARG_VOL"].order == 1
    assert report.integration["TX_DEF"].order == 0
    assert report.integration["LOGPIB_VOL"].order == 0
    assert report.integration["EPARG_VOL"].stationarized.name == "EPARG_VOL_DIFF1"

    first = report.ladder.steps[0].fit
    assert first.names == ("C", "LOGPIB_VOL", "EPARG_VOL")
    assert first.nobs == len(data) - 1

    y = data.columns["TX_DEF"][1:]
    X = np.column_stack(
        [
            np.ones(y.size),
            data.columns["LOGPIB_VOL"][1:],
            np.diff(data.columns["EPARG_VOL"]),
        ]
    )
    beta = normal_equations(y, X)
    assert np.allclose([first.coefficients[n] for n in first.names], beta, rtol=1e-8)
    assert any("EPARG_VOL (I(1))" in note for note in report.notes)
