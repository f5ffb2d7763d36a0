import numpy as np
import pytest

from default_rate.errors import DegenerateFit, SeriesTooShort
from default_rate.series import Period, Series
from default_rate.unitroot import (
    AdfModel,
    AdfOutcome,
    adf_critical_value,
    adf_regression,
    adf_test,
    classify,
    select_lags,
)
from default_rate.unitroot.adf import max_lag


def series(values, name="X"):
    return Series(name, Period(1990, 1), values)


def random_walk(seed, n):
    return series(np.cumsum(np.random.default_rng(seed).normal(size=n)))


def white_noise(seed, n):
    return series(np.random.default_rng(seed).normal(size=n))


def test_ramp_is_degenerate():
    with pytest.raises(DegenerateFit):
        adf_regression(series(np.arange(1.0, 29.0)), AdfModel.CONSTANT, 0)


def test_ten_points_against_hand_oracle(adf_series):
    x = adf_series
    outcome = adf_regression(series(x), AdfModel.NONE, 0)

    lagged, dx = x[:-1], np.diff(x)
    rho = (lagged @ dx) / (lagged @ lagged)
    e = dx - rho * lagged
    se = np.sqrt((e @ e) / (dx.size - 1) / (lagged @ lagged))

    assert outcome.rho_hat == pytest.approx(rho, rel=1e-8)
    assert outcome.rho_std_error == pytest.approx(se, rel=1e-8)
    assert outcome.adf_stat == pytest.approx(rho / se, rel=1e-8)
    assert outcome.effective_n == 9
    assert outcome.deterministic_terms == {}
    assert outcome.decision is None


def test_ten_points_cannot_be_classified(adf_series):
    outcome = adf_regression(series(adf_series), AdfModel.NONE, 0)
    assert outcome.critical_values == {}
    with pytest.raises(SeriesTooShort):
        outcome.classified("5%")


def test_too_short_for_lags():
    with pytest.raises(SeriesTooShort):
        adf_regression(series([1.0, 2.0, 1.5, 2.5, 2.0]), AdfModel.TREND, 2)


def test_deterministic_terms_follow_model():
    s = random_walk(0, 60)
    assert set(adf_regression(s, AdfModel.CONSTANT).deterministic_terms) == {"C"}
    assert set(adf_regression(s, AdfModel.TREND).deterministic_terms) == {"C", "TREND"}


def test_critical_values_use_effective_n():
    outcome = adf_regression(random_walk(1, 60), AdfModel.CONSTANT, 2)
    assert outcome.effective_n == 57
    assert outcome.critical_values["5%"] == adf_critical_value(AdfModel.CONSTANT, 57)


@pytest.mark.parametrize(
    "stat, cv, decision",
    [
        (-2.815412, -2.976263, "UnitRoot"),
        (-8.183802, -2.976263, "Stationary"),
        (-2.0, -2.0, "UnitRoot"),
    ],
)
def test_classify(stat, cv, decision):
    assert classify(stat, cv) == decision


def test_constant_model_shift_invariance():
    s = random_walk(2, 80)
    shifted = series(s.values + 123.0)
    a = adf_regression(s, AdfModel.CONSTANT, 1).adf_stat
    b = adf_regression(shifted, AdfModel.CONSTANT, 1).adf_stat
    assert a == pytest.approx(b, abs=1e-9)


def test_random_walk_not_rejected():
    kept = sum(
        adf_test(random_walk(seed, 200), AdfModel.CONSTANT, 0, "5%").decision
        == "UnitRoot"
        for seed in range(500)
    )
    assert kept >= 450


@pytest.mark.parametrize("model", list(AdfModel))
def test_size_on_random_walks(model):
    rejected = sum(
        adf_test(random_walk(seed, 100), model, 0, "5%").decision == "Stationary"
        for seed in range(1000)
    )
    assert 30 <= rejected <= 80


@pytest.mark.parametrize("model", list(AdfModel))
def test_power_on_white_noise(model):
    rejected = sum(
        adf_test(white_noise(seed, 100), model, 0, "5%").decision == "Stationary"
        for seed in range(200)
    )
    assert rejected >= 180


def test_max_lag():
    assert max_lag(28) == 3
    assert max_lag(100) == 4
    assert max_lag(1) == 0


@pytest.mark.parametrize("criterion", ["aic", "bic"])
def test_auto_lags(criterion):
    s = random_walk(3, 100)
    lags = select_lags(s, AdfModel.CONSTANT, criterion=criterion)
    assert 0 <= lags <= max_lag(100)
    outcome = adf_regression(s, AdfModel.CONSTANT, "auto", criterion)
    assert outcome.lags == lags


def test_auto_lags_bad_criterion():
    with pytest.raises(ValueError):
        select_lags(random_walk(3, 100), AdfModel.CONSTANT, criterion="hq")


def test_negative_lags():
    with pytest.raises(ValueError):
        adf_regression(random_walk(0, 50), AdfModel.CONSTANT, -1)


def test_outcome_dict_round_trip():
    outcome = adf_test(random_walk(4, 50), AdfModel.TREND, 1, 0.05)
    back = AdfOutcome.from_dict(outcome.to_dict())
    assert back.model is AdfModel.TREND
    assert back.to_dict() == outcome.to_dict()
