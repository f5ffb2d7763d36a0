import pytest

from default_rate.unitroot import (
    LEVELS,
    AdfModel,
    adf_critical_value,
    adf_critical_values,
)


@pytest.mark.parametrize(
    "model, effective_n, published",
    [
        (AdfModel.CONSTANT, 27, -2.976263),
        (AdfModel.CONSTANT, 26, -2.981038),
        (AdfModel.NONE, 27, -1.954414),
        (AdfModel.NONE, 28, -1.953858),
        (AdfModel.NONE, 26, -1.958088),
        (AdfModel.CONSTANT, 20, -3.020686),
    ],
)
def test_published_five_percent_values(model, effective_n, published):
    value = adf_critical_value(model, effective_n, "5%")
    assert value == pytest.approx(published, abs=0.01)


def test_asymptote():
    assert adf_critical_value(AdfModel.NONE, 10 ** 9, "5%") == pytest.approx(
        -1.9393, abs=1e-3
    )


def test_level_notations_agree():
    assert adf_critical_value(AdfModel.TREND, 50, 0.05) == adf_critical_value(
        AdfModel.TREND, 50, "5%"
    )
    assert adf_critical_value(AdfModel.TREND, 50, 0.1) == adf_critical_value(
        AdfModel.TREND, 50, "10%"
    )


@pytest.mark.parametrize("model", list(AdfModel))
def test_levels_are_ordered(model):
    values = adf_critical_values(model, 40)
    assert list(values) == list(LEVELS)
    assert values["1%"] < values["5%"] < values["10%"] < 0


def test_more_terms_more_negative():
    assert (
        adf_critical_value(AdfModel.TREND, 40)
        < adf_critical_value(AdfModel.CONSTANT, 40)
        < adf_critical_value(AdfModel.NONE, 40)
    )


@pytest.mark.parametrize("level", ["2.5%", 0.025, "5"])
def test_untabulated_level(level):
    with pytest.raises(ValueError):
        adf_critical_value(AdfModel.CONSTANT, 40, level)


def test_too_few_observations():
    with pytest.raises(ValueError):
        adf_critical_value(AdfModel.CONSTANT, 9)
