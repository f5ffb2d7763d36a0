from collections import OrderedDict
from dataclasses import replace

import numpy as np
import pytest

from default_rate import ols
from default_rate.pipeline import (
    DEFAULT_EXPECTED_SIGNS,
    ExpectedSign,
    check_expected_signs,
)


def fit_with(coefficients):
    rng = np.random.default_rng(0)
    columns = OrderedDict(
        (name, rng.normal(size=20)) for name in coefficients if name != "C"
    )
    fitted = ols.fit(rng.normal(size=20), ols.DesignMatrix.from_columns(columns))
    return replace(fitted, coefficients=OrderedDict(coefficients))


def test_equation_7_against_expected_signs():
    fitted = fit_with(
        [
            ("C", 0.597018),
            ("LOGPIB_VOL", -0.140413),
            ("TX_DEBI", 1.399099),
            ("MAD_USD", 0.010964),
        ]
    )
    checks = check_expected_signs(fitted, DEFAULT_EXPECTED_SIGNS)
    assert list(checks) == [e.variable for e in DEFAULT_EXPECTED_SIGNS]
    assert checks == {
        "LOGPIB_VOL": "Conform",
        "TX_CHOM": "NotApplicable",
        "TX_DEBI": "Conform",
        "EPARG_VOL": "NotApplicable",
        "MAD_USD": "Conform",
        "MAD_EUR": "NotApplicable",
        "TX_INFLA": "NotApplicable",
    }


@pytest.mark.parametrize(
    "sign, beta, check",
    [
        ("Positive", 0.0, "NonConform"),
        ("Negative", 0.0, "NonConform"),
        ("Ambiguous", 0.0, "Conform"),
        ("Positive", -0.2, "NonConform"),
        ("Negative", 0.2, "NonConform"),
        ("Ambiguous", -5.0, "Conform"),
        ("Positive", 1e-12, "Conform"),
    ],
)
def test_three_way_rule(sign, beta, check):
    fitted = fit_with([("C", 1.0), ("X", beta)])
    assert check_expected_signs(fitted, [ExpectedSign("X", sign)]) == {"X": check}


def test_no_expectations():
    assert check_expected_signs(fit_with([("C", 1.0), ("X", 1.0)]), []) == {}
