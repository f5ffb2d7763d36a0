"""
Provides fixtures pointing at the bundled panel and generating simulated
panels on the fly
"""

import json
import os
import tempfile

import numpy as np
import pandas as pd
import pytest

__all__ = [
    "panel_path",
    "config_path",
    "golden_report",
    "golden_text",
    "matches_golden",
    "random_walk_panel_path",
    "random_walk_config_path",
    "ols_data",
    "adf_series",
]

test_data = os.path.join(os.path.dirname(__file__), "test_data")

# bundled files


@pytest.fixture(scope="session")
def panel_path():
    return os.path.join(test_data, "panel.csv")


@pytest.fixture(scope="session")
def config_path():
    return os.path.join(test_data, "default.cfg")


# outcome of the pipeline on the bundled files, computed independently of
# the package, with every number to 10 significant digits


@pytest.fixture(scope="session")
def golden_report():
    with open(os.path.join(test_data, "report_golden.json"), "rt") as f:
        return json.load(f)


@pytest.fixture(scope="session")
def golden_text():
    with open(os.path.join(test_data, "report_golden.txt"), "rt") as f:
        return f.read().splitlines()


def _assert_subset(actual, expected, path="report"):
    if isinstance(expected, dict):
        assert isinstance(actual, dict), path
        for key, value in expected.items():
            assert key in actual, f"{path}.{key} missing"
            _assert_subset(actual[key], value, f"{path}.{key}")
    elif isinstance(expected, list):
        assert isinstance(actual, list) and len(actual) == len(expected), path
        for i, (a, e) in enumerate(zip(actual, expected)):
            _assert_subset(a, e, f"{path}[{i}]")
    elif isinstance(expected, float):
        assert actual == pytest.approx(expected, rel=1e-6, abs=1e-9), path
    else:
        assert actual == expected, path


@pytest.fixture(scope="session")
def matches_golden(golden_report, golden_text):
    """
    checks a structured document against the golden values and, when given,
    that the golden lines appear in order in the text rendering
    """

    def check(document, text=None):
        _assert_subset(document, golden_report)
        if text is not None:
            lines = iter(text.splitlines())
            for expected in golden_text:
                assert any(line == expected for line in lines), expected

    return check


# simulated panel, EPARG_VOL integrated of order one


@pytest.fixture(scope="session")
def random_walk_panel_path():

    root = os.path.join(tempfile.gettempdir(), "default_rate_random_walk")
    path = os.path.join(root, "panel.csv")

    if not os.path.exists(path):
        os.makedirs(root, exist_ok=True)
        rng = np.random.default_rng(1234)
        n = 200

        # AR(0.8) increments, the level test with no lag is conservative
        increments = np.zeros(n)
        shocks = rng.normal(0.0, 0.01, n)
        for t in range(1, n):
            increments[t] = 0.8 * increments[t - 1] + shocks[t]
        eparg = 10.0 + np.cumsum(increments)

        pib = rng.normal(0.0, 1.0, n)
        tx_def = 0.1 - 0.02 * pib + rng.normal(0.0, 0.01, n)

        frame = pd.DataFrame(
            {
                "period": pd.period_range("1960Q1", periods=n, freq="Q").astype(str),
                "TX_DEF": tx_def,
                "LOGPIB_VOL": pib,
                "EPARG_VOL": eparg,
            }
        )
        frame.to_csv(path, index=False)

    return path


@pytest.fixture(scope="session")
def random_walk_config_path(random_walk_panel_path):
    path = os.path.join(os.path.dirname(random_walk_panel_path), "default.cfg")
    with open(path, "wt") as f:
        f.write(
            "[pipeline]\n"
            "dependent = tx_def\n"
            "regressors = logpib_vol, eparg_vol\n"
            "expected_signs = LOGPIB_VOL:negative, EPARG_VOL:negative\n"
        )
    return path


# small systems


@pytest.fixture
def ols_data():
    """8 observations, intercept and two regressors"""
    x1 = np.array([1.2, 2.3, 3.1, 4.8, 5.0, 6.7, 7.4, 8.9])
    x2 = np.array([0.5, -0.3, 1.1, 0.9, -1.4, 0.2, 1.8, -0.6])
    y = np.array([3.1, 4.0, 6.2, 8.1, 6.9, 9.8, 12.3, 11.0])
    return y, x1, x2


@pytest.fixture
def adf_series():
    return np.array([1.0, 1.4, 0.9, 1.7, 2.2, 1.6, 1.1, 1.9, 2.4, 2.0])
