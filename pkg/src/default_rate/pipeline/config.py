"""
Pipeline settings and their INI file form
"""

import configparser
from dataclasses import dataclass, field, replace
from typing import Any, Dict, Mapping, Tuple, Union

from default_rate._types import Direction, Literal, Sign, StrOrPath
from default_rate.diagnostics import DwBand
from default_rate.errors import ConfigError
from default_rate.ols import INTERCEPT
from default_rate.unitroot.critical_values import level_name

__all__ = [
    "ExpectedSign",
    "PipelineConfig",
    "DEFAULT_EXPECTED_SIGNS",
    "load_config",
]

SECTION = "pipeline"

_SIGNS = {"negative": "Negative", "positive": "Positive", "ambiguous": "Ambiguous"}


@dataclass(frozen=True)
class ExpectedSign:
    """theoretical direction of the effect of ``variable`` on the default rate"""

    variable: str
    sign: Sign

    def __post_init__(self):
        sign = _SIGNS.get(str(self.sign).lower())
        if sign is None:
            raise ConfigError(f"sign {self.sign} of {self.variable} not supported")
        object.__setattr__(self, "variable", self.variable.strip().upper())
        object.__setattr__(self, "sign", sign)

    @staticmethod
    def parse(text: str) -> "ExpectedSign":
        """parses ``NAME:negative``"""
        try:
            variable, sign = text.split(":")
        except ValueError:
            raise ConfigError(f"expected sign {text!r} is not written NAME:sign")
        return ExpectedSign(variable, sign.strip())  # type: ignore


DEFAULT_EXPECTED_SIGNS: Tuple[ExpectedSign, ...] = (
    ExpectedSign("LOGPIB_VOL", "Negative"),
    ExpectedSign("TX_CHOM", "Positive"),
    ExpectedSign("TX_DEBI", "Positive"),
    ExpectedSign("EPARG_VOL", "Negative"),
    ExpectedSign("MAD_USD", "Ambiguous"),
    ExpectedSign("MAD_EUR", "Ambiguous"),
    ExpectedSign("TX_INFLA", "Ambiguous"),
)


@dataclass(frozen=True)
class PipelineConfig:
    """
    Settings of :func:`run_pipeline`, names are upper-cased.

    Parameters
    ----------
    dependent: str
        the default rate column
    regressors: Tuple[str, ...]
        candidate explanatory columns
    alpha: float, default 0.05
        level of every test, one of 0.01, 0.05, 0.10
    adf_lags: int or "auto", default 0
        lagged differences of the ADF regressions
    max_diff: int, default 2
        differences allowed before a series is rejected
    dw_band: DwBand, default [1, 3]
        Durbin-Watson values read as no autocorrelation
    expected_signs: Tuple[ExpectedSign, ...]
        signs checked on the final model
    direction: "backward" or "forward", default "backward"
        stepwise search
    white_cross_terms: bool, default True
        include cross products in the White test
    lag_criterion: "aic" or "bic", default "bic"
        criterion of the automatic ADF lag choice
    workers: int, default 1
        threads running the ADF tests
    """

    dependent: str
    regressors: Tuple[str, ...]
    alpha: float = 0.05
    adf_lags: Union[int, Literal["auto"]] = 0
    max_diff: int = 2
    dw_band: DwBand = field(default_factory=DwBand)
    expected_signs: Tuple[ExpectedSign, ...] = ()
    direction: Direction = "backward"
    white_cross_terms: bool = True
    lag_criterion: Literal["aic", "bic"] = "bic"
    workers: int = 1

    def __post_init__(self):
        dependent = self.dependent.strip().upper()
        regressors = tuple(r.strip().upper() for r in self.regressors)
        object.__setattr__(self, "dependent", dependent)
        object.__setattr__(self, "regressors", regressors)
        object.__setattr__(self, "expected_signs", tuple(self.expected_signs))

        if not dependent:
            raise ConfigError("dependent variable missing")
        if not regressors:
            raise ConfigError("at least one regressor required")
        if dependent in regressors:
            raise ConfigError(f"dependent {dependent} listed among the regressors")
        if len(set(regressors)) != len(regressors):
            raise ConfigError("regressors listed more than once")
        if INTERCEPT in regressors:
            raise ConfigError(
                f"regressor {INTERCEPT} clashes with the name of the intercept, "
                "rename the column"
            )
        if not 0 < self.alpha < 1:
            raise ConfigError(f"alpha must lie in (0, 1), got {self.alpha}")
        try:
            level_name(self.alpha)
        except ValueError as e:
            raise ConfigError(str(e))
        if self.adf_lags != "auto" and (
            not isinstance(self.adf_lags, int) or self.adf_lags < 0
        ):
            raise ConfigError("adf_lags must be a non negative integer or auto")
        if self.max_diff < 1:
            raise ConfigError(f"max_diff must be positive, got {self.max_diff}")
        if self.direction not in ("backward", "forward"):
            raise ConfigError(f"direction {self.direction} not supported")
        if self.lag_criterion not in ("aic", "bic"):
            raise ConfigError(f"lag criterion {self.lag_criterion} not supported")
        if self.workers < 1:
            raise ConfigError(f"workers must be positive, got {self.workers}")
        declared = [e.variable for e in self.expected_signs]
        if len(set(declared)) != len(declared):
            raise ConfigError("a variable has more than one expected sign")

    def override(self, **values: Any) -> "PipelineConfig":
        """the same settings with the non None ``values`` replaced"""
        return replace(self, **{k: v for k, v in values.items() if v is not None})


def _split(text: str):
    return [item.strip() for item in text.split(",") if item.strip()]


def _parse(options: Mapping[str, str]) -> Dict[str, Any]:
    parsers = {
        "dependent": str,
        "regressors": lambda v: tuple(_split(v)),
        "alpha": float,
        "adf_lags": lambda v: "auto" if v.strip().lower() == "auto" else int(v),
        "max_diff": int,
        "dw_low": float,
        "dw_high": float,
        "direction": lambda v: v.strip().lower(),
        "white_cross_terms": lambda v: configparser.ConfigParser.BOOLEAN_STATES[
            v.strip().lower()
        ],
        "lag_criterion": lambda v: v.strip().lower(),
        "workers": int,
        "expected_signs": lambda v: tuple(ExpectedSign.parse(s) for s in _split(v)),
    }
    values: Dict[str, Any] = {}
    for key, text in options.items():
        if key not in parsers:
            raise ConfigError(f"unknown configuration key {key}")
        try:
            values[key] = parsers[key](text)
        except (ValueError, KeyError):
            raise ConfigError(f"bad value {text!r} for configuration key {key}")

    band = DwBand()
    if "dw_low" in values or "dw_high" in values:
        try:
            band = DwBand(values.pop("dw_low", 1.0), values.pop("dw_high", 3.0))
        except ValueError as e:
            raise ConfigError(str(e))
    values["dw_band"] = band
    return values


def load_config(path: StrOrPath, **overrides: Any) -> PipelineConfig:
    """
    Reads the ``[pipeline]`` section of an INI file, keyword arguments that
    are not None override the file values.

    Example
    -------

    .. code-block:: ini

        [pipeline]
        dependent = TX_DEF
        regressors = LOGPIB_VOL, TX_DEBI, MAD_USD
        alpha = 0.05
        expected_signs = LOGPIB_VOL:negative, TX_DEBI:positive
    """
    parser = configparser.ConfigParser(interpolation=None)
    try:
        with open(path, "rt", encoding="utf-8") as f:
            parser.read_file(f)
    except configparser.Error as e:
        raise ConfigError(f"{path}: {e}")
    if not parser.has_section(SECTION):
        raise ConfigError(f"{path}: section [{SECTION}] missing")
    values = _parse(dict(parser.items(SECTION)))
    values.update({k: v for k, v in overrides.items() if v is not None})
    for key in ("dependent", "regressors"):
        if key not in values:
            raise ConfigError(f"{path}: key {key} missing")
    return PipelineConfig(**values)
