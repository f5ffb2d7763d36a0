"""
Exceptions raised by the toolkit, all rooted at :class:`DefaultRateError`
"""

from typing import Iterable, Optional

__all__ = [
    "DefaultRateError",
    "NonPositiveValue",
    "NonFiniteValue",
    "SeriesTooShort",
    "RankDeficient",
    "InsufficientObservations",
    "DegenerateFit",
    "DegenerateResiduals",
    "MissingRegressor",
    "MissingIntercept",
    "OrderExceeded",
    "BadPeriodFormat",
    "NonConsecutivePeriods",
    "NonNumericCell",
    "DuplicateColumn",
    "EmptyFile",
    "MalformedCsv",
    "MissingColumn",
    "ConfigError",
]


class DefaultRateError(Exception):
    """base class of every error raised by default_rate"""


# series


class NonPositiveValue(DefaultRateError, ValueError):
    def __init__(self, name: str, index: int, value: float):
        self.name = name
        self.index = index
        self.value = value
        super().__init__(
            f"log of series {name} undefined: value {value!r} "
            f"at position {index} is not positive"
        )


class NonFiniteValue(DefaultRateError, ValueError):
    def __init__(self, name: str, index: int):
        self.name = name
        self.index = index
        super().__init__(f"series {name} holds a non finite value at position {index}")


class SeriesTooShort(DefaultRateError, ValueError):
    def __init__(self, name: str, length: int, required: int):
        self.name = name
        self.length = length
        self.required = required
        super().__init__(
            f"series {name} has {length} observations, at least {required} required"
        )


# estimation


class RankDeficient(DefaultRateError, ArithmeticError):
    def __init__(self, columns: Iterable[str]):
        self.columns = tuple(columns)
        super().__init__(
            "design matrix is rank deficient, collinear columns: "
            + ", ".join(self.columns)
        )


class InsufficientObservations(DefaultRateError, ValueError):
    def __init__(self, nobs: int, nparams: int, what: str = "regression"):
        self.nobs = nobs
        self.nparams = nparams
        super().__init__(
            f"{what} needs more observations than parameters: "
            f"{nobs} observations for {nparams} parameters"
        )


class DegenerateFit(DefaultRateError, ArithmeticError):
    def __init__(self, message: str = "perfect fit, residual variance is zero"):
        super().__init__(message)


class DegenerateResiduals(DefaultRateError, ArithmeticError):
    def __init__(self, message: str = "residuals are identically zero"):
        super().__init__(message)


class MissingRegressor(DefaultRateError, LookupError):
    def __init__(self, name: str):
        self.name = name
        super().__init__(f"no value supplied for regressor {name}")


class MissingIntercept(DefaultRateError, ValueError):
    def __init__(self, intercept: str = "C"):
        super().__init__(f"design matrix has no intercept column {intercept}")


class OrderExceeded(DefaultRateError, ArithmeticError):
    def __init__(self, name: str, max_diff: int):
        self.name = name
        self.max_diff = max_diff
        super().__init__(
            f"series {name} still has a unit root after {max_diff} differences"
        )


# csv ingestion


class BadPeriodFormat(DefaultRateError, ValueError):
    def __init__(self, text: str, row: Optional[int] = None):
        self.text = text
        self.row = row
        where = f" at row {row}" if row is not None else ""
        super().__init__(f"bad period {text!r}{where}, expected YYYYQn with n in 1..4")


class NonConsecutivePeriods(DefaultRateError, ValueError):
    def __init__(self, previous: str, current: str, row: int):
        self.previous = previous
        self.current = current
        self.row = row
        super().__init__(
            f"period {current} at row {row} does not follow {previous}"
        )


class NonNumericCell(DefaultRateError, ValueError):
    def __init__(self, row: int, column: str, text: str):
        self.row = row
        self.column = column
        self.text = text
        super().__init__(
            f"cell {text!r} at row {row}, column {column} is not a decimal"
        )


class DuplicateColumn(DefaultRateError, ValueError):
    def __init__(self, column: str):
        self.column = column
        super().__init__(f"column {column} appears more than once")


class EmptyFile(DefaultRateError, ValueError):
    def __init__(self, path: str):
        self.path = path
        super().__init__(f"file {path} holds no header or no data")


class MalformedCsv(DefaultRateError, ValueError):
    def __init__(self, path: str, reason: str):
        self.path = path
        super().__init__(f"file {path} is not a well formed csv: {reason}")


class MissingColumn(DefaultRateError, LookupError):
    def __init__(self, column: str):
        self.column = column
        super().__init__(f"column {column} not found in dataset")


class ConfigError(DefaultRateError, ValueError):
    pass
