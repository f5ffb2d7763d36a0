"""
Reading and writing quarterly panels as CSV.

The grammar is strict: a header row whose first column is ``period``,
periods written ``YYYYQn`` and strictly consecutive, decimals with ``.``
and no thousands separator, LF or CRLF line endings.
"""

import io
import re
from collections import OrderedDict
from typing import List, TextIO, Union

import numpy as np
import pandas as pd

from default_rate._types import StrOrPath
from default_rate.errors import (
    BadPeriodFormat,
    DuplicateColumn,
    EmptyFile,
    MalformedCsv,
    MissingColumn,
    NonConsecutivePeriods,
    NonNumericCell,
)
from default_rate.series import Dataset, Period

__all__ = ["load_csv", "to_csv_text", "write_csv"]

_DECIMAL_RE = re.compile(r"^[+-]?([0-9]+(\.[0-9]*)?|\.[0-9]+)([eE][+-]?[0-9]+)?$")

PERIOD_COLUMN = "period"


def _cell(value) -> str:
    # short rows come back as NaN from pandas
    return value.strip() if isinstance(value, str) else ""


def load_csv(path: StrOrPath) -> Dataset:
    """
    Loads a quarterly panel, column names are upper-cased.

    Parameters
    ----------
    path: str or Path
        UTF-8 CSV file

    Returns
    -------
    Dataset
        the periods of the first column and one decimal column per other
        header entry

    Example
    -------

    >>> load_csv("panel.csv").series("TX_DEF")
    Series(name=TX_DEF, start=2005Q1, n=28)
    """
    try:
        raw = pd.read_csv(
            path,
            header=None,
            dtype=str,
            keep_default_na=False,
            skip_blank_lines=True,
            encoding="utf-8",
        )
    except pd.errors.EmptyDataError:
        raise EmptyFile(str(path))
    except pd.errors.ParserError as e:
        raise MalformedCsv(str(path), str(e))

    if raw.shape[0] < 2:
        raise EmptyFile(str(path))

    header = [_cell(h) for h in raw.iloc[0]]
    if header[0].lower() != PERIOD_COLUMN:
        raise MissingColumn(PERIOD_COLUMN)
    names: List[str] = []
    for name in header[1:]:
        name = name.upper()
        if name in names:
            raise DuplicateColumn(name)
        names.append(name)

    periods: List[Period] = []
    for i, text in enumerate(raw.iloc[1:, 0], start=2):
        try:
            period = Period.parse(_cell(text))
        except BadPeriodFormat:
            raise BadPeriodFormat(_cell(text), row=i)
        if periods and period != periods[-1].successor():
            raise NonConsecutivePeriods(str(periods[-1]), str(period), i)
        periods.append(period)

    columns: "OrderedDict[str, np.ndarray]" = OrderedDict()
    for j, name in enumerate(names, start=1):
        values = np.empty(len(periods))
        for i, text in enumerate(raw.iloc[1:, j], start=2):
            text = _cell(text)
            if not _DECIMAL_RE.match(text):
                raise NonNumericCell(i, name, text)
            values[i - 2] = float(text)
        columns[name] = values

    return Dataset(tuple(periods), columns)


def _write(dataset: Dataset, stream: TextIO):
    stream.write(",".join([PERIOD_COLUMN] + dataset.names) + "\n")
    for i, period in enumerate(dataset.periods):
        cells = [str(period)]
        cells += [repr(float(dataset.columns[name][i])) for name in dataset.names]
        stream.write(",".join(cells) + "\n")


def to_csv_text(dataset: Dataset) -> str:
    """
    Serialises ``dataset`` with the shortest decimal that reads back to
    the same value, LF line endings
    """
    buffer = io.StringIO()
    _write(dataset, buffer)
    return buffer.getvalue()


def write_csv(dataset: Dataset, path: Union[StrOrPath, TextIO]):
    if hasattr(path, "write"):
        _write(dataset, path)  # type: ignore
    else:
        with open(path, "wt", encoding="utf-8", newline="") as f:
            _write(dataset, f)
