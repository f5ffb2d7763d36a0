"""
Quarterly series and datasets
"""

from collections import OrderedDict
from dataclasses import dataclass, field
from typing import Dict, Iterable, List, Mapping, Sequence, Tuple

import numpy as np
import pandas as pd

from default_rate.errors import (
    DuplicateColumn,
    MissingColumn,
    NonFiniteValue,
    SeriesTooShort,
)

from .period import Period

__all__ = ["Series", "Dataset", "align"]


def _frozen_values(name: str, values: Iterable[float]) -> np.ndarray:
    array = np.array(values, dtype=np.float64).reshape(-1)
    bad = np.flatnonzero(~np.isfinite(array))
    if bad.size:
        raise NonFiniteValue(name, int(bad[0]))
    array.setflags(write=False)
    return array


@dataclass(frozen=True, eq=False)
class Series:
    """
    Named quarterly series, observation ``t`` belongs to period ``start + t``.

    Values are copied on construction and stored read-only, NaN and
    infinities are rejected.
    """

    name: str
    start: Period
    values: np.ndarray

    def __post_init__(self):
        values = _frozen_values(self.name, self.values)
        if values.size < 1:
            raise SeriesTooShort(self.name, 0, 1)
        object.__setattr__(self, "values", values)

    def __len__(self) -> int:
        return int(self.values.size)

    @property
    def end(self) -> Period:
        return self.start.shift(len(self) - 1)

    @property
    def periods(self) -> List[Period]:
        return [self.start.shift(t) for t in range(len(self))]

    def rename(self, name: str) -> "Series":
        return Series(name, self.start, self.values)

    def window(self, first: Period, last: Period) -> "Series":
        """restricts the series to the periods in ``[first, last]``"""
        lo = first.ordinal - self.start.ordinal
        hi = last.ordinal - self.start.ordinal
        if lo < 0 or hi >= len(self) or hi < lo:
            raise SeriesTooShort(self.name, len(self), hi - lo + 1)
        return Series(self.name, first, self.values[lo : hi + 1])

    def equals(self, other: "Series") -> bool:
        return (
            self.name == other.name
            and self.start == other.start
            and np.array_equal(self.values, other.values)
        )

    def __repr__(self):
        return f"Series(name={self.name}, start={self.start}, n={len(self)})"

    def to_dict(self) -> Dict:
        return {
            "name": self.name,
            "start": str(self.start),
            "values": [float(v) for v in self.values],
        }

    @classmethod
    def from_dict(cls, d: Mapping) -> "Series":
        return cls(d["name"], Period.parse(d["start"]), d["values"])


def align(*series: Series) -> Tuple[Series, ...]:
    """
    Trims every series to the period range they all cover
    """
    first = max(s.start for s in series)
    last = min(s.end for s in series)
    if last < first:
        raise SeriesTooShort(",".join(s.name for s in series), 0, 1)
    return tuple(s.window(first, last) for s in series)


@dataclass(frozen=True, eq=False)
class Dataset:
    """
    A quarterly panel: one period index shared by named decimal columns.
    """

    periods: Tuple[Period, ...]
    columns: "OrderedDict[str, np.ndarray]" = field(default_factory=OrderedDict)

    def __post_init__(self):
        periods = tuple(self.periods)
        columns: "OrderedDict[str, np.ndarray]" = OrderedDict()
        for name, values in self.columns.items():
            array = _frozen_values(name, values)
            if array.size != len(periods):
                raise ValueError(
                    f"column {name} has {array.size} values for {len(periods)} periods"
                )
            columns[name] = array
        object.__setattr__(self, "periods", periods)
        object.__setattr__(self, "columns", columns)

    @property
    def names(self) -> List[str]:
        return list(self.columns.keys())

    def __len__(self) -> int:
        return len(self.periods)

    def __contains__(self, name: str) -> bool:
        return name in self.columns

    def series(self, name: str) -> Series:
        if name not in self.columns:
            raise MissingColumn(name)
        return Series(name, self.periods[0], self.columns[name])

    @staticmethod
    def from_series(series: Sequence[Series]) -> "Dataset":
        """builds a dataset from series covering the same periods"""
        seen = set()
        for s in series:
            if s.name in seen:
                raise DuplicateColumn(s.name)
            seen.add(s.name)
        aligned = align(*series)
        return Dataset(
            tuple(aligned[0].periods),
            OrderedDict((s.name, s.values) for s in aligned),
        )

    def to_frame(self) -> pd.DataFrame:
        frame = pd.DataFrame(
            {name: np.array(values) for name, values in self.columns.items()},
            index=pd.Index([str(p) for p in self.periods], name="period"),
        )
        return frame

    def __repr__(self):
        return f"Dataset(periods={len(self)}, columns={self.names})"
