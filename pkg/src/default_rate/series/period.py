"""
Quarterly periods
"""

import re
from dataclasses import dataclass

from default_rate.errors import BadPeriodFormat

__all__ = ["Period"]

_PERIOD_RE = re.compile(r"^([0-9]{4})Q([1-4])$")


@dataclass(frozen=True, order=True)
class Period:
    """
    A calendar quarter, totally ordered by ``(year, quarter)``.

    Parameters
    ----------
    year: int
        calendar year
    quarter: int
        quarter of the year, in 1..4
    """

    year: int
    quarter: int

    def __post_init__(self):
        if not 1 <= self.quarter <= 4:
            raise BadPeriodFormat(f"{self.year}Q{self.quarter}")

    @property
    def ordinal(self) -> int:
        return self.year * 4 + self.quarter - 1

    @staticmethod
    def from_ordinal(ordinal: int) -> "Period":
        year, quarter = divmod(ordinal, 4)
        return Period(year, quarter + 1)

    def shift(self, k: int) -> "Period":
        """the period ``k`` quarters later (earlier if negative)"""
        return Period.from_ordinal(self.ordinal + k)

    def successor(self) -> "Period":
        return self.shift(1)

    @staticmethod
    def parse(text: str) -> "Period":
        """
        Parses the ``YYYYQn`` notation

        >>> Period.parse("2005Q4").successor()
        Period(year=2006, quarter=1)
        """
        match = _PERIOD_RE.match(text.strip())
        if not match:
            raise BadPeriodFormat(text)
        return Period(int(match.group(1)), int(match.group(2)))

    def __str__(self):
        return f"{self.year}Q{self.quarter}"
