import pytest

from default_rate.errors import BadPeriodFormat
from default_rate.series import Period


def test_parse_and_format():
    period = Period.parse("2005Q1")
    assert period == Period(2005, 1)
    assert str(period) == "2005Q1"


@pytest.mark.parametrize("text", ["2005Q5", "2005Q0", "05Q1", "2005-Q1", "2005q1", ""])
def test_parse_rejects(text):
    with pytest.raises(BadPeriodFormat):
        Period.parse(text)


def test_successor_wraps_the_year():
    assert Period(2005, 4).successor() == Period(2006, 1)
    assert Period(2005, 2).successor() == Period(2005, 3)


@pytest.mark.parametrize(
    "k, expected",
    [
        (0, Period(2005, 1)),
        (3, Period(2005, 4)),
        (4, Period(2006, 1)),
        (-1, Period(2004, 4)),
    ],
)
def test_shift(k, expected):
    assert Period(2005, 1).shift(k) == expected


def test_ordering():
    assert Period(2005, 4) < Period(2006, 1)
    assert max(Period(2007, 2), Period(2007, 3)) == Period(2007, 3)


def test_bad_quarter():
    with pytest.raises(BadPeriodFormat):
        Period(2005, 5)
