import sys
from pathlib import Path
from typing import Union

__all__ = [
    "Literal",
    "StrOrPath",
    "Decision",
    "DwVerdict",
    "WhiteVerdict",
    "JbVerdict",
    "Sign",
    "SignCheck",
    "Direction",
    "ReportFormat",
]

if sys.version_info.minor > 7:
    from typing import Literal
else:
    from typing_extensions import Literal

StrOrPath = Union[str, Path]

Decision = Literal["Stationary", "UnitRoot"]
DwVerdict = Literal["PositiveAutocorr", "NoAutocorr", "NegativeAutocorr"]
WhiteVerdict = Literal["Homoscedastic", "Heteroscedastic"]
JbVerdict = Literal["Normal", "NonNormal"]
Sign = Literal["Negative", "Positive", "Ambiguous"]
SignCheck = Literal["Conform", "NonConform", "NotApplicable"]
Direction = Literal["backward", "forward"]
ReportFormat = Literal["text", "structured"]
