from collections import OrderedDict
from typing import Dict, Iterable

from default_rate import ols
from default_rate._types import SignCheck

from .config import ExpectedSign

__all__ = ["check_expected_signs"]


def check_expected_signs(
    fit: ols.OlsFit, expectations: Iterable[ExpectedSign]
) -> Dict[str, SignCheck]:
    """
    Compares the coefficients of ``fit`` with the expected signs: a signed
    expectation holds for a strictly negative (positive) coefficient, an
    ambiguous one always holds and variables missing from the fit are not
    applicable.
    """
    checks: Dict[str, SignCheck] = OrderedDict()
    for expected in expectations:
        if expected.variable not in fit.coefficients:
            checks[expected.variable] = "NotApplicable"
            continue
        beta = fit.coefficients[expected.variable]
        if expected.sign == "Ambiguous":
            conform = True
        elif expected.sign == "Negative":
            conform = beta < 0
        else:
            conform = beta > 0
        checks[expected.variable] = "Conform" if conform else "NonConform"
    return checks
