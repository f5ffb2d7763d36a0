import logging
from dataclasses import dataclass
from typing import Dict, Mapping, Optional

from default_rate import ols

from .functional import (
    DwBand,
    DwResult,
    JbResult,
    WhiteResult,
    durbin_watson,
    jarque_bera,
    white_design,
    white_test,
)

__all__ = ["DiagnosticsReport", "diagnose"]

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class DiagnosticsReport:
    """
    Residual validation of a fit, ``white`` is None when the model has no
    regressor besides the intercept
    """

    durbin_watson: DwResult
    white: Optional[WhiteResult]
    jarque_bera: JbResult

    def to_dict(self) -> Dict:
        return {
            "durbin_watson": self.durbin_watson.to_dict(),
            "white": self.white.to_dict() if self.white is not None else None,
            "jarque_bera": self.jarque_bera.to_dict(),
        }

    @classmethod
    def from_dict(cls, d: Mapping) -> "DiagnosticsReport":
        return cls(
            durbin_watson=DwResult.from_dict(d["durbin_watson"]),
            white=WhiteResult.from_dict(d["white"]) if d["white"] is not None else None,
            jarque_bera=JbResult.from_dict(d["jarque_bera"]),
        )


def diagnose(
    fit: ols.OlsFit,
    design: ols.DesignMatrix,
    alpha: float = 0.05,
    band: DwBand = DwBand(),
    cross_terms: bool = True,
) -> DiagnosticsReport:
    """
    Runs the Durbin-Watson, White and Jarque-Bera tests on the residuals of
    ``fit``. When the cross products would leave the White auxiliary
    regression without degrees of freedom the test falls back to levels and
    squares.
    """
    white = None
    if design.regressors:
        if cross_terms and fit.nobs <= white_design(design, True).ncols:
            logger.warning(
                "%d observations cannot support White cross terms for %d regressors, "
                "testing without cross terms",
                fit.nobs,
                len(design.regressors),
            )
            cross_terms = False
        white = white_test(fit, design, alpha, cross_terms)
    return DiagnosticsReport(
        durbin_watson=durbin_watson(fit.residuals, band),
        white=white,
        jarque_bera=jarque_bera(fit.residuals, alpha),
    )
