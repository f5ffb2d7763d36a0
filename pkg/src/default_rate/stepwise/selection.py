"""
Stepwise specification search: backward elimination and forward selection
"""

import logging
from dataclasses import dataclass
from typing import Dict, List, Mapping, Optional, Sequence, Tuple

from default_rate import ols
from default_rate._types import Direction
from default_rate.errors import MissingIntercept, RankDeficient

__all__ = ["SpecStep", "SpecLadder", "backward_eliminate", "forward_select"]

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SpecStep:
    """
    One specification of the ladder.

    In a backward ladder ``removed`` is the regressor eliminated after this
    fit, with its p-value, and ``t_ranking`` the ``|t|`` of every regressor of
    the fit in increasing order. In a forward ladder ``added`` is the
    regressor whose entry produced this fit.
    """

    fit: ols.OlsFit
    removed: Optional[str] = None
    removal_p_value: Optional[float] = None
    added: Optional[str] = None
    entry_p_value: Optional[float] = None
    t_ranking: Tuple[Tuple[str, float], ...] = ()

    def to_dict(self) -> Dict:
        return {
            "fit": self.fit.to_dict(),
            "removed": self.removed,
            "removal_p_value": self.removal_p_value,
            "added": self.added,
            "entry_p_value": self.entry_p_value,
            "t_ranking": [[name, abs_t] for name, abs_t in self.t_ranking],
        }

    @classmethod
    def from_dict(cls, d: Mapping) -> "SpecStep":
        return cls(
            fit=ols.OlsFit.from_dict(d["fit"]),
            removed=d["removed"],
            removal_p_value=d["removal_p_value"],
            added=d["added"],
            entry_p_value=d["entry_p_value"],
            t_ranking=tuple((name, abs_t) for name, abs_t in d["t_ranking"]),
        )


@dataclass(frozen=True)
class SpecLadder:
    """
    Fits of a stepwise search in order, ``candidates`` are the regressors of
    the searched design in design order
    """

    steps: Tuple[SpecStep, ...]
    alpha: float
    direction: Direction
    candidates: Tuple[str, ...] = ()

    @property
    def final(self) -> ols.OlsFit:
        return self.steps[-1].fit

    def __len__(self) -> int:
        return len(self.steps)

    def to_dict(self) -> Dict:
        return {
            "alpha": self.alpha,
            "direction": self.direction,
            "candidates": list(self.candidates),
            "steps": [step.to_dict() for step in self.steps],
        }

    @classmethod
    def from_dict(cls, d: Mapping) -> "SpecLadder":
        return cls(
            steps=tuple(SpecStep.from_dict(s) for s in d["steps"]),
            alpha=d["alpha"],
            direction=d["direction"],
            candidates=tuple(d["candidates"]),
        )


def _check(design: ols.DesignMatrix, alpha: float):
    if not 0 < alpha < 1:
        raise ValueError(f"alpha must lie in (0, 1), got {alpha}")
    if not design.has_intercept:
        raise MissingIntercept(ols.INTERCEPT)


def _t_ranking(fit: ols.OlsFit) -> Tuple[Tuple[str, float], ...]:
    ranking = sorted(
        ((name, abs(fit.t_stats[name])) for name in fit.regressors),
        key=lambda item: (item[1], item[0]),
    )
    return tuple(ranking)


def backward_eliminate(
    y: Sequence[float],
    design: ols.DesignMatrix,
    alpha: float = 0.05,
    dependent: str = "Y",
) -> SpecLadder:
    """
    Starts from the full design and removes, one at a time, the regressor
    with the largest p-value while it exceeds ``alpha``. Ties go to the
    smaller ``|t|``, then to the name. The intercept is never removed.

    Parameters
    ----------
    y: Sequence[float]
        dependent variable
    design: DesignMatrix
        candidate regressors, with intercept
    alpha: float
        significance level
    dependent: str
        name of the dependent variable

    Returns
    -------
    SpecLadder
        every fit in order, the last one has only significant regressors
    """
    _check(design, alpha)
    steps: List[SpecStep] = []
    current = design
    while True:
        fit = ols.fit(y, current, dependent=dependent)
        candidates = fit.regressors
        if not candidates:
            steps.append(SpecStep(fit))
            break
        worst = min(
            candidates,
            key=lambda name: (-fit.p_values[name], abs(fit.t_stats[name]), name),
        )
        p_value = fit.p_values[worst]
        if not p_value > alpha:
            steps.append(SpecStep(fit, t_ranking=_t_ranking(fit)))
            break
        logger.info("backward: removing %s, p-value %.6f", worst, p_value)
        steps.append(
            SpecStep(
                fit, removed=worst, removal_p_value=p_value, t_ranking=_t_ranking(fit)
            )
        )
        current = current.drop(worst)
    return SpecLadder(tuple(steps), alpha, "backward", tuple(design.regressors))


def forward_select(
    y: Sequence[float],
    design: ols.DesignMatrix,
    alpha: float = 0.05,
    dependent: str = "Y",
) -> SpecLadder:
    """
    Starts from the intercept alone and adds, one at a time, the candidate
    whose coefficient has the smallest p-value when added to the current
    model, as long as it does not exceed ``alpha``. Ties go to the larger
    ``|t|``, then to the name. A regressor once entered is never removed.
    """
    _check(design, alpha)
    selected = [ols.INTERCEPT]
    fit = ols.fit(y, design.select(selected), dependent=dependent)
    steps: List[SpecStep] = [SpecStep(fit)]
    remaining = list(design.regressors)

    while remaining:
        trials = []
        for name in remaining:
            try:
                trial = ols.fit(
                    y, design.select(selected + [name]), dependent=dependent
                )
            except RankDeficient:
                logger.debug("forward: %s collinear with the current model", name)
                continue
            p_value = trial.p_values[name]
            trials.append((p_value, -abs(trial.t_stats[name]), name, trial))
        if not trials:
            break
        p_value, _, best, trial = min(trials, key=lambda item: item[:3])
        if p_value > alpha:
            break
        logger.info("forward: adding %s, p-value %.6f", best, p_value)
        selected.append(best)
        remaining.remove(best)
        steps.append(
            SpecStep(
                trial,
                added=best,
                entry_p_value=p_value,
                t_ranking=_t_ranking(trial),
            )
        )
    return SpecLadder(tuple(steps), alpha, "forward", tuple(design.regressors))
