from enum import Enum

__all__ = ["AdfModel"]


class AdfModel(str, Enum):
    """
    Deterministic terms of the Dickey-Fuller regression
    ``dX_t = rho X_{t-1} (+ c) (+ b t) + ...``
    """

    NONE = "none"
    CONSTANT = "const"
    TREND = "trend"

    @property
    def terms(self):
        return {
            AdfModel.NONE: (),
            AdfModel.CONSTANT: ("C",),
            AdfModel.TREND: ("C", "TREND"),
        }[self]

    def __str__(self):
        return self.value
