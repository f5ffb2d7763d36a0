"""
Stepwise specification search
"""

__all__ = ["SpecStep", "SpecLadder", "backward_eliminate", "forward_select"]

from .selection import SpecLadder, SpecStep, backward_eliminate, forward_select
