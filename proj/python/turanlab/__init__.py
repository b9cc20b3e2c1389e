"""Reverse Markov inequalities for polynomials with restricted zeros."""

from ._turanlab import *  # noqa: F401,F403
from ._turanlab import Error, Polynomial, ClassSpec, Interval

__all__ = [name for name in dir() if not name.startswith("_")]
