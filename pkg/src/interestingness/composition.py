"""Interestingness as the composition of a relevance and an unexpectedness stage.

A pipeline always applies the unexpectedness stage to the raw input first and
hands its output to the relevance stage.  The order is fixed; there is
deliberately no way to chain a third stage.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Callable

from .errors import InvalidArgumentError

UnexpectednessStage = Callable[[Any], Any]
RelevanceStage = Callable[[Any], Any]


@dataclass(frozen=True)
class BipolarPipeline:
    relevance: RelevanceStage
    unexpectedness: UnexpectednessStage

    def __call__(self, items):
        return evaluate(self, items)


def compose(relevance: RelevanceStage, unexpectedness: UnexpectednessStage) -> BipolarPipeline:
    """Build ``relevance ∘ unexpectedness``."""
    return BipolarPipeline(relevance, unexpectedness)


def evaluate(pipeline: BipolarPipeline, items):
    candidates = pipeline.unexpectedness(items)
    return pipeline.relevance(candidates)


def multiply_scores(relevance: float, unexpectedness: float, norm: float = 1) -> float:
    """Multiplicative (commutative) special case of the composition.

    Integer or Fraction inputs give an exact Fraction result.
    """
    if norm <= 0:
        raise InvalidArgumentError(f"normalization factor must be > 0, got {norm}")
    if relevance < 0 or unexpectedness < 0:
        raise InvalidArgumentError("relevance and unexpectedness must be nonnegative")
    product = relevance * unexpectedness
    if isinstance(product, int) and isinstance(norm, int):
        return Fraction(product, norm)
    return product / norm
