"""Ensemble statistics of random-phase recoveries and quality metrics."""

from holofourier.statistics.models import MomentReport, PositionReport, QualityReport, WeightVector
from holofourier.statistics.moments import (
    lemma1_empirical_moments,
    lemma1_predicted_moments,
    windowed_energy_experiment,
    windowed_predicted_moments,
)
from holofourier.statistics.position import position_sensitivity
from holofourier.statistics.quality import quality_metrics

__all__ = [
    "MomentReport",
    "PositionReport",
    "QualityReport",
    "WeightVector",
    "lemma1_empirical_moments",
    "lemma1_predicted_moments",
    "position_sensitivity",
    "quality_metrics",
    "windowed_energy_experiment",
    "windowed_predicted_moments",
]
