"""Amplitude quality metrics for recovered signals."""

import math

import numpy as np
import numpy.typing as npt

from holofourier.shared.arrays import as_complex_array
from holofourier.shared.exceptions import InvalidArgumentError, UndefinedMetricError
from holofourier.statistics.models import QualityReport


def quality_metrics(reference: npt.ArrayLike, recovered: npt.ArrayLike) -> QualityReport:
    """RMSE over amplitudes and PSNR against the reference peak.

    PSNR = 20 log10(max|reference| / RMSE), ``inf`` when RMSE is 0.

    Raises:
        InvalidArgumentError: If the shapes differ
        UndefinedMetricError: If the reference is identically zero
    """
    ref = np.abs(as_complex_array(reference, name="reference"))
    rec = np.abs(as_complex_array(recovered, name="recovered"))
    if ref.shape != rec.shape:
        raise InvalidArgumentError(f"Shapes differ: reference {ref.shape}, recovered {rec.shape}")

    peak = float(np.max(ref))
    if peak == 0.0:
        raise UndefinedMetricError("PSNR is undefined for an all-zero reference")

    rmse = float(np.sqrt(np.mean((ref - rec) ** 2)))
    psnr = math.inf if rmse == 0.0 else 20.0 * math.log10(peak / rmse)
    return QualityReport(rmse=rmse, psnr_db=psnr, peak=peak)
