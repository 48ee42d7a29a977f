"""Marr-Hildreth and Canny edge detection with a synthetic evaluation harness.

Images are 2-D float64 arrays indexed [row, column]; edge maps are 2-D bool arrays.
"""

from ._core import (
    ParameterError,
    add_gaussian_noise,
    canny,
    count_components,
    gaussian_kernel,
    gaussian_smooth,
    hysteresis,
    laplacian_of_smoothed,
    marr_hildreth,
    score,
    synth_circle,
    synth_rectangle,
    synth_step,
)

__all__ = [
    "ParameterError",
    "add_gaussian_noise",
    "canny",
    "count_components",
    "gaussian_kernel",
    "gaussian_smooth",
    "hysteresis",
    "laplacian_of_smoothed",
    "marr_hildreth",
    "score",
    "synth_circle",
    "synth_rectangle",
    "synth_step",
]
