import numpy as np
import pytest

import edgekit


def test_kernel_center_tap():
    taps = edgekit.gaussian_kernel(1.0)
    assert len(taps) == 7
    assert taps[3] == pytest.approx(0.399050, abs=1e-5)
    assert sum(taps) == pytest.approx(1.0, abs=1e-12)


def test_canny_on_step():
    image, truth = edgekit.synth_step(64, 64, 32, 0.5)
    assert image.shape == (64, 64) and image.dtype == np.float64
    edges = edgekit.canny(image)
    assert edges.dtype == np.bool_
    assert (edges[1:63].sum(axis=1) == 1).all()
    report = edgekit.score(edges, truth, 1.5)
    assert report["false_positive_rate"] == 0.0
    assert report["false_negative_rate"] == 0.0
    assert edgekit.count_components(edges) == 1


def test_marr_hildreth_and_contrast_scaling():
    image, truth = edgekit.synth_circle()
    noisy = edgekit.add_gaussian_noise(image, 0.05, 3)
    full = edgekit.marr_hildreth(noisy, 1.0, 0.04)
    half = edgekit.marr_hildreth(noisy * 0.5, 1.0, 0.02)
    assert full.any()
    assert np.array_equal(full, half)


def test_hysteresis_and_errors():
    plane = np.array([[0.0, 0.2, 0.9, 0.2, 0.0, 0.3]])
    assert edgekit.hysteresis(plane, 0.1, 0.5).tolist() == [[False, True, True, True, False, False]]
    with pytest.raises(ValueError):
        edgekit.canny(np.zeros((8, 8)), 1.0, 0.3, 0.1)
    with pytest.raises(ValueError):
        edgekit.canny(np.zeros(8))
