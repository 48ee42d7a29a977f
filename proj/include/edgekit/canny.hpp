#pragma once

#include "edgekit/image.hpp"

namespace edgekit {

/// Per-pixel gradient planes. direction = atan2(gy, gx) in (-pi, pi], image
/// coordinates (x right, y down).
struct GradientField {
    GrayImage gx;
    GrayImage gy;
    GrayImage magnitude;
    GrayImage direction;

    int width() const noexcept { return gx.width(); }
    int height() const noexcept { return gx.height(); }
};

/// Thresholds are absolute gradient-magnitude units.
struct CannyParams {
    double sigma = 1.0;
    double low = 0.05;
    double high = 0.15;

    /// Throws ParameterError unless sigma > 0 and 0 <= low <= high.
    void validate() const;
};

/// Central differences with replicated borders. Requires at least 3x3.
GradientField gradient(const GrayImage& img);

/// Keeps a magnitude iff it is >= the interpolated sample one pixel ahead along
/// the gradient and strictly > the sample one pixel behind. Samples are
/// linearly interpolated between the axis neighbor and the diagonal neighbor
/// that bracket the gradient direction. Border pixels are always suppressed.
GrayImage nonmax_suppress(const GradientField& g);

enum class FloodOrder {
    row_major_depth_first,
    reverse_breadth_first,
};

/// Seeds are pixels > high; the edge set is every pixel > low that is
/// 8-connected to a seed through pixels > low.
EdgeMap hysteresis(const GrayImage& thinned, double low, double high,
                   FloodOrder order = FloodOrder::row_major_depth_first);

/// Smoothing, gradient, and NMS: everything before thresholding.
GrayImage canny_thinned(const GrayImage& img, double sigma);

EdgeMap canny_detect(const GrayImage& img, const CannyParams& params);

namespace detail {

/// Relative tolerance under which two magnitudes count as equal in NMS and
/// zero-crossing tie-breaks. Absorbs rounding differences between
/// mathematically equal values.
inline constexpr double kTieTolerance = 1e-9;

bool nearly_equal(double a, double b) noexcept;

/// Throws ParameterError unless 0 <= low <= high.
void check_thresholds(double low, double high);

}  // namespace detail

}  // namespace edgekit
