#pragma once

#include "edgekit/image.hpp"

namespace edgekit {

/// Signed second-derivative field of the smoothed image.
class LaplacianResponse : public GrayImage {
public:
    explicit LaplacianResponse(GrayImage values) : GrayImage(std::move(values)) {}
    LaplacianResponse(int width, int height, std::vector<double> values)
        : GrayImage(width, height, std::move(values)) {}
};

struct MHParams {
    double sigma = 1.0;
    /// Minimum |a - b| across a sign change, in response units.
    double slope_threshold = 0.02;
    /// Threshold the crossing slopes with hysteresis (low, high) instead.
    bool use_hysteresis = false;
    double low = 0.0;
    double high = 0.0;

    void validate() const;
};

/// Gaussian smoothing (radius ceil(3 sigma)) followed by the 4-neighbor
/// Laplacian 0 1 0 / 1 -4 1 / 0 1 0 with replicated borders. The composition
/// is the discrete Laplacian of Gaussian.
LaplacianResponse laplacian_of_smoothed(const GrayImage& img, double sigma);

/// 4-neighbor Laplacian written as a sum of differences, so constant
/// neighborhoods give exactly 0.
GrayImage laplacian4(const GrayImage& img);

/// Slope of the strongest zero crossing assigned to each pixel, 0 where none.
///
/// A horizontally or vertically adjacent pair with strictly opposite signs is
/// a crossing of slope |a - b|, assigned to the member with the smaller
/// absolute value (the earlier one in scan order on a tie). A pixel that is
/// exactly 0 between opposite-signed axis neighbors is a crossing of slope
/// |left - right| (resp. |up - down|) assigned to itself.
GrayImage crossing_slopes(const LaplacianResponse& resp);

/// Pixels whose crossing slope exceeds slope_threshold.
EdgeMap zero_crossings(const LaplacianResponse& resp, double slope_threshold);

EdgeMap mh_detect(const GrayImage& img, const MHParams& params);

}  // namespace edgekit
