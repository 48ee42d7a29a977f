#include "edgekit/marr_hildreth.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "edgekit/canny.hpp"
#include "edgekit/errors.hpp"
#include "edgekit/filtering.hpp"

namespace edgekit {

namespace {

bool opposite(double a, double b) noexcept {
    return (a > 0.0 && b < 0.0) || (a < 0.0 && b > 0.0);
}

void assign(GrayImage& slopes, int x, int y, double slope) {
    slopes(x, y) = std::max(slopes(x, y), slope);
}

// Crossing between two adjacent pixels; p precedes q in scan order.
void pair_crossing(const GrayImage& r, GrayImage& slopes, int px, int py, int qx, int qy) {
    const double a = r(px, py);
    const double b = r(qx, qy);
    if (!opposite(a, b)) {
        return;
    }
    const double slope = std::fabs(a - b);
    const double ma = std::fabs(a);
    const double mb = std::fabs(b);
    if (ma <= mb || detail::nearly_equal(ma, mb)) {
        assign(slopes, px, py, slope);
    } else {
        assign(slopes, qx, qy, slope);
    }
}

}  // namespace

void MHParams::validate() const {
    if (!(sigma > 0.0) || !std::isfinite(sigma)) {
        throw ParameterError("sigma must be positive and finite, got " + std::to_string(sigma));
    }
    if (std::isnan(slope_threshold) || slope_threshold < 0.0) {
        throw ParameterError("slope threshold must be non-negative, got " + std::to_string(slope_threshold));
    }
    if (use_hysteresis) {
        detail::check_thresholds(low, high);
    }
}

GrayImage laplacian4(const GrayImage& img) {
    GrayImage out(img.width(), img.height());
    for (int y = 0; y < img.height(); ++y) {
        for (int x = 0; x < img.width(); ++x) {
            const double c = img(x, y);
            out(x, y) = (img.clamped(x - 1, y) - c) + (img.clamped(x + 1, y) - c) + (img.clamped(x, y - 1) - c) +
                        (img.clamped(x, y + 1) - c);
        }
    }
    return out;
}

LaplacianResponse laplacian_of_smoothed(const GrayImage& img, double sigma) {
    return LaplacianResponse(laplacian4(gaussian_smooth(img, sigma)));
}

GrayImage crossing_slopes(const LaplacianResponse& resp) {
    const int w = resp.width();
    const int h = resp.height();
    GrayImage slopes(w, h, 0.0);
    for (int y = 0; y < h; ++y) {
        for (int x = 0; x < w; ++x) {
            if (x + 1 < w) {
                pair_crossing(resp, slopes, x, y, x + 1, y);
            }
            if (y + 1 < h) {
                pair_crossing(resp, slopes, x, y, x, y + 1);
            }
            if (resp(x, y) == 0.0) {
                if (x > 0 && x + 1 < w && opposite(resp(x - 1, y), resp(x + 1, y))) {
                    assign(slopes, x, y, std::fabs(resp(x - 1, y) - resp(x + 1, y)));
                }
                if (y > 0 && y + 1 < h && opposite(resp(x, y - 1), resp(x, y + 1))) {
                    assign(slopes, x, y, std::fabs(resp(x, y - 1) - resp(x, y + 1)));
                }
            }
        }
    }
    return slopes;
}

EdgeMap zero_crossings(const LaplacianResponse& resp, double slope_threshold) {
    if (std::isnan(slope_threshold) || slope_threshold < 0.0) {
        throw ParameterError("slope threshold must be non-negative, got " + std::to_string(slope_threshold));
    }
    const GrayImage slopes = crossing_slopes(resp);
    EdgeMap edges(resp.width(), resp.height());
    std::transform(slopes.pixels().begin(), slopes.pixels().end(), edges.pixels().begin(),
                   [slope_threshold](double s) -> std::uint8_t { return s > slope_threshold ? 1 : 0; });
    return edges;
}

EdgeMap mh_detect(const GrayImage& img, const MHParams& params) {
    params.validate();
    const LaplacianResponse resp = laplacian_of_smoothed(img, params.sigma);
    if (!params.use_hysteresis) {
        return zero_crossings(resp, params.slope_threshold);
    }
    return hysteresis(crossing_slopes(resp), params.low, params.high);
}

}  // namespace edgekit
