#include "edgekit/canny.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <numbers>
#include <string>
#include <vector>

#include "edgekit/errors.hpp"
#include "edgekit/filtering.hpp"

namespace edgekit {

namespace detail {

bool nearly_equal(double a, double b) noexcept {
    return std::fabs(a - b) <= kTieTolerance * std::max(std::fabs(a), std::fabs(b));
}

void check_thresholds(double low, double high) {
    if (std::isnan(low) || std::isnan(high) || low < 0.0 || high < 0.0) {
        throw ParameterError("thresholds must be non-negative, got low=" + std::to_string(low) +
                             " high=" + std::to_string(high));
    }
    if (low > high) {
        throw ParameterError("low threshold must be <= high threshold, got low=" + std::to_string(low) +
                             " > high=" + std::to_string(high));
    }
}

}  // namespace detail

void CannyParams::validate() const {
    if (!(sigma > 0.0) || !std::isfinite(sigma)) {
        throw ParameterError("sigma must be positive and finite, got " + std::to_string(sigma));
    }
    detail::check_thresholds(low, high);
}

GradientField gradient(const GrayImage& img) {
    const int w = img.width();
    const int h = img.height();
    if (w < 3 || h < 3) {
        throw ParameterError("gradient needs an image of at least 3x3, got " + std::to_string(w) + "x" +
                             std::to_string(h));
    }
    GradientField g{GrayImage(w, h), GrayImage(w, h), GrayImage(w, h), GrayImage(w, h)};
    for (int y = 0; y < h; ++y) {
        for (int x = 0; x < w; ++x) {
            const double gx = (img.clamped(x + 1, y) - img.clamped(x - 1, y)) / 2.0;
            const double gy = (img.clamped(x, y + 1) - img.clamped(x, y - 1)) / 2.0;
            g.gx(x, y) = gx;
            g.gy(x, y) = gy;
            g.magnitude(x, y) = std::sqrt(gx * gx + gy * gy);
            double dir = std::atan2(gy, gx);
            if (dir <= -std::numbers::pi) {
                dir = std::numbers::pi;
            }
            g.direction(x, y) = dir;
        }
    }
    return g;
}

GrayImage nonmax_suppress(const GradientField& g) {
    const int w = g.width();
    const int h = g.height();
    const GrayImage& mag = g.magnitude;
    GrayImage out(w, h, 0.0);
    for (int y = 1; y < h - 1; ++y) {
        for (int x = 1; x < w - 1; ++x) {
            const double m = mag(x, y);
            if (m == 0.0) {
                continue;
            }
            const double gx = g.gx(x, y);
            const double gy = g.gy(x, y);
            const int sx = gx < 0.0 ? -1 : 1;
            const int sy = gy < 0.0 ? -1 : 1;
            double ahead = 0.0;
            double behind = 0.0;
            if (std::fabs(gx) >= std::fabs(gy)) {
                // The sample point lies on column x +/- 1, between the
                // horizontal neighbor and the diagonal one.
                const double t = std::fabs(gy) / std::fabs(gx);
                ahead = (1.0 - t) * mag(x + sx, y) + t * mag(x + sx, y + sy);
                behind = (1.0 - t) * mag(x - sx, y) + t * mag(x - sx, y - sy);
            } else {
                const double t = std::fabs(gx) / std::fabs(gy);
                ahead = (1.0 - t) * mag(x, y + sy) + t * mag(x + sx, y + sy);
                behind = (1.0 - t) * mag(x, y - sy) + t * mag(x - sx, y - sy);
            }
            const bool ge_ahead = m >= ahead || detail::nearly_equal(m, ahead);
            const bool gt_behind = m > behind && !detail::nearly_equal(m, behind);
            if (ge_ahead && gt_behind) {
                out(x, y) = m;
            }
        }
    }
    return out;
}

EdgeMap hysteresis(const GrayImage& thinned, double low, double high, FloodOrder order) {
    detail::check_thresholds(low, high);
    const int w = thinned.width();
    const int h = thinned.height();
    EdgeMap edges(w, h);

    std::vector<int> seeds;
    for (int i = 0; i < w * h; ++i) {
        if (thinned.pixels()[static_cast<std::size_t>(i)] > high) {
            seeds.push_back(i);
        }
    }
    if (order == FloodOrder::reverse_breadth_first) {
        std::reverse(seeds.begin(), seeds.end());
    }

    std::deque<int> frontier;
    auto take = [&]() {
        int i = 0;
        if (order == FloodOrder::row_major_depth_first) {
            i = frontier.back();
            frontier.pop_back();
        } else {
            i = frontier.front();
            frontier.pop_front();
        }
        return i;
    };

    for (int seed : seeds) {
        if (edges.pixels()[static_cast<std::size_t>(seed)]) {
            continue;
        }
        edges.pixels()[static_cast<std::size_t>(seed)] = 1;
        frontier.push_back(seed);
        while (!frontier.empty()) {
            const int i = take();
            const int cx = i % w;
            const int cy = i / w;
            for (int dy = -1; dy <= 1; ++dy) {
                for (int dx = -1; dx <= 1; ++dx) {
                    const int nx = cx + dx;
                    const int ny = cy + dy;
                    if ((dx == 0 && dy == 0) || !thinned.contains(nx, ny)) {
                        continue;
                    }
                    if (edges(nx, ny) == 0 && thinned(nx, ny) > low) {
                        edges(nx, ny) = 1;
                        frontier.push_back(ny * w + nx);
                    }
                }
            }
        }
    }
    return edges;
}

GrayImage canny_thinned(const GrayImage& img, double sigma) {
    return nonmax_suppress(gradient(gaussian_smooth(img, sigma)));
}

EdgeMap canny_detect(const GrayImage& img, const CannyParams& params) {
    params.validate();
    return hysteresis(canny_thinned(img, params.sigma), params.low, params.high);
}

}  // namespace edgekit
