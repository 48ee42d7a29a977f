#pragma once

// Brute-force reference computations for tests. Nothing here calls into the
// library's filtering or scoring code paths.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

#include "edgekit/image.hpp"

namespace oracle {

using Plane = std::vector<std::vector<double>>;  // [y][x]

inline Plane to_plane(const edgekit::GrayImage& img) {
    Plane p(static_cast<std::size_t>(img.height()), std::vector<double>(static_cast<std::size_t>(img.width())));
    for (int y = 0; y < img.height(); ++y) {
        for (int x = 0; x < img.width(); ++x) {
            p[y][x] = img(x, y);
        }
    }
    return p;
}

/// Direct Gaussian formula, normalized by a separately accumulated sum.
inline std::vector<double> gaussian_taps(double sigma, int radius) {
    std::vector<double> t;
    long double sum = 0.0L;
    for (int k = -radius; k <= radius; ++k) {
        const long double v = std::exp(-static_cast<long double>(k * k) / (2.0L * sigma * sigma));
        t.push_back(static_cast<double>(v));
        sum += v;
    }
    for (double& v : t) {
        v = static_cast<double>(v / sum);
    }
    return t;
}

/// Dense 2-D correlation with clamped borders over a [dy][dx] kernel.
inline Plane correlate(const Plane& img, const Plane& kernel) {
    const int h = static_cast<int>(img.size());
    const int w = static_cast<int>(img[0].size());
    const int r = static_cast<int>(kernel.size()) / 2;
    Plane out(h, std::vector<double>(w, 0.0));
    for (int y = 0; y < h; ++y) {
        for (int x = 0; x < w; ++x) {
            long double acc = 0.0L;
            for (int dy = -r; dy <= r; ++dy) {
                for (int dx = -r; dx <= r; ++dx) {
                    const int sy = std::clamp(y + dy, 0, h - 1);
                    const int sx = std::clamp(x + dx, 0, w - 1);
                    acc += static_cast<long double>(kernel[dy + r][dx + r]) * img[sy][sx];
                }
            }
            out[y][x] = static_cast<double>(acc);
        }
    }
    return out;
}

inline Plane outer(const std::vector<double>& kx, const std::vector<double>& ky) {
    Plane k(ky.size(), std::vector<double>(kx.size()));
    for (std::size_t i = 0; i < ky.size(); ++i) {
        for (std::size_t j = 0; j < kx.size(); ++j) {
            k[i][j] = ky[i] * kx[j];
        }
    }
    return k;
}

inline edgekit::GrayImage random_image(std::mt19937_64& rng, int w, int h) {
    std::uniform_real_distribution<double> u(0.0, 1.0);
    edgekit::GrayImage img(w, h);
    for (double& v : img.pixels()) {
        v = u(rng);
    }
    return img;
}

struct BruteScore {
    double fp = 0.0;
    double fn = 0.0;
    double mean_sq = 0.0;
    std::size_t matched = 0;
};

/// All-pairs distance scoring.
inline BruteScore score(const edgekit::EdgeMap& det, const edgekit::EdgeMap& truth, double tol) {
    std::vector<std::pair<int, int>> d;
    std::vector<std::pair<int, int>> t;
    for (int y = 0; y < det.height(); ++y) {
        for (int x = 0; x < det.width(); ++x) {
            if (det.edge(x, y)) d.emplace_back(x, y);
            if (truth.edge(x, y)) t.emplace_back(x, y);
        }
    }
    auto nearest = [](int x, int y, const std::vector<std::pair<int, int>>& set) {
        double best = INFINITY;
        for (auto [a, b] : set) {
            best = std::min(best, std::hypot(double(a - x), double(b - y)));
        }
        return best;
    };
    BruteScore s;
    double sq = 0.0;
    for (auto [x, y] : d) {
        const double n = nearest(x, y, t);
        if (n <= tol + 1e-12) {
            ++s.matched;
            sq += n * n;
        }
    }
    std::size_t covered = 0;
    for (auto [x, y] : t) {
        if (nearest(x, y, d) <= tol + 1e-12) ++covered;
    }
    s.fp = d.empty() ? 0.0 : double(d.size() - s.matched) / double(d.size());
    s.fn = t.empty() ? 0.0 : double(t.size() - covered) / double(t.size());
    s.mean_sq = s.matched ? sq / double(s.matched) : 0.0;
    return s;
}

/// 8-connected component count by repeated label propagation (no stack/queue).
inline std::size_t components(const edgekit::EdgeMap& m) {
    const int w = m.width();
    const int h = m.height();
    std::vector<int> label(static_cast<std::size_t>(w * h), -1);
    for (int i = 0; i < w * h; ++i) {
        if (m.pixels()[i]) label[i] = i;
    }
    bool changed = true;
    while (changed) {
        changed = false;
        for (int y = 0; y < h; ++y) {
            for (int x = 0; x < w; ++x) {
                int& l = label[y * w + x];
                if (l < 0) continue;
                for (int dy = -1; dy <= 1; ++dy) {
                    for (int dx = -1; dx <= 1; ++dx) {
                        const int nx = x + dx, ny = y + dy;
                        if (nx < 0 || ny < 0 || nx >= w || ny >= h) continue;
                        const int n = label[ny * w + nx];
                        if (n >= 0 && n < l) {
                            l = n;
                            changed = true;
                        }
                    }
                }
            }
        }
    }
    std::vector<int> roots;
    for (int l : label) {
        if (l >= 0) roots.push_back(l);
    }
    std::sort(roots.begin(), roots.end());
    return static_cast<std::size_t>(std::unique(roots.begin(), roots.end()) - roots.begin());
}

}  // namespace oracle
