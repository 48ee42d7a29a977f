#include "edgekit/filtering.hpp"

#include <cmath>
#include <string>

#include "edgekit/errors.hpp"

namespace edgekit {

Kernel1D::Kernel1D(int radius, std::vector<double> taps) : radius_(radius), taps_(std::move(taps)) {
    if (radius < 0 || taps_.size() != static_cast<std::size_t>(2 * radius + 1)) {
        throw ParameterError("Kernel1D of radius " + std::to_string(radius) + " needs " +
                             std::to_string(2 * radius + 1) + " taps, got " + std::to_string(taps_.size()));
    }
}

Kernel2D::Kernel2D(int radius, std::vector<double> taps) : radius_(radius), taps_(std::move(taps)) {
    const auto side = static_cast<std::size_t>(2 * radius + 1);
    if (radius < 0 || taps_.size() != side * side) {
        throw ParameterError("Kernel2D of radius " + std::to_string(radius) + " needs " +
                             std::to_string(side * side) + " taps, got " + std::to_string(taps_.size()));
    }
}

Kernel2D Kernel2D::outer(const Kernel1D& kx, const Kernel1D& ky) {
    if (kx.radius() != ky.radius()) {
        throw ParameterError("outer product needs kernels of equal radius");
    }
    const int r = kx.radius();
    std::vector<double> taps;
    taps.reserve(static_cast<std::size_t>((2 * r + 1) * (2 * r + 1)));
    for (int dy = -r; dy <= r; ++dy) {
        for (int dx = -r; dx <= r; ++dx) {
            taps.push_back(ky[dy] * kx[dx]);
        }
    }
    return Kernel2D(r, std::move(taps));
}

Kernel2D Kernel2D::laplacian4() {
    return Kernel2D(1, {0.0, 1.0, 0.0, 1.0, -4.0, 1.0, 0.0, 1.0, 0.0});
}

int default_radius(double sigma) {
    if (!(sigma > 0.0) || !std::isfinite(sigma)) {
        throw ParameterError("sigma must be positive and finite, got " + std::to_string(sigma));
    }
    return std::max(1, static_cast<int>(std::ceil(3.0 * sigma)));
}

Kernel1D gaussian_kernel_1d(double sigma, int radius) {
    if (!(sigma > 0.0) || !std::isfinite(sigma)) {
        throw ParameterError("sigma must be positive and finite, got " + std::to_string(sigma));
    }
    if (radius < 1) {
        throw ParameterError("kernel radius must be >= 1, got " + std::to_string(radius));
    }
    std::vector<double> taps(static_cast<std::size_t>(2 * radius + 1));
    const double denom = 2.0 * sigma * sigma;
    for (int k = 0; k <= radius; ++k) {
        const double v = std::exp(-static_cast<double>(k) * k / denom);
        taps[static_cast<std::size_t>(radius + k)] = v;
        taps[static_cast<std::size_t>(radius - k)] = v;
    }
    // Summed from the tails inward, pairing symmetric taps.
    double sum = taps[static_cast<std::size_t>(radius)];
    for (int k = radius; k >= 1; --k) {
        sum += 2.0 * taps[static_cast<std::size_t>(radius + k)];
    }
    for (double& t : taps) {
        t /= sum;
    }
    return Kernel1D(radius, std::move(taps));
}

Kernel1D gaussian_kernel_1d(double sigma) {
    return gaussian_kernel_1d(sigma, default_radius(sigma));
}

GrayImage convolve_separable(const GrayImage& img, const Kernel1D& kx, const Kernel1D& ky) {
    const int w = img.width();
    const int h = img.height();
    GrayImage rows(w, h);
    const int rx = kx.radius();
    for (int y = 0; y < h; ++y) {
        for (int x = 0; x < w; ++x) {
            double acc = 0.0;
            for (int k = -rx; k <= rx; ++k) {
                acc += kx[k] * img.clamped(x + k, y);
            }
            rows(x, y) = acc;
        }
    }
    GrayImage out(w, h);
    const int ry = ky.radius();
    for (int y = 0; y < h; ++y) {
        for (int x = 0; x < w; ++x) {
            double acc = 0.0;
            for (int k = -ry; k <= ry; ++k) {
                acc += ky[k] * rows.clamped(x, y + k);
            }
            out(x, y) = acc;
        }
    }
    return out;
}

GrayImage convolve_2d(const GrayImage& img, const Kernel2D& k) {
    const int r = k.radius();
    GrayImage out(img.width(), img.height());
    for (int y = 0; y < img.height(); ++y) {
        for (int x = 0; x < img.width(); ++x) {
            double acc = 0.0;
            for (int dy = -r; dy <= r; ++dy) {
                for (int dx = -r; dx <= r; ++dx) {
                    acc += k.at(dx, dy) * img.clamped(x + dx, y + dy);
                }
            }
            out(x, y) = acc;
        }
    }
    return out;
}

GrayImage gaussian_smooth(const GrayImage& img, double sigma) {
    const Kernel1D g = gaussian_kernel_1d(sigma);
    return convolve_separable(img, g, g);
}

}  // namespace edgekit
