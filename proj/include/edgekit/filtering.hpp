#pragma once

#include <vector>

#include "edgekit/image.hpp"

namespace edgekit {

/// Symmetric 1-D kernel with taps at offsets -radius..+radius.
class Kernel1D {
public:
    Kernel1D(int radius, std::vector<double> taps);

    int radius() const noexcept { return radius_; }
    /// Tap at offset k, -radius <= k <= radius.
    double operator[](int k) const { return taps_[static_cast<std::size_t>(k + radius_)]; }
    const std::vector<double>& taps() const noexcept { return taps_; }

private:
    int radius_;
    std::vector<double> taps_;
};

/// Square odd-sided 2-D kernel, row-major, indexed by offsets (dx, dy).
class Kernel2D {
public:
    Kernel2D(int radius, std::vector<double> taps);

    int radius() const noexcept { return radius_; }
    int side() const noexcept { return 2 * radius_ + 1; }
    double at(int dx, int dy) const {
        return taps_[static_cast<std::size_t>((dy + radius_) * side() + (dx + radius_))];
    }
    const std::vector<double>& taps() const noexcept { return taps_; }

    static Kernel2D outer(const Kernel1D& kx, const Kernel1D& ky);
    /// 0 1 0 / 1 -4 1 / 0 1 0
    static Kernel2D laplacian4();

private:
    int radius_;
    std::vector<double> taps_;
};

/// ceil(3 sigma), at least 1.
int default_radius(double sigma);

/// Sampled exp(-k^2 / 2 sigma^2), renormalized to unit sum after truncation.
Kernel1D gaussian_kernel_1d(double sigma, int radius);
Kernel1D gaussian_kernel_1d(double sigma);

// All convolutions are correlations (kernel not flipped) with edge-replicated
// borders. Every kernel in this library is symmetric, so the two coincide.

/// Horizontal pass with kx, then vertical pass with ky.
GrayImage convolve_separable(const GrayImage& img, const Kernel1D& kx, const Kernel1D& ky);

/// Dense direct evaluation. Reference path for convolve_separable.
GrayImage convolve_2d(const GrayImage& img, const Kernel2D& k);

GrayImage gaussian_smooth(const GrayImage& img, double sigma);

}  // namespace edgekit
