#include "edgekit/image.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "edgekit/errors.hpp"

namespace edgekit {

namespace detail {

void check_dimensions(int width, int height) {
    if (width < 1 || height < 1) {
        throw ParameterError("image dimensions must be positive, got " + std::to_string(width) + "x" +
                             std::to_string(height));
    }
}

void check_size(int width, int height, std::size_t size) {
    const auto expected = static_cast<std::size_t>(width) * static_cast<std::size_t>(height);
    if (size != expected) {
        throw ParameterError("pixel buffer holds " + std::to_string(size) + " values, " +
                             std::to_string(width) + "x" + std::to_string(height) + " image needs " +
                             std::to_string(expected));
    }
}

}  // namespace detail

std::size_t EdgeMap::count() const noexcept {
    const auto px = pixels();
    return static_cast<std::size_t>(std::count_if(px.begin(), px.end(), [](std::uint8_t v) { return v != 0; }));
}

double luminance(const Rgb& p) noexcept {
    const double y = kLumaR * p.r + kLumaG * p.g + kLumaB * p.b;
    return std::clamp(y, std::min({p.r, p.g, p.b}), std::max({p.r, p.g, p.b}));
}

GrayImage rgb_to_gray(const RgbImage& img) {
    GrayImage out(img.width(), img.height());
    std::transform(img.pixels().begin(), img.pixels().end(), out.pixels().begin(), luminance);
    return out;
}

}  // namespace edgekit
