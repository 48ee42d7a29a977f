#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <span>
#include <variant>
#include <vector>

namespace edgekit {

struct Rgb {
    double r = 0.0;
    double g = 0.0;
    double b = 0.0;

    friend bool operator==(const Rgb&, const Rgb&) = default;
};

namespace detail {

void check_dimensions(int width, int height);
void check_size(int width, int height, std::size_t size);

}  // namespace detail

/// Row-major grid of pixels. Dimensions are fixed at construction.
template <typename T>
class Grid {
public:
    using value_type = T;

    Grid(int width, int height, T fill = T{})
        : width_(width), height_(height) {
        detail::check_dimensions(width, height);
        data_.assign(static_cast<std::size_t>(width) * static_cast<std::size_t>(height), fill);
    }

    Grid(int width, int height, std::vector<T> data)
        : width_(width), height_(height), data_(std::move(data)) {
        detail::check_dimensions(width, height);
        detail::check_size(width, height, data_.size());
    }

    int width() const noexcept { return width_; }
    int height() const noexcept { return height_; }
    std::size_t size() const noexcept { return data_.size(); }

    T& operator()(int x, int y) { return data_[index(x, y)]; }
    const T& operator()(int x, int y) const { return data_[index(x, y)]; }

    /// Edge-replicated access: coordinates outside the grid clamp to the nearest border pixel.
    const T& clamped(int x, int y) const {
        x = x < 0 ? 0 : (x >= width_ ? width_ - 1 : x);
        y = y < 0 ? 0 : (y >= height_ ? height_ - 1 : y);
        return data_[index(x, y)];
    }

    bool contains(int x, int y) const noexcept {
        return x >= 0 && y >= 0 && x < width_ && y < height_;
    }

    std::span<T> pixels() noexcept { return data_; }
    std::span<const T> pixels() const noexcept { return data_; }

    friend bool operator==(const Grid&, const Grid&) = default;

private:
    std::size_t index(int x, int y) const noexcept {
        return static_cast<std::size_t>(y) * static_cast<std::size_t>(width_) + static_cast<std::size_t>(x);
    }

    int width_;
    int height_;
    std::vector<T> data_;
};

/// Normalized real intensities. Values read from files lie in [0, 1]; filter outputs may not.
using GrayImage = Grid<double>;
using RgbImage = Grid<Rgb>;

/// Boolean edge mask. Stored as bytes (0 or 1) rather than vector<bool>.
class EdgeMap : public Grid<std::uint8_t> {
public:
    using Grid<std::uint8_t>::Grid;

    EdgeMap(int width, int height) : Grid<std::uint8_t>(width, height, 0) {}

    bool edge(int x, int y) const { return (*this)(x, y) != 0; }
    void set(int x, int y, bool on = true) { (*this)(x, y) = on ? 1 : 0; }
    std::size_t count() const noexcept;
};

/// Luminance weights of MATLAB's rgb2gray (ITU-R BT.601, commonly quoted as
/// 0.2989 / 0.5870 / 0.1140). Full precision so the weights sum to 1.
inline constexpr double kLumaR = 0.298936021293775;
inline constexpr double kLumaG = 0.587043074451121;
inline constexpr double kLumaB = 0.114020904255103;

/// Weighted luminance, clamped into [min(r,g,b), max(r,g,b)] so gray input maps to itself exactly.
double luminance(const Rgb& p) noexcept;

GrayImage rgb_to_gray(const RgbImage& img);

using AnyImage = std::variant<GrayImage, RgbImage>;

/// Reads a PGM (P2/P5) or PPM (P3/P6) file. Samples are divided by maxval.
AnyImage read_image(const std::filesystem::path& path);

/// Reads any supported file and converts color input to gray.
GrayImage read_gray(const std::filesystem::path& path);

/// Parses an in-memory netpbm buffer. `source` names the buffer in error messages.
AnyImage parse_netpbm(std::span<const std::uint8_t> bytes, const std::string& source = "<memory>");

/// Binary 8-bit PGM encoding: clamp to [0, 1], then round half up of v * 255.
std::vector<std::uint8_t> encode_pgm(const GrayImage& img);
std::vector<std::uint8_t> encode_pgm(const EdgeMap& edges);

/// Writes via a temporary sibling file that is renamed into place, so a failed write
/// never leaves a partial file at `path`.
void write_image(const GrayImage& img, const std::filesystem::path& path);
void write_image(const EdgeMap& edges, const std::filesystem::path& path);

std::uint8_t quantize(double v) noexcept;

/// Atomic whole-file write shared by image and report output.
void write_file_atomic(const std::filesystem::path& path, std::span<const std::uint8_t> bytes);

}  // namespace edgekit
