#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "edgekit/canny.hpp"
#include "edgekit/image.hpp"
#include "edgekit/marr_hildreth.hpp"

namespace edgekit {

/// A synthetic image together with its exact edge mask.
struct Scene {
    std::string name;
    GrayImage image;
    EdgeMap truth;
    /// Noise seed, when noise was applied.
    std::optional<std::uint64_t> seed;
};

struct EvalReport {
    double false_positive_rate = 0.0;
    double false_negative_rate = 0.0;
    /// Mean squared distance (px^2) from each matched detection to its nearest truth pixel.
    double mean_sq_distance = 0.0;
    std::size_t detected_count = 0;
    std::size_t truth_count = 0;
    /// Detections with a truth pixel within match_tolerance.
    std::size_t matched_count = 0;
    double match_tolerance = 0.0;

    /// Harmonic mean of (1 - FP) and (1 - FN); 0 when both are 0.
    double f_score() const noexcept;
};

inline constexpr double kDefaultTolerance = 1.5;

/// Dark (0.5 - contrast/2) for x < column, bright (0.5 + contrast/2) from column
/// on. Truth is the column itself.
Scene synth_step(int width, int height, int column, double contrast);

/// Bright disk on dark ground, pixel centers at integer coordinates. Truth is
/// every inside pixel with an outside 4-neighbor. The disk must keep a margin
/// of 2 px from every border.
Scene synth_circle(int size, double center_x, double center_y, double radius);

/// Bright filled rectangle spanning [x0, x1] x [y0, y1] inclusive. Truth is its
/// boundary. Requires 0 < x0 <= x1 < size - 1, same for y.
Scene synth_rectangle(int size, int x0, int y0, int x1, int y1);

/// Name of the pseudo-random algorithm behind add_gaussian_noise.
inline constexpr std::string_view kNoiseAlgorithm = "mt19937_64/box-muller";

/// Adds independent N(0, stddev^2) noise per pixel and clamps to [0, 1].
/// Uses std::mt19937_64 (whose output is fixed by the standard) and the
/// Box-Muller transform, so results do not depend on the standard library.
GrayImage add_gaussian_noise(const GrayImage& img, double stddev, std::uint64_t seed);

/// Tolerance-matched comparison of a detection against ground truth.
EvalReport score(const EdgeMap& detected, const EdgeMap& truth, double match_tolerance);

/// Number of 8-connected components of the mask.
std::size_t count_components(const EdgeMap& edges);

inline constexpr std::string_view kCannyName = "canny";
inline constexpr std::string_view kMarrHildrethName = "marr-hildreth";

struct ComparisonRow {
    std::string scene;
    std::optional<std::uint64_t> seed;
    std::string detector;
    double sigma = 0.0;
    /// Unset when the detector does not use the field.
    std::optional<double> low;
    std::optional<double> high;
    std::optional<double> slope_threshold;
    EvalReport report;
};

/// Runs both detectors on every scene. Rows follow scene order, then detector
/// name order ("canny" before "marr-hildreth").
std::vector<ComparisonRow> run_comparison(std::span<const Scene> scenes, const MHParams& mh,
                                          const CannyParams& canny, double tolerance);

/// Logarithmic threshold grid used for operating-point search:
/// 0.0025 * sqrt(2)^k for k = 0..15.
std::vector<double> threshold_grid();

struct CannyTuning {
    CannyParams params;
    double mean_f_score = 0.0;
};

struct MHTuning {
    MHParams params;
    double mean_f_score = 0.0;
};

/// Best (low, high) pair on the grid, by mean F-score over the scenes. Ties go
/// to the first pair in (high, low) ascending order.
CannyTuning tune_canny(std::span<const Scene> scenes, double sigma, double tolerance,
                       std::span<const double> grid);

/// Best slope threshold (or hysteresis pair when use_hysteresis) on the grid.
MHTuning tune_marr_hildreth(std::span<const Scene> scenes, double sigma, bool use_hysteresis, double tolerance,
                            std::span<const double> grid);

/// Built-in scene suites: "noisy-step", "circle", "rectangle-corners". One
/// scene per seed; noise is skipped when noise_stddev is 0.
std::vector<Scene> make_suite(std::string_view name, std::span<const std::uint64_t> seeds, double noise_stddev);

/// Default noise for a suite: 0.1 for noisy-step, 0 otherwise.
double default_suite_noise(std::string_view name);

std::vector<std::string_view> suite_names();

}  // namespace edgekit
