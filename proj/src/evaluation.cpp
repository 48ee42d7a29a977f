#include "edgekit/evaluation.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <string>

#include "edgekit/errors.hpp"

namespace edgekit {

namespace {

bool differs_from_4_neighbor(const GrayImage& img, int x, int y) {
    const double v = img(x, y);
    constexpr int dx[] = {1, -1, 0, 0};
    constexpr int dy[] = {0, 0, 1, -1};
    for (int k = 0; k < 4; ++k) {
        if (img.contains(x + dx[k], y + dy[k]) && img(x + dx[k], y + dy[k]) != v) {
            return true;
        }
    }
    return false;
}

// Squared distance from (x, y) to the nearest set pixel of mask within radius,
// or nullopt when none lies within max_sq.
std::optional<double> nearest_sq(const EdgeMap& mask, int x, int y, int radius, double max_sq) {
    std::optional<double> best;
    for (int dy = -radius; dy <= radius; ++dy) {
        for (int dx = -radius; dx <= radius; ++dx) {
            if (!mask.contains(x + dx, y + dy) || !mask.edge(x + dx, y + dy)) {
                continue;
            }
            const double d = static_cast<double>(dx * dx + dy * dy);
            if (d <= max_sq && (!best || d < *best)) {
                best = d;
            }
        }
    }
    return best;
}

double uniform01(std::mt19937_64& rng) {
    // 53 random bits -> [0, 1)
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace

double EvalReport::f_score() const noexcept {
    const double p = 1.0 - false_positive_rate;
    const double r = 1.0 - false_negative_rate;
    return p + r > 0.0 ? 2.0 * p * r / (p + r) : 0.0;
}

Scene synth_step(int width, int height, int column, double contrast) {
    if (column <= 0 || column >= width) {
        throw ParameterError("step column must lie in (0, width), got " + std::to_string(column) + " for width " +
                             std::to_string(width));
    }
    if (!(contrast > 0.0 && contrast <= 1.0)) {
        throw ParameterError("step contrast must lie in (0, 1], got " + std::to_string(contrast));
    }
    Scene s{"step", GrayImage(width, height), EdgeMap(width, height), std::nullopt};
    const double dark = 0.5 - contrast / 2.0;
    const double bright = 0.5 + contrast / 2.0;
    for (int y = 0; y < height; ++y) {
        for (int x = 0; x < width; ++x) {
            s.image(x, y) = x < column ? dark : bright;
        }
        s.truth.set(column, y);
    }
    return s;
}

Scene synth_circle(int size, double center_x, double center_y, double radius) {
    if (size < 1 || !(radius > 0.0) || !std::isfinite(center_x) || !std::isfinite(center_y)) {
        throw ParameterError("circle needs a positive size and radius");
    }
    const double margin = std::min({center_x, center_y, (size - 1) - center_x, (size - 1) - center_y});
    if (radius + 2.0 > margin) {
        throw ParameterError("circle of radius " + std::to_string(radius) + " at (" + std::to_string(center_x) +
                             ", " + std::to_string(center_y) + ") comes within 2 px of the border");
    }
    Scene s{"circle", GrayImage(size, size, 0.0), EdgeMap(size, size), std::nullopt};
    const double r2 = radius * radius;
    for (int y = 0; y < size; ++y) {
        for (int x = 0; x < size; ++x) {
            const double dx = x - center_x;
            const double dy = y - center_y;
            if (dx * dx + dy * dy <= r2) {
                s.image(x, y) = 1.0;
            }
        }
    }
    for (int y = 0; y < size; ++y) {
        for (int x = 0; x < size; ++x) {
            if (s.image(x, y) == 1.0 && differs_from_4_neighbor(s.image, x, y)) {
                s.truth.set(x, y);
            }
        }
    }
    if (s.truth.count() == 0) {
        throw ParameterError("circle of radius " + std::to_string(radius) + " covers no pixel center");
    }
    return s;
}

Scene synth_rectangle(int size, int x0, int y0, int x1, int y1) {
    if (!(0 < x0 && x0 <= x1 && x1 < size - 1 && 0 < y0 && y0 <= y1 && y1 < size - 1)) {
        throw ParameterError("rectangle [" + std::to_string(x0) + "," + std::to_string(x1) + "]x[" +
                             std::to_string(y0) + "," + std::to_string(y1) + "] must satisfy 0 < lo <= hi < " +
                             std::to_string(size - 1));
    }
    Scene s{"rectangle", GrayImage(size, size, 0.0), EdgeMap(size, size), std::nullopt};
    for (int y = y0; y <= y1; ++y) {
        for (int x = x0; x <= x1; ++x) {
            s.image(x, y) = 1.0;
            if (x == x0 || x == x1 || y == y0 || y == y1) {
                s.truth.set(x, y);
            }
        }
    }
    return s;
}

GrayImage add_gaussian_noise(const GrayImage& img, double stddev, std::uint64_t seed) {
    if (std::isnan(stddev) || stddev < 0.0) {
        throw ParameterError("noise stddev must be non-negative, got " + std::to_string(stddev));
    }
    if (stddev == 0.0) {
        return img;
    }
    std::mt19937_64 rng(seed);
    GrayImage out = img;
    auto px = out.pixels();
    for (std::size_t i = 0; i < px.size(); i += 2) {
        const double u1 = 1.0 - uniform01(rng);  // (0, 1]
        const double u2 = uniform01(rng);
        const double rho = std::sqrt(-2.0 * std::log(u1));
        const double theta = 2.0 * std::numbers::pi * u2;
        px[i] = std::clamp(px[i] + stddev * rho * std::cos(theta), 0.0, 1.0);
        if (i + 1 < px.size()) {
            px[i + 1] = std::clamp(px[i + 1] + stddev * rho * std::sin(theta), 0.0, 1.0);
        }
    }
    return out;
}

EvalReport score(const EdgeMap& detected, const EdgeMap& truth, double match_tolerance) {
    if (detected.width() != truth.width() || detected.height() != truth.height()) {
        throw ParameterError("score needs equal dimensions, got " + std::to_string(detected.width()) + "x" +
                             std::to_string(detected.height()) + " vs " + std::to_string(truth.width()) + "x" +
                             std::to_string(truth.height()));
    }
    if (std::isnan(match_tolerance) || match_tolerance < 0.0) {
        throw ParameterError("match tolerance must be non-negative, got " + std::to_string(match_tolerance));
    }
    const int w = detected.width();
    const int h = detected.height();
    const double max_sq = match_tolerance * match_tolerance;
    const int radius = static_cast<int>(std::min<double>(std::floor(match_tolerance), std::max(w, h)));

    EvalReport rep;
    rep.match_tolerance = match_tolerance;
    double sq_sum = 0.0;
    std::size_t covered = 0;
    for (int y = 0; y < h; ++y) {
        for (int x = 0; x < w; ++x) {
            if (detected.edge(x, y)) {
                ++rep.detected_count;
                if (const auto d = nearest_sq(truth, x, y, radius, max_sq)) {
                    ++rep.matched_count;
                    sq_sum += *d;
                }
            }
            if (truth.edge(x, y)) {
                ++rep.truth_count;
                if (nearest_sq(detected, x, y, radius, max_sq)) {
                    ++covered;
                }
            }
        }
    }
    if (rep.detected_count > 0) {
        rep.false_positive_rate =
            static_cast<double>(rep.detected_count - rep.matched_count) / static_cast<double>(rep.detected_count);
    }
    if (rep.truth_count > 0) {
        rep.false_negative_rate =
            static_cast<double>(rep.truth_count - covered) / static_cast<double>(rep.truth_count);
    }
    if (rep.matched_count > 0) {
        rep.mean_sq_distance = sq_sum / static_cast<double>(rep.matched_count);
    }
    return rep;
}

std::size_t count_components(const EdgeMap& edges) {
    const int w = edges.width();
    const int h = edges.height();
    std::vector<std::uint8_t> seen(edges.size(), 0);
    std::vector<int> stack;
    std::size_t components = 0;
    for (int start = 0; start < w * h; ++start) {
        if (!edges.pixels()[static_cast<std::size_t>(start)] || seen[static_cast<std::size_t>(start)]) {
            continue;
        }
        ++components;
        seen[static_cast<std::size_t>(start)] = 1;
        stack.push_back(start);
        while (!stack.empty()) {
            const int i = stack.back();
            stack.pop_back();
            for (int dy = -1; dy <= 1; ++dy) {
                for (int dx = -1; dx <= 1; ++dx) {
                    const int nx = i % w + dx;
                    const int ny = i / w + dy;
                    if (!edges.contains(nx, ny)) {
                        continue;
                    }
                    const auto j = static_cast<std::size_t>(ny * w + nx);
                    if (edges.pixels()[j] && !seen[j]) {
                        seen[j] = 1;
                        stack.push_back(static_cast<int>(j));
                    }
                }
            }
        }
    }
    return components;
}

std::vector<ComparisonRow> run_comparison(std::span<const Scene> scenes, const MHParams& mh,
                                          const CannyParams& canny, double tolerance) {
    if (scenes.empty()) {
        throw ParameterError("run_comparison needs at least one scene");
    }
    mh.validate();
    canny.validate();
    std::vector<ComparisonRow> rows;
    rows.reserve(scenes.size() * 2);
    for (const Scene& scene : scenes) {
        ComparisonRow c{scene.name, scene.seed, std::string(kCannyName), canny.sigma, canny.low, canny.high,
                        std::nullopt, score(canny_detect(scene.image, canny), scene.truth, tolerance)};
        rows.push_back(std::move(c));

        ComparisonRow m{scene.name, scene.seed, std::string(kMarrHildrethName), mh.sigma, std::nullopt,
                        std::nullopt, std::nullopt, score(mh_detect(scene.image, mh), scene.truth, tolerance)};
        if (mh.use_hysteresis) {
            m.low = mh.low;
            m.high = mh.high;
        } else {
            m.slope_threshold = mh.slope_threshold;
        }
        rows.push_back(std::move(m));
    }
    return rows;
}

std::vector<double> threshold_grid() {
    std::vector<double> grid;
    for (int k = 0; k < 16; ++k) {
        grid.push_back(0.0025 * std::pow(std::numbers::sqrt2, k));
    }
    return grid;
}

namespace {

struct Candidate {
    double low;
    double high;
};

// Best candidate by mean F-score; planes[i] is scene i's plane before thresholding.
std::pair<Candidate, double> best_hysteresis(std::span<const Scene> scenes, std::span<const GrayImage> planes,
                                             std::span<const Candidate> candidates, double tolerance) {
    Candidate best = candidates.front();
    double best_f = -1.0;
    for (const Candidate& c : candidates) {
        double total = 0.0;
        for (std::size_t i = 0; i < scenes.size(); ++i) {
            total += score(hysteresis(planes[i], c.low, c.high), scenes[i].truth, tolerance).f_score();
        }
        const double mean = total / static_cast<double>(scenes.size());
        if (mean > best_f) {
            best_f = mean;
            best = c;
        }
    }
    return {best, best_f};
}

std::vector<Candidate> pairs(std::span<const double> grid) {
    std::vector<Candidate> out;
    for (std::size_t hi = 0; hi < grid.size(); ++hi) {
        for (std::size_t lo = 0; lo <= hi; ++lo) {
            out.push_back({grid[lo], grid[hi]});
        }
    }
    return out;
}

void check_tuning_input(std::span<const Scene> scenes, std::span<const double> grid) {
    if (scenes.empty() || grid.empty()) {
        throw ParameterError("tuning needs at least one scene and one grid value");
    }
}

}  // namespace

CannyTuning tune_canny(std::span<const Scene> scenes, double sigma, double tolerance, std::span<const double> grid) {
    check_tuning_input(scenes, grid);
    std::vector<GrayImage> planes;
    for (const Scene& s : scenes) {
        planes.push_back(canny_thinned(s.image, sigma));
    }
    const auto candidates = pairs(grid);
    const auto [best, f] = best_hysteresis(scenes, planes, candidates, tolerance);
    CannyTuning out{CannyParams{sigma, best.low, best.high}, f};
    out.params.validate();
    return out;
}

MHTuning tune_marr_hildreth(std::span<const Scene> scenes, double sigma, bool use_hysteresis, double tolerance,
                            std::span<const double> grid) {
    check_tuning_input(scenes, grid);
    std::vector<GrayImage> planes;
    for (const Scene& s : scenes) {
        planes.push_back(crossing_slopes(laplacian_of_smoothed(s.image, sigma)));
    }
    MHTuning out;
    out.params.sigma = sigma;
    out.params.use_hysteresis = use_hysteresis;
    if (use_hysteresis) {
        const auto candidates = pairs(grid);
        const auto [best, f] = best_hysteresis(scenes, planes, candidates, tolerance);
        out.params.low = best.low;
        out.params.high = best.high;
        out.mean_f_score = f;
    } else {
        // A single threshold t is hysteresis with low == high == t.
        std::vector<Candidate> candidates;
        for (double t : grid) {
            candidates.push_back({t, t});
        }
        const auto [best, f] = best_hysteresis(scenes, planes, candidates, tolerance);
        out.params.slope_threshold = best.high;
        out.mean_f_score = f;
    }
    out.params.validate();
    return out;
}

std::vector<std::string_view> suite_names() {
    return {"noisy-step", "circle", "rectangle-corners"};
}

double default_suite_noise(std::string_view name) {
    return name == "noisy-step" ? 0.1 : 0.0;
}

std::vector<Scene> make_suite(std::string_view name, std::span<const std::uint64_t> seeds, double noise_stddev) {
    auto build = [&]() {
        if (name == "noisy-step") {
            return synth_step(64, 64, 32, 0.5);
        }
        if (name == "circle") {
            return synth_circle(64, 32.0, 32.0, 20.0);
        }
        if (name == "rectangle-corners") {
            return synth_rectangle(64, 16, 16, 47, 47);
        }
        throw ParameterError("unknown suite '" + std::string(name) +
                             "' (expected noisy-step, circle, or rectangle-corners)");
    };
    Scene base = build();
    if (std::isnan(noise_stddev) || noise_stddev < 0.0) {
        throw ParameterError("noise stddev must be non-negative, got " + std::to_string(noise_stddev));
    }
    if (seeds.empty()) {
        throw ParameterError("suite '" + std::string(name) + "' needs at least one seed");
    }
    base.name = std::string(name);
    std::vector<Scene> scenes;
    for (std::uint64_t seed : seeds) {
        Scene s = base;
        if (noise_stddev > 0.0) {
            s.image = add_gaussian_noise(base.image, noise_stddev, seed);
        }
        s.seed = seed;
        scenes.push_back(std::move(s));
    }
    return scenes;
}

}  // namespace edgekit
