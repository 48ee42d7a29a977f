#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "edgekit/canny.hpp"
#include "edgekit/errors.hpp"
#include "edgekit/evaluation.hpp"
#include "edgekit/filtering.hpp"
#include "oracles.hpp"

using namespace edgekit;

namespace {

bool subset(const EdgeMap& a, const EdgeMap& b) {
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a.pixels()[i] && !b.pixels()[i]) return false;
    }
    return true;
}

GrayImage random_thinned(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> dim(1, 32);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    GrayImage img(dim(rng), dim(rng), 0.0);
    for (double& v : img.pixels()) {
        v = u(rng) < 0.5 ? 0.0 : u(rng);
    }
    return img;
}

// Rotates 90 degrees counter-clockwise: (x, y) -> (y, w - 1 - x).
template <typename G>
G rotate(const G& img) {
    G out(img.height(), img.width());
    for (int y = 0; y < img.height(); ++y) {
        for (int x = 0; x < img.width(); ++x) out(y, img.width() - 1 - x) = img(x, y);
    }
    return out;
}

template <typename G>
G rotate_back(const G& img) {
    return rotate(rotate(rotate(img)));
}

}  // namespace

TEST_CASE("gradient") {
    const GradientField flat = gradient(GrayImage(5, 5, 0.7));
    for (std::size_t i = 0; i < flat.magnitude.size(); ++i) {
        CHECK(flat.magnitude.pixels()[i] == 0.0);
        CHECK(flat.gx.pixels()[i] == 0.0);
        CHECK(flat.gy.pixels()[i] == 0.0);
    }

    GrayImage ramp(8, 6);
    for (int y = 0; y < 6; ++y) {
        for (int x = 0; x < 8; ++x) ramp(x, y) = 0.125 * x;
    }
    const GradientField g = gradient(ramp);
    for (int y = 0; y < 6; ++y) {
        for (int x = 1; x < 7; ++x) {
            CHECK(g.gx(x, y) == 0.125);
            CHECK(g.gy(x, y) == 0.0);
            CHECK(g.direction(x, y) == 0.0);
        }
    }

    // Step of height 0.6 at column 4: central differences give h/2 on columns 3 and 4.
    const Scene s = synth_step(9, 5, 4, 0.6);
    const GradientField sg = gradient(s.image);
    for (int x = 0; x < 9; ++x) {
        const double expected = (x == 3 || x == 4) ? 0.3 : 0.0;
        CHECK(sg.magnitude(x, 2) == doctest::Approx(expected).epsilon(1e-12));
    }
    CHECK(sg.direction(3, 2) == 0.0);

    CHECK_THROWS_AS(gradient(GrayImage(2, 5)), ParameterError);

    SUBCASE("type invariants") {
        std::mt19937_64 rng(1);
        const GradientField r = gradient(oracle::random_image(rng, 12, 10));
        for (std::size_t i = 0; i < r.gx.size(); ++i) {
            const double gx = r.gx.pixels()[i];
            const double gy = r.gy.pixels()[i];
            CHECK(std::fabs(r.magnitude.pixels()[i] - std::sqrt(gx * gx + gy * gy)) <= 1e-12);
            CHECK(r.direction.pixels()[i] > -std::numbers::pi);
            CHECK(r.direction.pixels()[i] <= std::numbers::pi);
        }
    }
}

TEST_CASE("nonmax_suppress") {
    SUBCASE("isolated pixel survives") {
        GrayImage img(7, 7, 0.0);
        img(3, 3) = 1.0;
        const GradientField g = gradient(img);
        GradientField only = g;
        for (double& v : only.magnitude.pixels()) v = 0.0;
        only.magnitude(3, 3) = 0.5;
        only.gx(3, 3) = 0.3;
        only.gy(3, 3) = 0.4;
        const GrayImage out = nonmax_suppress(only);
        CHECK(out(3, 3) == 0.5);
        CHECK(out.pixels().size() == 49);
    }

    SUBCASE("equal run along the gradient keeps only the first") {
        // Three equal magnitudes on columns 2..4 with gradient pointing +x.
        GradientField g{GrayImage(7, 3, 0.0), GrayImage(7, 3, 0.0), GrayImage(7, 3, 0.0), GrayImage(7, 3, 0.0)};
        for (int x = 2; x <= 4; ++x) {
            g.gx(x, 1) = 1.0;
            g.magnitude(x, 1) = 1.0;
        }
        const GrayImage out = nonmax_suppress(g);
        CHECK(out(2, 1) == 1.0);
        CHECK(out(3, 1) == 0.0);
        CHECK(out(4, 1) == 0.0);

        for (int x = 2; x <= 4; ++x) g.gx(x, 1) = -1.0;
        const GrayImage rev = nonmax_suppress(g);
        CHECK(rev(4, 1) == 1.0);
        CHECK(rev(2, 1) == 0.0);
    }

    SUBCASE("borders are suppressed") {
        std::mt19937_64 rng(6);
        const GrayImage out = nonmax_suppress(gradient(oracle::random_image(rng, 9, 9)));
        for (int i = 0; i < 9; ++i) {
            CHECK(out(i, 0) == 0.0);
            CHECK(out(i, 8) == 0.0);
            CHECK(out(0, i) == 0.0);
            CHECK(out(8, i) == 0.0);
        }
    }

    SUBCASE("smoothed vertical step leaves one pixel per interior row") {
        const Scene s = synth_step(32, 16, 16, 0.5);
        const GrayImage thin = canny_thinned(s.image, 1.0);
        // Brute force: the per-row argmax of |d/dx| of the smoothed profile is
        // the pair (15, 16), which ties exactly.
        for (int y = 1; y < 15; ++y) {
            int survivors = 0;
            for (int x = 0; x < 32; ++x) {
                if (thin(x, y) > 0.0) {
                    ++survivors;
                    CHECK((x == 15 || x == 16));
                }
            }
            CHECK(survivors == 1);
        }
    }

    SUBCASE("suppressed pixels have a neighbor sample at least as large") {
        std::mt19937_64 rng(12);
        for (int trial = 0; trial < 10; ++trial) {
            const GradientField g = gradient(gaussian_smooth(oracle::random_image(rng, 16, 16), 1.0));
            const GrayImage out = nonmax_suppress(g);
            for (int y = 1; y < 15; ++y) {
                for (int x = 1; x < 15; ++x) {
                    const double m = g.magnitude(x, y);
                    if (out(x, y) != 0.0 || m == 0.0) continue;
                    // Oracle sample points: exact unit-vector step, bilinear in the 2x2 cell.
                    const double ux = g.gx(x, y) / m;
                    const double uy = g.gy(x, y) / m;
                    auto project = [&](double s) {
                        const double k = s / std::max(std::fabs(ux), std::fabs(uy));
                        const double px = x + k * ux;
                        const double py = y + k * uy;
                        const int x0 = static_cast<int>(std::floor(px));
                        const int y0 = static_cast<int>(std::floor(py));
                        const double fx = px - x0;
                        const double fy = py - y0;
                        auto at = [&](int a, int b) { return g.magnitude.clamped(a, b); };
                        return (1 - fx) * (1 - fy) * at(x0, y0) + fx * (1 - fy) * at(x0 + 1, y0) +
                               (1 - fx) * fy * at(x0, y0 + 1) + fx * fy * at(x0 + 1, y0 + 1);
                    };
                    CHECK(std::max(project(1.0), project(-1.0)) >= m * (1.0 - 1e-9));
                }
            }
        }
    }
}

TEST_CASE("hysteresis examples") {
    CHECK(hysteresis(GrayImage(5, 5, 0.1), 0.1, 0.2).count() == 0);

    GrayImage one(5, 5, 0.0);
    one(2, 3) = 0.9;
    const EdgeMap e = hysteresis(one, 0.1, 0.5);
    CHECK(e.count() == 1);
    CHECK(e.edge(2, 3));

    const double lo = 0.1;
    const double hi = 0.5;
    const double eps = 0.01;
    GrayImage chain(6, 3, 0.0);
    chain(1, 1) = hi + eps;
    chain(2, 1) = lo + eps;
    chain(3, 1) = lo + eps;
    CHECK(hysteresis(chain, lo, hi).count() == 3);
    chain(1, 1) = 0.0;
    CHECK(hysteresis(chain, lo, hi).count() == 0);

    // Strict thresholds: exactly-equal values do not pass.
    GrayImage eq(3, 1, 0.0);
    eq(0, 0) = hi;
    CHECK(hysteresis(eq, lo, hi).count() == 0);
    eq(0, 0) = hi + eps;
    eq(1, 0) = lo;
    CHECK(hysteresis(eq, lo, hi).count() == 1);

    // Diagonal neighbors connect.
    GrayImage diag(4, 4, 0.0);
    diag(0, 0) = hi + eps;
    diag(1, 1) = lo + eps;
    diag(2, 2) = lo + eps;
    CHECK(hysteresis(diag, lo, hi).count() == 3);

    CHECK_THROWS_AS(hysteresis(chain, 0.5, 0.1), ParameterError);
    CHECK_THROWS_AS(hysteresis(chain, -0.1, 0.1), ParameterError);
}

TEST_CASE("hysteresis laws on random planes") {
    std::mt19937_64 rng(77);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int trial = 0; trial < 100; ++trial) {
        const GrayImage plane = random_thinned(rng);
        double a = u(rng);
        double b = u(rng);
        if (a > b) std::swap(a, b);
        const EdgeMap base = hysteresis(plane, a, b);

        CHECK(subset(hysteresis(plane, a, std::min(1.0, b + 0.1)), base));
        CHECK(subset(hysteresis(plane, std::min(b, a + 0.1), b), base));
        CHECK(subset(base, hysteresis(plane, a, std::max(a, b - 0.1))));
        CHECK(hysteresis(plane, a, b, FloodOrder::reverse_breadth_first) == base);

        const EdgeMap flat = hysteresis(plane, a, a);
        for (std::size_t i = 0; i < plane.size(); ++i) {
            CHECK((flat.pixels()[i] != 0) == (plane.pixels()[i] > a));
        }
    }
}

TEST_CASE("canny_detect") {
    CHECK(canny_detect(GrayImage(10, 10, 0.5), CannyParams{}).count() == 0);

    const Scene s = synth_step(64, 64, 32, 0.5);
    const EdgeMap e = canny_detect(s.image, CannyParams{1.0, 0.05, 0.15});
    for (int y = 1; y < 63; ++y) {
        int hits = 0;
        for (int x = 0; x < 64; ++x) {
            if (e.edge(x, y)) {
                ++hits;
                CHECK(std::abs(x - 32) <= 1);
            }
        }
        CHECK(hits == 1);
    }
    CHECK(canny_detect(s.image, CannyParams{1.0, 0.05, 10.0}).count() == 0);

    CHECK_THROWS_AS(canny_detect(s.image, CannyParams{1.0, 0.2, 0.1}), ParameterError);
    CHECK_THROWS_AS(canny_detect(s.image, CannyParams{-1.0, 0.05, 0.1}), ParameterError);
    CHECK_THROWS_AS(canny_detect(GrayImage(2, 2), CannyParams{}), ParameterError);
}

TEST_CASE("canny covariance") {
    std::mt19937_64 rng(31);
    std::uniform_int_distribution<std::uint64_t> seed;
    for (int trial = 0; trial < 10; ++trial) {
        const GrayImage img = add_gaussian_noise(synth_circle(40, 19.5, 20.0, 12.0).image, 0.1, seed(rng));
        GrayImage half = img;
        for (double& v : half.pixels()) v *= 0.5;
        const GrayImage a = canny_thinned(img, 1.0);
        const GrayImage b = canny_thinned(half, 1.0);
        for (std::size_t i = 0; i < a.size(); ++i) CHECK(b.pixels()[i] == 0.5 * a.pixels()[i]);
        CHECK(canny_detect(half, CannyParams{1.0, 0.025, 0.075}) == canny_detect(img, CannyParams{1.0, 0.05, 0.15}));
    }

    for (int column : {10, 20, 31}) {
        const Scene s = synth_step(48, 40, column, 0.5);
        const CannyParams p{1.0, 0.05, 0.15};
        const EdgeMap direct = canny_detect(s.image, p);
        CHECK(rotate_back(canny_detect(rotate(s.image), p)) == direct);
        CHECK(rotate_back(rotate_back(canny_detect(rotate(rotate(s.image)), p))) == direct);
    }
}
