#include "edgekit/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <charconv>
#include <ostream>

#include "edgekit/canny.hpp"
#include "edgekit/errors.hpp"
#include "edgekit/evaluation.hpp"
#include "edgekit/filtering.hpp"
#include "edgekit/marr_hildreth.hpp"
#include "edgekit/report.hpp"

namespace edgekit::cli {

namespace {

struct DetectorFlags {
    double sigma = 1.0;
    double low = 0.05;
    double high = 0.15;
    double slope_threshold = 0.02;
    bool hysteresis = false;

    CannyParams canny() const { return CannyParams{sigma, low, high}; }
    MHParams mh() const {
        MHParams p{sigma, slope_threshold, hysteresis, 0.0, 0.0};
        if (hysteresis) {
            p.low = low;
            p.high = high;
        }
        return p;
    }
};

struct SceneFlags {
    std::string kind = "step";
    int size = 64;
    int column = -1;
    double contrast = 0.5;
    double center_x = -1.0;
    double center_y = -1.0;
    double radius = -1.0;
    int x0 = -1;
    int y0 = -1;
    int x1 = -1;
    int y1 = -1;
    double noise = 0.0;
    std::uint64_t seed = 0;

    Scene build() const {
        Scene s = [&] {
            if (kind == "step") {
                return synth_step(size, size, column < 0 ? size / 2 : column, contrast);
            }
            if (kind == "circle") {
                return synth_circle(size, center_x < 0 ? size / 2 : center_x, center_y < 0 ? size / 2 : center_y,
                                    radius < 0 ? size / 4.0 : radius);
            }
            return synth_rectangle(size, x0 < 0 ? size / 4 : x0, y0 < 0 ? size / 4 : y0,
                                   x1 < 0 ? 3 * size / 4 - 1 : x1, y1 < 0 ? 3 * size / 4 - 1 : y1);
        }();
        if (noise > 0.0) {
            s.image = add_gaussian_noise(s.image, noise, seed);
            s.seed = seed;
        }
        return s;
    }
};

void add_detector_flags(CLI::App& cmd, DetectorFlags& f) {
    cmd.add_option("--sigma", f.sigma, "Gaussian scale in pixels; kernel radius is ceil(3*sigma)")
        ->capture_default_str();
    cmd.add_option("--low", f.low, "Low hysteresis threshold")->capture_default_str();
    cmd.add_option("--high", f.high, "High hysteresis threshold")->capture_default_str();
    cmd.add_option("--slope-threshold", f.slope_threshold, "Marr-Hildreth minimum slope across a zero crossing")
        ->capture_default_str();
    cmd.add_flag("--hysteresis", f.hysteresis, "Marr-Hildreth: threshold crossing slopes with --low/--high");
}

void add_scene_flags(CLI::App& cmd, SceneFlags& f) {
    cmd.add_option("--scene", f.kind, "Synthetic scene")
        ->check(CLI::IsMember({"step", "circle", "rectangle"}))
        ->capture_default_str();
    cmd.add_option("--size", f.size, "Scene width and height in pixels")->capture_default_str();
    cmd.add_option("--column", f.column, "step: edge column (default size/2)");
    cmd.add_option("--contrast", f.contrast, "step: intensity difference across the edge")->capture_default_str();
    cmd.add_option("--center-x", f.center_x, "circle: center column (default size/2)");
    cmd.add_option("--center-y", f.center_y, "circle: center row (default size/2)");
    cmd.add_option("--radius", f.radius, "circle: radius (default size/4)");
    cmd.add_option("--x0", f.x0, "rectangle: first column (default size/4)");
    cmd.add_option("--y0", f.y0, "rectangle: first row (default size/4)");
    cmd.add_option("--x1", f.x1, "rectangle: last column (default 3*size/4-1)");
    cmd.add_option("--y1", f.y1, "rectangle: last row (default 3*size/4-1)");
    cmd.add_option("--noise", f.noise, "Additive Gaussian noise stddev")->capture_default_str();
    cmd.add_option("--seed", f.seed, "Noise seed")->capture_default_str();
}

EdgeMap detect(const GrayImage& img, const std::string& detector, const DetectorFlags& f) {
    if (detector == kCannyName) {
        return canny_detect(img, f.canny());
    }
    return mh_detect(img, f.mh());
}

void validate_detector(const std::string& detector, const DetectorFlags& f) {
    if (detector == kCannyName) {
        f.canny().validate();
    } else {
        f.mh().validate();
    }
}

void emit(const std::string& text, const std::string& path, std::ostream& out) {
    if (path.empty()) {
        out << text;
    } else {
        write_file_atomic(path, std::span(reinterpret_cast<const std::uint8_t*>(text.data()), text.size()));
    }
}

std::string render(const std::vector<ComparisonRow>& rows, const std::string& format) {
    return format == "json" ? to_json(rows) : to_csv(rows);
}

std::uint64_t parse_u64(std::string_view s) {
    std::uint64_t v = 0;
    const auto* end = s.data() + s.size();
    const auto res = std::from_chars(s.data(), end, v);
    if (s.empty() || res.ec != std::errc() || res.ptr != end) {
        throw ParameterError("malformed seed '" + std::string(s) + "'");
    }
    return v;
}

}  // namespace

std::vector<std::uint64_t> parse_seeds(std::string_view text) {
    std::vector<std::uint64_t> seeds;
    if (const auto dots = text.find(".."); dots != std::string_view::npos) {
        const std::uint64_t first = parse_u64(text.substr(0, dots));
        const std::uint64_t last = parse_u64(text.substr(dots + 2));
        if (last < first || last - first >= 100000) {
            throw ParameterError("seed range '" + std::string(text) + "' must be ascending and shorter than 100000");
        }
        for (std::uint64_t s = first; s <= last; ++s) {
            seeds.push_back(s);
        }
        return seeds;
    }
    std::size_t start = 0;
    while (start <= text.size()) {
        const std::size_t comma = std::min(text.find(',', start), text.size());
        seeds.push_back(parse_u64(text.substr(start, comma - start)));
        start = comma + 1;
    }
    return seeds;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Marr-Hildreth and Canny edge detection with synthetic-scene evaluation", "edgekit"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string("edgekit 0.1.0 (noise: ") + std::string(kNoiseAlgorithm) + ")");

    const std::vector<std::string> detectors{std::string(kCannyName), std::string(kMarrHildrethName)};
    const std::vector<std::string> formats{"csv", "json"};

    // detect
    auto* detect_cmd = app.add_subcommand("detect", "Run one detector on a PGM/PPM image, write an edge PGM");
    std::string detect_detector;
    std::string in_path;
    std::string out_path;
    DetectorFlags detect_flags;
    detect_cmd->add_option("--detector", detect_detector, "canny or marr-hildreth")
        ->required()
        ->check(CLI::IsMember(detectors));
    detect_cmd->add_option("--in", in_path, "Input PGM/PPM (color is converted to gray)")->required();
    detect_cmd->add_option("--out", out_path, "Output edge map PGM (edge=255)")->required();
    add_detector_flags(*detect_cmd, detect_flags);

    // synth
    auto* synth_cmd = app.add_subcommand("synth", "Write a synthetic scene and its ground-truth edge map");
    SceneFlags synth_scene;
    std::string out_image;
    std::string out_truth;
    add_scene_flags(*synth_cmd, synth_scene);
    synth_cmd->add_option("--out-image", out_image, "Scene image PGM")->required();
    synth_cmd->add_option("--out-truth", out_truth, "Ground-truth edge PGM")->required();

    // evaluate
    auto* eval_cmd = app.add_subcommand("evaluate", "Score one detector on one synthetic scene");
    std::string eval_detector;
    DetectorFlags eval_flags;
    SceneFlags eval_scene;
    double eval_tolerance = kDefaultTolerance;
    std::string eval_format = "csv";
    std::string eval_out;
    eval_cmd->add_option("--detector", eval_detector, "canny or marr-hildreth")
        ->required()
        ->check(CLI::IsMember(detectors));
    add_detector_flags(*eval_cmd, eval_flags);
    add_scene_flags(*eval_cmd, eval_scene);
    eval_cmd->add_option("--tolerance", eval_tolerance, "Match tolerance in pixels")->capture_default_str();
    eval_cmd->add_option("--format", eval_format, "csv or json")->check(CLI::IsMember(formats))->capture_default_str();
    eval_cmd->add_option("--out", eval_out, "Report path (default: standard output)");

    // compare
    auto* cmp_cmd = app.add_subcommand("compare", "Run both detectors over a built-in scene suite");
    std::string suite;
    std::string seeds_text = "0";
    double cmp_noise = -1.0;
    bool tune = false;
    DetectorFlags cmp_flags;
    double cmp_tolerance = kDefaultTolerance;
    std::string cmp_format = "csv";
    std::string cmp_out;
    std::vector<std::string> suites;
    for (auto s : suite_names()) {
        suites.emplace_back(s);
    }
    cmp_cmd->add_option("--suite", suite, "noisy-step, circle, or rectangle-corners")
        ->required()
        ->check(CLI::IsMember(suites));
    cmp_cmd->add_option("--seeds", seeds_text, "Seeds as a..b (inclusive) or a,b,c")->capture_default_str();
    cmp_cmd->add_option("--noise", cmp_noise, "Noise stddev (default: 0.1 for noisy-step, 0 otherwise)");
    cmp_cmd->add_flag("--tune", tune, "Grid-search each detector's thresholds for the best mean F-score");
    add_detector_flags(*cmp_cmd, cmp_flags);
    cmp_cmd->add_option("--tolerance", cmp_tolerance, "Match tolerance in pixels")->capture_default_str();
    cmp_cmd->add_option("--format", cmp_format, "csv or json")->check(CLI::IsMember(formats))->capture_default_str();
    cmp_cmd->add_option("--out", cmp_out, "Report path (default: standard output)");

    try {
        std::vector<std::string> reversed(args.begin() + (args.empty() ? 0 : 1), args.end());
        std::reverse(reversed.begin(), reversed.end());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == static_cast<int>(CLI::ExitCodes::Success)) {
            app.exit(e, out, err);
            return kExitOk;
        }
        err << "error: " << e.what() << "\n\n" << app.help();
        return kExitValidation;
    }

    try {
        if (detect_cmd->parsed()) {
            validate_detector(detect_detector, detect_flags);
            const GrayImage img = read_gray(in_path);
            write_image(detect(img, detect_detector, detect_flags), out_path);
        } else if (synth_cmd->parsed()) {
            const Scene s = synth_scene.build();
            write_image(s.image, out_image);
            write_image(s.truth, out_truth);
        } else if (eval_cmd->parsed()) {
            validate_detector(eval_detector, eval_flags);
            const Scene s = eval_scene.build();
            const EdgeMap edges = detect(s.image, eval_detector, eval_flags);
            ComparisonRow row{s.name, s.seed, eval_detector, eval_flags.sigma, std::nullopt, std::nullopt,
                              std::nullopt, score(edges, s.truth, eval_tolerance)};
            const MHParams mh = eval_flags.mh();
            if (eval_detector == kCannyName || mh.use_hysteresis) {
                row.low = eval_flags.low;
                row.high = eval_flags.high;
            } else {
                row.slope_threshold = mh.slope_threshold;
            }
            emit(render({row}, eval_format), eval_out, out);
        } else if (cmp_cmd->parsed()) {
            CannyParams canny = cmp_flags.canny();
            MHParams mh = cmp_flags.mh();
            canny.validate();
            mh.validate();
            const auto seeds = parse_seeds(seeds_text);
            const double noise = cmp_noise < 0.0 ? default_suite_noise(suite) : cmp_noise;
            const auto scenes = make_suite(suite, seeds, noise);
            if (tune) {
                const auto grid = threshold_grid();
                canny = tune_canny(scenes, canny.sigma, cmp_tolerance, grid).params;
                mh = tune_marr_hildreth(scenes, mh.sigma, mh.use_hysteresis, cmp_tolerance, grid).params;
            }
            emit(render(run_comparison(scenes, mh, canny, cmp_tolerance), cmp_format), cmp_out, out);
        }
    } catch (const ParameterError& e) {
        err << "error: " << e.what() << '\n';
        return kExitValidation;
    } catch (const FormatError& e) {
        err << "error: " << e.what() << '\n';
        return kExitIo;
    } catch (const IoError& e) {
        err << "error: " << e.what() << '\n';
        return kExitIo;
    }
    return kExitOk;
}

}  // namespace edgekit::cli
