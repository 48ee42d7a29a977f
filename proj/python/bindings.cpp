#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <cstring>

#include "edgekit/canny.hpp"
#include "edgekit/errors.hpp"
#include "edgekit/evaluation.hpp"
#include "edgekit/filtering.hpp"
#include "edgekit/marr_hildreth.hpp"

namespace py = pybind11;
using namespace edgekit;

namespace {

using InArray = py::array_t<double, py::array::c_style | py::array::forcecast>;

GrayImage to_gray(const InArray& a) {
    if (a.ndim() != 2) throw ParameterError("expected a 2-D array, got " + std::to_string(a.ndim()) + "-D");
    const auto h = static_cast<int>(a.shape(0));
    const auto w = static_cast<int>(a.shape(1));
    return GrayImage(w, h, std::vector<double>(a.data(), a.data() + a.size()));
}

py::array_t<double> from_gray(const GrayImage& img) {
    py::array_t<double> out({img.height(), img.width()});
    std::memcpy(out.mutable_data(), img.pixels().data(), img.size() * sizeof(double));
    return out;
}

EdgeMap to_edges(const py::array_t<bool, py::array::c_style | py::array::forcecast>& a) {
    if (a.ndim() != 2) throw ParameterError("expected a 2-D array, got " + std::to_string(a.ndim()) + "-D");
    EdgeMap e(static_cast<int>(a.shape(1)), static_cast<int>(a.shape(0)));
    for (py::ssize_t i = 0; i < a.size(); ++i) e.pixels()[static_cast<std::size_t>(i)] = a.data()[i] ? 1 : 0;
    return e;
}

py::array_t<bool> from_edges(const EdgeMap& e) {
    py::array_t<bool> out({e.height(), e.width()});
    for (std::size_t i = 0; i < e.size(); ++i) out.mutable_data()[i] = e.pixels()[i] != 0;
    return out;
}

py::dict report_dict(const EvalReport& r) {
    py::dict d;
    d["false_positive_rate"] = r.false_positive_rate;
    d["false_negative_rate"] = r.false_negative_rate;
    d["mean_sq_distance"] = r.mean_sq_distance;
    d["detected"] = r.detected_count;
    d["truth"] = r.truth_count;
    d["matched"] = r.matched_count;
    d["tolerance"] = r.match_tolerance;
    d["f_score"] = r.f_score();
    return d;
}

py::tuple scene_tuple(const Scene& s) {
    return py::make_tuple(from_gray(s.image), from_edges(s.truth));
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Marr-Hildreth and Canny edge detectors";

    py::register_exception<ParameterError>(m, "ParameterError", PyExc_ValueError);

    m.def("gaussian_kernel", [](double sigma) { return gaussian_kernel_1d(sigma).taps(); }, py::arg("sigma"));
    m.def("gaussian_smooth", [](const InArray& img, double sigma) { return from_gray(gaussian_smooth(to_gray(img), sigma)); },
          py::arg("image"), py::arg("sigma"));

    m.def(
        "canny",
        [](const InArray& img, double sigma, double low, double high) {
            return from_edges(canny_detect(to_gray(img), CannyParams{sigma, low, high}));
        },
        py::arg("image"), py::arg("sigma") = 1.0, py::arg("low") = 0.05, py::arg("high") = 0.15);

    m.def(
        "marr_hildreth",
        [](const InArray& img, double sigma, double slope_threshold, bool hysteresis, double low, double high) {
            return from_edges(mh_detect(to_gray(img), MHParams{sigma, slope_threshold, hysteresis, low, high}));
        },
        py::arg("image"), py::arg("sigma") = 1.0, py::arg("slope_threshold") = 0.02, py::arg("hysteresis") = false,
        py::arg("low") = 0.0, py::arg("high") = 0.0);

    m.def(
        "laplacian_of_smoothed",
        [](const InArray& img, double sigma) { return from_gray(laplacian_of_smoothed(to_gray(img), sigma)); },
        py::arg("image"), py::arg("sigma") = 1.0);

    m.def(
        "hysteresis",
        [](const InArray& plane, double low, double high) { return from_edges(hysteresis(to_gray(plane), low, high)); },
        py::arg("plane"), py::arg("low"), py::arg("high"));

    m.def("synth_step", [](int w, int h, int column, double contrast) { return scene_tuple(synth_step(w, h, column, contrast)); },
          py::arg("width") = 64, py::arg("height") = 64, py::arg("column") = 32, py::arg("contrast") = 0.5);
    m.def("synth_circle", [](int size, double cx, double cy, double r) { return scene_tuple(synth_circle(size, cx, cy, r)); },
          py::arg("size") = 64, py::arg("center_x") = 32.0, py::arg("center_y") = 32.0, py::arg("radius") = 20.0);
    m.def(
        "synth_rectangle",
        [](int size, int x0, int y0, int x1, int y1) { return scene_tuple(synth_rectangle(size, x0, y0, x1, y1)); },
        py::arg("size") = 64, py::arg("x0") = 16, py::arg("y0") = 16, py::arg("x1") = 47, py::arg("y1") = 47);
    m.def(
        "add_gaussian_noise",
        [](const InArray& img, double stddev, std::uint64_t seed) {
            return from_gray(add_gaussian_noise(to_gray(img), stddev, seed));
        },
        py::arg("image"), py::arg("stddev"), py::arg("seed"));

    m.def(
        "score",
        [](const py::array_t<bool, py::array::c_style | py::array::forcecast>& detected,
           const py::array_t<bool, py::array::c_style | py::array::forcecast>& truth, double tolerance) {
            return report_dict(score(to_edges(detected), to_edges(truth), tolerance));
        },
        py::arg("detected"), py::arg("truth"), py::arg("tolerance") = kDefaultTolerance);
    m.def(
        "count_components",
        [](const py::array_t<bool, py::array::c_style | py::array::forcecast>& edges) {
            return count_components(to_edges(edges));
        },
        py::arg("edges"));
}
