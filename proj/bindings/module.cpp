#include <pybind11/pybind11.h>
#include <pybind11/numpy.h>
#include <pybind11/stl.h>

#include <nlohmann/json.hpp>

#include "arseg/errors.hpp"
#include "arseg/evalsynth.hpp"
#include "arseg/json_io.hpp"
#include "arseg/pipeline.hpp"
#include "arseg/profile.hpp"
#include "arseg/raster.hpp"
#include "arseg/version.hpp"

namespace py = pybind11;

namespace {

using GrayArray = py::array_t<std::uint8_t, py::array::c_style | py::array::forcecast>;

arseg::GrayImage to_image(const GrayArray& arr) {
    const auto buf = arr.request();
    if (buf.ndim != 2)
        throw py::value_error("expected a 2-D uint8 array (rows, columns)");
    arseg::GrayImage img(static_cast<int>(buf.shape[1]),
                         static_cast<int>(buf.shape[0]));
    const auto* data = static_cast<const std::uint8_t*>(buf.ptr);
    std::copy(data, data + img.pixels.size(), img.pixels.begin());
    return img;
}

py::array_t<std::uint8_t> to_array(const arseg::GrayImage& img) {
    py::array_t<std::uint8_t> arr({img.height, img.width});
    std::copy(img.pixels.begin(), img.pixels.end(),
              arr.mutable_data());
    return arr;
}

py::array_t<std::uint8_t> to_array(const arseg::RgbImage& img) {
    py::array_t<std::uint8_t> arr({img.height, img.width, 3});
    std::copy(img.rgb.begin(), img.rgb.end(), arr.mutable_data());
    return arr;
}

arseg::PageConfig parse_config(const std::string& config_json) {
    if (config_json.empty())
        return {};
    return arseg::config_from_json(arseg::json::parse(config_json));
}

arseg::SynthSpec parse_spec(const std::string& spec_json) {
    arseg::SynthSpec s;
    if (spec_json.empty())
        return s;
    const arseg::json j = arseg::json::parse(spec_json);
    s.lines = j.value("lines", s.lines);
    s.words_per_line = j.value("words_per_line", s.words_per_line);
    s.chars_per_word = j.value("chars_per_word", s.chars_per_word);
    s.stroke_px = j.value("stroke_px", s.stroke_px);
    s.char_size_px = j.value("char_size_px", s.char_size_px);
    s.char_width_px = j.value("char_width_px", s.char_width_px);
    s.bridge_len_px = j.value("bridge_len_px", s.bridge_len_px);
    s.dot_prob = j.value("dot_prob", s.dot_prob);
    s.dot_px = j.value("dot_px", s.dot_px);
    s.dot_gap_px = j.value("dot_gap_px", s.dot_gap_px);
    s.gap_px = j.value("gap_px", s.gap_px);
    s.line_gap_px = j.value("line_gap_px", s.line_gap_px);
    s.margin_px = j.value("margin_px", s.margin_px);
    s.baseline_frac = j.value("baseline_frac", s.baseline_frac);
    return s;
}

arseg::Profile binarized_profile(const GrayArray& arr, int threshold, bool otsu,
                                 bool vertical) {
    const arseg::GrayImage img = to_image(arr);
    const int t = otsu ? arseg::otsu_threshold(img) : threshold;
    const arseg::InkImage ink = arseg::binarize(img, t);
    return vertical ? arseg::vertical_profile(ink)
                    : arseg::horizontal_profile(ink);
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Projection-profile segmentation of scanned text pages";
    m.attr("__version__") = std::string(arseg::kVersion);

    m.def("load_image",
          [](const std::string& path) { return to_array(arseg::load_image(path)); },
          py::arg("path"), "Read a PGM or PNG image as a (rows, cols) uint8 array");

    m.def("write_image",
          [](const std::string& path, const GrayArray& arr) {
              const arseg::GrayImage img = to_image(arr);
              if (path.size() >= 4 &&
                  path.compare(path.size() - 4, 4, ".png") == 0)
                  arseg::write_png(path, img);
              else
                  arseg::write_pgm(path, img);
          },
          py::arg("path"), py::arg("image"),
          "Write an image; .png selects PNG, anything else PGM");

    m.def("otsu_threshold",
          [](const GrayArray& arr) { return arseg::otsu_threshold(to_image(arr)); },
          py::arg("image"));

    m.def("horizontal_profile",
          [](const GrayArray& arr, int threshold, bool otsu) {
              return binarized_profile(arr, threshold, otsu, false).values;
          },
          py::arg("image"), py::arg("threshold") = 128, py::arg("otsu") = false,
          "Per-row ink profile of the binarized image, 255 per ink pixel");

    m.def("vertical_profile",
          [](const GrayArray& arr, int threshold, bool otsu) {
              return binarized_profile(arr, threshold, otsu, true).values;
          },
          py::arg("image"), py::arg("threshold") = 128, py::arg("otsu") = false,
          "Per-column ink profile of the binarized image");

    m.def("default_config_json",
          []() { return arseg::dump_json(arseg::config_to_json({})); });

    m.def("segment_page_json",
          [](const GrayArray& arr, const std::string& config_json,
             const std::string& source) {
              const arseg::SegmentTree tree = arseg::segment_page(
                  to_image(arr), parse_config(config_json), source);
              return arseg::dump_json(arseg::tree_to_json(tree));
          },
          py::arg("image"), py::arg("config_json") = std::string(),
          py::arg("source") = std::string(),
          "Segment a page into lines, words and characters; returns JSON");

    m.def("render_overlay_gray",
          [](const GrayArray& arr, const std::string& tree_json) {
              const arseg::SegmentTree tree =
                  arseg::tree_from_json(arseg::json::parse(tree_json));
              return to_array(arseg::render_overlay_gray(to_image(arr), tree));
          },
          py::arg("image"), py::arg("tree_json"));

    m.def("render_overlay_rgb",
          [](const GrayArray& arr, const std::string& tree_json) {
              const arseg::SegmentTree tree =
                  arseg::tree_from_json(arseg::json::parse(tree_json));
              return to_array(arseg::render_overlay_rgb(to_image(arr), tree));
          },
          py::arg("image"), py::arg("tree_json"));

    m.def("generate_page_json",
          [](const std::string& spec_json, std::uint32_t seed) {
              const auto [img, truth] =
                  arseg::generate_synthetic_page(parse_spec(spec_json), seed);
              return py::make_tuple(
                  to_array(img),
                  arseg::dump_json(arseg::truth_to_json(truth)));
          },
          py::arg("spec_json") = std::string(), py::arg("seed") = 0,
          "Synthetic page plus its ground truth JSON");

    m.def("exact_config_json",
          [](const std::string& spec_json) {
              return arseg::dump_json(arseg::config_to_json(
                  arseg::exact_page_config(parse_spec(spec_json))));
          },
          py::arg("spec_json") = std::string(),
          "Config under which the pipeline recovers a synthetic layout exactly");

    m.def("evaluate_json",
          [](const std::string& tree_json, const std::string& truth_json,
             int tol) {
              const arseg::SegmentTree tree =
                  arseg::tree_from_json(arseg::json::parse(tree_json));
              const arseg::GroundTruth truth =
                  arseg::truth_from_json(arseg::json::parse(truth_json));
              return arseg::dump_json(
                  arseg::report_to_json(arseg::evaluate(tree, truth, tol)));
          },
          py::arg("tree_json"), py::arg("truth_json"), py::arg("tol") = 1,
          "Score a segmentation against ground truth; returns a JSON report");

    py::register_exception<arseg::Error>(m, "SegmentationError");
}
