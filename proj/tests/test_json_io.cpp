#include <doctest.h>

#include <nlohmann/json.hpp>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "arseg/errors.hpp"
#include "arseg/evalsynth.hpp"
#include "arseg/json_io.hpp"
#include "arseg/pipeline.hpp"

using namespace arseg;

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

struct FileGuard {
    std::string path;
    ~FileGuard() { std::remove(path.c_str()); }
};

} // namespace

TEST_CASE("blank page serializes to the golden document") {
    const SegmentTree tree = segment_page(GrayImage(3, 2, 255), {}, "blank.pgm");
    const std::string golden = R"({
  "page": {
    "width": 3,
    "height": 2,
    "source": "blank.pgm"
  },
  "lines": [],
  "config": {
    "binarize_threshold": 128,
    "use_otsu": false,
    "line": {
      "threshold": -1,
      "min_width": 1,
      "merge_gap": 0,
      "min_body_ratio": 0.3,
      "attach_gap": -1,
      "beta": 0.5
    },
    "word_gap": -1,
    "chars": {
      "epsilon": 255,
      "min_len": 2,
      "max_diacritic_area": -1
    },
    "reading_order": "image"
  },
  "version": "0.1.0"
}
)";
    CHECK(dump_json(tree_to_json(tree)) == golden);
}

TEST_CASE("segmented page JSON keeps the schema order") {
    SynthSpec s;
    s.lines = 1;
    s.words_per_line = 1;
    s.chars_per_word = 2;
    s.dot_prob = 0.0;
    const auto [img, truth] = generate_synthetic_page(s, 9);
    const SegmentTree tree = segment_page(img, exact_page_config(s), "p.pgm");
    const json j = tree_to_json(tree);

    std::vector<std::string> top;
    for (auto it = j.begin(); it != j.end(); ++it)
        top.push_back(it.key());
    CHECK(top == std::vector<std::string>{"page", "lines", "config", "version"});

    const json& jl = j.at("lines").at(0);
    std::vector<std::string> line_keys;
    for (auto it = jl.begin(); it != jl.end(); ++it)
        line_keys.push_back(it.key());
    CHECK(line_keys ==
          std::vector<std::string>{"y_band", "baseline", "words"});

    const json& jb = jl.at("baseline");
    std::vector<std::string> base_keys;
    for (auto it = jb.begin(); it != jb.end(); ++it)
        base_keys.push_back(it.key());
    CHECK(base_keys == std::vector<std::string>{"v_ind_max", "top", "bottom"});
    CHECK(jb.at("v_ind_max").get<int>() == tree.lines[0].baseline.peak_row);

    const json& jc = jl.at("words").at(0).at("chars").at(0);
    CHECK(jc.at("cut_left").get<std::string>() == "word-edge");
    CHECK(jc.at("cut_right").get<std::string>() == "pulse:1");
}

TEST_CASE("tree JSON round trips byte for byte") {
    SynthSpec s;
    s.dot_prob = 0.5;
    const auto [img, truth] = generate_synthetic_page(s, 31);
    PageConfig cfg = exact_page_config(s);
    cfg.reading_order = "rtl";
    const SegmentTree tree = segment_page(img, cfg, "page-31.png");

    const std::string first = dump_json(tree_to_json(tree));
    const SegmentTree back = tree_from_json(json::parse(first));
    const std::string second = dump_json(tree_to_json(back));
    CHECK(first == second);
    CHECK(back.source == "page-31.png");
    CHECK(back.config.reading_order == "rtl");
    CHECK(back.config.chars.epsilon == 0);
    CHECK(back.lines.size() == tree.lines.size());
}

TEST_CASE("truth JSON round trips") {
    SynthSpec s;
    const auto [img, truth] = generate_synthetic_page(s, 13);
    const std::string first = dump_json(truth_to_json(truth));
    const GroundTruth back = truth_from_json(json::parse(first));
    CHECK(dump_json(truth_to_json(back)) == first);
    CHECK(back.width == truth.width);
    REQUIRE(back.lines.size() == truth.lines.size());
    CHECK(back.lines[2].words[2].chars == truth.lines[2].words[2].chars);
}

TEST_CASE("report JSON carries ratios and counts") {
    EvalReport rep;
    rep.tol = 1;
    rep.line_ratio = 1.0;
    rep.word_ratio = 0.5;
    rep.part_ratio = 0.25;
    rep.char_ratio = 0.75;
    rep.lines = {2, 0, 0};
    rep.words = {3, 3, 1};
    rep.parts = {2, 6, 0};
    rep.chars = {9, 3, 2};
    const json j = report_to_json(rep);
    CHECK(j.at("tol").get<int>() == 1);
    CHECK(j.at("word_ratio").get<double>() == doctest::Approx(0.5));
    CHECK(j.at("chars").at("matched").get<std::int64_t>() == 9);
    CHECK(j.at("chars").at("spurious").get<std::int64_t>() == 2);
    std::vector<std::string> keys;
    for (auto it = j.begin(); it != j.end(); ++it)
        keys.push_back(it.key());
    CHECK(keys == std::vector<std::string>{"tol", "line_ratio", "word_ratio",
                                           "part_ratio", "char_ratio", "lines",
                                           "words", "parts", "chars"});
}

TEST_CASE("dump_json ends with a newline") {
    CHECK(dump_json(json::object()).back() == '\n');
}

TEST_CASE("parse_json_file error taxonomy") {
    CHECK_THROWS_AS(parse_json_file("missing.json"), UnreadableFile);

    const std::string path = "arseg_test_bad.json";
    FileGuard g{path};
    {
        std::ofstream out(path);
        out << "{ not json";
    }
    CHECK_THROWS_AS(parse_json_file(path), MalformedHeader);
}

TEST_CASE("write_file_atomic replaces content and leaves no temp file") {
    const std::string path = "arseg_test_atomic.json";
    FileGuard g{path};
    write_file_atomic(path, "first\n");
    CHECK(slurp(path) == "first\n");
    write_file_atomic(path, "second\n");
    CHECK(slurp(path) == "second\n");
    std::ifstream tmp(path + ".tmp");
    CHECK(!tmp.good());
}

TEST_CASE("file round trip through parse_json_file") {
    const std::string path = "arseg_test_roundtrip.json";
    FileGuard g{path};
    SynthSpec s;
    const auto [img, truth] = generate_synthetic_page(s, 55);
    const std::string text = dump_json(truth_to_json(truth));
    write_file_atomic(path, text);
    const GroundTruth back = truth_from_json(parse_json_file(path));
    CHECK(dump_json(truth_to_json(back)) == text);
}
