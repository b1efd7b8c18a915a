#include "arseg/json_io.hpp"

#include "arseg/errors.hpp"

#include <nlohmann/json.hpp>

#include <cstdio>
#include <fstream>
#include <sstream>

namespace arseg {
namespace {

json band_to_json(const Band& b) {
    return json{{"start", b.start}, {"end", b.end}};
}

Band band_from_json(const json& j) {
    return {j.at("start").get<int>(), j.at("end").get<int>()};
}

json rect_to_json(const Rect& r) {
    return json{{"x0", r.x0}, {"y0", r.y0}, {"x1", r.x1}, {"y1", r.y1}};
}

Rect rect_from_json(const json& j) {
    return {j.at("x0").get<int>(), j.at("y0").get<int>(), j.at("x1").get<int>(),
            j.at("y1").get<int>()};
}

json counts_to_json(const MatchCounts& c) {
    return json{{"matched", c.matched},
                {"missed", c.missed},
                {"spurious", c.spurious}};
}

} // namespace

json config_to_json(const PageConfig& cfg) {
    json j;
    j["binarize_threshold"] = cfg.binarize_threshold;
    j["use_otsu"] = cfg.use_otsu;
    j["line"] = {{"threshold", cfg.line.threshold},
                 {"min_width", cfg.line.min_width},
                 {"merge_gap", cfg.line.merge_gap},
                 {"min_body_ratio", cfg.line.min_body_ratio},
                 {"attach_gap", cfg.line.attach_gap},
                 {"beta", cfg.line.beta}};
    j["word_gap"] = cfg.word_gap;
    j["chars"] = {{"epsilon", cfg.chars.epsilon},
                  {"min_len", cfg.chars.min_len},
                  {"max_diacritic_area", cfg.chars.max_diacritic_area}};
    j["reading_order"] = cfg.reading_order;
    return j;
}

PageConfig config_from_json(const json& j) {
    PageConfig cfg;
    cfg.binarize_threshold = j.at("binarize_threshold").get<int>();
    cfg.use_otsu = j.at("use_otsu").get<bool>();
    const json& l = j.at("line");
    cfg.line.threshold = l.at("threshold").get<int>();
    cfg.line.min_width = l.at("min_width").get<int>();
    cfg.line.merge_gap = l.at("merge_gap").get<int>();
    cfg.line.min_body_ratio = l.at("min_body_ratio").get<double>();
    cfg.line.attach_gap = l.at("attach_gap").get<int>();
    cfg.line.beta = l.at("beta").get<double>();
    cfg.word_gap = j.at("word_gap").get<int>();
    const json& c = j.at("chars");
    cfg.chars.epsilon = c.at("epsilon").get<std::int64_t>();
    cfg.chars.min_len = c.at("min_len").get<int>();
    cfg.chars.max_diacritic_area = c.at("max_diacritic_area").get<std::int64_t>();
    cfg.reading_order = j.at("reading_order").get<std::string>();
    return cfg;
}

json tree_to_json(const SegmentTree& tree) {
    json j;
    j["page"] = {{"width", tree.width},
                 {"height", tree.height},
                 {"source", tree.source}};
    j["lines"] = json::array();
    for (const auto& line : tree.lines) {
        json jl;
        jl["y_band"] = band_to_json(line.y_band);
        jl["baseline"] = {{"v_ind_max", line.baseline.peak_row},
                          {"top", line.baseline.top},
                          {"bottom", line.baseline.bottom}};
        jl["words"] = json::array();
        for (const auto& word : line.words) {
            json jw;
            jw["x_band"] = band_to_json(word.x_band);
            jw["parts"] = json::array();
            for (const auto& part : word.parts)
                jw["parts"].push_back(band_to_json(part));
            jw["chars"] = json::array();
            for (const auto& ch : word.chars) {
                json jc;
                jc["x_band"] = band_to_json(ch.x_band);
                jc["box"] = rect_to_json(ch.box);
                jc["cut_left"] = ch.cut_left;
                jc["cut_right"] = ch.cut_right;
                jw["chars"].push_back(std::move(jc));
            }
            jl["words"].push_back(std::move(jw));
        }
        j["lines"].push_back(std::move(jl));
    }
    j["config"] = config_to_json(tree.config);
    j["version"] = tree.version;
    return j;
}

SegmentTree tree_from_json(const json& j) {
    SegmentTree tree;
    const json& page = j.at("page");
    tree.width = page.at("width").get<int>();
    tree.height = page.at("height").get<int>();
    tree.source = page.at("source").get<std::string>();
    for (const auto& jl : j.at("lines")) {
        LineEntry line;
        line.y_band = band_from_json(jl.at("y_band"));
        const json& jb = jl.at("baseline");
        line.baseline.peak_row = jb.at("v_ind_max").get<int>();
        line.baseline.top = jb.at("top").get<int>();
        line.baseline.bottom = jb.at("bottom").get<int>();
        for (const auto& jw : jl.at("words")) {
            WordEntry word;
            word.x_band = band_from_json(jw.at("x_band"));
            for (const auto& jp : jw.at("parts"))
                word.parts.push_back(band_from_json(jp));
            for (const auto& jc : jw.at("chars")) {
                CharEntry ch;
                ch.x_band = band_from_json(jc.at("x_band"));
                ch.box = rect_from_json(jc.at("box"));
                ch.cut_left = jc.at("cut_left").get<std::string>();
                ch.cut_right = jc.at("cut_right").get<std::string>();
                word.chars.push_back(std::move(ch));
            }
            line.words.push_back(std::move(word));
        }
        tree.lines.push_back(std::move(line));
    }
    tree.config = config_from_json(j.at("config"));
    tree.version = j.at("version").get<std::string>();
    return tree;
}

json truth_to_json(const GroundTruth& truth) {
    json j;
    j["page"] = {{"width", truth.width}, {"height", truth.height}};
    j["lines"] = json::array();
    for (const auto& line : truth.lines) {
        json jl;
        jl["y_band"] = band_to_json(line.y_band);
        jl["words"] = json::array();
        for (const auto& word : line.words) {
            json jw;
            jw["x_band"] = band_to_json(word.x_band);
            jw["chars"] = json::array();
            for (const auto& ch : word.chars)
                jw["chars"].push_back(band_to_json(ch));
            jl["words"].push_back(std::move(jw));
        }
        j["lines"].push_back(std::move(jl));
    }
    return j;
}

GroundTruth truth_from_json(const json& j) {
    GroundTruth truth;
    const json& page = j.at("page");
    truth.width = page.at("width").get<int>();
    truth.height = page.at("height").get<int>();
    for (const auto& jl : j.at("lines")) {
        TruthLine line;
        line.y_band = band_from_json(jl.at("y_band"));
        for (const auto& jw : jl.at("words")) {
            TruthWord word;
            word.x_band = band_from_json(jw.at("x_band"));
            for (const auto& jc : jw.at("chars"))
                word.chars.push_back(band_from_json(jc));
            line.words.push_back(std::move(word));
        }
        truth.lines.push_back(std::move(line));
    }
    return truth;
}

json report_to_json(const EvalReport& report) {
    json j;
    j["tol"] = report.tol;
    j["line_ratio"] = report.line_ratio;
    j["word_ratio"] = report.word_ratio;
    j["part_ratio"] = report.part_ratio;
    j["char_ratio"] = report.char_ratio;
    j["lines"] = counts_to_json(report.lines);
    j["words"] = counts_to_json(report.words);
    j["parts"] = counts_to_json(report.parts);
    j["chars"] = counts_to_json(report.chars);
    return j;
}

std::string dump_json(const json& j) {
    return j.dump(2) + "\n";
}

json parse_json_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw UnreadableFile("cannot open " + path);
    try {
        return json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw MalformedHeader(path + ": " + e.what());
    }
}

void write_file_atomic(const std::string& path, const std::string& content) {
    const std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out)
            throw UnreadableFile("cannot write " + tmp);
        out.write(content.data(),
                  static_cast<std::streamsize>(content.size()));
        out.flush();
        if (!out)
            throw UnreadableFile("short write to " + tmp);
    }
    if (std::rename(tmp.c_str(), path.c_str()) != 0) {
        std::remove(tmp.c_str());
        throw UnreadableFile("cannot replace " + path);
    }
}

} // namespace arseg
