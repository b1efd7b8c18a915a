#include "arseg/errors.hpp"
#include "arseg/evalsynth.hpp"
#include "arseg/json_io.hpp"
#include "arseg/pipeline.hpp"
#include "arseg/profile.hpp"
#include "arseg/version.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <cstdio>
#include <iostream>
#include <sstream>
#include <string>

namespace {

bool ends_with(const std::string& s, const std::string& suffix) {
    return s.size() >= suffix.size() &&
           s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

// Image writers take a path, so atomicity is temp-path + rename here.
template <typename Writer>
void write_image_atomic(const std::string& path, Writer&& writer) {
    const std::string tmp = path + ".tmp";
    writer(tmp);
    if (std::rename(tmp.c_str(), path.c_str()) != 0) {
        std::remove(tmp.c_str());
        throw arseg::UnreadableFile("cannot replace " + path);
    }
}

void write_any_image(const std::string& path, const arseg::GrayImage& img) {
    if (ends_with(path, ".png"))
        write_image_atomic(path,
                           [&](const std::string& p) { write_png(p, img); });
    else
        write_image_atomic(path,
                           [&](const std::string& p) { write_pgm(p, img); });
}

void add_config_flags(CLI::App* cmd, arseg::PageConfig& cfg) {
    cmd->add_option("--binarize-threshold", cfg.binarize_threshold,
                    "Ink threshold, pixel < t is ink (default 128)");
    cmd->add_flag("--otsu", cfg.use_otsu,
                  "Pick the binarize threshold automatically");
    cmd->add_option("--line-threshold", cfg.line.threshold,
                    "Line profile threshold; -1 = auto");
    cmd->add_option("--min-width", cfg.line.min_width,
                    "Minimum line band height in rows");
    cmd->add_option("--merge-gap", cfg.line.merge_gap,
                    "Merge line bands separated by fewer rows than this");
    cmd->add_option("--min-body-ratio", cfg.line.min_body_ratio,
                    "Bands thinner than this fraction of the reference height "
                    "are diacritic candidates");
    cmd->add_option("--attach-gap", cfg.line.attach_gap,
                    "Max gap for attaching a diacritic band; -1 = auto");
    cmd->add_option("--beta", cfg.line.beta,
                    "Baseline band cutoff as a fraction of the profile peak");
    cmd->add_option("--word-gap", cfg.word_gap,
                    "Column gap separating word clusters; -1 = auto");
    cmd->add_option("--epsilon", cfg.chars.epsilon,
                    "Amplitude tolerance of the connection filter");
    cmd->add_option("--min-len", cfg.chars.min_len,
                    "Minimum pulse length in columns");
    cmd->add_option("--max-diacritic-area", cfg.chars.max_diacritic_area,
                    "Largest component stripped as a diacritic; -1 = auto");
    cmd->add_option("--reading-order", cfg.reading_order,
                    "Order of words and characters in the output")
        ->check(CLI::IsMember({"image", "rtl"}));
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Arabic text page segmenter: lines, words, characters"};
    app.set_version_flag("--version", std::string(arseg::kVersion));
    app.require_subcommand(1);

    // segment
    auto* seg = app.add_subcommand("segment", "Segment a page image to JSON");
    std::string seg_input, seg_output;
    arseg::PageConfig seg_cfg;
    seg->add_option("input", seg_input, "Page image (PGM or PNG)")->required();
    seg->add_option("-o,--output", seg_output, "Output JSON path")->required();
    add_config_flags(seg, seg_cfg);

    // overlay
    auto* ovl = app.add_subcommand("overlay",
                                   "Render segmentation markers over a page");
    std::string ovl_input, ovl_tree, ovl_output;
    ovl->add_option("input", ovl_input, "Page image")->required();
    ovl->add_option("--tree", ovl_tree, "Segmentation JSON")->required();
    ovl->add_option("-o,--output", ovl_output,
                    "Output image (.png = color, else PGM)")
        ->required();

    // profile
    auto* prof = app.add_subcommand("profile", "Dump a projection profile as CSV");
    std::string prof_input, prof_axis = "horizontal", prof_output;
    int prof_threshold = 128;
    bool prof_otsu = false;
    prof->add_option("input", prof_input, "Page image")->required();
    prof->add_option("--axis", prof_axis, "Projection axis")
        ->check(CLI::IsMember({"horizontal", "vertical"}));
    prof->add_option("-o,--output", prof_output,
                     "Output CSV path (default: stdout)");
    prof->add_option("--binarize-threshold", prof_threshold,
                     "Ink threshold (default 128)");
    prof->add_flag("--otsu", prof_otsu, "Automatic binarize threshold");

    // synth
    auto* syn = app.add_subcommand("synth",
                                   "Generate a synthetic page with ground truth");
    std::string syn_output, syn_truth;
    unsigned syn_seed = 0;
    arseg::SynthSpec spec;
    syn->add_option("-o,--output", syn_output, "Output image path")->required();
    syn->add_option("--truth", syn_truth, "Ground-truth JSON path")->required();
    syn->add_option("--seed", syn_seed, "Generator seed");
    syn->add_option("--lines", spec.lines, "Text lines per page");
    syn->add_option("--words-per-line", spec.words_per_line, "Words per line");
    syn->add_option("--chars-per-word", spec.chars_per_word,
                    "Characters per word");
    syn->add_option("--stroke", spec.stroke_px, "Bridge thickness in rows");
    syn->add_option("--char-size", spec.char_size_px, "Block height in rows");
    syn->add_option("--char-width", spec.char_width_px,
                    "Block width in columns");
    syn->add_option("--bridge-len", spec.bridge_len_px,
                    "Bridge length in columns");
    syn->add_option("--dot-prob", spec.dot_prob,
                    "Per-character dot probability");
    syn->add_option("--dot-px", spec.dot_px, "Dot side length");
    syn->add_option("--dot-gap", spec.dot_gap_px,
                    "Rows between a dot and its block");
    syn->add_option("--gap", spec.gap_px, "Inter-word gap in columns");
    syn->add_option("--line-gap", spec.line_gap_px,
                    "Rows between line extents");
    syn->add_option("--margin", spec.margin_px, "Page margin");
    syn->add_option("--baseline-frac", spec.baseline_frac,
                    "Baseline placement inside the block, 0..1");

    // eval
    auto* evl = app.add_subcommand("eval",
                                   "Score a segmentation against ground truth");
    std::string evl_tree, evl_truth;
    int evl_tol = 1;
    evl->add_option("--tree", evl_tree, "Segmentation JSON")->required();
    evl->add_option("--truth", evl_truth, "Ground-truth JSON")->required();
    evl->add_option("--tol", evl_tol, "Endpoint tolerance in pixels");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    }

    try {
        if (seg->parsed()) {
            const arseg::GrayImage page = arseg::load_image(seg_input);
            const arseg::SegmentTree tree =
                arseg::segment_page(page, seg_cfg, seg_input);
            arseg::write_file_atomic(seg_output,
                                     arseg::dump_json(arseg::tree_to_json(tree)));
        } else if (ovl->parsed()) {
            const arseg::GrayImage page = arseg::load_image(ovl_input);
            const arseg::SegmentTree tree =
                arseg::tree_from_json(arseg::parse_json_file(ovl_tree));
            if (ends_with(ovl_output, ".png")) {
                const arseg::RgbImage out = render_overlay_rgb(page, tree);
                write_image_atomic(ovl_output, [&](const std::string& p) {
                    write_png_rgb(p, out);
                });
            } else {
                const arseg::GrayImage out = render_overlay_gray(page, tree);
                write_image_atomic(ovl_output, [&](const std::string& p) {
                    write_pgm(p, out);
                });
            }
        } else if (prof->parsed()) {
            const arseg::GrayImage page = arseg::load_image(prof_input);
            const int threshold =
                prof_otsu ? arseg::otsu_threshold(page) : prof_threshold;
            const arseg::InkImage ink = arseg::binarize(page, threshold);
            const arseg::Profile p = prof_axis == "vertical"
                                         ? arseg::vertical_profile(ink)
                                         : arseg::horizontal_profile(ink);
            std::ostringstream csv;
            for (std::size_t i = 0; i < p.values.size(); ++i)
                csv << i << "," << p.values[i] << "\n";
            if (prof_output.empty())
                std::cout << csv.str();
            else
                arseg::write_file_atomic(prof_output, csv.str());
        } else if (syn->parsed()) {
            const auto [img, truth] =
                arseg::generate_synthetic_page(spec, syn_seed);
            write_any_image(syn_output, img);
            arseg::write_file_atomic(syn_truth,
                                     arseg::dump_json(arseg::truth_to_json(truth)));
        } else if (evl->parsed()) {
            const arseg::SegmentTree tree =
                arseg::tree_from_json(arseg::parse_json_file(evl_tree));
            const arseg::GroundTruth truth =
                arseg::truth_from_json(arseg::parse_json_file(evl_truth));
            const arseg::EvalReport report = evaluate(tree, truth, evl_tol);
            std::cout << arseg::dump_json(arseg::report_to_json(report));
        }
    } catch (const arseg::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
