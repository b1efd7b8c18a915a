#pragma once

#include <string>

#include "arseg/evalsynth.hpp"
#include "arseg/pipeline.hpp"

#include <nlohmann/json_fwd.hpp>

namespace arseg {

using json = nlohmann::ordered_json;

json config_to_json(const PageConfig& cfg);
PageConfig config_from_json(const json& j);

json tree_to_json(const SegmentTree& tree);
SegmentTree tree_from_json(const json& j);

json truth_to_json(const GroundTruth& truth);
GroundTruth truth_from_json(const json& j);

json report_to_json(const EvalReport& report);

/// Canonical serialization: 2-space indent, fixed key order, trailing
/// newline. Byte-stable for fixed input.
std::string dump_json(const json& j);

json parse_json_file(const std::string& path);

/// Writes via a temp file in the same directory plus rename, so a failed run
/// never leaves a partial file.
void write_file_atomic(const std::string& path, const std::string& content);

} // namespace arseg
