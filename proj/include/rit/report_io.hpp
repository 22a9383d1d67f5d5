#pragma once

#include <string>

#include "json.hpp"
#include "rit/solver.hpp"
#include "rit/verify.hpp"

namespace rit {

using json = nlohmann::json;

json partition_json(const Partition& p);
/// Reads a JSON integer array as a partition. Throws ParseError.
Partition partition_from_json(const json& j);

/// {"k", "row", "removed", "result"}; `from` is the position the move is played on.
json move_json(const Partition& from, const RitMove& m);
json moves_json(const Partition& from, std::span<const RitMove> moves);
json pair_json(const ConwayPair& pair);
/// {"core", "rem", "rem_normalized"}
json decomposition_json(const Partition& p);

json analysis_json(const AnalysisReport& report);
/// Canonical serialized analysis; the CLI and the HTTP service both emit this.
std::string analysis_text_json(const AnalysisReport& report);

json verification_json(const VerificationReport& report, bool include_timing = true);
std::string verification_csv(const VerificationReport& report);

json cgh_json(const CghReport& report);
std::string cgh_csv(const CghReport& report);

/// Young diagram, one "[]" per box, top row first.
std::string render_diagram(const Partition& p);
std::string render_analysis(const AnalysisReport& report);
std::string render_verification(const VerificationReport& report);
std::string render_cgh(const CghReport& report);

}  // namespace rit
