#include "rit/report_io.hpp"

#include <iomanip>
#include <sstream>

namespace rit {

json partition_json(const Partition& p) {
    return json(std::vector<int>(p.parts().begin(), p.parts().end()));
}

Partition partition_from_json(const json& j) {
    if (!j.is_array())
        throw ParseError(ParseErrorKind::syntax, "partition must be a JSON array of integers");
    std::vector<int> parts;
    for (const auto& v : j) {
        if (!v.is_number_integer())
            throw ParseError(ParseErrorKind::syntax, "partition must be a JSON array of integers");
        auto x = v.get<long long>();
        if (x > std::numeric_limits<int>::max() || x < std::numeric_limits<int>::min())
            throw ParseError(ParseErrorKind::syntax, "partition part out of range");
        parts.push_back(static_cast<int>(x));
    }
    return partition_from_parts(parts);
}

json move_json(const Partition& from, const RitMove& m) {
    return json{{"k", m.k},
                {"row", m.row},
                {"removed", m.removed},
                {"result", partition_json(apply_move(from, m))}};
}

json moves_json(const Partition& from, std::span<const RitMove> moves) {
    json out = json::array();
    for (const RitMove& m : moves)
        out.push_back(move_json(from, m));
    return out;
}

json pair_json(const ConwayPair& pair) {
    return json{{"normal", pair.normal}, {"misere", pair.misere}};
}

json decomposition_json(const Partition& p) {
    auto rem = rem_of(p);
    auto norm = rem.normalized();
    return json{{"core", partition_json(core_of(p).partition)},
                {"rem", rem.heaps},
                {"rem_normalized", std::vector<Nimber>(norm.heaps().begin(), norm.heaps().end())}};
}

json analysis_json(const AnalysisReport& r) {
    json j = decomposition_json(r.position);
    j["position"] = partition_json(r.position);
    j["convention"] = std::string(to_string(r.convention));
    j["pair"] = pair_json(r.pair);
    j["outcome"] = json{{"normal", std::string(to_string(r.normal_outcome.winner))},
                        {"misere", std::string(to_string(r.misere_outcome.winner))}};
    j["winning_moves"] = moves_json(r.position, r.winning_moves);
    j["engine_move"] = r.engine_move ? move_json(r.position, *r.engine_move) : json(nullptr);
    j["engine_move_is_fallback"] = r.engine_move_is_fallback;
    return j;
}

std::string analysis_text_json(const AnalysisReport& report) { return analysis_json(report).dump(); }

json verification_json(const VerificationReport& r, bool include_timing) {
    json rows = json::array();
    for (const auto& row : r.rows) {
        json jr{{"n", row.n}, {"positions", row.positions}, {"mismatches", row.mismatches}};
        if (include_timing)
            jr["wall_ms"] = row.wall_ms;
        rows.push_back(jr);
    }
    json ces = json::array();
    for (const auto& ce : r.counterexamples)
        ces.push_back(json{{"position", partition_json(ce.position)},
                           {"convention", std::string(to_string(ce.convention))},
                           {"oracle", ce.oracle},
                           {"formula", ce.formula}});
    json j{{"max_n", r.options.max_n},
           {"convention", std::string(to_string(r.options.conventions))},
           {"max_rows", r.options.max_rows ? json(*r.options.max_rows) : json(nullptr)},
           {"rows", rows},
           {"total_positions", r.total_positions},
           {"mismatches", r.total_mismatches},
           {"counterexamples", ces}};
    if (include_timing) {
        j["jobs"] = r.options.jobs;
        j["elapsed_ms"] = r.elapsed_ms;
    }
    return j;
}

std::string verification_csv(const VerificationReport& r) {
    std::ostringstream out;
    out << "n,positions,mismatches,wall_ms\n";
    for (const auto& row : r.rows)
        out << row.n << ',' << row.positions << ',' << row.mismatches << ',' << std::fixed
            << std::setprecision(3) << row.wall_ms << '\n';
    return out.str();
}

namespace {

json property_json(const CghProperty& prop) {
    json j{{"holds", prop.holds},
           {"witness", prop.witness ? partition_json(*prop.witness) : json(nullptr)},
           {"witness_pair", prop.witness_pair ? pair_json(*prop.witness_pair) : json(nullptr)}};
    if (prop.witness_option) {
        j["witness_option"] = partition_json(*prop.witness_option);
        j["witness_option_pair"] = pair_json(*prop.witness_option_pair);
    }
    return j;
}

std::string pair_text(const ConwayPair& p) {
    return "(" + std::to_string(p.normal) + "," + std::to_string(p.misere) + ")";
}

std::string property_line(std::string_view name, const CghProperty& prop) {
    std::string out = std::string(name) + ": " + (prop.holds ? "PASS" : "FAIL");
    if (prop.witness) {
        out += " (witness " + to_string(*prop.witness);
        if (prop.witness_pair)
            out += ", pair " + pair_text(*prop.witness_pair);
        if (prop.witness_option)
            out += ", moves to " + to_string(*prop.witness_option) + " " +
                   pair_text(*prop.witness_option_pair);
        out += ")";
    }
    return out;
}

}  // namespace

json cgh_json(const CghReport& r) {
    json rows = json::array();
    for (const auto& row : r.rows)
        rows.push_back(json{{"n", row.n},
                            {"positions", row.positions},
                            {"forced_violations", row.forced_violations},
                            {"miserable_violations", row.miserable_violations},
                            {"pet_witnesses", row.pet_witnesses}});
    json pet = property_json(r.pet);
    pet["witness_formula_pair"] =
        r.pet_witness_formula_pair ? pair_json(*r.pet_witness_formula_pair) : json(nullptr);
    return json{{"max_n", r.max_n},
                {"max_rows", r.max_rows ? json(*r.max_rows) : json(nullptr)},
                {"positions", r.positions},
                {"forced", property_json(r.forced)},
                {"miserable", property_json(r.miserable)},
                {"pet", pet},
                {"expected_classification_confirmed", cgh_confirms_expected(r)},
                {"scope", "empirical check over a bounded universe, not a proof"},
                {"rows", rows}};
}

std::string cgh_csv(const CghReport& r) {
    std::ostringstream out;
    out << "n,positions,forced_violations,miserable_violations,pet_witnesses\n";
    for (const auto& row : r.rows)
        out << row.n << ',' << row.positions << ',' << row.forced_violations << ','
            << row.miserable_violations << ',' << row.pet_witnesses << '\n';
    return out.str();
}

std::string render_diagram(const Partition& p) {
    if (p.empty())
        return "(empty)\n";
    std::string out;
    for (int part : p.parts()) {
        for (int i = 0; i < part; ++i)
            out += "[]";
        out += '\n';
    }
    return out;
}

namespace {

std::string heaps_text(std::span<const int> heaps) {
    std::string out = "(";
    for (std::size_t i = 0; i < heaps.size(); ++i)
        out += (i ? "," : "") + std::to_string(heaps[i]);
    return out + ")";
}

std::string move_text(const Partition& from, const RitMove& m) {
    return "k=" + std::to_string(m.k) + " (row " + std::to_string(m.row) + ", remove " +
           std::to_string(m.removed) + ") -> " + to_string(apply_move(from, m));
}

}  // namespace

std::string render_analysis(const AnalysisReport& r) {
    std::ostringstream out;
    out << "position:   " << to_string(r.position) << "  (n=" << r.position.weight()
        << ", rows=" << r.position.rows() << ")\n";
    out << render_diagram(r.position);
    out << "core:       " << to_string(r.core.partition) << '\n';
    out << "rem:        " << heaps_text(r.rem.heaps) << '\n';
    out << "pair:       (" << r.pair.normal << "," << r.pair.misere << ")\n";
    out << "normal:     " << to_string(r.normal_outcome.winner) << "-player win\n";
    out << "misere:     " << to_string(r.misere_outcome.winner) << "-player win\n";
    out << "convention: " << to_string(r.convention) << '\n';
    if (r.winning_moves.empty()) {
        out << "winning moves: none\n";
    } else {
        out << "winning moves:\n";
        for (const auto& m : r.winning_moves)
            out << "  " << move_text(r.position, m) << '\n';
    }
    if (r.engine_move)
        out << "engine move: " << move_text(r.position, *r.engine_move)
            << (r.engine_move_is_fallback ? "  [fallback: position is lost]" : "") << '\n';
    else
        out << "engine move: none (terminal position)\n";
    return out.str();
}

std::string render_verification(const VerificationReport& r) {
    std::ostringstream out;
    out << "verifying oracle == remnant formula (" << to_string(r.options.conventions)
        << "), n <= " << r.options.max_n;
    if (r.options.max_rows)
        out << ", rows <= " << *r.options.max_rows;
    out << ", jobs=" << r.options.jobs << '\n';
    out << std::setw(4) << "n" << std::setw(12) << "positions" << std::setw(12) << "mismatches"
        << std::setw(12) << "ms" << '\n';
    for (const auto& row : r.rows)
        out << std::setw(4) << row.n << std::setw(12) << row.positions << std::setw(12)
            << row.mismatches << std::setw(12) << std::fixed << std::setprecision(2) << row.wall_ms
            << '\n';
    for (const auto& ce : r.counterexamples)
        out << "COUNTEREXAMPLE " << to_string(ce.position) << " " << to_string(ce.convention)
            << ": oracle " << ce.oracle << ", formula " << ce.formula << '\n';
    out << r.total_positions << " positions, " << r.total_mismatches << " mismatches, "
        << std::fixed << std::setprecision(1) << r.elapsed_ms << " ms\n";
    return out.str();
}

std::string render_cgh(const CghReport& r) {
    std::ostringstream out;
    out << "CGH classification over " << r.positions << " positions (n <= " << r.max_n;
    if (r.max_rows)
        out << ", rows <= " << *r.max_rows;
    out << "); empirical check, not a proof\n";
    out << property_line("forced", r.forced) << ", " << property_line("miserable", r.miserable)
        << ", " << property_line("pet", r.pet) << '\n';
    return out.str();
}

}  // namespace rit
