#include "rit/verify.hpp"

#include <chrono>
#include <stdexcept>
#include <string>
#include <thread>

namespace rit {

std::string_view to_string(ConventionChoice c) noexcept {
    switch (c) {
    case ConventionChoice::normal: return "normal";
    case ConventionChoice::misere: return "misere";
    case ConventionChoice::both: return "both";
    }
    return "normal";
}

ConventionChoice parse_convention_choice(std::string_view text) {
    if (text == "normal")
        return ConventionChoice::normal;
    if (text == "misere")
        return ConventionChoice::misere;
    if (text == "both")
        return ConventionChoice::both;
    throw std::invalid_argument("unknown convention \"" + std::string(text) +
                                "\" (expected normal, misere or both)");
}

std::vector<Convention> conventions_of(ConventionChoice c) {
    switch (c) {
    case ConventionChoice::normal: return {Convention::normal};
    case ConventionChoice::misere: return {Convention::misere};
    case ConventionChoice::both: return {Convention::normal, Convention::misere};
    }
    return {};
}

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

struct ChunkResult {
    std::size_t mismatches = 0;
    std::vector<Counterexample> counterexamples;
};

void check_chunk(GrundyOracle& oracle, std::span<const Partition> chunk,
                 const std::vector<Convention>& conventions, ChunkResult& out) {
    for (const Partition& p : chunk) {
        ConwayPair formula = conway_pair(p);
        for (Convention c : conventions) {
            Nimber brute = oracle.value(p, c);
            if (brute != formula.get(c)) {
                ++out.mismatches;
                out.counterexamples.push_back({p, c, brute, formula.get(c)});
            }
        }
    }
}

}  // namespace

VerificationReport verify_theorems(const VerificationOptions& options) {
    if (options.max_n > options.oracle_bound)
        throw OracleBoundExceeded("max n " + std::to_string(options.max_n) +
                                  " exceeds the oracle bound " +
                                  std::to_string(options.oracle_bound) +
                                  " (raise RIT_ORACLE_MAX_N)");
    const auto start = Clock::now();
    const auto conventions = conventions_of(options.conventions);
    const std::size_t jobs = static_cast<std::size_t>(std::max(1, options.jobs));

    VerificationReport report;
    report.options = options;

    std::vector<GrundyOracle> oracles;
    oracles.reserve(jobs);
    for (std::size_t w = 0; w < jobs; ++w)
        oracles.emplace_back(options.oracle_bound);

    for (int n = 0; n <= options.max_n; ++n) {
        const auto row_start = Clock::now();
        const auto universe = all_partitions(n, options.max_rows);
        const std::size_t workers = std::min(jobs, std::max<std::size_t>(1, universe.size()));
        std::vector<ChunkResult> results(workers);

        auto chunk = [&](std::size_t w) {
            std::size_t begin = universe.size() * w / workers;
            std::size_t end = universe.size() * (w + 1) / workers;
            return std::span<const Partition>(universe).subspan(begin, end - begin);
        };

        if (workers == 1) {
            check_chunk(oracles[0], chunk(0), conventions, results[0]);
        } else {
            std::vector<std::jthread> threads;
            for (std::size_t w = 0; w < workers; ++w)
                threads.emplace_back([&, w] { check_chunk(oracles[w], chunk(w), conventions, results[w]); });
        }

        VerificationRow row{n, universe.size(), 0, 0};
        for (auto& r : results) {
            row.mismatches += r.mismatches;
            for (auto& ce : r.counterexamples)
                report.counterexamples.push_back(std::move(ce));
        }
        row.wall_ms = ms_since(row_start);
        report.total_positions += row.positions;
        report.total_mismatches += row.mismatches;
        report.rows.push_back(row);
    }
    report.elapsed_ms = ms_since(start);
    return report;
}

namespace {

void record(CghProperty& prop, const Partition& p, const ConwayPair& pair) {
    if (prop.holds) {
        prop.holds = false;
        prop.witness = p;
        prop.witness_pair = pair;
    }
}

bool is_01(const ConwayPair& p) { return p.normal == 0 && p.misere == 1; }
bool is_10(const ConwayPair& p) { return p.normal == 1 && p.misere == 0; }

}  // namespace

bool forced_at(const ConwayPair& x, std::span<const ConwayPair> options) noexcept {
    for (const auto& o : options)
        if ((is_01(x) && !is_10(o)) || (is_10(x) && !is_01(o)))
            return false;
    return true;
}

bool miserable_at(const ConwayPair& x, std::span<const ConwayPair> options) noexcept {
    if (is_01(x) || is_10(x))
        return true;
    bool to_01 = false, to_10 = false;
    for (const auto& o : options) {
        to_01 = to_01 || is_01(o);
        to_10 = to_10 || is_10(o);
    }
    return (!to_01 && !to_10) || (to_01 && to_10);
}

bool pet_at(const ConwayPair& x) noexcept {
    return is_01(x) || is_10(x) || (x.normal == x.misere && x.normal >= 2);
}

CghReport cgh_check(int max_n, std::optional<int> max_rows, int oracle_bound) {
    if (max_n > oracle_bound)
        throw OracleBoundExceeded("max n " + std::to_string(max_n) + " exceeds the oracle bound " +
                                  std::to_string(oracle_bound) + " (raise RIT_ORACLE_MAX_N)");
    GrundyOracle oracle(oracle_bound);
    CghReport report;
    report.max_n = max_n;
    report.max_rows = max_rows;

    for (int n = 0; n <= max_n; ++n) {
        CghRow row{n, 0, 0, 0, 0};
        auto stream = enumerate_partitions(n, max_rows);
        while (auto x = stream.next()) {
            ++row.positions;
            const ConwayPair pair = oracle.pair(*x);

            std::vector<Partition> children;
            std::vector<ConwayPair> options;
            for (const RitMove& m : legal_moves(*x)) {
                children.push_back(apply_move(*x, m));
                options.push_back(oracle.pair(children.back()));
            }

            if (!forced_at(pair, options)) {
                ++row.forced_violations;
                if (report.forced.holds) {
                    for (std::size_t i = 0; i < options.size(); ++i)
                        if (!forced_at(pair, std::span(options).subspan(i, 1))) {
                            report.forced.witness_option = children[i];
                            report.forced.witness_option_pair = options[i];
                            break;
                        }
                }
                record(report.forced, *x, pair);
            }
            if (!miserable_at(pair, options)) {
                ++row.miserable_violations;
                record(report.miserable, *x, pair);
            }
            if (!pet_at(pair)) {
                ++row.pet_witnesses;
                record(report.pet, *x, pair);
            }
        }
        report.positions += row.positions;
        report.rows.push_back(row);
    }
    if (report.pet.witness)
        report.pet_witness_formula_pair = conway_pair(*report.pet.witness);
    return report;
}

bool cgh_expected_pet(int max_n, std::optional<int> max_rows) noexcept {
    return max_n < 8 || (max_rows && *max_rows <= 2);
}

bool cgh_confirms_expected(const CghReport& report) noexcept {
    return report.forced.holds && report.miserable.holds &&
           report.pet.holds == cgh_expected_pet(report.max_n, report.max_rows);
}

}  // namespace rit
