#pragma once

#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "rit/solver.hpp"

namespace rit {

enum class ConventionChoice { normal, misere, both };

std::string_view to_string(ConventionChoice c) noexcept;
ConventionChoice parse_convention_choice(std::string_view text);
std::vector<Convention> conventions_of(ConventionChoice c);

struct VerificationOptions {
    int max_n = 0;
    ConventionChoice conventions = ConventionChoice::normal;
    std::optional<int> max_rows;
    int jobs = 1;
    int oracle_bound = default_oracle_bound();
};

struct VerificationRow {
    int n = 0;
    std::size_t positions = 0;
    std::size_t mismatches = 0;
    double wall_ms = 0;
};

struct Counterexample {
    Partition position;
    Convention convention = Convention::normal;
    Nimber oracle = 0;
    Nimber formula = 0;
    friend bool operator==(const Counterexample&, const Counterexample&) = default;
};

struct VerificationReport {
    VerificationOptions options;
    std::vector<VerificationRow> rows;
    std::size_t total_positions = 0;
    std::size_t total_mismatches = 0;
    std::vector<Counterexample> counterexamples;
    double elapsed_ms = 0;
};

/// Compares the game-tree oracle with the remnant formula on every partition
/// of 0..max_n. Work for each n is split into contiguous chunks, one per
/// worker; each worker keeps its own oracle. The report content apart from
/// timings does not depend on `jobs`. Throws OracleBoundExceeded if max_n is
/// above options.oracle_bound.
VerificationReport verify_theorems(const VerificationOptions& options);

/// The CGH conditions at a single position, given the pairs of its options.
bool forced_at(const ConwayPair& x, std::span<const ConwayPair> options) noexcept;
bool miserable_at(const ConwayPair& x, std::span<const ConwayPair> options) noexcept;
bool pet_at(const ConwayPair& x) noexcept;

struct CghRow {
    int n = 0;
    std::size_t positions = 0;
    std::size_t forced_violations = 0;
    std::size_t miserable_violations = 0;
    std::size_t pet_witnesses = 0;
};

struct CghProperty {
    bool holds = true;
    /// First offending position in enumeration order, if any.
    std::optional<Partition> witness;
    std::optional<ConwayPair> witness_pair;
    /// For forced: the option that breaks the condition.
    std::optional<Partition> witness_option;
    std::optional<ConwayPair> witness_option_pair;
};

/// Empirical check of the forced, miserable and pet conditions on the
/// bounded universe of partitions of 0..max_n (optionally row-limited).
/// Pairs come from the game-tree oracle.
struct CghReport {
    int max_n = 0;
    std::optional<int> max_rows;
    std::size_t positions = 0;
    CghProperty forced;
    CghProperty miserable;
    CghProperty pet;
    /// The pet witness's pair according to the remnant formula.
    std::optional<ConwayPair> pet_witness_formula_pair;
    std::vector<CghRow> rows;
};

CghReport cgh_check(int max_n, std::optional<int> max_rows = std::nullopt,
                    int oracle_bound = default_oracle_bound());

/// The classification claimed for RIT, restricted to the bounded universe:
/// forced and miserable; pet exactly when the universe has no 3-row
/// partition of weight 8 or more (the smallest non-pet position is ⟨4,2,2⟩).
/// Note the forced part does not survive the check: ⟨2,1⟩ is a
/// (1,0)-position with a move to ⟨2⟩, a (2,2)-position.
bool cgh_expected_pet(int max_n, std::optional<int> max_rows) noexcept;
bool cgh_confirms_expected(const CghReport& report) noexcept;

}  // namespace rit
