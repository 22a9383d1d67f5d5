#pragma once

#include <optional>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "rit/decomposition.hpp"
#include "rit/nim.hpp"
#include "rit/partition.hpp"
#include "rit/rit_rules.hpp"

namespace rit {

/// (normal Grundy value, misère Grundy value) of a position.
struct ConwayPair {
    Nimber normal = 0;
    Nimber misere = 0;

    Nimber get(Convention c) const noexcept { return c == Convention::normal ? normal : misere; }
    friend bool operator==(const ConwayPair&, const ConwayPair&) = default;
};

enum class Winner { next, previous };

struct Outcome {
    Convention convention = Convention::normal;
    Winner winner = Winner::previous;
    friend bool operator==(const Outcome&, const Outcome&) = default;
};

std::string_view to_string(Winner w) noexcept;

Outcome outcome_of(const ConwayPair& pair, Convention c) noexcept;

/// Conway pair read off the remnant: (nim-sum, misère Nim value).
ConwayPair conway_pair(const Partition& p);

inline Nimber value_of(const Partition& p, Convention c) { return conway_pair(p).get(c); }

class OracleBoundExceeded : public std::range_error {
public:
    using std::range_error::range_error;
};

/// Weight bound for the game-tree oracle: RIT_ORACLE_MAX_N if set, else 30.
int default_oracle_bound();

/// Brute-force Grundy values from the move rule alone, memoized per
/// convention. Never consults the core/remnant decomposition. Not
/// thread-safe; give each worker its own instance.
class GrundyOracle {
public:
    explicit GrundyOracle(int max_weight = default_oracle_bound()) : max_weight_(max_weight) {}

    Nimber value(const Partition& p, Convention c);
    ConwayPair pair(const Partition& p) {
        return {value(p, Convention::normal), value(p, Convention::misere)};
    }

    int max_weight() const noexcept { return max_weight_; }
    std::size_t memo_size() const noexcept { return memo_[0].size() + memo_[1].size(); }

private:
    Nimber eval(const Partition& p, Convention c);

    int max_weight_;
    std::unordered_map<Partition, Nimber, PartitionHash> memo_[2];
};

/// Free-function form of GrundyOracle::value with a thread-local oracle at
/// the default bound.
Nimber grundy_oracle(const Partition& p, Convention c);

/// Every legal move (any row) leading to a position of value 0 under `c`.
std::vector<RitMove> winning_moves(const Partition& p, Convention c);

/// Engine move. From a winning position: the first lifted Nim winning move
/// (lowest heap, then largest removal), which is on an odd row. The one
/// exception is a misère position with an all-zero remnant; it has no odd-row
/// moves and wins by taking one box off the last row. From a losing
/// position: one box off the last row. Nothing for the empty partition.
std::optional<RitMove> best_move(const Partition& p, Convention c);

/// True when best_move(p, c) would be the losing-side fallback.
bool is_fallback_position(const Partition& p, Convention c);

/// Engine reply to `opponent_move` played on p. Even-row moves out of a
/// zero-value position are answered by the mirror move; everything else by
/// best_move on the new position. Throws IllegalMove for an illegal move.
std::optional<RitMove> respond(const Partition& p, const RitMove& opponent_move, Convention c);

struct AnalysisReport {
    Partition position;
    Convention convention = Convention::normal;
    CorePartition core;
    Remnant rem;
    ConwayPair pair;
    Outcome normal_outcome;
    Outcome misere_outcome;
    std::vector<RitMove> winning_moves;
    std::optional<RitMove> engine_move;
    bool engine_move_is_fallback = false;
};

AnalysisReport analyze(const Partition& p, Convention c);

}  // namespace rit
