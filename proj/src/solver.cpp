#include "rit/solver.hpp"

#include <cstdlib>
#include <string>

namespace rit {

std::string_view to_string(Winner w) noexcept { return w == Winner::next ? "next" : "previous"; }

Outcome outcome_of(const ConwayPair& pair, Convention c) noexcept {
    return Outcome{c, pair.get(c) == 0 ? Winner::previous : Winner::next};
}

ConwayPair conway_pair(const Partition& p) {
    NimPosition nim = rem_of(p).normalized();
    return {grundy(nim), misere_grundy(nim)};
}

int default_oracle_bound() {
    if (const char* env = std::getenv("RIT_ORACLE_MAX_N"); env && *env) {
        try {
            int bound = std::stoi(env);
            if (bound >= 0)
                return bound;
        } catch (const std::exception&) {
        }
    }
    return 30;
}

Nimber GrundyOracle::value(const Partition& p, Convention c) {
    if (p.weight() > max_weight_)
        throw OracleBoundExceeded("position " + to_string(p) + " has weight " +
                                  std::to_string(p.weight()) + ", oracle bound is " +
                                  std::to_string(max_weight_));
    return eval(p, c);
}

Nimber GrundyOracle::eval(const Partition& p, Convention c) {
    auto& memo = memo_[c == Convention::normal ? 0 : 1];
    if (auto it = memo.find(p); it != memo.end())
        return it->second;

    Nimber result;
    if (is_terminal(p)) {
        result = c == Convention::normal ? 0 : 1;
    } else {
        std::vector<Nimber> options;
        for (const RitMove& m : legal_moves(p))
            options.push_back(eval(apply_move(p, m), c));
        result = mex(options);
    }
    memo.emplace(p, result);
    return result;
}

Nimber grundy_oracle(const Partition& p, Convention c) {
    thread_local GrundyOracle oracle;
    return oracle.value(p, c);
}

std::vector<RitMove> winning_moves(const Partition& p, Convention c) {
    std::vector<RitMove> out;
    for (const RitMove& m : legal_moves(p))
        if (value_of(apply_move(p, m), c) == 0)
            out.push_back(m);
    return out;
}

bool is_fallback_position(const Partition& p, Convention c) {
    return !is_terminal(p) && value_of(p, c) == 0;
}

std::optional<RitMove> best_move(const Partition& p, Convention c) {
    if (is_terminal(p))
        return std::nullopt;

    Remnant rem = rem_of(p);
    NimPosition nim = rem.normalized();
    auto nim_moves = nim_winning_moves(nim, c);
    if (nim_moves.empty()) {
        // Either p is lost, or (misère only) the remnant is all zeros while p
        // is not empty. In the latter case there are no odd-row moves, and
        // taking one box off the last (even) row leaves a single 1-heap,
        // which is a zero position.
        return move_for_column(p, p.row(p.rows()));
    }

    // Winning Nim moves are stated on the sorted multiset; realize them on the
    // lowest positional heap of the same size.
    for (std::size_t i = 0; i < rem.heaps.size(); ++i) {
        auto size = static_cast<Nimber>(rem.heaps[i]);
        for (const NimMove& w : nim_moves)
            if (nim.heaps()[w.heap - 1] == size)
                return lift_nim_move(p, i + 1, static_cast<int>(w.new_size));
    }
    return std::nullopt;  // unreachable: every winning heap appears positionally
}

std::optional<RitMove> respond(const Partition& p, const RitMove& opponent_move, Convention c) {
    Partition q = apply_move(p, opponent_move);
    if (is_terminal(q))
        return std::nullopt;
    if (!opponent_move.odd_row() && value_of(p, c) == 0)
        return mirror_response(p, opponent_move);
    return best_move(q, c);
}

AnalysisReport analyze(const Partition& p, Convention c) {
    AnalysisReport r;
    r.position = p;
    r.convention = c;
    r.core = core_of(p);
    r.rem = rem_of(p);
    r.pair = conway_pair(p);
    r.normal_outcome = outcome_of(r.pair, Convention::normal);
    r.misere_outcome = outcome_of(r.pair, Convention::misere);
    r.winning_moves = winning_moves(p, c);
    r.engine_move = best_move(p, c);
    r.engine_move_is_fallback = is_fallback_position(p, c);
    return r;
}

}  // namespace rit
