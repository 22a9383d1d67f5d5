#include "rit/rit_rules.hpp"

#include <string>

namespace rit {

namespace {

// Largest 1-based row whose length is at least k; rows are nonincreasing so
// this is a binary search.
int row_for_column(const Partition& p, int k) {
    auto parts = p.parts();
    std::size_t lo = 0, hi = parts.size();
    while (lo < hi) {
        std::size_t mid = (lo + hi) / 2;
        if (parts[mid] >= k)
            lo = mid + 1;
        else
            hi = mid;
    }
    return static_cast<int>(lo);
}

}  // namespace

RitMove move_for_column(const Partition& p, int k) {
    if (k < 1 || k > p.first())
        throw IllegalMove("column " + std::to_string(k) + " is not in 1.." +
                          std::to_string(p.first()) + " for " + to_string(p));
    int row = row_for_column(p, k);
    return RitMove{k, row, p.row(static_cast<std::size_t>(row)) - (k - 1)};
}

std::vector<RitMove> legal_moves(const Partition& p) {
    std::vector<RitMove> moves;
    moves.reserve(static_cast<std::size_t>(p.first()));
    // Walk rows bottom-up while k increases.
    int row = static_cast<int>(p.rows());
    for (int k = 1; k <= p.first(); ++k) {
        while (p.row(static_cast<std::size_t>(row)) < k)
            --row;
        moves.push_back(RitMove{k, row, p.row(static_cast<std::size_t>(row)) - (k - 1)});
    }
    return moves;
}

RitMove move_on_row(const Partition& p, int row, int removed) {
    if (row < 1 || static_cast<std::size_t>(row) > p.rows())
        throw IllegalMove("row " + std::to_string(row) + " does not exist in " + to_string(p));
    int length = p.row(static_cast<std::size_t>(row));
    if (removed < 1 || removed > length)
        throw IllegalMove("cannot remove " + std::to_string(removed) + " boxes from row " +
                          std::to_string(row) + " of " + to_string(p));
    int k = length - removed + 1;
    if (p.row(static_cast<std::size_t>(row) + 1) >= k)
        throw IllegalMove("shortening row " + std::to_string(row) + " of " + to_string(p) +
                          " to " + std::to_string(k - 1) + " does not leave a Young diagram");
    return RitMove{k, row, removed};
}

Partition apply_move(const Partition& p, const RitMove& m) {
    if (move_for_column(p, m.k) != m)
        throw IllegalMove("move (k=" + std::to_string(m.k) + ", row=" + std::to_string(m.row) +
                          ", removed=" + std::to_string(m.removed) + ") is inconsistent with " +
                          to_string(p));
    std::vector<int> parts(p.parts().begin(), p.parts().end());
    parts[static_cast<std::size_t>(m.row - 1)] = m.k - 1;
    return Partition(std::move(parts));
}

bool is_terminal(const Partition& p) noexcept { return p.empty(); }

RitMove mirror_response(const Partition& p, const RitMove& m) {
    if (m.odd_row())
        throw IllegalMove("mirror response is only defined for even-row moves");
    Partition q = apply_move(p, m);
    return move_on_row(q, m.row - 1, m.removed);
}

}  // namespace rit
