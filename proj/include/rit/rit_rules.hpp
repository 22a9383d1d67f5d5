#pragma once

#include <stdexcept>
#include <vector>

#include "rit/partition.hpp"

namespace rit {

enum class RowParity { odd, even };

/// A legal RIT move, keyed by its column k. `row` and `removed` are derived
/// from the position the move was generated for.
struct RitMove {
    int k = 0;        ///< column, 1 <= k <= λ1
    int row = 0;      ///< largest 1-based row with λ_row >= k
    int removed = 0;  ///< λ_row - (k - 1)

    RowParity parity() const noexcept { return row % 2 == 1 ? RowParity::odd : RowParity::even; }
    bool odd_row() const noexcept { return parity() == RowParity::odd; }

    friend bool operator==(const RitMove&, const RitMove&) = default;
};

class IllegalMove : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// One move per column k in 1..λ1, k ascending. Empty for the empty partition.
std::vector<RitMove> legal_moves(const Partition& p);

/// The move with column `k`; throws IllegalMove if k is outside 1..λ1.
RitMove move_for_column(const Partition& p, int k);

/// The move that shortens 1-based row `row` by `removed` boxes. Throws
/// IllegalMove if that does not leave a Young diagram.
RitMove move_on_row(const Partition& p, int row, int removed);

/// Sets row m.row to k-1 and drops the row if it becomes empty. Throws
/// IllegalMove unless m is exactly one of legal_moves(p).
Partition apply_move(const Partition& p, const RitMove& m);

bool is_terminal(const Partition& p) noexcept;

/// Answer to an even-row move m on p: the move on row m.row-1 of
/// apply_move(p, m) removing the same number of boxes. The resulting position
/// has the same remnant as p. Throws IllegalMove for odd-row moves.
RitMove mirror_response(const Partition& p, const RitMove& m);

}  // namespace rit
