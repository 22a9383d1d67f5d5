#pragma once

#include <cstdint>
#include <initializer_list>
#include <ranges>
#include <span>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace rit {

using Nimber = std::uint64_t;

enum class Convention { normal, misere };

std::string_view to_string(Convention c) noexcept;
/// Accepts "normal" or "misere"; throws std::invalid_argument otherwise.
Convention parse_convention(std::string_view text);

/// Smallest nonnegative integer not in `values`.
template <std::ranges::input_range R>
Nimber mex(R&& values) {
    std::vector<Nimber> all;
    for (auto v : values)
        all.push_back(static_cast<Nimber>(v));
    // The mex never exceeds the number of values.
    std::vector<bool> seen(all.size() + 1, false);
    for (Nimber x : all)
        if (x < seen.size())
            seen[x] = true;
    Nimber m = 0;
    while (m < seen.size() && seen[m])
        ++m;
    return m;
}

inline Nimber mex(std::initializer_list<Nimber> values) {
    return mex(std::span<const Nimber>(values.begin(), values.size()));
}

Nimber nim_sum(std::span<const Nimber> values) noexcept;
inline Nimber nim_sum(std::initializer_list<Nimber> values) noexcept {
    return nim_sum(std::span<const Nimber>(values.begin(), values.size()));
}

/// A Nim position: a multiset of heap sizes, held sorted in descending order.
/// Zero heaps are kept but admit no move.
class NimPosition {
public:
    NimPosition() = default;
    explicit NimPosition(std::vector<Nimber> heaps);
    NimPosition(std::initializer_list<Nimber> heaps) : NimPosition(std::vector<Nimber>(heaps)) {}

    std::span<const Nimber> heaps() const noexcept { return heaps_; }
    std::size_t size() const noexcept { return heaps_.size(); }
    Nimber total() const noexcept;

    /// Same multiset with zero heaps removed.
    NimPosition normalized() const;

    friend bool operator==(const NimPosition&, const NimPosition&) = default;

private:
    std::vector<Nimber> heaps_;
};

/// A Nim move: heap `heap` (1-based, in the position's sorted order) is
/// reduced to `new_size`.
struct NimMove {
    std::size_t heap = 0;
    Nimber new_size = 0;
    friend bool operator==(const NimMove&, const NimMove&) = default;
};

Nimber grundy(const NimPosition& p) noexcept;

/// Misère Grundy value: the nim-sum, flipped in its low bit when no heap
/// exceeds 1.
Nimber misere_grundy(const NimPosition& p) noexcept;

inline Nimber grundy_value(const NimPosition& p, Convention c) noexcept {
    return c == Convention::normal ? grundy(p) : misere_grundy(p);
}

/// Literal mex recursion over Nim moves, memoized on the normalized multiset.
/// Confine one instance per thread.
class NimRecursion {
public:
    Nimber value(const NimPosition& p, Convention c);

private:
    struct Hash {
        std::size_t operator()(const std::vector<Nimber>& v) const noexcept;
    };
    Nimber eval(const std::vector<Nimber>& heaps, Convention c);

    std::unordered_map<std::vector<Nimber>, Nimber, Hash> memo_[2];
};

/// Recursive misère value using a thread-local memo. Intended for small
/// positions only.
Nimber misere_grundy_recursive(const NimPosition& p);

/// Every single-heap reduction after which the value under `c` is 0,
/// ordered by heap index then new size ascending.
std::vector<NimMove> nim_winning_moves(const NimPosition& p, Convention c);

}  // namespace rit
