#pragma once

#include <stdexcept>
#include <vector>

#include "rit/nim.hpp"
#include "rit/partition.hpp"
#include "rit/rit_rules.hpp"

namespace rit {

/// ⟨λ2, λ2, λ4, λ4, ...⟩: the even rows of a partition, each doubled.
struct CorePartition {
    Partition partition;
    friend bool operator==(const CorePartition&, const CorePartition&) = default;
};

/// The positional remnant (λ1-λ2, λ3-λ4, ...), one heap per pair of rows.
/// Zero heaps are kept so heap i always corresponds to row 2i-1.
struct Remnant {
    std::vector<int> heaps;

    Nimber sum() const noexcept;
    /// As a Nim position: zero heaps dropped, sorted descending.
    NimPosition normalized() const;

    /// Positional equality ignoring trailing zero heaps.
    bool same_rows_as(const Remnant& other) const noexcept;

    friend bool operator==(const Remnant&, const Remnant&) = default;
};

CorePartition core_of(const Partition& p);
Remnant rem_of(const Partition& p);

/// Realizes the Nim move "heap `heap_index` (1-based) -> new_size" on
/// rem_of(p) as the RIT move on row 2*heap_index-1. The core is unchanged.
/// Throws std::out_of_range for a bad heap index and std::invalid_argument
/// when new_size is not smaller than the heap.
RitMove lift_nim_move(const Partition& p, std::size_t heap_index, int new_size);

}  // namespace rit
