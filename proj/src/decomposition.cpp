#include "rit/decomposition.hpp"

#include <numeric>
#include <string>

namespace rit {

Nimber Remnant::sum() const noexcept {
    Nimber total = 0;
    for (int h : heaps)
        total += static_cast<Nimber>(h);
    return total;
}

NimPosition Remnant::normalized() const {
    std::vector<Nimber> nonzero;
    for (int h : heaps)
        if (h > 0)
            nonzero.push_back(static_cast<Nimber>(h));
    return NimPosition(std::move(nonzero));
}

bool Remnant::same_rows_as(const Remnant& other) const noexcept {
    const auto& a = heaps.size() >= other.heaps.size() ? heaps : other.heaps;
    const auto& b = heaps.size() >= other.heaps.size() ? other.heaps : heaps;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != (i < b.size() ? b[i] : 0))
            return false;
    return true;
}

CorePartition core_of(const Partition& p) {
    std::vector<int> parts;
    for (std::size_t j = 2; j <= p.rows(); j += 2) {
        parts.push_back(p.row(j));
        parts.push_back(p.row(j));
    }
    return CorePartition{Partition(std::move(parts))};
}

Remnant rem_of(const Partition& p) {
    Remnant r;
    r.heaps.reserve((p.rows() + 1) / 2);
    for (std::size_t j = 1; j <= p.rows(); j += 2)
        r.heaps.push_back(p.row(j) - p.row(j + 1));
    return r;
}

RitMove lift_nim_move(const Partition& p, std::size_t heap_index, int new_size) {
    Remnant r = rem_of(p);
    if (heap_index < 1 || heap_index > r.heaps.size())
        throw std::out_of_range("heap " + std::to_string(heap_index) + " is not in 1.." +
                                std::to_string(r.heaps.size()) + " for " + to_string(p));
    int current = r.heaps[heap_index - 1];
    if (new_size < 0 || new_size >= current)
        throw std::invalid_argument("heap " + std::to_string(heap_index) + " of size " +
                                    std::to_string(current) + " cannot be reduced to " +
                                    std::to_string(new_size));
    return move_on_row(p, static_cast<int>(2 * heap_index - 1), current - new_size);
}

}  // namespace rit
