#include "rit/nim.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <string>

namespace rit {

std::string_view to_string(Convention c) noexcept {
    return c == Convention::normal ? "normal" : "misere";
}

Convention parse_convention(std::string_view text) {
    if (text == "normal")
        return Convention::normal;
    if (text == "misere")
        return Convention::misere;
    throw std::invalid_argument("unknown convention \"" + std::string(text) +
                                "\" (expected normal or misere)");
}

Nimber nim_sum(std::span<const Nimber> values) noexcept {
    return std::accumulate(values.begin(), values.end(), Nimber{0}, std::bit_xor<>{});
}

NimPosition::NimPosition(std::vector<Nimber> heaps) : heaps_(std::move(heaps)) {
    std::sort(heaps_.begin(), heaps_.end(), std::greater<>{});
}

Nimber NimPosition::total() const noexcept {
    return std::accumulate(heaps_.begin(), heaps_.end(), Nimber{0});
}

NimPosition NimPosition::normalized() const {
    std::vector<Nimber> nonzero;
    nonzero.reserve(heaps_.size());
    for (Nimber h : heaps_)
        if (h != 0)
            nonzero.push_back(h);
    return NimPosition(std::move(nonzero));
}

Nimber grundy(const NimPosition& p) noexcept { return nim_sum(p.heaps()); }

Nimber misere_grundy(const NimPosition& p) noexcept {
    Nimber g = grundy(p);
    bool any_large = std::any_of(p.heaps().begin(), p.heaps().end(), [](Nimber h) { return h >= 2; });
    return any_large ? g : g ^ 1u;
}

std::size_t NimRecursion::Hash::operator()(const std::vector<Nimber>& v) const noexcept {
    std::size_t h = 0x9e3779b97f4a7c15ull;
    for (Nimber x : v)
        h = (h ^ x) * 0x100000001b3ull;
    return h;
}

Nimber NimRecursion::value(const NimPosition& p, Convention c) {
    auto norm = p.normalized();
    return eval(std::vector<Nimber>(norm.heaps().begin(), norm.heaps().end()), c);
}

Nimber NimRecursion::eval(const std::vector<Nimber>& heaps, Convention c) {
    auto& memo = memo_[c == Convention::normal ? 0 : 1];
    if (auto it = memo.find(heaps); it != memo.end())
        return it->second;

    Nimber result;
    if (heaps.empty()) {
        result = c == Convention::normal ? 0 : 1;
    } else {
        std::vector<Nimber> options;
        for (std::size_t i = 0; i < heaps.size(); ++i) {
            if (i > 0 && heaps[i] == heaps[i - 1])
                continue;
            for (Nimber s = 0; s < heaps[i]; ++s) {
                std::vector<Nimber> child = heaps;
                child[i] = s;
                auto norm = NimPosition(std::move(child)).normalized();
                options.push_back(
                    eval(std::vector<Nimber>(norm.heaps().begin(), norm.heaps().end()), c));
            }
        }
        result = mex(options);
    }
    memo.emplace(heaps, result);
    return result;
}

Nimber misere_grundy_recursive(const NimPosition& p) {
    thread_local NimRecursion recursion;
    return recursion.value(p, Convention::misere);
}

std::vector<NimMove> nim_winning_moves(const NimPosition& p, Convention c) {
    std::vector<NimMove> out;
    if (grundy_value(p, c) == 0)
        return out;
    const auto heaps = p.heaps();
    const Nimber total = grundy(p);
    std::size_t large = std::count_if(heaps.begin(), heaps.end(), [](Nimber h) { return h >= 2; });

    for (std::size_t i = 0; i < heaps.size(); ++i) {
        if (c == Convention::normal || large >= 2) {
            // A nonzero nim-sum has exactly one zeroing target per heap.
            Nimber target = heaps[i] ^ total;
            if (target < heaps[i])
                out.push_back({i + 1, target});
        } else if (large == 1) {
            // Misère endgame: only the single large heap can win, by leaving
            // an odd number of 1-heaps.
            if (heaps[i] < 2)
                continue;
            std::size_t ones = std::count(heaps.begin(), heaps.end(), Nimber{1});
            out.push_back({i + 1, ones % 2 == 0 ? Nimber{1} : Nimber{0}});
        } else {
            // All heaps <= 1 with an even count of ones: take any single one.
            if (heaps[i] == 1)
                out.push_back({i + 1, 0});
        }
    }
    return out;
}

}  // namespace rit
