#include <algorithm>

#include "doctest.h"
#include "rit/decomposition.hpp"

using rit::Nimber;
using rit::NimPosition;
using rit::Partition;

namespace {

std::vector<int> padded(std::vector<int> heaps, std::size_t size) {
    heaps.resize(std::max(size, heaps.size()), 0);
    return heaps;
}

// All Nim moves of a positional heap list, results kept positional.
std::vector<std::vector<int>> nim_children(const std::vector<int>& heaps) {
    std::vector<std::vector<int>> out;
    for (std::size_t i = 0; i < heaps.size(); ++i)
        for (int s = 0; s < heaps[i]; ++s) {
            auto child = heaps;
            child[i] = s;
            out.push_back(child);
        }
    return out;
}

}  // namespace

TEST_CASE("core_of examples") {
    CHECK(rit::core_of(Partition{5, 4, 2, 1}).partition == Partition{4, 4, 1, 1});
    CHECK(rit::core_of(Partition{}).partition == Partition{});
    CHECK(rit::core_of(Partition{5, 4, 2}).partition == Partition{4, 4});
    CHECK(rit::core_of(Partition{7}).partition == Partition{});
}

TEST_CASE("rem_of examples") {
    CHECK(rit::rem_of(Partition{5, 4, 2, 1}).heaps == std::vector<int>{1, 1});
    CHECK(rit::rem_of(Partition{}).heaps.empty());
    CHECK(rit::rem_of(Partition{4, 2, 2}).heaps == std::vector<int>{2, 2});
    CHECK(rit::rem_of(Partition{3, 1}).heaps == std::vector<int>{2});
    CHECK(rit::rem_of(Partition{2, 2}).heaps == std::vector<int>{0});
    CHECK(rit::rem_of(Partition{2, 2}).normalized() == NimPosition{});
    CHECK(rit::rem_of(Partition{3, 3, 2, 1, 1}).normalized() == NimPosition{1, 1});
}

TEST_CASE("lift_nim_move examples") {
    {
        Partition p{5, 4, 2, 1};
        auto m = rit::lift_nim_move(p, 1, 0);
        CHECK(m.row == 1);
        CHECK(m.removed == 1);
        Partition q = rit::apply_move(p, m);
        CHECK(q == Partition{4, 4, 2, 1});
        CHECK(rit::rem_of(q).heaps == std::vector<int>{0, 1});
    }
    {
        Partition p{3, 1};
        auto m = rit::lift_nim_move(p, 1, 1);
        CHECK(m.row == 1);
        CHECK(m.removed == 1);
        Partition q = rit::apply_move(p, m);
        CHECK(q == Partition{2, 1});
        CHECK(rit::rem_of(q).heaps == std::vector<int>{1});
    }
    {
        Partition p{4, 2, 2};
        auto m = rit::lift_nim_move(p, 2, 0);
        CHECK(m.row == 3);
        CHECK(m.removed == 2);
        Partition q = rit::apply_move(p, m);
        CHECK(q == Partition{4, 2});
        CHECK(rit::rem_of(q).heaps == std::vector<int>{2});
        CHECK(rit::rem_of(q).same_rows_as(rit::Remnant{{2, 0}}));
    }
}

TEST_CASE("lift_nim_move errors") {
    Partition p{5, 4, 2, 1};
    CHECK_THROWS_AS(rit::lift_nim_move(p, 0, 0), std::out_of_range);
    CHECK_THROWS_AS(rit::lift_nim_move(p, 3, 0), std::out_of_range);
    CHECK_THROWS_AS(rit::lift_nim_move(p, 1, 1), std::invalid_argument);
    CHECK_THROWS_AS(rit::lift_nim_move(p, 1, -1), std::invalid_argument);
    CHECK_THROWS_AS(rit::lift_nim_move(Partition{2, 2}, 1, 0), std::invalid_argument);
}

TEST_CASE("Remnant::same_rows_as ignores only trailing zeros") {
    CHECK(rit::Remnant{{2, 0}}.same_rows_as(rit::Remnant{{2}}));
    CHECK(rit::Remnant{{}}.same_rows_as(rit::Remnant{{0, 0}}));
    CHECK_FALSE(rit::Remnant{{0, 2}}.same_rows_as(rit::Remnant{{2}}));
    CHECK_FALSE(rit::Remnant{{1, 1}}.same_rows_as(rit::Remnant{{1}}));
}

TEST_CASE("core and remnant conserve weight, n <= 20") {
    for (int n = 0; n <= 20; ++n) {
        for (const auto& p : rit::all_partitions(n)) {
            auto core = rit::core_of(p).partition;
            auto rem = rit::rem_of(p);
            CHECK(core.weight() + static_cast<int>(rem.sum()) == p.weight());
            CHECK(rem.heaps.size() == (p.rows() + 1) / 2);
            CHECK(core.rows() == 2 * (p.rows() / 2));
            for (std::size_t j = 0; j + 1 < core.rows(); j += 2)
                CHECK(core.parts()[j] == core.parts()[j + 1]);
            for (int h : rem.heaps)
                CHECK(h >= 0);
            if (p.rows() % 2 == 1)
                CHECK(rem.heaps.back() == p.row(p.rows()));
        }
    }
}

TEST_CASE("odd-row moves keep the core and are Nim moves on the remnant, n <= 14") {
    for (int n = 0; n <= 14; ++n) {
        for (const auto& p : rit::all_partitions(n)) {
            const auto core = rit::core_of(p);
            const auto rem = rit::rem_of(p).heaps;
            std::vector<std::vector<int>> odd_results;
            for (const auto& m : rit::legal_moves(p)) {
                if (!m.odd_row())
                    continue;
                Partition q = rit::apply_move(p, m);
                CHECK(rit::core_of(q) == core);
                auto after = padded(rit::rem_of(q).heaps, rem.size());
                REQUIRE(after.size() == rem.size());
                int changed = 0;
                for (std::size_t i = 0; i < rem.size(); ++i) {
                    if (after[i] != rem[i]) {
                        ++changed;
                        CHECK(after[i] < rem[i]);
                        CHECK(static_cast<int>(i) == (m.row - 1) / 2);
                    }
                }
                CHECK(changed == 1);
                odd_results.push_back(after);
            }
            // Bijection onto the Nim moves, positionally and as multisets.
            auto nim = nim_children(rem);
            auto sorted_odd = odd_results;
            std::sort(sorted_odd.begin(), sorted_odd.end());
            std::sort(nim.begin(), nim.end());
            CHECK(sorted_odd == nim);
            CHECK(std::adjacent_find(sorted_odd.begin(), sorted_odd.end()) == sorted_odd.end());

            std::vector<std::vector<Nimber>> norm_odd, norm_nim;
            for (const auto& r : odd_results) {
                auto np = rit::Remnant{r}.normalized();
                norm_odd.emplace_back(np.heaps().begin(), np.heaps().end());
            }
            for (const auto& r : nim_children(rem)) {
                auto np = rit::Remnant{r}.normalized();
                norm_nim.emplace_back(np.heaps().begin(), np.heaps().end());
            }
            std::sort(norm_odd.begin(), norm_odd.end());
            std::sort(norm_nim.begin(), norm_nim.end());
            CHECK(norm_odd == norm_nim);
        }
    }
}

TEST_CASE("lift then rem reproduces the requested Nim position, n <= 14") {
    for (int n = 0; n <= 14; ++n) {
        for (const auto& p : rit::all_partitions(n)) {
            const auto rem = rit::rem_of(p).heaps;
            for (std::size_t i = 0; i < rem.size(); ++i) {
                for (int s = 0; s < rem[i]; ++s) {
                    auto m = rit::lift_nim_move(p, i + 1, s);
                    CHECK(m.odd_row());
                    Partition q = rit::apply_move(p, m);
                    auto want = rem;
                    want[i] = s;
                    CHECK(rit::rem_of(q).same_rows_as(rit::Remnant{want}));
                    CHECK(rit::core_of(q) == rit::core_of(p));
                }
            }
        }
    }
}
