#include <random>
#include <set>

#include "doctest.h"
#include "rit/nim.hpp"

using rit::Convention;
using rit::Nimber;
using rit::NimMove;
using rit::NimPosition;

namespace {

// All positions with up to `heaps` heaps of size <= `max_size`, as
// nonincreasing sequences (zero heaps included).
std::vector<NimPosition> bounded_positions(int heaps, Nimber max_size) {
    std::vector<NimPosition> out;
    std::vector<Nimber> cur;
    auto rec = [&](auto& self, Nimber cap) -> void {
        out.emplace_back(cur);
        if (static_cast<int>(cur.size()) == heaps)
            return;
        for (Nimber s = 0; s <= cap; ++s) {
            cur.push_back(s);
            self(self, s);
            cur.pop_back();
        }
    };
    rec(rec, max_size);
    return out;
}

}  // namespace

TEST_CASE("mex") {
    CHECK(rit::mex({0, 1, 2, 4}) == 3);
    CHECK(rit::mex({1, 2, 3}) == 0);
    CHECK(rit::mex(std::vector<Nimber>{}) == 0);
    CHECK(rit::mex({0, 0, 1, 1}) == 2);
    CHECK(rit::mex({Nimber{1} << 60, 0}) == 1);
    CHECK(rit::mex(std::set<int>{0, 1, 2}) == 3);
}

TEST_CASE("nim_sum") {
    CHECK(rit::nim_sum({5, 3}) == 6);
    CHECK(rit::nim_sum({3, 1, 2}) == 0);
    CHECK(rit::nim_sum({}) == 0);
    for (Nimber a : {Nimber{0}, Nimber{7}, Nimber{12345}, ~Nimber{0}})
        CHECK(rit::nim_sum({a, a}) == 0);
}

TEST_CASE("nim_sum algebra on random 64-bit values") {
    std::mt19937_64 rng(20261017);
    for (int i = 0; i < 2000; ++i) {
        Nimber a = rng(), b = rng(), c = rng();
        CHECK(rit::nim_sum({rit::nim_sum({a, b}), c}) == rit::nim_sum({a, rit::nim_sum({b, c})}));
        CHECK(rit::nim_sum({a, b}) == rit::nim_sum({b, a}));
        CHECK(rit::nim_sum({a, 0}) == a);
        CHECK(rit::nim_sum({a, a}) == 0);
    }
}

TEST_CASE("grundy") {
    CHECK(rit::grundy(NimPosition{3, 1, 2}) == 0);
    CHECK(rit::grundy(NimPosition{1, 1, 2}) == 2);
    CHECK(rit::grundy(NimPosition{}) == 0);
}

TEST_CASE("misere_grundy closed form examples") {
    CHECK(rit::misere_grundy(NimPosition{}) == 1);
    CHECK(rit::misere_grundy(NimPosition{1, 1}) == 1);
    CHECK(rit::misere_grundy(NimPosition{2, 2}) == 0);
    CHECK(rit::misere_grundy(NimPosition{0, 0}) == 1);
}

TEST_CASE("misere_grundy_recursive examples") {
    CHECK(rit::misere_grundy_recursive(NimPosition{}) == 1);
    CHECK(rit::misere_grundy_recursive(NimPosition{1}) == 0);
    CHECK(rit::misere_grundy_recursive(NimPosition{2, 1}) == 3);
    CHECK(rit::misere_grundy_recursive(NimPosition{1, 1}) == 1);
    CHECK(rit::misere_grundy_recursive(NimPosition{2, 2}) == 0);
}

TEST_CASE("NimPosition keeps zero heaps and sorts descending") {
    NimPosition p{0, 3, 1, 0, 2};
    CHECK(std::vector<Nimber>(p.heaps().begin(), p.heaps().end()) == std::vector<Nimber>{3, 2, 1, 0, 0});
    CHECK(p.normalized() == NimPosition{3, 2, 1});
    CHECK(p.total() == 6);
}

TEST_CASE("closed forms equal the literal recursion on <= 4 heaps of size <= 6") {
    rit::NimRecursion recursion;
    auto all = bounded_positions(4, 6);
    CHECK(all.size() == 330);  // multisets of size 0..4 over {0..6}
    for (const auto& p : all) {
        CHECK(rit::misere_grundy(p) == recursion.value(p, Convention::misere));
        CHECK(rit::misere_grundy(p) == rit::misere_grundy_recursive(p));
        CHECK(rit::grundy(p) == recursion.value(p, Convention::normal));
    }
}

TEST_CASE("nim_winning_moves examples") {
    CHECK(rit::nim_winning_moves(NimPosition{1, 1, 2}, Convention::normal) == std::vector<NimMove>{{1, 0}});
    CHECK(rit::nim_winning_moves(NimPosition{3, 1, 2}, Convention::normal).empty());
    CHECK(rit::nim_winning_moves(NimPosition{2}, Convention::misere) == std::vector<NimMove>{{1, 1}});
    CHECK(rit::nim_winning_moves(NimPosition{}, Convention::normal).empty());
    CHECK(rit::nim_winning_moves(NimPosition{}, Convention::misere).empty());
    CHECK(rit::nim_winning_moves(NimPosition{0}, Convention::misere).empty());
}

TEST_CASE("nim_winning_moves is sound and complete on the bounded domain") {
    rit::NimRecursion recursion;
    for (Convention c : {Convention::normal, Convention::misere}) {
        for (const auto& p : bounded_positions(4, 6)) {
            std::vector<NimMove> brute;
            auto heaps = p.heaps();
            for (std::size_t i = 0; i < heaps.size(); ++i)
                for (Nimber s = 0; s < heaps[i]; ++s) {
                    std::vector<Nimber> child(heaps.begin(), heaps.end());
                    child[i] = s;
                    if (recursion.value(NimPosition(child), c) == 0)
                        brute.push_back({i + 1, s});
                }
            CHECK(rit::nim_winning_moves(p, c) == brute);
        }
    }
}

TEST_CASE("conventions parse and print") {
    CHECK(rit::parse_convention("normal") == Convention::normal);
    CHECK(rit::parse_convention("misere") == Convention::misere);
    CHECK(rit::to_string(Convention::misere) == "misere");
    CHECK_THROWS_AS(rit::parse_convention("Misere"), std::invalid_argument);
}
