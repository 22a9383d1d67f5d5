#include <set>

#include "doctest.h"
#include "rit/decomposition.hpp"
#include "rit/rit_rules.hpp"

using rit::Partition;
using rit::RitMove;

namespace {

// The move rule written out directly: for column k, find the largest row
// with λ_i >= k by linear scan and set it to k-1.
Partition apply_by_definition(const Partition& p, int k) {
    std::vector<int> parts(p.parts().begin(), p.parts().end());
    int i = -1;
    for (int j = 0; j < static_cast<int>(parts.size()); ++j)
        if (parts[j] >= k)
            i = j;
    parts[i] = k - 1;
    return Partition(parts);
}

}  // namespace

TEST_CASE("legal moves of ⟨5,4,2,1⟩ are the five diagrams in k order") {
    Partition p{5, 4, 2, 1};
    auto moves = rit::legal_moves(p);
    REQUIRE(moves.size() == 5);
    std::vector<Partition> results;
    for (const auto& m : moves)
        results.push_back(rit::apply_move(p, m));
    CHECK(results == std::vector<Partition>{{5, 4, 2}, {5, 4, 1, 1}, {5, 2, 2, 1}, {5, 3, 2, 1}, {4, 4, 2, 1}});
    CHECK(moves[0] == RitMove{1, 4, 1});
    CHECK(moves[1] == RitMove{2, 3, 1});
    CHECK(moves[2] == RitMove{3, 2, 2});
    CHECK(moves[3] == RitMove{4, 2, 1});
    CHECK(moves[4] == RitMove{5, 1, 1});
}

TEST_CASE("legal moves of small positions") {
    CHECK(rit::legal_moves(Partition{}).empty());
    Partition p{2, 2};
    auto moves = rit::legal_moves(p);
    REQUIRE(moves.size() == 2);
    CHECK(rit::apply_move(p, moves[0]) == Partition{2});
    CHECK(rit::apply_move(p, moves[1]) == Partition{2, 1});
}

TEST_CASE("apply_move examples and errors") {
    Partition p{5, 4, 2, 1};
    CHECK(rit::apply_move(p, rit::move_for_column(p, 3)) == Partition{5, 2, 2, 1});
    CHECK(rit::apply_move(p, rit::move_for_column(p, 1)) == Partition{5, 4, 2});
    CHECK(rit::apply_move(Partition{1}, rit::move_for_column(Partition{1}, 1)) == Partition{});

    CHECK_THROWS_AS(rit::move_for_column(p, 0), rit::IllegalMove);
    CHECK_THROWS_AS(rit::move_for_column(p, 6), rit::IllegalMove);
    CHECK_THROWS_AS(rit::apply_move(p, RitMove{3, 1, 3}), rit::IllegalMove);
    CHECK_THROWS_AS(rit::apply_move(p, RitMove{3, 2, 1}), rit::IllegalMove);
    CHECK_THROWS_AS(rit::apply_move(Partition{}, RitMove{1, 1, 1}), rit::IllegalMove);
}

TEST_CASE("is_terminal") {
    CHECK(rit::is_terminal(Partition{}));
    CHECK_FALSE(rit::is_terminal(Partition{1}));
    CHECK_FALSE(rit::is_terminal(Partition{5, 4, 2, 1}));
}

TEST_CASE("move_on_row validates the Young diagram condition") {
    Partition p{5, 4, 2, 1};
    CHECK(rit::move_on_row(p, 2, 1) == RitMove{4, 2, 1});
    CHECK_THROWS_AS(rit::move_on_row(p, 2, 3), rit::IllegalMove);  // row 2 -> 1 < row 3
    CHECK_THROWS_AS(rit::move_on_row(p, 5, 1), rit::IllegalMove);
    CHECK_THROWS_AS(rit::move_on_row(p, 1, 0), rit::IllegalMove);
}

TEST_CASE("mirror_response examples") {
    {
        Partition p{5, 4, 2, 1};
        RitMove m = rit::move_for_column(p, 4);
        CHECK(m == RitMove{4, 2, 1});
        RitMove r = rit::mirror_response(p, m);
        Partition q = rit::apply_move(p, m);
        CHECK(q == Partition{5, 3, 2, 1});
        CHECK(r.row == 1);
        CHECK(r.removed == 1);
        Partition after = rit::apply_move(q, r);
        CHECK(after == Partition{4, 3, 2, 1});
        CHECK(rit::rem_of(after).heaps == std::vector<int>{1, 1});
        CHECK(rit::rem_of(p).heaps == std::vector<int>{1, 1});
    }
    {
        Partition p{2, 2};
        RitMove m = rit::move_for_column(p, 1);
        CHECK(m == RitMove{1, 2, 2});
        RitMove r = rit::mirror_response(p, m);
        CHECK(r == RitMove{1, 1, 2});
        Partition after = rit::apply_move(Partition{2}, r);
        CHECK(after == Partition{});
        CHECK(rit::rem_of(p).heaps == std::vector<int>{0});
        CHECK(rit::rem_of(after).heaps.empty());
        CHECK(rit::rem_of(after).same_rows_as(rit::rem_of(p)));
        CHECK(rit::rem_of(after).normalized() == rit::rem_of(p).normalized());
    }
    {
        Partition p{3, 2};
        RitMove m = rit::move_for_column(p, 2);
        CHECK(m == RitMove{2, 2, 1});
        RitMove r = rit::mirror_response(p, m);
        Partition after = rit::apply_move(rit::apply_move(p, m), r);
        CHECK(after == Partition{2, 1});
        CHECK(rit::rem_of(after).heaps == std::vector<int>{1});
        CHECK(rit::rem_of(p).heaps == std::vector<int>{1});
    }
    CHECK_THROWS_AS(rit::mirror_response(Partition{5, 4, 2, 1}, RitMove{5, 1, 1}), rit::IllegalMove);
}

TEST_CASE("move properties hold for every partition of n <= 16") {
    for (int n = 0; n <= 16; ++n) {
        for (const auto& p : rit::all_partitions(n)) {
            auto moves = rit::legal_moves(p);
            REQUIRE(static_cast<int>(moves.size()) == p.first());
            std::set<Partition> results;
            for (std::size_t i = 0; i < moves.size(); ++i) {
                const auto& m = moves[i];
                CHECK(m.k == static_cast<int>(i) + 1);
                CHECK(m.removed >= 1);
                CHECK(m.odd_row() == (m.row % 2 == 1));
                CHECK(rit::move_for_column(p, m.k) == m);
                Partition q = rit::apply_move(p, m);
                CHECK(q == apply_by_definition(p, m.k));
                CHECK(q.weight() == p.weight() - m.removed);
                results.insert(q);
            }
            CHECK(results.size() == moves.size());
        }
    }
}

TEST_CASE("mirror response restores the remnant for every even-row move, n <= 14") {
    for (int n = 0; n <= 14; ++n) {
        for (const auto& p : rit::all_partitions(n)) {
            if (p.rows() < 2)
                continue;
            for (const auto& m : rit::legal_moves(p)) {
                if (m.odd_row())
                    continue;
                Partition q = rit::apply_move(p, m);
                RitMove r = rit::mirror_response(p, m);
                CHECK(r.row == m.row - 1);
                CHECK(r.removed == m.removed);
                Partition back = rit::apply_move(q, r);
                CHECK(rit::rem_of(back).same_rows_as(rit::rem_of(p)));
            }
        }
    }
}
