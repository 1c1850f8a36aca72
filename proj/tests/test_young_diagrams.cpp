#include "helpers.hpp"

#include "bowforge/errors.hpp"
#include "bowforge/young_diagrams.hpp"

#include <numeric>
#include <random>

using namespace bowforge;

namespace {

std::vector<Int> random_entries(std::mt19937& rng, int rank, int level)
{
    std::uniform_int_distribution<Int> top(-5, 5);
    std::vector<Int> e(rank);
    e[0] = top(rng);
    Int floor = e[0] - level;
    for (int i = 1; i < rank; ++i) {
        Int lo = floor, hi = e[i - 1];
        std::uniform_int_distribution<Int> pick(lo, hi);
        e[i] = pick(rng);
    }
    return e;
}

} // namespace

TEST_CASE("transpose examples")
{
    CHECK(gyd_transpose(GYDiagram(2, 3, {2, -1})).entries == std::vector<Int>{1, 1, -1});
    CHECK(gyd_transpose(GYDiagram(2, 3, {2, -1})).rank == 3);
    CHECK(gyd_transpose(GYDiagram(2, 3, {2, -1})).level == 2);
    CHECK(gyd_transpose(GYDiagram(3, 2, {0, 0, 0})).entries == std::vector<Int>{0, 0});
    CHECK(gyd_transpose(GYDiagram(2, 1, {1, 0})).entries == std::vector<Int>{1});
}

TEST_CASE("level constraint")
{
    CHECK(satisfies_level_constraint(3, {2, -1}));
    CHECK_FALSE(satisfies_level_constraint(2, {2, -1}));
    CHECK_FALSE(satisfies_level_constraint(3, {0, 1}));
    CHECK_THROWS_AS(GYDiagram(2, 2, {2, -1}), DomainError);
    CHECK_THROWS_AS(GYDiagram(2, 2, {0}), DomainError);
}

TEST_CASE("gray cells")
{
    GYDiagram d(2, 3, {2, -1});
    CHECK(cell_is_gray(d, 1, 1, 0));
    CHECK(cell_is_gray(d, 1, 2, 0));
    CHECK_FALSE(cell_is_gray(d, 1, 3, 0));
    CHECK(cell_is_gray(d, 1, 3, -1));
    CHECK_FALSE(cell_is_gray(d, 2, 1, 0));
    CHECK(cell_is_gray(d, 2, 2, -1));
    CHECK_FALSE(cell_is_gray(d, 2, 3, -1));
}

TEST_CASE("rotation")
{
    CHECK(gyd_rotate(GYDiagram(3, 2, {1, 1, -1})).entries == std::vector<Int>{1, -1, -1});
    CHECK(gyd_rotate(GYDiagram(2, 0, {0, 0})).entries == std::vector<Int>{0, 0});

    std::mt19937 rng(17);
    for (int trial = 0; trial < 50; ++trial) {
        int rank = 1 + trial % 4;
        int level = trial % 3;
        GYDiagram d(rank, level, random_entries(rng, rank, level));
        GYDiagram r = d;
        for (int k = 0; k < rank; ++k)
            r = gyd_rotate(r);
        std::vector<Int> shifted = d.entries;
        for (auto& a : shifted)
            a -= level;
        CHECK(r.entries == shifted);
    }
}

TEST_CASE("transpose is an involution and preserves the number of boxes")
{
    std::mt19937 rng(23);
    for (int trial = 0; trial < 200; ++trial) {
        int rank = 1 + trial % 4;
        int level = 1 + (trial / 4) % 4;
        GYDiagram d(rank, level, random_entries(rng, rank, level));
        GYDiagram t = gyd_transpose(d);
        CHECK(t.rank == level);
        CHECK(t.level == rank);
        CHECK(satisfies_level_constraint(t.level, t.entries));
        CHECK(gyd_transpose(t) == d);
        CHECK(std::accumulate(t.entries.begin(), t.entries.end(), Int(0))
              == std::accumulate(d.entries.begin(), d.entries.end(), Int(0)));
        std::vector<Int> lowered = d.entries;
        for (auto& a : lowered)
            a -= 1;
        CHECK(gyd_transpose(GYDiagram(rank, level, lowered)) == gyd_rotate(t));
        for (int row = 1; row <= rank; ++row)
            for (int col = 1; col <= level; ++col)
                for (Int block = -3; block <= 3; ++block)
                    CHECK(cell_is_gray(d, row, col, block) == cell_is_gray(t, col, row, block));
    }
}

TEST_CASE("weights and diagrams")
{
    CHECK(gyd_from_weight(L(2, 0)).entries == std::vector<Int>{0, 0});
    GYDiagram d = gyd_from_weight(W(2, 3, {2, -1}));
    CHECK(d.entries == std::vector<Int>{2, -1});
    CHECK(d.level == 3);
    CHECK_THROWS_AS(gyd_from_weight(W(2, 1, {2, -1})), DomainError);

    std::mt19937 rng(29);
    for (int trial = 0; trial < 100; ++trial) {
        int n = 1 + trial % 4;
        int level = 1 + trial % 3;
        auto e = random_entries(rng, n, level);
        AffineWeight mu(n, level, e, Rational(trial % 5 - 2));
        CHECK(gyd_to_weight(gyd_from_weight(mu), mu.delta) == mu);
    }
}
