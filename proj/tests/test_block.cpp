#include <doctest.h>

#include <random>

#include "glho/block.hpp"

using namespace glho;

namespace {

BlockKey random_key(std::mt19937& rng, int m) {
    std::uniform_int_distribution<std::int64_t> label(-9, 9);
    std::set<std::int64_t> pool;
    while (static_cast<int>(pool.size()) < m) pool.insert(label(rng));
    auto it = pool.begin();
    std::advance(it, std::uniform_int_distribution<int>(0, m - 1)(rng));
    std::int64_t base = *it;
    pool.erase(it);
    return BlockKey::make(std::move(pool), base);
}

}  // namespace

TEST_CASE("block key extraction") {
    BlockKey k = block_key(Weight::make(2, 1, {0, 0, 0}));
    CHECK(k.core == std::set<std::int64_t>{0});
    CHECK(k.base == -1);
    CHECK(k.m == 2);

    BlockKey gl11 = block_key(Weight::make(1, 1, {5, -5}));
    CHECK(gl11.core.empty());
    CHECK(gl11.base == 5);

    CHECK_THROWS_AS(block_key(Weight::make(1, 1, {5, -4})), TypicalWeight);
    CHECK_THROWS_AS(block_key(Weight::make(1, 2, {0, 1, -1})), WrongShape);
}

TEST_CASE("positions skip the core") {
    BlockKey k = BlockKey::make({0}, -1);
    CHECK(position(k, 0) == -1);
    CHECK(step(k, 0, -1) == -2);
    CHECK(step(k, 0, +1) == 1);  // skips the core label 0
    CHECK(step(k, 0, +2) == 2);

    BlockKey free = BlockKey::make({}, 7);
    CHECK(step(free, 0, 2) == 9);
    CHECK(step(free, 0, -5) == 2);
}

TEST_CASE("index_of_position inverts position") {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 100; ++trial) {
        BlockKey k = random_key(rng, std::uniform_int_distribution<int>(1, 4)(rng));
        for (std::int64_t i = -12; i <= 12; ++i) {
            CHECK(index_of_position(k, position(k, i)) == i);
        }
    }
}

TEST_CASE("weight_at examples") {
    BlockKey k = BlockKey::make({0}, -1);
    CHECK(weight_at(k, 0) == Weight::make(2, 1, {0, 0, 0}));
    CHECK(weight_at(k, -1) == Weight::make(2, 1, {0, -1, 1}));
    CHECK(weight_at(k, +1) == Weight::make(2, 1, {1, 1, -2}));
}

TEST_CASE("block degrees") {
    for (std::int64_t a : {-4, 0, 3}) {
        BlockKey k = BlockKey::make({}, a);
        CHECK(block_deg(k, 0) == a);
    }
    BlockKey k = BlockKey::make({0}, -1);
    CHECK(block_deg(k, 0) == 0);
    CHECK(block_deg(k, -2) == -2);
    CHECK(weight_at(k, -2) == Weight::make(2, 1, {0, -2, 2}));
}

TEST_CASE("round trip, monotone degree, degree gaps, constant charge") {
    std::mt19937 rng(23);
    for (int trial = 0; trial < 200; ++trial) {
        int m = std::uniform_int_distribution<int>(1, 4)(rng);
        BlockKey k = random_key(rng, m);
        Weight w0 = weight_at(k, 0);
        CHECK(block_key(w0) == k);
        CHECK(weight_at(block_key(w0), 0) == w0);

        std::int64_t charge = block_charge(k);
        for (std::int64_t i = -10; i <= 10; ++i) {
            Weight wi = weight_at(k, i);
            CHECK(central_charge(wi) == charge);
            CHECK(atypicality(wi) == 1);
            if (i > -10) {
                std::int64_t lo = position(k, i - 1);
                std::int64_t hi = position(k, i);
                std::int64_t skipped = 0;
                for (std::int64_t c : k.core) {
                    if (c > lo && c < hi) ++skipped;
                }
                CHECK(block_deg(k, i) - block_deg(k, i - 1) == 1 + skipped);
            }
        }
    }
}
