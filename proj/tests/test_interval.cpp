#include <doctest.h>

#include <random>

#include "glho/interval.hpp"

using namespace glho;

namespace {

Indec random_indec(std::mt19937& rng) {
    std::uniform_int_distribution<std::int64_t> start(-8, 8);
    std::uniform_int_distribution<std::int64_t> len(1, 6);
    std::int64_t a = start(rng);
    switch (std::uniform_int_distribution<int>(0, 3)(rng)) {
        case 0: return Indec::P(a);
        case 1: return Indec::L(a);
        case 2: return Indec::R(a, a + len(rng));
        default: return Indec::B(a, a + len(rng));
    }
}

BlockObject random_object(std::mt19937& rng) {
    BlockObject x;
    int count = std::uniform_int_distribution<int>(0, 5)(rng);
    for (int c = 0; c < count; ++c) {
        x.add(random_indec(rng), std::uniform_int_distribution<std::int64_t>(1, 3)(rng));
    }
    return x;
}

}  // namespace

TEST_CASE("twisted dual swaps R and B and fixes P and simples") {
    CHECK(twisted_dual(Indec::R(0, 3)) == Indec::B(0, 3));
    CHECK(twisted_dual(Indec::B(0, 3)) == Indec::R(0, 3));
    CHECK(twisted_dual(Indec::L(5)) == Indec::L(5));
    CHECK(twisted_dual(Indec::P(2)) == Indec::P(2));
}

TEST_CASE("twisted dual is an involution preserving factors") {
    std::mt19937 rng(101);
    for (int trial = 0; trial < 200; ++trial) {
        BlockObject x = random_object(rng);
        CHECK(twisted_dual(twisted_dual(x)) == x);
        CHECK(composition_factors(twisted_dual(x)) == composition_factors(x));
    }
}

TEST_CASE("kac flags, bottom to top") {
    KacFlags r03 = kac_flag(Indec::R(0, 3));
    CHECK(r03.kac == std::vector<FlagLabel>{{3, false}, {1, false}});
    CHECK(r03.anti.empty());

    KacFlags v = kac_flag(Indec::R(4, 5));  // a single Kac module V(5)
    CHECK(v.kac == std::vector<FlagLabel>{{5, false}});

    KacFlags p0 = kac_flag(Indec::P(0));
    CHECK(p0.kac == std::vector<FlagLabel>{{1, false}, {0, false}});
    CHECK(p0.anti == std::vector<FlagLabel>{{0, true}, {1, true}});

    KacFlags b01 = kac_flag(Indec::B(0, 1));
    CHECK(b01.anti == std::vector<FlagLabel>{{1, true}});
    CHECK(b01.kac.empty());

    KacFlags b03 = kac_flag(Indec::B(0, 3));
    CHECK(b03.anti == std::vector<FlagLabel>{{1, true}, {3, true}});

    CHECK_THROWS_AS(kac_flag(Indec::R(0, 2)), NoFlag);
    CHECK_THROWS_AS(kac_flag(Indec::L(5)), NoFlag);
}

TEST_CASE("flag factors match composition factors on even intervals") {
    std::mt19937 rng(103);
    for (int trial = 0; trial < 100; ++trial) {
        std::int64_t a = std::uniform_int_distribution<std::int64_t>(-8, 8)(rng);
        std::int64_t b = a + 2 * std::uniform_int_distribution<std::int64_t>(0, 4)(rng) + 1;
        BlockObject whole;
        whole.add(Indec::R(a, b));
        BlockObject pieces;
        for (const FlagLabel& f : kac_flag(Indec::R(a, b)).kac) {
            CHECK_FALSE(f.dual);
            pieces.add(Indec::R(f.index - 1, f.index));  // V(i) = R[i-1,i]
        }
        CHECK(composition_factors(pieces) == composition_factors(whole));
    }
}

TEST_CASE("ideal classification") {
    IdealClass r = classify_ideal(Indec::R(0, 3));
    CHECK((r.in_tplus && !r.in_tminus && !r.projective));
    IdealClass b = classify_ideal(Indec::B(0, 1));
    CHECK((!b.in_tplus && b.in_tminus && !b.projective));
    IdealClass p = classify_ideal(Indec::P(5));
    CHECK((p.in_tplus && p.in_tminus && p.projective));
    IdealClass l = classify_ideal(Indec::L(0));
    CHECK((!l.in_tplus && !l.in_tminus && !l.projective));

    BlockObject mixed;
    mixed.add(Indec::P(5)).add(Indec::L(0));
    IdealClass agg = classify_ideal(mixed);
    CHECK((!agg.in_tplus && !agg.in_tminus && !agg.projective));

    IdealClass zero = classify_ideal(BlockObject{});
    CHECK((zero.in_tplus && zero.in_tminus && zero.projective));
}

TEST_CASE("duality swaps the two ideals") {
    std::mt19937 rng(107);
    for (int trial = 0; trial < 200; ++trial) {
        BlockObject x = random_object(rng);
        IdealClass c = classify_ideal(x);
        IdealClass d = classify_ideal(twisted_dual(x));
        CHECK(c.in_tplus == d.in_tminus);
        CHECK(c.in_tminus == d.in_tplus);
        CHECK(c.projective == d.projective);
    }
}

TEST_CASE("composition factors") {
    BlockObject r02;
    r02.add(Indec::R(0, 2));
    CHECK(composition_factors(r02) == std::map<std::int64_t, std::int64_t>{{0, 1}, {1, 1}, {2, 1}});

    BlockObject p0;
    p0.add(Indec::P(0));
    CHECK(composition_factors(p0) ==
          std::map<std::int64_t, std::int64_t>{{-1, 1}, {0, 2}, {1, 1}});

    BlockObject l;
    l.add(Indec::L(-3));
    CHECK(composition_factors(l) == std::map<std::int64_t, std::int64_t>{{-3, 1}});
}

TEST_CASE("B[a,a] normalizes to the simple") {
    CHECK(Indec::B(4, 4) == Indec::L(4));
}
