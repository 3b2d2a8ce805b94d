#include <doctest.h>

#include <random>

#include "glho/kseries.hpp"

using namespace glho;

namespace {

KSeries kac_series(const BlockKey& key, std::initializer_list<std::int64_t> indices,
                   SeriesVariant variant = SeriesVariant::kac_plus) {
    KSeries s;
    s.variant = variant;
    s.key = key;
    for (std::int64_t i : indices) s.add_term(block_deg(key, i), i, 1);
    if (!s.terms.empty()) {
        s.d_max = s.terms.rbegin()->first;
        s.truncation = s.terms.begin()->first;
    }
    return s;
}

}  // namespace

TEST_CASE("expansion of a single Kac term, principal GL(1|1) block") {
    for (std::int64_t a : {-3, 0, 4}) {
        BlockKey key = BlockKey::make({}, a);
        KSeries s = kac_series(key, {0});
        KSeries e = expand_to_simples(s);
        CHECK(e.variant == SeriesVariant::simple);
        REQUIRE(e.terms.size() == 2);
        CHECK(e.terms.at(a) == std::map<std::int64_t, std::int64_t>{{0, 1}});
        CHECK(e.terms.at(a - 1) == std::map<std::int64_t, std::int64_t>{{-1, 1}});
    }
}

TEST_CASE("expansion of the empty series is empty") {
    KSeries s;
    s.variant = SeriesVariant::kac_plus;
    s.key = BlockKey::make({}, 0);
    CHECK(expand_to_simples(s).zero());
}

TEST_CASE("anti-Kac terms expand to the same factors") {
    BlockKey key = BlockKey::make({}, 5);
    KSeries plus = kac_series(key, {-1, -3});
    KSeries minus = kac_series(key, {-1, -3}, SeriesVariant::kac_minus);
    KSeries ep = expand_to_simples(plus);
    KSeries em = expand_to_simples(minus);
    CHECK(ep.terms == em.terms);
    // V(a-1)* contributes L(a-1) at a-1 and L(a-2) at a-2.
    CHECK(em.terms.at(4) == std::map<std::int64_t, std::int64_t>{{-1, 1}});
    CHECK(em.terms.at(3) == std::map<std::int64_t, std::int64_t>{{-2, 1}});
}

TEST_CASE("expansion needs a key") {
    KSeries s;
    s.variant = SeriesVariant::kac_plus;
    s.add_term(0, 0, 1);
    CHECK_THROWS_AS(expand_to_simples(s), UnknownBlock);
}

TEST_CASE("expansion is additive and commutes with q-shifts") {
    std::mt19937 rng(61);
    for (int trial = 0; trial < 100; ++trial) {
        std::set<std::int64_t> core;
        int m = std::uniform_int_distribution<int>(1, 3)(rng);
        std::uniform_int_distribution<std::int64_t> label(-8, 8);
        while (static_cast<int>(core.size()) < m - 1) core.insert(label(rng));
        std::int64_t base = label(rng);
        while (core.count(base)) ++base;
        BlockKey key = BlockKey::make(core, base);

        auto random_series = [&] {
            KSeries s;
            s.variant = SeriesVariant::kac_plus;
            s.key = key;
            int terms = std::uniform_int_distribution<int>(0, 5)(rng);
            for (int t = 0; t < terms; ++t) {
                std::int64_t i = label(rng);
                s.add_term(block_deg(key, i), i,
                           std::uniform_int_distribution<std::int64_t>(-2, 2)(rng));
            }
            return s;
        };
        KSeries x = random_series();
        KSeries y = random_series();
        CHECK(expand_to_simples(x + y) == expand_to_simples(x) + expand_to_simples(y));
        std::int64_t k = std::uniform_int_distribution<std::int64_t>(-4, 4)(rng);
        CHECK(expand_to_simples(x.q_shift(k)) == expand_to_simples(x).q_shift(k));
    }
}

TEST_CASE("minimal model series in the principal GL(1|1) block") {
    for (std::int64_t a : {-2, 0, 3}) {
        BlockKey key = BlockKey::make({}, a);
        MinimalModelSeries mm = minimal_model_series(key, 0, 3);
        REQUIRE(mm.omega.terms.size() == 4);
        for (int i = 0; i <= 3; ++i) {
            CHECK(mm.omega.terms.at(a - 2 * i) ==
                  std::map<std::int64_t, std::int64_t>{{-2 * i, 1}});
        }
        REQUIRE(mm.kernel.terms.size() == 3);
        for (int i = 1; i <= 3; ++i) {
            CHECK(mm.kernel.terms.at(a - 2 * i + 1) ==
                  std::map<std::int64_t, std::int64_t>{{-2 * i + 1, 1}});
        }
    }
}

TEST_CASE("minimal model series with a core label skipped") {
    BlockKey key = BlockKey::make({0}, -1);
    MinimalModelSeries mm = minimal_model_series(key, 0, 2);
    std::vector<std::int64_t> omega_degs;
    for (const auto& [deg, labels] : mm.omega.terms) {
        (void)labels;
        omega_degs.push_back(deg);
    }
    CHECK(omega_degs == std::vector<std::int64_t>{-4, -2, 0});
    CHECK(mm.kernel.terms.count(-1) == 1);
    CHECK(mm.kernel.terms.at(-1) == std::map<std::int64_t, std::int64_t>{{-1, 1}});
    CHECK(mm.kernel.terms.count(-3) == 1);
}

TEST_CASE("euler difference telescopes to the simple") {
    BlockKey gl11 = BlockKey::make({}, 4);
    KSeries e = euler_check(gl11, 0, 10);
    KSeries main = e.main_part();
    REQUIRE(main.terms.size() == 1);
    CHECK(main.terms.at(4) == std::map<std::int64_t, std::int64_t>{{0, 1}});
    CHECK(e.tail().terms.size() == 1);  // single uncancelled boundary term

    BlockKey gl21 = BlockKey::make({0}, -1);
    KSeries e2 = euler_check(gl21, 0, 10).main_part();
    REQUIRE(e2.terms.size() == 1);
    CHECK(e2.terms.at(0) == std::map<std::int64_t, std::int64_t>{{0, 1}});
}

TEST_CASE("euler difference at depth 1 keeps one boundary term") {
    BlockKey key = BlockKey::make({}, 0);
    KSeries e = euler_check(key, 0, 1);
    CHECK(e.main_part().terms == decltype(e.terms){{0, {{0, 1}}}});
    KSeries tail = e.tail();
    REQUIRE(tail.terms.size() == 1);
    CHECK(tail.terms.begin()->first == -3);  // q^(a-3) L(a-3) with a = 0
}

TEST_CASE("degree filtration groups and orders") {
    KacFlagInput flag;
    flag.key = BlockKey::make({}, 0);
    flag.entries = {{0, 0}, {1, 1}};
    std::vector<FiltrationGroup> groups = degree_filtration(flag);
    REQUIRE(groups.size() == 2);
    CHECK(groups[0] == FiltrationGroup{1, {{1, 1}}});
    CHECK(groups[1] == FiltrationGroup{0, {{0, 1}}});

    KacFlagInput single;
    single.entries = {{7, 3}};
    CHECK(degree_filtration(single).size() == 1);

    KacFlagInput prefix;
    prefix.entries = {{2, 2}, {0, 0}, {-2, -2}};
    std::vector<FiltrationGroup> pg = degree_filtration(prefix);
    REQUIRE(pg.size() == 3);
    CHECK(pg[0].degree == 2);
    CHECK(pg[1].degree == 0);
    CHECK(pg[2].degree == -2);
}

TEST_CASE("degree filtration rejects bad input") {
    CHECK_THROWS_AS(degree_filtration(KacFlagInput{}), Error);

    KacFlagInput wrong;
    wrong.key = BlockKey::make({}, 0);
    wrong.entries = {{0, 5}};  // V(0) has degree 0 in this block
    CHECK_THROWS_AS(degree_filtration(wrong), Error);
}

TEST_CASE("degree filtration ignores input order") {
    std::mt19937 rng(67);
    for (int trial = 0; trial < 100; ++trial) {
        KacFlagInput flag;
        int entries = std::uniform_int_distribution<int>(1, 8)(rng);
        for (int e = 0; e < entries; ++e) {
            flag.entries.emplace_back(std::uniform_int_distribution<std::int64_t>(-5, 5)(rng),
                                      std::uniform_int_distribution<std::int64_t>(-3, 3)(rng));
        }
        auto groups = degree_filtration(flag);
        KacFlagInput shuffled = flag;
        std::shuffle(shuffled.entries.begin(), shuffled.entries.end(), rng);
        CHECK(degree_filtration(shuffled) == groups);
        std::size_t total = 0;
        for (const auto& g : groups) {
            for (const auto& [label, mult] : g.labels) total += static_cast<std::size_t>(mult);
        }
        CHECK(total == flag.entries.size());
    }
}
