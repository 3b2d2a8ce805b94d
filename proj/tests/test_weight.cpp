#include <doctest.h>

#include <random>

#include "glho/weight.hpp"

using namespace glho;

namespace {

Weight w(int m, int n, std::vector<std::int64_t> rows) { return Weight::make(m, n, std::move(rows)); }

Weight random_dominant(std::mt19937& rng) {
    std::uniform_int_distribution<int> rank(1, 4);
    std::uniform_int_distribution<std::int64_t> entry(-6, 6);
    int m = rank(rng);
    int n = rank(rng);
    std::vector<std::int64_t> rows(static_cast<std::size_t>(m + n));
    for (auto& r : rows) r = entry(rng);
    std::sort(rows.begin(), rows.begin() + m, std::greater<>());
    std::sort(rows.begin() + m, rows.end(), std::greater<>());
    return Weight::make(m, n, std::move(rows));
}

}  // namespace

TEST_CASE("bidegree sums the two halves") {
    for (int n = 1; n <= 4; ++n) {
        std::vector<std::int64_t> rows(static_cast<std::size_t>(2 * n), 1);
        for (int j = n; j < 2 * n; ++j) rows[static_cast<std::size_t>(j)] = -1;
        Bidegree bd = deg_bidegree(w(n, n, rows));
        CHECK(bd.d == n);
        CHECK(bd.dprime == -n);
        CHECK(bd.deg == n);
    }
    for (std::int64_t a : {-3, 0, 5}) {
        CHECK(deg_bidegree(w(1, 1, {a, -a})).deg == a);
    }
}

TEST_CASE("degree of the standard layer weights is -i^2") {
    for (int n = 1; n <= 5; ++n) {
        for (int i = 0; i <= n; ++i) {
            Weight layer = kac_layer_weight(n, i);
            CHECK(deg_bidegree(layer).deg == -static_cast<std::int64_t>(i) * i);
            CHECK(atypicality(layer) == n);
            CHECK(central_charge(layer) == 0);
        }
    }
    CHECK(kac_layer_weight(3, 2) == w(3, 3, {0, -2, -2, 2, 2, 0}));
    CHECK_THROWS_AS(kac_layer_weight(2, 3), Error);
}

TEST_CASE("label sets") {
    for (std::int64_t a : {-2, 0, 7}) {
        LabelSets ls = label_sets(w(1, 1, {a, -a}));
        CHECK(ls.vee == std::set<std::int64_t>{a});
        CHECK(ls.wedge == std::set<std::int64_t>{a});
    }
    LabelSets gl21 = label_sets(w(2, 1, {0, 0, 0}));
    CHECK(gl21.vee == std::set<std::int64_t>{0, -1});
    CHECK(gl21.wedge == std::set<std::int64_t>{-1});

    LabelSets gl22 = label_sets(w(2, 2, {0, 0, 0, 0}));
    CHECK(gl22.vee == std::set<std::int64_t>{0, -1});
    CHECK(gl22.vee == gl22.wedge);
}

TEST_CASE("atypicality") {
    CHECK(atypicality(w(1, 1, {4, -4})) == 1);
    CHECK(atypicality(w(1, 1, {4, -3})) == 0);
    for (int n = 1; n <= 4; ++n) {
        CHECK(atypicality(w(n, n, std::vector<std::int64_t>(static_cast<std::size_t>(2 * n), 0))) == n);
    }
}

TEST_CASE("berezin twist") {
    CHECK(ber_twist(w(2, 2, {0, 0, 0, 0}), 1) == w(2, 2, {1, 1, -1, -1}));
    CHECK(ber_twist(w(1, 1, {3, -3}), 2) == w(1, 1, {5, -5}));
    CHECK(ber_twist(w(2, 1, {1, 1, -2}), -1) == w(2, 1, {0, 0, -1}));
}

TEST_CASE("twist preserves atypicality and shifts deg by k*m") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        Weight x = random_dominant(rng);
        int at = atypicality(x);
        CHECK(at <= std::min(x.m, x.n));
        for (std::int64_t k = -3; k <= 3; ++k) {
            Weight t = ber_twist(x, k);
            CHECK(atypicality(t) == at);
            CHECK(deg_bidegree(t).deg == deg_bidegree(x).deg + k * x.m);
        }
    }
}

TEST_CASE("invalid weights are rejected") {
    CHECK_THROWS_AS(Weight::make(2, 1, {0, 1, 0}), InvalidWeight);
    CHECK_THROWS_AS(Weight::make(1, 2, {0, 0, 1}), InvalidWeight);
    CHECK_THROWS_AS(Weight::make(2, 1, {0, 0}), InvalidWeight);
    CHECK_THROWS_AS(Weight::make(0, 1, {0}), InvalidWeight);
}
