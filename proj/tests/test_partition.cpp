#include <doctest.h>

#include <random>
#include <set>

#include "glho/partition.hpp"
#include "schur_oracle.hpp"

using namespace glho;

namespace {

Partition p(std::initializer_list<int> parts) { return Partition::make(parts); }

}  // namespace

TEST_CASE("box enumeration") {
    std::vector<Partition> n1 = box_partitions(1);
    CHECK(n1 == std::vector<Partition>{p({}), p({1})});

    std::vector<Partition> n2 = box_partitions(2);
    CHECK(n2 == std::vector<Partition>{p({}), p({1}), p({2}), p({1, 1}), p({2, 1}), p({2, 2})});

    CHECK(box_partitions(3).size() == 20);
    for (int n = 1; n <= 8; ++n) {
        std::vector<Partition> box = box_partitions(n);
        CHECK(static_cast<std::int64_t>(box.size()) == binomial(2 * n, n));
        CHECK(std::set<Partition>(box.begin(), box.end()).size() == box.size());
    }
}

TEST_CASE("transpose and self-conjugacy") {
    CHECK(p({2, 1}).transpose() == p({2, 1}));
    CHECK(p({3, 1}).transpose() == p({2, 1, 1}));
    CHECK(p({}).self_conjugate());
    CHECK(count_self_conjugate(1) == 2);
    CHECK(count_self_conjugate(2) == 4);
    CHECK(count_self_conjugate(12) == 4096);
    for (int n = 1; n <= 8; ++n) {
        std::set<Partition> filtered;
        for (const Partition& q : box_partitions(n)) {
            if (q.self_conjugate()) filtered.insert(q);
        }
        CHECK(filtered == oracle::self_conjugate_by_hooks(n));
    }
}

TEST_CASE("gl dimensions") {
    CHECK(gl_dim(p({1}), 2) == 2);
    CHECK(gl_dim(p({1, 1}), 2) == 1);
    CHECK(gl_dim(p({2, 1}), 2) == 2);
    CHECK(gl_dim(p({}), 5) == 1);
    CHECK_THROWS_AS(gl_dim(p({1, 1, 1}), 2), TooManyRows);

    std::mt19937 rng(51);
    for (int trial = 0; trial < 60; ++trial) {
        int n = std::uniform_int_distribution<int>(1, 4)(rng);
        std::vector<int> parts(static_cast<std::size_t>(n));
        for (auto& q : parts) q = std::uniform_int_distribution<int>(0, 5)(rng);
        std::sort(parts.begin(), parts.end(), std::greater<>());
        Partition alpha = Partition::make(std::move(parts));
        CHECK(gl_dim(alpha, n) == oracle::ssyt_count(alpha, n));
    }
}

TEST_CASE("exterior algebra dimension identity") {
    CHECK(cauchy_check(1).total == 2);
    CauchyResult r2 = cauchy_check(2);
    CHECK(r2.total == 16);
    CHECK(r2.pairs.size() == 6);
    CHECK(cauchy_check(3).total == 512);
}

TEST_CASE("littlewood-richardson basics") {
    for (const Partition& mu : box_partitions(2)) {
        CHECK(lr_mult(p({}), mu, mu) == 1);
        CHECK(lr_mult(mu, p({}), mu) == 1);
        if (!(mu == p({2, 1}))) {
            CHECK(lr_mult(p({}), p({2, 1}), mu) == 0);
        }
    }
    CHECK(lr_mult(p({1}), p({1}), p({2})) == 1);
    CHECK(lr_mult(p({1}), p({1}), p({1, 1})) == 1);
    CHECK(lr_mult(p({1}), p({1, 1}), p({2, 1})) == 1);
    CHECK(lr_mult(p({2, 1}), p({2, 1}), p({3, 2, 1})) == 2);  // the classical multiplicity-2 case
    CHECK(lr_mult(p({1}), p({1}), p({3})) == 0);
}

TEST_CASE("lr symmetry and dimension identity") {
    std::vector<Partition> shapes;
    for (int s = 0; s <= 4; ++s) {
        for (const Partition& q : oracle::partitions_of(s, 3, std::max(s, 1))) shapes.push_back(q);
    }
    for (const Partition& la : shapes) {
        for (const Partition& mu : shapes) {
            int total = la.size() + mu.size();
            int width = (la.rows() ? la.parts[0] : 0) + (mu.rows() ? mu.parts[0] : 0);
            std::int64_t sum = 0;
            for (const Partition& nu : oracle::partitions_of(total, 3, std::max(width, 1))) {
                CHECK(lr_mult(la, mu, nu) == lr_mult(mu, la, nu));
                sum += lr_mult(la, mu, nu) * gl_dim(nu, 3);
            }
            CHECK(sum == gl_dim(la, 3) * gl_dim(mu, 3));
        }
    }
}

TEST_CASE("standard flag of V tensor V*") {
    std::vector<VVStarEntry> n1 = vv_star_flag(1);
    REQUIRE(n1.size() == 2);
    CHECK(n1[0].alpha == p({}));
    CHECK(n1[0].max_atypical);
    CHECK(n1[0].degree == -1);
    CHECK(n1[1].alpha == p({1}));
    CHECK(n1[1].max_atypical);
    CHECK(n1[1].degree == -2);

    std::vector<VVStarEntry> n2 = vv_star_flag(2);
    CHECK(n2.size() == 6);
    std::multiset<std::int64_t> max_degrees;
    for (const VVStarEntry& e : n2) {
        if (e.max_atypical) max_degrees.insert(e.degree);
    }
    CHECK(max_degrees == std::multiset<std::int64_t>{-8, -7, -5, -4});

    for (int n = 1; n <= 5; ++n) {
        std::int64_t min_max = 0;
        std::int64_t count = 0;
        for (const VVStarEntry& e : vv_star_flag(n)) {
            if (e.max_atypical) {
                ++count;
                min_max = std::min(min_max, e.degree);
            }
        }
        CHECK(count == (std::int64_t{1} << n));
        CHECK(min_max == -2 * static_cast<std::int64_t>(n) * n);
    }
}
