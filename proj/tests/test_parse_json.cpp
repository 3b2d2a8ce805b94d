#include <doctest.h>

#include <random>

#include "glho/json_io.hpp"
#include "glho/parse.hpp"

using namespace glho;

TEST_CASE("weight text syntax") {
    Weight w = parse_weight("1,0,-1|2,0");
    CHECK(w.m == 3);
    CHECK(w.n == 2);
    CHECK(w.rows == std::vector<std::int64_t>{1, 0, -1, 2, 0});
    CHECK(format_weight(w) == "1,0,-1|2,0");
    CHECK(parse_weight(" 0 , 0 | 0 ") == Weight::make(2, 1, {0, 0, 0}));

    CHECK_THROWS_AS(parse_weight("0,1|0"), ParseError);   // not dominant
    CHECK_THROWS_AS(parse_weight("1,0"), ParseError);     // missing bar
    CHECK_THROWS_AS(parse_weight("|0"), ParseError);      // empty first half
    CHECK_THROWS_AS(parse_weight("1|0 junk"), ParseError);
}

TEST_CASE("block object text syntax") {
    BlockObject x = parse_block_object("R[0,3] + 2*B[1,2] + P(0) + L(4)");
    CHECK(x.summands.at(Indec::R(0, 3)) == 1);
    CHECK(x.summands.at(Indec::B(1, 2)) == 2);
    CHECK(x.summands.at(Indec::P(0)) == 1);
    CHECK(x.summands.at(Indec::L(4)) == 1);
    CHECK(parse_block_object(format_block_object(x)) == x);

    CHECK(parse_block_object("0").zero());
    CHECK(format_block_object(BlockObject{}) == "0");
    CHECK(parse_block_object("B[2,2]").summands.count(Indec::L(2)) == 1);

    CHECK_THROWS_AS(parse_block_object("R[3,0]"), ParseError);
    CHECK_THROWS_AS(parse_block_object("Q(1)"), ParseError);
    CHECK_THROWS_AS(parse_block_object("L(1) +"), ParseError);
}

TEST_CASE("homotopy object text syntax") {
    HoObject x = parse_ho_object("S(2) + EvenR[0,3] + 3*S(-1)");
    CHECK(x.summands.at(HoSummand::S(2)) == 1);
    CHECK(x.summands.at(HoSummand::EvenR(0, 3)) == 1);
    CHECK(x.summands.at(HoSummand::S(-1)) == 3);
    CHECK(parse_ho_object(format_ho_object(x)) == x);
    CHECK(parse_ho_object("0").zero());

    CHECK_THROWS_AS(parse_ho_object("EvenR[0,2]"), ParseError);  // odd length
    CHECK_THROWS_AS(parse_ho_object("R[0,3]"), ParseError);
}

TEST_CASE("partition text syntax") {
    CHECK(parse_partition("2,1") == Partition::make({2, 1}));
    CHECK(parse_partition("") == Partition{});
    CHECK(parse_partition("0") == Partition{});
    CHECK(format_partition(Partition::make({3, 1, 1})) == "3,1,1");
    CHECK_THROWS_AS(parse_partition("1,2"), ParseError);
}

TEST_CASE("flag text syntax") {
    KacFlagInput flag = parse_flag("V(1)@1 + V(0)@0");
    REQUIRE(flag.entries.size() == 2);
    CHECK(flag.entries[0] == std::pair<std::int64_t, std::int64_t>{1, 1});
    CHECK(flag.entries[1] == std::pair<std::int64_t, std::int64_t>{0, 0});
    CHECK(parse_flag("V(-2)@-2, V(0)@0").entries.size() == 2);
    CHECK_THROWS_AS(parse_flag("V(1)"), ParseError);
}

TEST_CASE("json round trips") {
    std::mt19937 rng(71);
    std::uniform_int_distribution<std::int64_t> small(-8, 8);

    for (int trial = 0; trial < 50; ++trial) {
        std::vector<std::int64_t> rows{small(rng)};
        rows.push_back(rows[0] - std::uniform_int_distribution<std::int64_t>(0, 3)(rng));
        rows.push_back(small(rng));
        Weight w = Weight::make(2, 1, rows);
        CHECK(weight_from_json(to_json(w)) == w);

        BlockObject x;
        x.add(Indec::R(0, 3)).add(Indec::P(small(rng))).add(Indec::L(small(rng)), 2);
        CHECK(block_object_from_json(to_json(x)) == x);

        HoObject h;
        h.add(HoSummand::S(small(rng)), 2).add(HoSummand::EvenR(0, 1));
        CHECK(ho_object_from_json(to_json(h)) == h);
    }

    BlockKey key = BlockKey::make({0, 4}, -1);
    CHECK(block_key_from_json(to_json(key)) == key);

    KSeries s;
    s.variant = SeriesVariant::kac_minus;
    s.key = key;
    s.add_term(0, 0, 1);
    s.add_term(-2, -2, 3);
    s.d_max = 0;
    s.truncation = -2;
    KSeries back = kseries_from_json(to_json(s));
    CHECK(back.terms == s.terms);
    CHECK(back.variant == s.variant);
    CHECK(back.truncation == s.truncation);

    HoMorphism f = HoMorphism::basis(0, 2);
    CHECK(ho_morphism_from_json(to_json(f)) == f);

    Partition p = Partition::make({4, 2, 1});
    CHECK(partition_from_json(to_json(p)) == p);
}

TEST_CASE("json rejects malformed documents") {
    CHECK_THROWS_AS(weight_from_json(json{{"m", 1}, {"n", 1}}), ParseError);
    CHECK_THROWS_AS(block_object_from_json(json{{"kind", "R"}}), ParseError);
    CHECK_THROWS_AS(block_object_from_json(json::array({json{{"kind", "X"}, {"a", 0}}})),
                    ParseError);
    CHECK_THROWS_AS(kseries_from_json(json{{"variant", "weird"}, {"terms", json::array()},
                                           {"truncation", 0}}),
                    ParseError);
}
