#include "randassign/instance.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <random>

using namespace randassign;

TEST_CASE("parse: unit 2x2 instance") {
    Instance inst = parse_instance(std::string(R"({"rows":[1,1],"cols":[1,1],"zeros":[],"k":2})"));
    CHECK(inst.m() == 2);
    CHECK(inst.n() == 2);
    CHECK(inst.k == 2);
    CHECK(inst.exact);
    CHECK(inst.zeros.count() == 0);
    CHECK(inst.rows.total() == 2);
}

TEST_CASE("parse: fractional weights and zero sites") {
    Instance inst = parse_instance(
        std::string(R"({"rows":["1/2",2],"cols":[1,1,1],"zeros":[[0,0]],"k":2})"));
    CHECK(inst.rows.weight(0) == Rat(1, 2));
    CHECK(inst.rows.weight(1) == 2);
    CHECK(inst.n() == 3);
    CHECK(inst.zeros.contains({0, 0}));
    CHECK(inst.exact);
}

TEST_CASE("parse: decimal weight forces float mode") {
    Instance inst = parse_instance(std::string(R"({"rows":[0.5,2],"cols":[1,1],"zeros":[],"k":1})"));
    CHECK_FALSE(inst.exact);
    CHECK(inst.rows.weight(0) == Rat(1, 2)); // 0.5 is exactly representable
}

TEST_CASE("parse errors carry field paths") {
    CHECK_THROWS_WITH(parse_instance(std::string(R"({"rows":[1],"cols":[1],"zeros":[],"k":2})")),
                      Catch::Matchers::ContainsSubstring("k"));
    CHECK_THROWS_WITH(parse_instance(std::string(R"({"rows":[0],"cols":[1],"zeros":[],"k":1})")),
                      Catch::Matchers::ContainsSubstring("rows[0]"));
    CHECK_THROWS_WITH(
        parse_instance(std::string(R"({"rows":[1,1],"cols":[1],"zeros":[[0,0],[0,0]],"k":1})")),
        Catch::Matchers::ContainsSubstring("zeros[1]"));
    CHECK_THROWS_AS(parse_instance(std::string("{not json")), ParseError);
    CHECK_THROWS_WITH(parse_instance(std::string(R"({"rows":[1],"cols":[1],"zeros":[[5,0]],"k":1})")),
                      Catch::Matchers::ContainsSubstring("zeros[0]"));
}

TEST_CASE("subset weights") {
    WeightedSet s(std::vector<Rat>{1, 1, 1});
    CHECK(s.subset_weight(0b101) == 2);
    CHECK(s.subset_weight(0) == 0);
    WeightedSet t(std::vector<Rat>{Rat(1, 2), 2, 3});
    CHECK(t.subset_weight(0b111) == Rat(11, 2));
    CHECK_THROWS_AS(s.subset_weight(0b1000), std::out_of_range);
}

TEST_CASE("subset plus complement equals total exactly") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<int> num(1, 20), den(1, 9);
    for (int t = 0; t < 50; ++t) {
        int n = 1 + int(rng() % 6);
        std::vector<Rat> w(n);
        for (Rat& x : w) x = Rat(num(rng), den(rng));
        WeightedSet s(std::move(w));
        Mask x = static_cast<Mask>(rng()) & full_mask(n);
        CHECK(s.subset_weight(x) + s.complement_weight(x) == s.total());
    }
}

TEST_CASE("parse/serialize round trip") {
    std::string text = R"({"rows":["1/2",2],"cols":[1,1,1],"zeros":[[0,0],[1,2]],"k":2})";
    Instance a = parse_instance(text);
    Instance b = parse_instance(serialize_instance(a));
    CHECK(a == b);
}
