#include "randassign/formulas.hpp"
#include "randassign/verify.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace randassign;

namespace {
Instance make(std::vector<Rat> wr, std::vector<Rat> wc, int k, std::vector<Site> zeros = {}) {
    int m = static_cast<int>(wr.size()), n = static_cast<int>(wc.size());
    return {WeightedSet(std::move(wr)), WeightedSet(std::move(wc)), ZeroPattern(m, n, zeros), k};
}
} // namespace

TEST_CASE("probabilistic evaluator") {
    CHECK(expected_min_probabilistic(make({1, 1}, {1, 1}, 2)).value.value == Rat(5, 4));
    CHECK(expected_min_probabilistic(make({1, 1}, {1, 1}, 2, {{0, 0}})).value.value == Rat(3, 4));
    // rank(Z) >= k: a zero-cost assignment exists
    CHECK(expected_min_probabilistic(make({1, 1}, {1, 1}, 2, {{0, 1}, {1, 0}})).value.value == 0);
}

TEST_CASE("combinatorial evaluator reproduces the symbolic 2x2 expansion") {
    Rat a1(2), a2(3), b1(5), b2(7);
    Instance inst = make({a1, a2}, {b1, b2}, 2);
    Rat expected = Rat(-3) / ((a1 + a2) * (b1 + b2)) + 1 / (a2 * (b1 + b2)) +
                   1 / (a1 * (b1 + b2)) + 1 / (b2 * (a1 + a2)) + 1 / (b1 * (a1 + a2));
    CHECK(expected_min_combinatorial(inst).value.value == expected);
    CHECK(expected_min_combinatorial(make({1, 1}, {1, 1}, 2)).value.value == Rat(5, 4));
    CHECK(expected_min_combinatorial(make({1, 1}, {1, 1}, 2, {{0, 1}, {1, 0}})).value.value == 0);
}

TEST_CASE("closed form for zero-free matrices") {
    Rat a1(2), a2(3), b1(5), b2(7);
    Instance inst = make({a1, a2}, {b1, b2}, 2);
    CHECK(expected_min_bcr(inst).value.value == expected_min_combinatorial(inst).value.value);
    // k=1: min of independent exponentials, total rate w_R(R) w_C(C)
    Instance k1 = make({a1, a2}, {b1, b2}, 1);
    CHECK(expected_min_bcr(k1).value.value == 1 / ((a1 + a2) * (b1 + b2)));
    for (int n = 1; n <= 4; ++n) {
        Instance unit = make(std::vector<Rat>(n, 1), std::vector<Rat>(n, 1), n);
        CHECK(expected_min_bcr(unit).value.value == parisi(n).value.value);
    }
    CHECK_THROWS_AS(expected_min_bcr(make({1, 1}, {1, 1}, 2, {{0, 0}})), std::invalid_argument);
}

TEST_CASE("Coppersmith-Sorkin values") {
    CHECK(expected_min_cs(2, 3, 1).value.value == Rat(1, 6));
    CHECK(expected_min_cs(2, 2, 2).value.value == Rat(5, 4));
    for (int n = 1; n <= 6; ++n)
        CHECK(expected_min_cs(n, n, n).value.value == parisi(n).value.value);
    CHECK_THROWS_AS(expected_min_cs(2, 2, 3), std::out_of_range);
}

TEST_CASE("Parisi values") {
    CHECK(parisi(1).value.value == 1);
    CHECK(parisi(2).value.value == Rat(5, 4));
    CHECK(parisi(3).value.value == Rat(49, 36));
    CHECK_THROWS_AS(parisi(0), std::out_of_range);
}

TEST_CASE("zeta(2) limit") {
    const double zeta2 = M_PI * M_PI / 6;
    CHECK(std::abs(zeta2_limit_area(4.0) - zeta2) < 1e-6);
    CHECK(std::abs(to_double(parisi(100).value.value) - zeta2) < 0.01);
    double prev = 0;
    for (int n = 1; n <= 50; ++n) {
        double cur = to_double(parisi(n).value.value);
        CHECK(cur > prev);
        prev = cur;
    }
}

TEST_CASE("adding a zero never increases the expected value") {
    auto rng = make_stream(31);
    for (int t = 0; t < 30; ++t) {
        int m = 1 + int(rng() % 3), n = 1 + int(rng() % 3);
        int k = 1 + int(rng() % std::min(m, n));
        Instance inst{detail::random_weights(m, rng), detail::random_weights(n, rng),
                      detail::random_pattern(m, n, rng), k};
        Site s{int(rng() % m), int(rng() % n)};
        if (inst.zeros.contains(s)) continue;
        Instance more = inst;
        more.zeros.add(s);
        CHECK(expected_min_probabilistic(more).value.value <=
              expected_min_probabilistic(inst).value.value);
    }
}

TEST_CASE("equivalence sweep (reduced size)") {
    VerifyResult r = verify_equivalence(6, 12, 8, 37);
    INFO(r.detail);
    CHECK(r.pass);
}
