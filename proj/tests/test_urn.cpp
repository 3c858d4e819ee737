#include "randassign/urn.hpp"
#include "randassign/verify.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace randassign;

namespace {
CoverIdeal rows_ideal(std::vector<Mask> members) {
    CoverIdeal ideal;
    ideal.kind = CoverIdeal::Kind::rows;
    for (Mask x : members) ideal.insert({x, 0});
    return ideal;
}
} // namespace

TEST_CASE("reach probabilities for three weighted balls") {
    Rat w1(2), w2(3), w3(5);
    WeightedSet s(std::vector<Rat>{w1, w2, w3});
    ReachProbabilities pr(s);
    Rat tot = w1 + w2 + w3;
    CHECK(pr(0b000) == 1);
    CHECK(pr(0b111) == 1);
    CHECK(pr(0b001) == w1 / tot);
    CHECK(pr(0b011) == w1 * w2 / (tot * (w2 + w3)) + w1 * w2 / (tot * (w1 + w3)));
}

TEST_CASE("exit probability") {
    WeightedSet s(std::vector<Rat>{Rat(1, 2), 3});
    CHECK(exit_probability(s, rows_ideal({0}), 0) == Rat(1, 2) / Rat(7, 2));
    CHECK(exit_probability(s, rows_ideal({0}), 1) == 3 / Rat(7, 2));

    // ball 0 always exits {empty, {1}} on two balls
    WeightedSet u(std::vector<Rat>{1, 1});
    CHECK(exit_probability(u, rows_ideal({0b00, 0b10}), 0) == 1);

    CHECK_THROWS_AS(exit_probability(u, rows_ideal({0b10}), 0), std::invalid_argument);
}

TEST_CASE("expected exit time") {
    WeightedSet s(std::vector<Rat>{Rat(1, 2), 3});
    CHECK(expected_exit_time(s, rows_ideal({0})) == Rat(2, 7));

    // all proper subsets at unit weights: harmonic number
    for (int n = 1; n <= 4; ++n) {
        WeightedSet u(std::vector<Rat>(n, 1));
        std::vector<Mask> proper;
        for (Mask x = 0; x < full_mask(n); ++x) proper.push_back(x);
        Rat h = 0;
        for (int j = 1; j <= n; ++j) h += Rat(1, j);
        CHECK(expected_exit_time(u, rows_ideal(proper)) == h);
    }

    WeightedSet u2(std::vector<Rat>{1, 1});
    CHECK(expected_exit_time(u2, rows_ideal({0b00, 0b10})) == 1);
    CHECK_THROWS_AS(expected_exit_time(u2, rows_ideal({0b00, 0b11})), std::invalid_argument);
}

TEST_CASE("two-dimensional exit time") {
    WeightedSet r(std::vector<Rat>{1, 1}), c(std::vector<Rat>{1, 1});

    CoverIdeal bottom;
    bottom.insert({0, 0});
    CHECK(expected_exit_time_2d(r, c, bottom) == Rat(1, 4));

    CoverIdeal j2;
    for (FileSetPair p :
         {FileSetPair{0, 0}, {0b01, 0}, {0b10, 0}, {0, 0b01}, {0, 0b10}})
        j2.insert(p);
    CHECK(expected_exit_time_2d(r, c, j2) == Rat(5, 4));

    CoverIdeal three;
    for (FileSetPair p : {FileSetPair{0, 0}, {0b01, 0}, {0, 0b01}}) three.insert(p);
    // analytic oracle: E[min(X, Y+Z)] for iid exp(1), survival (1+t)e^{-2t}
    CHECK(expected_exit_time_2d(r, c, three) == Rat(3, 4));

    CoverIdeal not_closed;
    not_closed.insert({0, 0});
    not_closed.insert({0b11, 0});
    CHECK_THROWS_AS(expected_exit_time_2d(r, c, not_closed), std::invalid_argument);
}

TEST_CASE("simulation matches exact reach and first-draw probabilities") {
    const int trials = 100000;

    WeightedSet u(std::vector<Rat>{1, 1, 1, 1});
    auto rng = make_stream(101);
    int first0 = 0;
    for (int t = 0; t < trials; ++t)
        if (simulate_urn(u, rng).front().element == 0) ++first0;
    double se = std::sqrt(0.25 * 0.75 / trials);
    CHECK(std::abs(first0 / double(trials) - 0.25) <= 3 * se);

    WeightedSet w(std::vector<Rat>{1, 2});
    rng = make_stream(102);
    int first1 = 0;
    for (int t = 0; t < trials; ++t)
        if (simulate_urn(w, rng).front().element == 1) ++first1;
    double p = 2.0 / 3.0;
    se = std::sqrt(p * (1 - p) / trials);
    CHECK(std::abs(first1 / double(trials) - p) <= 3 * se);

    // reach frequency of {0,2} on a 3-ball urn vs the exact value
    WeightedSet v(std::vector<Rat>{2, 1, 3});
    Rat exact = reach_probability(v, 0b101);
    rng = make_stream(103);
    int hits = 0;
    for (int t = 0; t < trials; ++t) {
        auto draws = simulate_urn(v, rng);
        if ((Mask{1} << draws[0].element | Mask{1} << draws[1].element) == 0b101) ++hits;
    }
    double pe = to_double(exact);
    se = std::sqrt(pe * (1 - pe) / trials);
    CHECK(std::abs(hits / double(trials) - pe) <= 3 * se);
}

TEST_CASE("urn identity suite") {
    VerifyResult r = verify_urn(23);
    INFO(r.detail);
    CHECK(r.pass);
}
