#include "randassign/cover_poset.hpp"
#include "randassign/verify.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <set>

using namespace randassign;

namespace {
Instance unit_instance(int m, int n, int k, std::vector<Site> zeros = {}) {
    return {WeightedSet(std::vector<Rat>(m, 1)), WeightedSet(std::vector<Rat>(n, 1)),
            ZeroPattern(m, n, zeros), k};
}

std::set<std::pair<Mask, Mask>> as_set(const CoverIdeal& ideal) {
    std::set<std::pair<Mask, Mask>> out;
    for (FileSetPair p : ideal.members) out.insert({p.rows, p.cols});
    return out;
}
} // namespace

TEST_CASE("partial cover membership") {
    Instance inst = unit_instance(2, 2, 2);
    CHECK(is_partial_cover(inst, {0b01, 0}));
    CHECK(is_partial_cover(inst, {0, 0b10}));
    CHECK_FALSE(is_partial_cover(inst, {0b01, 0b01})); // size k
    Instance zeroed = unit_instance(2, 2, 2, {{0, 0}});
    CHECK_FALSE(is_partial_cover(zeroed, {0b10, 0})); // row 1 misses the zero
}

TEST_CASE("ideal enumeration") {
    CHECK(as_set(enumerate_ideal(unit_instance(2, 2, 2))) ==
          std::set<std::pair<Mask, Mask>>{{0, 0}, {1, 0}, {2, 0}, {0, 1}, {0, 2}});
    CHECK(enumerate_ideal(unit_instance(2, 2, 2, {{0, 0}, {0, 1}, {1, 0}, {1, 1}})).empty());
    CHECK(as_set(enumerate_ideal(unit_instance(2, 2, 2, {{0, 0}}))) ==
          std::set<std::pair<Mask, Mask>>{{0, 0}, {1, 0}, {0, 1}});
    CHECK_THROWS_AS(enumerate_ideal(unit_instance(10, 10, 5)), std::domain_error);
}

TEST_CASE("row ideal enumeration") {
    CoverIdeal free3 = enumerate_row_ideal(ZeroPattern(3, 3), 3);
    CHECK(free3.size() == 7); // all row subsets of size <= 2
    CHECK(enumerate_row_ideal(ZeroPattern(2, 2, {{0, 0}, {1, 1}}), 2).empty());
    CHECK(as_set(enumerate_row_ideal(ZeroPattern(2, 2, {{0, 0}}), 2)) ==
          std::set<std::pair<Mask, Mask>>{{0, 0}, {1, 0}});
}

TEST_CASE("ideal delete and quotient") {
    CoverIdeal atoms = enumerate_row_ideal(ZeroPattern(3, 3), 2); // subsets of size <= 1
    CHECK(as_set(ideal_delete(atoms, 0)) ==
          std::set<std::pair<Mask, Mask>>{{0, 0}, {2, 0}, {4, 0}});
    CHECK(as_set(ideal_quotient(atoms, 0)) == std::set<std::pair<Mask, Mask>>{{0, 0}});

    CoverIdeal empty_only;
    empty_only.kind = CoverIdeal::Kind::rows;
    empty_only.insert({0, 0});
    CHECK(ideal_quotient(empty_only, 1).empty());
    CHECK(as_set(ideal_delete(empty_only, 1)) == std::set<std::pair<Mask, Mask>>{{0, 0}});
}

TEST_CASE("Moebius values on the 2x2 poset") {
    Instance inst = unit_instance(2, 2, 2);
    CoverIdeal ideal = enumerate_ideal(inst);
    MobiusToTop mu(ideal);
    CHECK(mu({0, 0}) == 3);
    CHECK(mu({0b01, 0}) == -1);
    CHECK(mu({0b10, 0}) == -1);
    CHECK(mu({0, 0b01}) == -1);
    CHECK(mu({0, 0b10}) == -1);
    CHECK_THROWS_AS(mu({0b01, 0b01}), std::invalid_argument);
}

TEST_CASE("truncated Boolean Moebius closed form") {
    CHECK(truncated_boolean_mobius(4, 2) == 3);
    CHECK(truncated_boolean_mobius(4, 1) == -1);
    CHECK(truncated_boolean_mobius(5, 5) == -1);
    CHECK(truncated_boolean_mobius(6, 6) == 1);
    CHECK_THROWS_AS(truncated_boolean_mobius(4, 0), std::out_of_range);
}

TEST_CASE("generic recursion matches the closed form on zero-free posets") {
    for (int m = 1; m <= 4; ++m)
        for (int n = 1; m + n <= 8 && n <= 4; ++n)
            for (int k = 1; k <= std::min(m, n); ++k) {
                Instance inst = unit_instance(m, n, k);
                CoverIdeal ideal = enumerate_ideal(inst);
                MobiusToTop mu(ideal);
                for (FileSetPair p : ideal.members) {
                    // the interval [p, top] is a truncated Boolean lattice of
                    // degree m+n-|p| truncated at rank k-|p|
                    CHECK(mu(p) == truncated_boolean_mobius(m + n - p.size(), k - p.size()));
                }
            }
}

TEST_CASE("Moebius defining identity and downward closure on random ideals") {
    auto rng = make_stream(17);
    for (int t = 0; t < 30; ++t) {
        int m = 1 + int(rng() % 3), n = 1 + int(rng() % 3);
        int k = 1 + int(rng() % std::min(m, n));
        Instance inst = unit_instance(m, n, k, {});
        inst.zeros = detail::random_pattern(m, n, rng);
        CoverIdeal ideal = enumerate_ideal(inst);

        for (FileSetPair p : ideal.members)
            for (int b = 0; b < m + n; ++b) {
                FileSetPair q = p;
                if (b < m) q.rows &= ~(Mask{1} << b);
                else q.cols &= ~(Mask{1} << (b - m));
                CHECK(ideal.contains(q));
            }

        MobiusToTop mu(ideal);
        for (FileSetPair p : ideal.members) {
            long long sum = 0;
            for (FileSetPair q : ideal.members)
                if (p.subset_of(q)) sum += -mu(q);
            CHECK(sum == 1);
        }
    }
}

TEST_CASE("ideal is empty exactly when a zero-cost assignment exists") {
    auto rng = make_stream(19);
    for (int t = 0; t < 50; ++t) {
        int m = 1 + int(rng() % 4), n = 1 + int(rng() % 4);
        int k = 1 + int(rng() % std::min(m, n));
        Instance inst = unit_instance(m, n, k);
        inst.zeros = detail::random_pattern(m, n, rng);
        CHECK(enumerate_ideal(inst).empty() == (rank(inst.zeros) >= k));
    }
}
