// verify.hpp - randomized property suites cross-checking the exact
// evaluators, the urn identities, and the solver against brute-force
// oracles. Shared by the CLI `verify` subcommand and the test suites.
#pragma once

#include "randassign/brute.hpp"
#include "randassign/montecarlo.hpp"

#include <random>
#include <sstream>
#include <string>

namespace randassign {

struct VerifyResult {
    std::string suite;
    bool pass = true;
    long checks = 0;
    std::string detail;

    void fail(const std::string& msg) {
        if (pass) detail = msg;
        pass = false;
    }
};

namespace detail {

inline Rat random_rat(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> num(1, 12), den(1, 6);
    return Rat(num(rng), den(rng));
}

inline WeightedSet random_weights(int n, std::mt19937_64& rng) {
    std::vector<Rat> w(n);
    for (Rat& x : w) x = random_rat(rng);
    return WeightedSet(std::move(w));
}

inline ZeroPattern random_pattern(int m, int n, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> unif(0, 1);
    double density = unif(rng) * 0.5;
    ZeroPattern z(m, n);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < n; ++j)
            if (unif(rng) < density) z.add({i, j});
    return z;
}

inline CostMatrix random_matrix(int m, int n, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> unif(0, 1);
    CostMatrix mat(m, n);
    for (double& x : mat.a) x = unif(rng);
    return mat;
}

inline std::string describe(const Instance& inst) {
    std::ostringstream os;
    os << inst.m() << "x" << inst.n() << " k=" << inst.k << " |Z|=" << inst.zeros.count();
    return os.str();
}

// Pr(i0 in exit(I)) by full enumeration of draw orders; independent of the
// subset-DP reach probabilities.
inline Rat exit_probability_by_orders(const WeightedSet& s, const CoverIdeal& ideal, int i0) {
    int n = s.size();
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = i;
    Rat total = 0;
    std::sort(perm.begin(), perm.end());
    do {
        Rat p = 1;
        Mask drawn = 0;
        for (int idx : perm) {
            p *= s.weight(idx) / s.complement_weight(drawn);
            drawn |= Mask{1} << idx;
        }
        Mask prefix = 0;
        for (int idx : perm) {
            prefix |= Mask{1} << idx;
            if (!ideal.contains_rows(prefix)) {
                if (prefix >> i0 & 1) total += p;
                break;
            }
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return total;
}

// Ideal over the ground set with element `drop` removed, indices above it
// shifted down. Members containing `drop` are discarded.
inline CoverIdeal restrict_ideal(const CoverIdeal& ideal, int drop) {
    CoverIdeal out;
    out.kind = ideal.kind;
    Mask low = (Mask{1} << drop) - 1;
    for (FileSetPair p : ideal.members) {
        if (p.rows >> drop & 1) continue;
        out.insert({(p.rows & low) | ((p.rows >> (drop + 1)) << drop), p.cols});
    }
    return out;
}

inline WeightedSet drop_element(const WeightedSet& s, int drop) {
    std::vector<Rat> w;
    for (int i = 0; i < s.size(); ++i)
        if (i != drop) w.push_back(s.weight(i));
    return WeightedSet(std::move(w));
}

inline CoverIdeal ideal_from_masks(const std::vector<Mask>& members) {
    CoverIdeal ideal;
    ideal.kind = CoverIdeal::Kind::rows;
    for (Mask x : members) ideal.insert({x, 0});
    return ideal;
}

} // namespace detail

// Exact equality of the probabilistic and combinatorial evaluators over all
// shapes with m+n <= max_mn, plus the closed-form specialization chain.
inline VerifyResult verify_equivalence(int max_mn = 8, int weight_draws = 50,
                                       int pattern_draws = 20, std::uint64_t seed = 1) {
    VerifyResult res{"equivalence"};
    auto rng = make_stream(seed);
    for (int m = 1; m < max_mn; ++m)
        for (int n = 1; m + n <= max_mn; ++n) {
            std::vector<ZeroPattern> patterns{ZeroPattern(m, n)}; // keep one zero-free
            for (int p = 1; p < pattern_draws; ++p)
                patterns.push_back(detail::random_pattern(m, n, rng));
            for (int k = 1; k <= std::min(m, n); ++k) {
                // unit-weight specialization chain once per (shape, k)
                Instance unit{WeightedSet(std::vector<Rat>(m, 1)),
                              WeightedSet(std::vector<Rat>(n, 1)), ZeroPattern(m, n), k};
                ++res.checks;
                if (expected_min_bcr(unit).value.value != expected_min_cs(m, n, k).value.value)
                    res.fail("bcr != cs at unit weights, " + detail::describe(unit));
                for (int t = 0; t < weight_draws; ++t) {
                    Instance inst{detail::random_weights(m, rng), detail::random_weights(n, rng),
                                  patterns[t % patterns.size()], k};
                    Rat prob = expected_min_probabilistic(inst).value.value;
                    Rat comb = expected_min_combinatorial(inst).value.value;
                    ++res.checks;
                    if (prob != comb) res.fail("prob != comb on " + detail::describe(inst));
                    if (inst.zeros.count() == 0) {
                        ++res.checks;
                        if (expected_min_bcr(inst).value.value != prob)
                            res.fail("bcr != prob on " + detail::describe(inst));
                    }
                }
            }
        }
    return res;
}

// Exact urn identities: leave-ideal sum, level normalization, and the exit
// probability closed form against order enumeration and the first-draw
// recursion.
inline VerifyResult verify_urn(std::uint64_t seed = 2, int weight_draws = 3) {
    VerifyResult res{"urn"};
    auto rng = make_stream(seed);
    for (int n = 1; n <= 4; ++n) {
        auto ideals = all_order_ideals(n);
        for (int t = 0; t < weight_draws; ++t) {
            WeightedSet s = detail::random_weights(n, rng);
            ReachProbabilities pr(s);

            for (int j = 0; j <= n; ++j) {
                Rat level = 0;
                for (Mask x = 0; x < (Mask{1} << n); ++x)
                    if (popcount(x) == j) level += pr(x);
                ++res.checks;
                if (level != 1) res.fail("level normalization failed at |S|=" + std::to_string(n));
            }

            for (const auto& members : ideals) {
                CoverIdeal ideal = detail::ideal_from_masks(members);
                if (!ideal.contains_rows(0) || ideal.contains_rows(full_mask(n))) continue;

                Rat leave = 0;
                for (FileSetPair p : ideal.members)
                    for (int i = 0; i < n; ++i) {
                        if (p.rows >> i & 1) continue;
                        if (ideal.contains_rows(p.rows | (Mask{1} << i))) continue;
                        leave += s.weight(i) * pr(p.rows) / s.complement_weight(p.rows);
                    }
                ++res.checks;
                if (leave != 1) res.fail("leave-ideal sum != 1 at |S|=" + std::to_string(n));

                for (int i0 = 0; i0 < n; ++i0) {
                    Rat closed = exit_probability(s, ideal, i0);
                    ++res.checks;
                    if (closed != detail::exit_probability_by_orders(s, ideal, i0))
                        res.fail("exit probability disagrees with order enumeration");

                    // first-draw recursion over the reduced urns
                    Rat rec = s.weight(i0) / s.total();
                    for (int i = 0; i < n; ++i) {
                        if (i == i0) continue;
                        CoverIdeal quot = detail::restrict_ideal(ideal_quotient(ideal, i), i);
                        if (quot.empty()) continue;
                        WeightedSet sub = detail::drop_element(s, i);
                        int i0_sub = i0 < i ? i0 : i0 - 1;
                        Rat term = quot.contains_rows(full_mask(sub.size()))
                                       ? Rat(1)
                                       : exit_probability(sub, quot, i0_sub);
                        rec += s.weight(i) * term / s.total();
                    }
                    ++res.checks;
                    if (rec != closed) res.fail("exit recursion disagrees with closed form");
                }
            }
        }
    }
    return res;
}

// Nesting of optimal assignments on random continuous matrices: the files of
// the optimal k1-assignment are contained in the files of some optimal
// k2-assignment.
inline VerifyResult verify_nesting(int trials = 200, std::uint64_t seed = 3, int max_size = 5) {
    VerifyResult res{"nesting"};
    auto rng = make_stream(seed);
    std::uniform_int_distribution<int> dim(2, max_size);
    while (res.checks < trials) {
        int m = dim(rng), n = dim(rng);
        int kmax = std::min(m, n);
        if (kmax < 2) continue;
        CostMatrix mat = detail::random_matrix(m, n, rng);
        std::uniform_int_distribution<int> kd(1, kmax);
        int k1 = kd(rng), k2 = kd(rng);
        if (k1 > k2) std::swap(k1, k2);
        if (k1 == k2) continue;
        auto opt1 = brute_optimal_assignments(mat, k1);
        auto opt2 = brute_optimal_assignments(mat, k2);
        auto files = [](const std::vector<Site>& a) {
            std::pair<Mask, Mask> f{0, 0};
            for (Site s : a) {
                f.first |= Mask{1} << s.row;
                f.second |= Mask{1} << s.col;
            }
            return f;
        };
        bool ok = false;
        for (const auto& a1 : opt1)
            for (const auto& a2 : opt2) {
                auto [r1, c1] = files(a1);
                auto [r2, c2] = files(a2);
                if ((r1 & ~r2) == 0 && (c1 & ~c2) == 0) ok = true;
            }
        ++res.checks;
        if (!ok) res.fail("no nested optimal pair found");
    }
    return res;
}

// Solver oracle: brute enumeration, successive shortest paths, and the
// reduction algorithm agree on random matrices.
inline VerifyResult verify_solver(int trials = 1000, std::uint64_t seed = 4, int max_size = 6,
                                  double tol = 1e-9) {
    VerifyResult res{"solver"};
    auto rng = make_stream(seed);
    std::uniform_int_distribution<int> dim(1, max_size);
    for (int t = 0; t < trials; ++t) {
        int m = dim(rng), n = dim(rng);
        CostMatrix mat = detail::random_matrix(m, n, rng);
        for (int k = 1; k <= std::min(m, n); ++k) {
            double brute = brute_min_cost(mat, k);
            double ssp = min_cost_assignment(mat, k).cost;
            double red = solve_by_reduction(mat, k).first;
            ++res.checks;
            if (std::abs(brute - ssp) > tol || std::abs(brute - red) > tol)
                res.fail("solver disagreement on a random matrix");
        }
    }
    return res;
}

// Structural properties: cover extremality against enumerated covers, the
// optimal-cover intersection theorem, the r(Z) extension property, the
// quotient/contraction identity, and the column-deletion identity.
inline VerifyResult verify_structural(int trials = 150, std::uint64_t seed = 5) {
    VerifyResult res{"structural"};
    auto rng = make_stream(seed);
    std::uniform_int_distribution<int> dim(1, 5);

    for (int t = 0; t < trials; ++t) {
        int m = dim(rng), n = dim(rng);
        ZeroPattern z = detail::random_pattern(m, n, rng);

        // Koenig + extremal covers against enumeration
        auto optimal = brute_optimal_covers(z);
        int min_size = optimal.front().size();
        Cover rowmax = row_maximal_cover(z), colmax = column_maximal_cover(z);
        ++res.checks;
        if (rank(z) != min_size) res.fail("rank != minimum cover size");
        ++res.checks;
        if (!rowmax.covers(z) || rowmax.size() != min_size || !colmax.covers(z) ||
            colmax.size() != min_size)
            res.fail("extremal cover is not an optimal cover");
        Mask all_rows = 0, all_cols = 0;
        for (const Cover& c : optimal) {
            all_rows |= c.rows;
            all_cols |= c.cols;
        }
        ++res.checks;
        if ((all_rows & ~rowmax.rows) != 0) res.fail("row-maximal cover misses a cover row");
        ++res.checks;
        if ((all_cols & ~colmax.cols) != 0) res.fail("column-maximal cover misses a cover column");

        // extension: X in I_k(Z) iff X u r(Z) in I_k(Z)
        int k = std::uniform_int_distribution<int>(1, std::min(m, n))(rng);
        Mask rz = r_of(z);
        for (Mask x = 0; x < (Mask{1} << m); ++x) {
            bool in = is_partial_cover(z, k, {x, 0});
            bool in_ext = is_partial_cover(z, k, {x | rz, 0});
            ++res.checks;
            if (in != in_ext) res.fail("extension property violated");
        }

        // contraction: I_k(Z u {(i,j)}) = I_k(Z)/i when the rank increases
        {
            std::uniform_int_distribution<int> ri(0, m - 1), cj(0, n - 1);
            Site s{ri(rng), cj(rng)};
            if (!z.contains(s)) {
                ZeroPattern z2 = z;
                z2.add(s);
                if (rank(z2) == rank(z) + 1) {
                    CoverIdeal lhs = enumerate_row_ideal(z2, k);
                    CoverIdeal rhs = ideal_quotient(enumerate_row_ideal(z, k), s.row);
                    // the quotient ideal is closed under adding/removing
                    // row i, so compare through the i-stripped masks
                    ++res.checks;
                    bool same = true;
                    for (Mask x = 0; x < (Mask{1} << m); ++x)
                        if (lhs.contains_rows(x) != rhs.contains_rows(x & ~(Mask{1} << s.row)))
                            same = false;
                    if (!same) res.fail("contraction identity violated");
                }
            }
        }

        // optimal-cover intersection: with no zero-cost (k+1)-assignment,
        // every file of an optimal cover meets every optimal k-assignment
        {
            int kk = std::max(rank(z), 1);
            if (kk <= std::min(m, n)) {
                CostMatrix mat = detail::random_matrix(m, n, rng);
                for (Site s : z.sites()) mat.at(s.row, s.col) = 0;
                for (const auto& a : brute_optimal_assignments(mat, kk)) {
                    Mask ar = 0, ac = 0;
                    for (Site s : a) {
                        ar |= Mask{1} << s.row;
                        ac |= Mask{1} << s.col;
                    }
                    ++res.checks;
                    if ((colmax.rows & ~ar) != 0 || (colmax.cols & ~ac) != 0)
                        res.fail("optimal cover file misses an optimal assignment");
                }
            }
        }
    }

    // column-deletion: a column with >= k zeros makes
    // E[min_k] equal to E[min_{k-1}] of the instance without that column
    for (int t = 0; t < 25; ++t) {
        int m = 2 + int(t % 3), n = 2 + int(t / 5 % 3);
        int k = std::uniform_int_distribution<int>(2, std::min(m, n))(rng);
        ZeroPattern z(m, n);
        std::vector<int> rows(m);
        for (int i = 0; i < m; ++i) rows[i] = i;
        std::shuffle(rows.begin(), rows.end(), rng);
        for (int i = 0; i < k; ++i) z.add({rows[i], 0}); // k zeros in column 0
        WeightedSet wr = detail::random_weights(m, rng), wc = detail::random_weights(n, rng);
        Instance inst{wr, wc, z, k};

        std::vector<Rat> wc2(wc.weights().begin() + 1, wc.weights().end());
        ZeroPattern z2(m, n - 1);
        Instance small{wr, WeightedSet(wc2), z2, k - 1};
        ++res.checks;
        if (expected_min_probabilistic(inst).value.value !=
            expected_min_probabilistic(small).value.value)
            res.fail("column-deletion identity violated");
    }
    return res;
}

} // namespace randassign
