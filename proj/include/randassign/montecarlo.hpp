// montecarlo.hpp - sampling of standard matrices and empirical validation of
// the exact formulas. All estimators are deterministic given (seed, params).
#pragma once

#include "randassign/formulas.hpp"
#include "randassign/solver.hpp"

#include <cmath>
#include <cstdint>
#include <optional>
#include <random>
#include <stdexcept>

namespace randassign {

// splitmix64; used to derive independent generator streams from one master
// seed. Stream s of seed x is seeded with splitmix64(x + s * golden ratio).
inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

inline std::mt19937_64 make_stream(std::uint64_t seed, std::uint64_t stream = 0) {
    return std::mt19937_64(splitmix64(seed + stream * 0x9e3779b97f4a7c15ULL));
}

// Inverse-transform exponential with the given rate; U drawn in (0, 1].
inline double exp_sample(std::mt19937_64& rng, double rate) {
    double u;
    do {
        u = std::ldexp(static_cast<double>(rng() >> 11), -53);
    } while (u <= 0.0);
    return -std::log(u) / rate;
}

// One draw of a standard matrix: zero sites exactly 0, the rest independent
// exp(w_R(i) * w_C(j)).
inline CostMatrix sample_matrix(const Instance& inst, std::mt19937_64& rng) {
    CostMatrix mat(inst.m(), inst.n());
    for (int i = 0; i < inst.m(); ++i) {
        double wr = to_double(inst.rows.weight(i));
        for (int j = 0; j < inst.n(); ++j) {
            if (inst.zeros.contains({i, j})) continue;
            mat.at(i, j) = exp_sample(rng, wr * to_double(inst.cols.weight(j)));
        }
    }
    return mat;
}

struct SampleReport {
    double estimate = 0;
    double stderror = 0;
    long n_samples = 0;
    std::uint64_t seed = 0;
    std::optional<Rat> target;

    bool within_3se() const {
        if (!target) return true;
        return std::abs(estimate - to_double(*target)) <= 3 * stderror;
    }
};

namespace detail {
// Kahan-compensated accumulator for mean and standard error.
struct Accumulator {
    double sum = 0, c = 0, sumsq = 0, csq = 0;
    long n = 0;

    void add(double x) {
        ++n;
        double y = x - c, t = sum + y;
        c = (t - sum) - y;
        sum = t;
        double y2 = x * x - csq, t2 = sumsq + y2;
        csq = (t2 - sumsq) - y2;
        sumsq = t2;
    }
    double mean() const { return sum / n; }
    double stderror() const {
        double var = (sumsq - sum * sum / n) / (n - 1);
        return std::sqrt(std::max(0.0, var) / n);
    }
};
} // namespace detail

// Empirical E[min_k(M)]; target from the exact evaluator when the instance
// is within the enumeration caps.
inline SampleReport estimate_expected_min(const Instance& inst, long n_samples,
                                          std::uint64_t seed) {
    if (n_samples < 2) throw std::invalid_argument("need at least 2 samples");
    auto rng = make_stream(seed);
    detail::Accumulator acc;
    for (long s = 0; s < n_samples; ++s) {
        CostMatrix mat = sample_matrix(inst, rng);
        acc.add(min_cost_assignment(mat, inst.k).cost);
    }
    SampleReport rep{acc.mean(), acc.stderror(), n_samples, seed, std::nullopt};
    if (inst.m() + inst.n() <= kMaxFiles && inst.k <= kMaxK)
        rep.target = expected_min_probabilistic(inst).value.value;
    return rep;
}

// Frequency that a given site lies in the optimal k-assignment; target is
// w_R(i) w_C(j) * (E[min_k(M)] - E[min_k(M with the site zeroed)]).
inline SampleReport estimate_site_participation(const Instance& inst, Site site, long n_samples,
                                                std::uint64_t seed) {
    if (inst.zeros.contains(site)) throw std::invalid_argument("site is already a zero");
    auto rng = make_stream(seed);
    detail::Accumulator acc;
    for (long s = 0; s < n_samples; ++s) {
        CostMatrix mat = sample_matrix(inst, rng);
        auto res = min_cost_assignment(mat, inst.k);
        bool hit = std::find(res.assignment.begin(), res.assignment.end(), site) !=
                   res.assignment.end();
        acc.add(hit ? 1.0 : 0.0);
    }
    SampleReport rep{acc.mean(), acc.stderror(), n_samples, seed, std::nullopt};
    if (inst.m() + inst.n() <= kMaxFiles && inst.k <= kMaxK) {
        Instance zeroed = inst;
        zeroed.zeros.add(site);
        Rat alpha = inst.rows.weight(site.row) * inst.cols.weight(site.col);
        rep.target = alpha * (expected_min_probabilistic(inst).value.value -
                              expected_min_probabilistic(zeroed).value.value);
    }
    return rep;
}

// Frequency that row i0 intersects the optimal k-assignment; target is the
// exit probability of i0 over the row ideal I_k(Z).
inline SampleReport estimate_row_participation(const Instance& inst, int i0, long n_samples,
                                               std::uint64_t seed) {
    if (i0 < 0 || i0 >= inst.m()) throw std::out_of_range("row index out of range");
    if (inst.zeros.row_mask(i0) != 0) throw std::invalid_argument("row has zero sites");
    auto rng = make_stream(seed);
    detail::Accumulator acc;
    for (long s = 0; s < n_samples; ++s) {
        CostMatrix mat = sample_matrix(inst, rng);
        Mask support = min_cost_assignment(mat, inst.k).row_support;
        acc.add(support >> i0 & 1 ? 1.0 : 0.0);
    }
    SampleReport rep{acc.mean(), acc.stderror(), n_samples, seed, std::nullopt};
    if (inst.m() + inst.n() <= kMaxFiles && inst.k <= kMaxK) {
        CoverIdeal ideal = enumerate_row_ideal(inst.zeros, inst.k);
        // empty ideal: a zero-cost k-assignment exists, so a zero-free row
        // never participates and the exit set is the empty set
        if (ideal.empty()) rep.target = Rat(0);
        else rep.target = exit_probability(inst.rows, ideal, i0);
    }
    return rep;
}

} // namespace randassign
