// urn.hpp - weighted urn process: reach probabilities, exit probabilities,
// exit times, and the two-dimensional product process.
#pragma once

#include "randassign/cover_poset.hpp"

#include <algorithm>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <vector>

namespace randassign {

// Lazy subset-DP table for Pr(X): the probability that the weighted urn walk
// passes through X, i.e. every element of X leaves before every element
// outside X. Pr(empty) = 1 and
//   Pr(X) = sum_{i in X} Pr(X \ {i}) * w(i) / w(complement of X \ {i}).
class ReachProbabilities {
public:
    explicit ReachProbabilities(const WeightedSet& s)
        : set_(s), table_(std::size_t{1} << s.size()), done_(std::size_t{1} << s.size(), 0) {
        table_[0] = 1;
        done_[0] = 1;
    }

    const Rat& operator()(Mask x) {
        if (x & ~full_mask(set_.size())) throw std::out_of_range("subset outside the set");
        if (done_[x]) return table_[x];
        Rat p = 0;
        for (int i = 0; i < set_.size(); ++i) {
            if (!(x >> i & 1)) continue;
            Mask prev = x & ~(Mask{1} << i);
            p += (*this)(prev) * set_.weight(i) / set_.complement_weight(prev);
        }
        table_[x] = std::move(p);
        done_[x] = 1;
        return table_[x];
    }

    const WeightedSet& set() const { return set_; }

private:
    const WeightedSet& set_;
    std::vector<Rat> table_;
    std::vector<char> done_;
};

inline Rat reach_probability(const WeightedSet& s, Mask x) {
    return ReachProbabilities(s)(x);
}

namespace detail {
inline void check_rows_ideal(const CoverIdeal& ideal, const WeightedSet& s) {
    if (ideal.kind != CoverIdeal::Kind::rows)
        throw std::invalid_argument("expected a rows-kind ideal");
    if (!ideal.contains_rows(0))
        throw std::invalid_argument("ideal must contain the empty set");
    if (ideal.contains_rows(full_mask(s.size())))
        throw std::invalid_argument("ideal must not contain the full set");
}
} // namespace detail

// Pr(i in exit(I)) = sum_{X in I\i} w(i) Pr(X) / w(complement X).
inline Rat exit_probability(const WeightedSet& s, const CoverIdeal& ideal, int i) {
    detail::check_rows_ideal(ideal, s);
    ReachProbabilities pr(s);
    Rat total = 0;
    for (FileSetPair p : ideal.members) {
        if (p.rows >> i & 1) continue;
        total += s.weight(i) * pr(p.rows) / s.complement_weight(p.rows);
    }
    return total;
}

// E[T(I)] = sum_{X in I} Pr(X) / w(complement X).
inline Rat expected_exit_time(const WeightedSet& s, const CoverIdeal& ideal) {
    if (ideal.kind != CoverIdeal::Kind::rows)
        throw std::invalid_argument("expected a rows-kind ideal");
    if (ideal.contains_rows(full_mask(s.size())))
        throw std::invalid_argument("exit time is infinite: ideal contains the full set");
    ReachProbabilities pr(s);
    Rat total = 0;
    for (FileSetPair p : ideal.members) total += pr(p.rows) / s.complement_weight(p.rows);
    return total;
}

// Two-dimensional exit time over a pairs ideal:
// E[T(J)] = sum_{(X,Y) in J} Pr_R(X) Pr_C(Y) / (w_R(comp X) w_C(comp Y)).
inline Rat expected_exit_time_2d(const WeightedSet& rows, const WeightedSet& cols,
                                 const CoverIdeal& ideal) {
    if (ideal.kind != CoverIdeal::Kind::pairs)
        throw std::invalid_argument("expected a pairs-kind ideal");
    for (FileSetPair p : ideal.members)
        for (int i = 0; i < rows.size() + cols.size(); ++i) {
            FileSetPair q = p;
            if (i < rows.size()) q.rows &= ~(Mask{1} << i);
            else q.cols &= ~(Mask{1} << (i - rows.size()));
            if (!(q == p) && !ideal.contains(q))
                throw std::invalid_argument("ideal is not downward closed");
        }
    ReachProbabilities pr_r(rows), pr_c(cols);
    Rat total = 0;
    for (FileSetPair p : ideal.members)
        total += pr_r(p.rows) * pr_c(p.cols) /
                 (rows.complement_weight(p.rows) * cols.complement_weight(p.cols));
    return total;
}

inline Rat expected_exit_time_2d(const Instance& inst, const CoverIdeal& ideal) {
    return expected_exit_time_2d(inst.rows, inst.cols, ideal);
}

struct Draw {
    double time = 0;
    int element = 0;
};

// One trajectory of the continuous-time urn: element i leaves at an
// independent exp(w(i)) time. Ties (possible in floating point) break by
// element label.
inline std::vector<Draw> simulate_urn(const WeightedSet& s, std::mt19937_64& rng) {
    std::vector<Draw> draws(s.size());
    for (int i = 0; i < s.size(); ++i) {
        double u;
        do {
            u = std::ldexp(static_cast<double>(rng() >> 11), -53);
        } while (u <= 0.0);
        draws[i] = {-std::log(u) / to_double(s.weight(i)), i};
    }
    std::sort(draws.begin(), draws.end(), [](const Draw& a, const Draw& b) {
        return a.time != b.time ? a.time < b.time : a.element < b.element;
    });
    return draws;
}

} // namespace randassign
