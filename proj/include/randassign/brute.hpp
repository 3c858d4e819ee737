// brute.hpp - small-scale exhaustive oracles: assignment enumeration, cover
// enumeration, and enumeration of all order ideals on a tiny ground set.
// Deliberately independent of the solver and matching construction paths.
#pragma once

#include "randassign/solver.hpp"

#include <limits>
#include <vector>

namespace randassign {

namespace detail {
template <typename Visit>
void enumerate_assignments(const CostMatrix& mat, int k, int row, Mask used_cols,
                           std::vector<Site>& cur, const Visit& visit) {
    if (static_cast<int>(cur.size()) == k) {
        visit(cur);
        return;
    }
    if (row >= mat.m || mat.m - row < k - static_cast<int>(cur.size())) return;
    enumerate_assignments(mat, k, row + 1, used_cols, cur, visit); // skip this row
    for (int j = 0; j < mat.n; ++j) {
        if (used_cols >> j & 1) continue;
        cur.push_back({row, j});
        enumerate_assignments(mat, k, row + 1, used_cols | (Mask{1} << j), cur, visit);
        cur.pop_back();
    }
}
} // namespace detail

template <typename Visit>
void for_each_k_assignment(const CostMatrix& mat, int k, const Visit& visit) {
    std::vector<Site> cur;
    detail::enumerate_assignments(mat, k, 0, 0, cur, visit);
}

inline double brute_min_cost(const CostMatrix& mat, int k) {
    double best = std::numeric_limits<double>::infinity();
    for_each_k_assignment(mat, k, [&](const std::vector<Site>& a) {
        double c = 0;
        for (Site s : a) c += mat.at(s.row, s.col);
        best = std::min(best, c);
    });
    return best;
}

inline std::vector<std::vector<Site>> brute_optimal_assignments(const CostMatrix& mat, int k,
                                                                double eps = 1e-9) {
    double best = brute_min_cost(mat, k);
    std::vector<std::vector<Site>> out;
    for_each_k_assignment(mat, k, [&](const std::vector<Site>& a) {
        double c = 0;
        for (Site s : a) c += mat.at(s.row, s.col);
        if (c <= best + eps) out.push_back(a);
    });
    return out;
}

inline std::vector<Cover> brute_all_covers(const ZeroPattern& z, int size_limit) {
    std::vector<Cover> out;
    for (Mask x = 0; x < (Mask{1} << z.rows()); ++x)
        for (Mask y = 0; y < (Mask{1} << z.cols()); ++y) {
            Cover c{x, y};
            if (c.size() <= size_limit && c.covers(z)) out.push_back(c);
        }
    return out;
}

inline int brute_min_cover_size(const ZeroPattern& z) {
    int best = z.rows() + z.cols();
    for (const Cover& c : brute_all_covers(z, best)) best = std::min(best, c.size());
    return best;
}

inline std::vector<Cover> brute_optimal_covers(const ZeroPattern& z) {
    return brute_all_covers(z, brute_min_cover_size(z));
}

// All order ideals (downward-closed families) over subsets of {0..n-1}.
// Feasible only for n <= 4: 2^(2^n) candidate families.
inline std::vector<std::vector<Mask>> all_order_ideals(int n) {
    const int nsub = 1 << n;
    std::vector<std::vector<Mask>> out;
    for (std::uint32_t fam = 0; fam < (std::uint32_t{1} << nsub); ++fam) {
        bool closed = true;
        for (int x = 0; x < nsub && closed; ++x) {
            if (!(fam >> x & 1)) continue;
            for (int i = 0; i < n; ++i)
                if ((x >> i & 1) && !(fam >> (x & ~(1 << i)) & 1)) {
                    closed = false;
                    break;
                }
        }
        if (!closed) continue;
        std::vector<Mask> ideal;
        for (int x = 0; x < nsub; ++x)
            if (fam >> x & 1) ideal.push_back(static_cast<Mask>(x));
        out.push_back(std::move(ideal));
    }
    return out;
}

} // namespace randassign
