// solver.hpp - exact minimum-cost k-assignment for concrete matrices and the
// cover-based matrix reduction algorithm.
#pragma once

#include "randassign/matching.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <vector>

namespace randassign {

struct CostMatrix {
    int m = 0;
    int n = 0;
    std::vector<double> a; // row-major

    CostMatrix() = default;
    CostMatrix(int rows, int cols, double fill = 0.0) : m(rows), n(cols), a(rows * cols, fill) {}
    CostMatrix(std::initializer_list<std::initializer_list<double>> rows) {
        m = static_cast<int>(rows.size());
        for (const auto& r : rows) {
            if (n == 0) n = static_cast<int>(r.size());
            else if (static_cast<int>(r.size()) != n)
                throw std::invalid_argument("ragged matrix");
            a.insert(a.end(), r.begin(), r.end());
        }
    }

    double& at(int i, int j) { return a[i * n + j]; }
    double at(int i, int j) const { return a[i * n + j]; }

    friend bool operator==(const CostMatrix&, const CostMatrix&) = default;
};

// Zero detection threshold for reduction bookkeeping; entries are expected
// on O(1) scale.
inline constexpr double kZeroEps = 1e-12;

inline ZeroPattern zeros_of(const CostMatrix& mat, double eps = kZeroEps) {
    if (mat.m > 32 || mat.n > 32) throw std::domain_error("matrix too large for bitmask covers");
    ZeroPattern z(mat.m, mat.n);
    for (int i = 0; i < mat.m; ++i)
        for (int j = 0; j < mat.n; ++j)
            if (mat.at(i, j) <= eps) z.add({i, j});
    return z;
}

struct SolveResult {
    double cost = 0;
    std::vector<Site> assignment;
    Mask row_support = 0;
};

// Minimum-cost k-assignment by k rounds of shortest augmenting paths with
// node potentials. Each intermediate round is a minimum-cost assignment of
// its size, so the rounds realize the nesting structure directly.
inline SolveResult min_cost_assignment(const CostMatrix& mat, int k) {
    const int m = mat.m, n = mat.n;
    if (k < 1 || k > std::min(m, n)) throw std::out_of_range("k out of range");
    const double inf = std::numeric_limits<double>::infinity();

    std::vector<int> match_row(m, -1), match_col(n, -1);
    std::vector<double> pot_row(m, 0), pot_col(n, 0);

    for (int round = 0; round < k; ++round) {
        // Multi-source Dijkstra from all free rows over the residual graph.
        std::vector<double> dist_row(m, inf), dist_col(n, inf);
        std::vector<char> done_row(m, 0), done_col(n, 0);
        std::vector<int> parent_col(n, -1); // col <- row it was reached from
        for (int i = 0; i < m; ++i)
            if (match_row[i] < 0) dist_row[i] = 0;

        int end_col = -1;
        double end_dist = inf;
        while (true) {
            // pick the unsettled node with smallest distance (rows first on ties)
            int bi = -1, bj = -1;
            double best = inf;
            for (int i = 0; i < m; ++i)
                if (!done_row[i] && dist_row[i] < best) { best = dist_row[i]; bi = i; bj = -1; }
            for (int j = 0; j < n; ++j)
                if (!done_col[j] && dist_col[j] < best) { best = dist_col[j]; bj = j; bi = -1; }
            if (best == inf || best >= end_dist) break;
            if (bj < 0) {
                done_row[bi] = 1;
                for (int j = 0; j < n; ++j) {
                    if (done_col[j] || j == match_row[bi]) continue;
                    double nd = best + mat.at(bi, j) - pot_row[bi] - pot_col[j];
                    if (nd < dist_col[j]) {
                        dist_col[j] = nd;
                        parent_col[j] = bi;
                        if (match_col[j] < 0 && nd < end_dist) { end_dist = nd; end_col = j; }
                    }
                }
            } else {
                done_col[bj] = 1;
                int i2 = match_col[bj];
                if (i2 >= 0 && best < dist_row[i2]) dist_row[i2] = best;
            }
        }
        if (end_col < 0) throw std::runtime_error("no augmenting path");

        // Johnson-style update keeps reduced costs nonnegative and matched
        // edges tight.
        for (int i = 0; i < m; ++i) pot_row[i] -= std::min(dist_row[i], end_dist);
        for (int j = 0; j < n; ++j) pot_col[j] += std::min(dist_col[j], end_dist);

        // augment along parent pointers
        int j = end_col;
        while (j >= 0) {
            int i = parent_col[j];
            int jnext = match_row[i];
            match_row[i] = j;
            match_col[j] = i;
            j = jnext;
        }
    }

    SolveResult res;
    for (int i = 0; i < m; ++i)
        if (match_row[i] >= 0) {
            res.assignment.push_back({i, match_row[i]});
            res.cost += mat.at(i, match_row[i]);
            res.row_support |= Mask{1} << i;
        }
    return res;
}

inline Mask optimal_row_support(const CostMatrix& mat, int k) {
    return min_cost_assignment(mat, k).row_support;
}

// Reduction of M by an optimal cover: subtract the minimum uncovered entry
// from uncovered sites, add it to doubly covered sites.
inline std::pair<CostMatrix, double> reduce_once(const CostMatrix& mat, const Cover& cover) {
    ZeroPattern z = zeros_of(mat);
    if (!cover.covers(z)) throw std::invalid_argument("cover does not cover the zeros");
    if (cover.size() != rank(z)) throw std::invalid_argument("cover is not optimal");

    double t = std::numeric_limits<double>::infinity();
    for (int i = 0; i < mat.m; ++i) {
        if (cover.rows >> i & 1) continue;
        for (int j = 0; j < mat.n; ++j)
            if (!(cover.cols >> j & 1)) t = std::min(t, mat.at(i, j));
    }
    if (!std::isfinite(t)) throw std::invalid_argument("no uncovered entries");

    CostMatrix out = mat;
    for (int i = 0; i < mat.m; ++i)
        for (int j = 0; j < mat.n; ++j) {
            bool rc = cover.rows >> i & 1, cc = cover.cols >> j & 1;
            if (rc && cc) out.at(i, j) += t;
            else if (!rc && !cc) out.at(i, j) = std::max(0.0, out.at(i, j) - t);
        }
    return {out, t};
}

struct ReductionStep {
    Cover cover;
    double t = 0;
    CostMatrix result; // matrix after this step
};

struct ReductionTrace {
    std::vector<ReductionStep> steps;
};

// Iterate reduction by the column-maximal optimal cover until the zeros
// admit a k-assignment; min_k(M) = sum (k - |cover_i|) * t_i.
inline std::pair<double, ReductionTrace> solve_by_reduction(const CostMatrix& mat, int k) {
    if (k < 1 || k > std::min(mat.m, mat.n)) throw std::out_of_range("k out of range");
    CostMatrix cur = mat;
    ReductionTrace trace;
    double cost = 0;
    int guard = mat.m * mat.n + mat.m + mat.n + 2;
    while (guard-- > 0) {
        ZeroPattern z = zeros_of(cur);
        if (rank(z) >= k) return {cost, trace};
        Cover cover = column_maximal_cover(z);
        auto [next, t] = reduce_once(cur, cover);
        cost += (k - cover.size()) * t;
        trace.steps.push_back({cover, t, next});
        cur = std::move(next);
    }
    throw std::runtime_error("reduction did not terminate");
}

} // namespace randassign
