// matching.hpp - bipartite matching over zero patterns: rank, Koenig covers,
// and the row-/column-maximal optimal covers used by matrix reduction.
#pragma once

#include "randassign/instance.hpp"

#include <utility>
#include <vector>

namespace randassign {

struct Dims {
    int m = 0;
    int n = 0;
};

// A set of files (rows and columns). When asserted as a cover of a pattern,
// every site must lie in a listed row or column.
struct Cover {
    Mask rows = 0;
    Mask cols = 0;

    int size() const { return popcount(rows) + popcount(cols); }

    bool covers(const ZeroPattern& z) const {
        for (int i = 0; i < z.rows(); ++i)
            if (!(rows >> i & 1) && (z.row_mask(i) & ~cols)) return false;
        return true;
    }

    friend bool operator==(const Cover&, const Cover&) = default;
};

// Independent set of sites, kept sorted by (row, col).
struct Matching {
    std::vector<Site> sites;
    int size() const { return static_cast<int>(sites.size()); }
};

namespace detail {

// Kuhn's augmenting-path matching. Rows and columns are tried in increasing
// label order, which fixes the result deterministically.
struct KuhnState {
    const ZeroPattern& z;
    std::vector<int> match_row; // row -> col or -1
    std::vector<int> match_col; // col -> row or -1
    std::vector<char> visited;

    explicit KuhnState(const ZeroPattern& zp)
        : z(zp), match_row(zp.rows(), -1), match_col(zp.cols(), -1), visited(zp.cols(), 0) {}

    bool augment(int row) {
        for (int j = 0; j < z.cols(); ++j) {
            if (!(z.row_mask(row) >> j & 1) || visited[j]) continue;
            visited[j] = 1;
            if (match_col[j] < 0 || augment(match_col[j])) {
                match_row[row] = j;
                match_col[j] = row;
                return true;
            }
        }
        return false;
    }

    void run() {
        for (int i = 0; i < z.rows(); ++i) {
            std::fill(visited.begin(), visited.end(), 0);
            augment(i);
        }
    }
};

} // namespace detail

inline Matching maximum_matching(const ZeroPattern& z) {
    detail::KuhnState st(z);
    st.run();
    Matching m;
    for (int i = 0; i < z.rows(); ++i)
        if (st.match_row[i] >= 0) m.sites.push_back({i, st.match_row[i]});
    return m;
}

inline int rank(const ZeroPattern& z) { return maximum_matching(z).size(); }

namespace detail {

// Koenig cover via alternating reachability. Starting from unmatched rows
// (any edge row->col, matched edge col->row) yields the cover
// (unreached rows) u (reached cols); this is the row-maximal optimal cover.
// The mirrored search from unmatched columns yields the column-maximal one.
inline Cover koenig_from_unmatched_rows(const ZeroPattern& z, const KuhnState& st) {
    std::vector<char> row_seen(z.rows(), 0), col_seen(z.cols(), 0);
    std::vector<int> stack;
    for (int i = 0; i < z.rows(); ++i)
        if (st.match_row[i] < 0) {
            row_seen[i] = 1;
            stack.push_back(i);
        }
    while (!stack.empty()) {
        int i = stack.back();
        stack.pop_back();
        for (int j = 0; j < z.cols(); ++j) {
            if (!(z.row_mask(i) >> j & 1) || col_seen[j]) continue;
            col_seen[j] = 1;
            int i2 = st.match_col[j];
            if (i2 >= 0 && !row_seen[i2]) {
                row_seen[i2] = 1;
                stack.push_back(i2);
            }
        }
    }
    Cover c;
    for (int i = 0; i < z.rows(); ++i)
        if (!row_seen[i]) c.rows |= Mask{1} << i;
    for (int j = 0; j < z.cols(); ++j)
        if (col_seen[j]) c.cols |= Mask{1} << j;
    return c;
}

inline Cover koenig_from_unmatched_cols(const ZeroPattern& z, const KuhnState& st) {
    std::vector<char> row_seen(z.rows(), 0), col_seen(z.cols(), 0);
    std::vector<int> stack;
    for (int j = 0; j < z.cols(); ++j)
        if (st.match_col[j] < 0) {
            col_seen[j] = 1;
            stack.push_back(j);
        }
    while (!stack.empty()) {
        int j = stack.back();
        stack.pop_back();
        for (int i = 0; i < z.rows(); ++i) {
            if (!(z.row_mask(i) >> j & 1) || row_seen[i]) continue;
            row_seen[i] = 1;
            int j2 = st.match_row[i];
            if (j2 >= 0 && !col_seen[j2]) {
                col_seen[j2] = 1;
                stack.push_back(j2);
            }
        }
    }
    Cover c;
    for (int j = 0; j < z.cols(); ++j)
        if (!col_seen[j]) c.cols |= Mask{1} << j;
    for (int i = 0; i < z.rows(); ++i)
        if (row_seen[i]) c.rows |= Mask{1} << i;
    return c;
}

} // namespace detail

inline Cover row_maximal_cover(const ZeroPattern& z) {
    detail::KuhnState st(z);
    st.run();
    return detail::koenig_from_unmatched_rows(z, st);
}

inline Cover column_maximal_cover(const ZeroPattern& z) {
    detail::KuhnState st(z);
    st.run();
    return detail::koenig_from_unmatched_cols(z, st);
}

// Rows of the row-maximal optimal cover, r(Z).
inline Mask r_of(const ZeroPattern& z) { return row_maximal_cover(z).rows; }

} // namespace randassign
