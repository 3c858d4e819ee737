// cover_poset.hpp - ideals of partial (k-1)-covers over file pairs (J_k) and
// over rows (I_k), plus the Moebius function on the augmented poset.
#pragma once

#include "randassign/matching.hpp"

#include <cstdint>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>
#include <vector>

namespace randassign {

inline constexpr int kMaxFiles = 16; // enumeration cap on m+n
inline constexpr int kMaxK = 8;      // enumeration cap on k

// Element of the cover poset: a set of rows and a set of columns.
struct FileSetPair {
    Mask rows = 0;
    Mask cols = 0;

    int size() const { return popcount(rows) + popcount(cols); }
    bool subset_of(const FileSetPair& o) const {
        return (rows & ~o.rows) == 0 && (cols & ~o.cols) == 0;
    }
    friend bool operator==(const FileSetPair&, const FileSetPair&) = default;

    std::uint32_t key() const { return rows | (cols << 16); }
};

// Order ideal of partial (k-1)-covers, either over (row set, column set)
// pairs or over row sets only. Downward closed by construction.
struct CoverIdeal {
    enum class Kind { pairs, rows };
    Kind kind = Kind::pairs;
    std::vector<FileSetPair> members; // rows kind: cols always 0
    std::unordered_set<std::uint32_t> index;

    bool contains(FileSetPair p) const { return index.count(p.key()) != 0; }
    bool contains_rows(Mask x) const { return index.count(FileSetPair{x, 0}.key()) != 0; }
    bool empty() const { return members.empty(); }
    std::size_t size() const { return members.size(); }

    void insert(FileSetPair p) {
        if (index.insert(p.key()).second) members.push_back(p);
    }
};

inline void check_enumeration_cap(int m, int n, int k) {
    if (m + n > kMaxFiles || k > kMaxK)
        throw std::domain_error("instance exceeds enumeration cap (m+n <= 16, k <= 8)");
}

// pair is in J_k iff its files plus an optimal cover of the uncovered zeros
// fit within k-1 files.
inline bool is_partial_cover(const ZeroPattern& z, int k, FileSetPair pair) {
    int used = pair.size();
    if (used > k - 1) return false;
    return rank(z.uncovered_by(pair.rows, pair.cols)) <= k - 1 - used;
}

inline bool is_partial_cover(const Instance& inst, FileSetPair pair) {
    return is_partial_cover(inst.zeros, inst.k, pair);
}

namespace detail {
// Subsets of {0..n-1} with at most b elements, lexicographic-by-mask order.
inline std::vector<Mask> masks_up_to(int n, int b) {
    std::vector<Mask> out;
    for (Mask x = 0; x < (Mask{1} << n); ++x)
        if (popcount(x) <= b) out.push_back(x);
    return out;
}
} // namespace detail

// J_k(M): all pairs (X, Y) that are partial (k-1)-covers of the zeros.
inline CoverIdeal enumerate_ideal(const Instance& inst) {
    check_enumeration_cap(inst.m(), inst.n(), inst.k);
    CoverIdeal ideal;
    ideal.kind = CoverIdeal::Kind::pairs;
    for (Mask x : detail::masks_up_to(inst.m(), inst.k - 1))
        for (Mask y : detail::masks_up_to(inst.n(), inst.k - 1 - popcount(x)))
            if (is_partial_cover(inst, {x, y})) ideal.insert({x, y});
    return ideal;
}

// I_k(Z): row subsets that are partial (k-1)-covers.
inline CoverIdeal enumerate_row_ideal(const ZeroPattern& z, int k) {
    check_enumeration_cap(z.rows(), z.cols(), k);
    CoverIdeal ideal;
    ideal.kind = CoverIdeal::Kind::rows;
    for (Mask x : detail::masks_up_to(z.rows(), k - 1))
        if (is_partial_cover(z, k, {x, 0})) ideal.insert({x, 0});
    return ideal;
}

// I \ i: members not containing row i.
inline CoverIdeal ideal_delete(const CoverIdeal& ideal, int i) {
    CoverIdeal out;
    out.kind = ideal.kind;
    for (FileSetPair p : ideal.members)
        if (!(p.rows >> i & 1)) out.insert(p);
    return out;
}

// I / i = {X : X u {i} in I}.
inline CoverIdeal ideal_quotient(const CoverIdeal& ideal, int i) {
    CoverIdeal out;
    out.kind = ideal.kind;
    Mask bit = Mask{1} << i;
    for (FileSetPair p : ideal.members)
        if (p.rows & bit) out.insert({p.rows & ~bit, p.cols});
    return out;
}

// Memoized Moebius values mu(p, 1^) on the ideal augmented with a top
// element: mu(1^,1^) = 1 and for p < 1^,
// mu(p,1^) = -sum_{p < q <= 1^} mu(q,1^).
class MobiusToTop {
public:
    explicit MobiusToTop(const CoverIdeal& ideal) : ideal_(ideal) {}

    long long operator()(FileSetPair pair) {
        if (!ideal_.contains(pair)) throw std::invalid_argument("pair not in the ideal");
        return value(pair);
    }

private:
    long long value(FileSetPair pair) {
        auto it = memo_.find(pair.key());
        if (it != memo_.end()) return it->second;
        long long sum = 1; // the top element's own mu(1^,1^)
        for (FileSetPair q : ideal_.members)
            if (pair.subset_of(q) && !(q == pair)) sum += value(q);
        long long mu = -sum;
        memo_.emplace(pair.key(), mu);
        return mu;
    }

    const CoverIdeal& ideal_;
    std::unordered_map<std::uint32_t, long long> memo_;
};

inline long long mobius_to_top(const CoverIdeal& ideal, FileSetPair pair) {
    return MobiusToTop(ideal)(pair);
}

inline long long mobius_to_top(const Instance& inst, FileSetPair pair) {
    CoverIdeal ideal = enumerate_ideal(inst);
    return mobius_to_top(ideal, pair);
}

// mu(bottom, 1^) of the rank-(k-1)-truncated Boolean lattice of degree N
// with a top element attached: (-1)^k * C(N-1, k-1).
inline long long truncated_boolean_mobius(int n, int k) {
    if (k < 1 || k > n) throw std::out_of_range("require 1 <= k <= N");
    long long b = static_cast<long long>(binomial(n - 1, k - 1));
    return (k % 2 == 0) ? b : -b;
}

} // namespace randassign
