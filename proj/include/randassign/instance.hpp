// instance.hpp - problem instances: weighted index sets, zero patterns, k.
#pragma once

#include "randassign/rational.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace randassign {

// Subsets of rows/columns are bitmasks; m+n is capped at 32 well before
// any enumeration becomes feasible anyway.
using Mask = std::uint32_t;

inline int popcount(Mask m) { return std::popcount(m); }
inline Mask full_mask(int n) { return n >= 32 ? ~Mask{0} : (Mask{1} << n) - 1; }

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Ordered set {0,...,n-1} with strictly positive weights.
class WeightedSet {
public:
    WeightedSet() = default;
    explicit WeightedSet(std::vector<Rat> weights) : weights_(std::move(weights)) {
        for (const Rat& w : weights_)
            if (w <= 0) throw std::invalid_argument("weights must be strictly positive");
        total_ = 0;
        for (const Rat& w : weights_) total_ += w;
    }

    int size() const { return static_cast<int>(weights_.size()); }
    const Rat& weight(int i) const { return weights_.at(i); }
    const std::vector<Rat>& weights() const { return weights_; }
    const Rat& total() const { return total_; }

    Rat subset_weight(Mask x) const {
        if (x & ~full_mask(size()))
            throw std::out_of_range("subset contains elements outside the set");
        Rat s = 0;
        for (int i = 0; i < size(); ++i)
            if (x >> i & 1) s += weights_[i];
        return s;
    }
    Rat complement_weight(Mask x) const { return total_ - subset_weight(x); }

    bool operator==(const WeightedSet&) const = default;

private:
    std::vector<Rat> weights_;
    Rat total_ = 0;
};

struct Site {
    int row = 0;
    int col = 0;
    friend bool operator==(const Site&, const Site&) = default;
    friend auto operator<=>(const Site&, const Site&) = default;
};

// Set of sites stored as one column mask per row.
class ZeroPattern {
public:
    ZeroPattern() = default;
    ZeroPattern(int m, int n) : m_(m), n_(n), row_masks_(m, 0) {}
    ZeroPattern(int m, int n, const std::vector<Site>& sites) : ZeroPattern(m, n) {
        for (const Site& s : sites) add(s);
    }

    int rows() const { return m_; }
    int cols() const { return n_; }
    Mask row_mask(int i) const { return row_masks_.at(i); }

    void add(Site s) {
        if (s.row < 0 || s.row >= m_ || s.col < 0 || s.col >= n_)
            throw std::out_of_range("site outside matrix dimensions");
        if (row_masks_[s.row] >> s.col & 1)
            throw std::invalid_argument("duplicate zero site");
        row_masks_[s.row] |= Mask{1} << s.col;
    }

    bool contains(Site s) const {
        return s.row >= 0 && s.row < m_ && s.col >= 0 && s.col < n_ &&
               (row_masks_[s.row] >> s.col & 1);
    }

    int count() const {
        int c = 0;
        for (Mask m : row_masks_) c += popcount(m);
        return c;
    }

    std::vector<Site> sites() const {
        std::vector<Site> out;
        for (int i = 0; i < m_; ++i)
            for (int j = 0; j < n_; ++j)
                if (row_masks_[i] >> j & 1) out.push_back({i, j});
        return out;
    }

    // Sites not lying in a row of X or a column of Y.
    ZeroPattern uncovered_by(Mask row_set, Mask col_set) const {
        ZeroPattern z(m_, n_);
        for (int i = 0; i < m_; ++i)
            if (!(row_set >> i & 1)) z.row_masks_[i] = row_masks_[i] & ~col_set;
        return z;
    }

    bool operator==(const ZeroPattern&) const = default;

private:
    int m_ = 0, n_ = 0;
    std::vector<Mask> row_masks_;
};

// A standard-matrix description: weighted rows/columns, zero sites, k.
// Immutable after construction.
struct Instance {
    WeightedSet rows;
    WeightedSet cols;
    ZeroPattern zeros;
    int k = 1;
    bool exact = true; // false when any weight was given as a decimal literal

    int m() const { return rows.size(); }
    int n() const { return cols.size(); }

    void validate() const {
        if (k < 1 || k > std::min(m(), n()))
            throw std::invalid_argument("k out of range: must satisfy 1 <= k <= min(m, n)");
        if (zeros.rows() != m() || zeros.cols() != n())
            throw std::invalid_argument("zero pattern dimensions do not match");
    }

    bool operator==(const Instance&) const = default;
};

namespace detail {
inline Rat parse_weight(const nlohmann::json& j, const std::string& path, bool& exact) {
    if (j.is_number_integer()) return Rat(j.get<long long>());
    if (j.is_string()) return rat_from_fraction_string(j.get<std::string>());
    if (j.is_number_float()) {
        exact = false;
        return rat_from_double(j.get<double>());
    }
    throw ParseError(path + ": expected int, \"p/q\" string, or float");
}

inline WeightedSet parse_weights(const nlohmann::json& j, const std::string& path, bool& exact) {
    if (!j.is_array() || j.empty())
        throw ParseError(path + ": expected a non-empty array of weights");
    std::vector<Rat> w;
    for (std::size_t i = 0; i < j.size(); ++i) {
        std::string p = path + "[" + std::to_string(i) + "]";
        Rat v;
        try {
            v = parse_weight(j[i], p, exact);
        } catch (const std::invalid_argument& e) {
            throw ParseError(p + ": " + e.what());
        }
        if (v <= 0) throw ParseError(p + ": weight must be strictly positive");
        w.push_back(std::move(v));
    }
    return WeightedSet(std::move(w));
}
} // namespace detail

// Schema: {"rows":[scalar...],"cols":[scalar...],"zeros":[[r,c]...],"k":int}
inline Instance parse_instance(const nlohmann::json& doc) {
    if (!doc.is_object()) throw ParseError("document must be a JSON object");
    for (const char* field : {"rows", "cols", "k"})
        if (!doc.contains(field)) throw ParseError(std::string(field) + ": missing");

    Instance inst;
    inst.rows = detail::parse_weights(doc["rows"], "rows", inst.exact);
    inst.cols = detail::parse_weights(doc["cols"], "cols", inst.exact);
    inst.zeros = ZeroPattern(inst.m(), inst.n());
    if (doc.contains("zeros")) {
        const auto& zs = doc["zeros"];
        if (!zs.is_array()) throw ParseError("zeros: expected array of [r,c] pairs");
        for (std::size_t i = 0; i < zs.size(); ++i) {
            std::string p = "zeros[" + std::to_string(i) + "]";
            if (!zs[i].is_array() || zs[i].size() != 2 || !zs[i][0].is_number_integer() ||
                !zs[i][1].is_number_integer())
                throw ParseError(p + ": expected [row, col]");
            try {
                inst.zeros.add({zs[i][0].get<int>(), zs[i][1].get<int>()});
            } catch (const std::exception& e) {
                throw ParseError(p + ": " + e.what());
            }
        }
    }
    if (!doc["k"].is_number_integer()) throw ParseError("k: expected integer");
    inst.k = doc["k"].get<int>();
    try {
        inst.validate();
    } catch (const std::invalid_argument& e) {
        throw ParseError(std::string("k: ") + e.what());
    }
    return inst;
}

inline Instance parse_instance(const std::string& text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("malformed JSON: ") + e.what());
    }
    return parse_instance(doc);
}

inline nlohmann::json weight_to_json(const Rat& w, bool exact) {
    if (!exact) return to_double(w);
    if (denominator(w) == 1 && numerator(w) >= INT64_MIN && numerator(w) <= INT64_MAX)
        return static_cast<std::int64_t>(numerator(w));
    return to_fraction_string(w);
}

inline nlohmann::json serialize_instance(const Instance& inst) {
    nlohmann::json doc;
    doc["rows"] = nlohmann::json::array();
    for (const Rat& w : inst.rows.weights()) doc["rows"].push_back(weight_to_json(w, inst.exact));
    doc["cols"] = nlohmann::json::array();
    for (const Rat& w : inst.cols.weights()) doc["cols"].push_back(weight_to_json(w, inst.exact));
    doc["zeros"] = nlohmann::json::array();
    for (Site s : inst.zeros.sites()) doc["zeros"].push_back({s.row, s.col});
    doc["k"] = inst.k;
    return doc;
}

} // namespace randassign
