// formulas.hpp - exact evaluators for the expected minimum k-assignment cost
// in standard matrices, plus the closed-form specializations.
#pragma once

#include "randassign/urn.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace randassign {

enum class Method { probabilistic, combinatorial, bcr_closed, cs_closed, parisi };

inline const char* method_name(Method m) {
    switch (m) {
        case Method::probabilistic: return "probabilistic";
        case Method::combinatorial: return "combinatorial";
        case Method::bcr_closed: return "bcr";
        case Method::cs_closed: return "cs";
        case Method::parisi: return "parisi";
    }
    return "?";
}

struct ExpectedValue {
    Scalar value;
    Method method = Method::probabilistic;
};

// E[min_k(M)] as the expected 2D exit time of the ideal of partial
// (k-1)-covers. Empty ideal (a zero-cost k-assignment exists) gives 0.
inline ExpectedValue expected_min_probabilistic(const Instance& inst) {
    CoverIdeal ideal = enumerate_ideal(inst);
    if (ideal.empty()) return {Scalar(Rat(0), inst.exact), Method::probabilistic};
    return {Scalar(expected_exit_time_2d(inst, ideal), inst.exact), Method::probabilistic};
}

// E[min_k(M)] = sum over (X,Y) in J_k of -mu((X,Y),1^)/(w_R(comp X) w_C(comp Y)).
inline ExpectedValue expected_min_combinatorial(const Instance& inst) {
    CoverIdeal ideal = enumerate_ideal(inst);
    MobiusToTop mu(ideal);
    Rat total = 0;
    for (FileSetPair p : ideal.members)
        total += Rat(-mu(p)) /
                 (inst.rows.complement_weight(p.rows) * inst.cols.complement_weight(p.cols));
    return {Scalar(std::move(total), inst.exact), Method::combinatorial};
}

// Closed form for zero-free matrices: signed binomial over all (X,Y) with
// |X|+|Y| < k.
inline ExpectedValue expected_min_bcr(const Instance& inst) {
    if (inst.zeros.count() != 0)
        throw std::invalid_argument("closed form requires an empty zero pattern");
    check_enumeration_cap(inst.m(), inst.n(), inst.k);
    const int m = inst.m(), n = inst.n(), k = inst.k;
    Rat total = 0;
    for (Mask x = 0; x < (Mask{1} << m); ++x) {
        int px = popcount(x);
        if (px >= k) continue;
        Rat wx = inst.rows.complement_weight(x);
        for (Mask y = 0; y < (Mask{1} << n); ++y) {
            int p = px + popcount(y);
            if (p >= k) continue;
            Int coef = binomial(m + n - 1 - p, k - 1 - p);
            if ((k - 1 - p) % 2 != 0) coef = -coef;
            total += Rat(coef) / (wx * inst.cols.complement_weight(y));
        }
    }
    return {Scalar(std::move(total), inst.exact), Method::bcr_closed};
}

// Unit-weight closed form: sum_{i+j<k} 1/((m-i)(n-j)).
inline ExpectedValue expected_min_cs(int m, int n, int k) {
    if (k < 1 || k > std::min(m, n)) throw std::out_of_range("require 1 <= k <= min(m, n)");
    Rat total = 0;
    for (int i = 0; i < k; ++i)
        for (int j = 0; i + j < k; ++j)
            total += Rat(1, Int(m - i) * (n - j));
    return {Scalar(std::move(total)), Method::cs_closed};
}

// sum_{i=1}^{n} 1/i^2.
inline ExpectedValue parisi(int n) {
    if (n < 1) throw std::out_of_range("require n >= 1");
    Rat total = 0;
    for (int i = 1; i <= n; ++i) total += Rat(1, Int(i) * i);
    return {Scalar(std::move(total)), Method::parisi};
}

namespace detail {
// Adaptive Simpson on a smooth interval.
template <typename F>
double adaptive_simpson(F f, double a, double b, double fa, double fm, double fb, double tol,
                        int depth) {
    double m = (a + b) / 2;
    double lm = (a + m) / 2, rm = (m + b) / 2;
    double flm = f(lm), frm = f(rm);
    double whole = (b - a) / 6 * (fa + 4 * fm + fb);
    double left = (m - a) / 6 * (fa + 4 * flm + fm);
    double right = (b - m) / 6 * (fm + 4 * frm + fb);
    if (depth <= 0 || std::abs(left + right - whole) < 15 * tol)
        return left + right + (left + right - whole) / 15;
    return adaptive_simpson(f, a, m, fa, flm, fm, tol / 2, depth - 1) +
           adaptive_simpson(f, m, b, fm, frm, fb, tol / 2, depth - 1);
}
} // namespace detail

// Area under y = -ln(1 - e^{-x}) for x in (0, inf). With u = e^{-x} this is
// the integral of -ln(1-u)/u over (0,1); the endpoint limit at u=0 is 1 and
// the logarithmic singularity at u=1 is handled by the series tail
//   int_{1-d}^{1} -ln(1-u)/u du = sum_{j>=1} d^j ((-ln d)/j + 1/j^2).
// resolution scales the Simpson tolerance as 1e-8 / resolution.
inline double zeta2_limit_area(double resolution = 1.0) {
    if (resolution <= 0) throw std::invalid_argument("resolution must be positive");
    auto f = [](double u) { return u == 0.0 ? 1.0 : -std::log1p(-u) / u; };
    const double d = 1e-4;
    double tol = 1e-8 / resolution;
    double body = detail::adaptive_simpson(f, 0.0, 1.0 - d, f(0.0), f((1.0 - d) / 2),
                                           f(1.0 - d), tol, 40);
    double tail = 0, dj = 1, ld = -std::log(d);
    for (int j = 1; j <= 60; ++j) {
        dj *= d;
        tail += dj * (ld / j + 1.0 / (double(j) * j));
        if (dj < 1e-18) break;
    }
    return body + tail;
}

} // namespace randassign
