// rational.hpp - exact rational tower shared by all evaluators.
#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace randassign {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline double to_double(const Rat& r) { return static_cast<double>(r); }

// Reduced "p/q" rendering; integers print without the slash.
inline std::string to_fraction_string(const Rat& r) {
    if (denominator(r) == 1) return numerator(r).str();
    return numerator(r).str() + "/" + denominator(r).str();
}

inline Rat rat_from_fraction_string(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) return Rat(Int(s));
    Int p(s.substr(0, slash));
    Int q(s.substr(slash + 1));
    if (q == 0) throw std::invalid_argument("zero denominator in '" + s + "'");
    return Rat(p, q);
}

// Exact binary expansion of a finite double.
inline Rat rat_from_double(double x) {
    if (!std::isfinite(x)) throw std::invalid_argument("non-finite value");
    int exp = 0;
    double mant = std::frexp(x, &exp);
    // mant * 2^53 is integral
    Int num(static_cast<long long>(std::ldexp(mant, 53)));
    exp -= 53;
    if (exp >= 0) return Rat(num << exp);
    return Rat(num, Int(1) << (-exp));
}

inline Int binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    Int r = 1;
    for (int i = 0; i < k; ++i) {
        r *= (n - i);
        r /= (i + 1);
    }
    return r;
}

// Numeric value with an exactness flag. Exact-mode arithmetic never rounds;
// anything touched by a float-mode operand is float mode and compares with
// an explicit tolerance.
struct Scalar {
    Rat value;
    bool exact = true;

    Scalar() = default;
    Scalar(Rat v, bool ex = true) : value(std::move(v)), exact(ex) {}
    explicit Scalar(long long v) : value(v) {}

    double to_double() const { return randassign::to_double(value); }

    friend Scalar operator+(const Scalar& a, const Scalar& b) {
        return {a.value + b.value, a.exact && b.exact};
    }
    friend Scalar operator-(const Scalar& a, const Scalar& b) {
        return {a.value - b.value, a.exact && b.exact};
    }
    friend Scalar operator*(const Scalar& a, const Scalar& b) {
        return {a.value * b.value, a.exact && b.exact};
    }
    friend Scalar operator/(const Scalar& a, const Scalar& b) {
        if (b.value == 0) throw std::domain_error("division by zero");
        return {a.value / b.value, a.exact && b.exact};
    }

    bool equals(const Scalar& other, double tol = 1e-9) const {
        if (exact && other.exact) return value == other.value;
        return std::abs(to_double() - other.to_double()) <= tol;
    }
};

} // namespace randassign
