#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace rbd {

// Exact arithmetic only. Every verdict in this library is a sign decision,
// so there is no floating point anywhere in the core.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int num(const Rat& r) { return boost::multiprecision::numerator(r); }
inline Int den(const Rat& r) { return boost::multiprecision::denominator(r); }

/// Renders a rational as "num/den" ("num" when the denominator is 1).
inline std::string rat_to_string(const Rat& r) {
    if (den(r) == 1) return num(r).str();
    return num(r).str() + "/" + den(r).str();
}

/// Parses "a", "-a" or "a/b" with optional surrounding sign.
inline Rat parse_rational(const std::string& s) {
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rat(Int(s));
        Int n(s.substr(0, slash));
        Int d(s.substr(slash + 1));
        if (d == 0) throw std::invalid_argument("zero denominator");
        return Rat(n, d);
    } catch (const std::exception&) {
        throw std::invalid_argument("not a rational: '" + s + "'");
    }
}

/// Floor of the exact integer square root; -1 if x is not a perfect square.
inline Int exact_sqrt(const Int& x) {
    if (x < 0) return -1;
    Int r = boost::multiprecision::sqrt(x);
    return (r * r == x) ? r : Int(-1);
}

inline Int gcd(const Int& a, const Int& b) { return boost::multiprecision::gcd(a, b); }

} // namespace rbd
