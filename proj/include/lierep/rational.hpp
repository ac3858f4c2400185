#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <string>

namespace lierep {

// All core arithmetic is exact: arbitrary-precision integers for dimensions
// and rationals for the invariant form, Casimir eigenvalues and the series
// formulas. Multiplicities and weight coordinates stay in machine integers.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// cpp_rational's (num, den) constructor requires a positive denominator.
inline Rat make_rat(Int num, Int den) {
    if (den == 0) throw std::domain_error("zero denominator");
    if (den < 0) { num = -num; den = -den; }
    return Rat(std::move(num), std::move(den));
}

inline long long to_int64(const Int& v) {
    if (v > std::numeric_limits<long long>::max() || v < std::numeric_limits<long long>::min())
        throw std::overflow_error("integer out of 64-bit range: " + v.str());
    return static_cast<long long>(v);
}

inline Int rat_to_int(const Rat& r) {
    if (boost::multiprecision::denominator(r) != 1)
        throw std::domain_error("expected integral value, got " + r.str());
    return boost::multiprecision::numerator(r);
}

inline std::string rat_str(const Rat& r) {
    std::ostringstream os;
    os << r;
    return os.str();
}

// Parses "p", "-p", "p/q".
inline Rat parse_rat(const std::string& s) {
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rat(Int(s));
        return make_rat(Int(s.substr(0, slash)), Int(s.substr(slash + 1)));
    } catch (const std::exception&) {
        throw std::invalid_argument("cannot parse rational '" + s + "'");
    }
}

}  // namespace lierep
