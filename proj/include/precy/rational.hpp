#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>

namespace precy {

// Every coefficient in the engine is an exact rational. No floating point
// anywhere in the computational path.
using Scalar = boost::multiprecision::cpp_rational;
using Integer = boost::multiprecision::cpp_int;

inline Scalar parse_scalar(const std::string& s) {
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Scalar(Integer(s));
        Integer num(s.substr(0, slash));
        Integer den(s.substr(slash + 1));
        if (den == 0) throw std::invalid_argument("zero denominator");
        return Scalar(num, den);
    } catch (const std::exception& e) {
        throw std::invalid_argument("bad rational '" + s + "': " + e.what());
    }
}

// Canonical "p/q" (or "p" when integral) form; cpp_rational keeps gcd-reduced
// state internally so this is already unique.
inline std::string format_scalar(const Scalar& x) {
    Integer num = numerator(x), den = denominator(x);
    std::string out = num.str();
    if (den != 1) out += "/" + den.str();
    return out;
}

} // namespace precy
