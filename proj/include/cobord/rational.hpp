#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

namespace cobord {

// Exact rational arithmetic; no floating point anywhere in the kernel.
// cpp_rational keeps values in lowest terms with positive denominator.
using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Canonical rendering: "p/q", or "p" when the denominator is 1.
inline std::string rational_str(const Rational& r)
{
    if (denominator(r) == 1)
        return numerator(r).str();
    return numerator(r).str() + "/" + denominator(r).str();
}

}  // namespace cobord
