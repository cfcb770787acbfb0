#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

#include "slodowy/error.hpp"

namespace slodowy {

// Exact arithmetic everywhere: counts can exceed 64 bits (m! past m = 20)
// and the linear algebra must classify rank/stability without tolerances.
using Count = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline std::string to_string(const Rational& q) {
    return q.str();
}

inline std::string to_string(const Count& n) {
    return n.str();
}

/// Parses "p", "-p" or "p/q" with q > 0 after normalization.
inline Rational rational_from_string(std::string_view s) {
    if (s.empty()) fail(ErrorKind::ParseError, "empty rational literal");
    try {
        Rational q{std::string(s)};
        return q;
    } catch (const std::exception&) {
        fail(ErrorKind::ParseError, "bad rational literal '" + std::string(s) + "'");
    }
}

} // namespace slodowy
