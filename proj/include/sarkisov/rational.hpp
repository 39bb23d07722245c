#pragma once

#include "sarkisov/error.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace sarkisov {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

[[nodiscard]] inline Rational rat(std::int64_t num, std::int64_t den = 1)
{
    return Rational(Integer(num), Integer(den));
}

[[nodiscard]] inline Integer num(const Rational& r) { return boost::multiprecision::numerator(r); }
[[nodiscard]] inline Integer den(const Rational& r) { return boost::multiprecision::denominator(r); }

[[nodiscard]] inline bool is_integer(const Rational& r) { return den(r) == 1; }

[[nodiscard]] inline Integer floor_of(const Rational& r)
{
    Integer q = num(r) / den(r);  // truncates toward zero
    if (r < 0 && q * den(r) != num(r)) {
        --q;
    }
    return q;
}

/// Floor square root; the argument must be nonnegative.
[[nodiscard]] inline Integer isqrt(const Integer& n)
{
    if (n < 0) {
        throw Error(ErrorCode::InvalidArgument, "isqrt of a negative integer");
    }
    return boost::multiprecision::sqrt(n);
}

[[nodiscard]] inline std::optional<Integer> exact_sqrt(const Integer& n)
{
    if (n < 0) {
        return std::nullopt;
    }
    Integer s = isqrt(n);
    if (s * s != n) {
        return std::nullopt;
    }
    return s;
}

[[nodiscard]] inline bool is_square(const Integer& n) { return exact_sqrt(n).has_value(); }

/// Canonical text form: "n" for integers, "p/q" otherwise (q > 0, lowest terms).
[[nodiscard]] inline std::string to_string(const Rational& r)
{
    if (is_integer(r)) {
        return num(r).str();
    }
    return num(r).str() + "/" + den(r).str();
}

[[nodiscard]] inline Rational parse_rational(std::string_view text)
{
    auto parse_int = [&](std::string_view s) -> Integer {
        if (s.empty()) {
            throw Error(ErrorCode::InvalidArgument, "empty number in '" + std::string(text) + "'");
        }
        std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
        if (i == s.size()) {
            throw Error(ErrorCode::InvalidArgument, "bad number '" + std::string(text) + "'");
        }
        for (std::size_t k = i; k < s.size(); ++k) {
            if (s[k] < '0' || s[k] > '9') {
                throw Error(ErrorCode::InvalidArgument, "bad number '" + std::string(text) + "'");
            }
        }
        return Integer(std::string(s[0] == '+' ? s.substr(1) : s));
    };
    auto slash = text.find('/');
    if (slash == std::string_view::npos) {
        return Rational(parse_int(text));
    }
    Integer d = parse_int(text.substr(slash + 1));
    if (d == 0) {
        throw Error(ErrorCode::InvalidArgument, "zero denominator in '" + std::string(text) + "'");
    }
    return Rational(parse_int(text.substr(0, slash)), d);
}

[[nodiscard]] inline std::int64_t to_int64(const Integer& n)
{
    if (n > Integer(INT64_MAX) || n < Integer(INT64_MIN)) {
        throw Error(ErrorCode::InvalidArgument, "integer out of 64-bit range: " + n.str());
    }
    return n.convert_to<std::int64_t>();
}

/// True when the reduced denominator of r divides `modulus`.
[[nodiscard]] inline bool denominator_divides(const Rational& r, std::int64_t modulus)
{
    return Integer(modulus) % den(r) == 0;
}

}  // namespace sarkisov
