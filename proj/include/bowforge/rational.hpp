#pragma once

#include <boost/rational.hpp>

#include <cstdint>
#include <string>

namespace bowforge {

using Int = std::int64_t;
using Rational = boost::rational<Int>;

/* "p/q", or a plain integer when the denominator is 1. */
std::string to_string(const Rational& q);

/* Accepts "p/q", integers and finite decimals such as "-1.25". */
Rational parse_rational(const std::string& text);

inline bool is_integer(const Rational& q) { return q.denominator() == 1; }

/* Throws DomainError("non_integral") unless q is an integer. */
Int to_integer(const Rational& q);

} // namespace bowforge
