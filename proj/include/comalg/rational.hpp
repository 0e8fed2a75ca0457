#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace comalg {

// Exact arithmetic everywhere: the scalar field is the rationals.
using Rational = boost::multiprecision::cpp_rational;
using Integer = boost::multiprecision::cpp_int;

using Vec = std::vector<Rational>;

// Text syntax: optional '-', decimal integer, optional '/' followed by a
// positive decimal integer.  Examples: "-3/4", "0", "7".
std::optional<Rational> parse_rational(std::string_view text);

// Prints "n" when the denominator is 1, otherwise "n/d" with d > 0.
std::string to_string(const Rational& r);

bool vec_is_zero(const Vec& v);
Vec vec_add(const Vec& a, const Vec& b);
Vec vec_sub(const Vec& a, const Vec& b);
Vec vec_scale(const Rational& c, const Vec& v);
Vec unit_vec(std::size_t dim, std::size_t index);
std::string to_string(const Vec& v);  // comma-separated entries

}  // namespace comalg
