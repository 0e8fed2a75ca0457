#include "comalg/rational.hpp"

#include <cctype>

namespace comalg {

std::optional<Rational> parse_rational(std::string_view text) {
  if (text.empty()) return std::nullopt;
  std::size_t pos = 0;
  bool negative = false;
  if (text[pos] == '-') {
    negative = true;
    ++pos;
  }
  auto read_digits = [&](Integer& out) -> bool {
    if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos]))) return false;
    out = 0;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      out = out * 10 + (text[pos] - '0');
      ++pos;
    }
    return true;
  };
  Integer num;
  if (!read_digits(num)) return std::nullopt;
  Integer den = 1;
  if (pos < text.size() && text[pos] == '/') {
    ++pos;
    if (!read_digits(den) || den == 0) return std::nullopt;
  }
  if (pos != text.size()) return std::nullopt;
  if (negative) num = -num;
  return Rational(num, den);
}

std::string to_string(const Rational& r) {
  std::string s = numerator(r).str();
  if (denominator(r) != 1) {
    s += '/';
    s += denominator(r).str();
  }
  return s;
}

bool vec_is_zero(const Vec& v) {
  for (const auto& x : v)
    if (x != 0) return false;
  return true;
}

Vec vec_add(const Vec& a, const Vec& b) {
  Vec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

Vec vec_sub(const Vec& a, const Vec& b) {
  Vec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

Vec vec_scale(const Rational& c, const Vec& v) {
  Vec out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = c * v[i];
  return out;
}

Vec unit_vec(std::size_t dim, std::size_t index) {
  Vec out(dim, Rational(0));
  out.at(index) = 1;
  return out;
}

std::string to_string(const Vec& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ',';
    s += to_string(v[i]);
  }
  return s;
}

}  // namespace comalg
