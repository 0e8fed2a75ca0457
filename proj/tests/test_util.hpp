#pragma once

#include "comalg/matrix.hpp"

#include <cstdint>

namespace testutil {

// Small deterministic generator for property-style tests.
struct Rng {
  std::uint64_t state;
  explicit Rng(std::uint64_t seed) : state(seed) {}
  std::uint64_t next() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }
  // Uniform in [0, bound)
  std::uint64_t below(std::uint64_t bound) { return next() % bound; }
  // Small signed rational with numerator in [-3, 3] and denominator in {1, 2}
  comalg::Rational small_rational() {
    const long num = static_cast<long>(below(7)) - 3;
    const long den = 1 + static_cast<long>(below(2));
    return comalg::Rational(num, den);
  }
  comalg::Matrix matrix(std::size_t rows, std::size_t cols) {
    comalg::Matrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = small_rational();
    return m;
  }
  comalg::Vec vec(std::size_t n) {
    comalg::Vec v(n);
    for (auto& x : v) x = small_rational();
    return v;
  }
};

}  // namespace testutil
