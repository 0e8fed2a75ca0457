#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "comalg/linalg.hpp"
#include "test_util.hpp"

using namespace comalg;

namespace {

Matrix mat(const std::vector<Vec>& rows, std::size_t cols) { return Matrix::from_rows(rows, cols); }

Rational q(long n, long d = 1) { return Rational(n, d); }

}  // namespace

TEST_CASE("rational parse/print round trip") {
  for (const char* text : {"0", "7", "-3/4", "22/7", "-1", "1000000000000000000000/7"}) {
    auto r = parse_rational(text);
    REQUIRE(r.has_value());
    CHECK(to_string(*r) == text);
  }
  CHECK(!parse_rational("").has_value());
  CHECK(!parse_rational("1/0").has_value());
  CHECK(!parse_rational("1/-2").has_value());
  CHECK(!parse_rational("a").has_value());
  CHECK(!parse_rational("1.5").has_value());
  // Normalization happens in arithmetic: 2/4 parses and prints reduced.
  CHECK(to_string(*parse_rational("2/4")) == "1/2");

  testutil::Rng rng(7);
  for (int i = 0; i < 200; ++i) {
    const Rational r = rng.small_rational() + rng.small_rational() * rng.small_rational();
    auto back = parse_rational(to_string(r));
    REQUIRE(back.has_value());
    CHECK(*back == r);
  }
}

TEST_CASE("rref canonical form") {
  const Matrix m = mat({{q(2), q(4)}, {q(1), q(2)}}, 2);
  auto [r, pivots] = m.rref();
  CHECK(r == mat({{q(1), q(2)}, {q(0), q(0)}}, 2));
  CHECK(pivots == std::vector<std::size_t>{0});

  auto [ri, pi] = Matrix::identity(3).rref();
  CHECK(ri == Matrix::identity(3));
  CHECK(pi == std::vector<std::size_t>{0, 1, 2});

  auto [rz, pz] = Matrix(2, 2).rref();
  CHECK(rz == Matrix(2, 2));
  CHECK(pz.empty());
}

TEST_CASE("rref is idempotent on random matrices") {
  testutil::Rng rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t rows = 1 + rng.below(5), cols = 1 + rng.below(5);
    const Matrix m = rng.matrix(rows, cols);
    const Matrix r = m.rref().first;
    CHECK(r.rref().first == r);
  }
}

TEST_CASE("kernel") {
  const Subspace k1 = kernel(mat({{q(1), q(1)}}, 2));
  CHECK(k1.dim() == 1);
  CHECK(k1.basis_vector(0) == Vec{q(1), q(-1)});

  CHECK(kernel(Matrix::identity(2)).dim() == 0);
  CHECK(kernel(Matrix(1, 3)).dim() == 3);
}

TEST_CASE("subspace join") {
  const Subspace e0 = Subspace::from_rows(2, {{q(1), q(0)}});
  const Subspace e1 = Subspace::from_rows(2, {{q(0), q(1)}});
  CHECK(subspace_join(e0, e1).dim() == 2);
  CHECK(subspace_join(e0, e0) == e0);

  const Subspace a = Subspace::from_rows(3, {{q(1), q(1), q(0)}});
  const Subspace b = Subspace::from_rows(3, {{q(0), q(1), q(1)}});
  CHECK(subspace_join(a, b).dim() == 2);
}

TEST_CASE("subspace intersect") {
  const Subspace e0 = Subspace::from_rows(2, {{q(1), q(0)}});
  const Subspace e1 = Subspace::from_rows(2, {{q(0), q(1)}});
  CHECK(subspace_intersect(e0, e0) == e0);
  CHECK(subspace_intersect(e0, e1).dim() == 0);

  const Subspace full = Subspace::full(2);
  const Subspace diag = Subspace::from_rows(2, {{q(1), q(1)}});
  CHECK(subspace_intersect(full, diag) == diag);
}

TEST_CASE("join and intersect dimension formula") {
  testutil::Rng rng(23);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 2 + rng.below(4);
    const Subspace a = Subspace::from_matrix_rows(rng.matrix(1 + rng.below(n), n));
    const Subspace b = Subspace::from_matrix_rows(rng.matrix(1 + rng.below(n), n));
    CHECK(a.dim() + b.dim() ==
          subspace_join(a, b).dim() + subspace_intersect(a, b).dim());
  }
}

TEST_CASE("quotient dimensions and conventions") {
  const Subspace rel3 = Subspace::from_rows(3, {{q(1), q(2), q(3)}});
  const QuotientSpace qs3 = quotient(3, rel3);
  CHECK(qs3.quotient_dim == 2);

  const QuotientSpace qid = quotient(4, Subspace(4));
  CHECK(qid.projection == Matrix::identity(4));
  CHECK(qid.section == Matrix::identity(4));

  const Subspace rel = Subspace::from_rows(2, {{q(1), q(-1)}});
  const QuotientSpace qs = quotient(2, rel);
  CHECK(qs.quotient_dim == 1);
  // (x, y) |-> x + y in the chosen section convention.
  CHECK(qs.projection == mat({{q(1), q(1)}}, 2));
  CHECK((qs.projection * qs.section).is_identity());
}

TEST_CASE("quotient invariants on random relation spans") {
  testutil::Rng rng(31);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 1 + rng.below(6);
    const Subspace rel = Subspace::from_matrix_rows(rng.matrix(rng.below(n + 1), n));
    const QuotientSpace qs = quotient(n, rel);
    CHECK(qs.quotient_dim == n - rel.dim());
    CHECK((qs.projection * qs.section).is_identity());
    for (std::size_t i = 0; i < rel.dim(); ++i)
      CHECK(vec_is_zero(qs.project(rel.basis_vector(i))));
    // Kernel of the projection is exactly the relation span.
    CHECK(kernel(qs.projection) == rel);
  }
}

TEST_CASE("subspace coordinates and membership") {
  const Subspace s = Subspace::from_rows(3, {{q(1), q(0), q(1)}, {q(0), q(1), q(2)}});
  CHECK(s.contains(Vec{q(2), q(3), q(8)}));
  CHECK(!s.contains(Vec{q(0), q(0), q(1)}));
  auto coords = s.coordinates(Vec{q(2), q(3), q(8)});
  REQUIRE(coords.has_value());
  CHECK(*coords == Vec{q(2), q(3)});
}

TEST_CASE("matrix inverse") {
  const Matrix m = mat({{q(1), q(2)}, {q(3), q(4)}}, 2);
  auto inv = m.inverse();
  REQUIRE(inv.has_value());
  CHECK((m * *inv).is_identity());
  CHECK(!mat({{q(1), q(2)}, {q(2), q(4)}}, 2).inverse().has_value());
}
