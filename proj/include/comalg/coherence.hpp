#pragma once

#include "comalg/translate.hpp"

#include <array>
#include <cstdint>

namespace comalg {

// splitmix64; the full state transition, so reports can be reproduced by any
// implementation:
//   state += 0x9e3779b97f4a7c15
//   z = state
//   z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9
//   z = (z ^ (z >> 27)) * 0x94d049bb133111eb
//   return z ^ (z >> 31)
struct SplitMix64 {
  std::uint64_t state = 0;
  std::uint64_t next() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }
  std::uint64_t below(std::uint64_t bound) { return next() % bound; }
};

enum class CoherenceKind {
  Pentagon,
  Triangle,
  InterchangerSquare,
  InterchangerHexagon,
  Pentagonator,
  AssociatorModification,
};
std::string kind_name(CoherenceKind k);
std::optional<CoherenceKind> parse_kind(std::string_view name);
std::vector<CoherenceKind> all_kinds();

// Outcome of comparing the two composite matrices of a diagram.
struct CheckResult {
  bool pass = true;
  std::size_t row = 0;
  std::size_t col = 0;
  Rational lhs;
  Rational rhs;

  static CheckResult compare(const Matrix& lhs, const Matrix& rhs);
};

struct CheckReport {
  CoherenceKind kind{};
  std::size_t case_index = 0;
  std::uint64_t seed = 0;
  CheckResult result;

  // "OK <kind> case=<n> seed=<s>" or
  // "FAIL <kind> case=<n> seed=<s> entry=(<i>,<j>) lhs=<q> rhs=<q>"
  std::string format() const;
};

CheckResult pentagon_check(const Bimodule& m0, const Bimodule& m1, const Bimodule& m2,
                           const Bimodule& m3);
CheckResult triangle_check(const Bimodule& m0, const Bimodule& m1);
CheckResult interchanger_square_check(const Sector& h, const Sector& k);
CheckResult interchanger_hexagon_check(const Sector& h, const Sector& h2, const Sector& h3,
                                       const Sector& k, const Sector& k2, const Sector& k3);
CheckResult pentagonator_check(const Defect& d, const Defect& e, const Defect& f,
                               const Defect& g);
CheckResult associator_modification_check(
    const Sector& h, const Sector& h2, const Sector& h3,
    const std::vector<std::array<Intertwiner, 3>>& naturality_probes = {});

// Deterministic generator over the fixed algebra catalog; every instance is
// valid by construction.
class InstanceGen {
 public:
  explicit InstanceGen(std::uint64_t seed) : rng_{seed} {}

  Algebra random_algebra(std::size_t max_dim);
  Algebra random_commutative(std::size_t max_dim);
  Net random_net(std::size_t max_dim);
  // z in Z(d) with z*z = unit, chosen among small center combinations.
  Vec random_square_root_of_unit(const Algebra& d);
  // z in Z(d) with z*z = 0.
  Vec random_central_nilpotent(const Algebra& d);
  AlgebraMorphism random_central_morphism(const Algebra& source, const Algebra& d);
  Defect random_defect(const Net& a, const Net& b, std::size_t max_dim);
  // A defect that admits a nonzero sector from `top` when one can be found
  // in a bounded number of draws; arbitrary defect pairs frequently admit
  // only the zero sector.
  Defect random_compatible_defect(const Net& a, const Net& b, std::size_t max_dim,
                                  const Defect& top);
  Bimodule random_bimodule(const Algebra& d, const Algebra& e, std::size_t max_carrier);
  Sector random_sector(const Defect& top, const Defect& bottom, std::size_t max_carrier);
  Intertwiner random_endo_intertwiner(const Sector& h);
  Vec random_nonzero_vec(std::size_t n);

  std::uint64_t raw() { return rng_.next(); }

 private:
  SplitMix64 rng_;
};

// Sub-bimodule generated by a vector, with the actions restricted to it.
Bimodule sub_bimodule(const Bimodule& m, const Vec& v);
// Quotient by the sub-bimodule generated by a vector.
Bimodule quotient_bimodule_by(const Bimodule& m, const Vec& v);

struct SuiteOptions {
  std::uint64_t seed = 0;
  std::size_t cases = 10;
  std::size_t max_dim = 2;
};

std::vector<CheckReport> run_suite(CoherenceKind kind, const SuiteOptions& options);

}  // namespace comalg
