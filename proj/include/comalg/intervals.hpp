#pragma once

#include "comalg/morita.hpp"

#include <array>
#include <string>

namespace comalg {

// Exact two-chart model of the bicolored circle: the black (right) half is
// parametrized by a rational q at the point exp(i*arctan q), the white (left)
// half by -exp(i*arctan q); the marked points i and -i sit between the halves.
enum class Half { White, Black };

struct CirclePoint {
  enum class Kind { Top, Bot, OnHalf } kind = Kind::Top;
  Half half = Half::Black;
  Rational coord;

  static CirclePoint top() { return CirclePoint{Kind::Top, Half::Black, Rational(0)}; }
  static CirclePoint bot() { return CirclePoint{Kind::Bot, Half::Black, Rational(0)}; }
  static CirclePoint white(Rational q) { return CirclePoint{Kind::OnHalf, Half::White, std::move(q)}; }
  static CirclePoint black(Rational q) { return CirclePoint{Kind::OnHalf, Half::Black, std::move(q)}; }

  bool operator==(const CirclePoint&) const = default;
};

enum class Orientation { Positive, Negative };

// Underlying set: the closed counterclockwise arc from start to end.  The
// orientation flag records whether the interval's own orientation agrees with
// the trigonometric one.  Endpoints are never the marked points, so any
// contained marked point has a two-sided neighborhood inside the arc.
struct CircleInterval {
  CirclePoint start;
  CirclePoint end;
  Orientation orientation = Orientation::Positive;
  bool operator==(const CircleInterval&) const = default;
};

CircleInterval make_arc(const CirclePoint& start, const CirclePoint& end,
                        Orientation orientation);

struct RealInterval {
  Rational lo;
  Rational hi;
  Orientation orientation = Orientation::Positive;
};
RealInterval make_real_interval(Rational lo, Rational hi, Orientation orientation);

// GenuinelyBicolored doubles as the upper bicolored class: an upper interval
// that meets both colors is exactly one containing the point i.
enum class ColorClass {
  White,
  Black,
  UpperBicolored,
  LowerBicolored,
  Tricolored,
  Invalid,
  GenuinelyBicolored = UpperBicolored,
};
std::string to_string(ColorClass c);

ColorClass classify(const CircleInterval& i);

CirclePoint reflect_j(const CirclePoint& p);
CircleInterval reflect_j(const CircleInterval& i);

CircleInterval phi_white(const RealInterval& i);
CircleInterval phi_black(const RealInterval& i);
CircleInterval phi_top(const CircleInterval& i);  // identity on upper intervals
CircleInterval phi_bot(const CircleInterval& i);  // j-reflection

bool contains_point(const CircleInterval& i, const CirclePoint& p);
bool interior_contains(const CircleInterval& i, const CirclePoint& p);
bool contains(const CircleInterval& outer, const CircleInterval& inner);
bool disjoint_interiors(const CircleInterval& a, const CircleInterval& b);
std::optional<CircleInterval> union_interval(const CircleInterval& a, const CircleInterval& b);

// Locally constant evaluation: white -> A, black -> B, genuinely bicolored
// -> D; a negatively oriented interval evaluates to the opposite algebra.
Algebra evaluate_defect(const Defect& d, const CircleInterval& i);

// The embedding morphism for nested classifiable intervals of equal
// orientation: same class gives the identity, white (black) into genuinely
// bicolored gives phi(. (x) 1) (phi(1 (x) .)).
AlgebraMorphism evaluate_embedding(const Defect& d, const CircleInterval& src,
                                   const CircleInterval& dst);

struct AxiomConfig {
  std::vector<std::pair<std::string, CircleInterval>> intervals;
  std::vector<std::pair<std::string, std::string>> inclusions;        // (inner, outer)
  std::vector<std::array<std::string, 3>> covers;                     // (whole, left, right)
  std::vector<std::array<std::string, 3>> disjoint_pairs;             // (ambient, first, second)

  const CircleInterval& lookup(const std::string& name) const;
};

struct AxiomReport {
  std::vector<std::string> lines;  // one OK/FAIL line per checked relation
  bool pass = true;
};

// Isotony on every declared inclusion, locality on every declared
// interior-disjoint pair, strong additivity on every declared cover.
AxiomReport check_defect_axioms(const Defect& d, const AxiomConfig& config);

// Combinatorial roles of the fusion construction on a genuinely bicolored
// interval; the half-angle endpoints are irrational in this chart and are not
// materialized.
struct FusionIntervalData {
  CirclePoint black_boundary;
  CirclePoint white_boundary;
  bool c_in_black_half = true;
  bool c_boundary_adjacent = true;
  bool cbar_in_white_half = true;
  bool cbar_boundary_adjacent = true;
  bool j_positively_oriented = true;
  bool symmetric = false;  // white coord is the mirror of the black coord
};
FusionIntervalData fusion_interval_data(const CircleInterval& i);

}  // namespace comalg
