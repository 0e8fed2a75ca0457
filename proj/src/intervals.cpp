#include "comalg/intervals.hpp"

namespace comalg {

namespace {

// Counterclockwise sector order starting inside the black half:
// black coords (-inf..inf), Top, white coords (-inf..inf), Bot.
int sector_of(const CirclePoint& p) {
  switch (p.kind) {
    case CirclePoint::Kind::Top:
      return 1;
    case CirclePoint::Kind::Bot:
      return 3;
    case CirclePoint::Kind::OnHalf:
      return p.half == Half::Black ? 0 : 2;
  }
  return 0;
}

// Rank of p in the counterclockwise sweep starting at base; injective for a
// fixed base, base itself is minimal.
struct SweepRank {
  int stage;       // 0..4: sector distance, 4 = wrapped back into base sector
  Rational coord;  // tie break within a colored sector

  bool operator==(const SweepRank& rhs) const {
    return stage == rhs.stage && coord == rhs.coord;
  }
  bool operator<(const SweepRank& rhs) const {
    if (stage != rhs.stage) return stage < rhs.stage;
    return coord < rhs.coord;
  }
  bool operator<=(const SweepRank& rhs) const { return *this < rhs || *this == rhs; }
};

SweepRank sweep_rank(const CirclePoint& base, const CirclePoint& p) {
  if (p == base) return {0, base.kind == CirclePoint::Kind::OnHalf ? base.coord : Rational(0)};
  const int delta = ((sector_of(p) - sector_of(base)) % 4 + 4) % 4;
  const Rational coord = p.kind == CirclePoint::Kind::OnHalf ? p.coord : Rational(0);
  if (delta == 0) {
    // Same colored sector (the marked-point sectors are singletons).
    if (p.coord > base.coord) return {0, coord};
    return {4, coord};
  }
  return {delta, coord};
}

bool valid_endpoint(const CirclePoint& p) { return p.kind == CirclePoint::Kind::OnHalf; }

}  // namespace

CircleInterval make_arc(const CirclePoint& start, const CirclePoint& end,
                        Orientation orientation) {
  if (!valid_endpoint(start) || !valid_endpoint(end))
    throw Error("make_arc: an endpoint at a marked point has no two-sided neighborhood");
  if (start == end) throw Error("make_arc: degenerate arc");
  return CircleInterval{start, end, orientation};
}

RealInterval make_real_interval(Rational lo, Rational hi, Orientation orientation) {
  if (!(lo < hi)) throw Error("make_real_interval: requires lo < hi");
  return RealInterval{std::move(lo), std::move(hi), orientation};
}

std::string to_string(ColorClass c) {
  switch (c) {
    case ColorClass::White:
      return "white";
    case ColorClass::Black:
      return "black";
    case ColorClass::UpperBicolored:
      return "genuinely-bicolored";
    case ColorClass::LowerBicolored:
      return "lower-bicolored";
    case ColorClass::Tricolored:
      return "tricolored";
    case ColorClass::Invalid:
      return "invalid";
  }
  return "invalid";
}

ColorClass classify(const CircleInterval& i) {
  if (!valid_endpoint(i.start) || !valid_endpoint(i.end) || i.start == i.end)
    return ColorClass::Invalid;
  const Half hs = i.start.half;
  const Half he = i.end.half;
  if (hs == he) {
    if (i.start.coord < i.end.coord) return hs == Half::Black ? ColorClass::Black : ColorClass::White;
    return ColorClass::Tricolored;  // wraps through both marked points
  }
  if (hs == Half::Black) return ColorClass::GenuinelyBicolored;  // crosses Top only
  return ColorClass::LowerBicolored;                             // crosses Bot only
}

CirclePoint reflect_j(const CirclePoint& p) {
  switch (p.kind) {
    case CirclePoint::Kind::Top:
      return CirclePoint::bot();
    case CirclePoint::Kind::Bot:
      return CirclePoint::top();
    case CirclePoint::Kind::OnHalf:
      return CirclePoint{CirclePoint::Kind::OnHalf, p.half, -p.coord};
  }
  return p;
}

CircleInterval reflect_j(const CircleInterval& i) {
  // j reverses the circle, so the counterclockwise presentation swaps ends.
  return CircleInterval{reflect_j(i.end), reflect_j(i.start),
                        i.orientation == Orientation::Positive ? Orientation::Negative
                                                               : Orientation::Positive};
}

CircleInterval phi_white(const RealInterval& i) {
  return make_arc(CirclePoint::white(i.lo), CirclePoint::white(i.hi), i.orientation);
}

CircleInterval phi_black(const RealInterval& i) {
  return make_arc(CirclePoint::black(i.lo), CirclePoint::black(i.hi), i.orientation);
}

CircleInterval phi_top(const CircleInterval& i) {
  const ColorClass c = classify(i);
  if (c == ColorClass::LowerBicolored || c == ColorClass::Tricolored ||
      c == ColorClass::Invalid)
    throw Error("phi_top: not an upper interval");
  return i;
}

CircleInterval phi_bot(const CircleInterval& i) { return reflect_j(i); }

bool contains_point(const CircleInterval& i, const CirclePoint& p) {
  return sweep_rank(i.start, p) <= sweep_rank(i.start, i.end);
}

bool interior_contains(const CircleInterval& i, const CirclePoint& p) {
  if (p == i.start || p == i.end) return false;
  return sweep_rank(i.start, p) < sweep_rank(i.start, i.end);
}

bool contains(const CircleInterval& outer, const CircleInterval& inner) {
  const SweepRank s = sweep_rank(outer.start, inner.start);
  const SweepRank e = sweep_rank(outer.start, inner.end);
  return s <= e && e <= sweep_rank(outer.start, outer.end);
}

bool disjoint_interiors(const CircleInterval& a, const CircleInterval& b) {
  if (a.start == b.start) return false;
  return !interior_contains(a, b.start) && !interior_contains(b, a.start);
}

std::optional<CircleInterval> union_interval(const CircleInterval& a, const CircleInterval& b) {
  if (a.orientation != b.orientation) return std::nullopt;
  if (contains(a, b)) return a;
  if (contains(b, a)) return b;
  if (contains_point(a, b.start)) {
    if (contains_point(a, b.end)) return std::nullopt;  // two closed arcs covering the circle
    return CircleInterval{a.start, b.end, a.orientation};
  }
  if (contains_point(b, a.start)) {
    if (contains_point(b, a.end)) return std::nullopt;
    return CircleInterval{b.start, a.end, a.orientation};
  }
  return std::nullopt;  // disjoint
}

Algebra evaluate_defect(const Defect& d, const CircleInterval& i) {
  Algebra value;
  switch (classify(i)) {
    case ColorClass::White:
      value = d.left_net.algebra;
      break;
    case ColorClass::Black:
      value = d.right_net.algebra;
      break;
    case ColorClass::GenuinelyBicolored:
      value = d.algebra;
      break;
    default:
      throw Error("evaluate_defect: unsupported interval class " + to_string(classify(i)));
  }
  return i.orientation == Orientation::Positive ? value : opposite(value);
}

AlgebraMorphism evaluate_embedding(const Defect& d, const CircleInterval& src,
                                   const CircleInterval& dst) {
  if (src.orientation != dst.orientation)
    throw Error("evaluate_embedding: inclusion must preserve orientation");
  if (!contains(dst, src)) throw Error("evaluate_embedding: intervals are not nested");
  const ColorClass cs = classify(src);
  const ColorClass cd = classify(dst);
  const Algebra sv = evaluate_defect(d, src);
  const Algebra dv = evaluate_defect(d, dst);
  if (cs == cd) return AlgebraMorphism{sv, dv, Matrix::identity(sv.dim())};
  if (cd != ColorClass::GenuinelyBicolored)
    throw Error("evaluate_embedding: unsupported inclusion " + to_string(cs) + " -> " +
                to_string(cd));
  if (cs == ColorClass::White) {
    const AlgebraMorphism r = d.left_restriction();
    return AlgebraMorphism{sv, dv, r.matrix};
  }
  if (cs == ColorClass::Black) {
    const AlgebraMorphism r = d.right_restriction();
    return AlgebraMorphism{sv, dv, r.matrix};
  }
  throw Error("evaluate_embedding: unsupported inclusion " + to_string(cs) + " -> " +
              to_string(cd));
}

const CircleInterval& AxiomConfig::lookup(const std::string& name) const {
  for (const auto& [n, interval] : intervals)
    if (n == name) return interval;
  throw Error("config: unknown interval '" + name + "'");
}

AxiomReport check_defect_axioms(const Defect& d, const AxiomConfig& config) {
  AxiomReport report;
  auto add_ok = [&](std::string line) { report.lines.push_back(std::move(line)); };
  auto add_fail = [&](std::string line) {
    report.lines.push_back(std::move(line));
    report.pass = false;
  };
  // Consistency of the declared relations comes first; a bad configuration is
  // a user error, not an axiom failure.
  for (const auto& [inner, outer] : config.inclusions)
    if (!contains(config.lookup(outer), config.lookup(inner)))
      throw Error("config: declared inclusion " + inner + " <= " + outer + " does not hold");
  for (const auto& [whole, left, right] : config.covers) {
    const auto u = union_interval(config.lookup(left), config.lookup(right));
    if (!u || !(*u == config.lookup(whole)))
      throw Error("config: declared cover " + whole + " = " + left + " u " + right +
                  " does not hold");
  }
  for (const auto& [ambient, first, second] : config.disjoint_pairs) {
    if (!contains(config.lookup(ambient), config.lookup(first)) ||
        !contains(config.lookup(ambient), config.lookup(second)))
      throw Error("config: disjoint pair " + first + ", " + second + " not inside " + ambient);
    if (!disjoint_interiors(config.lookup(first), config.lookup(second)))
      throw Error("config: intervals " + first + ", " + second + " have overlapping interiors");
  }

  for (const auto& [inner, outer] : config.inclusions) {
    const AlgebraMorphism m = evaluate_embedding(d, config.lookup(inner), config.lookup(outer));
    if (m.matrix.rank() == m.source.dim()) {
      add_ok("OK isotony " + inner + "->" + outer);
    } else {
      const Subspace ker = kernel(m.matrix);
      add_fail("FAIL isotony " + inner + "->" + outer + " kernel-witness " +
               to_string(ker.basis_vector(0)));
    }
  }
  for (const auto& [ambient, first, second] : config.disjoint_pairs) {
    const AlgebraMorphism mi = evaluate_embedding(d, config.lookup(first), config.lookup(ambient));
    const AlgebraMorphism mj = evaluate_embedding(d, config.lookup(second), config.lookup(ambient));
    const Algebra ambient_alg = evaluate_defect(d, config.lookup(ambient));
    bool commutes = true;
    std::string witness;
    for (std::size_t i = 0; i < mi.source.dim() && commutes; ++i)
      for (std::size_t j = 0; j < mj.source.dim() && commutes; ++j) {
        const Vec u = mi.matrix.col(i);
        const Vec v = mj.matrix.col(j);
        if (ambient_alg.multiply(u, v) != ambient_alg.multiply(v, u)) {
          commutes = false;
          witness = "(" + std::to_string(i) + "," + std::to_string(j) + ")";
        }
      }
    if (commutes)
      add_ok("OK locality " + first + "," + second + " in " + ambient);
    else
      add_fail("FAIL locality " + first + "," + second + " in " + ambient + " witness " +
               witness);
  }
  for (const auto& [whole, left, right] : config.covers) {
    const AlgebraMorphism mi = evaluate_embedding(d, config.lookup(left), config.lookup(whole));
    const AlgebraMorphism mj = evaluate_embedding(d, config.lookup(right), config.lookup(whole));
    const Algebra whole_alg = evaluate_defect(d, config.lookup(whole));
    const Subalgebra generated =
        generated_subalgebra(whole_alg, {morphism_image(mi), morphism_image(mj)});
    if (generated.space.dim() == whole_alg.dim())
      add_ok("OK additivity " + whole + " = " + left + " v " + right);
    else
      add_fail("FAIL additivity " + whole + " = " + left + " v " + right + " generated-dim " +
               std::to_string(generated.space.dim()) + " of " +
               std::to_string(whole_alg.dim()));
  }
  return report;
}

FusionIntervalData fusion_interval_data(const CircleInterval& i) {
  if (classify(i) != ColorClass::GenuinelyBicolored)
    throw Error("fusion_interval_data: interval is not genuinely bicolored");
  FusionIntervalData data;
  data.black_boundary = i.start;
  data.white_boundary = i.end;
  // The white boundary mirrors the black one exactly when the arc is
  // symmetric about the vertical axis.
  data.symmetric = (i.end.coord == -i.start.coord);
  return data;
}

}  // namespace comalg
