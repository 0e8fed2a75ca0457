#include "comalg/coherence.hpp"

namespace comalg {

std::string kind_name(CoherenceKind k) {
  switch (k) {
    case CoherenceKind::Pentagon:
      return "pentagon";
    case CoherenceKind::Triangle:
      return "triangle";
    case CoherenceKind::InterchangerSquare:
      return "interchanger-square";
    case CoherenceKind::InterchangerHexagon:
      return "interchanger-hexagon";
    case CoherenceKind::Pentagonator:
      return "pentagonator";
    case CoherenceKind::AssociatorModification:
      return "associator-modification";
  }
  return "unknown";
}

std::optional<CoherenceKind> parse_kind(std::string_view name) {
  for (CoherenceKind k : all_kinds())
    if (kind_name(k) == name) return k;
  return std::nullopt;
}

std::vector<CoherenceKind> all_kinds() {
  return {CoherenceKind::Pentagon,           CoherenceKind::Triangle,
          CoherenceKind::InterchangerSquare, CoherenceKind::InterchangerHexagon,
          CoherenceKind::Pentagonator,       CoherenceKind::AssociatorModification};
}

CheckResult CheckResult::compare(const Matrix& lhs, const Matrix& rhs) {
  CheckResult r;
  if (lhs.rows() != rhs.rows() || lhs.cols() != rhs.cols())
    throw Error("coherence: composite shapes differ (internal error)");
  for (std::size_t i = 0; i < lhs.rows(); ++i)
    for (std::size_t j = 0; j < lhs.cols(); ++j)
      if (lhs.at(i, j) != rhs.at(i, j)) {
        r.pass = false;
        r.row = i;
        r.col = j;
        r.lhs = lhs.at(i, j);
        r.rhs = rhs.at(i, j);
        return r;
      }
  return r;
}

namespace {

CheckResult merge(CheckResult first, const CheckResult& second) {
  return first.pass ? second : first;
}

}  // namespace

std::string CheckReport::format() const {
  std::string s = result.pass ? "OK " : "FAIL ";
  s += kind_name(kind);
  s += " case=" + std::to_string(case_index);
  s += " seed=" + std::to_string(seed);
  if (!result.pass) {
    s += " entry=(" + std::to_string(result.row) + "," + std::to_string(result.col) + ")";
    s += " lhs=" + to_string(result.lhs);
    s += " rhs=" + to_string(result.rhs);
  }
  return s;
}

CheckResult pentagon_check(const Bimodule& m0, const Bimodule& m1, const Bimodule& m2,
                           const Bimodule& m3) {
  const Bimodule t01 = tensor_over(m0, m1).first;
  const Bimodule t12 = tensor_over(m1, m2).first;
  const Bimodule t23 = tensor_over(m2, m3).first;

  const BimoduleMorphism a1 = associator(t01, m2, m3);  // ((01)2)3 -> (01)(23)
  const BimoduleMorphism a2 = associator(m0, m1, t23);  // (01)(23) -> 0(1(23))
  const Matrix lhs = a2.matrix * a1.matrix;

  const BimoduleMorphism b1 =
      tensor_morphisms_over(associator(m0, m1, m2), identity_bimodule_morphism(m3));
  const BimoduleMorphism b2 = associator(m0, t12, m3);  // (0(12))3 -> 0((12)3)
  const BimoduleMorphism b3 =
      tensor_morphisms_over(identity_bimodule_morphism(m0), associator(m1, m2, m3));
  const Matrix rhs = b3.matrix * (b2.matrix * b1.matrix);

  return CheckResult::compare(lhs, rhs);
}

CheckResult triangle_check(const Bimodule& m0, const Bimodule& m1) {
  if (!(m0.right_alg() == m1.left_alg())) throw Error("triangle_check: chain mismatch");
  const Bimodule reg = regular_bimodule(m0.right_alg());
  const BimoduleMorphism a = associator(m0, reg, m1);
  const BimoduleMorphism collapse_left =
      tensor_morphisms_over(identity_bimodule_morphism(m0), invert_morphism(left_unitor(m1)));
  const Matrix lhs = collapse_left.matrix * a.matrix;
  const Matrix rhs =
      tensor_morphisms_over(invert_morphism(right_unitor(m0)), identity_bimodule_morphism(m1))
          .matrix;
  return CheckResult::compare(lhs, rhs);
}

CheckResult interchanger_square_check(const Sector& h, const Sector& k) {
  const Sector x = horizontal_fusion(h, k);
  const Sector id_h_bottom = identity_sector(h.bottom);
  const Sector id_k_bottom = identity_sector(k.bottom);
  const Sector id_fused = identity_sector(fuse_defects(h.bottom, k.bottom));

  // The fused identity sector and the horizontal fusion of the factor
  // identities coincide on the nose; everything below relies on it.
  const Sector fused_ids = horizontal_fusion(id_h_bottom, id_k_bottom);
  if (!(fused_ids == id_fused))
    throw Error("interchanger_square: identity sectors disagree (internal error)");

  const Matrix lhs = invert_morphism(right_unitor(x.bimodule)).matrix;

  const Intertwiner phi = interchanger(h, k, id_h_bottom, id_k_bottom);
  const Intertwiner collapse_pair = horizontal_fusion_intertwiners(
      make_intertwiner(vertical_fusion(h, id_h_bottom), h,
                       invert_morphism(right_unitor(h.bimodule)).matrix),
      make_intertwiner(vertical_fusion(k, id_k_bottom), k,
                       invert_morphism(right_unitor(k.bimodule)).matrix));
  const Matrix rhs = collapse_pair.matrix * phi.matrix;
  return CheckResult::compare(lhs, rhs);
}

CheckResult interchanger_hexagon_check(const Sector& h, const Sector& h2, const Sector& h3,
                                       const Sector& k, const Sector& k2, const Sector& k3) {
  const Sector hk = horizontal_fusion(h, k);
  const Sector h2k2 = horizontal_fusion(h2, k2);
  const Sector h3k3 = horizontal_fusion(h3, k3);

  // Down the left of the diagram: a, then id (x) Phi, then Phi.
  const BimoduleMorphism a_top = associator(hk.bimodule, h2k2.bimodule, h3k3.bimodule);
  const Intertwiner inner_phi = interchanger(h2, k2, h3, k3);
  const Intertwiner id_then_phi =
      vertical_fusion_intertwiners(identity_intertwiner(hk), inner_phi);
  const Intertwiner last_phi =
      interchanger(h, k, vertical_fusion(h2, h3), vertical_fusion(k2, k3));
  const Matrix lhs = last_phi.matrix * (id_then_phi.matrix * a_top.matrix);

  // Down the right: Phi (x) id, then Phi, then a (x) a.
  const Intertwiner first_phi = interchanger(h, k, h2, k2);
  const Intertwiner phi_then_id =
      vertical_fusion_intertwiners(first_phi, identity_intertwiner(h3k3));
  const Intertwiner mid_phi =
      interchanger(vertical_fusion(h, h2), vertical_fusion(k, k2), h3, k3);
  const BimoduleMorphism a_h = associator(h.bimodule, h2.bimodule, h3.bimodule);
  const BimoduleMorphism a_k = associator(k.bimodule, k2.bimodule, k3.bimodule);
  const Intertwiner a_pair = horizontal_fusion_intertwiners(
      make_intertwiner(vertical_fusion(vertical_fusion(h, h2), h3),
                       vertical_fusion(h, vertical_fusion(h2, h3)), a_h.matrix),
      make_intertwiner(vertical_fusion(vertical_fusion(k, k2), k3),
                       vertical_fusion(k, vertical_fusion(k2, k3)), a_k.matrix));
  const Matrix rhs = a_pair.matrix * (mid_phi.matrix * phi_then_id.matrix);

  return CheckResult::compare(lhs, rhs);
}

namespace {

// The canonical reassociation between the two bracketings of a triple defect
// fusion, on the fused carriers.
struct TripleFusion {
  DefectFusion xy, yz, xy_z, x_yz;
  Matrix chi;  // (x (*) y) (*) z -> x (*) (y (*) z)
};

TripleFusion triple_fusion(const Defect& x, const Defect& y, const Defect& z) {
  TripleFusion t{fuse_defects_full(x, y), fuse_defects_full(y, z), {}, {}, {}};
  t.xy_z = fuse_defects_full(t.xy.defect, z);
  t.x_yz = fuse_defects_full(x, t.yz.defect);
  t.chi = reassociation_matrix(x.algebra.dim(), y.algebra.dim(), z.algebra.dim(), t.xy.carrier,
                               t.xy_z.carrier, t.yz.carrier, t.x_yz.carrier);
  return t;
}

CheckResult check_algebra_iso(const Matrix& chi, const Algebra& from, const Algebra& to) {
  if (!chi.inverse().has_value())
    throw Error("compositor reassociation is singular (internal error)");
  CheckResult r = CheckResult::compare(Matrix::from_flat(to.dim(), 1, chi.apply(from.unit())),
                                       Matrix::from_flat(to.dim(), 1, to.unit()));
  for (std::size_t i = 0; i < from.dim() && r.pass; ++i)
    for (std::size_t j = 0; j < from.dim() && r.pass; ++j) {
      const Vec lhs = chi.apply(from.product_vec(i, j));
      const Vec rhs = to.multiply(chi.col(i), chi.col(j));
      r = merge(r, CheckResult::compare(Matrix::from_flat(to.dim(), 1, lhs),
                                        Matrix::from_flat(to.dim(), 1, rhs)));
    }
  return r;
}

// Compositor 2-morphism: the (x (*) y) (*) z algebra as a bimodule from the
// left bracketing to the right one, the right action twisted through chi.
Sector compositor_sector(const TripleFusion& t) {
  const Algebra& left = t.xy_z.defect.algebra;
  const Algebra& right = t.x_yz.defect.algebra;
  std::vector<Matrix> left_action, right_action;
  for (std::size_t i = 0; i < left.dim(); ++i) left_action.push_back(left.basis_left_mult(i));
  for (std::size_t j = 0; j < right.dim(); ++j)
    right_action.push_back(left.right_mult_matrix(t.chi.col(j)));
  return make_sector(t.xy_z.defect, t.x_yz.defect,
                     Bimodule(left, right, left.dim(), left_action, right_action));
}

}  // namespace

CheckResult pentagonator_check(const Defect& d, const Defect& e, const Defect& f,
                               const Defect& g) {
  const TripleFusion def = triple_fusion(d, e, f);
  const TripleFusion efg = triple_fusion(e, f, g);

  CheckResult r = check_algebra_iso(def.chi, def.xy_z.defect.algebra, def.x_yz.defect.algebra);
  r = merge(r, check_algebra_iso(efg.chi, efg.xy_z.defect.algebra, efg.x_yz.defect.algebra));
  if (!r.pass) return r;

  const DefectFusion de = def.xy;       // d (*) e
  const DefectFusion ef = def.yz;       // e (*) f
  const DefectFusion fg = efg.yz;       // f (*) g
  const DefectFusion de_f = def.xy_z;   // (de)f
  const DefectFusion d_ef = def.x_yz;   // d(ef)
  const DefectFusion ef_g = efg.xy_z;   // (ef)g
  const DefectFusion e_fg = efg.x_yz;   // e(fg)

  const DefectFusion p1 = fuse_defects_full(de_f.defect, g);   // ((de)f)g
  const DefectFusion p2 = fuse_defects_full(d_ef.defect, g);   // (d(ef))g
  const DefectFusion p3 = fuse_defects_full(d, ef_g.defect);   // d((ef)g)
  const DefectFusion p4 = fuse_defects_full(d, e_fg.defect);   // d(e(fg))
  const DefectFusion p5 = fuse_defects_full(de.defect, fg.defect);  // (de)(fg)

  // Around the short side of the pentagon.
  const Matrix leg1 =
      reassociation_matrix(de.defect.algebra.dim(), f.algebra.dim(), g.algebra.dim(),
                           de_f.carrier, p1.carrier, fg.carrier, p5.carrier);
  const Matrix leg2 =
      reassociation_matrix(d.algebra.dim(), e.algebra.dim(), fg.defect.algebra.dim(),
                           de.carrier, p5.carrier, e_fg.carrier, p4.carrier);
  const Matrix lhs = leg2 * leg1;

  // Around the long side: chi(d,e,f) (*) id_g, then chi(d, ef, g), then
  // id_d (*) chi(e,f,g).
  const Matrix op1 = def.chi.kron(Matrix::identity(g.algebra.dim()));
  if (!descends(op1, p1.carrier, p2.carrier))
    throw Error("pentagonator: chi (x) id fails to descend (internal error)");
  const Matrix leg3 = induced_map(op1, p1.carrier, p2.carrier);
  const Matrix leg4 =
      reassociation_matrix(d.algebra.dim(), ef.defect.algebra.dim(), g.algebra.dim(),
                           d_ef.carrier, p2.carrier, ef_g.carrier, p3.carrier);
  const Matrix op2 = Matrix::identity(d.algebra.dim()).kron(efg.chi);
  if (!descends(op2, p3.carrier, p4.carrier))
    throw Error("pentagonator: id (x) chi fails to descend (internal error)");
  const Matrix leg5 = induced_map(op2, p3.carrier, p4.carrier);
  const Matrix rhs = leg5 * (leg4 * leg3);

  return CheckResult::compare(lhs, rhs);
}

CheckResult associator_modification_check(
    const Sector& h, const Sector& h2, const Sector& h3,
    const std::vector<std::array<Intertwiner, 3>>& naturality_probes) {
  const SectorFusion h12 = horizontal_fusion_full(h, h2);
  const SectorFusion hl = horizontal_fusion_full(h12.sector, h3);
  const SectorFusion h23 = horizontal_fusion_full(h2, h3);
  const SectorFusion hr = horizontal_fusion_full(h, h23.sector);
  const Matrix theta =
      reassociation_matrix(h.bimodule.dim(), h2.bimodule.dim(), h3.bimodule.dim(),
                           h12.carrier, hl.carrier, h23.carrier, hr.carrier);
  const auto theta_inv = theta.inverse();
  if (!theta_inv) throw Error("associator_modification: theta singular (internal error)");

  const TripleFusion tops = triple_fusion(h.top, h2.top, h3.top);
  const TripleFusion bottoms = triple_fusion(h.bottom, h2.bottom, h3.bottom);
  const Sector comp_top = compositor_sector(tops);
  const Sector comp_bottom = compositor_sector(bottoms);

  const SectorFusion u = vertical_fusion_full(hl.sector, comp_bottom);
  const SectorFusion v = vertical_fusion_full(comp_top, hr.sector);

  // x -> x (x) 1 into U and y -> 1 (x) y into V.
  Matrix unit_bottom(comp_bottom.bimodule.dim(), 1);
  for (std::size_t i = 0; i < comp_bottom.bimodule.dim(); ++i)
    unit_bottom.at(i, 0) = bottoms.xy_z.defect.algebra.unit()[i];
  Matrix unit_top(comp_top.bimodule.dim(), 1);
  for (std::size_t i = 0; i < comp_top.bimodule.dim(); ++i)
    unit_top.at(i, 0) = tops.xy_z.defect.algebra.unit()[i];
  const Matrix into_u =
      u.carrier.projection * Matrix::identity(hl.sector.bimodule.dim()).kron(unit_bottom);
  const Matrix into_v =
      v.carrier.projection * unit_top.kron(Matrix::identity(hr.sector.bimodule.dim()));
  const auto into_u_inv = into_u.inverse();
  const auto into_v_inv = into_v.inverse();
  if (!into_u_inv || !into_v_inv)
    throw Error("associator_modification: unitor-style collapse singular (internal error)");

  const Matrix a_mod = into_v * theta * *into_u_inv;
  const Matrix a_partner = into_u * *theta_inv * *into_v_inv;

  CheckResult r = CheckResult::compare(a_mod * a_partner, Matrix::identity(a_mod.rows()));
  r = merge(r, CheckResult::compare(a_partner * a_mod, Matrix::identity(a_partner.rows())));
  if (!r.pass) return r;

  const BimoduleMorphism as_morphism{u.sector.bimodule, v.sector.bimodule, a_mod};
  if (!is_intertwiner(as_morphism))
    throw Error("associator_modification: canonical map is not an intertwiner");

  for (const auto& [p1, p2, p3] : naturality_probes) {
    const Intertwiner left_path = vertical_fusion_intertwiners(
        horizontal_fusion_intertwiners(horizontal_fusion_intertwiners(p1, p2), p3),
        identity_intertwiner(comp_bottom));
    const Intertwiner right_path = vertical_fusion_intertwiners(
        identity_intertwiner(comp_top),
        horizontal_fusion_intertwiners(p1, horizontal_fusion_intertwiners(p2, p3)));
    r = merge(r, CheckResult::compare(a_mod * left_path.matrix, right_path.matrix * a_mod));
    if (!r.pass) return r;
  }
  return r;
}

Algebra InstanceGen::random_algebra(std::size_t max_dim) {
  std::vector<Algebra> pool;
  for (const Algebra& a : {scalar_algebra(), group_algebra_z2(), dual_number_algebra(),
                           endomorphism_algebra(2), upper_triangular_algebra2()})
    if (a.dim() <= max_dim) pool.push_back(a);
  return pool[rng_.below(pool.size())];
}

Algebra InstanceGen::random_commutative(std::size_t max_dim) {
  std::vector<Algebra> pool;
  for (const Algebra& a : {scalar_algebra(), group_algebra_z2(), dual_number_algebra()})
    if (a.dim() <= max_dim) pool.push_back(a);
  return pool[rng_.below(pool.size())];
}

Net InstanceGen::random_net(std::size_t max_dim) { return make_net(random_commutative(max_dim)); }

namespace {

// All center combinations with coefficients in {-1, 0, 1} satisfying the
// given predicate, in lexicographic coefficient order.
template <typename Pred>
std::vector<Vec> central_solutions(const Algebra& d, Pred&& pred) {
  const Subspace z = center(d).space;
  std::vector<Vec> out;
  std::vector<int> coeffs(z.dim(), -1);
  for (;;) {
    Vec candidate(d.dim(), Rational(0));
    for (std::size_t i = 0; i < z.dim(); ++i) {
      if (coeffs[i] == 0) continue;
      const Vec b = z.basis_vector(i);
      for (std::size_t r = 0; r < d.dim(); ++r) candidate[r] += Rational(coeffs[i]) * b[r];
    }
    if (pred(candidate)) out.push_back(candidate);
    std::size_t pos = 0;
    while (pos < coeffs.size() && coeffs[pos] == 1) coeffs[pos++] = -1;
    if (pos == coeffs.size()) break;
    ++coeffs[pos];
  }
  return out;
}

}  // namespace

Vec InstanceGen::random_square_root_of_unit(const Algebra& d) {
  auto candidates =
      central_solutions(d, [&](const Vec& z) { return d.multiply(z, z) == d.unit(); });
  if (candidates.empty()) return d.unit();
  return candidates[rng_.below(candidates.size())];
}

Vec InstanceGen::random_central_nilpotent(const Algebra& d) {
  auto candidates = central_solutions(
      d, [&](const Vec& z) { return vec_is_zero(d.multiply(z, z)); });
  if (candidates.empty()) return Vec(d.dim(), Rational(0));
  return candidates[rng_.below(candidates.size())];
}

AlgebraMorphism InstanceGen::random_central_morphism(const Algebra& source, const Algebra& d) {
  Matrix m(d.dim(), source.dim());
  auto set_col = [&](std::size_t j, const Vec& v) {
    for (std::size_t r = 0; r < d.dim(); ++r) m.at(r, j) = v[r];
  };
  if (source == scalar_algebra()) {
    set_col(0, d.unit());
  } else if (source == group_algebra_z2()) {
    set_col(0, d.unit());
    set_col(1, random_square_root_of_unit(d));
  } else if (source == dual_number_algebra()) {
    set_col(0, d.unit());
    set_col(1, random_central_nilpotent(d));
  } else {
    throw Error("random_central_morphism: source outside the commutative catalog");
  }
  AlgebraMorphism out{source, d, std::move(m)};
  if (!check_morphism(out).ok())
    throw Error("random_central_morphism: generated map is not a morphism (internal error)");
  return out;
}

Defect InstanceGen::random_defect(const Net& a, const Net& b, std::size_t max_dim) {
  const Algebra d = random_algebra(max_dim);
  const AlgebraMorphism from_a = random_central_morphism(a.algebra, d);
  const AlgebraMorphism from_b = random_central_morphism(b.algebra, d);
  const Algebra ab = tensor_algebras(a.algebra, b.algebra);
  Matrix phi(d.dim(), ab.dim());
  for (std::size_t i = 0; i < a.algebra.dim(); ++i)
    for (std::size_t j = 0; j < b.algebra.dim(); ++j) {
      const Vec img = d.multiply(from_a.matrix.col(i), from_b.matrix.col(j));
      for (std::size_t r = 0; r < d.dim(); ++r) phi.at(r, i * b.algebra.dim() + j) = img[r];
    }
  return make_defect(a, b, d, AlgebraMorphism{ab, d, std::move(phi)});
}

Vec InstanceGen::random_nonzero_vec(std::size_t n) {
  if (n == 0) return {};
  Vec v(n);
  for (auto& x : v) x = Rational(static_cast<long>(rng_.below(5)) - 2);
  if (vec_is_zero(v)) v[rng_.below(n)] = 1;
  return v;
}

Bimodule sub_bimodule(const Bimodule& m, const Vec& v) {
  std::vector<Vec> generators;
  for (std::size_t i = 0; i < m.left_alg().dim(); ++i)
    for (std::size_t j = 0; j < m.right_alg().dim(); ++j)
      generators.push_back(m.left_basis_action(i).apply(m.right_basis_action(j).apply(v)));
  const Subspace s = Subspace::from_rows(m.dim(), generators);

  auto restrict_action = [&](const Matrix& op) {
    Matrix out(s.dim(), s.dim());
    for (std::size_t k = 0; k < s.dim(); ++k) {
      const auto coords = s.coordinates(op.apply(s.basis_vector(k)));
      if (!coords) throw Error("sub_bimodule: span is not invariant (internal error)");
      for (std::size_t r = 0; r < s.dim(); ++r) out.at(r, k) = (*coords)[r];
    }
    return out;
  };
  std::vector<Matrix> left, right;
  for (std::size_t i = 0; i < m.left_alg().dim(); ++i)
    left.push_back(restrict_action(m.left_basis_action(i)));
  for (std::size_t j = 0; j < m.right_alg().dim(); ++j)
    right.push_back(restrict_action(m.right_basis_action(j)));
  return Bimodule(m.left_alg(), m.right_alg(), s.dim(), std::move(left), std::move(right));
}

Bimodule quotient_bimodule_by(const Bimodule& m, const Vec& v) {
  std::vector<Vec> generators;
  for (std::size_t i = 0; i < m.left_alg().dim(); ++i)
    for (std::size_t j = 0; j < m.right_alg().dim(); ++j)
      generators.push_back(m.left_basis_action(i).apply(m.right_basis_action(j).apply(v)));
  const QuotientSpace q = quotient(m.dim(), Subspace::from_rows(m.dim(), generators));
  std::vector<Matrix> left, right;
  for (std::size_t i = 0; i < m.left_alg().dim(); ++i) {
    if (!descends(m.left_basis_action(i), q, q))
      throw Error("quotient_bimodule_by: span is not invariant (internal error)");
    left.push_back(induced_map(m.left_basis_action(i), q, q));
  }
  for (std::size_t j = 0; j < m.right_alg().dim(); ++j) {
    if (!descends(m.right_basis_action(j), q, q))
      throw Error("quotient_bimodule_by: span is not invariant (internal error)");
    right.push_back(induced_map(m.right_basis_action(j), q, q));
  }
  return Bimodule(m.left_alg(), m.right_alg(), q.quotient_dim, std::move(left), std::move(right));
}

namespace {

// Strictly shrinks the carrier.  A proper cyclic sub-bimodule keeps the
// instance nonzero, so those are tried first; quotients only when every
// drawn vector generates the whole module.  A fully collapsed result is
// legal but proves nothing in a coherence sweep, so it is the last resort.
Bimodule shrink_once(InstanceGen& gen, const Bimodule& m) {
  for (int attempt = 0; attempt < 3; ++attempt) {
    Bimodule sub = sub_bimodule(m, gen.random_nonzero_vec(m.dim()));
    if (sub.dim() > 0 && sub.dim() < m.dim()) return sub;
  }
  Bimodule candidate = quotient_bimodule_by(m, gen.random_nonzero_vec(m.dim()));
  for (int attempt = 0; attempt < 2 && candidate.dim() == 0; ++attempt)
    candidate = quotient_bimodule_by(m, gen.random_nonzero_vec(m.dim()));
  return candidate;
}

}  // namespace

Bimodule InstanceGen::random_bimodule(const Algebra& d, const Algebra& e,
                                      std::size_t max_carrier) {
  const Bimodule free = free_pair_bimodule(d, e);
  Bimodule out = free;
  switch (rng_.below(3)) {
    case 0:
      break;
    case 1:
      out = sub_bimodule(free, random_nonzero_vec(free.dim()));
      break;
    default: {
      // Zero-dimensional results stay in the mix, but only rarely.
      const Bimodule shrunk = shrink_once(*this, free);
      out = (shrunk.dim() > 0 || rng_.below(4) == 0) ? shrunk : free;
      break;
    }
  }
  while (out.dim() > max_carrier) out = shrink_once(*this, out);
  return out;
}

namespace {

// D (x)_{A (x) B} E with left and right multiplication: the standard sector
// between two defects over the same net pair.
Sector standard_sector(const Defect& top, const Defect& bottom) {
  const Algebra& d = top.algebra;
  const Algebra& e = bottom.algebra;
  const std::size_t nets = top.phi.source.dim();
  std::vector<Matrix> rho, lambda;
  for (std::size_t g = 0; g < nets; ++g) {
    rho.push_back(d.right_mult_matrix(top.phi.matrix.col(g)));
    lambda.push_back(e.left_mult_matrix(bottom.phi.matrix.col(g)));
  }
  const QuotientSpace q =
      quotient(d.dim() * e.dim(), balancing_relations(d.dim(), e.dim(), rho, lambda));
  const Matrix id_d = Matrix::identity(d.dim());
  const Matrix id_e = Matrix::identity(e.dim());
  std::vector<Matrix> left, right;
  for (std::size_t i = 0; i < d.dim(); ++i) {
    const Matrix op = d.basis_left_mult(i).kron(id_e);
    if (!descends(op, q, q)) throw Error("standard_sector: left action fails to descend");
    left.push_back(induced_map(op, q, q));
  }
  for (std::size_t j = 0; j < e.dim(); ++j) {
    const Matrix op = id_d.kron(e.basis_right_mult(j));
    if (!descends(op, q, q)) throw Error("standard_sector: right action fails to descend");
    right.push_back(induced_map(op, q, q));
  }
  return make_sector(top, bottom,
                     Bimodule(d, e, q.quotient_dim, std::move(left), std::move(right)));
}

}  // namespace

Defect InstanceGen::random_compatible_defect(const Net& a, const Net& b, std::size_t max_dim,
                                             const Defect& top) {
  Defect out = random_defect(a, b, max_dim);
  for (int attempt = 0; attempt < 5; ++attempt) {
    if (standard_sector(top, out).bimodule.dim() > 0) break;
    out = random_defect(a, b, max_dim);
  }
  return out;
}

Sector InstanceGen::random_sector(const Defect& top, const Defect& bottom,
                                  std::size_t max_carrier) {
  Sector out = standard_sector(top, bottom);
  switch (rng_.below(3)) {
    case 0:
      break;
    case 1:
      out = make_sector(top, bottom,
                        sub_bimodule(out.bimodule, random_nonzero_vec(out.bimodule.dim())));
      break;
    default: {
      const Bimodule shrunk = shrink_once(*this, out.bimodule);
      if (shrunk.dim() > 0 || rng_.below(4) == 0)
        out = make_sector(top, bottom, shrunk);
      break;
    }
  }
  while (out.bimodule.dim() > max_carrier)
    out = make_sector(top, bottom, shrink_once(*this, out.bimodule));
  return out;
}

Intertwiner InstanceGen::random_endo_intertwiner(const Sector& h) {
  const Subspace space = intertwiner_space(h.bimodule, h.bimodule);
  Vec flat(h.bimodule.dim() * h.bimodule.dim(), Rational(0));
  for (std::size_t i = 0; i < space.dim(); ++i) {
    const Rational c(static_cast<long>(rng_.below(5)) - 2);
    if (c == 0) continue;
    const Vec basis = space.basis_vector(i);
    for (std::size_t r = 0; r < flat.size(); ++r) flat[r] += c * basis[r];
  }
  return make_intertwiner(h, h,
                          Matrix::from_flat(h.bimodule.dim(), h.bimodule.dim(), flat));
}

std::vector<CheckReport> run_suite(CoherenceKind kind, const SuiteOptions& options) {
  if (options.cases == 0) throw Error("run_suite: at least one case required");
  std::vector<CheckReport> out;
  SplitMix64 master{options.seed};
  for (std::size_t index = 0; index < options.cases; ++index) {
    const std::uint64_t case_seed = master.next();
    InstanceGen gen(case_seed);
    const std::size_t max_dim = options.max_dim;
    const std::size_t max_carrier = options.max_dim;
    CheckResult result;
    switch (kind) {
      case CoherenceKind::Pentagon: {
        std::array<Algebra, 5> algebras;
        for (auto& a : algebras) a = gen.random_algebra(max_dim);
        const Bimodule m0 = gen.random_bimodule(algebras[0], algebras[1], max_carrier);
        const Bimodule m1 = gen.random_bimodule(algebras[1], algebras[2], max_carrier);
        const Bimodule m2 = gen.random_bimodule(algebras[2], algebras[3], max_carrier);
        const Bimodule m3 = gen.random_bimodule(algebras[3], algebras[4], max_carrier);
        result = pentagon_check(m0, m1, m2, m3);
        break;
      }
      case CoherenceKind::Triangle: {
        std::array<Algebra, 3> algebras;
        for (auto& a : algebras) a = gen.random_algebra(max_dim);
        const Bimodule m0 = gen.random_bimodule(algebras[0], algebras[1], max_carrier);
        const Bimodule m1 = gen.random_bimodule(algebras[1], algebras[2], max_carrier);
        result = triangle_check(m0, m1);
        break;
      }
      case CoherenceKind::InterchangerSquare: {
        const Net a = gen.random_net(max_dim);
        const Net b = gen.random_net(max_dim);
        const Net c = gen.random_net(max_dim);
        const Defect d0 = gen.random_defect(a, b, max_dim);
        const Defect d1 = gen.random_compatible_defect(a, b, max_dim, d0);
        const Defect e0 = gen.random_defect(b, c, max_dim);
        const Defect e1 = gen.random_compatible_defect(b, c, max_dim, e0);
        const Sector h = gen.random_sector(d0, d1, max_carrier);
        const Sector k = gen.random_sector(e0, e1, max_carrier);
        result = interchanger_square_check(h, k);
        break;
      }
      case CoherenceKind::InterchangerHexagon: {
        const Net a = gen.random_net(max_dim);
        const Net b = gen.random_net(max_dim);
        const Net c = gen.random_net(max_dim);
        std::array<Defect, 4> ds{gen.random_defect(a, b, max_dim), Defect{}, Defect{}, Defect{}};
        std::array<Defect, 4> es{gen.random_defect(b, c, max_dim), Defect{}, Defect{}, Defect{}};
        for (std::size_t i = 1; i < 4; ++i) {
          ds[i] = gen.random_compatible_defect(a, b, max_dim, ds[i - 1]);
          es[i] = gen.random_compatible_defect(b, c, max_dim, es[i - 1]);
        }
        const Sector h = gen.random_sector(ds[0], ds[1], max_carrier);
        const Sector h2 = gen.random_sector(ds[1], ds[2], max_carrier);
        const Sector h3 = gen.random_sector(ds[2], ds[3], max_carrier);
        const Sector k = gen.random_sector(es[0], es[1], max_carrier);
        const Sector k2 = gen.random_sector(es[1], es[2], max_carrier);
        const Sector k3 = gen.random_sector(es[2], es[3], max_carrier);
        result = interchanger_hexagon_check(h, h2, h3, k, k2, k3);
        break;
      }
      case CoherenceKind::Pentagonator: {
        std::array<Net, 5> nets;
        for (auto& n : nets) n = gen.random_net(max_dim);
        const Defect d = gen.random_defect(nets[0], nets[1], max_dim);
        const Defect e = gen.random_defect(nets[1], nets[2], max_dim);
        const Defect f = gen.random_defect(nets[2], nets[3], max_dim);
        const Defect g = gen.random_defect(nets[3], nets[4], max_dim);
        result = pentagonator_check(d, e, f, g);
        break;
      }
      case CoherenceKind::AssociatorModification: {
        std::array<Net, 4> nets;
        for (auto& n : nets) n = gen.random_net(max_dim);
        const Defect d0 = gen.random_defect(nets[0], nets[1], max_dim);
        const Defect d1 = gen.random_compatible_defect(nets[0], nets[1], max_dim, d0);
        const Defect e0 = gen.random_defect(nets[1], nets[2], max_dim);
        const Defect e1 = gen.random_compatible_defect(nets[1], nets[2], max_dim, e0);
        const Defect f0 = gen.random_defect(nets[2], nets[3], max_dim);
        const Defect f1 = gen.random_compatible_defect(nets[2], nets[3], max_dim, f0);
        const Sector h = gen.random_sector(d0, d1, max_carrier);
        const Sector h2 = gen.random_sector(e0, e1, max_carrier);
        const Sector h3 = gen.random_sector(f0, f1, max_carrier);
        const std::array<Intertwiner, 3> probe{gen.random_endo_intertwiner(h),
                                               gen.random_endo_intertwiner(h2),
                                               gen.random_endo_intertwiner(h3)};
        result = associator_modification_check(h, h2, h3, {probe});
        break;
      }
    }
    out.push_back(CheckReport{kind, index, case_seed, result});
  }
  return out;
}

}  // namespace comalg
