#include "comalg/morita.hpp"

namespace comalg {

namespace {

// Column of phi evaluated on a pure tensor x (x) y.
Vec tensor_vec(const Vec& x, const Vec& y) {
  Vec out(x.size() * y.size(), Rational(0));
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < y.size(); ++j) out[i * y.size() + j] = x[i] * y[j];
  }
  return out;
}

}  // namespace

AlgebraMorphism Defect::left_restriction() const {
  const Algebra& a = left_net.algebra;
  const Algebra& b = right_net.algebra;
  Matrix m(algebra.dim(), a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) {
    const Vec img = phi.apply(tensor_vec(unit_vec(a.dim(), i), b.unit()));
    for (std::size_t r = 0; r < algebra.dim(); ++r) m.at(r, i) = img[r];
  }
  return AlgebraMorphism{a, algebra, std::move(m)};
}

AlgebraMorphism Defect::right_restriction() const {
  const Algebra& a = left_net.algebra;
  const Algebra& b = right_net.algebra;
  Matrix m(algebra.dim(), b.dim());
  for (std::size_t j = 0; j < b.dim(); ++j) {
    const Vec img = phi.apply(tensor_vec(a.unit(), unit_vec(b.dim(), j)));
    for (std::size_t r = 0; r < algebra.dim(); ++r) m.at(r, j) = img[r];
  }
  return AlgebraMorphism{b, algebra, std::move(m)};
}

Net make_net(const Algebra& a) {
  const Report valid = validate_algebra(a);
  if (!valid.ok()) throw Error("make_net: invalid algebra: " + valid.joined());
  if (const auto witness = noncommutative_witness(a)) {
    throw Error("make_net: algebra is not commutative; locality fails at basis pair (" +
                std::to_string(witness->first) + "," + std::to_string(witness->second) + ")");
  }
  return Net{a};
}

Report defect_violations(const Net& a, const Net& b, const Algebra& d,
                         const AlgebraMorphism& phi) {
  Report report;
  const Algebra ab = tensor_algebras(a.algebra, b.algebra);
  if (!(phi.source == ab)) report.add("phi source is not A (x) B");
  if (!(phi.target == d)) report.add("phi target is not the defect algebra");
  if (phi.matrix.rows() != d.dim() || phi.matrix.cols() != ab.dim()) {
    report.add("phi matrix shape mismatch");
    return report;
  }
  const Subspace zd = center(d).space;
  for (std::size_t g = 0; g < ab.dim(); ++g) {
    const Vec img = phi.matrix.col(g);
    if (!zd.contains(img)) {
      for (std::size_t j = 0; j < d.dim(); ++j) {
        const Vec ej = unit_vec(d.dim(), j);
        if (d.multiply(img, ej) != d.multiply(ej, img)) {
          report.add("image not central: phi(basis " + std::to_string(g) +
                     ") fails to commute with defect basis " + std::to_string(j));
          break;
        }
      }
    }
  }
  const Report morphism = check_morphism(phi);
  for (const auto& issue : morphism.issues) report.add("phi: " + issue);
  return report;
}

Defect make_defect(const Net& a, const Net& b, const Algebra& d, const AlgebraMorphism& phi) {
  const Report report = defect_violations(a, b, d, phi);
  if (!report.ok()) throw Error("make_defect: " + report.joined());
  return Defect{a, b, d, phi};
}

Defect identity_defect(const Net& n) {
  const Algebra& a = n.algebra;
  const Algebra ab = tensor_algebras(a, a);
  Matrix mu(a.dim(), ab.dim());
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j) {
      const Vec prod = a.product_vec(i, j);
      for (std::size_t r = 0; r < a.dim(); ++r) mu.at(r, i * a.dim() + j) = prod[r];
    }
  return make_defect(n, n, a, AlgebraMorphism{ab, a, std::move(mu)});
}

DefectFusion fuse_defects_full(const Defect& d, const Defect& e) {
  if (!(d.right_net == e.left_net)) throw Error("fuse_defects: middle net mismatch");
  const Net& a = d.left_net;
  const Net& b = d.right_net;
  const Net& c = e.right_net;
  auto [fused_alg, carrier] = tensor_over_central(d.algebra, e.algebra, b.algebra,
                                                  d.right_restriction(), e.left_restriction());

  const Algebra ac = tensor_algebras(a.algebra, c.algebra);
  Matrix phi(fused_alg.dim(), ac.dim());
  const AlgebraMorphism da = d.left_restriction();
  const AlgebraMorphism ec = e.right_restriction();
  for (std::size_t i = 0; i < a.algebra.dim(); ++i)
    for (std::size_t j = 0; j < c.algebra.dim(); ++j) {
      const Vec img = carrier.project(tensor_vec(da.matrix.col(i), ec.matrix.col(j)));
      for (std::size_t r = 0; r < fused_alg.dim(); ++r)
        phi.at(r, i * c.algebra.dim() + j) = img[r];
    }
  // make_defect re-verifies centrality and multiplicativity of the fused phi.
  return DefectFusion{make_defect(a, c, fused_alg, AlgebraMorphism{ac, fused_alg, std::move(phi)}),
                      carrier};
}

Defect fuse_defects(const Defect& d, const Defect& e) { return fuse_defects_full(d, e).defect; }

Report sector_violations(const Defect& top, const Defect& bottom, const Bimodule& m) {
  Report report;
  if (!(top.left_net == bottom.left_net) || !(top.right_net == bottom.right_net))
    report.add("defects do not share the net pair");
  if (!(m.left_alg() == top.algebra)) report.add("bimodule left algebra is not the top defect");
  if (!(m.right_alg() == bottom.algebra))
    report.add("bimodule right algebra is not the bottom defect");
  if (!report.ok()) return report;
  const Report bim = validate_bimodule(m);
  for (const auto& issue : bim.issues) report.add("bimodule: " + issue);
  const std::size_t na = top.left_net.algebra.dim();
  const std::size_t nb = top.right_net.algebra.dim();
  for (std::size_t i = 0; i < na; ++i)
    for (std::size_t j = 0; j < nb; ++j) {
      const Vec g = tensor_vec(unit_vec(na, i), unit_vec(nb, j));
      if (m.left_op(top.phi.apply(g)) != m.right_op(bottom.phi.apply(g)))
        report.add("action mismatch at net basis pair (" + std::to_string(i) + "," +
                   std::to_string(j) + ")");
    }
  return report;
}

Sector make_sector(const Defect& top, const Defect& bottom, const Bimodule& m) {
  const Report report = sector_violations(top, bottom, m);
  if (!report.ok()) throw Error("make_sector: " + report.joined());
  return Sector{top, bottom, m};
}

Sector identity_sector(const Defect& d) {
  return make_sector(d, d, regular_bimodule(d.algebra));
}

SectorFusion vertical_fusion_full(const Sector& h, const Sector& k) {
  if (!(h.bottom == k.top)) throw Error("vertical_fusion: defect mismatch");
  auto [bim, carrier] = tensor_over(h.bimodule, k.bimodule);
  return SectorFusion{make_sector(h.top, k.bottom, bim), carrier};
}

Sector vertical_fusion(const Sector& h, const Sector& k) {
  return vertical_fusion_full(h, k).sector;
}

Matrix net_action_on_sector(const Sector& h, std::size_t net_basis_index) {
  const Algebra& a = h.top.left_net.algebra;
  const Algebra& b = h.top.right_net.algebra;
  const Vec g = tensor_vec(a.unit(), unit_vec(b.dim(), net_basis_index));
  const Matrix through_top = h.bimodule.left_op(h.top.phi.apply(g));
  if (through_top != h.bimodule.right_op(h.bottom.phi.apply(g)))
    throw Error("net_action_on_sector: the two routes disagree (invalid sector)");
  return through_top;
}

SectorFusion horizontal_fusion_full(const Sector& h, const Sector& k) {
  if (!(h.top.right_net == k.top.left_net)) throw Error("horizontal_fusion: middle net mismatch");
  const Algebra& b = h.top.right_net.algebra;

  std::vector<Matrix> rho, lambda;
  for (std::size_t g = 0; g < b.dim(); ++g) {
    rho.push_back(net_action_on_sector(h, g));
    // The middle net acts on k through the left slot of its defects' phi.
    const Algebra& c = k.top.right_net.algebra;
    const Vec gk = tensor_vec(unit_vec(b.dim(), g), c.unit());
    const Matrix through_top = k.bimodule.left_op(k.top.phi.apply(gk));
    if (through_top != k.bimodule.right_op(k.bottom.phi.apply(gk)))
      throw Error("horizontal_fusion: the two routes disagree on the right sector");
    lambda.push_back(through_top);
  }
  const QuotientSpace carrier =
      quotient(h.bimodule.dim() * k.bimodule.dim(),
               balancing_relations(h.bimodule.dim(), k.bimodule.dim(), rho, lambda));

  const DefectFusion top = fuse_defects_full(h.top, k.top);
  const DefectFusion bottom = fuse_defects_full(h.bottom, k.bottom);

  // Left action of the fused top algebra: lift a basis class to D (x) F
  // coordinates, act factorwise, descend.
  std::vector<Matrix> left;
  const std::size_t dim_d = h.top.algebra.dim();
  const std::size_t dim_f = k.top.algebra.dim();
  for (std::size_t x = 0; x < top.defect.algebra.dim(); ++x) {
    const Vec rep = top.carrier.lift(unit_vec(top.defect.algebra.dim(), x));
    Matrix op(carrier.ambient_dim, carrier.ambient_dim);
    for (std::size_t i = 0; i < dim_d; ++i)
      for (std::size_t j = 0; j < dim_f; ++j) {
        const Rational& c = rep[i * dim_f + j];
        if (c == 0) continue;
        op = op + h.bimodule.left_basis_action(i).kron(k.bimodule.left_basis_action(j)).scaled(c);
      }
    if (!descends(op, carrier, carrier))
      throw Error("horizontal_fusion: left action fails to descend");
    left.push_back(induced_map(op, carrier, carrier));
  }
  // Classes that vanish in the fused algebra must act as zero.
  for (std::size_t r = 0; r < top.carrier.relations.dim(); ++r) {
    const Vec rel = top.carrier.relations.basis_vector(r);
    Matrix op(carrier.ambient_dim, carrier.ambient_dim);
    for (std::size_t i = 0; i < dim_d; ++i)
      for (std::size_t j = 0; j < dim_f; ++j) {
        const Rational& c = rel[i * dim_f + j];
        if (c == 0) continue;
        op = op + h.bimodule.left_basis_action(i).kron(k.bimodule.left_basis_action(j)).scaled(c);
      }
    if (!descends(op, carrier, carrier) || !induced_map(op, carrier, carrier).is_zero())
      throw Error("horizontal_fusion: left action is not balanced over the middle net");
  }

  std::vector<Matrix> right;
  const std::size_t dim_e = h.bottom.algebra.dim();
  const std::size_t dim_g = k.bottom.algebra.dim();
  for (std::size_t x = 0; x < bottom.defect.algebra.dim(); ++x) {
    const Vec rep = bottom.carrier.lift(unit_vec(bottom.defect.algebra.dim(), x));
    Matrix op(carrier.ambient_dim, carrier.ambient_dim);
    for (std::size_t i = 0; i < dim_e; ++i)
      for (std::size_t j = 0; j < dim_g; ++j) {
        const Rational& c = rep[i * dim_g + j];
        if (c == 0) continue;
        op = op + h.bimodule.right_basis_action(i).kron(k.bimodule.right_basis_action(j)).scaled(c);
      }
    if (!descends(op, carrier, carrier))
      throw Error("horizontal_fusion: right action fails to descend");
    right.push_back(induced_map(op, carrier, carrier));
  }
  for (std::size_t r = 0; r < bottom.carrier.relations.dim(); ++r) {
    const Vec rel = bottom.carrier.relations.basis_vector(r);
    Matrix op(carrier.ambient_dim, carrier.ambient_dim);
    for (std::size_t i = 0; i < dim_e; ++i)
      for (std::size_t j = 0; j < dim_g; ++j) {
        const Rational& c = rel[i * dim_g + j];
        if (c == 0) continue;
        op = op + h.bimodule.right_basis_action(i).kron(k.bimodule.right_basis_action(j)).scaled(c);
      }
    if (!descends(op, carrier, carrier) || !induced_map(op, carrier, carrier).is_zero())
      throw Error("horizontal_fusion: right action is not balanced over the middle net");
  }

  Bimodule bim(top.defect.algebra, bottom.defect.algebra, carrier.quotient_dim, std::move(left),
               std::move(right));
  return SectorFusion{make_sector(top.defect, bottom.defect, bim), carrier};
}

Sector horizontal_fusion(const Sector& h, const Sector& k) {
  return horizontal_fusion_full(h, k).sector;
}

Intertwiner make_intertwiner(const Sector& source, const Sector& target, Matrix matrix) {
  if (!(source.top == target.top) || !(source.bottom == target.bottom))
    throw Error("make_intertwiner: sectors do not share the defect pair");
  const BimoduleMorphism as_bimodule{source.bimodule, target.bimodule, matrix};
  if (!is_intertwiner(as_bimodule))
    throw Error("make_intertwiner: matrix does not intertwine the actions");
  return Intertwiner{source, target, std::move(matrix)};
}

Intertwiner identity_intertwiner(const Sector& h) {
  return Intertwiner{h, h, Matrix::identity(h.bimodule.dim())};
}

Intertwiner transversal_fusion(const Intertwiner& psi, const Intertwiner& phi) {
  if (!(phi.target == psi.source)) throw Error("transversal_fusion: endpoint mismatch");
  return Intertwiner{phi.source, psi.target, psi.matrix * phi.matrix};
}

Intertwiner vertical_fusion_intertwiners(const Intertwiner& phi, const Intertwiner& psi) {
  const BimoduleMorphism composite = tensor_morphisms_over(
      BimoduleMorphism{phi.source.bimodule, phi.target.bimodule, phi.matrix},
      BimoduleMorphism{psi.source.bimodule, psi.target.bimodule, psi.matrix});
  return make_intertwiner(vertical_fusion(phi.source, psi.source),
                          vertical_fusion(phi.target, psi.target), composite.matrix);
}

Intertwiner horizontal_fusion_intertwiners(const Intertwiner& phi, const Intertwiner& psi) {
  const SectorFusion src = horizontal_fusion_full(phi.source, psi.source);
  const SectorFusion tgt = horizontal_fusion_full(phi.target, psi.target);
  const Matrix op = phi.matrix.kron(psi.matrix);
  if (!descends(op, src.carrier, tgt.carrier))
    throw Error("horizontal_fusion_intertwiners: relations not mapped to relations");
  return make_intertwiner(src.sector, tgt.sector, induced_map(op, src.carrier, tgt.carrier));
}

Intertwiner interchanger(const Sector& h, const Sector& k, const Sector& h2, const Sector& k2) {
  const SectorFusion hk = horizontal_fusion_full(h, k);
  const SectorFusion h2k2 = horizontal_fusion_full(h2, k2);
  const SectorFusion source = vertical_fusion_full(hk.sector, h2k2.sector);

  const SectorFusion u = vertical_fusion_full(h, h2);
  const SectorFusion v = vertical_fusion_full(k, k2);
  const SectorFusion target = horizontal_fusion_full(u.sector, v.sector);

  const std::size_t dh = h.bimodule.dim(), dk = k.bimodule.dim();
  const std::size_t dh2 = h2.bimodule.dim(), dk2 = k2.bimodule.dim();
  // Permutation (x, y, x2, y2) -> (x, x2, y, y2) between the two flattenings.
  Matrix perm(dh * dh2 * dk * dk2, dh * dk * dh2 * dk2);
  for (std::size_t x = 0; x < dh; ++x)
    for (std::size_t y = 0; y < dk; ++y)
      for (std::size_t x2 = 0; x2 < dh2; ++x2)
        for (std::size_t y2 = 0; y2 < dk2; ++y2) {
          const std::size_t src_idx = ((x * dk + y) * dh2 + x2) * dk2 + y2;
          const std::size_t tgt_idx = ((x * dh2 + x2) * dk + y) * dk2 + y2;
          perm.at(tgt_idx, src_idx) = 1;
        }

  const Matrix raw = target.carrier.projection *
                     u.carrier.projection.kron(v.carrier.projection) * perm *
                     hk.carrier.section.kron(h2k2.carrier.section);
  for (std::size_t i = 0; i < source.carrier.relations.dim(); ++i)
    if (!vec_is_zero(raw.apply(source.carrier.relations.basis_vector(i))))
      throw Error("interchanger: outer relations not killed (internal error)");
  return make_intertwiner(source.sector, target.sector, raw * source.carrier.section);
}

}  // namespace comalg
