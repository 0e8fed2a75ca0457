#include "comalg/workspace.hpp"

#include "CLI11.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using namespace comalg;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open file '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

Workspace load(const std::string& path) { return parse_workspace(read_file(path)); }

void print_subspace(const Subspace& s) {
  std::cout << "dim " << s.dim() << "\n";
  for (std::size_t i = 0; i < s.dim(); ++i)
    std::cout << "row " << to_string(s.basis_vector(i)) << "\n";
}

void print_matrix(const Matrix& m) { std::cout << to_string(m); }

int run_validate(const std::string& file) {
  const Workspace ws = load(file);
  for (const auto& [kind, name] : ws.declarations) std::cout << "OK " << kind << " " << name << "\n";
  return 0;
}

int run_center(const std::string& file, const std::string& alg) {
  const Workspace ws = load(file);
  print_subspace(center(ws.algebra_ref(alg)).space);
  return 0;
}

int run_commutant(const std::string& file, const std::string& alg, const std::string& sub) {
  const Workspace ws = load(file);
  print_subspace(commutant(ws.algebra_ref(alg), ws.subspace(sub)).space);
  return 0;
}

int run_opposite(const std::string& file, const std::string& alg) {
  const Workspace ws = load(file);
  const Algebra op = opposite(ws.algebra_ref(alg));
  std::cout << serialize_algebra(op, op.name());
  return 0;
}

int run_tensor(const std::string& file, const std::string& a, const std::string& b,
               const std::vector<std::string>& over) {
  const Workspace ws = load(file);
  if (over.empty()) {
    const Algebra t = tensor_algebras(ws.algebra_ref(a), ws.algebra_ref(b));
    std::cout << serialize_algebra(t, t.name());
    return 0;
  }
  if (over.size() != 3) throw Error("tensor: 'over' needs <c> <ja> <jb>");
  auto [t, q] = tensor_over_central(ws.algebra_ref(a), ws.algebra_ref(b),
                                    ws.algebra_ref(over[0]), ws.morphism(over[1]),
                                    ws.morphism(over[2]));
  std::cout << "quotient-dim " << q.quotient_dim << " of " << q.ambient_dim << "\n";
  std::cout << serialize_algebra(t, t.name());
  return 0;
}

int run_fuse_defects(const std::string& file, const std::string& d, const std::string& e) {
  const Workspace ws = load(file);
  const DefectFusion fused = fuse_defects_full(ws.defect(d), ws.defect(e));
  std::cout << "carrier-dim " << fused.carrier.quotient_dim << " of " << fused.carrier.ambient_dim
            << "\n";
  std::cout << serialize_algebra(fused.defect.algebra, d + "*" + e) << "phi\n";
  print_matrix(fused.defect.phi.matrix);
  return 0;
}

int run_verify_fusion(const std::string& file, const std::string& d, const std::string& b,
                      const std::string& e, const std::string& iota_d,
                      const std::string& iota_e) {
  const Workspace ws = load(file);
  const FusionReport report = verify_fusion_theorem(ws.algebra_ref(d), ws.algebra_ref(b),
                                                    ws.algebra_ref(e), ws.morphism(iota_d),
                                                    ws.morphism(iota_e));
  std::cout << report.summary() << "\n";
  std::cout << (report.ok() ? "OK" : "FAIL") << " fusion-theorem D=" << d << " B=" << b
            << " E=" << e << "\n";
  return report.ok() ? 0 : 1;
}

int run_sector_check(const std::string& file, const std::string& name) {
  const Workspace ws = load(file);
  const Sector& s = ws.sector(name);
  const Report report = sector_violations(s.top, s.bottom, s.bimodule);
  if (!report.ok()) {
    for (const auto& issue : report.issues) std::cout << "FAIL sector " << name << ": " << issue << "\n";
    return 1;
  }
  std::cout << "OK sector " << name << " carrier-dim " << s.bimodule.dim() << "\n";
  return 0;
}

void print_sector(const Sector& s) {
  std::cout << "sector carrier-dim " << s.bimodule.dim() << " left-dim "
            << s.top.algebra.dim() << " right-dim " << s.bottom.algebra.dim() << "\n";
  for (std::size_t i = 0; i < s.top.algebra.dim(); ++i) {
    std::cout << "left " << i << "\n";
    print_matrix(s.bimodule.left_basis_action(i));
  }
  for (std::size_t j = 0; j < s.bottom.algebra.dim(); ++j) {
    std::cout << "right " << j << "\n";
    print_matrix(s.bimodule.right_basis_action(j));
  }
}

int run_vfuse(const std::string& file, const std::string& x, const std::string& y) {
  const Workspace ws = load(file);
  print_sector(vertical_fusion(ws.sector(x), ws.sector(y)));
  return 0;
}

int run_hfuse(const std::string& file, const std::string& x, const std::string& y) {
  const Workspace ws = load(file);
  print_sector(horizontal_fusion(ws.sector(x), ws.sector(y)));
  return 0;
}

int run_coherence(const std::string& suite, std::uint64_t seed, std::size_t cases,
                  std::size_t max_dim) {
  std::vector<CoherenceKind> kinds;
  if (suite == "all") {
    kinds = all_kinds();
  } else {
    const auto kind = parse_kind(suite);
    if (!kind) throw Error("unknown suite '" + suite + "'");
    kinds = {*kind};
  }
  bool any_fail = false;
  for (const CoherenceKind kind : kinds) {
    const auto reports = run_suite(kind, SuiteOptions{seed, cases, max_dim});
    for (const auto& report : reports) {
      std::cout << report.format() << "\n";
      if (!report.result.pass) any_fail = true;
    }
  }
  return any_fail ? 1 : 0;
}

int run_net_axioms(const std::string& file, const std::string& defect_name,
                   const std::string& config_path) {
  const Workspace ws = load(file);
  const AxiomConfig config = parse_axiom_config(read_file(config_path));
  const AxiomReport report = check_defect_axioms(ws.defect(defect_name), config);
  for (const auto& line : report.lines) std::cout << line << "\n";
  return report.pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact algebra of conformal-net defects, sectors and their fusions"};
  app.require_subcommand(1);

  std::string file, alg_a, alg_b, alg_c, morph_a, morph_b, name_a, name_b, subspace_name;
  std::vector<std::string> over;
  std::string suite = "all";
  std::uint64_t seed = 0;
  std::size_t cases = 10, max_dim = 2;
  std::string config_path;

  int exit_code = 0;
  auto wrap = [&](auto&& fn) {
    return [&, fn]() { exit_code = fn(); };
  };

  auto* validate = app.add_subcommand("validate", "parse and validate a definition file");
  validate->add_option("file", file)->required();
  validate->callback(wrap([&]() { return run_validate(file); }));

  auto* center_cmd = app.add_subcommand("center", "center of an algebra");
  center_cmd->add_option("file", file)->required();
  center_cmd->add_option("algebra", alg_a)->required();
  center_cmd->callback(wrap([&]() { return run_center(file, alg_a); }));

  auto* commutant_cmd = app.add_subcommand("commutant", "commutant of a subspace");
  commutant_cmd->add_option("file", file)->required();
  commutant_cmd->add_option("algebra", alg_a)->required();
  commutant_cmd->add_option("subspace", subspace_name)->required();
  commutant_cmd->callback(wrap([&]() { return run_commutant(file, alg_a, subspace_name); }));

  auto* opposite_cmd = app.add_subcommand("opposite", "opposite algebra");
  opposite_cmd->add_option("file", file)->required();
  opposite_cmd->add_option("algebra", alg_a)->required();
  opposite_cmd->callback(wrap([&]() { return run_opposite(file, alg_a); }));

  auto* tensor_cmd = app.add_subcommand("tensor", "tensor product, optionally over a base");
  tensor_cmd->add_option("file", file)->required();
  tensor_cmd->add_option("a", alg_a)->required();
  tensor_cmd->add_option("b", alg_b)->required();
  tensor_cmd->add_option("over", over)->expected(0, 4);
  tensor_cmd->callback(wrap([&]() {
    std::vector<std::string> rest = over;
    if (!rest.empty() && rest.front() == "over") rest.erase(rest.begin());
    return run_tensor(file, alg_a, alg_b, rest);
  }));

  auto* fuse_cmd = app.add_subcommand("fuse-defects", "fuse two defects over the middle net");
  fuse_cmd->add_option("file", file)->required();
  fuse_cmd->add_option("d", name_a)->required();
  fuse_cmd->add_option("e", name_b)->required();
  fuse_cmd->callback(wrap([&]() { return run_fuse_defects(file, name_a, name_b); }));

  auto* verify_cmd = app.add_subcommand("verify-fusion", "check the fusion theorem instance");
  verify_cmd->add_option("file", file)->required();
  verify_cmd->add_option("d", alg_a)->required();
  verify_cmd->add_option("b", alg_b)->required();
  verify_cmd->add_option("e", alg_c)->required();
  verify_cmd->add_option("iota_d", morph_a)->required();
  verify_cmd->add_option("iota_e", morph_b)->required();
  verify_cmd->callback(
      wrap([&]() { return run_verify_fusion(file, alg_a, alg_b, alg_c, morph_a, morph_b); }));

  auto* sector_cmd = app.add_subcommand("sector-check", "validate a sector");
  sector_cmd->add_option("file", file)->required();
  sector_cmd->add_option("sector", name_a)->required();
  sector_cmd->callback(wrap([&]() { return run_sector_check(file, name_a); }));

  auto* vfuse_cmd = app.add_subcommand("vfuse", "vertical fusion of two sectors");
  vfuse_cmd->add_option("file", file)->required();
  vfuse_cmd->add_option("x", name_a)->required();
  vfuse_cmd->add_option("y", name_b)->required();
  vfuse_cmd->callback(wrap([&]() { return run_vfuse(file, name_a, name_b); }));

  auto* hfuse_cmd = app.add_subcommand("hfuse", "horizontal fusion of two sectors");
  hfuse_cmd->add_option("file", file)->required();
  hfuse_cmd->add_option("x", name_a)->required();
  hfuse_cmd->add_option("y", name_b)->required();
  hfuse_cmd->callback(wrap([&]() { return run_hfuse(file, name_a, name_b); }));

  auto* coherence_cmd = app.add_subcommand("coherence", "run seeded coherence suites");
  coherence_cmd->add_option("--suite", suite, "pentagon|triangle|interchanger-square|"
                                              "interchanger-hexagon|pentagonator|"
                                              "associator-modification|all");
  coherence_cmd->add_option("--seed", seed);
  coherence_cmd->add_option("--cases", cases);
  coherence_cmd->add_option("--max-dim", max_dim);
  coherence_cmd->callback(wrap([&]() { return run_coherence(suite, seed, cases, max_dim); }));

  auto* axioms_cmd = app.add_subcommand("net-axioms", "check defect axioms on a configuration");
  axioms_cmd->add_option("file", file)->required();
  axioms_cmd->add_option("defect", name_a)->required();
  axioms_cmd->add_option("--config", config_path)->required();
  axioms_cmd->callback(wrap([&]() { return run_net_axioms(file, name_a, config_path); }));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const comalg::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return exit_code;
}
