#pragma once

#include "comalg/coherence.hpp"

#include <map>

namespace comalg {

struct ParseError : Error {
  std::size_t line;
  ParseError(std::size_t line_number, const std::string& message)
      : Error("line " + std::to_string(line_number) + ": " + message), line(line_number) {}
};

// Named objects parsed from a definition file; everything is validated on
// load, so a constructed Workspace only holds lawful objects.
struct Workspace {
  std::vector<std::pair<std::string, std::string>> declarations;  // (kind, name) in order
  std::map<std::string, Algebra> algebras;
  std::map<std::string, AlgebraMorphism> morphisms;
  std::map<std::string, Subspace> subspaces;
  std::map<std::string, Bimodule> bimodules;
  std::map<std::string, Net> nets;
  std::map<std::string, Defect> defects;
  std::map<std::string, Sector> sectors;

  const Algebra& algebra(const std::string& name) const;
  const AlgebraMorphism& morphism(const std::string& name) const;
  const Subspace& subspace(const std::string& name) const;
  const Bimodule& bimodule(const std::string& name) const;
  const Net& net(const std::string& name) const;
  const Defect& defect(const std::string& name) const;
  const Sector& sector(const std::string& name) const;

  // NAME, op(NAME), or NAME*NAME over declared algebras.
  Algebra algebra_ref(const std::string& ref) const;
};

Workspace parse_workspace(std::string_view text);

// Interval configuration files: `interval <name> arc(<p>,<p>,+|-)`,
// `include <inner> <outer>`, `cover <whole> <left> <right>`,
// `disjoint <ambient> <first> <second>`.
AxiomConfig parse_axiom_config(std::string_view text);

CirclePoint parse_circle_point(std::string_view text);  // top | bot | w:<q> | b:<q>
CircleInterval parse_interval_literal(std::string_view text);

// Canonical text form used by CLI output: deterministic, newline terminated.
std::string serialize_algebra(const Algebra& a, const std::string& name);

}  // namespace comalg
