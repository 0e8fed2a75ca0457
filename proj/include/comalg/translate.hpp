#pragma once

#include "comalg/intervals.hpp"

namespace comalg {

// A record in the bare algebraic view: one of the four layers.
struct ComalgRecord {
  std::string kind;  // "net" | "defect" | "sector" | "intertwiner"
  std::optional<Net> net;
  std::optional<Defect> defect;
  std::optional<Sector> sector;
  std::optional<Intertwiner> intertwiner;

  bool operator==(const ComalgRecord&) const = default;

  static ComalgRecord of(Net n);
  static ComalgRecord of(Defect d);
  static ComalgRecord of(Sector s);
  static ComalgRecord of(Intertwiner i);
};

// The conformal-net view of the same data: the record plus the interval
// evaluations the functor picture exposes; the metadata is derived, so both
// translations are identities on the underlying fields.
struct CcnRecord {
  ComalgRecord core;
  std::vector<std::pair<std::string, std::string>> interval_evaluation;

  bool operator==(const CcnRecord&) const = default;
};

CcnRecord comalg_to_ccn(const ComalgRecord& record);
ComalgRecord ccn_to_comalg(const CcnRecord& record);

}  // namespace comalg
