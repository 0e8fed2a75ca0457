#include "comalg/translate.hpp"

namespace comalg {

ComalgRecord ComalgRecord::of(Net n) {
  ComalgRecord r;
  r.kind = "net";
  r.net = std::move(n);
  return r;
}

ComalgRecord ComalgRecord::of(Defect d) {
  ComalgRecord r;
  r.kind = "defect";
  r.defect = std::move(d);
  return r;
}

ComalgRecord ComalgRecord::of(Sector s) {
  ComalgRecord r;
  r.kind = "sector";
  r.sector = std::move(s);
  return r;
}

ComalgRecord ComalgRecord::of(Intertwiner i) {
  ComalgRecord r;
  r.kind = "intertwiner";
  r.intertwiner = std::move(i);
  return r;
}

namespace {

CircleInterval canonical_white() {
  return make_arc(CirclePoint::white(Rational(-1)), CirclePoint::white(Rational(1)),
                  Orientation::Positive);
}
CircleInterval canonical_black() {
  return make_arc(CirclePoint::black(Rational(-1)), CirclePoint::black(Rational(1)),
                  Orientation::Positive);
}
CircleInterval canonical_bicolored() {
  return make_arc(CirclePoint::black(Rational(1)), CirclePoint::white(Rational(-1)),
                  Orientation::Positive);
}

void defect_evaluation(const Defect& d, const std::string& prefix,
                       std::vector<std::pair<std::string, std::string>>& out) {
  out.emplace_back(prefix + "white",
                   "dim " + std::to_string(evaluate_defect(d, canonical_white()).dim()));
  out.emplace_back(prefix + "black",
                   "dim " + std::to_string(evaluate_defect(d, canonical_black()).dim()));
  out.emplace_back(prefix + "bicolored",
                   "dim " + std::to_string(evaluate_defect(d, canonical_bicolored()).dim()));
}

}  // namespace

CcnRecord comalg_to_ccn(const ComalgRecord& record) {
  CcnRecord out;
  out.core = record;
  if (record.net) {
    out.interval_evaluation.emplace_back(
        "interval", "dim " + std::to_string(record.net->algebra.dim()));
  } else if (record.defect) {
    defect_evaluation(*record.defect, "", out.interval_evaluation);
  } else if (record.sector) {
    defect_evaluation(record.sector->top, "top.", out.interval_evaluation);
    defect_evaluation(record.sector->bottom, "bottom.", out.interval_evaluation);
    out.interval_evaluation.emplace_back(
        "carrier", "dim " + std::to_string(record.sector->bimodule.dim()));
  } else if (record.intertwiner) {
    out.interval_evaluation.emplace_back(
        "matrix", std::to_string(record.intertwiner->matrix.rows()) + "x" +
                      std::to_string(record.intertwiner->matrix.cols()));
  }
  return out;
}

ComalgRecord ccn_to_comalg(const CcnRecord& record) { return record.core; }

}  // namespace comalg
