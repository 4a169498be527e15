#include "annofuse/core.hpp"

#include <cmath>

namespace annofuse {

bool all_finite(const Signal& s) {
  for (double v : s.values) {
    if (!std::isfinite(v)) return false;
  }
  return true;
}

const AnnotationSet& validate_annotation_set(const AnnotationSet& raw) {
  if (raw.tracks.size() < 2) {
    throw TooFewRaters("annotation set '" + raw.sequence_id + "' has " +
                       std::to_string(raw.tracks.size()) +
                       " tracks; fusion needs at least 2");
  }
  const std::size_t n = raw.tracks.front().size();
  const int period = raw.tracks.front().period_ms;
  for (std::size_t k = 0; k < raw.tracks.size(); ++k) {
    const Signal& t = raw.tracks[k];
    if (t.size() != n) {
      throw LengthMismatch("track " + std::to_string(k) + " of '" +
                           raw.sequence_id + "' has length " +
                           std::to_string(t.size()) + ", expected " +
                           std::to_string(n));
    }
    if (t.period_ms != period) {
      throw LengthMismatch("track " + std::to_string(k) + " of '" +
                           raw.sequence_id + "' has period " +
                           std::to_string(t.period_ms) + " ms, expected " +
                           std::to_string(period));
    }
    if (!all_finite(t)) {
      throw NonFinite("track " + std::to_string(k) + " of '" +
                      raw.sequence_id + "' contains NaN or infinite samples");
    }
  }
  return raw;
}

std::vector<std::string> validation_warnings(const AnnotationSet& set) {
  std::vector<std::string> warnings;
  if (set.tracks.size() == 2) {
    warnings.push_back("only 2 raters; at least 3 are recommended");
  }
  return warnings;
}

std::string to_string(FusionMethod m) {
  switch (m) {
    case FusionMethod::EWE: return "EWE";
    case FusionMethod::DBA: return "DBA";
    case FusionMethod::GCTW: return "GCTW";
    case FusionMethod::RAAW: return "RAAW";
    case FusionMethod::MEAN: return "MEAN";
  }
  return "MEAN";
}

FusionMethod fusion_method_from_string(const std::string& name) {
  if (name == "EWE" || name == "ewe") return FusionMethod::EWE;
  if (name == "DBA" || name == "dba") return FusionMethod::DBA;
  if (name == "GCTW" || name == "gctw") return FusionMethod::GCTW;
  if (name == "RAAW" || name == "raaw") return FusionMethod::RAAW;
  if (name == "MEAN" || name == "mean") return FusionMethod::MEAN;
  throw BadInput("unknown fusion method: " + name);
}

std::string to_string(Partition p) {
  switch (p) {
    case Partition::train: return "train";
    case Partition::devel: return "devel";
    case Partition::test: return "test";
  }
  return "train";
}

Partition partition_from_string(const std::string& name) {
  if (name == "train") return Partition::train;
  if (name == "devel" || name == "dev") return Partition::devel;
  if (name == "test") return Partition::test;
  throw BadInput("unknown partition: " + name);
}

}  // namespace annofuse
