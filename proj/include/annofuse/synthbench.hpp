#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "annofuse/core.hpp"
#include "annofuse/fusion.hpp"

namespace annofuse::synthbench {

/// Synthetic annotator: a delayed (edge-held), scaled, biased and noised copy
/// of a ground-truth signal.
struct RaterModel {
  int lag_samples = 0;    // >= 0, < length/2
  double bias = 0.0;
  double scale = 1.0;     // > 0
  double noise_std = 0.0; // >= 0
  std::uint64_t seed = 0;
};

/// Smooth emotion-like trajectory: sum of 2-4 random-phase sinusoids
/// (1 to 6 cycles over the signal) plus a slow ramp.
Signal make_truth(std::size_t length, std::uint64_t seed, int period_ms = 250);

AnnotationSet generate(const Signal& truth, const std::vector<RaterModel>& raters,
                       const std::string& sequence_id = "synthetic");

struct EvalRow {
  std::string method;  // fusion method name or "rater:<id>"
  double ccc = 0.0;
};

/// Fuses the set with each method and reports CCC against the truth, plus
/// the per-rater CCC baselines.
std::vector<EvalRow> evaluate(const Signal& truth, const AnnotationSet& set,
                              const std::vector<FusionMethod>& methods,
                              const fusion::FusionConfig& cfg = {});

}  // namespace annofuse::synthbench
