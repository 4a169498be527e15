#pragma once

#include <map>
#include <optional>
#include <string>

#include "annofuse/core.hpp"

namespace annofuse::preprocess {

enum class SmoothKind { savgol, moving_average, none };

struct SmoothConfig {
  SmoothKind kind = SmoothKind::none;
  int window = 5;     // odd
  int polyorder = 3;  // savgol only, < window
};

enum class NormKind { none, per_sequence, per_rater };

struct NormConfig {
  NormKind kind = NormKind::none;
};

struct RaterStats {
  double mean = 0.0;
  double stddev = 1.0;
};

using RaterStatsMap = std::map<std::string, RaterStats>;

/// Savitzky-Golay smoothing: least-squares polynomial fit over a sliding
/// window, evaluated at the window position. Near the boundaries the window
/// slides inward keeping its full width (asymmetric fit), so any input that
/// is a polynomial of degree <= polyorder is reproduced everywhere.
Signal savgol_filter(const Signal& s, int window, int polyorder);

/// Moving average with a shrinking (truncated) window at the edges.
Signal moving_average(const Signal& s, int window);

/// Uniform-kernel convolution with truncated edges; kernel 3 coincides with
/// moving_average window 3. Intended for post-fusion smoothing (default
/// kernel 15).
Signal convolve_smooth(const Signal& s, int kernel);

Signal smooth(const Signal& s, const SmoothConfig& cfg);

/// Z-scores each track. per_sequence uses the track's own population moments
/// within the sequence; per_rater uses the supplied global stats keyed by
/// rater id. Zero-variance tracks map to all-zeros.
AnnotationSet standardize(const AnnotationSet& set, const NormConfig& cfg,
                          const std::optional<RaterStatsMap>& rater_stats = std::nullopt);

/// Population mean/std over a sample span; used to accumulate per-rater
/// statistics across sequences.
RaterStats population_stats(const std::vector<double>& values);

}  // namespace annofuse::preprocess
