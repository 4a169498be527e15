#pragma once

#include <span>
#include <string>
#include <vector>

#include "annofuse/core.hpp"

namespace annofuse::features {

enum class FeatureSet { basic, change, ext, large, custom };

std::string to_string(FeatureSet s);
FeatureSet feature_set_from_string(const std::string& name);

/// Canonical feature order for each named set:
///   basic  = mean, median, std, q5, q10, q25, q33, q66, q75, q90, q95
///   change = std, relEnergy, relSOC, relPeaks, relLSBMe, relLSAMe, relCBMe
///   ext    = basic (+ change minus std) + CrM0 + PreDa
///   large  = ext + skewness, kurtosis, MACh, MCh, MSDC, FLMi, LLMi, FLMa, LLMa
std::vector<std::string> feature_names(FeatureSet set,
                                       const std::vector<std::string>& custom = {});

/// Single named feature on a segment of length >= 2. Degenerate cases are
/// defined (never NaN): zero-variance segments have skewness/kurtosis 0 and
/// quantiles equal to the constant; PreDa is 0 when all values are unique.
double compute_feature(const std::string& name, std::span<const double> x);

std::vector<double> extract_features(std::span<const double> x, FeatureSet set,
                                     const std::vector<std::string>& custom = {});
std::vector<double> extract_features(const Segment& seg, FeatureSet set,
                                     const std::vector<std::string>& custom = {});

struct SequenceSignal {
  std::string sequence_id;
  Signal signal;
};

/// Segment boundaries in sample indices; end is exclusive.
struct SegmentSpec {
  std::string segment_id;
  std::string sequence_id;
  Partition partition = Partition::train;
  std::size_t start = 0;
  std::size_t end = 0;
};

SegmentTable build_segment_table(const std::vector<SequenceSignal>& sequences,
                                 const std::vector<SegmentSpec>& specs,
                                 FeatureSet set,
                                 const std::vector<std::string>& custom = {});

/// CSV rendering of a table: segment_id, sequence_id, partition, then one
/// column per feature.
std::string to_csv(const SegmentTable& table);

}  // namespace annofuse::features
