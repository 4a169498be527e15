#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "annofuse/core.hpp"
#include "annofuse/cluster.hpp"

namespace annofuse::profiling {

/// Per-cluster statistics, distinctive features and feature/label
/// correlations behind the cluster reports. Noise rows (-1) appear in
/// class_sizes but are excluded from per-cluster statistics.
struct ClusterProfile {
  std::vector<std::string> feature_names;
  std::vector<int> cluster_ids;  // sorted, excludes noise

  std::map<int, Vector> cluster_means;
  std::map<int, Vector> cluster_stds;
  std::map<int, Vector> cluster_medians;
  Vector global_means;
  Vector global_stds;
  Vector global_medians;

  /// Per cluster, features ranked by |z-distance of the cluster mean from
  /// the global mean| (global population std; zero-std features get z = 0).
  std::map<int, std::vector<std::pair<std::string, double>>> distinctiveness;

  /// corr(feature column, indicator(label == class)), features x classes.
  Matrix label_correlations;

  std::map<int, double> class_sizes;  // includes -1 when noise is present
  std::vector<std::string> warnings;  // e.g. empty clusters
};

ClusterProfile profile(const SegmentTable& table,
                       const cluster::ClassAssignment& assign);

/// Optional 2-D coordinates (one row per segment) for the scatter export.
struct ScatterCoords {
  std::vector<std::string> segment_ids;
  Matrix coords;  // N x 2
};

/// Writes profile_stats.csv, distinctiveness.csv, correlations.csv and,
/// when coords are given, scatter_post_reduction.csv. Deterministic bytes
/// for identical inputs.
void export_profile(const ClusterProfile& p, const std::filesystem::path& dir,
                    const std::vector<std::string>& segment_ids,
                    const std::vector<int>& labels,
                    const std::optional<ScatterCoords>& coords = std::nullopt);

}  // namespace annofuse::profiling
