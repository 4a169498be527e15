#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "annofuse/core.hpp"

namespace annofuse::cluster {

enum class Algo { kmeans, cmeans, gmm, agglomerative, dbscan };
enum class Linkage { ward, average, complete };
enum class CovType { diag, full };
enum class FitPartition { train_only, all };

std::string to_string(Algo a);
Algo algo_from_string(const std::string& name);
std::string to_string(Linkage l);
Linkage linkage_from_string(const std::string& name);

/// A fitted clustering. Labels are canonicalized by first occurrence in row
/// order, and centroid/parameter rows are re-ordered to match, so identical
/// data produces identical labels regardless of internal ordering.
struct ClusterModel {
  Algo algo = Algo::kmeans;
  int k = 0;
  Matrix centroids;            // k x d (kmeans/cmeans/agglomerative/gmm means)
  std::vector<int> labels;     // fit labels, canonical; -1 = noise (dbscan)
  std::vector<double> objective_trace;

  // soft methods
  Matrix memberships;  // N x k, rows sum to 1 (cmeans); responsibilities (gmm)
  double fuzzifier = 2.0;

  // gmm
  CovType cov_type = CovType::diag;
  std::vector<Matrix> covariances;  // k matrices (diag stored as full diagonal)
  Vector mixing_weights;

  // dbscan
  Matrix core_points;
  std::vector<int> core_labels;
  double eps = 0.0;
  int min_samples = 0;

  FitPartition fit_partition = FitPartition::all;
};

struct ClassAssignment {
  std::vector<int> labels;          // -1 = noise
  std::vector<double> class_sizes;  // fraction per non-noise class (of all rows)
  double noise_fraction = 0.0;
};

ClassAssignment make_assignment(const std::vector<int>& labels);

/// k-means++ seeding followed by Lloyd iterations; empty clusters are
/// re-seeded to the farthest point. objective_trace records inertia.
ClusterModel kmeans_fit(const Matrix& X, int k, std::uint64_t seed,
                        int max_iter = 300, double tol = 1e-10);

/// Fuzzy c-means with fuzzifier m > 1. A point coinciding with a centroid
/// receives membership 1 for that cluster. objective_trace records the
/// weighted within-distance objective.
ClusterModel cmeans_fit(const Matrix& X, int k, double m, std::uint64_t seed,
                        int max_iter = 300, double tol = 1e-10);

/// EM for a Gaussian mixture, initialized from k-means. Covariance
/// eigenvalues are floored at 1e-6. objective_trace records the mean
/// log-likelihood (non-decreasing).
ClusterModel gmm_fit(const Matrix& X, int k, std::uint64_t seed,
                     int max_iter = 200, double tol = 1e-8,
                     CovType cov = CovType::diag);

/// Bottom-up merging until k clusters remain; ties break toward the lowest
/// pair index. Centroids are recorded for prediction.
ClusterModel agglo_fit(const Matrix& X, int k, Linkage linkage = Linkage::ward);

/// Core/border/noise labeling with deterministic scan order; label -1 is
/// noise.
ClusterModel dbscan_fit(const Matrix& X, double eps, int min_samples);

/// Nearest-centroid (kmeans/agglomerative), membership argmax (cmeans),
/// posterior argmax (gmm), or nearest core point within eps (dbscan; noise
/// otherwise). Ties resolve to the lower class index.
ClassAssignment predict(const ClusterModel& model, const Matrix& X_new);

/// Soft memberships of new rows under a fitted cmeans model.
Matrix cmeans_memberships(const ClusterModel& model, const Matrix& X_new);

struct PruneVerdict {
  bool accept = true;
  std::string reason;
};

/// Rejects an assignment when any non-noise class fraction is below
/// factor * (1/k); equality passes.
PruneVerdict prune_by_chance(const ClassAssignment& assign, int k, double factor);

nlohmann::json model_to_json(const ClusterModel& model);
ClusterModel model_from_json(const nlohmann::json& j);

}  // namespace annofuse::cluster
