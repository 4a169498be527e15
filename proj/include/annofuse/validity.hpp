#pragma once

#include <optional>
#include <vector>

#include "annofuse/core.hpp"

namespace annofuse::validity {

struct ValidityReport {
  double chi = 0.0;
  double silhouette = 0.0;
  double dbi = 0.0;
  double s_dbw = 0.0;
  std::optional<double> fpc;  // soft methods only
};

/// Calinski-Harabasz: [tr(B)/(k-1)] / [tr(W)/(N-k)]. Zero within-scatter
/// yields +infinity. Rows labeled -1 (noise) are ignored throughout this
/// module; at least two non-empty clusters are required.
double calinski_harabasz(const Matrix& X, const std::vector<int>& labels);

/// Mean silhouette value (b-a)/max(a,b); points in singleton clusters
/// score 0.
double silhouette(const Matrix& X, const std::vector<int>& labels);

/// Davies-Bouldin: (1/k) sum_i max_j (s_i+s_j)/d_ij. Coincident centroids
/// yield +infinity.
double davies_bouldin(const Matrix& X, const std::vector<int>& labels);

/// Dunn's partition coefficient (1/N) sum_i sum_k u_ik^2; rows must sum
/// to 1.
double fuzzy_partition_coefficient(const Matrix& memberships);

/// S_Dbw = Scat + Dens_bw. Scat is the mean over clusters of
/// ||var(cluster)|| / ||var(X)||. Dens_bw compares point density at centroid
/// pair midpoints against the denser of the two centroids, counting points
/// of the pair within a radius equal to the average cluster-stddev norm.
/// Lower is better.
double s_dbw(const Matrix& X, const std::vector<int>& labels);

ValidityReport evaluate_all(const Matrix& X, const std::vector<int>& labels,
                            const std::optional<Matrix>& memberships = std::nullopt);

}  // namespace annofuse::validity
