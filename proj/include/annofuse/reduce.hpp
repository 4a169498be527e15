#pragma once

#include <cstdint>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "annofuse/core.hpp"

namespace annofuse::reduce {

/// Per-column z-scoring fit on a chosen row subset; zero-variance columns
/// transform to zero. Applied to feature tables before PCA/SOM/clustering.
struct ColumnScaler {
  Vector means;
  Vector stds;  // population

  static ColumnScaler fit(const Matrix& X, const std::vector<int>& rows);
  static ColumnScaler fit(const Matrix& X);
  Matrix transform(const Matrix& X) const;
};

struct PcaModel {
  Matrix components;          // d x r, orthonormal columns
  Vector column_means;        // length d
  Vector explained_variance;  // length r, non-increasing
  bool truncated = false;     // fewer components than requested (rank deficiency)
};

/// Top-r principal components of the population covariance. Sign convention:
/// the largest-magnitude entry of each component is positive. If r exceeds
/// the number of nonzero eigenvalues, returns fewer components with the
/// truncated flag set.
PcaModel pca_fit(const Matrix& X, int r);
Matrix pca_transform(const PcaModel& model, const Matrix& X);
Matrix pca_inverse_transform(const PcaModel& model, const Matrix& Y);

struct SomModel {
  Matrix weights;  // (g1*g2) x d, row-major unit grid
  int g1 = 4;
  int g2 = 4;
  int trained_epochs = 0;
};

/// Classic online self-organizing map: Gaussian neighborhood with linearly
/// decaying radius and learning rate, sample order reshuffled each epoch.
/// Deterministic given the seed.
SomModel som_fit(const Matrix& X, int g1, int g2, int epochs, std::uint64_t seed);

/// Best-matching unit index per row.
std::vector<int> som_assign(const SomModel& model, const Matrix& X);

/// Mean distance of rows to their best-matching unit.
double som_quantization_error(const SomModel& model, const Matrix& X);

nlohmann::json pca_to_json(const PcaModel& model);
PcaModel pca_from_json(const nlohmann::json& j);
nlohmann::json som_to_json(const SomModel& model);
SomModel som_from_json(const nlohmann::json& j);

}  // namespace annofuse::reduce
