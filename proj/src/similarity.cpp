#include "annofuse/similarity.hpp"

#include <algorithm>
#include <cmath>

namespace annofuse::similarity {

namespace {

struct Moments {
  double mean_a = 0.0;
  double mean_b = 0.0;
  double var_a = 0.0;
  double var_b = 0.0;
  double cov = 0.0;
};

bool is_constant(std::span<const double> x) {
  auto [lo, hi] = std::minmax_element(x.begin(), x.end());
  return *lo == *hi;
}

Moments population_moments(std::span<const double> a, std::span<const double> b) {
  const std::size_t n = a.size();
  Moments m;
  for (std::size_t i = 0; i < n; ++i) {
    m.mean_a += a[i];
    m.mean_b += b[i];
  }
  m.mean_a /= static_cast<double>(n);
  m.mean_b /= static_cast<double>(n);
  // constant inputs get exactly zero variance/covariance
  const bool const_a = is_constant(a);
  const bool const_b = is_constant(b);
  if (const_a) m.mean_a = a[0];
  if (const_b) m.mean_b = b[0];
  for (std::size_t i = 0; i < n; ++i) {
    const double da = const_a ? 0.0 : a[i] - m.mean_a;
    const double db = const_b ? 0.0 : b[i] - m.mean_b;
    m.var_a += da * da;
    m.var_b += db * db;
    m.cov += da * db;
  }
  m.var_a /= static_cast<double>(n);
  m.var_b /= static_cast<double>(n);
  m.cov /= static_cast<double>(n);
  return m;
}

void check_lengths(std::span<const double> a, std::span<const double> b) {
  if (a.size() != b.size()) {
    throw LengthMismatch("similarity inputs differ in length: " +
                         std::to_string(a.size()) + " vs " +
                         std::to_string(b.size()));
  }
  if (a.size() < 2) {
    throw LengthMismatch("similarity needs length >= 2, got " +
                         std::to_string(a.size()));
  }
}

}  // namespace

std::string to_string(SimilarityKind k) {
  switch (k) {
    case SimilarityKind::ccc: return "ccc";
    case SimilarityKind::pearson: return "pearson";
    case SimilarityKind::euclidean_neg: return "euclidean_neg";
  }
  return "ccc";
}

SimilarityKind similarity_from_string(const std::string& name) {
  if (name == "ccc") return SimilarityKind::ccc;
  if (name == "pearson") return SimilarityKind::pearson;
  if (name == "euclidean_neg" || name == "euclidean") return SimilarityKind::euclidean_neg;
  throw BadInput("unknown similarity kind: " + name);
}

double ccc(std::span<const double> a, std::span<const double> b, bool* degenerate) {
  check_lengths(a, b);
  if (degenerate) *degenerate = false;
  const Moments m = population_moments(a, b);
  const double mean_diff = m.mean_a - m.mean_b;
  const double denom = m.var_a + m.var_b + mean_diff * mean_diff;
  if (denom == 0.0) {
    if (degenerate) *degenerate = true;
    return 0.0;
  }
  return 2.0 * m.cov / denom;
}

double pearson(std::span<const double> a, std::span<const double> b) {
  check_lengths(a, b);
  const Moments m = population_moments(a, b);
  if (m.var_a == 0.0 || m.var_b == 0.0) return 0.0;
  return m.cov / std::sqrt(m.var_a * m.var_b);
}

double neg_euclidean(std::span<const double> a, std::span<const double> b) {
  check_lengths(a, b);
  double sum = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double d = a[i] - b[i];
    sum += d * d;
  }
  return -std::sqrt(sum);
}

double ccc(const Signal& a, const Signal& b, bool* degenerate) {
  return ccc(std::span<const double>(a.values), std::span<const double>(b.values), degenerate);
}

double pearson(const Signal& a, const Signal& b) {
  return pearson(std::span<const double>(a.values), std::span<const double>(b.values));
}

double neg_euclidean(const Signal& a, const Signal& b) {
  return neg_euclidean(std::span<const double>(a.values), std::span<const double>(b.values));
}

double score(SimilarityKind kind, std::span<const double> a, std::span<const double> b) {
  switch (kind) {
    case SimilarityKind::ccc: return ccc(a, b);
    case SimilarityKind::pearson: return pearson(a, b);
    case SimilarityKind::euclidean_neg: return neg_euclidean(a, b);
  }
  return ccc(a, b);
}

}  // namespace annofuse::similarity
