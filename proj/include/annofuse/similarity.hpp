#pragma once

#include <span>
#include <string>

#include "annofuse/core.hpp"

namespace annofuse::similarity {

enum class SimilarityKind { ccc, pearson, euclidean_neg };

std::string to_string(SimilarityKind k);
SimilarityKind similarity_from_string(const std::string& name);

/// Concordance correlation coefficient with population moments:
///   2*cov(a,b) / (var(a) + var(b) + (mean(a)-mean(b))^2).
/// Returns 0 when the denominator vanishes (both inputs constant with equal
/// means); `degenerate` is set in that case.
double ccc(std::span<const double> a, std::span<const double> b,
           bool* degenerate = nullptr);

/// Pearson correlation; 0 when either input is constant.
double pearson(std::span<const double> a, std::span<const double> b);

/// Negated Euclidean distance (<= 0, 0 iff equal).
double neg_euclidean(std::span<const double> a, std::span<const double> b);

double ccc(const Signal& a, const Signal& b, bool* degenerate = nullptr);
double pearson(const Signal& a, const Signal& b);
double neg_euclidean(const Signal& a, const Signal& b);

double score(SimilarityKind kind, std::span<const double> a,
             std::span<const double> b);

}  // namespace annofuse::similarity
