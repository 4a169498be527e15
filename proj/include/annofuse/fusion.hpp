#pragma once

#include "annofuse/core.hpp"
#include "annofuse/similarity.hpp"

namespace annofuse::fusion {

struct FusionConfig {
  FusionMethod method = FusionMethod::EWE;
  bool drop_negative_weights = true;
  similarity::SimilarityKind similarity = similarity::SimilarityKind::ccc;

  // alignment knobs used by DBA/GCTW/RAAW
  int gctw_ramps = 5;
  int gctw_max_iter = 50;
  int dba_max_iter = 30;
  double dba_tol = 1e-5;
  int dtw_band = 0;
};

/// Similarity-weighted mean: each rater is weighted by the similarity of its
/// track to the mean of all other tracks. Negative weights are clamped to
/// zero; if every weight is zero the result falls back to the unweighted
/// mean and carries a warning.
GoldStandard ewe_fuse(const AnnotationSet& set, const FusionConfig& cfg = {});

/// Barycenter of the tracks under DTW, initialized at the medoid track.
GoldStandard dba_fuse(const AnnotationSet& set, const FusionConfig& cfg = {});

/// Aligns the tracks with monotone warps, then takes the unweighted
/// position-wise mean of the warped tracks.
GoldStandard gctw_fuse(const AnnotationSet& set, const FusionConfig& cfg = {});

/// Alignment followed by agreement weighting: warps the tracks, computes
/// similarity weights on the aligned tracks, drops negatively correlated
/// raters entirely, and fuses the remaining aligned tracks as in ewe_fuse.
GoldStandard raaw_fuse(const AnnotationSet& set, const FusionConfig& cfg = {});

/// Position-wise unweighted mean (baseline).
GoldStandard mean_fuse(const AnnotationSet& set);

GoldStandard fuse(const AnnotationSet& set, const FusionConfig& cfg);

/// The raw rater weights before clamping/dropping (similarity of each track
/// to the mean of the others).
std::vector<double> rater_agreement_weights(const std::vector<Signal>& tracks,
                                            similarity::SimilarityKind kind);

}  // namespace annofuse::fusion
