#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Core>

namespace annofuse {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

// ---------------------------------------------------------------------------
// Errors
// ---------------------------------------------------------------------------

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct LengthMismatch : Error { using Error::Error; };
struct NonFinite : Error { using Error::Error; };
struct TooFewRaters : Error { using Error::Error; };
struct BadWindow : Error { using Error::Error; };
struct BadOrder : Error { using Error::Error; };
struct MissingStats : Error { using Error::Error; };
struct EmptySignal : Error { using Error::Error; };
struct DivergedAlignment : Error { using Error::Error; };
struct DomainMismatch : Error { using Error::Error; };
struct SegmentTooShort : Error { using Error::Error; };
struct BadBoundary : Error { using Error::Error; };
struct KTooLarge : Error { using Error::Error; };
struct BadFuzzifier : Error { using Error::Error; };
struct DimMismatch : Error { using Error::Error; };
struct DegenerateClustering : Error { using Error::Error; };
struct BadMembership : Error { using Error::Error; };
struct LagTooLarge : Error { using Error::Error; };
struct BadInput : Error { using Error::Error; };
struct IoError : Error { using Error::Error; };

// ---------------------------------------------------------------------------
// Signals and annotation sets
// ---------------------------------------------------------------------------

/// A uniformly sampled track. The sampling period is metadata only; all
/// tracks of one AnnotationSet must already share the same grid.
struct Signal {
  std::vector<double> values;
  int period_ms = 250;

  Signal() = default;
  Signal(std::vector<double> v, int period = 250)
      : values(std::move(v)), period_ms(period) {}

  std::size_t size() const { return values.size(); }
  bool empty() const { return values.empty(); }
  double operator[](std::size_t i) const { return values[i]; }
  double& operator[](std::size_t i) { return values[i]; }
};

bool all_finite(const Signal& s);

/// K rater tracks for one sequence.
struct AnnotationSet {
  std::string sequence_id;
  std::vector<std::string> rater_ids;
  std::vector<Signal> tracks;

  std::size_t rater_count() const { return tracks.size(); }
  std::size_t length() const { return tracks.empty() ? 0 : tracks.front().size(); }
};

/// Throws LengthMismatch, NonFinite or TooFewRaters; returns the set
/// unchanged otherwise. Idempotent.
const AnnotationSet& validate_annotation_set(const AnnotationSet& raw);

/// Non-fatal advisories (e.g. fewer than three raters).
std::vector<std::string> validation_warnings(const AnnotationSet& set);

// ---------------------------------------------------------------------------
// Warps and gold standards
// ---------------------------------------------------------------------------

/// Non-decreasing warp over [0, n-1], parameterized as a non-negative
/// combination of monotone basis functions (identity, t^0.5, t^2 and a set
/// of shifted logistic ramps). Each basis is pinned to map 0 -> 0 and
/// n-1 -> n-1, and the coefficients sum to one, so the warp itself is
/// endpoint-pinned and monotone by construction.
struct MonotoneWarp {
  std::vector<double> coefficients;  // identity, sqrt, square, ramps...
  std::size_t domain_length = 0;
  int ramp_count = 5;

  static MonotoneWarp identity(std::size_t domain_length, int ramp_count = 5);

  int basis_count() const { return 3 + ramp_count; }
  double operator()(double t) const;
  bool is_nondecreasing(int grid_points = 1000) const;
};

enum class FusionMethod { EWE, DBA, GCTW, RAAW, MEAN };

std::string to_string(FusionMethod m);
FusionMethod fusion_method_from_string(const std::string& name);

struct GoldStandard {
  Signal fused;
  FusionMethod method = FusionMethod::MEAN;
  std::vector<double> rater_weights;  // empty for DBA/MEAN
  std::optional<std::vector<MonotoneWarp>> alignment_paths;
  std::vector<std::size_t> dropped_raters;
  std::vector<std::string> warnings;
};

// ---------------------------------------------------------------------------
// Segments
// ---------------------------------------------------------------------------

enum class Partition { train, devel, test };

std::string to_string(Partition p);
Partition partition_from_string(const std::string& name);

struct Segment {
  std::string segment_id;
  std::string sequence_id;
  Partition partition = Partition::train;
  Signal signal;
};

/// Feature rows aligned with segments: row i describes segments[i].
struct SegmentTable {
  std::vector<Segment> segments;
  std::vector<std::string> feature_names;
  Matrix features;  // |segments| x |feature_names|

  std::size_t rows() const { return segments.size(); }
};

}  // namespace annofuse
