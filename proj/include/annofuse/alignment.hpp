#pragma once

#include <utility>
#include <vector>

#include "annofuse/core.hpp"

namespace annofuse::alignment {

/// Monotone index correspondence between two signals. Starts at (0,0), ends
/// at (n-1, m-1), steps in {(1,0),(0,1),(1,1)}.
struct WarpPath {
  std::vector<std::pair<int, int>> pairs;
};

struct DtwResult {
  double cost = 0.0;  // minimal sum of squared pointwise differences
  WarpPath path;
};

/// Dynamic time warping with squared local cost. Ties between steps are
/// broken deterministically, preferring the diagonal. `band` > 0 restricts
/// the search to a Sakoe-Chiba band of that half-width (0 = unconstrained).
DtwResult dtw(const Signal& a, const Signal& b, int band = 0);

/// Cost-only variant (no path backtrace).
double dtw_cost(const Signal& a, const Signal& b, int band = 0);

struct Barycenter {
  Signal values;
  std::vector<double> objective_trace;  // sum of DTW costs, non-increasing
};

/// DTW barycenter averaging: repeatedly re-associates every track sample to
/// barycenter positions via DTW paths and replaces each barycenter sample
/// with the mean of its associated samples. Stops when the relative
/// objective decrease falls below tol or after max_iter iterations.
Barycenter dba(const std::vector<Signal>& tracks, const Signal& init,
               int max_iter = 30, double tol = 1e-5, int band = 0);

/// Index of the track with minimal summed DTW cost to all others;
/// ties break toward the lowest index.
std::size_t medoid_index(const std::vector<Signal>& tracks, int band = 0);

struct GctwAlignment {
  std::vector<MonotoneWarp> warps;      // one per track
  std::vector<double> objective_trace;  // accepted objective values
};

/// Joint monotone-warp alignment of K equal-length tracks: minimizes the sum
/// over sample positions of the variance across warped tracks, by damped
/// Gauss-Newton on the basis coefficients with a line search, projecting each
/// coefficient vector back onto the simplex (non-negative, endpoint-pinned).
/// n_ramps sets the number of logistic ramp bases; starts from identity
/// warps, so the final objective never exceeds the identity objective.
GctwAlignment gctw_align(const std::vector<Signal>& tracks, int n_ramps = 5,
                         int max_iter = 50);

/// Reads the warped signal back on the original integer grid by linear
/// interpolation. Output length equals input length; endpoints are
/// preserved exactly.
Signal apply_warp(const Signal& s, const MonotoneWarp& w);

/// Sum over positions of the cross-track variance after warping; the
/// quantity gctw_align minimizes.
double warp_objective(const std::vector<Signal>& tracks,
                      const std::vector<MonotoneWarp>& warps);

}  // namespace annofuse::alignment
