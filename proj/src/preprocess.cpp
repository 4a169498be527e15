#include "annofuse/preprocess.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/Dense>

namespace annofuse::preprocess {

namespace {

void check_odd_window(int window) {
  if (window < 1 || window % 2 == 0) {
    throw BadWindow("window must be odd and positive, got " + std::to_string(window));
  }
}

}  // namespace

Signal savgol_filter(const Signal& s, int window, int polyorder) {
  check_odd_window(window);
  const int n = static_cast<int>(s.size());
  if (window > n) {
    throw BadWindow("window " + std::to_string(window) +
                    " exceeds signal length " + std::to_string(n));
  }
  if (polyorder < 0 || polyorder >= window) {
    throw BadOrder("polyorder must satisfy 0 <= polyorder < window, got " +
                   std::to_string(polyorder));
  }

  const int half = window / 2;
  Signal out = s;

  // Least-squares fit of a degree-polyorder polynomial over each window,
  // evaluated at the sample position. Windows near the boundary slide inward
  // keeping full width, so the fit stays determined and polynomials of
  // degree <= polyorder are reproduced everywhere.
  Eigen::MatrixXd vand(window, polyorder + 1);
  for (int r = 0; r < window; ++r) {
    double p = 1.0;
    for (int c = 0; c <= polyorder; ++c) {
      vand(r, c) = p;
      p *= static_cast<double>(r);
    }
  }
  // weights(e, r): contribution of window sample r to the value at offset e
  Eigen::MatrixXd proj =
      (vand.transpose() * vand).ldlt().solve(vand.transpose());  // (p+1) x window
  Eigen::MatrixXd weights(window, window);
  for (int e = 0; e < window; ++e) {
    double p = 1.0;
    Eigen::RowVectorXd powers(polyorder + 1);
    for (int c = 0; c <= polyorder; ++c) {
      powers(c) = p;
      p *= static_cast<double>(e);
    }
    weights.row(e) = powers * proj;
  }

  for (int i = 0; i < n; ++i) {
    const int start = std::clamp(i - half, 0, n - window);
    const int offset = i - start;
    double acc = 0.0;
    for (int r = 0; r < window; ++r) {
      acc += weights(offset, r) * s.values[static_cast<std::size_t>(start + r)];
    }
    out.values[static_cast<std::size_t>(i)] = acc;
  }
  return out;
}

Signal moving_average(const Signal& s, int window) {
  check_odd_window(window);
  const int n = static_cast<int>(s.size());
  const int half = window / 2;
  Signal out = s;
  for (int i = 0; i < n; ++i) {
    const int lo = std::max(0, i - half);
    const int hi = std::min(n - 1, i + half);
    double acc = 0.0;
    for (int j = lo; j <= hi; ++j) acc += s.values[static_cast<std::size_t>(j)];
    out.values[static_cast<std::size_t>(i)] = acc / static_cast<double>(hi - lo + 1);
  }
  return out;
}

Signal convolve_smooth(const Signal& s, int kernel) {
  return moving_average(s, kernel);
}

Signal smooth(const Signal& s, const SmoothConfig& cfg) {
  switch (cfg.kind) {
    case SmoothKind::savgol: return savgol_filter(s, cfg.window, cfg.polyorder);
    case SmoothKind::moving_average: return moving_average(s, cfg.window);
    case SmoothKind::none: return s;
  }
  return s;
}

RaterStats population_stats(const std::vector<double>& values) {
  RaterStats st;
  if (values.empty()) return st;
  double sum = 0.0;
  for (double v : values) sum += v;
  st.mean = sum / static_cast<double>(values.size());
  double ss = 0.0;
  for (double v : values) {
    const double d = v - st.mean;
    ss += d * d;
  }
  st.stddev = std::sqrt(ss / static_cast<double>(values.size()));
  return st;
}

AnnotationSet standardize(const AnnotationSet& set, const NormConfig& cfg,
                          const std::optional<RaterStatsMap>& rater_stats) {
  if (cfg.kind == NormKind::none) return set;

  AnnotationSet out = set;
  for (std::size_t k = 0; k < out.tracks.size(); ++k) {
    RaterStats st;
    if (cfg.kind == NormKind::per_sequence) {
      st = population_stats(out.tracks[k].values);
    } else {
      if (!rater_stats) {
        throw MissingStats("per-rater standardization requires global rater stats");
      }
      const std::string& rid = out.rater_ids.at(k);
      auto it = rater_stats->find(rid);
      if (it == rater_stats->end()) {
        throw MissingStats("no stats supplied for rater '" + rid + "'");
      }
      st = it->second;
    }
    for (double& v : out.tracks[k].values) {
      v = st.stddev > 0.0 ? (v - st.mean) / st.stddev : 0.0;
    }
  }
  return out;
}

}  // namespace annofuse::preprocess
