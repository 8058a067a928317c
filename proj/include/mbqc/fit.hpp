#pragma once

#include <string>
#include <vector>

namespace mbqc {

struct FitPoint {
  double p = 0;      // swept error rate
  double L = 0;      // lattice size
  double phat = 0;   // observed logical error rate
  double sigma = 0;  // binomial standard deviation
};

// Parameters of the second-order scaling model
//   p_L(p, L) = p_L_th + c1 (p - p_th) L^{1/nu} + c2 (p - p_th)^2 L^{2/nu},
// fitted by nonlinear least squares on the sigma-normalized residuals.
struct ThresholdFit {
  bool ok = false;
  std::string message;
  double p_th = 0, p_l_th = 0, c1 = 0, c2 = 0, nu = 1;
  double p_th_stderr = 0;
  double ci_lo = 0, ci_hi = 0;  // 95% interval on p_th
  double chi2 = 0;
  int n_points = 0;
  int n_sizes = 0;
};

// Fits after windowing the points to |p - p0| <= window_frac * p0 around a
// coarse crossing estimate p0. Points with zero sigma are regularized.
ThresholdFit fit_threshold(std::vector<FitPoint> points, double window_frac = 0.30);

// Coarse crossing estimate (median of pairwise interpolated crossings).
double coarse_crossing(const std::vector<FitPoint>& points);

double fitted_logical_rate(const ThresholdFit& f, double p, double L);

}  // namespace mbqc
