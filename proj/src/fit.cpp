#include "mbqc/fit.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "mbqc/errors.hpp"

namespace mbqc {

namespace {

// Solve the 5x5 normal equations in place; returns false when singular.
bool solve5(double a[5][5], double b[5], double x[5]) {
  for (int col = 0; col < 5; ++col) {
    int piv = col;
    for (int r = col + 1; r < 5; ++r)
      if (std::abs(a[r][col]) > std::abs(a[piv][col])) piv = r;
    if (std::abs(a[piv][col]) < 1e-14) return false;
    std::swap(a[col], a[piv]);
    std::swap(b[col], b[piv]);
    for (int r = col + 1; r < 5; ++r) {
      double f = a[r][col] / a[col][col];
      for (int c = col; c < 5; ++c) a[r][c] -= f * a[col][c];
      b[r] -= f * b[col];
    }
  }
  for (int r = 4; r >= 0; --r) {
    double s = b[r];
    for (int c = r + 1; c < 5; ++c) s -= a[r][c] * x[c];
    x[r] = s / a[r][r];
  }
  return true;
}

bool invert5(const double in[5][5], double out[5][5]) {
  double a[5][10];
  for (int r = 0; r < 5; ++r) {
    for (int c = 0; c < 5; ++c) a[r][c] = in[r][c];
    for (int c = 0; c < 5; ++c) a[r][5 + c] = (r == c) ? 1.0 : 0.0;
  }
  for (int col = 0; col < 5; ++col) {
    int piv = col;
    for (int r = col + 1; r < 5; ++r)
      if (std::abs(a[r][col]) > std::abs(a[piv][col])) piv = r;
    if (std::abs(a[piv][col]) < 1e-14) return false;
    for (int c = 0; c < 10; ++c) std::swap(a[col][c], a[piv][c]);
    double d = a[col][col];
    for (int c = 0; c < 10; ++c) a[col][c] /= d;
    for (int r = 0; r < 5; ++r) {
      if (r == col) continue;
      double f = a[r][col];
      if (f == 0) continue;
      for (int c = 0; c < 10; ++c) a[r][c] -= f * a[col][c];
    }
  }
  for (int r = 0; r < 5; ++r)
    for (int c = 0; c < 5; ++c) out[r][c] = a[r][5 + c];
  return true;
}

struct Params {
  double p_th, p_l_th, c1, c2, nu;
};

double model_rate(const Params& t, double p, double L) {
  double x = (p - t.p_th) * std::pow(L, 1.0 / t.nu);
  return t.p_l_th + t.c1 * x + t.c2 * x * x;
}

}  // namespace

double coarse_crossing(const std::vector<FitPoint>& points) {
  std::map<double, std::vector<FitPoint>> by_L;
  for (const auto& pt : points) by_L[pt.L].push_back(pt);
  if (by_L.size() < 2) throw InputError("coarse_crossing: need at least two sizes");
  for (auto& [L, v] : by_L)
    std::sort(v.begin(), v.end(), [](const FitPoint& a, const FitPoint& b) { return a.p < b.p; });

  auto interp = [](const std::vector<FitPoint>& v, double p) {
    if (p <= v.front().p) return v.front().phat;
    if (p >= v.back().p) return v.back().phat;
    for (std::size_t i = 0; i + 1 < v.size(); ++i)
      if (p >= v[i].p && p <= v[i + 1].p) {
        double t = (p - v[i].p) / (v[i + 1].p - v[i].p + 1e-300);
        return v[i].phat + t * (v[i + 1].phat - v[i].phat);
      }
    return v.back().phat;
  };

  std::vector<double> crossings;
  std::vector<const std::vector<FitPoint>*> curves;
  for (auto& [L, v] : by_L) curves.push_back(&v);
  for (std::size_t i = 0; i + 1 < curves.size(); ++i) {
    const auto& small = *curves[i];
    const auto& big = *curves[i + 1];
    double lo = std::max(small.front().p, big.front().p);
    double hi = std::min(small.back().p, big.back().p);
    if (lo >= hi) continue;
    // scan for a sign change of (big - small)
    const int steps = 200;
    double prev_d = interp(big, lo) - interp(small, lo);
    double prev_p = lo;
    for (int s = 1; s <= steps; ++s) {
      double p = lo + (hi - lo) * s / steps;
      double d = interp(big, p) - interp(small, p);
      if (prev_d <= 0 && d > 0) {
        double w = prev_d == d ? 0.5 : -prev_d / (d - prev_d);
        crossings.push_back(prev_p + w * (p - prev_p));
        break;
      }
      prev_d = d;
      prev_p = p;
    }
  }
  if (crossings.empty()) throw InputError("coarse_crossing: no crossing in data range");
  std::sort(crossings.begin(), crossings.end());
  return crossings[crossings.size() / 2];
}

ThresholdFit fit_threshold(std::vector<FitPoint> points, double window_frac) {
  ThresholdFit out;
  double p0;
  try {
    p0 = coarse_crossing(points);
  } catch (const std::exception& ex) {
    out.message = ex.what();
    return out;
  }

  std::vector<FitPoint> pts;
  for (const auto& pt : points)
    if (std::abs(pt.p - p0) <= window_frac * p0) pts.push_back(pt);
  std::map<double, int> sizes;
  for (const auto& pt : pts) sizes[pt.L]++;
  if (sizes.size() < 2 || pts.size() < 8) {
    out.message = "too few points in the fit window";
    return out;
  }
  for (auto& pt : pts)
    if (pt.sigma <= 0) pt.sigma = 1e-6;

  // initial slope from the largest size
  Params t{p0, 0, 0.5, 0, 1.0};
  {
    double Lmax = sizes.rbegin()->first;
    std::vector<FitPoint> big;
    for (const auto& pt : pts)
      if (pt.L == Lmax) big.push_back(pt);
    std::sort(big.begin(), big.end(),
              [](const FitPoint& a, const FitPoint& b) { return a.p < b.p; });
    if (big.size() >= 2) {
      double dx = (big.back().p - big.front().p) * std::pow(Lmax, 1.0);
      if (std::abs(dx) > 1e-12) t.c1 = (big.back().phat - big.front().phat) / dx;
    }
    double acc = 0;
    int n = 0;
    for (const auto& pt : pts)
      if (std::abs(pt.p - p0) <= 0.1 * p0) acc += pt.phat, ++n;
    t.p_l_th = n ? acc / n : 0.2;
  }

  auto chi2_of = [&](const Params& q) {
    double acc = 0;
    for (const auto& pt : pts) {
      double r = (model_rate(q, pt.p, pt.L) - pt.phat) / pt.sigma;
      acc += r * r;
    }
    return acc;
  };

  double lambda = 1e-3;
  double chi2 = chi2_of(t);
  for (int iter = 0; iter < 200; ++iter) {
    double jtj[5][5] = {};
    double jtr[5] = {};
    for (const auto& pt : pts) {
      double Lp = std::pow(pt.L, 1.0 / t.nu);
      double x = (pt.p - t.p_th) * Lp;
      double dfdx = t.c1 + 2 * t.c2 * x;
      double jac[5];
      jac[0] = -dfdx * Lp;                                          // d/dp_th
      jac[1] = 1.0;                                                 // d/dp_l_th
      jac[2] = x;                                                   // d/dc1
      jac[3] = x * x;                                               // d/dc2
      jac[4] = dfdx * (pt.p - t.p_th) * Lp * std::log(pt.L) * (-1.0 / (t.nu * t.nu));
      double r = pt.phat - model_rate(t, pt.p, pt.L);
      double w = 1.0 / (pt.sigma * pt.sigma);
      for (int a = 0; a < 5; ++a) {
        jtr[a] += w * jac[a] * r;
        for (int b = 0; b < 5; ++b) jtj[a][b] += w * jac[a] * jac[b];
      }
    }
    double a[5][5];
    double b[5], dx[5];
    for (int i = 0; i < 5; ++i) {
      for (int j = 0; j < 5; ++j) a[i][j] = jtj[i][j];
      a[i][i] *= (1.0 + lambda);
      b[i] = jtr[i];
    }
    if (!solve5(a, b, dx)) {
      out.message = "singular normal equations";
      return out;
    }
    Params cand{t.p_th + dx[0], t.p_l_th + dx[1], t.c1 + dx[2], t.c2 + dx[3],
                t.nu + dx[4]};
    if (cand.nu < 0.2) cand.nu = 0.2;
    if (cand.nu > 5.0) cand.nu = 5.0;
    double c2n = chi2_of(cand);
    if (c2n < chi2) {
      double delta = chi2 - c2n;
      t = cand;
      chi2 = c2n;
      lambda = std::max(lambda * 0.3, 1e-9);
      if (delta < 1e-10 * (1 + chi2)) break;
    } else {
      lambda *= 3.0;
      if (lambda > 1e9) break;
    }
  }

  // covariance from the unscaled normal matrix
  double jtj[5][5] = {};
  for (const auto& pt : pts) {
    double Lp = std::pow(pt.L, 1.0 / t.nu);
    double x = (pt.p - t.p_th) * Lp;
    double dfdx = t.c1 + 2 * t.c2 * x;
    double jac[5] = {-dfdx * Lp, 1.0, x, x * x,
                     dfdx * (pt.p - t.p_th) * Lp * std::log(pt.L) * (-1.0 / (t.nu * t.nu))};
    double w = 1.0 / (pt.sigma * pt.sigma);
    for (int a = 0; a < 5; ++a)
      for (int b = 0; b < 5; ++b) jtj[a][b] += w * jac[a] * jac[b];
  }
  double cov[5][5];
  if (!invert5(jtj, cov) || cov[0][0] < 0) {
    out.message = "covariance not available";
    return out;
  }

  out.ok = true;
  out.p_th = t.p_th;
  out.p_l_th = t.p_l_th;
  out.c1 = t.c1;
  out.c2 = t.c2;
  out.nu = t.nu;
  out.p_th_stderr = std::sqrt(cov[0][0]);
  out.ci_lo = t.p_th - 1.96 * out.p_th_stderr;
  out.ci_hi = t.p_th + 1.96 * out.p_th_stderr;
  out.chi2 = chi2;
  out.n_points = static_cast<int>(pts.size());
  out.n_sizes = static_cast<int>(sizes.size());
  if (t.p_th < 0 || !std::isfinite(t.p_th)) {
    out.ok = false;
    out.message = "fit diverged";
  }
  return out;
}

double fitted_logical_rate(const ThresholdFit& f, double p, double L) {
  Params t{f.p_th, f.p_l_th, f.c1, f.c2, f.nu};
  return model_rate(t, p, L);
}

}  // namespace mbqc
