#include "doctest.h"
#include "mbqc/experiment.hpp"
#include "mbqc/fit.hpp"
#include "mbqc/rng.hpp"

using namespace mbqc;

namespace {

// Sample synthetic data from the scaling model with binomial noise.
std::vector<FitPoint> synthetic(double p_th, double nu, double p_l_th, double c1,
                                double c2, uint64_t trials, Rng& rng) {
  std::vector<FitPoint> pts;
  for (double L : {8.0, 10.0, 12.0}) {
    for (int k = -4; k <= 4; ++k) {
      double p = p_th * (1 + 0.12 * k / 4.0);
      double x = (p - p_th) * std::pow(L, 1.0 / nu);
      double pl = p_l_th + c1 * x + c2 * x * x;
      pl = std::min(0.95, std::max(1e-4, pl));
      uint64_t fails = 0;
      for (uint64_t t = 0; t < trials; ++t) fails += rng.bernoulli(pl);
      double phat = double(fails) / trials;
      double ptilde = (fails + 1.0) / (trials + 2.0);
      pts.push_back({p, L, phat, std::sqrt(ptilde * (1 - ptilde) / trials)});
    }
  }
  return pts;
}

}  // namespace

TEST_CASE("synthetic truth is recovered within the fit's own confidence interval") {
  Rng rng(51, 0, 0);
  const double p_th = 0.025, nu = 1.0, p_l_th = 0.16, c1 = 3.5, c2 = 15.0;
  int hits = 0, reps = 40;
  for (int r = 0; r < reps; ++r) {
    auto pts = synthetic(p_th, nu, p_l_th, c1, c2, 20000, rng);
    auto fit = fit_threshold(pts);
    REQUIRE(fit.ok);
    if (p_th >= fit.ci_lo && p_th <= fit.ci_hi) ++hits;
  }
  // the acceptance suite requires >= 90%; leave slack at this sample size
  CHECK(hits >= int(0.85 * reps));
}

TEST_CASE("fit reports failure when no crossing is in range") {
  std::vector<FitPoint> pts;
  for (double L : {8.0, 10.0, 12.0})
    for (int k = 0; k < 6; ++k) {
      double p = 0.01 + 0.002 * k;
      // monotone by size, never crossing
      pts.push_back({p, L, 0.01 * L + 0.1 * p, 0.001});
    }
  auto fit = fit_threshold(pts);
  CHECK_FALSE(fit.ok);
  CHECK_FALSE(fit.message.empty());
}

TEST_CASE("weighted view divides the threshold and interval by the valency") {
  ThresholdFit f;
  f.ok = true;
  f.p_th = 0.026;
  f.p_th_stderr = 0.001;
  f.ci_lo = 0.024;
  f.ci_hi = 0.028;
  auto w = weighted_view(f, 4);
  CHECK(w.p_th == doctest::Approx(0.0065));
  CHECK(w.ci_hi == doctest::Approx(0.007));
  auto id = weighted_view(f, 1);
  CHECK(id.p_th == doctest::Approx(0.026));
}

TEST_CASE("fitted rate evaluates the model") {
  ThresholdFit f;
  f.p_th = 0.02;
  f.p_l_th = 0.1;
  f.c1 = 2;
  f.c2 = 0;
  f.nu = 1;
  CHECK(fitted_logical_rate(f, 0.02, 8) == doctest::Approx(0.1));
  CHECK(fitted_logical_rate(f, 0.03, 10) == doctest::Approx(0.1 + 2 * 0.01 * 10));
}
