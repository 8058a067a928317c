#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "mbqc/crystal.hpp"
#include "mbqc/fit.hpp"
#include "mbqc/noise_model.hpp"
#include "mbqc/splitting.hpp"
#include "mbqc/uf_decoder.hpp"

namespace mbqc {

// Everything that is built once per (lattice/architecture, L, boundary) and
// then shared read-only across sampling workers.
struct ExperimentContext {
  std::string name;
  bool is_architecture = false;
  UnitCellComplex base;
  DistributionPlan plan;  // trivial (all arity 1) for plain lattices
  CrystalComplex crystal;
  SyndromeGraph primal, dual;
  // membranes under test: one primal/dual pair by default, every available
  // pair when the context was built with test_axis = -1
  std::vector<LogicalMembrane> mems_primal, mems_dual;
};

// test_axis selects the membrane pair (periodic crystals); -1 tests every
// available pair and fails on any of them.
ExperimentContext make_context(const std::string& name, int L,
                               std::array<AxisBoundary, 3> boundary, int test_axis = 0);
ExperimentContext make_context(const std::string& name, std::array<int, 3> dims,
                               std::array<AxisBoundary, 3> boundary, int test_axis = 0);

FaultSiteModel make_model(const ExperimentContext& ctx, NoiseModel kind,
                          const NoiseParams& params, const std::string& ordering,
                          GhzMode ghz_mode = GhzMode::fusion);

// Map a swept scalar onto noise rates. Aliases: p_p, p_g, p_m, p_n, p_e,
// p_n_prime, and the common-rate aliases p_o_monolithic (p_p=p_g=p_m) and
// p_o_distributed (p_p=p_g=p_m, network rates handled separately).
void apply_rate_alias(NoiseParams& params, const std::string& alias, double value);

struct PointResult {
  uint64_t trials = 0;
  uint64_t failures = 0;
  double phat = 0;
  double sigma = 0;
  double wall_ms = 0;
};

// `trials` independent shots: sample errors, decode both sides, test the
// membrane pair; a shot fails when either side flips its membrane. Results
// are bit-exact functions of (seed, point_index, shot), independent of the
// worker count.
PointResult run_point(const ExperimentContext& ctx, const FaultSiteModel& model,
                      uint64_t trials, uint64_t seed, uint64_t point_index,
                      int workers = 0);

// Serial reference implementation (same contract, plain loop).
PointResult run_point_serial(const ExperimentContext& ctx, const FaultSiteModel& model,
                             uint64_t trials, uint64_t seed, uint64_t point_index);

struct ResultRecord {
  double value = 0;  // swept scalar
  int L = 0;
  NoiseParams params;
  uint64_t trials = 0, failures = 0;
  double phat = 0, sigma = 0, wall_ms = 0;
  uint32_t point_index = 0;
};

struct ScanSpec {
  std::string name;
  std::array<AxisBoundary, 3> boundary{AxisBoundary::periodic, AxisBoundary::periodic,
                                       AxisBoundary::periodic};
  NoiseModel model = NoiseModel::phenomenological;
  std::string ordering = "clockwise";
  GhzMode ghz_mode = GhzMode::direct;
  NoiseParams base;
  std::string alias = "p_m";
  std::vector<double> values;
  std::string alias2;     // optional second swept rate: value2 = ratio2 * value
  double ratio2 = 0;
  std::vector<int> Ls;
  uint64_t trials = 50000;
  uint64_t seed = 1;
  int workers = 0;
  int test_axis = 0;
};

struct ScanResult {
  std::vector<ResultRecord> records;
  ThresholdFit fit;
};

// Sweep, collect records, fit the threshold crossing.
ScanResult threshold_scan(const ScanSpec& spec);

// Fixed-ratio rays in the (alias, alias2) plane; each ray gets a 1-D fit and
// contributes one boundary point (value*cos, value*sin at the fitted radius).
struct RegionRay {
  double dir1 = 1, dir2 = 0;
  std::vector<double> radii;
};
struct RegionPoint {
  double v1 = 0, v2 = 0;
  ThresholdFit fit;
  bool ok = false;
};
std::vector<RegionPoint> sweep_region(ScanSpec spec, const std::string& alias2,
                                      const std::vector<RegionRay>& rays);

// Weighted phenomenological view: thresholds divided by the valency.
ThresholdFit weighted_view(const ThresholdFit& fit, uint32_t z);

// CSV persistence (one row per record) plus a config echo sidecar.
void write_records_csv(const std::string& path, const std::vector<ResultRecord>& records,
                       const std::string& config_echo);

}  // namespace mbqc
