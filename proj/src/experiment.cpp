#include "mbqc/experiment.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>

#ifdef CLUSTERLAB_HAVE_OPENMP
#include <omp.h>
#endif

namespace mbqc {

namespace {

DistributionPlan trivial_plan(const UnitCellComplex& base) {
  DistributionPlan plan;
  plan.faces.assign(base.sizes[2], {});
  plan.edges.assign(base.sizes[1], {});
  for (const auto& e : base.bounds[2]) {
    plan.faces[e.source].arc_of_incidence.push_back(0);
    plan.edges[e.target].arc_of_incidence.push_back(0);
  }
  return plan;
}

}  // namespace

ExperimentContext make_context(const std::string& name, int L,
                               std::array<AxisBoundary, 3> boundary, int test_axis) {
  return make_context(name, std::array<int, 3>{L, L, L}, boundary, test_axis);
}

ExperimentContext make_context(const std::string& name, std::array<int, 3> dims,
                               std::array<AxisBoundary, 3> boundary, int test_axis) {
  ExperimentContext ctx;
  ctx.name = name;
  bool is_arch = false;
  for (const auto& a : architecture_names())
    if (a == name) is_arch = true;
  ctx.is_architecture = is_arch;
  if (is_arch) {
    Architecture a = architecture(name);
    ctx.base = std::move(a.base);
    ctx.plan = std::move(a.plan);
  } else {
    ctx.base = builtin(name);
    ctx.plan = trivial_plan(ctx.base);
  }
  ctx.crystal = embed(ctx.base, dims, boundary);
  ctx.primal = syndrome_graph(ctx.crystal, 0);
  ctx.dual = syndrome_graph(ctx.crystal, 1);
  auto membranes = logical_membranes(ctx.crystal);
  if (test_axis < 0) {
    for (auto& m : membranes)
      (m.side == 0 ? ctx.mems_primal : ctx.mems_dual).push_back(m);
  } else {
    auto [mp, md] = select_test_pair(ctx.crystal, membranes, test_axis);
    ctx.mems_primal.push_back(std::move(mp));
    ctx.mems_dual.push_back(std::move(md));
  }
  return ctx;
}

FaultSiteModel make_model(const ExperimentContext& ctx, NoiseModel kind,
                          const NoiseParams& params, const std::string& ordering,
                          GhzMode ghz_mode) {
  if (kind == NoiseModel::phenomenological ||
      kind == NoiseModel::phenomenological_weighted)
    return characterize(ctx.base, nullptr, nullptr, kind, params, ghz_mode);
  GateOrdering ord = make_ordering(ctx.base, ordering);
  return characterize(ctx.base, &ctx.plan, &ord, kind, params, ghz_mode);
}

void apply_rate_alias(NoiseParams& params, const std::string& alias, double value) {
  if (alias == "p_p") {
    params.p_p = value;
  } else if (alias == "p_g") {
    params.p_g = value;
  } else if (alias == "p_m") {
    params.p_m = value;
  } else if (alias == "p_n") {
    // one physical knob, two GHZ parameterizations
    params.p_n = value;
    params.p_n_prime = value;
  } else if (alias == "p_e") {
    params.p_e = value;
  } else if (alias == "p_n_prime") {
    params.p_n_prime = value;
  } else if (alias == "p_o" || alias == "p_o_monolithic" || alias == "p_o_distributed") {
    params.p_p = value;
    params.p_g = value;
    params.p_m = value;
  } else {
    throw ConfigError("unknown rate alias '" + alias + "'");
  }
}

namespace {

// Per-worker scratch reused across shots.
struct ShotWorker {
  UnionFindDecoder dec_primal, dec_dual;
  ErrorSample sample;
  std::vector<uint32_t> defects, erased, correction;
  std::vector<uint8_t> defect_mark;

  ShotWorker(const ExperimentContext& ctx)
      : dec_primal(ctx.primal), dec_dual(ctx.dual) {
    defect_mark.assign(std::max(ctx.primal.n_nodes, ctx.dual.n_nodes), 0);
  }

  bool side_fails(const ExperimentContext& ctx, int side, const Chain& error,
                  const std::vector<uint32_t>& erased_qubits,
                  const std::vector<LogicalMembrane>& mems) {
    const SyndromeGraph& g = side == 0 ? ctx.primal : ctx.dual;
    UnionFindDecoder& dec = side == 0 ? dec_primal : dec_dual;

    defects.clear();
    for (uint32_t q : error.ones()) {
      uint32_t e = g.edge_of_qubit[q];
      if (e == UINT32_MAX) continue;
      for (uint32_t node : {g.edge_u[e], g.edge_v[e]}) {
        if (g.has_boundary && node == g.boundary_node()) continue;
        defect_mark[node] ^= 1;
        if (defect_mark[node])
          defects.push_back(node);
      }
    }
    // compact to nodes with odd parity
    std::size_t w = 0;
    for (uint32_t node : defects) {
      if (defect_mark[node]) defects[w++] = node;
      defect_mark[node] = 0;
    }
    defects.resize(w);

    erased.clear();
    for (uint32_t q : erased_qubits) {
      uint32_t e = g.edge_of_qubit[q];
      if (e != UINT32_MAX) erased.push_back(e);
    }

    correction.clear();
    dec.decode(defects, erased, correction);

    for (const auto& mem : mems) {
      int parity = inner_product(error, mem.support);
      for (uint32_t e : correction)
        parity ^= mem.support.get(g.qubit_of_edge[e]) ? 1 : 0;
      if (parity) return true;
    }
    return false;
  }

  bool shot_fails(const ExperimentContext& ctx, const FaultSiteModel& model,
                  uint64_t seed, uint64_t point, uint64_t shot) {
    Rng rng(seed, point, shot);
    sample_errors_into(model, ctx.crystal, rng, sample);
    bool fail = side_fails(ctx, 0, sample.primal, sample.erased_primal, ctx.mems_primal);
    if (!fail)
      fail = side_fails(ctx, 1, sample.dual, sample.erased_dual, ctx.mems_dual);
    return fail;
  }
};

PointResult finish_point(uint64_t trials, uint64_t failures, double wall_ms) {
  PointResult r;
  r.trials = trials;
  r.failures = failures;
  r.phat = trials ? double(failures) / double(trials) : 0.0;
  double ptilde = (double(failures) + 1.0) / (double(trials) + 2.0);
  r.sigma = std::sqrt(ptilde * (1.0 - ptilde) / std::max<double>(1.0, double(trials)));
  r.wall_ms = wall_ms;
  return r;
}

}  // namespace

PointResult run_point_serial(const ExperimentContext& ctx, const FaultSiteModel& model,
                             uint64_t trials, uint64_t seed, uint64_t point_index) {
  auto t0 = std::chrono::steady_clock::now();
  ShotWorker worker(ctx);
  uint64_t failures = 0;
  for (uint64_t shot = 0; shot < trials; ++shot)
    failures += worker.shot_fails(ctx, model, seed, point_index, shot) ? 1 : 0;
  double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
                  .count();
  return finish_point(trials, failures, ms);
}

PointResult run_point(const ExperimentContext& ctx, const FaultSiteModel& model,
                      uint64_t trials, uint64_t seed, uint64_t point_index, int workers) {
#ifndef CLUSTERLAB_HAVE_OPENMP
  (void)workers;
  return run_point_serial(ctx, model, trials, seed, point_index);
#else
  auto t0 = std::chrono::steady_clock::now();
  uint64_t failures = 0;
  int nthreads = workers > 0 ? workers : omp_get_max_threads();
#pragma omp parallel num_threads(nthreads) reduction(+ : failures)
  {
    ShotWorker worker(ctx);
#pragma omp for schedule(dynamic, 256)
    for (int64_t shot = 0; shot < static_cast<int64_t>(trials); ++shot)
      failures += worker.shot_fails(ctx, model, seed, point_index,
                                    static_cast<uint64_t>(shot))
                      ? 1
                      : 0;
  }
  double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
                  .count();
  return finish_point(trials, failures, ms);
#endif
}

ScanResult threshold_scan(const ScanSpec& spec) {
  ScanResult out;
  std::vector<FitPoint> fit_points;
  for (int L : spec.Ls) {
    ExperimentContext ctx = make_context(spec.name, L, spec.boundary, spec.test_axis);
    for (std::size_t vi = 0; vi < spec.values.size(); ++vi) {
      NoiseParams params = spec.base;
      apply_rate_alias(params, spec.alias, spec.values[vi]);
      if (!spec.alias2.empty())
        apply_rate_alias(params, spec.alias2, spec.ratio2 * spec.values[vi]);
      FaultSiteModel model =
          make_model(ctx, spec.model, params, spec.ordering, spec.ghz_mode);
      uint32_t point_index = static_cast<uint32_t>(vi + 1000 * L);
      PointResult pr = run_point(ctx, model, spec.trials, spec.seed, point_index,
                                 spec.workers);
      ResultRecord rec;
      rec.value = spec.values[vi];
      rec.L = L;
      rec.params = params;
      rec.trials = pr.trials;
      rec.failures = pr.failures;
      rec.phat = pr.phat;
      rec.sigma = pr.sigma;
      rec.wall_ms = pr.wall_ms;
      rec.point_index = point_index;
      out.records.push_back(rec);
      fit_points.push_back({rec.value, double(L), rec.phat, rec.sigma});
    }
  }
  out.fit = fit_threshold(fit_points);
  return out;
}

std::vector<RegionPoint> sweep_region(ScanSpec spec, const std::string& alias2,
                                      const std::vector<RegionRay>& rays) {
  std::vector<RegionPoint> out;
  for (const auto& ray : rays) {
    ScanSpec s = spec;
    s.values = ray.radii;
    if (ray.dir1 == 0) {
      // pure second-axis ray: sweep alias2 alone
      s.alias = alias2;
      s.alias2.clear();
      s.ratio2 = 0;
    } else {
      s.alias2 = alias2;
      s.ratio2 = ray.dir2 / ray.dir1;
      for (auto& v : s.values) v *= 1.0;  // radii are alias-1 values
    }
    ScanResult r = threshold_scan(s);
    RegionPoint pt;
    pt.fit = r.fit;
    pt.ok = r.fit.ok;
    if (r.fit.ok) {
      if (ray.dir1 == 0) {
        pt.v1 = 0;
        pt.v2 = r.fit.p_th;
      } else {
        pt.v1 = r.fit.p_th;
        pt.v2 = r.fit.p_th * ray.dir2 / ray.dir1;
      }
    }
    out.push_back(pt);
  }
  return out;
}

ThresholdFit weighted_view(const ThresholdFit& fit, uint32_t z) {
  if (z == 0) throw InputError("weighted_view: zero valency");
  ThresholdFit w = fit;
  w.p_th /= z;
  w.p_th_stderr /= z;
  w.ci_lo /= z;
  w.ci_hi /= z;
  return w;
}

void write_records_csv(const std::string& path, const std::vector<ResultRecord>& records,
                       const std::string& config_echo) {
  std::ofstream f(path);
  if (!f) throw InputError("cannot write " + path);
  uint64_t h = 1469598103934665603ull;
  for (unsigned char ch : config_echo) h = (h ^ ch) * 1099511628211ull;
  char hash[32];
  std::snprintf(hash, sizeof hash, "%016llx", static_cast<unsigned long long>(h));
  f << "# config " << hash << "\n";
  f << "value,L,p_p,p_g,p_m,p_n,p_e,p_n_prime,trials,failures,phat,sigma,wall_ms,point\n";
  for (const auto& r : records) {
    f << r.value << ',' << r.L << ',' << r.params.p_p << ',' << r.params.p_g << ','
      << r.params.p_m << ',' << r.params.p_n << ',' << r.params.p_e << ','
      << r.params.p_n_prime << ',' << r.trials << ',' << r.failures << ',' << r.phat
      << ',' << r.sigma << ',' << r.wall_ms << ',' << r.point_index << '\n';
  }
  if (!config_echo.empty()) {
    std::ofstream side(path + ".config.txt");
    side << config_echo;
  }
}

}  // namespace mbqc
