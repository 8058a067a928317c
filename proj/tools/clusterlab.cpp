// Command-line front end: threshold and region estimation, distillation
// overlays, stabilizer fidelities, standalone decoding, and lattice checks.
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "mbqc/distill.hpp"
#include "mbqc/experiment.hpp"

using namespace mbqc;

namespace {

int exit_code_for(const std::exception& ex) {
  if (dynamic_cast<const ConfigError*>(&ex)) return 2;
  if (dynamic_cast<const InputError*>(&ex)) return 3;
  if (dynamic_cast<const StructuralError*>(&ex)) return 4;
  return 5;
}

struct ExperimentFile {
  std::string kind = "threshold";
  ScanSpec spec;
  std::string alias2;
  std::vector<RegionRay> rays;
  std::string out = "results";
  std::string echo;
};

ExperimentFile parse_experiment_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw ConfigError("cannot open config file " + path);
  std::stringstream buffer;
  buffer << f.rdbuf();
  ExperimentFile ef;
  ef.echo = buffer.str();
  std::istringstream in(ef.echo);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string kw;
    if (!(ls >> kw)) continue;
    auto fail = [&](const std::string& why) {
      throw ConfigError(path + ":" + std::to_string(lineno) + ": " + why);
    };
    if (kw == "kind") {
      ls >> ef.kind;
    } else if (kw == "lattice" || kw == "architecture") {
      ls >> ef.spec.name;
    } else if (kw == "L") {
      int v;
      while (ls >> v) ef.spec.Ls.push_back(v);
    } else if (kw == "boundary") {
      std::string a, b, c;
      if (!(ls >> a >> b >> c)) fail("boundary needs three axis types");
      ef.spec.boundary = {axis_boundary_from_string(a), axis_boundary_from_string(b),
                          axis_boundary_from_string(c)};
    } else if (kw == "model") {
      std::string m;
      ls >> m;
      ef.spec.model = noise_model_from_string(m);
    } else if (kw == "ordering") {
      ls >> ef.spec.ordering;
    } else if (kw == "ghz") {
      std::string m;
      ls >> m;
      if (m == "fusion")
        ef.spec.ghz_mode = GhzMode::fusion;
      else if (m == "direct")
        ef.spec.ghz_mode = GhzMode::direct;
      else
        fail("ghz mode must be fusion or direct");
    } else if (kw == "alias") {
      ls >> ef.spec.alias;
    } else if (kw == "alias2") {
      ls >> ef.alias2;
    } else if (kw == "values") {
      double v;
      while (ls >> v) ef.spec.values.push_back(v);
    } else if (kw == "sweep") {
      double lo, hi;
      int n;
      if (!(ls >> lo >> hi >> n) || n < 2) fail("sweep needs lo hi npoints");
      for (int i = 0; i < n; ++i)
        ef.spec.values.push_back(lo + (hi - lo) * i / (n - 1));
    } else if (kw == "fix") {
      std::string alias;
      double v;
      if (!(ls >> alias >> v)) fail("fix needs alias value");
      apply_rate_alias(ef.spec.base, alias, v);
    } else if (kw == "ray") {
      RegionRay ray;
      double lo, hi;
      int n;
      if (!(ls >> ray.dir1 >> ray.dir2 >> lo >> hi >> n) || n < 2)
        fail("ray needs dir1 dir2 lo hi npoints");
      for (int i = 0; i < n; ++i) ray.radii.push_back(lo + (hi - lo) * i / (n - 1));
      ef.rays.push_back(std::move(ray));
    } else if (kw == "trials") {
      ls >> ef.spec.trials;
    } else if (kw == "seed") {
      ls >> ef.spec.seed;
    } else if (kw == "workers") {
      ls >> ef.spec.workers;
    } else if (kw == "test_axis") {
      ls >> ef.spec.test_axis;
    } else if (kw == "out") {
      ls >> ef.out;
    } else {
      fail("unknown keyword '" + kw + "'");
    }
  }
  if (ef.spec.name.empty()) throw ConfigError(path + ": missing lattice/architecture");
  if (ef.spec.Ls.empty()) throw ConfigError(path + ": missing L");
  if (ef.spec.values.empty() && ef.rays.empty())
    throw ConfigError(path + ": missing values/sweep");
  return ef;
}

void print_fit(const ThresholdFit& fit) {
  if (fit.ok) {
    std::cout << "threshold " << fit.p_th << " stderr " << fit.p_th_stderr << " ci95 ["
              << fit.ci_lo << ", " << fit.ci_hi << "] nu " << fit.nu << " chi2 "
              << fit.chi2 << "/" << fit.n_points << "\n";
  } else {
    std::cout << "fit failed: " << fit.message << "\n";
  }
}

int cmd_threshold(const std::string& config, uint64_t seed_override, int workers_override,
                  const std::string& out_override) {
  auto ef = parse_experiment_file(config);
  if (seed_override) ef.spec.seed = seed_override;
  if (workers_override >= 0) ef.spec.workers = workers_override;
  if (!out_override.empty()) ef.out = out_override;
  auto res = threshold_scan(ef.spec);
  std::filesystem::create_directories(
      std::filesystem::path(ef.out).parent_path().empty()
          ? "."
          : std::filesystem::path(ef.out).parent_path().string());
  write_records_csv(ef.out + ".csv", res.records, ef.echo);
  print_fit(res.fit);
  std::cout << "records " << ef.out << ".csv\n";
  return res.fit.ok ? 0 : 6;
}

int cmd_region(const std::string& config, uint64_t seed_override, int workers_override,
               const std::string& out_override) {
  auto ef = parse_experiment_file(config);
  if (seed_override) ef.spec.seed = seed_override;
  if (workers_override >= 0) ef.spec.workers = workers_override;
  if (!out_override.empty()) ef.out = out_override;
  if (ef.alias2.empty()) throw ConfigError("region needs alias2");
  if (ef.rays.empty()) throw ConfigError("region needs ray lines");
  auto pts = sweep_region(ef.spec, ef.alias2, ef.rays);
  std::ofstream out(ef.out + ".region.csv");
  out << ef.spec.alias << "," << ef.alias2 << ",stderr,ok\n";
  for (const auto& p : pts) {
    out << p.v1 << ',' << p.v2 << ',' << (p.fit.ok ? p.fit.p_th_stderr : 0.0) << ','
        << (p.ok ? 1 : 0) << "\n";
    std::cout << (p.ok ? "boundary " : "ray skipped ") << p.v1 << " " << p.v2 << "\n";
  }
  std::cout << "region " << ef.out << ".region.csv\n";
  return 0;
}

int cmd_distill_overlay(double fn_lo, double fn_hi, int fn_steps,
                        const std::string& out_path) {
  std::ofstream out(out_path);
  if (!out) throw InputError("cannot write " + out_path);
  out << "F_n,protocol,success,fidelity,p_n,p_e\n";
  for (int i = 0; i < fn_steps; ++i) {
    double fn = fn_lo + (fn_hi - fn_lo) * (fn_steps == 1 ? 0 : double(i) / (fn_steps - 1));
    auto in = BellDiagonalState::werner(1.0 - fn);
    for (uint32_t copies : {2u, 4u, 8u, 16u}) {
      auto o = concatenate_dejmps(in, copies);
      auto [pn, pe] = tradeoff_point(o);
      out << fn << ",cdejmps" << copies << ',' << o.success_prob << ','
          << o.output.fidelity() << ',' << pn << ',' << pe << "\n";
    }
    auto policies = five_to_one_policies(in);
    for (std::size_t k = 0; k < policies.size(); ++k) {
      auto o = five_to_one(in, policies[k]);
      auto [pn, pe] = tradeoff_point(o);
      out << fn << ",five_to_one/" << k << ',' << o.success_prob << ','
          << o.output.fidelity() << ',' << pn << ',' << pe << "\n";
    }
  }
  std::cout << "overlay " << out_path << "\n";
  return 0;
}

int cmd_fidelity(const std::string& lattice, uint32_t parties, double p_o, double pn_lo,
                 double pn_hi, int steps, const std::string& mode_str) {
  auto u = builtin(lattice);
  GhzMode mode = mode_str == "fusion" ? GhzMode::fusion : GhzMode::direct;
  std::cout << "p_n_prime,fidelity\n";
  for (int i = 0; i < steps; ++i) {
    double pn = pn_lo + (pn_hi - pn_lo) * (steps == 1 ? 0 : double(i) / (steps - 1));
    NoiseParams np;
    np.p_g = p_o;
    np.p_m = p_o;
    np.p_p = p_o;
    np.p_n_prime = pn;
    np.p_n = pn;
    std::cout << pn << ',' << stabilizer_fidelity(u, parties, np, mode) << "\n";
  }
  return 0;
}

SyndromeGraph read_graph_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw InputError("cannot open graph file " + path);
  SyndromeGraph g;
  std::string line;
  uint32_t n_nodes = 0;
  bool has_boundary = false;
  std::vector<std::pair<uint32_t, uint32_t>> edges;
  while (std::getline(f, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string kw;
    if (!(ls >> kw)) continue;
    if (kw == "nodes") {
      ls >> n_nodes;
      std::string b;
      if (ls >> b && b == "boundary") has_boundary = true;
    } else if (kw == "edge") {
      uint32_t u, v;
      if (!(ls >> u >> v)) throw InputError("bad edge line in " + path);
      edges.push_back({u, v});
    } else {
      throw InputError("unknown keyword '" + kw + "' in " + path);
    }
  }
  g.n_nodes = n_nodes;
  g.has_boundary = has_boundary;
  for (auto [u, v] : edges) {
    if (u >= n_nodes || v >= n_nodes) throw InputError("edge endpoint out of range");
    g.edge_u.push_back(u);
    g.edge_v.push_back(v);
    g.qubit_of_edge.push_back(g.qubit_of_edge.size());
  }
  g.edge_of_qubit.resize(edges.size());
  for (uint32_t i = 0; i < edges.size(); ++i) g.edge_of_qubit[i] = i;
  for (int a = 0; a < 3; ++a) g.edge_cross[a].assign(edges.size(), 0);
  g.adj_ptr.assign(g.n_nodes + 1, 0);
  for (auto [u, v] : edges) {
    g.adj_ptr[u + 1]++;
    g.adj_ptr[v + 1]++;
  }
  for (uint32_t n = 0; n < g.n_nodes; ++n) g.adj_ptr[n + 1] += g.adj_ptr[n];
  g.adj_edge.resize(g.adj_ptr.back());
  g.adj_other.resize(g.adj_ptr.back());
  std::vector<uint32_t> fill(g.n_nodes, 0);
  for (uint32_t i = 0; i < edges.size(); ++i) {
    auto [u, v] = edges[i];
    g.adj_edge[g.adj_ptr[u] + fill[u]] = i;
    g.adj_other[g.adj_ptr[u] + fill[u]++] = v;
    g.adj_edge[g.adj_ptr[v] + fill[v]] = i;
    g.adj_other[g.adj_ptr[v] + fill[v]++] = u;
  }
  return g;
}

std::vector<uint32_t> read_id_file(const std::string& path) {
  std::vector<uint32_t> out;
  if (path.empty()) return out;
  std::ifstream f(path);
  if (!f) throw InputError("cannot open " + path);
  uint32_t v;
  while (f >> v) out.push_back(v);
  return out;
}

int cmd_decode(const std::string& graph_path, const std::string& defects_path,
               const std::string& erasures_path, const std::string& out_path) {
  SyndromeGraph g = read_graph_file(graph_path);
  auto defects = read_id_file(defects_path);
  auto erasures = read_id_file(erasures_path);
  UnionFindDecoder dec(g);
  std::vector<uint32_t> corr;
  dec.decode(defects, erasures, corr);
  std::ostream* out = &std::cout;
  std::ofstream file;
  if (!out_path.empty()) {
    file.open(out_path);
    if (!file) throw InputError("cannot write " + out_path);
    out = &file;
  }
  for (uint32_t e : corr) (*out) << e << "\n";
  return 0;
}

void export_graph(const SyndromeGraph& g, const std::string& path) {
  std::ofstream f(path);
  if (!f) throw InputError("cannot write " + path);
  f << "nodes " << g.n_nodes << (g.has_boundary ? " boundary" : "") << "\n";
  for (std::size_t e = 0; e < g.n_edges(); ++e)
    f << "edge " << g.edge_u[e] << ' ' << g.edge_v[e] << "\n";
}

int cmd_validate(const std::string& lattice, const std::string& cell_file,
                 std::vector<int> dims, std::vector<std::string> bc_names,
                 const std::string& export_dir) {
  UnitCellComplex u;
  if (!cell_file.empty()) {
    std::ifstream f(cell_file);
    if (!f) throw InputError("cannot open " + cell_file);
    std::stringstream buf;
    buf << f.rdbuf();
    u = UnitCellComplex::parse(buf.str());
  } else {
    u = builtin(lattice);
  }
  auto violations = u.validate();
  if (!violations.empty()) {
    for (const auto& v : violations) std::cout << "violation: " << v << "\n";
    return 4;
  }
  auto val = u.valency();
  std::cout << "valid: " << u.name << " sizes " << u.sizes[3] << ' ' << u.sizes[2] << ' '
            << u.sizes[1] << ' ' << u.sizes[0]
            << (val.regular ? " regular valency " + std::to_string(val.z) : " irregular")
            << (isomorphic(u, u.dualize()) ? ", self-dual" : ", not self-dual") << "\n";
  if (!dims.empty() || !export_dir.empty()) {
    std::array<int, 3> d{4, 4, 4};
    for (std::size_t i = 0; i < dims.size() && i < 3; ++i) d[i] = dims[i];
    std::array<AxisBoundary, 3> bc{AxisBoundary::periodic, AxisBoundary::periodic,
                                   AxisBoundary::periodic};
    for (std::size_t i = 0; i < bc_names.size() && i < 3; ++i)
      bc[i] = axis_boundary_from_string(bc_names[i]);
    auto c = embed(u, d, bc);
    c.check_boundaries();
    std::cout << "embedding " << d[0] << 'x' << d[1] << 'x' << d[2]
              << " ok: face qubits " << c.alive_count[2] << ", edge qubits "
              << c.alive_count[1] << "\n";
    if (!export_dir.empty() && u.dim == 3) {
      std::filesystem::create_directories(export_dir);
      export_graph(syndrome_graph(c, 0), export_dir + "/primal.graph");
      export_graph(syndrome_graph(c, 1), export_dir + "/dual.graph");
      std::cout << "graphs exported to " << export_dir << "\n";
    }
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"3D cluster-state fault-tolerance laboratory"};
  app.require_subcommand(1);

  std::string config, out_override;
  uint64_t seed_override = 0;
  int workers_override = -1;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--config", config, "experiment config file")->required();
    cmd->add_option("--seed", seed_override, "override the base seed");
    cmd->add_option("--workers", workers_override, "worker threads (0 = all)");
    cmd->add_option("--out", out_override, "output path prefix");
  };
  auto* threshold = app.add_subcommand("threshold", "sweep one rate and fit a threshold");
  add_common(threshold);
  auto* region = app.add_subcommand("region", "fault-tolerant region over fixed-ratio rays");
  add_common(region);

  auto* overlay = app.add_subcommand("distill-overlay",
                                     "distillation trade-off curves for region plots");
  double fn_lo = 0.93, fn_hi = 0.98;
  int fn_steps = 21;
  std::string overlay_out = "distill_overlay.csv";
  overlay->add_option("--fn-lo", fn_lo, "lowest input Werner fidelity");
  overlay->add_option("--fn-hi", fn_hi, "highest input Werner fidelity");
  overlay->add_option("--fn-steps", fn_steps, "sweep points");
  overlay->add_option("--out", overlay_out, "output CSV");

  auto* fidelity = app.add_subcommand("fidelity", "single-face stabilizer fidelity");
  std::string fid_lattice = "cubic", fid_mode = "direct";
  uint32_t fid_parties = 1;
  double fid_po = 0.0, fid_lo = 0.0, fid_hi = 0.2;
  int fid_steps = 21;
  fidelity->add_option("--lattice", fid_lattice, "builtin lattice");
  fidelity->add_option("--parties", fid_parties, "1 monolithic, 2 Bell, n GHZ");
  fidelity->add_option("--p-o", fid_po, "common circuit rate");
  fidelity->add_option("--pn-lo", fid_lo, "network rate sweep start");
  fidelity->add_option("--pn-hi", fid_hi, "network rate sweep end");
  fidelity->add_option("--steps", fid_steps, "sweep points");
  fidelity->add_option("--ghz", fid_mode, "direct or fusion");

  auto* decode = app.add_subcommand("decode", "decode an edge-list graph instance");
  std::string dg, dd, de, dout;
  decode->add_option("--graph", dg, "graph file")->required();
  decode->add_option("--defects", dd, "defect node ids");
  decode->add_option("--erasures", de, "erased edge ids");
  decode->add_option("--out", dout, "correction output file (default stdout)");

  auto* validate = app.add_subcommand("validate", "check a unit cell and its embedding");
  std::string vlat = "cubic", vcell, vexport;
  std::vector<int> vdims;
  std::vector<std::string> vbc;
  validate->add_option("--lattice", vlat, "builtin lattice name");
  validate->add_option("--cell", vcell, "unit-cell definition file");
  validate->add_option("--dims", vdims, "embedding dims (three values)");
  validate->add_option("--boundary", vbc, "axis boundaries (periodic|smooth|rough)");
  validate->add_option("--export-graphs", vexport, "write syndrome graphs to a directory");

  CLI11_PARSE(app, argc, argv);

  try {
    if (threshold->parsed())
      return cmd_threshold(config, seed_override, workers_override, out_override);
    if (region->parsed())
      return cmd_region(config, seed_override, workers_override, out_override);
    if (overlay->parsed()) return cmd_distill_overlay(fn_lo, fn_hi, fn_steps, overlay_out);
    if (fidelity->parsed())
      return cmd_fidelity(fid_lattice, fid_parties, fid_po, fid_lo, fid_hi, fid_steps,
                          fid_mode);
    if (decode->parsed()) return cmd_decode(dg, dd, de, dout);
    if (validate->parsed()) return cmd_validate(vlat, vcell, vdims, vbc, vexport);
  } catch (const std::exception& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return exit_code_for(ex);
  }
  return 0;
}
