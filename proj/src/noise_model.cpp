#include "mbqc/noise_model.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>

namespace mbqc {

NoiseModel noise_model_from_string(const std::string& s) {
  if (s == "phenomenological") return NoiseModel::phenomenological;
  if (s == "phenomenological_weighted") return NoiseModel::phenomenological_weighted;
  if (s == "monolithic") return NoiseModel::monolithic;
  if (s == "distributed") return NoiseModel::distributed;
  throw ConfigError("unknown noise model '" + s + "'");
}

std::string to_string(NoiseModel m) {
  switch (m) {
    case NoiseModel::phenomenological: return "phenomenological";
    case NoiseModel::phenomenological_weighted: return "phenomenological_weighted";
    case NoiseModel::monolithic: return "monolithic";
    case NoiseModel::distributed: return "distributed";
  }
  return "?";
}

// ---------------------------------------------------------------------------
// Gate orderings

namespace {

struct Incidence {
  uint32_t face, edge;
  MillerIndex shift;
  uint32_t index;  // position in bounds[2] order
};

std::vector<Incidence> incidences_of(const UnitCellComplex& u) {
  std::vector<Incidence> out;
  uint32_t k = 0;
  for (const auto& e : u.bounds[2]) {
    out.push_back({e.source, e.target, e.shift, k});
    ++k;
  }
  return out;
}

// Proper edge coloring of the face/edge incidence multigraph with exactly
// max-degree colors (Koenig): repeated alternating-path recoloring.
GateOrdering koenig_coloring(const UnitCellComplex& u,
                             const std::vector<uint32_t>& order) {
  auto inc = incidences_of(u);
  auto val = u.valency();
  uint32_t colors = 0;
  for (uint32_t v : val.face_valency) colors = std::max(colors, v);
  for (uint32_t v : val.edge_valency) colors = std::max(colors, v);

  const uint32_t NONE = UINT32_MAX;
  std::vector<uint32_t> color(inc.size(), NONE);
  // face_color[f][c] / edge_color[e][c] = incidence using color c (or NONE)
  std::vector<std::vector<uint32_t>> fc(u.sizes[2], std::vector<uint32_t>(colors, NONE));
  std::vector<std::vector<uint32_t>> ec(u.sizes[1], std::vector<uint32_t>(colors, NONE));

  auto free_at = [&](const std::vector<uint32_t>& used) {
    for (uint32_t c = 0; c < colors; ++c)
      if (used[c] == NONE) return c;
    return NONE;
  };

  for (uint32_t pos : order) {
    const auto& in = inc[pos];
    uint32_t cf = free_at(fc[in.face]);
    uint32_t ce = free_at(ec[in.edge]);
    if (cf == NONE || ce == NONE)
      throw InternalError("edge coloring: no free color (degree bound broken)");
    if (cf == ce) {
      color[pos] = cf;
      fc[in.face][cf] = pos;
      ec[in.edge][cf] = pos;
      continue;
    }
    // Alternate cf/ce path from the edge side; swap colors along it, freeing
    // cf at the edge.
    uint32_t e = in.edge;
    uint32_t want = cf;    // color to free at e
    uint32_t other = ce;   // color free at e
    std::vector<std::pair<bool, uint32_t>> path;  // (is_face_step, incidence)
    uint32_t cur_inc = ec[e][want];
    bool face_side = true;
    while (cur_inc != NONE) {
      path.push_back({face_side, cur_inc});
      uint32_t node_color = face_side ? other : want;
      cur_inc = face_side ? fc[inc[cur_inc].face][node_color]
                          : ec[inc[cur_inc].edge][node_color];
      // guard: the path alternates and cannot revisit; length is bounded
      face_side = !face_side;
      if (path.size() > inc.size() * 2 + 4)
        throw InternalError("edge coloring: alternating path does not terminate");
    }
    // swap want/other along the path
    for (auto& [fs, pi] : path) {
      uint32_t c0 = color[pi];
      fc[inc[pi].face][c0] = NONE;
      ec[inc[pi].edge][c0] = NONE;
      color[pi] = (c0 == want) ? other : want;
      (void)fs;
    }
    for (auto& [fs, pi] : path) {
      fc[inc[pi].face][color[pi]] = pi;
      ec[inc[pi].edge][color[pi]] = pi;
      (void)fs;
    }
    if (ec[e][want] != NONE || fc[in.face][want] != NONE)
      throw InternalError("edge coloring: recoloring failed to free the color");
    color[pos] = want;
    fc[in.face][want] = pos;
    ec[in.edge][want] = pos;
  }

  GateOrdering g;
  g.n_rounds = colors;
  g.round_of_incidence.assign(inc.size(), 0);
  for (std::size_t i = 0; i < inc.size(); ++i) g.round_of_incidence[i] = color[i];
  return g;
}

// Hand-made rotationally consistent coloring for the cubic cell: gates step
// around every face in polygon order.
GateOrdering cubic_clockwise(const UnitCellComplex& u) {
  GateOrdering g;
  g.name = "clockwise";
  g.n_rounds = 4;
  auto inc = incidences_of(u);
  g.round_of_incidence.assign(inc.size(), 0);
  auto idx2 = [&](const char* l) { return u.element_index(2, l); };
  auto idx1 = [&](const char* l) { return u.element_index(1, l); };
  std::map<std::tuple<uint32_t, uint32_t, MillerIndex>, uint32_t> want;
  auto put = [&](const char* f, const char* e, MillerIndex s, uint32_t c) {
    want[{idx2(f), idx1(e), s}] = c;
  };
  // south, east, north, west per face (x -> y -> z cyclic)
  put("f_z", "e_x", {0, 0, 0}, 0);
  put("f_z", "e_y", {1, 0, 0}, 1);
  put("f_z", "e_x", {0, 1, 0}, 2);
  put("f_z", "e_y", {0, 0, 0}, 3);
  put("f_x", "e_y", {0, 0, 0}, 0);
  put("f_x", "e_z", {0, 1, 0}, 1);
  put("f_x", "e_y", {0, 0, 1}, 2);
  put("f_x", "e_z", {0, 0, 0}, 3);
  put("f_y", "e_z", {0, 0, 0}, 0);
  put("f_y", "e_x", {0, 0, 1}, 1);
  put("f_y", "e_z", {1, 0, 0}, 2);
  put("f_y", "e_x", {0, 0, 0}, 3);
  for (const auto& in : inc) {
    auto it = want.find({in.face, in.edge, in.shift});
    if (it == want.end()) throw InternalError("cubic clockwise preset incomplete");
    g.round_of_incidence[in.index] = it->second;
  }
  return g;
}

// Round permutation that visits the color classes in interleaved order
// (0, 2, 4, ..., 1, 3, 5, ...); on the cubic clockwise coloring this is the
// zigzag sequence jumping to opposite face sides first.
GateOrdering interleave_rounds(GateOrdering g) {
  uint32_t n = g.n_rounds;
  std::vector<uint32_t> new_round(n);
  uint32_t r = 0;
  for (uint32_t c = 0; c < n; c += 2) new_round[c] = r++;
  for (uint32_t c = 1; c < n; c += 2) new_round[c] = r++;
  for (auto& c : g.round_of_incidence) c = new_round[c];
  return g;
}

}  // namespace

GateOrdering make_ordering(const UnitCellComplex& u, const std::string& preset) {
  const bool is_cubic = u.name == "cubic";
  GateOrdering base;
  if (is_cubic) {
    base = cubic_clockwise(u);
  } else {
    // polygon-guided processing order, then Koenig recoloring
    std::vector<uint32_t> order;
    auto inc = incidences_of(u);
    for (uint32_t f = 0; f < u.sizes[2]; ++f) {
      auto cyc = face_boundary_cycle(u, f);
      for (const auto& end : cyc)
        for (const auto& in : inc)
          if (in.face == f && in.edge == end.edge && in.shift == end.at)
            order.push_back(in.index);
    }
    base = koenig_coloring(u, order);
    base.name = "clockwise";
  }
  if (preset == "clockwise") {
    check_ordering(u, base);
    return base;
  }
  if (preset == "zigzag") {
    GateOrdering g = interleave_rounds(base);
    g.name = "zigzag";
    check_ordering(u, g);
    return g;
  }
  throw ConfigError("unknown gate ordering preset '" + preset + "'");
}

std::vector<std::string> ordering_presets(const UnitCellComplex&) {
  return {"clockwise", "zigzag"};
}

void check_ordering(const UnitCellComplex& u, const GateOrdering& g) {
  auto inc = incidences_of(u);
  if (g.round_of_incidence.size() != inc.size())
    throw StructuralError("gate ordering does not cover the incidence list");
  std::set<std::pair<uint32_t, uint32_t>> seen_f, seen_e;
  for (const auto& in : inc) {
    uint32_t c = g.round_of_incidence[in.index];
    if (c >= g.n_rounds) throw StructuralError("gate round out of range");
    if (!seen_f.insert({in.face, c}).second)
      throw StructuralError("face touched twice in one round");
    if (!seen_e.insert({in.edge, c}).second)
      throw StructuralError("edge touched twice in one round");
  }
}

// ---------------------------------------------------------------------------
// Characterization

namespace {

struct SiteBuilder {
  FaultSite site;
  void component(double p, std::vector<FaultEffect> effects) {
    if (p <= 0) return;
    site.fire_prob += p;
    site.comp_prob.push_back(p);
    for (auto& e : effects) site.effects.push_back(e);
    site.comp_off.push_back(static_cast<uint32_t>(site.effects.size()));
  }
  FaultSite finish(std::vector<FaultEffect> participants) {
    site.participants = std::move(participants);
    std::vector<uint32_t> off{0};
    for (uint32_t o : site.comp_off) off.push_back(o);
    site.comp_off = std::move(off);
    return std::move(site);
  }
};

constexpr int kPauliX = 1;
constexpr int kPauliZ = 2;
constexpr int kPauliY = 3;

}  // namespace

FaultSiteModel characterize(const UnitCellComplex& base, const DistributionPlan* plan,
                            const GateOrdering* ordering, NoiseModel kind,
                            const NoiseParams& params, GhzMode ghz_mode) {
  params.check();
  FaultSiteModel model;
  model.kind = kind;
  model.params = params;
  model.cell_id = base.id();

  auto val = base.valency();
  const uint32_t nf = base.sizes[2];
  const uint32_t ne = base.sizes[1];

  if (kind == NoiseModel::phenomenological ||
      kind == NoiseModel::phenomenological_weighted) {
    bool weighted = kind == NoiseModel::phenomenological_weighted;
    auto add_qubit = [&](uint8_t side, uint32_t elem, uint32_t z) {
      double scale = weighted ? double(z) : 1.0;
      double pm = params.p_m * scale;
      double pe = params.p_e * scale;
      if (pm > 1 || pe > 1)
        throw InputError("weighted phenomenological rate exceeds one");
      if (pm > 0) {
        SiteBuilder b;
        b.component(pm, {{side, elem, MillerIndex()}});
        model.sites.push_back(b.finish({{side, elem, MillerIndex()}}));
      }
      if (pe > 0) {
        ErasureSite e;
        e.prob = pe;
        e.qubits = {{side, elem, MillerIndex()}};
        e.participants = e.qubits;
        model.erasures.push_back(std::move(e));
      }
    };
    for (uint32_t f = 0; f < nf; ++f) add_qubit(0, f, val.face_valency[f]);
    for (uint32_t e = 0; e < ne; ++e) add_qubit(1, e, val.edge_valency[e]);
    return model;
  }

  // Circuit-level models.
  if (!ordering) throw InputError("characterize: circuit-level models need an ordering");
  check_ordering(base, *ordering);
  const bool distributed = kind == NoiseModel::distributed;
  DistributionPlan trivial;
  if (!plan) {
    trivial.faces.assign(nf, {});
    trivial.edges.assign(ne, {});
    for (const auto& e : base.bounds[2]) {
      trivial.faces[e.source].arc_of_incidence.push_back(0);
      trivial.edges[e.target].arc_of_incidence.push_back(0);
    }
    plan = &trivial;
  }
  if (distributed && !plan->any_split() && params.p_n > 0)
    throw InputError("distributed model without any split groups");

  auto inc = incidences_of(base);
  // per-element incidence slots, in bounds[2] order (matches the plan)
  std::vector<std::vector<uint32_t>> finc(nf), einc(ne);
  {
    std::vector<uint32_t> fslot(nf, 0), eslot(ne, 0);
    for (const auto& in : inc) {
      finc[in.face].push_back(in.index);
      einc[in.edge].push_back(in.index);
      ++fslot[in.face];
      ++eslot[in.edge];
    }
  }
  auto face_arc = [&](uint32_t f, uint32_t k) {
    const auto& a = plan->faces[f].arc_of_incidence;
    return a.empty() ? 0u : a[k];
  };
  auto edge_arc = [&](uint32_t e, uint32_t k) {
    const auto& a = plan->edges[e].arc_of_incidence;
    return a.empty() ? 0u : a[k];
  };
  auto slot_of = [&](const std::vector<uint32_t>& list, uint32_t index) {
    for (uint32_t k = 0; k < list.size(); ++k)
      if (list[k] == index) return k;
    throw InternalError("incidence slot lookup failed");
  };

  // Propagated flips of an X component sitting on one side of a gate from
  // round `after` onward (or from the state preparation when after < 0).
  auto face_x_effects = [&](uint32_t f, uint32_t sub, int after) {
    std::vector<FaultEffect> out;
    for (uint32_t k = 0; k < finc[f].size(); ++k) {
      const auto& in = inc[finc[f][k]];
      if (face_arc(f, k) != sub) continue;
      if (static_cast<int>(ordering->round_of_incidence[in.index]) <= after) continue;
      out.push_back({1, in.edge, in.shift});
    }
    return out;
  };
  auto edge_x_effects = [&](uint32_t e, uint32_t sub, int after, MillerIndex edge_off) {
    std::vector<FaultEffect> out;
    for (uint32_t k = 0; k < einc[e].size(); ++k) {
      const auto& in = inc[einc[e][k]];
      if (edge_arc(e, k) != sub) continue;
      if (static_cast<int>(ordering->round_of_incidence[in.index]) <= after) continue;
      // face instance carrying this gate sits at -shift relative to the edge
      FaultEffect fe{0, in.face, edge_off - in.shift};
      out.push_back(fe);
    }
    return out;
  };

  // Entangled (or product) state preparation per parent qubit.
  auto add_state_site = [&](uint8_t side, uint32_t elem, uint32_t arity) {
    if (arity == 1) {
      if (params.p_p > 0) {
        SiteBuilder b;
        b.component(params.p_p, {{side, elem, MillerIndex()}});
        model.sites.push_back(b.finish({{side, elem, MillerIndex()}}));
      }
      return;
    }
    GhzDiagonalState diag;
    if (arity == 2) {
      diag = GhzDiagonalState::from_bell(BellDiagonalState::werner(params.p_n));
    } else if (ghz_mode == GhzMode::fusion) {
      std::vector<BellDiagonalState> ins(arity - 1, BellDiagonalState::werner(params.p_n));
      diag = ghz_fusion(ins, arity, params);
    } else {
      diag = GhzDiagonalState::direct(arity, params.p_n_prime);
    }
    SiteBuilder b;
    for (uint32_t pat = 1; pat < diag.p.size(); ++pat) {
      if (diag.p[pat] <= 0) continue;
      std::vector<FaultEffect> eff;
      if (pat & 1u) eff.push_back({side, elem, MillerIndex()});  // Z on member 0
      for (uint32_t i = 1; i < arity; ++i) {
        if (!((pat >> i) & 1u)) continue;  // X on member i, before every gate
        auto prop = side == 0 ? face_x_effects(elem, i, -1)
                              : edge_x_effects(elem, i, -1, MillerIndex());
        eff.insert(eff.end(), prop.begin(), prop.end());
      }
      b.component(diag.p[pat], std::move(eff));
    }
    model.sites.push_back(b.finish({{side, elem, MillerIndex()}}));

    // link erasure: the group needs arity-1 heralded pairs
    if (params.p_e > 0) {
      ErasureSite e;
      e.prob = 1.0 - std::pow(1.0 - params.p_e, double(arity - 1));
      e.qubits = {{side, elem, MillerIndex()}};
      e.participants = e.qubits;
      model.erasures.push_back(std::move(e));
    }
  };

  for (uint32_t f = 0; f < nf; ++f)
    add_state_site(0, f, distributed ? plan->faces[f].arity : 1);
  for (uint32_t e = 0; e < ne; ++e)
    add_state_site(1, e, distributed ? plan->edges[e].arity : 1);

  // Two-qubit depolarizing after every CZ.
  if (params.p_g > 0) {
    for (const auto& in : inc) {
      int round = static_cast<int>(ordering->round_of_incidence[in.index]);
      uint32_t fsub = face_arc(in.face, slot_of(finc[in.face], in.index));
      uint32_t esub = edge_arc(in.edge, slot_of(einc[in.edge], in.index));
      auto fx = face_x_effects(in.face, fsub, round);
      auto ex = edge_x_effects(in.edge, esub, round, in.shift);
      SiteBuilder b;
      for (int pa = 0; pa < 4; ++pa)
        for (int pb = 0; pb < 4; ++pb) {
          if (pa == 0 && pb == 0) continue;
          std::vector<FaultEffect> eff;
          if (pa == kPauliZ || pa == kPauliY) eff.push_back({0, in.face, MillerIndex()});
          if (pa == kPauliX || pa == kPauliY) eff.insert(eff.end(), fx.begin(), fx.end());
          if (pb == kPauliZ || pb == kPauliY) eff.push_back({1, in.edge, in.shift});
          if (pb == kPauliX || pb == kPauliY) eff.insert(eff.end(), ex.begin(), ex.end());
          b.component(params.p_g / 15.0, std::move(eff));
        }
      model.sites.push_back(
          b.finish({{0, in.face, MillerIndex()}, {1, in.edge, in.shift}}));
    }
  }

  // Measurement flips; split qubits measure every sub-qubit and the group
  // parity flips on an odd number of errors.
  if (params.p_m > 0) {
    auto add_meas = [&](uint8_t side, uint32_t elem, uint32_t arity) {
      double p = 0.5 * (1.0 - std::pow(1.0 - 2.0 * params.p_m, double(arity)));
      SiteBuilder b;
      b.component(p, {{side, elem, MillerIndex()}});
      model.sites.push_back(b.finish({{side, elem, MillerIndex()}}));
    };
    for (uint32_t f = 0; f < nf; ++f)
      add_meas(0, f, distributed ? plan->faces[f].arity : 1);
    for (uint32_t e = 0; e < ne; ++e)
      add_meas(1, e, distributed ? plan->edges[e].arity : 1);
  }

  return model;
}

// ---------------------------------------------------------------------------
// Sampling

namespace {

struct Mapper {
  const CrystalComplex& c;

  // -1 when the effect leaves an open axis
  int64_t target_point(int64_t point, const MillerIndex& off) const {
    auto xyz = c.point_coords(point);
    int v[3] = {xyz[0] + off.a, xyz[1] + off.b, xyz[2] + off.c};
    for (int a = 0; a < 3; ++a) {
      int n = c.dims[a];
      if (v[a] < 0 || v[a] >= n) {
        if (c.boundary[a] != AxisBoundary::periodic) return -1;
        v[a] = (v[a] % n + n) % n;
      }
    }
    return c.point_index(v[0], v[1], v[2]);
  }

  // full qubit index or UINT64_MAX when absent
  uint64_t locate(int64_t point, const FaultEffect& e) const {
    int64_t tp = target_point(point, e.off);
    if (tp < 0) return UINT64_MAX;
    int d = e.side == 0 ? 2 : 1;
    uint64_t g = c.gindex(d, e.elem, tp);
    if (!c.alive[d][g]) return UINT64_MAX;
    return g;
  }

  bool all_alive(int64_t point, const std::vector<FaultEffect>& parts) const {
    for (const auto& p : parts)
      if (locate(point, p) == UINT64_MAX) return false;
    return true;
  }
};

}  // namespace

void sample_errors_into(const FaultSiteModel& model, const CrystalComplex& crystal,
                        Rng& rng, ErrorSample& out) {
  if (model.cell_id != crystal.cell.id())
    throw InputError("sample_errors: model characterized for a different unit cell");
  if (out.primal.size() != crystal.total[2]) {
    out.primal = crystal.zero_chain(2);
    out.dual = crystal.zero_chain(1);
  } else {
    out.primal.clear();
    out.dual.clear();
  }
  out.erased_primal.clear();
  out.erased_dual.clear();

  Mapper map{crystal};
  const uint64_t n = static_cast<uint64_t>(crystal.npoints);

  for (const auto& site : model.sites) {
    if (site.fire_prob <= 0) continue;
    uint64_t cell = rng.geometric_skip(site.fire_prob);
    while (cell < n) {
      if (map.all_alive(static_cast<int64_t>(cell), site.participants)) {
        // pick the component
        double u = rng.next_double() * site.fire_prob;
        std::size_t k = 0;
        double acc = 0;
        for (; k + 1 < site.comp_prob.size(); ++k) {
          acc += site.comp_prob[k];
          if (u < acc) break;
        }
        for (uint32_t i = site.comp_off[k]; i < site.comp_off[k + 1]; ++i) {
          uint64_t q = map.locate(static_cast<int64_t>(cell), site.effects[i]);
          if (q == UINT64_MAX) continue;
          if (site.effects[i].side == 0)
            out.primal.flip(q);
          else
            out.dual.flip(q);
        }
      }
      uint64_t skip = rng.geometric_skip(site.fire_prob);
      if (skip == UINT64_MAX) break;
      cell += 1 + skip;
    }
  }
  for (const auto& er : model.erasures) {
    if (er.prob <= 0) continue;
    uint64_t cell = rng.geometric_skip(er.prob);
    while (cell < n) {
      if (map.all_alive(static_cast<int64_t>(cell), er.participants)) {
        for (const auto& q : er.qubits) {
          uint64_t g = map.locate(static_cast<int64_t>(cell), q);
          if (g == UINT64_MAX) continue;
          // the outcome is lost: the record carries a fair flip
          bool flip = rng.bernoulli(0.5);
          if (q.side == 0) {
            out.erased_primal.push_back(static_cast<uint32_t>(g));
            if (flip) out.primal.flip(g);
          } else {
            out.erased_dual.push_back(static_cast<uint32_t>(g));
            if (flip) out.dual.flip(g);
          }
        }
      }
      uint64_t skip = rng.geometric_skip(er.prob);
      if (skip == UINT64_MAX) break;
      cell += 1 + skip;
    }
  }
}

ErrorSample sample_errors(const FaultSiteModel& model, const CrystalComplex& crystal,
                          Rng& rng) {
  ErrorSample out;
  sample_errors_into(model, crystal, rng, out);
  return out;
}

double analytic_flip_marginal(const FaultSiteModel& model, const CrystalComplex& crystal,
                              int side, uint64_t qubit) {
  Mapper map{crystal};
  double keep = 1.0;  // product of (1 - 2 P(site flips qubit an odd number of times))
  const int64_t n = crystal.npoints;
  for (const auto& site : model.sites) {
    for (int64_t cell = 0; cell < n; ++cell) {
      if (!map.all_alive(cell, site.participants)) continue;
      double flip = 0;
      for (std::size_t k = 0; k < site.comp_prob.size(); ++k) {
        int parity = 0;
        for (uint32_t i = site.comp_off[k]; i < site.comp_off[k + 1]; ++i) {
          if (site.effects[i].side != side) continue;
          if (map.locate(cell, site.effects[i]) == qubit) parity ^= 1;
        }
        if (parity) flip += site.comp_prob[k];
      }
      if (flip > 0) keep *= (1.0 - 2.0 * flip);
    }
  }
  return 0.5 * (1.0 - keep);
}

// ---------------------------------------------------------------------------
// Single-face stabilizer fidelity (closed form)

double stabilizer_fidelity(const UnitCellComplex& lattice, uint32_t parties,
                           const NoiseParams& params, GhzMode mode) {
  params.check();
  auto val = lattice.valency();
  if (!val.regular) throw InputError("stabilizer_fidelity: lattice must be regular");
  const uint32_t z = val.z;
  if (parties < 1 || parties > z)
    throw InputError("stabilizer_fidelity: bad party count");

  // probability that the prepared face state carries a flip of the X string
  double p_state;
  if (parties == 1) {
    p_state = params.p_p;
  } else {
    GhzDiagonalState diag;
    if (parties == 2) {
      diag = mode == GhzMode::direct
                 ? GhzDiagonalState::direct(2, params.p_n_prime)
                 : GhzDiagonalState::from_bell(BellDiagonalState::werner(params.p_n));
    } else if (mode == GhzMode::direct) {
      diag = GhzDiagonalState::direct(parties, params.p_n_prime);
    } else {
      std::vector<BellDiagonalState> ins(parties - 1,
                                         BellDiagonalState::werner(params.p_n));
      diag = ghz_fusion(ins, parties, params);
    }
    p_state = 0;
    for (uint32_t pat = 1; pat < diag.p.size(); ++pat)
      if (pat & 1u) p_state += diag.p[pat];
  }

  // flip sources: the state itself, 8/15 of the depolarizing components per
  // CZ, and one measurement flip per support qubit
  double prod = (1.0 - 2.0 * p_state);
  prod *= std::pow(1.0 - 2.0 * (8.0 / 15.0) * params.p_g, double(z));
  prod *= std::pow(1.0 - 2.0 * params.p_m, double(parties + z));
  return 0.5 * (1.0 + prod);
}

}  // namespace mbqc
