#include "mbqc/splitting.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "mbqc/builtin_arch.hpp"

namespace mbqc {

namespace {

std::string unique_label(const std::vector<std::string>& taken, std::string base) {
  if (std::find(taken.begin(), taken.end(), base) == taken.end()) return base;
  for (int k = 2;; ++k) {
    std::string cand = base + "~" + std::to_string(k);
    if (std::find(taken.begin(), taken.end(), cand) == taken.end()) return cand;
  }
}

}  // namespace

std::vector<EdgeEnd> vertex_star(const UnitCellComplex& u, uint32_t vertex) {
  std::vector<EdgeEnd> out;
  for (const auto& e : u.bounds[1])
    if (e.target == vertex) out.push_back({e.source, -e.shift});
  std::sort(out.begin(), out.end());
  return out;
}

UnitCellComplex cell_vertex_split(const UnitCellComplex& u, const VertexSplitSpec& spec) {
  if (spec.target_vertex >= u.sizes[0])
    throw InputError("cell_vertex_split: vertex index out of range");
  if (spec.subsets.empty()) throw InputError("cell_vertex_split: no subsets");

  auto star = vertex_star(u, spec.target_vertex);
  std::set<EdgeEnd> star_set(star.begin(), star.end());
  std::set<EdgeEnd> seen;
  for (const auto& sub : spec.subsets)
    for (const auto& end : sub) {
      if (!star_set.count(end))
        throw InputError("cell_vertex_split: subset member " +
                         (u.labels[1].empty() ? std::to_string(end.edge)
                                              : u.labels[1][end.edge]) +
                         end.at.str() + " is not incident on the split vertex");
      if (!seen.insert(end).second)
        throw InputError("cell_vertex_split: overlapping subsets");
    }

  UnitCellComplex r = u;
  r.name = u.name + "+vsplit";
  const uint32_t v0 = spec.target_vertex;
  const uint32_t n = static_cast<uint32_t>(spec.subsets.size());
  const uint32_t nv = r.sizes[0];  // first new vertex index
  const uint32_t ne = r.sizes[1];  // first new edge index
  const std::string vname = r.labels[0][v0];
  for (uint32_t i = 0; i < n; ++i) {
    r.labels[0].push_back(unique_label(r.labels[0], vname + "s" + std::to_string(i + 1)));
    r.labels[1].push_back(unique_label(r.labels[1], vname + "b" + std::to_string(i + 1)));
  }
  r.sizes[0] += n;
  r.sizes[1] += n;

  // Step 2: hand the chosen edge ends to the new vertices.
  for (auto& e : r.bounds[1]) {
    if (e.target != v0) continue;
    EdgeEnd end{e.source, -e.shift};
    for (uint32_t i = 0; i < n; ++i)
      if (std::find(spec.subsets[i].begin(), spec.subsets[i].end(), end) !=
          spec.subsets[i].end()) {
        e.target = nv + i;
        break;
      }
  }
  // Step 3: new edges e_i = (v_i, v_0) at Miller [0].
  for (uint32_t i = 0; i < n; ++i) {
    r.bounds[1].push_back({ne + i, v0, MillerIndex()});
    r.bounds[1].push_back({ne + i, nv + i, MillerIndex()});
  }

  // Step 4: repair the face boundaries. For every face the composed boundary
  // must vanish again; residual hits on a new vertex v_i are cancelled by
  // connecting the face to e_i at the residual's translation.
  std::vector<std::vector<std::pair<uint32_t, MillerIndex>>> edge_verts(r.sizes[1]);
  for (const auto& e : r.bounds[1]) edge_verts[e.source].push_back({e.target, e.shift});

  std::vector<BoundaryEntry> additions;
  for (uint32_t f = 0; f < r.sizes[2]; ++f) {
    std::map<std::pair<uint32_t, MillerIndex>, int> res;
    for (const auto& fe : r.bounds[2]) {
      if (fe.source != f) continue;
      for (const auto& [v, p] : edge_verts[fe.target]) res[{v, fe.shift + p}] ^= 1;
    }
    std::vector<std::pair<uint32_t, MillerIndex>> hits;
    for (const auto& [key, parity] : res)
      if (parity && key.first >= nv && key.first < nv + n) hits.push_back(key);
    for (const auto& [vi, w] : hits) {
      if (!w.in_unit_range())
        throw StructuralError("cell_vertex_split: repair needs Miller " + w.str() +
                              " outside {-1,0,1}^3");
      additions.push_back({f, ne + (vi - nv), w});
      res[{vi, w}] ^= 1;
      res[{v0, w}] ^= 1;
    }
    for (const auto& [key, parity] : res)
      if (parity)
        throw InternalError("cell_vertex_split: repair left nonzero residual at face " +
                            r.labels[2][f] + " vertex " + r.labels[0][key.first] +
                            key.second.str());
  }
  r.bounds[2].insert(r.bounds[2].end(), additions.begin(), additions.end());
  r.normalize();

  auto violations = r.validate();
  if (!violations.empty())
    throw InternalError("cell_vertex_split: result fails validation: " + violations.front());
  return r;
}

UnitCellComplex cell_vertex_split_dual(const UnitCellComplex& u,
                                       const VertexSplitSpec& spec) {
  UnitCellComplex d = u.dualize();
  UnitCellComplex s = cell_vertex_split(d, spec);
  UnitCellComplex r = s.dualize();
  r.name = u.name + "+dsplit";
  return r;
}

std::vector<EdgeEnd> face_boundary_cycle(const UnitCellComplex& u, uint32_t face) {
  if (face >= u.sizes[2]) throw InputError("face index out of range");
  std::vector<EdgeEnd> insts;
  for (const auto& e : u.bounds[2])
    if (e.source == face) insts.push_back({e.target, e.shift});
  if (insts.size() < 2) throw StructuralError("face boundary too small to walk");

  std::vector<std::pair<uint32_t, MillerIndex>> edge_verts_all[2];
  auto endpoints = [&](const EdgeEnd& inst) {
    std::vector<std::pair<uint32_t, MillerIndex>> vs;
    for (const auto& e : u.bounds[1])
      if (e.source == inst.edge) vs.push_back({e.target, inst.at + e.shift});
    if (vs.size() != 2)
      throw StructuralError("face boundary edge is not two-ended");
    return vs;
  };

  // vertex instance -> incident boundary edge slots
  std::map<std::pair<uint32_t, MillerIndex>, std::vector<std::size_t>> at_vertex;
  for (std::size_t k = 0; k < insts.size(); ++k)
    for (const auto& v : endpoints(insts[k])) at_vertex[v].push_back(k);
  for (const auto& [v, ks] : at_vertex)
    if (ks.size() != 2)
      throw StructuralError("face " + u.labels[2][face] +
                            " boundary is not a simple cycle");

  std::vector<EdgeEnd> order;
  std::vector<bool> used(insts.size(), false);
  std::size_t cur = 0;
  auto eps = endpoints(insts[0]);
  auto at = std::min(eps[0], eps[1]);
  for (;;) {
    order.push_back(insts[cur]);
    used[cur] = true;
    auto vs = endpoints(insts[cur]);
    auto next_v = (vs[0] == at) ? vs[1] : vs[0];
    const auto& slots = at_vertex.at(next_v);
    std::size_t nxt = (slots[0] == cur) ? slots[1] : slots[0];
    if (used[nxt]) break;
    at = next_v;
    cur = nxt;
  }
  if (order.size() != insts.size())
    throw StructuralError("face " + u.labels[2][face] + " boundary is disconnected");
  return order;
}

namespace {

// Arc concatenation must traverse the cycle once, in either direction and
// from any starting point. Returns the cycle re-walked to match the arcs.
std::vector<EdgeEnd> align_cycle(const std::vector<EdgeEnd>& cycle,
                                 const std::vector<std::vector<EdgeEnd>>& arcs,
                                 const std::string& what) {
  std::vector<EdgeEnd> flat;
  for (const auto& a : arcs) {
    if (a.empty()) throw InputError(what + ": empty arc");
    flat.insert(flat.end(), a.begin(), a.end());
  }
  if (flat.size() != cycle.size())
    throw InputError(what + ": arcs do not cover the boundary cycle");
  const std::size_t k = cycle.size();
  for (int dir = 0; dir < 2; ++dir) {
    std::vector<EdgeEnd> c = cycle;
    if (dir) std::reverse(c.begin(), c.end());
    for (std::size_t rot = 0; rot < k; ++rot) {
      bool ok = true;
      for (std::size_t i = 0; i < k && ok; ++i) ok = (flat[i] == c[(rot + i) % k]);
      if (ok) {
        std::rotate(c.begin(), c.begin() + static_cast<long>(rot), c.end());
        return c;
      }
    }
  }
  throw InputError(what + ": arcs are not contiguous along the boundary cycle");
}

}  // namespace

std::pair<UnitCellComplex, PartyMap> face_edge_split(const UnitCellComplex& u,
                                                     const FaceSplitSpec& spec) {
  const uint32_t f = spec.target_face;
  const uint32_t n = static_cast<uint32_t>(spec.arcs.size());
  if (n < 2) throw InputError("face_edge_split: need at least two arcs");
  auto cycle = face_boundary_cycle(u, f);
  auto walk = align_cycle(cycle, spec.arcs, "face_edge_split(" + u.labels[2][f] + ")");

  // Polygon vertices: verts[i] sits before walk[i].
  const std::size_t k = walk.size();
  std::vector<std::pair<uint32_t, MillerIndex>> verts(k);
  {
    auto endpoints = [&](const EdgeEnd& inst) {
      std::vector<std::pair<uint32_t, MillerIndex>> vs;
      for (const auto& e : u.bounds[1])
        if (e.source == inst.edge) vs.push_back({e.target, inst.at + e.shift});
      return vs;
    };
    // Orient: verts[i+1] must be an endpoint shared by walk[i] and walk[i+1].
    auto e0 = endpoints(walk[0]);
    auto e1 = endpoints(walk[1]);
    verts[1] = (e0[0] == e1[0] || e0[0] == e1[1]) ? e0[0] : e0[1];
    verts[0] = (verts[1] == e0[0]) ? e0[1] : e0[0];
    for (std::size_t i = 1; i + 1 < k; ++i) {
      auto vs = endpoints(walk[i]);
      verts[i + 1] = (vs[0] == verts[i]) ? vs[1] : vs[0];
    }
  }

  UnitCellComplex r = u;
  r.name = u.name + "+fsplit";
  PartyMap pm;
  SplitGroup g;
  g.side = 0;
  g.parent = f;
  g.arity = n;

  const std::string fname = r.labels[2][f];

  // Chord edges from the fan apex verts[0] to each arc boundary vertex.
  std::vector<uint32_t> chord(n - 1);
  std::size_t pos = 0;
  for (uint32_t i = 0; i + 1 < n; ++i) {
    pos += spec.arcs[i].size();
    chord[i] = r.sizes[1];
    r.labels[1].push_back(unique_label(r.labels[1], fname + "v" + std::to_string(i + 1)));
    r.sizes[1] += 1;
    for (auto [v, w] : {verts[0], verts[pos]}) {
      if (!w.in_unit_range())
        throw StructuralError("face_edge_split: chord Miller " + w.str() +
                              " outside {-1,0,1}^3");
      r.bounds[1].push_back({chord[i], v, w});
    }
    g.virtuals.push_back(chord[i]);
  }

  // Replace the face by n sub-faces; the parent index is dropped and higher
  // face indices shift down by one.
  auto remap_face = [f](uint32_t idx) { return idx > f ? idx - 1 : idx; };
  std::vector<std::string> new_face_labels;
  for (uint32_t i = 0; i < r.sizes[2]; ++i)
    if (i != f) new_face_labels.push_back(r.labels[2][i]);
  std::vector<uint32_t> sub(n);
  for (uint32_t i = 0; i < n; ++i) {
    sub[i] = static_cast<uint32_t>(new_face_labels.size());
    new_face_labels.push_back(unique_label(new_face_labels, fname + "p" + std::to_string(i + 1)));
    g.members.push_back(sub[i]);
  }
  r.labels[2] = std::move(new_face_labels);
  r.sizes[2] = static_cast<uint32_t>(r.labels[2].size());

  std::vector<BoundaryEntry> nb2;
  for (const auto& e : r.bounds[2])
    if (e.source != f) nb2.push_back({remap_face(e.source), e.target, e.shift});
  for (uint32_t i = 0; i < n; ++i) {
    for (const auto& inst : spec.arcs[i]) nb2.push_back({sub[i], inst.edge, inst.at});
    if (i > 0) nb2.push_back({sub[i], chord[i - 1], MillerIndex()});
    if (i + 1 < n) nb2.push_back({sub[i], chord[i], MillerIndex()});
  }
  r.bounds[2] = std::move(nb2);

  std::vector<BoundaryEntry> nb3;
  for (const auto& e : r.bounds[3]) {
    if (e.target != f) {
      nb3.push_back({e.source, remap_face(e.target), e.shift});
    } else {
      for (uint32_t i = 0; i < n; ++i) nb3.push_back({e.source, sub[i], e.shift});
    }
  }
  r.bounds[3] = std::move(nb3);

  r.normalize();
  auto violations = r.validate();
  if (!violations.empty())
    throw InternalError("face_edge_split: result fails validation: " + violations.front());
  pm.groups.push_back(std::move(g));
  return {std::move(r), std::move(pm)};
}

// ---------------------------------------------------------------------------
// Split / architecture files

namespace {

// "e_x[0,0,0]" -> EdgeEnd against dimension d labels.
EdgeEnd parse_end(const UnitCellComplex& u, int d, const std::string& tok) {
  auto lb = tok.find('[');
  auto rb = tok.find(']');
  if (lb == std::string::npos || rb == std::string::npos || rb < lb)
    throw ConfigError("expected <label>[a,b,c], got '" + tok + "'");
  std::string label = tok.substr(0, lb);
  std::string nums = tok.substr(lb + 1, rb - lb - 1);
  std::replace(nums.begin(), nums.end(), ',', ' ');
  std::istringstream ns(nums);
  int a, b, c;
  if (!(ns >> a >> b >> c)) throw ConfigError("bad Miller triple in '" + tok + "'");
  return {u.element_index(d, label), MillerIndex(a, b, c)};
}

std::vector<std::vector<EdgeEnd>> parse_groups(const UnitCellComplex& u, int d,
                                               std::istringstream& ls) {
  std::vector<std::vector<EdgeEnd>> groups;
  std::string tok;
  std::vector<EdgeEnd>* cur = nullptr;
  while (ls >> tok) {
    std::size_t p = 0;
    while (p < tok.size()) {
      if (tok[p] == '{' || tok[p] == '(') {
        groups.emplace_back();
        cur = &groups.back();
        ++p;
      } else if (tok[p] == '}' || tok[p] == ')') {
        cur = nullptr;
        ++p;
      } else {
        auto q = tok.find_first_of("})", p);
        std::string item = tok.substr(p, q == std::string::npos ? q : q - p);
        if (!item.empty()) {
          if (!cur) throw ConfigError("split member outside braces: " + item);
          cur->push_back(parse_end(u, d, item));
        }
        p = (q == std::string::npos) ? tok.size() : q;
      }
    }
  }
  if (groups.empty()) throw ConfigError("split line without {...} groups");
  return groups;
}

}  // namespace

UnitCellComplex apply_split_file(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  UnitCellComplex u;
  bool have_base = false;
  std::string name;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string kw;
    if (!(ls >> kw)) continue;
    if (kw == "name") {
      ls >> name;
    } else if (kw == "base") {
      std::string b;
      ls >> b;
      u = builtin(b);
      have_base = true;
    } else if (kw == "vertex_split" || kw == "dual_vertex_split") {
      if (!have_base) throw ConfigError("split file: 'base' must come first");
      bool dual = (kw == "dual_vertex_split");
      UnitCellComplex view = dual ? u.dualize() : u;
      std::string vlabel;
      ls >> vlabel;
      VertexSplitSpec spec;
      spec.target_vertex = view.element_index(0, vlabel);
      spec.subsets = parse_groups(view, 1, ls);
      u = dual ? cell_vertex_split_dual(u, spec) : cell_vertex_split(u, spec);
    } else {
      throw ConfigError("split file: unknown keyword '" + kw + "'");
    }
  }
  if (!have_base) throw ConfigError("split file: missing base");
  if (!name.empty()) u.name = name;
  return u;
}

bool DistributionPlan::any_split() const {
  for (const auto& q : faces)
    if (q.arity > 1) return true;
  for (const auto& q : edges)
    if (q.arity > 1) return true;
  return false;
}

Architecture parse_architecture(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  Architecture a;
  struct PendingSplit {
    int side;  // 0 face, 1 edge
    uint32_t element;
    std::vector<std::vector<EdgeEnd>> arcs;  // empty if count-based
    uint32_t parts = 0;
  };
  std::vector<PendingSplit> pending;
  bool have_base = false;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string kw;
    if (!(ls >> kw)) continue;
    if (kw == "name") {
      ls >> a.name;
    } else if (kw == "base") {
      std::string b;
      ls >> b;
      a.base = builtin(b);
      have_base = true;
    } else if (kw == "face_split" || kw == "edge_split") {
      if (!have_base) throw ConfigError("architecture file: 'base' must come first");
      PendingSplit p;
      p.side = (kw == "edge_split") ? 1 : 0;
      std::string label, mode;
      ls >> label >> mode;
      p.element = a.base.element_index(p.side == 0 ? 2 : 1, label);
      if (mode == "parts") {
        if (!(ls >> p.parts) || p.parts < 2) throw ConfigError("bad parts count");
      } else if (mode == "arcs") {
        // Arc members are instances relative to the split element: boundary
        // edges for a face split, coboundary faces for an edge split.
        const UnitCellComplex view = (p.side == 0) ? a.base : a.base.dualize();
        p.arcs = parse_groups(view, 1, ls);
      } else {
        throw ConfigError("expected 'parts' or 'arcs' after " + kw);
      }
      pending.push_back(std::move(p));
    } else {
      throw ConfigError("architecture file: unknown keyword '" + kw + "'");
    }
  }
  if (!have_base) throw ConfigError("architecture file: missing base");

  a.plan.faces.assign(a.base.sizes[2], {});
  a.plan.edges.assign(a.base.sizes[1], {});

  // Resolve count-based splits into explicit arcs on the base complex (or its
  // dual, for edge splits), then record the plan.
  std::vector<FaceSplitSpec> face_specs;  // against the primal base
  std::vector<FaceSplitSpec> edge_specs;  // against the dual base
  UnitCellComplex dual_base = a.base.dualize();
  for (auto& p : pending) {
    const UnitCellComplex& view = (p.side == 0) ? a.base : dual_base;
    auto cycle = face_boundary_cycle(view, p.element);
    std::vector<std::vector<EdgeEnd>> arcs = p.arcs;
    if (arcs.empty()) {
      if (cycle.size() % p.parts != 0)
        throw ConfigError("parts must divide the boundary length");
      std::size_t len = cycle.size() / p.parts;
      for (uint32_t i = 0; i < p.parts; ++i)
        arcs.emplace_back(cycle.begin() + i * len, cycle.begin() + (i + 1) * len);
    }
    FaceSplitSpec spec{p.element, arcs};
    auto& plan = (p.side == 0) ? a.plan.faces[p.element] : a.plan.edges[p.element];
    if (plan.arity != 1) throw ConfigError("element split twice");
    plan.arity = static_cast<uint32_t>(arcs.size());
    (p.side == 0 ? face_specs : edge_specs).push_back(std::move(spec));
  }

  // arc_of_incidence, in the order of the base complex's bounds[2].
  auto arc_lookup = [](const std::vector<std::vector<EdgeEnd>>& arcs, const EdgeEnd& inst,
                       const std::string& what) {
    for (uint32_t i = 0; i < arcs.size(); ++i)
      for (const auto& m : arcs[i])
        if (m == inst) return i;
    throw InternalError("incidence not covered by arcs: " + what);
  };
  std::map<uint32_t, const FaceSplitSpec*> face_by_elem, edge_by_elem;
  for (const auto& s : face_specs) face_by_elem[s.target_face] = &s;
  for (const auto& s : edge_specs) edge_by_elem[s.target_face] = &s;
  for (const auto& e : a.base.bounds[2]) {
    {
      auto& qs = a.plan.faces[e.source];
      uint32_t arc = 0;
      if (auto it = face_by_elem.find(e.source); it != face_by_elem.end())
        arc = arc_lookup(it->second->arcs, {e.target, e.shift}, a.base.labels[2][e.source]);
      qs.arc_of_incidence.push_back(arc);
    }
    {
      auto& qs = a.plan.edges[e.target];
      uint32_t arc = 0;
      if (auto it = edge_by_elem.find(e.target); it != edge_by_elem.end())
        arc = arc_lookup(it->second->arcs, {e.source, -e.shift}, a.base.labels[1][e.target]);
      qs.arc_of_incidence.push_back(arc);
    }
  }

  // Build the fully split complex (faces first, then edges through the dual).
  UnitCellComplex s = a.base;
  for (const auto& spec : face_specs) {
    // Indices shift as faces are replaced; re-find by label.
    FaceSplitSpec adj = spec;
    adj.target_face = s.element_index(2, a.base.labels[2][spec.target_face]);
    auto [ns, pm] = face_edge_split(s, adj);
    s = std::move(ns);
  }
  if (!edge_specs.empty()) {
    UnitCellComplex d = s.dualize();
    for (const auto& spec : edge_specs) {
      FaceSplitSpec adj;
      adj.target_face = d.element_index(2, a.base.labels[1][spec.target_face]);
      // Coface arc members name parent faces; map them onto the sub-faces
      // (dual edges) that now carry the incidence.
      for (const auto& arc : spec.arcs) {
        std::vector<EdgeEnd> resolved;
        for (const auto& m : arc) {
          // Find the unique dual boundary entry of this dual face matching the
          // parent face at the given offset.
          bool found = false;
          for (const auto& be : d.bounds[2]) {
            if (be.source != adj.target_face || be.shift != m.at) continue;
            const std::string& lab = d.labels[1][be.target];
            const std::string& parent = a.base.labels[2][m.edge];
            if (lab == parent || lab.rfind(parent + "p", 0) == 0) {
              resolved.push_back({be.target, be.shift});
              found = true;
              break;
            }
          }
          if (!found)
            throw ConfigError("edge_split arc member " + a.base.labels[2][m.edge] +
                              m.at.str() + " does not touch the edge");
        }
        adj.arcs.push_back(std::move(resolved));
      }
      auto [nd, pm] = face_edge_split(d, adj);
      d = std::move(nd);
    }
    s = d.dualize();
  }
  s.name = a.name;
  a.split = std::move(s);

  // Party groups against the final complex, resolved by label (indices shift
  // while the splits are applied one by one).
  for (const auto& spec : face_specs) {
    SplitGroup g;
    g.side = 0;
    g.parent = spec.target_face;
    g.arity = static_cast<uint32_t>(spec.arcs.size());
    const std::string& base_label = a.base.labels[2][spec.target_face];
    for (uint32_t i = 1; i <= g.arity; ++i)
      g.members.push_back(a.split.element_index(2, base_label + "p" + std::to_string(i)));
    for (uint32_t i = 1; i < g.arity; ++i)
      g.virtuals.push_back(a.split.element_index(1, base_label + "v" + std::to_string(i)));
    a.party.groups.push_back(std::move(g));
  }
  for (const auto& spec : edge_specs) {
    SplitGroup g;
    g.side = 1;
    g.parent = spec.target_face;
    g.arity = static_cast<uint32_t>(spec.arcs.size());
    const std::string& base_label = a.base.labels[1][spec.target_face];
    for (uint32_t i = 1; i <= g.arity; ++i)
      g.members.push_back(a.split.element_index(1, base_label + "p" + std::to_string(i)));
    for (uint32_t i = 1; i < g.arity; ++i)
      g.virtuals.push_back(a.split.element_index(2, base_label + "v" + std::to_string(i)));
    a.party.groups.push_back(std::move(g));
  }

  auto violations = a.split.validate();
  if (!violations.empty())
    throw InternalError("architecture " + a.name + " fails validation: " +
                        violations.front());
  return a;
}

Architecture architecture(const std::string& name) {
  const char* text = builtin_arch_text(name);
  if (!text) throw ConfigError("unknown architecture '" + name + "'");
  return parse_architecture(text);
}

std::vector<std::string> architecture_names() {
  return {"cubic_6ring", "cubic_2node", "diamond_7node",
          "diamond_4ring", "dec_12node", "dec_4ring"};
}

std::vector<uint32_t> node_sizes(const Architecture& a) {
  // Sub-qubit instances: (side, parent, sub) at a cell offset. Gate partners:
  // the two sides of every base bounds[2] incidence.
  struct Inst {
    int side;
    uint32_t parent, sub;
    MillerIndex off;
    auto operator<=>(const Inst&) const = default;
  };
  // Incidences grouped per element for fast lookup.
  struct Gate {
    uint32_t face, fsub, edge, esub;
    MillerIndex shift;  // edge cell minus face cell
  };
  std::vector<Gate> gates;
  {
    std::vector<uint32_t> fslot(a.base.sizes[2], 0), eslot(a.base.sizes[1], 0);
    for (const auto& e : a.base.bounds[2]) {
      Gate g;
      g.face = e.source;
      g.edge = e.target;
      g.shift = e.shift;
      g.fsub = a.plan.faces[e.source].arc_of_incidence[fslot[e.source]++];
      g.esub = a.plan.edges[e.target].arc_of_incidence[eslot[e.target]++];
      gates.push_back(g);
    }
  }

  std::set<std::tuple<int, uint32_t, uint32_t>> assigned;
  std::vector<uint32_t> sizes;
  for (int side = 0; side < 2; ++side) {
    uint32_t nelem = side == 0 ? a.base.sizes[2] : a.base.sizes[1];
    for (uint32_t p = 0; p < nelem; ++p) {
      uint32_t arity = side == 0 ? a.plan.faces[p].arity : a.plan.edges[p].arity;
      for (uint32_t sb = 0; sb < arity; ++sb) {
        if (assigned.count({side, p, sb})) continue;
        std::vector<Inst> frontier{{side, p, sb, MillerIndex()}};
        std::set<Inst> comp(frontier.begin(), frontier.end());
        std::map<std::tuple<int, uint32_t, uint32_t>, MillerIndex> offset_of;
        offset_of[{side, p, sb}] = MillerIndex();
        while (!frontier.empty()) {
          Inst cur = frontier.back();
          frontier.pop_back();
          for (const auto& g : gates) {
            Inst other;
            if (cur.side == 0 && g.face == cur.parent && g.fsub == cur.sub)
              other = {1, g.edge, g.esub, cur.off + g.shift};
            else if (cur.side == 1 && g.edge == cur.parent && g.esub == cur.sub)
              other = {0, g.face, g.fsub, cur.off - g.shift};
            else
              continue;
            auto key = std::make_tuple(other.side, other.parent, other.sub);
            auto it = offset_of.find(key);
            if (it != offset_of.end()) {
              if (it->second != other.off)
                throw InternalError("node component does not close (spans translations)");
              continue;
            }
            offset_of[key] = other.off;
            comp.insert(other);
            frontier.push_back(other);
          }
        }
        for (const auto& [key, off] : offset_of) assigned.insert(key);
        sizes.push_back(static_cast<uint32_t>(offset_of.size()));
      }
    }
  }
  std::sort(sizes.begin(), sizes.end());
  return sizes;
}

}  // namespace mbqc
