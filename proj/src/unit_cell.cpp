#include "mbqc/unit_cell.hpp"

#include <algorithm>
#include <cstdio>
#include <map>
#include <set>
#include <sstream>

#include "mbqc/builtin_cells.hpp"
#include "mbqc/rng.hpp"

namespace mbqc {

std::string MillerIndex::str() const {
  char buf[32];
  std::snprintf(buf, sizeof buf, "[%d,%d,%d]", int(a), int(b), int(c));
  return buf;
}

uint64_t UnitCellComplex::id() const {
  uint64_t h = mix64(0x636c6162u ^ static_cast<uint64_t>(dim));
  for (int d = 0; d < 4; ++d) {
    h = mix64(h ^ sizes[d]);
    for (const auto& e : bounds[d]) {
      uint64_t k = (uint64_t(e.source) << 40) ^ (uint64_t(e.target) << 16) ^
                   (uint64_t(uint8_t(e.shift.a)) << 12) ^
                   (uint64_t(uint8_t(e.shift.b)) << 6) ^ uint64_t(uint8_t(e.shift.c));
      h = mix64(h ^ k);
    }
  }
  return h;
}

uint32_t UnitCellComplex::element_index(int d, const std::string& label) const {
  for (uint32_t i = 0; i < labels[d].size(); ++i)
    if (labels[d][i] == label) return i;
  throw ConfigError("unknown element '" + label + "' at dimension " + std::to_string(d) +
                    " in complex " + name);
}

BinaryMatrix UnitCellComplex::boundary_matrix(int d, MillerIndex r) const {
  std::vector<std::pair<uint32_t, uint32_t>> e;
  for (const auto& b : bounds[d])
    if (b.shift == r) e.emplace_back(b.target, b.source);
  return BinaryMatrix(sizes[d - 1], sizes[d], std::move(e));
}

std::vector<MillerIndex> UnitCellComplex::millers(int d) const {
  std::set<MillerIndex> s;
  for (const auto& b : bounds[d]) s.insert(b.shift);
  return {s.begin(), s.end()};
}

void UnitCellComplex::check_well_formed() const {
  for (int d = 1; d <= 3; ++d) {
    for (const auto& b : bounds[d]) {
      if (b.source >= sizes[d] || b.target >= sizes[d - 1])
        throw StructuralError(name + ": boundary entry out of range at dim " +
                              std::to_string(d));
      if (!b.shift.in_unit_range())
        throw StructuralError(name + ": Miller index " + b.shift.str() +
                              " outside {-1,0,1}^3");
    }
  }
  for (int d = 0; d < 4; ++d)
    if (!labels[d].empty() && labels[d].size() != sizes[d])
      throw StructuralError(name + ": label count mismatch at dim " + std::to_string(d));
}

void UnitCellComplex::normalize() {
  for (int d = 1; d <= 3; ++d) {
    auto& v = bounds[d];
    std::sort(v.begin(), v.end());
    std::vector<BoundaryEntry> kept;
    kept.reserve(v.size());
    for (std::size_t i = 0; i < v.size();) {
      std::size_t j = i;
      while (j < v.size() && v[j] == v[i]) ++j;
      if ((j - i) & 1) kept.push_back(v[i]);
      i = j;
    }
    v = std::move(kept);
  }
}

std::vector<std::string> UnitCellComplex::validate() const {
  std::vector<std::string> out;
  try {
    check_well_formed();
  } catch (const std::exception& ex) {
    out.push_back(ex.what());
    return out;
  }
  for (int d = 2; d <= dim; ++d) {
    // key: (source element of Q_d, target of Q_{d-2}, total translation)
    std::map<std::tuple<uint32_t, uint32_t, MillerIndex>, int> acc;
    for (const auto& hi : bounds[d])
      for (const auto& lo : bounds[d - 1]) {
        if (lo.source != hi.target) continue;
        acc[{hi.source, lo.target, hi.shift + lo.shift}] ^= 1;
      }
    for (const auto& [key, parity] : acc) {
      if (!parity) continue;
      auto [src, tgt, r] = key;
      std::ostringstream os;
      os << name << ": d" << d - 1 << "∘d" << d << " != 0 at source "
         << (labels[d].empty() ? std::to_string(src) : labels[d][src]) << ", target "
         << (labels[d - 2].empty() ? std::to_string(tgt) : labels[d - 2][tgt])
         << ", translation " << r.str();
      out.push_back(os.str());
    }
  }
  return out;
}

ValencyTable UnitCellComplex::valency() const {
  ValencyTable t;
  t.face_valency.assign(sizes[2], 0);
  t.edge_valency.assign(sizes[1], 0);
  for (const auto& b : bounds[2]) {
    t.face_valency[b.source]++;
    t.edge_valency[b.target]++;
  }
  t.regular = true;
  t.z = t.face_valency.empty() ? 0 : t.face_valency[0];
  for (uint32_t v : t.face_valency)
    if (v != t.z) t.regular = false;
  for (uint32_t v : t.edge_valency)
    if (v != t.z) t.regular = false;
  return t;
}

UnitCellComplex UnitCellComplex::dualize() const {
  UnitCellComplex d;
  d.name = name + "_dual";
  d.dim = dim;
  const int D = dim;
  for (int k = 0; k <= D; ++k) {
    d.sizes[k] = sizes[D - k];
    d.labels[k] = labels[D - k];
  }
  // dual bnd_i^[r] = (bnd_{D+1-i}^[-r])^T
  for (int i = 1; i <= D; ++i) {
    for (const auto& b : bounds[D + 1 - i]) {
      BoundaryEntry e;
      e.source = b.target;
      e.target = b.source;
      e.shift = -b.shift;
      d.bounds[i].push_back(e);
    }
  }
  d.normalize();
  return d;
}

// ---------------------------------------------------------------------------
// Text format

std::string UnitCellComplex::serialize() const {
  std::ostringstream os;
  os << "name " << name << "\n";
  os << "dim " << dim << "\n";
  for (int d = 3; d >= 0; --d) {
    if (sizes[d] == 0) continue;
    os << "elements " << d;
    for (uint32_t i = 0; i < sizes[d]; ++i)
      os << ' ' << (labels[d].empty() ? "x" + std::to_string(i) : labels[d][i]);
    os << "\n";
  }
  for (int d = 3; d >= 1; --d)
    for (const auto& b : bounds[d])
      os << "boundary " << d << ' ' << labels[d][b.source] << ' '
         << labels[d - 1][b.target] << ' ' << int(b.shift.a) << ' ' << int(b.shift.b)
         << ' ' << int(b.shift.c) << "\n";
  return os.str();
}

UnitCellComplex UnitCellComplex::parse(const std::string& text) {
  UnitCellComplex u;
  u.dim = -1;
  std::istringstream in(text);
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
      throw ConfigError("cell file line " + std::to_string(lineno) + ": " + why);
    };
    if (kw == "name") {
      ls >> u.name;
    } else if (kw == "dim") {
      if (!(ls >> u.dim) || (u.dim != 2 && u.dim != 3)) fail("dim must be 2 or 3");
    } else if (kw == "elements") {
      int d;
      if (!(ls >> d) || d < 0 || d > 3) fail("bad dimension");
      std::string lab;
      while (ls >> lab) u.labels[d].push_back(lab);
      u.sizes[d] = static_cast<uint32_t>(u.labels[d].size());
    } else if (kw == "boundary") {
      int d, a, b, c;
      std::string src, tgt;
      if (!(ls >> d >> src >> tgt >> a >> b >> c)) fail("bad boundary entry");
      if (d < 1 || d > 3) fail("bad boundary dimension");
      BoundaryEntry e;
      e.source = u.element_index(d, src);
      e.target = u.element_index(d - 1, tgt);
      e.shift = MillerIndex(a, b, c);
      u.bounds[d].push_back(e);
    } else {
      fail("unknown keyword '" + kw + "'");
    }
  }
  if (u.dim < 0) throw ConfigError("cell file: missing dim");
  u.normalize();
  u.check_well_formed();
  return u;
}

// ---------------------------------------------------------------------------
// Builtins

UnitCellComplex builtin(const std::string& name) {
  const char* text = builtin_cell_text(name);
  if (!text) throw ConfigError("unknown builtin lattice '" + name + "'");
  UnitCellComplex u = UnitCellComplex::parse(text);
  auto violations = u.validate();
  if (!violations.empty())
    throw InternalError("builtin " + name + " failed validation: " + violations.front());
  return u;
}

std::vector<std::string> builtin_names() {
  return {"square", "triangular", "cubic", "diamond", "double_edge_cubic", "triamond"};
}

// ---------------------------------------------------------------------------
// Isomorphism search

namespace {

// The 48 signed axis permutations acting on Miller indices.
struct AxisTransform {
  int perm[3];
  int sign[3];
  MillerIndex apply(const MillerIndex& m) const {
    int v[3] = {m.a, m.b, m.c};
    int w[3];
    for (int i = 0; i < 3; ++i) w[i] = sign[i] * v[perm[i]];
    return {w[0], w[1], w[2]};
  }
};

std::vector<AxisTransform> all_axis_transforms() {
  std::vector<AxisTransform> out;
  int idx[3] = {0, 1, 2};
  std::sort(idx, idx + 3);
  do {
    for (int s = 0; s < 8; ++s) {
      AxisTransform t;
      for (int i = 0; i < 3; ++i) {
        t.perm[i] = idx[i];
        t.sign[i] = (s >> i) & 1 ? -1 : 1;
      }
      out.push_back(t);
    }
  } while (std::next_permutation(idx, idx + 3));
  return out;
}

// Backtracking match of v's elements onto u's, dimension by dimension, after
// fixing the axis transform applied to u's Miller indices.
struct IsoSearch {
  const UnitCellComplex& u;
  const UnitCellComplex& v;
  std::set<std::tuple<int, uint32_t, uint32_t, MillerIndex>> v_entries;
  std::array<std::vector<int>, 4> map;  // u element -> v element (or -1)

  IsoSearch(const UnitCellComplex& u_, const UnitCellComplex& v_) : u(u_), v(v_) {
    for (int d = 1; d <= 3; ++d)
      for (const auto& e : v.bounds[d]) v_entries.insert({d, e.source, e.target, e.shift});
  }

  bool entry_ok(int d, uint32_t vs, uint32_t vt, MillerIndex r) const {
    return v_entries.count({d, vs, vt, r}) != 0;
  }

  // Check all u-entries whose endpoints are both mapped.
  bool consistent(const std::vector<BoundaryEntry>& entries, int d,
                  const AxisTransform& t) const {
    for (const auto& e : entries) {
      int ms = map[d][e.source];
      int mt = map[d - 1][e.target];
      if (ms < 0 || mt < 0) continue;
      if (!entry_ok(d, ms, mt, t.apply(e.shift))) return false;
    }
    return true;
  }

  bool assign(int d, uint32_t i, const AxisTransform& t, std::vector<bool>& used) {
    if (d < 0) return true;
    if (i == u.sizes[d]) {
      std::vector<bool> next_used(d > 0 ? u.sizes[d - 1] : 0, false);
      return assign(d - 1, 0, t, next_used);
    }
    for (uint32_t j = 0; j < v.sizes[d]; ++j) {
      if (used[j]) continue;
      map[d][i] = static_cast<int>(j);
      used[j] = true;
      bool ok = true;
      if (d + 1 <= 3 && ok) ok = consistent(u.bounds[d + 1], d + 1, t);
      if (d >= 1 && ok) ok = consistent(u.bounds[d], d, t);
      if (ok && assign(d, i + 1, t, used)) return true;
      used[j] = false;
      map[d][i] = -1;
    }
    return false;
  }

  bool run(const AxisTransform& t) {
    for (int d = 0; d < 4; ++d) map[d].assign(u.sizes[d], -1);
    std::vector<bool> used(u.sizes[3], false);
    return assign(3, 0, t, used);
  }
};

}  // namespace

bool isomorphic(const UnitCellComplex& u, const UnitCellComplex& v) {
  if (u.dim != v.dim || u.sizes != v.sizes) return false;
  for (int d = 1; d <= 3; ++d)
    if (u.bounds[d].size() != v.bounds[d].size()) return false;
  IsoSearch search(u, v);
  for (const auto& t : all_axis_transforms())
    if (search.run(t)) return true;
  return false;
}

}  // namespace mbqc
