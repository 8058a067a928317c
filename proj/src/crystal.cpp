#include "mbqc/crystal.hpp"

#include <algorithm>
#include <queue>

#include "mbqc/rng.hpp"

namespace mbqc {

AxisBoundary axis_boundary_from_string(const std::string& s) {
  if (s == "periodic") return AxisBoundary::periodic;
  if (s == "smooth") return AxisBoundary::smooth;
  if (s == "rough") return AxisBoundary::rough;
  throw ConfigError("unknown boundary type '" + s + "'");
}

std::string to_string(AxisBoundary b) {
  switch (b) {
    case AxisBoundary::periodic: return "periodic";
    case AxisBoundary::smooth: return "smooth";
    case AxisBoundary::rough: return "rough";
  }
  return "?";
}

namespace {

struct Embedder {
  const UnitCellComplex& u;
  std::array<int, 3> dims;
  std::array<AxisBoundary, 3> bc;
  int64_t npoints;

  int wrap(int v, int axis) const {
    int n = dims[axis];
    if (v < 0) return v + n;
    if (v >= n) return v - n;
    return v;
  }

  int64_t shifted_point(const MillerIndex& r, const std::array<int, 3>& xyz) const {
    int x = wrap(xyz[0] + r.a, 0);
    int y = wrap(xyz[1] + r.b, 1);
    int z = wrap(xyz[2] + r.c, 2);
    return x + static_cast<int64_t>(dims[0]) * (y + static_cast<int64_t>(dims[1]) * z);
  }

  // Does the segment from coordinate c to c+delta (|delta|<=1, pre-wrap) step
  // over the seam between n-1 and 0?
  static bool seam_step(int c, int delta, int n) {
    return (c + delta < 0) || (c + delta >= n);
  }
};

}  // namespace

void CrystalComplex::check_boundaries() const {
  for (int d = 2; d <= cell.dim; ++d) {
    if (!is_zero_map(bnd[d - 1], bnd[d]))
      throw InternalError("embedded boundary maps do not compose to zero at d=" +
                          std::to_string(d));
  }
}

CrystalComplex embed(const UnitCellComplex& u, std::array<int, 3> dims,
                     std::array<AxisBoundary, 3> boundary) {
  auto violations = u.validate();
  if (!violations.empty())
    throw InputError("embed: unit cell invalid: " + violations.front());
  if (u.dim == 2) {
    dims[2] = 1;
    boundary[2] = AxisBoundary::periodic;
  }
  for (int a = 0; a < 3; ++a) {
    if (dims[a] < 1) throw InputError("embed: dims must be positive");
    if (boundary[a] != AxisBoundary::periodic && dims[a] < 2)
      throw InputError("embed: open axes need at least two cells");
  }

  CrystalComplex c;
  c.cell = u;
  c.dims = dims;
  c.boundary = boundary;
  c.npoints = static_cast<int64_t>(dims[0]) * dims[1] * dims[2];
  c.chain_id = mix64(u.id() ^ mix64((uint64_t(dims[0]) << 42) ^ (uint64_t(dims[1]) << 21) ^
                                    uint64_t(dims[2]) ^
                                    (uint64_t(static_cast<int>(boundary[0]) * 9 +
                                              static_cast<int>(boundary[1]) * 3 +
                                              static_cast<int>(boundary[2]))
                                     << 56)));
  for (int d = 0; d < 4; ++d) {
    c.total[d] = static_cast<std::size_t>(u.sizes[d]) * static_cast<std::size_t>(c.npoints);
    c.alive[d].assign(c.total[d], 1);
  }

  Embedder em{u, dims, boundary, c.npoints};

  // Incidences per element used by the surgery membranes.
  // Faces: their (cell, shift) incidences; edges: their (vertex, shift) ones.
  std::vector<std::vector<MillerIndex>> face_cells(u.sizes[2]);
  if (u.dim == 3)
    for (const auto& e : u.bounds[3]) face_cells[e.target].push_back(e.shift);
  std::vector<std::vector<MillerIndex>> edge_verts(u.sizes[1]);
  for (const auto& e : u.bounds[1]) edge_verts[e.source].push_back(e.shift);

  // Seam-crossing parity of one element instance along an axis.
  // For a face (3D): crossing of the bond between its two cells, the cells of
  // face (f, m) sitting at points m - r for each incidence shift r.
  auto face_crossing = [&](uint32_t f, const std::array<int, 3>& xyz, int axis) {
    int par = 0;
    for (const auto& r : face_cells[f])
      par ^= Embedder::seam_step(xyz[axis], -r[axis], dims[axis]) ? 1 : 0;
    return par != 0;
  };
  auto edge_crossing = [&](uint32_t e, const std::array<int, 3>& xyz, int axis) {
    int par = 0;
    for (const auto& p : edge_verts[e])
      par ^= Embedder::seam_step(xyz[axis], p[axis], dims[axis]) ? 1 : 0;
    return par != 0;
  };
  // 2D smooth surgery: no cell layer, cut faces whose own boundary wraps.
  auto face_wraps_2d = [&](uint32_t f, const std::array<int, 3>& xyz, int axis) {
    for (const auto& e : u.bounds[2])
      if (e.source == f && Embedder::seam_step(xyz[axis], e.shift[axis], dims[axis]))
        return true;
    return false;
  };

  // Open-axis surgery. Smooth: delete the seam-crossing faces and their full
  // downward closure. Rough: delete the seam-crossing edges and their full
  // upward closure. Each axis closes over its own seed; restricting to the
  // complement of a union of closed sets preserves every zero-map identity.
  for (int axis = 0; axis < 3; ++axis) {
    if (boundary[axis] == AxisBoundary::periodic) continue;
    std::array<std::vector<uint8_t>, 4> del;
    for (int d = 0; d < 4; ++d) del[d].assign(c.total[d], 0);
    if (boundary[axis] == AxisBoundary::smooth) {
      for (int64_t p = 0; p < c.npoints; ++p) {
        auto xyz = c.point_coords(p);
        for (uint32_t f = 0; f < u.sizes[2]; ++f) {
          bool cut = u.dim == 3 ? face_crossing(f, xyz, axis) : face_wraps_2d(f, xyz, axis);
          if (cut) del[2][c.gindex(2, f, p)] = 1;
        }
      }
      // downward closure
      for (const auto& e : u.bounds[2])
        for (int64_t p = 0; p < c.npoints; ++p)
          if (del[2][c.gindex(2, e.source, p)]) {
            auto xyz = c.point_coords(p);
            del[1][c.gindex(1, e.target, em.shifted_point(e.shift, xyz))] = 1;
          }
      for (const auto& e : u.bounds[1])
        for (int64_t p = 0; p < c.npoints; ++p)
          if (del[1][c.gindex(1, e.source, p)]) {
            auto xyz = c.point_coords(p);
            del[0][c.gindex(0, e.target, em.shifted_point(e.shift, xyz))] = 1;
          }
    } else {  // rough
      for (int64_t p = 0; p < c.npoints; ++p) {
        auto xyz = c.point_coords(p);
        for (uint32_t e = 0; e < u.sizes[1]; ++e)
          if (edge_crossing(e, xyz, axis)) del[1][c.gindex(1, e, p)] = 1;
      }
      // upward closure
      for (const auto& e : u.bounds[2])
        for (int64_t p = 0; p < c.npoints; ++p) {
          auto xyz = c.point_coords(p);
          if (del[1][c.gindex(1, e.target, em.shifted_point(e.shift, xyz))])
            del[2][c.gindex(2, e.source, p)] = 1;
        }
      if (u.dim == 3)
        for (const auto& e : u.bounds[3])
          for (int64_t p = 0; p < c.npoints; ++p) {
            auto xyz = c.point_coords(p);
            if (del[2][c.gindex(2, e.target, em.shifted_point(e.shift, xyz))])
              del[3][c.gindex(3, e.source, p)] = 1;
          }
    }
    for (int d = 0; d < 4; ++d)
      for (std::size_t i = 0; i < c.total[d]; ++i)
        if (del[d][i]) c.alive[d][i] = 0;
  }

  for (int d = 0; d < 4; ++d)
    c.alive_count[d] = static_cast<std::size_t>(
        std::count(c.alive[d].begin(), c.alive[d].end(), uint8_t(1)));

  // Embedded boundary maps: sum over Miller indices of quotient map x
  // translation, restricted to alive elements on both ends.
  for (int d = 1; d <= 3; ++d) {
    std::vector<std::pair<uint32_t, uint32_t>> entries;
    entries.reserve(u.bounds[d].size() * static_cast<std::size_t>(c.npoints));
    for (int64_t p = 0; p < c.npoints; ++p) {
      auto xyz = c.point_coords(p);
      for (const auto& e : u.bounds[d]) {
        uint64_t src = c.gindex(d, e.source, p);
        if (!c.alive[d][src]) continue;
        uint64_t tgt = c.gindex(d - 1, e.target, em.shifted_point(e.shift, xyz));
        if (!c.alive[d - 1][tgt]) continue;
        entries.emplace_back(static_cast<uint32_t>(tgt), static_cast<uint32_t>(src));
      }
    }
    c.bnd[d] = BinaryMatrix(c.total[d - 1], c.total[d], std::move(entries));
  }

  c.check_boundaries();
  return c;
}

// ---------------------------------------------------------------------------

SyndromeGraph syndrome_graph(const CrystalComplex& c, int side) {
  if (c.cell.dim != 3) throw InputError("syndrome graphs need a 3D crystal");
  SyndromeGraph g;
  g.side = side;
  const int defect_dim = side == 0 ? 3 : 0;
  const int qubit_dim = side == 0 ? 2 : 1;

  g.node_of_elem.assign(c.total[defect_dim], UINT32_MAX);
  uint32_t next = 0;
  for (uint64_t i = 0; i < c.total[defect_dim]; ++i) {
    if (!c.alive[defect_dim][i]) continue;
    g.node_of_elem[i] = next++;
    g.elem_of_node.push_back(i);
  }

  // Qubit incidences onto defect elements. Primal: the cells containing each
  // face, from the d3 entries; dual: the vertices of each edge, from d1.
  std::vector<std::vector<std::pair<uint32_t, MillerIndex>>> inc(c.cell.sizes[qubit_dim]);
  if (side == 0) {
    for (const auto& e : c.cell.bounds[3]) inc[e.target].push_back({e.source, -e.shift});
  } else {
    for (const auto& e : c.cell.bounds[1]) inc[e.source].push_back({e.target, e.shift});
  }

  Embedder em{c.cell, c.dims, c.boundary, c.npoints};
  g.edge_of_qubit.assign(c.total[qubit_dim], UINT32_MAX);
  for (int a = 0; a < 3; ++a) g.edge_cross[a].clear();

  bool any_boundary = false;
  std::vector<std::array<int64_t, 2>> endpoints;  // -1 marks the boundary side
  for (uint64_t q = 0; q < c.total[qubit_dim]; ++q) {
    if (!c.alive[qubit_dim][q]) continue;
    uint32_t elem = c.elem_of(qubit_dim, q);
    int64_t p = c.point_of(qubit_dim, q);
    auto xyz = c.point_coords(p);
    if (inc[elem].size() != 2)
      throw StructuralError("qubit element with " + std::to_string(inc[elem].size()) +
                            " defect neighbors in the bulk");
    std::array<int64_t, 2> ep{};
    std::array<int, 3> cross{0, 0, 0};
    for (int k = 0; k < 2; ++k) {
      const auto& [delem, dshift] = inc[elem][k];
      int64_t dp = em.shifted_point(dshift, xyz);
      uint64_t de = c.gindex(defect_dim, static_cast<uint32_t>(delem), dp);
      ep[k] = c.alive[defect_dim][de] ? static_cast<int64_t>(de) : -1;
      for (int a = 0; a < 3; ++a)
        cross[a] ^= Embedder::seam_step(xyz[a], dshift[a], c.dims[a]) ? 1 : 0;
    }
    if (ep[0] < 0 && ep[1] < 0)
      throw StructuralError("alive qubit with both defect neighbors deleted");
    if (ep[0] >= 0 && ep[1] >= 0 && ep[0] == ep[1])
      throw StructuralError("self-loop qubit edge; lattice too small");
    if (ep[0] < 0 || ep[1] < 0) any_boundary = true;
    endpoints.push_back(ep);
    g.qubit_of_edge.push_back(q);
    for (int a = 0; a < 3; ++a)
      g.edge_cross[a].push_back(static_cast<uint8_t>(cross[a]));
  }

  g.has_boundary = any_boundary;
  g.n_nodes = next + (any_boundary ? 1 : 0);
  const uint32_t bnode = any_boundary ? g.n_nodes - 1 : UINT32_MAX;

  g.edge_u.resize(endpoints.size());
  g.edge_v.resize(endpoints.size());
  for (std::size_t i = 0; i < endpoints.size(); ++i) {
    auto [a, b] = endpoints[i];
    g.edge_u[i] = a < 0 ? bnode : g.node_of_elem[static_cast<uint64_t>(a)];
    g.edge_v[i] = b < 0 ? bnode : g.node_of_elem[static_cast<uint64_t>(b)];
    g.edge_of_qubit[g.qubit_of_edge[i]] = static_cast<uint32_t>(i);
  }

  // CSR adjacency.
  g.adj_ptr.assign(g.n_nodes + 1, 0);
  for (std::size_t i = 0; i < g.edge_u.size(); ++i) {
    g.adj_ptr[g.edge_u[i] + 1]++;
    g.adj_ptr[g.edge_v[i] + 1]++;
  }
  for (uint32_t n = 0; n < g.n_nodes; ++n) g.adj_ptr[n + 1] += g.adj_ptr[n];
  g.adj_edge.resize(g.adj_ptr.back());
  g.adj_other.resize(g.adj_ptr.back());
  std::vector<uint32_t> fill(g.n_nodes, 0);
  for (uint32_t i = 0; i < g.edge_u.size(); ++i) {
    uint32_t a = g.edge_u[i], b = g.edge_v[i];
    g.adj_edge[g.adj_ptr[a] + fill[a]] = i;
    g.adj_other[g.adj_ptr[a] + fill[a]++] = b;
    g.adj_edge[g.adj_ptr[b] + fill[b]] = i;
    g.adj_other[g.adj_ptr[b] + fill[b]++] = a;
  }
  return g;
}

std::vector<uint8_t> SyndromeGraph::defects_of(const Chain& error) const {
  std::vector<uint8_t> defects(n_nodes, 0);
  for (uint32_t q : error.ones()) {
    uint32_t e = edge_of_qubit[q];
    if (e == UINT32_MAX) continue;
    defects[edge_u[e]] ^= 1;
    defects[edge_v[e]] ^= 1;
  }
  if (has_boundary) defects[boundary_node()] = 0;
  return defects;
}

Chain syndrome_via_matrix(const CrystalComplex& c, int side, const Chain& error) {
  if (side == 0) {
    // primal syndrome: transpose of d3 applied to the face chain
    return apply_map(c.bnd[3].transpose(), error, 3, c.chain_id);
  }
  return apply_map(c.bnd[1], error, 0, c.chain_id);
}

std::vector<LogicalMembrane> logical_membranes(const CrystalComplex& c) {
  if (c.cell.dim != 3) throw InputError("membranes need a 3D crystal");
  std::vector<LogicalMembrane> out;

  std::vector<std::vector<MillerIndex>> face_cells(c.cell.sizes[2]);
  for (const auto& e : c.cell.bounds[3]) face_cells[e.target].push_back(-e.shift);
  std::vector<std::vector<MillerIndex>> edge_verts(c.cell.sizes[1]);
  for (const auto& e : c.cell.bounds[1]) edge_verts[e.source].push_back(e.shift);

  for (int axis = 0; axis < 3; ++axis) {
    bool primal_ok = c.boundary[axis] != AxisBoundary::smooth;
    bool dual_ok = c.boundary[axis] != AxisBoundary::rough;
    if (primal_ok) {
      LogicalMembrane m{0, axis, c.zero_chain(2)};
      for (uint64_t q = 0; q < c.total[2]; ++q) {
        if (!c.alive[2][q]) continue;
        uint32_t f = c.elem_of(2, q);
        auto xyz = c.point_coords(c.point_of(2, q));
        int par = 0;
        for (const auto& r : face_cells[f])
          par ^= Embedder::seam_step(xyz[axis], r[axis], c.dims[axis]) ? 1 : 0;
        if (par) m.support.set(q, true);
      }
      if (m.support.is_zero())
        throw InternalError("empty primal membrane along axis " + std::to_string(axis));
      out.push_back(std::move(m));
    }
    if (dual_ok) {
      LogicalMembrane m{1, axis, c.zero_chain(1)};
      for (uint64_t q = 0; q < c.total[1]; ++q) {
        if (!c.alive[1][q]) continue;
        uint32_t e = c.elem_of(1, q);
        auto xyz = c.point_coords(c.point_of(1, q));
        int par = 0;
        for (const auto& p : edge_verts[e])
          par ^= Embedder::seam_step(xyz[axis], p[axis], c.dims[axis]) ? 1 : 0;
        if (par) m.support.set(q, true);
      }
      if (m.support.is_zero())
        throw InternalError("empty dual membrane along axis " + std::to_string(axis));
      out.push_back(std::move(m));
    }
  }
  return out;
}

bool logical_failure(const SyndromeGraph& g, const LogicalMembrane& m, const Chain& error,
                     const Chain& correction) {
  Chain sum = error ^ correction;
  auto defects = g.defects_of(sum);
  for (uint32_t n = 0; n < g.n_nodes; ++n)
    if (defects[n] && !(g.has_boundary && n == g.boundary_node()))
      throw InputError("logical_failure: error+correction has nonzero boundary");
  return inner_product(sum, m.support) == 1;
}

std::pair<LogicalMembrane, LogicalMembrane> select_test_pair(
    const CrystalComplex& c, const std::vector<LogicalMembrane>& membranes, int axis) {
  auto find = [&](int side, int ax) -> const LogicalMembrane* {
    for (const auto& m : membranes)
      if (m.side == side && m.axis == ax) return &m;
    return nullptr;
  };
  int primal_axis = axis, dual_axis = axis;
  bool open = false;
  for (int a = 0; a < 3; ++a) {
    if (c.boundary[a] == AxisBoundary::rough) primal_axis = a, open = true;
    if (c.boundary[a] == AxisBoundary::smooth) dual_axis = a, open = true;
  }
  if (!open) primal_axis = dual_axis = axis;
  const LogicalMembrane* p = find(0, primal_axis);
  const LogicalMembrane* d = find(1, dual_axis);
  if (!p || !d)
    throw StructuralError("no logical membrane pair available for failure testing");
  return {*p, *d};
}

}  // namespace mbqc
