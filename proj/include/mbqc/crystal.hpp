#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "mbqc/unit_cell.hpp"

namespace mbqc {

enum class AxisBoundary { periodic, smooth, rough };

AxisBoundary axis_boundary_from_string(const std::string& s);
std::string to_string(AxisBoundary b);

// A representative parity check for one homology class: `support` is a set of
// face qubits (side 0, detects dual-string logicals crossing the axis seam)
// or edge qubits (side 1). Insensitive to trivial cycles by construction.
struct LogicalMembrane {
  int side = 0;  // 0: support on faces, 1: support on edges
  int axis = 0;
  Chain support;
};

// A unit-cell complex repeated over an N_x x N_y x N_z block of lattice
// points. Periodic axes wrap; open axes are realized by deleting the closure
// of a seam membrane (smooth: crossing faces downward, rough: crossing edges
// upward), which keeps every zero-map identity intact on the kept elements.
class CrystalComplex {
 public:
  UnitCellComplex cell;
  std::array<int, 3> dims{1, 1, 1};
  std::array<AxisBoundary, 3> boundary{AxisBoundary::periodic, AxisBoundary::periodic,
                                       AxisBoundary::periodic};
  int64_t npoints = 0;
  uint64_t chain_id = 0;

  std::array<std::size_t, 4> total{};         // total[d] = |Q_d| * npoints
  std::array<std::vector<uint8_t>, 4> alive;  // per global element
  std::array<std::size_t, 4> alive_count{};
  std::array<BinaryMatrix, 4> bnd;  // bnd[d] restricted to alive elements, d in 1..3

  int64_t point_index(int x, int y, int z) const {
    return x + static_cast<int64_t>(dims[0]) * (y + static_cast<int64_t>(dims[1]) * z);
  }
  std::array<int, 3> point_coords(int64_t p) const {
    int x = static_cast<int>(p % dims[0]);
    int y = static_cast<int>((p / dims[0]) % dims[1]);
    int z = static_cast<int>(p / (static_cast<int64_t>(dims[0]) * dims[1]));
    return {x, y, z};
  }
  uint64_t gindex(int d, uint32_t elem, int64_t point) const {
    return static_cast<uint64_t>(point) * cell.sizes[d] + elem;
  }
  uint32_t elem_of(int d, uint64_t g) const {
    return static_cast<uint32_t>(g % cell.sizes[d]);
  }
  int64_t point_of(int d, uint64_t g) const {
    return static_cast<int64_t>(g / cell.sizes[d]);
  }

  Chain zero_chain(int d) const {
    return Chain(d, total[d], chain_id);
  }

  // Zero-map identities on the embedded maps; throws on violation.
  void check_boundaries() const;
};

CrystalComplex embed(const UnitCellComplex& u, std::array<int, 3> dims,
                     std::array<AxisBoundary, 3> boundary);

// Defect graph for one side. side 0 (primal): nodes are cells, one edge per
// face qubit; side 1 (dual): nodes are vertices, one edge per edge qubit.
// Qubits dangling against deleted elements attach to a single virtual
// boundary node.
struct SyndromeGraph {
  int side = 0;
  uint32_t n_nodes = 0;  // includes the boundary node when present
  bool has_boundary = false;

  std::vector<uint32_t> node_of_elem;  // full defect-element index -> node id
  std::vector<uint64_t> elem_of_node;  // node id -> full defect-element index

  std::vector<uint32_t> edge_u, edge_v;   // per decoder edge
  std::vector<uint64_t> qubit_of_edge;    // decoder edge -> full qubit index
  std::vector<uint32_t> edge_of_qubit;    // full qubit index -> decoder edge
  std::vector<uint8_t> edge_cross[3];     // seam-crossing parity per axis

  // CSR adjacency (edges listed per endpoint; boundary node included).
  std::vector<uint32_t> adj_ptr, adj_edge, adj_other;

  uint32_t boundary_node() const { return n_nodes - 1; }
  std::size_t n_edges() const { return edge_u.size(); }

  // Defect parity of an error chain, via edge endpoints.
  std::vector<uint8_t> defects_of(const Chain& error) const;
};

SyndromeGraph syndrome_graph(const CrystalComplex& c, int side);

// Syndrome via the boundary matrices (independent code path used in tests).
Chain syndrome_via_matrix(const CrystalComplex& c, int side, const Chain& error);

// Membranes for every axis that supports the requested side.
std::vector<LogicalMembrane> logical_membranes(const CrystalComplex& c);

// True iff error+correction closes (interior defects vanish) and flips the
// membrane parity. A nonzero interior boundary is a contract violation.
bool logical_failure(const SyndromeGraph& g, const LogicalMembrane& m, const Chain& error,
                     const Chain& correction);

// One primal and one dual membrane for failure testing; periodic crystals use
// `axis` for both, open crystals pair the rough axis (primal) with the smooth
// axis (dual).
std::pair<LogicalMembrane, LogicalMembrane> select_test_pair(
    const CrystalComplex& c, const std::vector<LogicalMembrane>& membranes, int axis);

}  // namespace mbqc
