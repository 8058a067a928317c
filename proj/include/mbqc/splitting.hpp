#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "mbqc/unit_cell.hpp"

namespace mbqc {

// An edge instance incident on the split vertex: edge `edge` in the unit cell
// translated by `at` (relative to the vertex's cell).
struct EdgeEnd {
  uint32_t edge = 0;
  MillerIndex at;
  auto operator<=>(const EdgeEnd&) const = default;
};

struct VertexSplitSpec {
  uint32_t target_vertex = 0;
  std::vector<std::vector<EdgeEnd>> subsets;  // n disjoint subsets of incident ends
};

// Ordered partition of a face's boundary cycle into contiguous arcs; each arc
// is a list of boundary edge instances (edge, shift) as they appear in the
// face's boundary entries.
struct FaceSplitSpec {
  uint32_t target_face = 0;
  std::vector<std::vector<EdgeEnd>> arcs;
};

// n new vertices take over the chosen edge ends; n new edges join them to the
// original vertex; face boundaries are repaired so the zero-map conditions
// keep holding.
UnitCellComplex cell_vertex_split(const UnitCellComplex& u, const VertexSplitSpec& spec);

// Same operation applied to the dual complex (dualize, split, dualize back).
UnitCellComplex cell_vertex_split_dual(const UnitCellComplex& u,
                                       const VertexSplitSpec& spec);

struct SplitGroup {
  int side = 0;  // 0: face split (primal qubit), 1: edge split (dual qubit)
  uint32_t parent = 0;                // element index in the pre-split complex
  std::vector<uint32_t> members;      // sub-element indices in the split complex
  std::vector<uint32_t> virtuals;     // chord elements added by this split
  uint32_t arity = 1;
};

struct PartyMap {
  std::vector<SplitGroup> groups;
};

// Replaces a face by n faces joined in a chain by n-1 new "virtual" edges
// (a fan subdivision rooted at the first arc's start vertex). Closed-cell
// boundaries are preserved: every cell containing the face contains all
// sub-faces afterwards.
std::pair<UnitCellComplex, PartyMap> face_edge_split(const UnitCellComplex& u,
                                                     const FaceSplitSpec& spec);

// The face's boundary cycle in walk order. Returns the edge instances; throws
// if the boundary is not a single simple cycle.
std::vector<EdgeEnd> face_boundary_cycle(const UnitCellComplex& u, uint32_t face);

// Incident edge ends of a vertex.
std::vector<EdgeEnd> vertex_star(const UnitCellComplex& u, uint32_t vertex);

// ---------------------------------------------------------------------------
// Declarative split files ("name", "base", then vertex_split / dual_vertex_split
// lines) used both for lattice generation and tests.
UnitCellComplex apply_split_file(const std::string& text);

// ---------------------------------------------------------------------------
// Distributed architectures.

// Per parent qubit: how its circuit incidences distribute over sub-qubits.
struct QubitSplit {
  uint32_t arity = 1;
  // arc_of_incidence[k]: sub-qubit owning the k-th boundary (coboundary)
  // incidence of this element, in the base complex's bounds[2] order.
  std::vector<uint32_t> arc_of_incidence;
};

struct DistributionPlan {
  std::vector<QubitSplit> faces;
  std::vector<QubitSplit> edges;
  bool any_split() const;
  uint32_t face_arity(uint32_t f) const { return faces[f].arity; }
  uint32_t edge_arity(uint32_t e) const { return edges[e].arity; }
};

struct Architecture {
  std::string name;
  UnitCellComplex base;    // decoding geometry (pre face/edge splits)
  UnitCellComplex split;   // fully split complex (virtual chords included)
  PartyMap party;
  DistributionPlan plan;
};

// Parse an architecture file: base lattice plus face_split / edge_split lines.
Architecture parse_architecture(const std::string& text);

// The named architectures shipped with the library.
Architecture architecture(const std::string& name);
std::vector<std::string> architecture_names();

// Node sizes: connected components of the gate-partner graph between
// sub-faces and sub-edges. Throws if a component does not close within a
// bounded window (not a valid distributed layout).
std::vector<uint32_t> node_sizes(const Architecture& a);

}  // namespace mbqc
