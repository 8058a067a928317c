#pragma once

#include <cstdint>
#include <vector>

#include "mbqc/crystal.hpp"

namespace mbqc {

// Weighted-growth Union-Find decoder with joint Pauli/erasure handling.
// One instance per worker; reusable across shots (state is reset lazily).
// The referenced SyndromeGraph is shared read-only.
class UnionFindDecoder {
 public:
  explicit UnionFindDecoder(const SyndromeGraph& g);

  // defect_nodes: interior nodes with defect parity 1 (even count unless the
  // graph has a boundary); erased_edges: heralded edges. The correction is
  // appended as edge ids; its defect set equals the input defects.
  void decode(const std::vector<uint32_t>& defect_nodes,
              const std::vector<uint32_t>& erased_edges,
              std::vector<uint32_t>& correction_out);

  // Peeling over the erased subgraph alone (maximum likelihood for pure
  // erasure); falls back to the full decoder when a defect lies outside the
  // erasure support.
  void decode_erasure_only(const std::vector<uint32_t>& defect_nodes,
                           const std::vector<uint32_t>& erased_edges,
                           std::vector<uint32_t>& correction_out);

  const SyndromeGraph& graph() const { return *g_; }

 private:
  const SyndromeGraph* g_;
  uint32_t bnode_;

  // union-find over nodes
  std::vector<uint32_t> parent_, rank_;
  std::vector<uint8_t> parity_, frozen_, active_;
  std::vector<uint32_t> cluster_size_;
  std::vector<std::vector<uint32_t>> boundary_;  // per root: candidate edges
  std::vector<uint8_t> growth_;                  // per edge: 0,1,2
  std::vector<uint8_t> full_;                    // per edge: in the grown region
  std::vector<uint32_t> touched_nodes_, touched_edges_;

  // peeling scratch
  std::vector<uint32_t> tree_parent_edge_, tree_parent_node_, order_;
  std::vector<uint32_t> deg_;
  std::vector<uint8_t> in_forest_, visited_;
  std::vector<uint8_t> defect_scratch_;

  uint32_t find(uint32_t v);
  uint32_t unite(uint32_t a, uint32_t b);
  void activate(uint32_t node);
  void reset();
  void init_clusters(const std::vector<uint32_t>& defects,
                     const std::vector<uint32_t>& erased);
  void grow_to_completion();
  void peel(const std::vector<uint32_t>& defects, std::vector<uint32_t>& out);
};

}  // namespace mbqc
