#include "mbqc/uf_decoder.hpp"

#include <algorithm>

namespace mbqc {

UnionFindDecoder::UnionFindDecoder(const SyndromeGraph& g) : g_(&g) {
  const uint32_t n = g.n_nodes;
  bnode_ = g.has_boundary ? g.boundary_node() : UINT32_MAX;
  parent_.resize(n);
  for (uint32_t i = 0; i < n; ++i) parent_[i] = i;
  rank_.assign(n, 0);
  parity_.assign(n, 0);
  frozen_.assign(n, 0);
  active_.assign(n, 0);
  cluster_size_.assign(n, 1);
  boundary_.resize(n);
  growth_.assign(g.n_edges(), 0);
  full_.assign(g.n_edges(), 0);
  tree_parent_edge_.assign(n, UINT32_MAX);
  tree_parent_node_.assign(n, UINT32_MAX);
  deg_.assign(n, 0);
  in_forest_.assign(g.n_edges(), 0);
  visited_.assign(n, 0);
}

void UnionFindDecoder::reset() {
  for (uint32_t v : touched_nodes_) {
    parent_[v] = v;
    rank_[v] = 0;
    parity_[v] = 0;
    frozen_[v] = 0;
    active_[v] = 0;
    cluster_size_[v] = 1;
    boundary_[v].clear();
    deg_[v] = 0;
    visited_[v] = 0;
    tree_parent_edge_[v] = UINT32_MAX;
    tree_parent_node_[v] = UINT32_MAX;
  }
  for (uint32_t e : touched_edges_) {
    growth_[e] = 0;
    full_[e] = 0;
    in_forest_[e] = 0;
  }
  touched_nodes_.clear();
  touched_edges_.clear();
}

uint32_t UnionFindDecoder::find(uint32_t v) {
  uint32_t root = v;
  while (parent_[root] != root) root = parent_[root];
  while (parent_[v] != root) {
    uint32_t next = parent_[v];
    parent_[v] = root;
    v = next;
  }
  return root;
}

void UnionFindDecoder::activate(uint32_t node) {
  if (active_[node]) return;
  active_[node] = 1;
  touched_nodes_.push_back(node);
  if (node == bnode_) {
    frozen_[node] = 1;
    return;
  }
  // seed the boundary list with the node's incident edges
  auto& b = boundary_[node];
  for (uint32_t k = g_->adj_ptr[node]; k < g_->adj_ptr[node + 1]; ++k)
    b.push_back(g_->adj_edge[k]);
}

uint32_t UnionFindDecoder::unite(uint32_t a, uint32_t b) {
  a = find(a);
  b = find(b);
  if (a == b) return a;
  if (rank_[a] < rank_[b]) std::swap(a, b);
  if (rank_[a] == rank_[b]) ++rank_[a];
  parent_[b] = a;
  parity_[a] ^= parity_[b];
  frozen_[a] |= frozen_[b];
  cluster_size_[a] += cluster_size_[b];
  if (boundary_[a].size() < boundary_[b].size()) boundary_[a].swap(boundary_[b]);
  boundary_[a].insert(boundary_[a].end(), boundary_[b].begin(), boundary_[b].end());
  boundary_[b].clear();
  boundary_[b].shrink_to_fit();
  return a;
}

void UnionFindDecoder::init_clusters(const std::vector<uint32_t>& defects,
                                     const std::vector<uint32_t>& erased) {
  reset();
  for (uint32_t v : defects) {
    if (v >= parent_.size() || v == bnode_)
      throw InputError("decode: bad defect node");
    activate(v);
    parity_[find(v)] ^= 1;
  }
  for (uint32_t e : erased) {
    if (e >= growth_.size()) throw InputError("decode: bad erased edge");
    if (full_[e]) continue;
    growth_[e] = 2;
    full_[e] = 1;
    touched_edges_.push_back(e);
    uint32_t u = g_->edge_u[e], v = g_->edge_v[e];
    activate(u);
    activate(v);
    unite(u, v);
  }
}

void UnionFindDecoder::grow_to_completion() {
  std::vector<uint32_t> odd;
  std::vector<std::pair<uint32_t, uint32_t>> ranked;
  for (;;) {
    odd.clear();
    for (uint32_t v : touched_nodes_) {
      uint32_t r = find(v);
      if (r == v && parity_[r] && !frozen_[r]) odd.push_back(r);
    }
    if (odd.empty()) return;

    ranked.clear();
    for (uint32_t r : odd) {
      // filter stale boundary entries so the weight is current
      auto& b = boundary_[r];
      std::size_t w = 0;
      for (std::size_t i = 0; i < b.size(); ++i) {
        uint32_t e = b[i];
        if (full_[e]) continue;
        uint32_t ru = find(g_->edge_u[e]);
        uint32_t rv = find(g_->edge_v[e]);
        if (active_[g_->edge_u[e]] && active_[g_->edge_v[e]] && ru == rv) continue;
        b[w++] = e;
      }
      b.resize(w);
      if (b.empty()) {
        if (cluster_size_[r] >= parent_.size())
          throw InputError("decode: odd defect parity on a closed graph");
        throw InternalError("odd cluster with empty boundary");
      }
      ranked.push_back({static_cast<uint32_t>(w), r});
    }
    std::sort(ranked.begin(), ranked.end());

    for (auto [w, r] : ranked) {
      if (find(r) != r || !parity_[r] || frozen_[r]) continue;  // merged meanwhile
      auto snapshot = boundary_[r];  // grow the round's frontier only
      for (uint32_t e : snapshot) {
        if (full_[e]) continue;
        uint32_t u = g_->edge_u[e], v = g_->edge_v[e];
        bool ua = active_[u], va = active_[v];
        if (ua && va && find(u) == find(v)) continue;
        if (growth_[e] == 0) touched_edges_.push_back(e);
        if (++growth_[e] < 2) continue;
        full_[e] = 1;
        activate(u);
        activate(v);
        unite(u, v);
      }
    }
  }
}

void UnionFindDecoder::peel(const std::vector<uint32_t>& defects,
                            std::vector<uint32_t>& out) {
  // spanning forest over the grown region, rooted by traversal order (the
  // boundary node first so chains may terminate there)
  order_.clear();
  std::vector<uint32_t> stack;
  auto visit_from = [&](uint32_t root) {
    if (visited_[root]) return;
    visited_[root] = 1;
    stack.push_back(root);
    while (!stack.empty()) {
      uint32_t v = stack.back();
      stack.pop_back();
      order_.push_back(v);
      for (uint32_t k = g_->adj_ptr[v]; k < g_->adj_ptr[v + 1]; ++k) {
        uint32_t e = g_->adj_edge[k];
        if (!full_[e]) continue;
        uint32_t o = g_->adj_other[k];
        if (!active_[o] || visited_[o]) continue;
        visited_[o] = 1;
        in_forest_[e] = 1;
        tree_parent_edge_[o] = e;
        tree_parent_node_[o] = v;
        stack.push_back(o);
      }
    }
  };
  if (bnode_ != UINT32_MAX && active_[bnode_]) visit_from(bnode_);
  for (uint32_t v : touched_nodes_)
    if (active_[v]) visit_from(v);

  // peel leaves upward: process children before parents (reverse DFS order)
  defect_scratch_.assign(parent_.size(), 0);
  auto& defect = defect_scratch_;
  for (uint32_t v : defects) defect[v] ^= 1;
  for (auto it = order_.rbegin(); it != order_.rend(); ++it) {
    uint32_t v = *it;
    if (tree_parent_edge_[v] == UINT32_MAX) continue;  // component root
    if (v != bnode_ && defect[v]) {
      out.push_back(tree_parent_edge_[v]);
      defect[v] = 0;
      defect[tree_parent_node_[v]] ^= 1;
    }
  }
  for (uint32_t v : touched_nodes_)
    if (v != bnode_ && defect[v]) throw InternalError("peeling left a defect behind");
}

void UnionFindDecoder::decode(const std::vector<uint32_t>& defect_nodes,
                              const std::vector<uint32_t>& erased_edges,
                              std::vector<uint32_t>& correction_out) {
  init_clusters(defect_nodes, erased_edges);
  grow_to_completion();
  peel(defect_nodes, correction_out);
}

void UnionFindDecoder::decode_erasure_only(const std::vector<uint32_t>& defect_nodes,
                                           const std::vector<uint32_t>& erased_edges,
                                           std::vector<uint32_t>& correction_out) {
  init_clusters(defect_nodes, erased_edges);
  bool covered = true;
  for (uint32_t v : defect_nodes) {
    bool inside = false;
    for (uint32_t k = g_->adj_ptr[v]; k < g_->adj_ptr[v + 1] && !inside; ++k)
      if (full_[g_->adj_edge[k]]) inside = true;
    if (!inside) {
      covered = false;
      break;
    }
  }
  if (!covered) {
    grow_to_completion();
    peel(defect_nodes, correction_out);
    return;
  }
  // parity check per cluster; grow if something is off (open-graph cases)
  for (uint32_t v : touched_nodes_) {
    uint32_t r = find(v);
    if (r == v && parity_[r] && !frozen_[r]) {
      grow_to_completion();
      break;
    }
  }
  peel(defect_nodes, correction_out);
}

}  // namespace mbqc
