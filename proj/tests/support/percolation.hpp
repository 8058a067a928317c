#pragma once

// Independent bond-percolation oracle for erasure thresholds: union-find with
// offset tracking detects wrapping clusters on the torus; the first-wrap
// occupation fraction concentrates at the percolation threshold. Shares no
// code with the decoder.

#include <algorithm>
#include <array>
#include <numeric>
#include <vector>

#include "mbqc/crystal.hpp"
#include "mbqc/rng.hpp"

namespace mbqc::test {

struct WrapUnionFind {
  std::vector<uint32_t> parent;
  std::vector<uint32_t> rank;
  // displacement to parent, one lattice-period unit per wrap
  std::vector<std::array<int, 3>> shift;

  explicit WrapUnionFind(uint32_t n) : parent(n), rank(n, 0), shift(n, {0, 0, 0}) {
    std::iota(parent.begin(), parent.end(), 0);
  }

  std::pair<uint32_t, std::array<int, 3>> find(uint32_t v) {
    if (parent[v] == v) return {v, {0, 0, 0}};
    auto [root, disp] = find(parent[v]);
    for (int a = 0; a < 3; ++a) shift[v][a] += disp[a];
    parent[v] = root;
    return {root, shift[v]};
  }

  // Join u,v where v sits at u's position plus `cross` periods. Returns true
  // if a wrapping cycle was just closed.
  bool unite(uint32_t u, uint32_t v, std::array<int, 3> cross) {
    auto [ru, du] = find(u);
    auto [rv, dv] = find(v);
    if (ru == rv) {
      for (int a = 0; a < 3; ++a)
        if (du[a] + cross[a] - dv[a] != 0) return true;
      return false;
    }
    // attach smaller rank root under the larger
    std::array<int, 3> rel;  // displacement of rv relative to ru
    for (int a = 0; a < 3; ++a) rel[a] = du[a] + cross[a] - dv[a];
    if (rank[ru] < rank[rv]) {
      std::swap(ru, rv);
      for (int a = 0; a < 3; ++a) rel[a] = -rel[a];
    }
    parent[rv] = ru;
    shift[rv] = rel;
    if (rank[ru] == rank[rv]) ++rank[ru];
    return false;
  }
};

// Fraction of occupied bonds at which a wrapping cluster first appears, for
// one random bond order.
inline double first_wrap_fraction(const SyndromeGraph& g, Rng& rng) {
  std::vector<uint32_t> order(g.n_edges());
  std::iota(order.begin(), order.end(), 0);
  for (std::size_t i = order.size(); i > 1; --i)
    std::swap(order[i - 1], order[rng.next_below(static_cast<uint32_t>(i))]);
  WrapUnionFind uf(g.n_nodes);
  for (std::size_t k = 0; k < order.size(); ++k) {
    uint32_t e = order[k];
    std::array<int, 3> cross{};
    for (int a = 0; a < 3; ++a) cross[a] = g.edge_cross[a][e] ? 1 : 0;
    if (uf.unite(g.edge_u[e], g.edge_v[e], cross))
      return double(k + 1) / double(order.size());
  }
  return 1.0;
}

// Median first-wrap fraction over samples: the percolation threshold up to
// finite-size corrections.
inline double percolation_threshold(const SyndromeGraph& g, int samples, uint64_t seed) {
  std::vector<double> fr(samples);
  for (int s = 0; s < samples; ++s) {
    Rng rng(seed, 0xbead, static_cast<uint64_t>(s));
    fr[s] = first_wrap_fraction(g, rng);
  }
  std::sort(fr.begin(), fr.end());
  return fr[fr.size() / 2];
}

}  // namespace mbqc::test
