// Development helper: derive the triamond quotient complex by a chiral
// 3-split of the cubic primal vertex followed by a 3-split of the dual
// vertex, scanning the handedness choices for the one that lands on a
// regular valency-10 self-dual complex. The output is frozen into
// src/builtin_triamond.cpp.
#include <cstdio>
#include <iostream>

#include "mbqc/splitting.hpp"

using namespace mbqc;

namespace {

// Chiral pairing of the six ends around a degree-6 vertex: subset i pairs the
// cell-local end of axis i with the far end of axis i+offset (mod 3); `flip`
// swaps which side is local. The star is read off the complex so the same
// code serves the primal and the dual split.
VertexSplitSpec chiral_spec(const UnitCellComplex& u, int offset, int flip) {
  auto star = vertex_star(u, 0);
  if (star.size() != 6) throw InternalError("expected a degree-6 vertex");
  EdgeEnd own[3], far[3];
  for (const auto& end : star) {
    if (end.edge > 2) throw InternalError("expected three axis edges");
    (end.at == MillerIndex() ? own : far)[end.edge] = end;
  }
  VertexSplitSpec spec;
  spec.target_vertex = 0;
  for (int i = 0; i < 3; ++i) {
    int j = (i + offset) % 3;
    if (flip)
      spec.subsets.push_back({far[i], own[j]});
    else
      spec.subsets.push_back({own[i], far[j]});
  }
  return spec;
}

}  // namespace

int main() {
  auto cubic = builtin("cubic");
  for (int po = 1; po <= 2; ++po)
    for (int pf = 0; pf <= 1; ++pf)
      for (int so = 1; so <= 2; ++so)
        for (int sf = 0; sf <= 1; ++sf) {
          UnitCellComplex u;
          try {
            u = cell_vertex_split(cubic, chiral_spec(cubic, po, pf));
            auto d = u.dualize();
            auto spec = chiral_spec(d, so, sf);
            u = cell_vertex_split_dual(u, spec);
          } catch (const std::exception& ex) {
            std::printf("po=%d pf=%d so=%d sf=%d: failed (%s)\n", po, pf, so, sf,
                        ex.what());
            continue;
          }
          auto val = u.valency();
          bool ok = u.validate().empty() && val.regular && val.z == 10;
          bool sd = ok && isomorphic(u, u.dualize());
          std::printf("po=%d pf=%d so=%d sf=%d: sizes %u %u %u %u regular=%d z=%u selfdual=%d\n",
                      po, pf, so, sf, u.sizes[3], u.sizes[2], u.sizes[1], u.sizes[0],
                      int(val.regular), val.z, int(sd));
          if (ok && sd) {
            u.name = "triamond";
            // relabel for readability
            std::cout << "---- frozen cell text ----\n" << u.serialize() << "----\n";
            return 0;
          }
        }
  std::puts("no candidate found");
  return 1;
}
