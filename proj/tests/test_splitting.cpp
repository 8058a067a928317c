#include <fstream>
#include <set>
#include <sstream>

#include "doctest.h"
#include "mbqc/crystal.hpp"
#include "mbqc/splitting.hpp"

using namespace mbqc;

namespace {

const char* kTriangularSplit = R"(name triangular_from_square
base square
dual_vertex_split f { e_x[0,0,0] e_y[1,0,0] }
)";

const char* kDiamondSplit = R"(name diamond_from_cubic
base cubic
vertex_split v { e_x[0,0,0] e_y[0,0,0] e_z[0,0,0] }
dual_vertex_split q { f_x[0,0,0] f_y[0,0,0] f_z[0,0,0] }
)";

const char* kDecSplit = R"(name dec_from_cubic
base cubic
vertex_split v { e_x[0,0,0] }
vertex_split v { e_y[0,0,0] }
vertex_split v { e_z[0,0,0] }
dual_vertex_split q { f_x[0,0,0] }
dual_vertex_split q { f_y[0,0,0] }
dual_vertex_split q { f_z[0,0,0] }
)";

}  // namespace

TEST_CASE("splitting a square face diagonally gives the triangular lattice") {
  auto got = apply_split_file(kTriangularSplit);
  CHECK(got.validate().empty());
  CHECK(isomorphic(got, builtin("triangular")));
}

TEST_CASE("two splits of the cubic primal and dual vertex give the diamond lattice") {
  auto got = apply_split_file(kDiamondSplit);
  CHECK(got.validate().empty());
  CHECK(got.sizes == std::array<uint32_t, 4>{2, 4, 4, 2});
  CHECK(isomorphic(got, builtin("diamond")));
}

TEST_CASE("simple splits of cubic primal and dual vertices give the double-edge cubic") {
  auto got = apply_split_file(kDecSplit);
  CHECK(got.validate().empty());
  CHECK(got.sizes == std::array<uint32_t, 4>{4, 6, 6, 4});
  CHECK(isomorphic(got, builtin("double_edge_cubic")));
}

TEST_CASE("split output always validates") {
  // pull an axis pair off the vertex (and the dual vertex) of each builtin
  for (const auto& n : {"cubic", "diamond", "double_edge_cubic"}) {
    auto u = builtin(n);
    VertexSplitSpec spec;
    spec.target_vertex = 0;
    auto star = vertex_star(u, 0);
    spec.subsets = {{star[0], star[1]}};
    auto r = cell_vertex_split(u, spec);
    CHECK_MESSAGE(r.validate().empty(), n);

    auto dstar = vertex_star(u.dualize(), 0);
    VertexSplitSpec dspec;
    dspec.target_vertex = 0;
    dspec.subsets = {{dstar[0], dstar[1]}};
    auto rd = cell_vertex_split_dual(u, dspec);
    CHECK_MESSAGE(rd.validate().empty(), n);
  }
}

TEST_CASE("overlapping subsets are rejected") {
  auto u = builtin("cubic");
  VertexSplitSpec spec;
  spec.target_vertex = 0;
  EdgeEnd e{0, MillerIndex(0, 0, 0)};
  spec.subsets = {{e}, {e}};
  CHECK_THROWS_AS(cell_vertex_split(u, spec), InputError);
}

TEST_CASE("face boundary cycles walk simple polygons") {
  auto u = builtin("cubic");
  auto cyc = face_boundary_cycle(u, 0);
  CHECK(cyc.size() == 4);
  auto dia = builtin("diamond");
  CHECK(face_boundary_cycle(dia, 0).size() == 6);
  auto dec = builtin("double_edge_cubic");
  CHECK(face_boundary_cycle(dec, 0).size() == 8);
}

TEST_CASE("face-edge split: square face split over two and four parties") {
  auto u = builtin("square");
  auto cyc = face_boundary_cycle(u, 0);
  FaceSplitSpec two{0, {{cyc[0], cyc[1]}, {cyc[2], cyc[3]}}};
  auto [r2, pm2] = face_edge_split(u, two);
  CHECK(r2.validate().empty());
  CHECK(r2.sizes[2] == 2);
  CHECK(r2.sizes[1] == 3);  // one virtual edge
  CHECK(pm2.groups[0].arity == 2);

  FaceSplitSpec four{0, {{cyc[0]}, {cyc[1]}, {cyc[2]}, {cyc[3]}}};
  auto [r4, pm4] = face_edge_split(u, four);
  CHECK(r4.validate().empty());
  CHECK(r4.sizes[2] == 4);
  CHECK(r4.sizes[1] == 5);  // three virtual edges
  CHECK(pm4.groups[0].arity == 4);
  CHECK(pm4.groups[0].virtuals.size() == 3);
}

TEST_CASE("non-contiguous arcs are rejected") {
  auto u = builtin("cubic");
  auto cyc = face_boundary_cycle(u, 0);
  FaceSplitSpec bad{0, {{cyc[0], cyc[2]}, {cyc[1], cyc[3]}}};
  CHECK_THROWS_AS(face_edge_split(u, bad), InputError);
}

TEST_CASE("closed-cell boundaries stay intact under face-edge splits") {
  auto u = builtin("cubic");
  auto cyc = face_boundary_cycle(u, 2);
  FaceSplitSpec spec{2, {{cyc[0], cyc[1]}, {cyc[2], cyc[3]}}};
  auto [r, pm] = face_edge_split(u, spec);
  // Every cell that contained the face now contains both sub-faces at the
  // same translations, and validation already checked the boundary algebra.
  int sub_entries = 0;
  for (const auto& e : r.bounds[3])
    if (e.target == pm.groups[0].members[0] || e.target == pm.groups[0].members[1])
      ++sub_entries;
  CHECK(sub_entries == 4);  // two cells x two sub-faces
}

TEST_CASE("architectures load, validate, and report the expected entanglement structure") {
  auto a6 = architecture("cubic_6ring");
  CHECK(a6.base.name == "cubic");
  for (const auto& g : a6.party.groups) CHECK(g.arity == 2);
  auto sizes6 = node_sizes(a6);
  CHECK(sizes6.front() == 6);
  CHECK(sizes6.back() == 6);

  auto a2 = architecture("cubic_2node");
  for (const auto& g : a2.party.groups) CHECK(g.arity == 4);
  auto sizes2 = node_sizes(a2);
  CHECK(sizes2.front() == 2);
  CHECK(sizes2.back() == 2);

  auto d4 = architecture("diamond_4ring");
  for (const auto& g : d4.party.groups) CHECK(d4.plan.any_split());
  for (const auto& g : d4.party.groups) CHECK(g.arity == 3);

  auto d7 = architecture("diamond_7node");
  bool has_bell = false, has_ghz3 = false;
  for (const auto& g : d7.party.groups) {
    if (g.arity == 2) has_bell = true;
    if (g.arity == 3) has_ghz3 = true;
  }
  CHECK(has_bell);
  CHECK(has_ghz3);

  for (const auto& n : architecture_names()) {
    auto a = architecture(n);
    CHECK_MESSAGE(a.split.validate().empty(), n);
  }
}

TEST_CASE("shipped split files regenerate their lattices") {
  auto slurp = [](const std::string& p) {
    std::ifstream f(p);
    REQUIRE(f.good());
    std::stringstream b;
    b << f.rdbuf();
    return b.str();
  };
  const std::string dir = std::string(CLUSTERLAB_DATA_DIR) + "/splits/";
  CHECK(isomorphic(apply_split_file(slurp(dir + "triangular_from_square.split")),
                   builtin("triangular")));
  CHECK(isomorphic(apply_split_file(slurp(dir + "diamond_from_cubic.split")),
                   builtin("diamond")));
  CHECK(isomorphic(apply_split_file(slurp(dir + "dec_from_cubic.split")),
                   builtin("double_edge_cubic")));
  CHECK(isomorphic(apply_split_file(slurp(dir + "triamond_from_cubic.split")),
                   builtin("triamond")));
}

TEST_CASE("shipped architecture files parse and match the library table") {
  for (const auto& n : architecture_names()) {
    std::ifstream f(std::string(CLUSTERLAB_DATA_DIR) + "/arch/" + n + ".arch");
    REQUIRE_MESSAGE(f.good(), n);
    std::stringstream b;
    b << f.rdbuf();
    auto a = parse_architecture(b.str());
    CHECK(a.name == n);
    CHECK(a.split.validate().empty());
  }
}

TEST_CASE("cell-vertex splits preserve the homology rank of small embeddings") {
  // brute-force kernel/image dimensions over Z2 at L = 2
  auto rank_h1 = [](const UnitCellComplex& u) {
    auto c = embed(u, {2, 2, 2},
                   {AxisBoundary::periodic, AxisBoundary::periodic, AxisBoundary::periodic});
    std::size_t r1 = z2_rank(c.bnd[1]);
    std::size_t r2 = z2_rank(c.bnd[2]);
    return (c.total[1] - r1) - r2;
  };
  auto cubic = builtin("cubic");
  std::size_t base = rank_h1(cubic);
  VertexSplitSpec spec;
  spec.target_vertex = 0;
  auto star = vertex_star(cubic, 0);
  spec.subsets = {{star[0], star[2]}};
  CHECK(rank_h1(cell_vertex_split(cubic, spec)) == base);
  CHECK(rank_h1(builtin("diamond")) == base);
  CHECK(rank_h1(builtin("double_edge_cubic")) == base);
}

TEST_CASE("merging GHZ groups back reproduces the pre-split incidences") {
  // per parent qubit, the union of the sub-faces' cell incidences equals the
  // parent's, so the merged syndrome graph is the base graph
  for (const auto& name : {"cubic_6ring", "diamond_4ring"}) {
    auto a = architecture(name);
    for (const auto& g : a.party.groups) {
      if (g.side != 0) continue;
      // base cell incidences of the parent face
      std::multiset<std::pair<uint32_t, MillerIndex>> want;
      for (const auto& e : a.base.bounds[3])
        if (e.target == g.parent) want.insert({e.source, e.shift});
      // the split complex carries each member with identical incidences
      for (uint32_t member : g.members) {
        std::multiset<std::pair<uint32_t, MillerIndex>> got;
        for (const auto& e : a.split.bounds[3])
          if (e.target == member) got.insert({e.source, e.shift});
        CHECK(got == want);
      }
    }
  }
}
