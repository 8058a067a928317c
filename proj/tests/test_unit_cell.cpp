#include <fstream>
#include <sstream>

#include "doctest.h"
#include "mbqc/unit_cell.hpp"

using namespace mbqc;

TEST_CASE("builtin basis counts match the lattice library") {
  auto cubic = builtin("cubic");
  CHECK(cubic.sizes == std::array<uint32_t, 4>{1, 3, 3, 1});
  auto square = builtin("square");
  CHECK(square.sizes[2] == 1);
  CHECK(square.sizes[1] == 2);
  CHECK(square.sizes[0] == 1);
  auto tri = builtin("triangular");
  CHECK(tri.sizes[2] == 2);
  CHECK(tri.sizes[1] == 3);
  CHECK(tri.sizes[0] == 1);
  auto dia = builtin("diamond");
  CHECK(dia.sizes == std::array<uint32_t, 4>{2, 4, 4, 2});
  auto dec = builtin("double_edge_cubic");
  CHECK(dec.sizes == std::array<uint32_t, 4>{4, 6, 6, 4});
}

TEST_CASE("every builtin validates") {
  for (const auto& n : builtin_names()) {
    auto u = builtin(n);
    CHECK_MESSAGE(u.validate().empty(), n);
  }
}

TEST_CASE("perturbed cubic fails validation") {
  auto u = builtin("cubic");
  u.bounds[2].pop_back();
  CHECK_FALSE(u.validate().empty());
}

TEST_CASE("unknown builtin is a configuration error") {
  CHECK_THROWS_AS(builtin("pyrochlore"), ConfigError);
}

TEST_CASE("valency of the lattice library") {
  auto check_regular = [](const std::string& n, uint32_t z) {
    auto t = builtin(n).valency();
    CHECK_MESSAGE(t.regular, n);
    CHECK_MESSAGE(t.z == z, n, " valency ", t.z);
  };
  check_regular("cubic", 4);
  check_regular("diamond", 6);
  check_regular("double_edge_cubic", 8);
  check_regular("triamond", 10);
  auto sq = builtin("square").valency();
  CHECK(sq.face_valency == std::vector<uint32_t>{4});
}

TEST_CASE("dualize is an involution, entry for entry") {
  for (const auto& n : builtin_names()) {
    auto u = builtin(n);
    auto dd = u.dualize().dualize();
    CHECK_MESSAGE(u.same_data(dd), n);
  }
}

TEST_CASE("self-duality of the lattice library") {
  CHECK(isomorphic(builtin("cubic"), builtin("cubic").dualize()));
  CHECK(isomorphic(builtin("diamond"), builtin("diamond").dualize()));
  CHECK(isomorphic(builtin("double_edge_cubic"), builtin("double_edge_cubic").dualize()));
  CHECK(isomorphic(builtin("triamond"), builtin("triamond").dualize()));
  CHECK_FALSE(isomorphic(builtin("triangular"), builtin("triangular").dualize()));
}

TEST_CASE("serialize/parse round trip") {
  for (const auto& n : builtin_names()) {
    auto u = builtin(n);
    auto r = UnitCellComplex::parse(u.serialize());
    CHECK_MESSAGE(u.same_data(r), n);
    CHECK(u.labels == r.labels);
  }
}

TEST_CASE("isomorphism distinguishes different lattices") {
  CHECK_FALSE(isomorphic(builtin("cubic"), builtin("diamond")));
  CHECK_FALSE(isomorphic(builtin("diamond"), builtin("double_edge_cubic")));
  CHECK(isomorphic(builtin("cubic"), builtin("cubic")));
}

TEST_CASE("shipped cell files parse to the builtin complexes") {
  for (const auto& n : builtin_names()) {
    std::ifstream f(std::string(CLUSTERLAB_DATA_DIR) + "/cells/" + n + ".cell");
    REQUIRE_MESSAGE(f.good(), n);
    std::stringstream buf;
    buf << f.rdbuf();
    auto u = UnitCellComplex::parse(buf.str());
    CHECK_MESSAGE(u.same_data(builtin(n)), n);
  }
}
