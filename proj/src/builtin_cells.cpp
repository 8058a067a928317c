#include <string>

#include "mbqc/builtin_cells.hpp"

namespace mbqc {

namespace {

const char* kSquare = R"(# 2D square lattice: one face, two edges, one vertex per cell
name square
dim 2
elements 2 f
elements 1 e_x e_y
elements 0 v
boundary 2 f e_x 0 0 0
boundary 2 f e_x 0 1 0
boundary 2 f e_y 0 0 0
boundary 2 f e_y 1 0 0
boundary 1 e_x v 0 0 0
boundary 1 e_x v 1 0 0
boundary 1 e_y v 0 0 0
boundary 1 e_y v 0 1 0
)";

const char* kTriangular = R"(# 2D triangular lattice: square with every face split along the diagonal
name triangular
dim 2
elements 2 f_a f_b
elements 1 e_x e_y e_d
elements 0 v
boundary 2 f_a e_x 0 0 0
boundary 2 f_a e_y 1 0 0
boundary 2 f_a e_d 0 0 0
boundary 2 f_b e_x 0 1 0
boundary 2 f_b e_y 0 0 0
boundary 2 f_b e_d 0 0 0
boundary 1 e_x v 0 0 0
boundary 1 e_x v 1 0 0
boundary 1 e_y v 0 0 0
boundary 1 e_y v 0 1 0
boundary 1 e_d v 0 0 0
boundary 1 e_d v 1 1 0
)";

const char* kCubic = R"(# simple cubic lattice: 1 cell, 3 faces, 3 edges, 1 vertex per cell
name cubic
dim 3
elements 3 q
elements 2 f_x f_y f_z
elements 1 e_x e_y e_z
elements 0 v
boundary 3 q f_x 0 0 0
boundary 3 q f_x 1 0 0
boundary 3 q f_y 0 0 0
boundary 3 q f_y 0 1 0
boundary 3 q f_z 0 0 0
boundary 3 q f_z 0 0 1
boundary 2 f_x e_y 0 0 0
boundary 2 f_x e_y 0 0 1
boundary 2 f_x e_z 0 0 0
boundary 2 f_x e_z 0 1 0
boundary 2 f_y e_z 0 0 0
boundary 2 f_y e_z 1 0 0
boundary 2 f_y e_x 0 0 0
boundary 2 f_y e_x 0 0 1
boundary 2 f_z e_x 0 0 0
boundary 2 f_z e_x 0 1 0
boundary 2 f_z e_y 0 0 0
boundary 2 f_z e_y 1 0 0
boundary 1 e_x v 0 0 0
boundary 1 e_x v 1 0 0
boundary 1 e_y v 0 0 0
boundary 1 e_y v 0 1 0
boundary 1 e_z v 0 0 0
boundary 1 e_z v 0 0 1
)";

// Cubic after one split of the primal vertex and one of the dual vertex,
// each pulling the three positive edge (face) ends onto the new vertex
// (cell). Self-dual, regular with valency 6.
const char* kDiamond = R"(# diamond lattice: 2 cells, 4 faces, 4 edges, 2 vertices per cell
name diamond
dim 3
elements 3 q0 q1
elements 2 f_x f_y f_z f_w
elements 1 e_x e_y e_z e_w
elements 0 v0 v1
boundary 3 q0 f_w 0 0 0
boundary 3 q0 f_x 1 0 0
boundary 3 q0 f_y 0 1 0
boundary 3 q0 f_z 0 0 1
boundary 3 q1 f_x 0 0 0
boundary 3 q1 f_y 0 0 0
boundary 3 q1 f_z 0 0 0
boundary 3 q1 f_w 0 0 0
boundary 2 f_x e_y 0 0 0
boundary 2 f_x e_y 0 0 1
boundary 2 f_x e_z 0 0 0
boundary 2 f_x e_z 0 1 0
boundary 2 f_x e_w 0 0 1
boundary 2 f_x e_w 0 1 0
boundary 2 f_y e_x 0 0 0
boundary 2 f_y e_x 0 0 1
boundary 2 f_y e_z 0 0 0
boundary 2 f_y e_z 1 0 0
boundary 2 f_y e_w 0 0 1
boundary 2 f_y e_w 1 0 0
boundary 2 f_z e_x 0 0 0
boundary 2 f_z e_x 0 1 0
boundary 2 f_z e_y 0 0 0
boundary 2 f_z e_y 1 0 0
boundary 2 f_z e_w 0 1 0
boundary 2 f_z e_w 1 0 0
boundary 2 f_w e_x 0 0 1
boundary 2 f_w e_x 0 1 0
boundary 2 f_w e_y 0 0 1
boundary 2 f_w e_y 1 0 0
boundary 2 f_w e_z 0 1 0
boundary 2 f_w e_z 1 0 0
boundary 1 e_x v1 0 0 0
boundary 1 e_x v0 1 0 0
boundary 1 e_y v1 0 0 0
boundary 1 e_y v0 0 1 0
boundary 1 e_z v1 0 0 0
boundary 1 e_z v0 0 0 1
boundary 1 e_w v0 0 0 0
boundary 1 e_w v1 0 0 0
)";

// Cubic with every edge and every dual edge (face) subdivided: each original
// face position carries two parallel 8-gon faces through a lens cell, and
// each syndrome-graph bond becomes two qubit edges in series. Regular with
// valency 8.
const char* kDoubleEdgeCubic = R"(# double-edge cubic lattice: 4 cells, 6 faces, 6 edges, 4 vertices per cell
name double_edge_cubic
dim 3
elements 3 q0 q1 q2 q3
elements 2 f_x f_y f_z g_x g_y g_z
elements 1 e_x e_y e_z d_x d_y d_z
elements 0 v0 v1 v2 v3
boundary 3 q0 f_x 1 0 0
boundary 3 q0 f_y 0 1 0
boundary 3 q0 f_z 0 0 1
boundary 3 q0 g_x 0 0 0
boundary 3 q0 g_y 0 0 0
boundary 3 q0 g_z 0 0 0
boundary 3 q1 f_x 0 0 0
boundary 3 q1 g_x 0 0 0
boundary 3 q2 f_y 0 0 0
boundary 3 q2 g_y 0 0 0
boundary 3 q3 f_z 0 0 0
boundary 3 q3 g_z 0 0 0
boundary 2 f_x e_y 0 0 0
boundary 2 f_x e_y 0 0 1
boundary 2 f_x e_z 0 0 0
boundary 2 f_x e_z 0 1 0
boundary 2 f_x d_y 0 0 0
boundary 2 f_x d_y 0 0 1
boundary 2 f_x d_z 0 0 0
boundary 2 f_x d_z 0 1 0
boundary 2 g_x e_y 0 0 0
boundary 2 g_x e_y 0 0 1
boundary 2 g_x e_z 0 0 0
boundary 2 g_x e_z 0 1 0
boundary 2 g_x d_y 0 0 0
boundary 2 g_x d_y 0 0 1
boundary 2 g_x d_z 0 0 0
boundary 2 g_x d_z 0 1 0
boundary 2 f_y e_z 0 0 0
boundary 2 f_y e_z 1 0 0
boundary 2 f_y e_x 0 0 0
boundary 2 f_y e_x 0 0 1
boundary 2 f_y d_z 0 0 0
boundary 2 f_y d_z 1 0 0
boundary 2 f_y d_x 0 0 0
boundary 2 f_y d_x 0 0 1
boundary 2 g_y e_z 0 0 0
boundary 2 g_y e_z 1 0 0
boundary 2 g_y e_x 0 0 0
boundary 2 g_y e_x 0 0 1
boundary 2 g_y d_z 0 0 0
boundary 2 g_y d_z 1 0 0
boundary 2 g_y d_x 0 0 0
boundary 2 g_y d_x 0 0 1
boundary 2 f_z e_x 0 0 0
boundary 2 f_z e_x 0 1 0
boundary 2 f_z e_y 0 0 0
boundary 2 f_z e_y 1 0 0
boundary 2 f_z d_x 0 0 0
boundary 2 f_z d_x 0 1 0
boundary 2 f_z d_y 0 0 0
boundary 2 f_z d_y 1 0 0
boundary 2 g_z e_x 0 0 0
boundary 2 g_z e_x 0 1 0
boundary 2 g_z e_y 0 0 0
boundary 2 g_z e_y 1 0 0
boundary 2 g_z d_x 0 0 0
boundary 2 g_z d_x 0 1 0
boundary 2 g_z d_y 0 0 0
boundary 2 g_z d_y 1 0 0
boundary 1 e_x v1 0 0 0
boundary 1 e_x v0 1 0 0
boundary 1 e_y v2 0 0 0
boundary 1 e_y v0 0 1 0
boundary 1 e_z v3 0 0 0
boundary 1 e_z v0 0 0 1
boundary 1 d_x v0 0 0 0
boundary 1 d_x v1 0 0 0
boundary 1 d_y v0 0 0 0
boundary 1 d_y v2 0 0 0
boundary 1 d_z v0 0 0 0
boundary 1 d_z v3 0 0 0
)";

}  // namespace

const char* builtin_cell_text(const std::string& name) {
  if (name == "square") return kSquare;
  if (name == "triangular") return kTriangular;
  if (name == "cubic") return kCubic;
  if (name == "diamond") return kDiamond;
  if (name == "double_edge_cubic") return kDoubleEdgeCubic;
  if (name == "triamond") return builtin_triamond_text();
  return nullptr;
}

}  // namespace mbqc
