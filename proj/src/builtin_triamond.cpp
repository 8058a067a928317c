#include "mbqc/builtin_cells.hpp"

namespace mbqc {

// Derived by a chiral 3-split of the cubic primal vertex followed by the
// mirrored 3-split of the dual vertex (tools/gen_triamond.cpp). The vertex
// net is the maximal abelian cover of K4 (the Laves net); faces and edges
// are regular with valency 10 and the complex is self-dual.
const char* builtin_triamond_text() {
  return R"(# triamond lattice: 4 cells, 6 faces, 6 edges, 4 vertices per cell
name triamond
dim 3
elements 3 q qs1 qs2 qs3
elements 2 f_x f_y f_z qb1 qb2 qb3
elements 1 e_x e_y e_z vb1 vb2 vb3
elements 0 v vs1 vs2 vs3
boundary 3 q qb1 0 0 0
boundary 3 q qb2 0 0 0
boundary 3 q qb3 0 0 0
boundary 3 qs1 f_x 0 0 0
boundary 3 qs1 f_y 0 1 0
boundary 3 qs1 qb1 0 0 0
boundary 3 qs2 f_y 0 0 0
boundary 3 qs2 f_z 0 0 1
boundary 3 qs2 qb2 0 0 0
boundary 3 qs3 f_x 1 0 0
boundary 3 qs3 f_z 0 0 0
boundary 3 qs3 qb3 0 0 0
boundary 2 f_x e_y 0 0 0
boundary 2 f_x e_y 0 0 1
boundary 2 f_x e_z 0 0 0
boundary 2 f_x e_z 0 1 0
boundary 2 f_x vb1 0 1 0
boundary 2 f_x vb1 0 1 1
boundary 2 f_x vb2 0 0 0
boundary 2 f_x vb2 0 1 1
boundary 2 f_x vb3 0 0 0
boundary 2 f_x vb3 0 1 0
boundary 2 f_y e_x 0 0 0
boundary 2 f_y e_x 0 0 1
boundary 2 f_y e_z 0 0 0
boundary 2 f_y e_z 1 0 0
boundary 2 f_y vb1 0 0 0
boundary 2 f_y vb1 0 0 1
boundary 2 f_y vb2 0 0 1
boundary 2 f_y vb2 1 0 1
boundary 2 f_y vb3 0 0 0
boundary 2 f_y vb3 1 0 1
boundary 2 f_z e_x 0 0 0
boundary 2 f_z e_x 0 1 0
boundary 2 f_z e_y 0 0 0
boundary 2 f_z e_y 1 0 0
boundary 2 f_z vb1 0 0 0
boundary 2 f_z vb1 1 1 0
boundary 2 f_z vb2 0 0 0
boundary 2 f_z vb2 1 0 0
boundary 2 f_z vb3 1 0 0
boundary 2 f_z vb3 1 1 0
boundary 2 qb1 e_x 0 1 0
boundary 2 qb1 e_x 0 1 1
boundary 2 qb1 e_y 0 0 0
boundary 2 qb1 e_y 0 0 1
boundary 2 qb1 e_z 0 0 0
boundary 2 qb1 e_z 1 1 0
boundary 2 qb1 vb2 0 0 0
boundary 2 qb1 vb2 1 1 1
boundary 2 qb1 vb3 0 0 0
boundary 2 qb1 vb3 1 1 1
boundary 2 qb2 e_x 0 0 0
boundary 2 qb2 e_x 0 1 1
boundary 2 qb2 e_y 0 0 1
boundary 2 qb2 e_y 1 0 1
boundary 2 qb2 e_z 0 0 0
boundary 2 qb2 e_z 1 0 0
boundary 2 qb2 vb1 0 0 0
boundary 2 qb2 vb1 1 1 1
boundary 2 qb2 vb3 0 0 0
boundary 2 qb2 vb3 1 1 1
boundary 2 qb3 e_x 0 0 0
boundary 2 qb3 e_x 0 1 0
boundary 2 qb3 e_y 0 0 0
boundary 2 qb3 e_y 1 0 1
boundary 2 qb3 e_z 1 0 0
boundary 2 qb3 e_z 1 1 0
boundary 2 qb3 vb1 0 0 0
boundary 2 qb3 vb1 1 1 1
boundary 2 qb3 vb2 0 0 0
boundary 2 qb3 vb2 1 1 1
boundary 1 e_x vs1 0 0 0
boundary 1 e_x vs3 1 0 0
boundary 1 e_y vs1 0 1 0
boundary 1 e_y vs2 0 0 0
boundary 1 e_z vs2 0 0 1
boundary 1 e_z vs3 0 0 0
boundary 1 vb1 v 0 0 0
boundary 1 vb1 vs1 0 0 0
boundary 1 vb2 v 0 0 0
boundary 1 vb2 vs2 0 0 0
boundary 1 vb3 v 0 0 0
boundary 1 vb3 vs3 0 0 0
)";
}

}  // namespace mbqc
