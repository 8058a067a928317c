#include "mbqc/builtin_arch.hpp"

namespace mbqc {

namespace {

// Faces split along the diagonal, edges split across matching corner pairs;
// gate-partner components are rings of six qubits linked by Bell pairs.
const char* kCubic6Ring = R"(name cubic_6ring
base cubic
face_split f_x arcs (e_y[0,0,0] e_z[0,0,0]) (e_y[0,0,1] e_z[0,1,0])
face_split f_y arcs (e_z[0,0,0] e_x[0,0,0]) (e_z[1,0,0] e_x[0,0,1])
face_split f_z arcs (e_x[0,0,0] e_y[0,0,0]) (e_x[0,1,0] e_y[1,0,0])
edge_split e_x arcs (f_z[0,0,0] f_y[0,0,0]) (f_z[0,-1,0] f_y[0,0,-1])
edge_split e_y arcs (f_z[0,0,0] f_x[0,0,0]) (f_z[-1,0,0] f_x[0,0,-1])
edge_split e_z arcs (f_y[0,0,0] f_x[0,0,0]) (f_y[-1,0,0] f_x[0,-1,0])
)";

// Full 4-way splits on every face and edge; 4-partite GHZ states, 2-qubit nodes.
const char* kCubic2Node = R"(name cubic_2node
base cubic
face_split f_x parts 4
face_split f_y parts 4
face_split f_z parts 4
edge_split e_x parts 4
edge_split e_y parts 4
edge_split e_z parts 4
)";

// Mixture of Bell pairs and 3-partite GHZ states arranged so the gate-partner
// components are uniform 7-qubit nodes.
const char* kDiamond7Node = R"(name diamond_7node
base diamond
face_split f_x arcs (e_w[0,0,1] e_y[0,0,1]) (e_z[0,1,0] e_w[0,1,0]) (e_y[0,0,0] e_z[0,0,0])
face_split f_y arcs (e_w[0,0,1] e_x[0,0,1] e_z[1,0,0]) (e_w[1,0,0] e_x[0,0,0] e_z[0,0,0])
face_split f_z arcs (e_w[0,1,0] e_x[0,1,0] e_y[1,0,0]) (e_w[1,0,0] e_x[0,0,0] e_y[0,0,0])
face_split f_w arcs (e_z[0,1,0] e_x[0,1,0] e_y[1,0,0]) (e_z[1,0,0] e_x[0,0,1] e_y[0,0,1])
edge_split e_x arcs (f_y[0,0,-1] f_w[0,0,-1]) (f_z[0,0,0] f_y[0,0,0]) (f_w[0,-1,0] f_z[0,-1,0])
edge_split e_y arcs (f_x[0,0,-1] f_w[0,0,-1]) (f_z[0,0,0] f_x[0,0,0]) (f_w[-1,0,0] f_z[-1,0,0])
edge_split e_z arcs (f_x[0,-1,0] f_w[0,-1,0]) (f_y[0,0,0] f_x[0,0,0]) (f_w[-1,0,0] f_y[-1,0,0])
edge_split e_w arcs (f_x[0,-1,0] f_z[0,-1,0]) (f_y[0,0,-1] f_x[0,0,-1]) (f_z[-1,0,0] f_y[-1,0,0])
)";

// 3-partite GHZ states only; nodes are 4-qubit rings.
const char* kDiamond4Ring = R"(name diamond_4ring
base diamond
face_split f_x arcs (e_y[0,0,0] e_z[0,0,0]) (e_w[0,0,1] e_y[0,0,1]) (e_z[0,1,0] e_w[0,1,0])
face_split f_y arcs (e_x[0,0,0] e_z[0,0,0]) (e_w[0,0,1] e_x[0,0,1]) (e_z[1,0,0] e_w[1,0,0])
face_split f_z arcs (e_x[0,0,0] e_y[0,0,0]) (e_w[0,1,0] e_x[0,1,0]) (e_y[1,0,0] e_w[1,0,0])
face_split f_w arcs (e_x[0,0,1] e_y[0,0,1]) (e_z[0,1,0] e_x[0,1,0]) (e_y[1,0,0] e_z[1,0,0])
edge_split e_x arcs (f_w[0,0,-1] f_z[0,0,0]) (f_y[0,0,0] f_w[0,-1,0]) (f_z[0,-1,0] f_y[0,0,-1])
edge_split e_y arcs (f_w[0,0,-1] f_z[0,0,0]) (f_x[0,0,0] f_w[-1,0,0]) (f_z[-1,0,0] f_x[0,0,-1])
edge_split e_z arcs (f_w[0,-1,0] f_y[0,0,0]) (f_x[0,0,0] f_w[-1,0,0]) (f_y[-1,0,0] f_x[0,-1,0])
edge_split e_w arcs (f_z[0,-1,0] f_y[0,0,-1]) (f_x[0,0,-1] f_z[-1,0,0]) (f_y[-1,0,0] f_x[0,-1,0])
)";

// Bell pairs only; nodes carry 12 qubits.
const char* kDec12Node = R"(name dec_12node
base double_edge_cubic
face_split f_x arcs (e_y[0,0,0] d_y[0,0,0] d_z[0,0,0] e_z[0,0,0]) (d_y[0,0,1] e_y[0,0,1] e_z[0,1,0] d_z[0,1,0])
face_split f_y arcs (e_x[0,0,0] d_x[0,0,0] d_z[0,0,0] e_z[0,0,0]) (d_x[0,0,1] e_x[0,0,1] e_z[1,0,0] d_z[1,0,0])
face_split f_z arcs (e_x[0,0,0] d_x[0,0,0] d_y[0,0,0] e_y[0,0,0]) (d_x[0,1,0] e_x[0,1,0] e_y[1,0,0] d_y[1,0,0])
face_split g_x arcs (e_y[0,0,0] d_y[0,0,0] d_z[0,0,0] e_z[0,0,0]) (d_y[0,0,1] e_y[0,0,1] e_z[0,1,0] d_z[0,1,0])
face_split g_y arcs (e_x[0,0,0] d_x[0,0,0] d_z[0,0,0] e_z[0,0,0]) (d_x[0,0,1] e_x[0,0,1] e_z[1,0,0] d_z[1,0,0])
face_split g_z arcs (e_x[0,0,0] d_x[0,0,0] d_y[0,0,0] e_y[0,0,0]) (d_x[0,1,0] e_x[0,1,0] e_y[1,0,0] d_y[1,0,0])
edge_split e_x arcs (f_z[0,0,0] g_z[0,0,0] g_y[0,0,0] f_y[0,0,0]) (g_z[0,-1,0] f_z[0,-1,0] f_y[0,0,-1] g_y[0,0,-1])
edge_split e_y arcs (f_z[0,0,0] g_z[0,0,0] g_x[0,0,0] f_x[0,0,0]) (g_z[-1,0,0] f_z[-1,0,0] f_x[0,0,-1] g_x[0,0,-1])
edge_split e_z arcs (f_y[0,0,0] g_y[0,0,0] g_x[0,0,0] f_x[0,0,0]) (g_y[-1,0,0] f_y[-1,0,0] f_x[0,-1,0] g_x[0,-1,0])
edge_split d_x arcs (f_z[0,0,0] g_z[0,0,0] g_y[0,0,0] f_y[0,0,0]) (g_z[0,-1,0] f_z[0,-1,0] f_y[0,0,-1] g_y[0,0,-1])
edge_split d_y arcs (f_z[0,0,0] g_z[0,0,0] g_x[0,0,0] f_x[0,0,0]) (g_z[-1,0,0] f_z[-1,0,0] f_x[0,0,-1] g_x[0,0,-1])
edge_split d_z arcs (f_y[0,0,0] g_y[0,0,0] g_x[0,0,0] f_x[0,0,0]) (g_y[-1,0,0] f_y[-1,0,0] f_x[0,-1,0] g_x[0,-1,0])
)";

// 4-partite GHZ states on every face and edge.
const char* kDec4Ring = R"(name dec_4ring
base double_edge_cubic
face_split f_x parts 4
face_split f_y parts 4
face_split f_z parts 4
face_split g_x parts 4
face_split g_y parts 4
face_split g_z parts 4
edge_split e_x parts 4
edge_split e_y parts 4
edge_split e_z parts 4
edge_split d_x parts 4
edge_split d_y parts 4
edge_split d_z parts 4
)";

}  // namespace

const char* builtin_arch_text(const std::string& name) {
  if (name == "cubic_6ring") return kCubic6Ring;
  if (name == "cubic_2node") return kCubic2Node;
  if (name == "diamond_7node") return kDiamond7Node;
  if (name == "diamond_4ring") return kDiamond4Ring;
  if (name == "dec_12node") return kDec12Node;
  if (name == "dec_4ring") return kDec4Ring;
  return nullptr;
}

}  // namespace mbqc
