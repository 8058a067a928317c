#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "mbqc/z2.hpp"

namespace mbqc {

// Lattice translation r = a*x + b*y + c*z in lattice-vector units.
struct MillerIndex {
  int8_t a = 0, b = 0, c = 0;

  MillerIndex() = default;
  MillerIndex(int a_, int b_, int c_)
      : a(static_cast<int8_t>(a_)), b(static_cast<int8_t>(b_)), c(static_cast<int8_t>(c_)) {}

  MillerIndex operator-() const { return {-a, -b, -c}; }
  MillerIndex operator+(const MillerIndex& o) const { return {a + o.a, b + o.b, c + o.c}; }
  MillerIndex operator-(const MillerIndex& o) const { return {a - o.a, b - o.b, c - o.c}; }

  auto operator<=>(const MillerIndex&) const = default;

  bool in_unit_range() const {
    return a >= -1 && a <= 1 && b >= -1 && b <= 1 && c >= -1 && c <= 1;
  }

  int operator[](int axis) const { return axis == 0 ? a : axis == 1 ? b : c; }

  std::string str() const;
};

// One boundary relation: element `source` of Q_d has `target` of Q_{d-1} on
// its boundary, in the unit cell translated by `shift`.
struct BoundaryEntry {
  uint32_t source = 0;
  uint32_t target = 0;
  MillerIndex shift;

  auto operator<=>(const BoundaryEntry&) const = default;
};

// Per qubit-carrying element (faces and edges): the count of incident
// partners. `regular` when all faces and all edges agree.
struct ValencyTable {
  std::vector<uint32_t> face_valency;  // boundary edges per face
  std::vector<uint32_t> edge_valency;  // coboundary faces per edge
  bool regular = false;
  uint32_t z = 0;  // common valency when regular
};

// Quotient chain complex of a crystal: vector spaces Q_D..Q_0 with
// Miller-indexed quotient boundary maps. D is 2 or 3; for D==2 the dimension-3
// layer is empty. Immutable in normal use; the splitting code builds modified
// copies.
class UnitCellComplex {
 public:
  std::string name;
  int dim = 3;
  // sizes[d] = |Q_d| for d in 0..3.
  std::array<uint32_t, 4> sizes{0, 0, 0, 0};
  std::array<std::vector<std::string>, 4> labels;
  // bounds[d]: entries of the quotient boundaries Q_d -> Q_{d-1}, d in 1..3.
  std::array<std::vector<BoundaryEntry>, 4> bounds;

  uint64_t id() const;  // content hash; doubles as the Chain complex_id

  uint32_t element_index(int d, const std::string& label) const;

  // The boundary map at dimension d and Miller index r, as a matrix
  // |Q_{d-1}| x |Q_d|.
  BinaryMatrix boundary_matrix(int d, MillerIndex r) const;
  std::vector<MillerIndex> millers(int d) const;

  // Zero-map conditions: for every d in {2..dim} and every reachable total
  // translation r, sum_p bnd_{d-1}[p] * bnd_d[r-p] must vanish. Returns
  // human-readable violations; empty means valid.
  std::vector<std::string> validate() const;

  ValencyTable valency() const;

  // Dual complex: Q~_i = Q_{D-i}, dual boundary = transpose with reversed
  // Miller index. Involution: dualize(dualize(u)) == u entry-for-entry.
  UnitCellComplex dualize() const;

  // Text form (the unit-cell definition format; see data/cells/*.cell).
  std::string serialize() const;
  static UnitCellComplex parse(const std::string& text);

  bool same_data(const UnitCellComplex& o) const {
    return dim == o.dim && sizes == o.sizes && bounds == o.bounds;
  }

  void check_well_formed() const;  // bounds sorted, indices in range
  void normalize();                // sort + cancel duplicate entries mod 2
};

// Builtin lattice library. Names: square, triangular, cubic, diamond,
// double_edge_cubic, triamond.
UnitCellComplex builtin(const std::string& name);
std::vector<std::string> builtin_names();

// Isomorphism of labeled quotient complexes up to relabeling of the basis
// elements per dimension and a signed permutation of the three axes.
// Exponential worst case; unit cells are small.
bool isomorphic(const UnitCellComplex& u, const UnitCellComplex& v);

}  // namespace mbqc
