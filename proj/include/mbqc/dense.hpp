#pragma once

#include <cmath>
#include <complex>
#include <vector>

#include "mbqc/errors.hpp"
#include "mbqc/tableau.hpp"

namespace mbqc {

// Small dense complex operators for exact few-qubit math. Row-major square
// matrices; dimensions stay tiny (<= 2^12), nothing here is performance code.
struct DenseOp {
  std::size_t dim = 0;
  std::vector<std::complex<double>> a;

  DenseOp() = default;
  explicit DenseOp(std::size_t d) : dim(d), a(d * d, 0.0) {}

  std::complex<double>& at(std::size_t r, std::size_t c) { return a[r * dim + c]; }
  std::complex<double> at(std::size_t r, std::size_t c) const { return a[r * dim + c]; }

  static DenseOp identity(std::size_t d) {
    DenseOp m(d);
    for (std::size_t i = 0; i < d; ++i) m.at(i, i) = 1.0;
    return m;
  }

  DenseOp dagger() const {
    DenseOp m(dim);
    for (std::size_t r = 0; r < dim; ++r)
      for (std::size_t c = 0; c < dim; ++c) m.at(c, r) = std::conj(at(r, c));
    return m;
  }

  DenseOp mul(const DenseOp& o) const {
    if (dim != o.dim) throw StructuralError("DenseOp::mul: size mismatch");
    DenseOp m(dim);
    for (std::size_t r = 0; r < dim; ++r)
      for (std::size_t k = 0; k < dim; ++k) {
        auto v = at(r, k);
        if (v == std::complex<double>(0.0)) continue;
        for (std::size_t c = 0; c < dim; ++c) m.at(r, c) += v * o.at(k, c);
      }
    return m;
  }

  DenseOp kron(const DenseOp& o) const {
    DenseOp m(dim * o.dim);
    for (std::size_t r1 = 0; r1 < dim; ++r1)
      for (std::size_t c1 = 0; c1 < dim; ++c1) {
        auto v = at(r1, c1);
        if (v == std::complex<double>(0.0)) continue;
        for (std::size_t r2 = 0; r2 < o.dim; ++r2)
          for (std::size_t c2 = 0; c2 < o.dim; ++c2)
            m.at(r1 * o.dim + r2, c1 * o.dim + c2) = v * o.at(r2, c2);
      }
    return m;
  }

  void add_scaled(const DenseOp& o, double w) {
    for (std::size_t i = 0; i < a.size(); ++i) a[i] += w * o.a[i];
  }

  std::complex<double> trace() const {
    std::complex<double> t = 0.0;
    for (std::size_t i = 0; i < dim; ++i) t += at(i, i);
    return t;
  }

  double max_abs_diff(const DenseOp& o) const {
    double m = 0;
    for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - o.a[i]));
    return m;
  }
};

// Dense matrix of i^phase * prod_q X^x Z^z (the PauliOp convention); qubit 0
// is the most significant bit.
inline DenseOp dense_pauli(std::size_t n, const PauliOp& p) {
  using C = std::complex<double>;
  static const C kI[4] = {C(1, 0), C(0, 1), C(-1, 0), C(0, -1)};
  DenseOp m(std::size_t(1) << n);
  std::size_t d = m.dim;
  for (std::size_t col = 0; col < d; ++col) {
    std::size_t row = col;
    C amp = kI[p.phase & 3];
    for (std::size_t q = 0; q < n; ++q) {
      std::size_t bitpos = n - 1 - q;
      int bit = (col >> bitpos) & 1;
      if (p.z[q] && bit) amp = -amp;
      if (p.x[q]) row ^= std::size_t(1) << bitpos;
    }
    m.at(row, col) = amp;
  }
  return m;
}

// rho -> U rho U^dagger for a gate on the listed qubits (qubit 0 = MSB).
void dense_apply_gate(DenseOp& rho, std::size_t n, const DenseOp& u,
                      const std::vector<std::size_t>& qubits);

DenseOp dense_gate_h();
DenseOp dense_gate_s();
DenseOp dense_gate_x();
DenseOp dense_gate_z();
DenseOp dense_gate_cx();
DenseOp dense_gate_cz();

void dense_apply_circuit(DenseOp& rho, std::size_t n, const CliffordCircuit& c);

// Eigenvalues of a Hermitian matrix by cyclic Jacobi sweeps (ascending).
std::vector<double> hermitian_eigenvalues(DenseOp m);

// Statevector of the tableau's stabilizer state (column vector as DenseOp with
// dim x 1 shape folded into the first column of a dim x dim matrix is ugly;
// use a plain vector instead).
std::vector<std::complex<double>> stabilizer_statevector(const StabilizerTableau& t);

}  // namespace mbqc
