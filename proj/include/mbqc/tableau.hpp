#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "mbqc/errors.hpp"
#include "mbqc/rng.hpp"

namespace mbqc {

// Pauli operator in X^x Z^z form with a phase exponent of i (mod 4).
// Conjugation rules follow the standard symplectic update.
struct PauliOp {
  std::vector<uint8_t> x, z;
  int phase = 0;  // i^phase

  explicit PauliOp(std::size_t n) : x(n, 0), z(n, 0) {}
  std::size_t size() const { return x.size(); }

  bool identity_class() const {
    for (std::size_t q = 0; q < size(); ++q)
      if (x[q] || z[q]) return false;
    return true;
  }

  void mul(const PauliOp& o) {  // this <- this * o (phases tracked)
    for (std::size_t q = 0; q < size(); ++q) {
      // Z^z X^x' reorder cost
      phase = (phase + 2 * (z[q] & o.x[q])) & 3;
      x[q] ^= o.x[q];
      z[q] ^= o.z[q];
    }
    phase = (phase + o.phase) & 3;
  }

  bool commutes(const PauliOp& o) const {
    int t = 0;
    for (std::size_t q = 0; q < size(); ++q) t ^= (x[q] & o.z[q]) ^ (z[q] & o.x[q]);
    return t == 0;
  }

  void conj_h(std::size_t q) {
    phase = (phase + 2 * (x[q] & z[q])) & 3;
    std::swap(x[q], z[q]);
  }
  void conj_s(std::size_t q) {
    phase = (phase + x[q]) & 3;
    z[q] ^= x[q];
  }
  void conj_sdg(std::size_t q) {
    phase = (phase + 4 - x[q]) & 3;
    z[q] ^= x[q];
  }
  void conj_cx(std::size_t a, std::size_t b) {
    x[b] ^= x[a];
    z[a] ^= z[b];
  }
  void conj_cz(std::size_t a, std::size_t b) {
    phase = (phase + 2 * (x[a] & x[b])) & 3;
    z[a] ^= x[b];
    z[b] ^= x[a];
  }
  void conj_x(std::size_t q) { phase = (phase + 2 * z[q]) & 3; }
  void conj_z(std::size_t q) { phase = (phase + 2 * x[q]) & 3; }

  std::string str() const;
};

// Aaronson-Gottesman tableau: n destabilizer rows, n stabilizer rows, phase
// bits. Starts in |0...0>.
class StabilizerTableau {
 public:
  explicit StabilizerTableau(std::size_t n);

  std::size_t num_qubits() const { return n_; }

  void h(std::size_t q);
  void s(std::size_t q);
  void cx(std::size_t a, std::size_t b);
  void cz(std::size_t a, std::size_t b);
  void x(std::size_t q);
  void z(std::size_t q);

  struct MeasureResult {
    int outcome = 0;  // 0 or 1
    bool deterministic = false;
  };
  MeasureResult measure_z(std::size_t q, Rng& rng);
  MeasureResult measure_x(std::size_t q, Rng& rng);
  void prep_plus(std::size_t q, Rng& rng);  // reset to |+>

  // +1 / -1 if P (a Hermitian Pauli given as masks) is, up to sign, in the
  // stabilizer group; 0 if the expectation vanishes.
  int pauli_expectation(const PauliOp& p) const;

  // Generator access (k in 0..n-1). Rows are Hermitian Paulis.
  PauliOp stabilizer(std::size_t k) const;
  PauliOp destabilizer(std::size_t k) const;

  // Internal consistency (commutation structure); used by tests.
  void check_invariants() const;

 private:
  std::size_t n_;
  // row-major: rows 0..n-1 destabilizers, n..2n-1 stabilizers
  std::vector<uint8_t> xs_, zs_;
  std::vector<uint8_t> r_;  // phase bit per row (sign (-1)^r)

  uint8_t& X(std::size_t row, std::size_t q) { return xs_[row * n_ + q]; }
  uint8_t& Z(std::size_t row, std::size_t q) { return zs_[row * n_ + q]; }
  uint8_t X(std::size_t row, std::size_t q) const { return xs_[row * n_ + q]; }
  uint8_t Z(std::size_t row, std::size_t q) const { return zs_[row * n_ + q]; }

  void rowsum(std::size_t h, std::size_t i);
  int rowsum_into(std::vector<uint8_t>& xh, std::vector<uint8_t>& zh, int rh,
                  std::size_t i) const;
};

// Clifford circuit as an explicit gate list; enough for the fusion and
// distillation circuits and for synthesizing measurement frames.
struct CliffordCircuit {
  enum class G { H, S, Sdg, CX, CZ, X, Z };
  struct Gate {
    G g;
    uint32_t a = 0, b = 0;
  };
  std::size_t n = 0;
  std::vector<Gate> gates;

  void h(uint32_t q) { gates.push_back({G::H, q, 0}); }
  void sgate(uint32_t q) { gates.push_back({G::S, q, 0}); }
  void sdg(uint32_t q) { gates.push_back({G::Sdg, q, 0}); }
  void cx(uint32_t a, uint32_t b) { gates.push_back({G::CX, a, b}); }
  void cz(uint32_t a, uint32_t b) { gates.push_back({G::CZ, a, b}); }
  void xgate(uint32_t q) { gates.push_back({G::X, q, 0}); }
  void zgate(uint32_t q) { gates.push_back({G::Z, q, 0}); }

  void apply_to(StabilizerTableau& t) const;
  void conjugate(PauliOp& p) const;          // p -> C p C^dagger
  void conjugate_inverse(PauliOp& p) const;  // p -> C^dagger p C
};

// Clifford circuit C with C g_k C^dagger = +/- Z_k for the given commuting,
// independent generators (Gaussian elimination over the symplectic group).
CliffordCircuit diagonalizing_circuit(const std::vector<PauliOp>& generators);

}  // namespace mbqc
