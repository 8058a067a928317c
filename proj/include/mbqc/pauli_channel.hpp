#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "mbqc/errors.hpp"
#include "mbqc/tableau.hpp"

namespace mbqc {

struct DenseOp;

// Noise rates shared across the simulation layers. `p_o` sweeps set the
// aliased rates in the experiment layer; here every rate is explicit.
struct NoiseParams {
  double p_p = 0;        // preparation phase-flip
  double p_g = 0;        // two-qubit depolarizing after every entangling gate
  double p_m = 0;        // classical measurement flip
  double p_n = 0;        // network (Werner) error rate
  double p_e = 0;        // link erasure probability
  double p_n_prime = 0;  // direct diagonal GHZ noise

  void check() const {
    for (double v : {p_p, p_g, p_m, p_n, p_e, p_n_prime})
      if (v < 0 || v > 1) throw InputError("noise probability out of range");
  }
};

// Diagonal mixture over the Bell basis (Phi+, Phi-, Psi+, Psi-).
struct BellDiagonalState {
  std::array<double, 4> p{1, 0, 0, 0};

  static BellDiagonalState werner(double p_n);
  void check() const;
  double fidelity() const;  // Phi+ weight
};

// Diagonal mixture over the sign patterns of the GHZ stabilizer basis
// <X_0..X_{n-1}, Z_0 Z_1, ..., Z_0 Z_{n-1}>. Component index packs the sign
// bits: bit 0 flips the X string, bit i (i>=1) flips Z_0 Z_i. Arity 2
// coincides with the Bell ordering above.
struct GhzDiagonalState {
  uint32_t arity = 2;
  std::vector<double> p{1, 0, 0, 0};

  static GhzDiagonalState from_bell(const BellDiagonalState& b);
  static GhzDiagonalState direct(uint32_t arity, double p_n_prime);
  void check() const;

  // Canonical destabilizer representative of a sign pattern:
  // Z_0^{s_X} X_1^{b_1} ... X_{n-1}^{b_{n-1}}.
  PauliOp component_rep(uint32_t pattern) const;
};

// Exact output diagonal of the Bell-fusion circuit building an n-partite GHZ
// state from n-1 Bell pairs with noisy CX gates (p_g) and noisy Z-basis
// measurements (p_m) feeding the conditional bit-flips.
GhzDiagonalState ghz_fusion(const std::vector<BellDiagonalState>& inputs, uint32_t arity,
                            const NoiseParams& noise);

// Twirl a small dense state over the stabilizer group of |psi0> (given by the
// tableau); returns the probabilities over the destabilizer classes, indexed
// by the destabilizer-generator subset mask.
std::vector<double> twirl_to_pauli(const DenseOp& rho, const StabilizerTableau& s0);

}  // namespace mbqc
