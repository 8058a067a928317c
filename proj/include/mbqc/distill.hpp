#pragma once

#include <cstdint>
#include <vector>

#include "mbqc/pauli_channel.hpp"

namespace mbqc {

struct DistillationOutcome {
  double success_prob = 1.0;
  BellDiagonalState output;
  std::vector<double> round_fidelities;  // concatenated protocols only
};

// Exact DEJMPS recurrence computed by Pauli-class propagation through the
// bilateral rotation + CNOT + coincidence-measurement circuit. Keeps the
// first pair.
DistillationOutcome dejmps(const BellDiagonalState& a, const BellDiagonalState& b);

// Balanced binary distillation tree over `copies` identical inputs (copies a
// power of two). The success probability multiplies over every node of the
// tree: one failed sub-distillation discards the whole attempt.
DistillationOutcome concatenate_dejmps(const BellDiagonalState& input, uint32_t copies);

// 5-to-1 distillation through the decoding circuit of the five-qubit code,
// applied to both halves of five identical Bell states. Measurement patterns
// are labeled by the per-pair coincidence flips d in F_2^4 (d = 0 is the
// noiseless branch).
struct AcceptancePolicy {
  std::vector<uint8_t> accepted;  // 4-bit patterns

  static AcceptancePolicy strict() { return {{0}}; }
  static AcceptancePolicy all() {
    AcceptancePolicy p;
    for (int d = 0; d < 16; ++d) p.accepted.push_back(static_cast<uint8_t>(d));
    return p;
  }
};

struct FiveToOneTable {
  // per measurement pattern d: branch probability and the kept pair's
  // (unnormalized) Bell-component weights
  std::array<std::array<double, 4>, 16> weight{};
  double pattern_prob(uint8_t d) const {
    double s = 0;
    for (double v : weight[d]) s += v;
    return s;
  }
};

FiveToOneTable five_to_one_table(const BellDiagonalState& input);

DistillationOutcome five_to_one(const BellDiagonalState& input, const AcceptancePolicy& policy);

// The 16 nested policies ordered by how many non-coinciding patterns they
// accept; pattern k is admitted in order of decreasing conditional output
// fidelity, so the family traces a monotone trade-off curve.
std::vector<AcceptancePolicy> five_to_one_policies(const BellDiagonalState& input);

// Map a distillation outcome onto the noise/erasure plane: the output
// infidelity becomes the network error rate, failed attempts become link
// erasures.
std::pair<double, double> tradeoff_point(const DistillationOutcome& o);

}  // namespace mbqc
