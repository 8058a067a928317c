#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "mbqc/crystal.hpp"
#include "mbqc/pauli_channel.hpp"
#include "mbqc/splitting.hpp"

namespace mbqc {

enum class NoiseModel {
  phenomenological,
  phenomenological_weighted,
  monolithic,
  distributed,
};
NoiseModel noise_model_from_string(const std::string& s);
std::string to_string(NoiseModel m);

enum class GhzMode { fusion, direct };

// A gate schedule: per face-edge incidence (in the order of the unit cell's
// dimension-2 boundary entries) the round in which its CZ fires. Valid
// schedules are proper edge colorings: no face and no edge sees two gates in
// the same round.
struct GateOrdering {
  std::string name;
  uint32_t n_rounds = 0;
  std::vector<uint32_t> round_of_incidence;
};

GateOrdering make_ordering(const UnitCellComplex& u, const std::string& preset);
std::vector<std::string> ordering_presets(const UnitCellComplex& u);
void check_ordering(const UnitCellComplex& u, const GateOrdering& g);

// One measurement-frame flip caused by a propagated fault component.
struct FaultEffect {
  uint8_t side = 0;   // 0: face qubit (primal error), 1: edge qubit (dual)
  uint32_t elem = 0;  // element index in the base complex
  MillerIndex off;    // cell offset relative to the site's cell
};

// An independent noise insertion, repeated per unit cell. Components carry
// probabilities; effects are fixed by the circuit structure alone.
struct FaultSite {
  double fire_prob = 0;            // total non-identity probability
  std::vector<double> comp_prob;   // per non-identity component
  std::vector<uint32_t> comp_off;  // CSR into effects (size comp_prob.size()+1)
  std::vector<FaultEffect> effects;
  std::vector<FaultEffect> participants;  // site exists iff all alive
};

struct ErasureSite {
  double prob = 0;
  std::vector<FaultEffect> qubits;  // erased together (shared fate)
  std::vector<FaultEffect> participants;
};

struct FaultSiteModel {
  NoiseModel kind = NoiseModel::phenomenological;
  NoiseParams params;
  uint64_t cell_id = 0;
  std::vector<FaultSite> sites;
  std::vector<ErasureSite> erasures;
};

// Build the per-unit-cell fault-site model. `plan` may be null for monolithic
// and phenomenological models; `ordering` is required for circuit-level
// models and ignored by the phenomenological ones.
FaultSiteModel characterize(const UnitCellComplex& base, const DistributionPlan* plan,
                            const GateOrdering* ordering, NoiseModel kind,
                            const NoiseParams& params, GhzMode ghz_mode = GhzMode::fusion);

struct ErrorSample {
  Chain primal;  // face-qubit flips
  Chain dual;    // edge-qubit flips
  std::vector<uint32_t> erased_primal;
  std::vector<uint32_t> erased_dual;
};

// Sample one shot of lattice-wide errors: every fault site fires
// independently in every unit cell; effects XOR into the error chains.
ErrorSample sample_errors(const FaultSiteModel& model, const CrystalComplex& crystal,
                          Rng& rng);
void sample_errors_into(const FaultSiteModel& model, const CrystalComplex& crystal,
                        Rng& rng, ErrorSample& out);

// Exact marginal flip probability of one qubit under the model (test oracle;
// walks every site instance).
double analytic_flip_marginal(const FaultSiteModel& model, const CrystalComplex& crystal,
                              int side, uint64_t qubit);

// Closed-form fidelity of a single face stabilizer under preparation noise.
// parties = 1 reads the face as one monolithic qubit, 2 a Bell split, n>=3 an
// n-partite GHZ split. The GHZ diagonal comes from p_n_prime (direct mode) or
// from the fusion circuit fed with Werner(p_n) pairs.
double stabilizer_fidelity(const UnitCellComplex& lattice, uint32_t parties,
                           const NoiseParams& params, GhzMode mode = GhzMode::direct);

}  // namespace mbqc
