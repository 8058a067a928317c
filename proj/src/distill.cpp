#include "mbqc/distill.hpp"

#include <algorithm>
#include <cmath>

namespace mbqc {

namespace {

// Bell component <-> one-sided Pauli class: (x,z) packs as x + 2z.
// Phi+ = I(0), Phi- = Z(2), Psi+ = X(1), Psi- = Y(3).
constexpr int kClassOf[4] = {0, 2, 1, 3};
constexpr int kBellOf[4] = {0, 2, 1, 3};  // involution

}  // namespace

DistillationOutcome dejmps(const BellDiagonalState& a, const BellDiagonalState& b) {
  a.check();
  b.check();
  double cls_a[4] = {0, 0, 0, 0}, cls_b[4] = {0, 0, 0, 0};
  for (int k = 0; k < 4; ++k) {
    cls_a[kClassOf[k]] = a.p[k];
    cls_b[kClassOf[k]] = b.p[k];
  }
  // bilateral Rx(+-pi/2): Y <-> Z on each pair, i.e. swap classes 3 and 2
  std::swap(cls_a[2], cls_a[3]);
  std::swap(cls_b[2], cls_b[3]);

  double out[4] = {0, 0, 0, 0};
  double success = 0;
  for (int ca = 0; ca < 4; ++ca)
    for (int cb = 0; cb < 4; ++cb) {
      double pr = cls_a[ca] * cls_b[cb];
      if (pr == 0) continue;
      int x1 = ca & 1, z1 = (ca >> 1) & 1;
      int x2 = cb & 1, z2 = (cb >> 1) & 1;
      // bilateral CNOT pair0 -> pair1
      int nz1 = z1 ^ z2;
      int nx2 = x2 ^ x1;
      if (nx2) continue;  // measurement outcomes disagree: discard
      success += pr;
      out[x1 + 2 * nz1] += pr;
    }
  DistillationOutcome o;
  o.success_prob = success;
  if (success > 0) {
    for (int c = 0; c < 4; ++c) o.output.p[kBellOf[c]] = out[c] / success;
  } else {
    o.output.p = {0, 0, 0, 0};  // reported as failure outcome
  }
  return o;
}

DistillationOutcome concatenate_dejmps(const BellDiagonalState& input, uint32_t copies) {
  if (copies < 2 || (copies & (copies - 1)) != 0)
    throw InputError("concatenate_dejmps: copies must be a power of two >= 2");
  DistillationOutcome o;
  o.output = input;
  o.success_prob = 1.0;
  uint32_t leaves = copies;
  while (leaves > 1) {
    auto step = dejmps(o.output, o.output);
    leaves /= 2;
    // every node of this round must succeed; `leaves` nodes this round
    o.success_prob *= std::pow(step.success_prob, static_cast<double>(leaves));
    o.output = step.output;
    o.round_fidelities.push_back(o.output.fidelity());
  }
  return o;
}

// ---------------------------------------------------------------------------
// 5-to-1

namespace {

PauliOp pauli_from_string(const char* s, std::size_t n) {
  PauliOp p(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (s[i] == 'X') p.x[i] = 1;
    if (s[i] == 'Z') p.z[i] = 1;
    if (s[i] == 'Y') p.x[i] = p.z[i] = 1;
  }
  return p;
}

struct FiveToOneCircuit {
  CliffordCircuit decode;  // on 5 qubits: logical Z -> Z_0, g_k -> Z_k
  PauliOp s1{10}, s2{10};  // kept-pair stabilizers of the noiseless output

  FiveToOneCircuit() {
    std::vector<PauliOp> gens = {pauli_from_string("ZZZZZ", 5), pauli_from_string("XZZXI", 5),
                                 pauli_from_string("IXZZX", 5), pauli_from_string("XIXZZ", 5),
                                 pauli_from_string("ZXIXZ", 5)};
    decode = diagonalizing_circuit(gens);

    // Noiseless bilateral run: find the kept-pair stabilizers after measuring
    // the four syndrome pairs.
    Rng rng(0xf1fe, 0, 0);
    StabilizerTableau t(10);
    for (int i = 0; i < 5; ++i) {
      t.h(i);
      t.cx(i, i + 5);
    }
    CliffordCircuit both;
    both.n = 10;
    for (const auto& g : decode.gates) {
      both.gates.push_back({g.g, g.a, g.b});
      both.gates.push_back({g.g, g.a + 5, g.b + 5});
    }
    both.apply_to(t);
    for (int i = 1; i < 5; ++i) {
      t.measure_z(i, rng);
      t.measure_z(i + 5, rng);
    }
    // Kept-pair stabilizers: after the Z measurements no generator can carry
    // X on a measured qubit, so reducing rows modulo the collapsed Z's leaves
    // a rank-2 group on qubits {0, 5}. The B half saw no errors, so its
    // restriction runs over all four Paulis; pick the X- and Z-carrying ones.
    auto reduce = [](PauliOp s) {
      for (int q = 0; q < 10; ++q) {
        if (q == 0 || q == 5) continue;
        if (s.x[q]) throw InternalError("five_to_one: X on a collapsed qubit");
        s.z[q] = 0;
      }
      s.phase = 0;
      return s;
    };
    auto bits4 = [](const PauliOp& s) {
      return (s.x[0] << 3) | (s.z[0] << 2) | (s.x[5] << 1) | s.z[5];
    };
    // echelon form over the 4-bit restrictions
    std::array<std::pair<int, PauliOp>, 4> slot{
        std::pair<int, PauliOp>{0, PauliOp(10)}, {0, PauliOp(10)}, {0, PauliOp(10)},
        {0, PauliOp(10)}};
    for (int k = 0; k < 10; ++k) {
      PauliOp s = reduce(t.stabilizer(k));
      int b = bits4(s);
      for (int bit = 3; bit >= 0 && b; --bit) {
        if (!((b >> bit) & 1)) continue;
        if (slot[bit].first) {
          b ^= slot[bit].first;
          s.mul(slot[bit].second);
          s = reduce(s);
        } else {
          slot[bit] = {b, s};
          b = 0;
        }
      }
    }
    std::vector<PauliOp> basis;
    for (auto& [bits, op] : slot)
      if (bits) basis.push_back(op);
    if (basis.size() != 2)
      throw InternalError("five_to_one: kept-pair stabilizers not found");
    PauliOp cand12 = basis[0];
    cand12.mul(basis[1]);
    cand12 = reduce(cand12);
    bool got1 = false, got2 = false;
    for (const PauliOp& s : {basis[0], basis[1], cand12}) {
      if (s.x[5] == 1 && s.z[5] == 0) s1 = s, got1 = true;
      if (s.x[5] == 0 && s.z[5] == 1) s2 = s, got2 = true;
    }
    if (!got1 || !got2)
      throw InternalError("five_to_one: unexpected kept-pair stabilizer frame");
  }
};

const FiveToOneCircuit& five_circuit() {
  static FiveToOneCircuit c;
  return c;
}

}  // namespace

FiveToOneTable five_to_one_table(const BellDiagonalState& input) {
  input.check();
  const auto& fc = five_circuit();

  double cls[4];
  for (int k = 0; k < 4; ++k) cls[kClassOf[k]] = input.p[k];

  FiveToOneTable table;
  // Enumerate the 4^5 one-sided input classes.
  for (int e0 = 0; e0 < 4; ++e0)
    for (int e1 = 0; e1 < 4; ++e1)
      for (int e2 = 0; e2 < 4; ++e2)
        for (int e3 = 0; e3 < 4; ++e3)
          for (int e4 = 0; e4 < 4; ++e4) {
            double pr = cls[e0] * cls[e1] * cls[e2] * cls[e3] * cls[e4];
            if (pr == 0) continue;
            PauliOp p(5);
            const int es[5] = {e0, e1, e2, e3, e4};
            for (int q = 0; q < 5; ++q) {
              p.x[q] = es[q] & 1;
              p.z[q] = (es[q] >> 1) & 1;
            }
            fc.decode.conjugate(p);
            uint8_t pattern = 0;
            for (int q = 1; q < 5; ++q) pattern |= p.x[q] << (q - 1);
            PauliOp kept(10);
            kept.x[0] = p.x[0];
            kept.z[0] = p.z[0];
            int b1 = kept.commutes(fc.s1) ? 0 : 1;
            int b2 = kept.commutes(fc.s2) ? 0 : 1;
            int bell = b1 + 2 * b2;
            table.weight[pattern][bell] += pr;
          }
  return table;
}

DistillationOutcome five_to_one(const BellDiagonalState& input,
                                const AcceptancePolicy& policy) {
  if (policy.accepted.empty()) throw InputError("five_to_one: empty acceptance policy");
  auto table = five_to_one_table(input);
  DistillationOutcome o;
  std::array<double, 4> acc{0, 0, 0, 0};
  double success = 0;
  for (uint8_t d : policy.accepted) {
    if (d >= 16) throw InputError("five_to_one: bad pattern");
    for (int k = 0; k < 4; ++k) acc[k] += table.weight[d][k];
  }
  for (double v : acc) success += v;
  o.success_prob = success;
  if (success > 0)
    for (int k = 0; k < 4; ++k) o.output.p[k] = acc[k] / success;
  else
    o.output.p = {0, 0, 0, 0};
  return o;
}

std::vector<AcceptancePolicy> five_to_one_policies(const BellDiagonalState& input) {
  auto table = five_to_one_table(input);
  std::vector<std::pair<double, uint8_t>> ranked;
  for (int d = 1; d < 16; ++d) {
    double pp = table.pattern_prob(static_cast<uint8_t>(d));
    double fid = pp > 0 ? table.weight[d][0] / pp : 0.0;
    ranked.push_back({fid, static_cast<uint8_t>(d)});
  }
  std::sort(ranked.begin(), ranked.end(), [](const auto& a, const auto& b) {
    return a.first != b.first ? a.first > b.first : a.second < b.second;
  });
  std::vector<AcceptancePolicy> out;
  AcceptancePolicy cur = AcceptancePolicy::strict();
  out.push_back(cur);
  for (const auto& [fid, d] : ranked) {
    cur.accepted.push_back(d);
    out.push_back(cur);
  }
  return out;
}

std::pair<double, double> tradeoff_point(const DistillationOutcome& o) {
  return {1.0 - o.output.fidelity(), 1.0 - o.success_prob};
}

}  // namespace mbqc
