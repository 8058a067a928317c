#include "mbqc/pauli_channel.hpp"

#include <algorithm>
#include <cmath>

#include "mbqc/dense.hpp"

namespace mbqc {

BellDiagonalState BellDiagonalState::werner(double p_n) {
  if (p_n < 0 || p_n > 1) throw InputError("werner: probability out of range");
  BellDiagonalState b;
  b.p = {1.0 - p_n, p_n / 3.0, p_n / 3.0, p_n / 3.0};
  return b;
}

void BellDiagonalState::check() const {
  double s = 0;
  for (double v : p) {
    if (v < -1e-12) throw InputError("BellDiagonalState: negative probability");
    s += v;
  }
  if (std::abs(s - 1.0) > 1e-9) throw InputError("BellDiagonalState: not normalized");
}

double BellDiagonalState::fidelity() const { return p[0]; }

GhzDiagonalState GhzDiagonalState::from_bell(const BellDiagonalState& b) {
  GhzDiagonalState g;
  g.arity = 2;
  g.p = {b.p[0], b.p[1], b.p[2], b.p[3]};
  return g;
}

GhzDiagonalState GhzDiagonalState::direct(uint32_t arity, double p_n_prime) {
  if (arity < 2 || arity > 8) throw InputError("GhzDiagonalState: bad arity");
  GhzDiagonalState g;
  g.arity = arity;
  std::size_t comps = std::size_t(1) << arity;
  g.p.assign(comps, p_n_prime / double(comps - 1));
  g.p[0] = 1.0 - p_n_prime;
  return g;
}

void GhzDiagonalState::check() const {
  double s = 0;
  for (double v : p) {
    if (v < -1e-12) throw InputError("GhzDiagonalState: negative probability");
    s += v;
  }
  if (std::abs(s - 1.0) > 1e-9) throw InputError("GhzDiagonalState: not normalized");
  if (p.size() != (std::size_t(1) << arity))
    throw InputError("GhzDiagonalState: wrong component count");
}

PauliOp GhzDiagonalState::component_rep(uint32_t pattern) const {
  PauliOp rep(arity);
  if (pattern & 1u) rep.z[0] = 1;  // flips the X...X generator
  for (uint32_t i = 1; i < arity; ++i)
    if ((pattern >> i) & 1u) rep.x[i] = 1;  // flips Z_0 Z_i
  return rep;
}

// ---------------------------------------------------------------------------
// GHZ fusion: exact propagation of the Pauli-class distribution through the
// Bell-pair fusion circuit (local CX, Z measurement, conditional bit-flip).

namespace {

// Class indices pack 2 bits per qubit: bit 2q = x, bit 2q+1 = z.
inline uint32_t xbit(uint32_t cls, uint32_t q) { return (cls >> (2 * q)) & 1u; }

inline uint32_t conj_cx_class(uint32_t cls, uint32_t a, uint32_t b) {
  // x_b ^= x_a ; z_a ^= z_b
  uint32_t xa = (cls >> (2 * a)) & 1u;
  uint32_t zb = (cls >> (2 * b + 1)) & 1u;
  cls ^= xa << (2 * b);
  cls ^= zb << (2 * a + 1);
  return cls;
}

}  // namespace

GhzDiagonalState ghz_fusion(const std::vector<BellDiagonalState>& inputs, uint32_t arity,
                            const NoiseParams& noise) {
  if (arity < 2 || arity > 4) throw InputError("ghz_fusion: arity must be 2..4");
  if (inputs.size() != arity - 1)
    throw InputError("ghz_fusion: need arity-1 Bell inputs");
  for (const auto& b : inputs) b.check();
  if (arity == 2) {
    GhzDiagonalState g = GhzDiagonalState::from_bell(inputs[0]);
    return g;
  }

  // Qubit layout: GHZ members 0..arity-1; ancilla a_k (measured) = arity+k for
  // fusion k. Pair k spans (member k+1's fusing side): pair 0 = (member0,
  // member1), pair k>=1 = (ancilla k-1, member k+1).
  const uint32_t n_members = arity;
  const uint32_t n_anc = arity - 2;
  const uint32_t n_qubits = n_members + n_anc;
  const uint32_t n_classes = 1u << (2 * n_qubits);

  std::vector<double> dist(n_classes, 0.0);
  dist[0] = 1.0;

  auto apply_pair_state = [&](const BellDiagonalState& b, uint32_t q) {
    // Error rep on one half (qubit q): I, Z (Phi-), X (Psi+), Y (Psi-).
    std::vector<double> next(n_classes, 0.0);
    const uint32_t reps[4] = {0u, 2u << (2 * q), 1u << (2 * q), 3u << (2 * q)};
    for (uint32_t c = 0; c < n_classes; ++c) {
      double pc = dist[c];
      if (pc == 0) continue;
      for (int k = 0; k < 4; ++k) next[c ^ reps[k]] += pc * b.p[k];
    }
    dist.swap(next);
  };

  auto apply_cx = [&](uint32_t a, uint32_t b) {
    std::vector<double> next(n_classes, 0.0);
    for (uint32_t c = 0; c < n_classes; ++c)
      if (dist[c] != 0) next[conj_cx_class(c, a, b)] += dist[c];
    dist.swap(next);
  };

  auto apply_depolarizing = [&](uint32_t a, uint32_t b, double p_g) {
    if (p_g <= 0) return;
    std::vector<double> next(n_classes, 0.0);
    for (uint32_t c = 0; c < n_classes; ++c) {
      double pc = dist[c];
      if (pc == 0) continue;
      next[c] += pc * (1.0 - p_g);
      for (uint32_t pa = 0; pa < 4; ++pa)
        for (uint32_t pb = 0; pb < 4; ++pb) {
          if (pa == 0 && pb == 0) continue;
          uint32_t mask = (pa << (2 * a)) ^ (pb << (2 * b));
          next[c ^ mask] += pc * (p_g / 15.0);
        }
    }
    dist.swap(next);
  };

  // Measure ancilla t in Z (flip prob p_m); conditional X on member c.
  auto measure_and_fix = [&](uint32_t t, uint32_t cq, double p_m) {
    std::vector<double> next(n_classes, 0.0);
    const uint32_t clear = ~(3u << (2 * t));
    const uint32_t xc = 1u << (2 * cq);
    for (uint32_t c = 0; c < n_classes; ++c) {
      double pc = dist[c];
      if (pc == 0) continue;
      uint32_t flip = xbit(c, t);
      uint32_t base = c & clear;
      next[base ^ (flip ? xc : 0u)] += pc * (1.0 - p_m);
      next[base ^ (flip ? 0u : xc)] += pc * p_m;
    }
    dist.swap(next);
  };

  // Build: pair 0 on (member0, member1); fusing member k (k>=2) consumes pair
  // k-1 on (ancilla k-2, member k).
  apply_pair_state(inputs[0], 1);  // rep on member1's half
  for (uint32_t k = 2; k < arity; ++k) {
    uint32_t anc = n_members + (k - 2);
    apply_pair_state(inputs[k - 1], anc);
    // CX from the GHZ-side qubit (member k-1) onto the new pair's near half.
    apply_cx(k - 1, anc);
    apply_depolarizing(k - 1, anc, noise.p_g);
    measure_and_fix(anc, k, noise.p_m);
  }

  GhzDiagonalState g;
  g.arity = arity;
  g.p.assign(std::size_t(1) << arity, 0.0);
  for (uint32_t c = 0; c < n_classes; ++c) {
    double pc = dist[c];
    if (pc == 0) continue;
    // syndrome: s_X = parity of z bits over members; s_{Z0Zi} = x_0 ^ x_i
    uint32_t pat = 0;
    uint32_t sx = 0;
    for (uint32_t q = 0; q < n_members; ++q) sx ^= (c >> (2 * q + 1)) & 1u;
    pat |= sx;
    uint32_t x0 = xbit(c, 0);
    for (uint32_t i = 1; i < n_members; ++i) pat |= (x0 ^ xbit(c, i)) << i;
    g.p[pat] += pc;
  }
  g.check();
  return g;
}

// ---------------------------------------------------------------------------
// Twirl of a dense state over the stabilizer group of |psi0>.

std::vector<double> twirl_to_pauli(const DenseOp& rho, const StabilizerTableau& s0) {
  const std::size_t n = s0.num_qubits();
  if (n > 6) throw InputError("twirl_to_pauli: dense input limited to 6 qubits");
  const std::size_t d = std::size_t(1) << n;
  if (rho.dim != d) throw InputError("twirl_to_pauli: dimension mismatch");

  if (std::abs(rho.trace() - std::complex<double>(1.0)) > 1e-12)
    throw InputError("twirl_to_pauli: trace differs from one");
  auto eig = hermitian_eigenvalues(rho);
  if (!eig.empty() && eig.front() < -1e-12)
    throw InputError("twirl_to_pauli: negative eigenvalue");

  auto psi = stabilizer_statevector(s0);

  std::vector<double> out(d, 0.0);
  for (std::size_t mask = 0; mask < d; ++mask) {
    PauliOp dk(n);
    for (std::size_t k = 0; k < n; ++k)
      if ((mask >> k) & 1u) dk.mul(s0.destabilizer(k));
    DenseOp D = dense_pauli(n, dk);
    // <psi| D rho D |psi>  (phases of D cancel)
    std::vector<std::complex<double>> v(d, 0.0);
    for (std::size_t r = 0; r < d; ++r)
      for (std::size_t c = 0; c < d; ++c) v[r] += D.at(r, c) * psi[c];
    std::complex<double> acc = 0.0;
    for (std::size_t r = 0; r < d; ++r)
      for (std::size_t c = 0; c < d; ++c) acc += std::conj(v[r]) * rho.at(r, c) * v[c];
    out[mask] = acc.real();
  }
  double s = 0;
  for (double v : out) s += v;
  if (std::abs(s - 1.0) > 1e-9)
    throw InternalError("twirl_to_pauli: probabilities do not sum to one");
  return out;
}

// ---------------------------------------------------------------------------
// Dense helpers

void dense_apply_gate(DenseOp& rho, std::size_t n, const DenseOp& u,
                      const std::vector<std::size_t>& qubits) {
  const std::size_t k = qubits.size();
  const std::size_t ud = std::size_t(1) << k;
  if (u.dim != ud) throw StructuralError("dense_apply_gate: gate size mismatch");
  const std::size_t d = rho.dim;

  auto scatter = [&](std::size_t base, std::size_t sub) {
    std::size_t idx = base;
    for (std::size_t j = 0; j < k; ++j) {
      std::size_t bitpos = n - 1 - qubits[j];
      std::size_t bit = (sub >> (k - 1 - j)) & 1u;
      idx = (idx & ~(std::size_t(1) << bitpos)) | (bit << bitpos);
    }
    return idx;
  };

  // rho <- (U x I) rho ; then rho <- rho (U x I)^dagger
  DenseOp tmp(d);
  for (std::size_t col = 0; col < d; ++col)
    for (std::size_t base = 0; base < d; ++base) {
      // only bases with zeroed target bits enumerated once
      bool canonical = true;
      for (std::size_t j = 0; j < k; ++j)
        if ((base >> (n - 1 - qubits[j])) & 1u) canonical = false;
      if (!canonical) continue;
      for (std::size_t s2 = 0; s2 < ud; ++s2) {
        std::size_t src = scatter(base, s2);
        auto v = rho.at(src, col);
        if (v == std::complex<double>(0.0)) continue;
        for (std::size_t s1 = 0; s1 < ud; ++s1) {
          auto w = u.at(s1, s2);
          if (w == std::complex<double>(0.0)) continue;
          tmp.at(scatter(base, s1), col) += w * v;
        }
      }
    }
  DenseOp udag = u.dagger();
  DenseOp out(d);
  for (std::size_t row = 0; row < d; ++row)
    for (std::size_t base = 0; base < d; ++base) {
      bool canonical = true;
      for (std::size_t j = 0; j < k; ++j)
        if ((base >> (n - 1 - qubits[j])) & 1u) canonical = false;
      if (!canonical) continue;
      for (std::size_t s2 = 0; s2 < ud; ++s2) {
        std::size_t src = scatter(base, s2);
        auto v = tmp.at(row, src);
        if (v == std::complex<double>(0.0)) continue;
        for (std::size_t s1 = 0; s1 < ud; ++s1) {
          auto w = udag.at(s2, s1);
          if (w == std::complex<double>(0.0)) continue;
          out.at(row, scatter(base, s1)) += v * w;
        }
      }
    }
  rho = std::move(out);
}

DenseOp dense_gate_h() {
  DenseOp m(2);
  double s = 1.0 / std::sqrt(2.0);
  m.at(0, 0) = s;
  m.at(0, 1) = s;
  m.at(1, 0) = s;
  m.at(1, 1) = -s;
  return m;
}
DenseOp dense_gate_s() {
  DenseOp m(2);
  m.at(0, 0) = 1.0;
  m.at(1, 1) = std::complex<double>(0, 1);
  return m;
}
DenseOp dense_gate_x() {
  DenseOp m(2);
  m.at(0, 1) = 1.0;
  m.at(1, 0) = 1.0;
  return m;
}
DenseOp dense_gate_z() {
  DenseOp m(2);
  m.at(0, 0) = 1.0;
  m.at(1, 1) = -1.0;
  return m;
}
DenseOp dense_gate_cx() {
  DenseOp m(4);
  m.at(0, 0) = 1;
  m.at(1, 1) = 1;
  m.at(2, 3) = 1;
  m.at(3, 2) = 1;
  return m;
}
DenseOp dense_gate_cz() {
  DenseOp m(4);
  m.at(0, 0) = 1;
  m.at(1, 1) = 1;
  m.at(2, 2) = 1;
  m.at(3, 3) = -1;
  return m;
}

void dense_apply_circuit(DenseOp& rho, std::size_t n, const CliffordCircuit& c) {
  for (const auto& g : c.gates) {
    switch (g.g) {
      case CliffordCircuit::G::H: dense_apply_gate(rho, n, dense_gate_h(), {g.a}); break;
      case CliffordCircuit::G::S: dense_apply_gate(rho, n, dense_gate_s(), {g.a}); break;
      case CliffordCircuit::G::Sdg:
        dense_apply_gate(rho, n, dense_gate_s().dagger(), {g.a});
        break;
      case CliffordCircuit::G::CX:
        dense_apply_gate(rho, n, dense_gate_cx(), {g.a, g.b});
        break;
      case CliffordCircuit::G::CZ:
        dense_apply_gate(rho, n, dense_gate_cz(), {g.a, g.b});
        break;
      case CliffordCircuit::G::X: dense_apply_gate(rho, n, dense_gate_x(), {g.a}); break;
      case CliffordCircuit::G::Z: dense_apply_gate(rho, n, dense_gate_z(), {g.a}); break;
    }
  }
}

std::vector<double> hermitian_eigenvalues(DenseOp m) {
  const std::size_t d = m.dim;
  // cyclic Jacobi for complex Hermitian matrices
  for (int sweep = 0; sweep < 100; ++sweep) {
    double off = 0;
    for (std::size_t p = 0; p < d; ++p)
      for (std::size_t q = p + 1; q < d; ++q) off += std::norm(m.at(p, q));
    if (off < 1e-26) break;
    for (std::size_t p = 0; p < d; ++p)
      for (std::size_t q = p + 1; q < d; ++q) {
        auto apq = m.at(p, q);
        if (std::abs(apq) < 1e-18) continue;
        double app = m.at(p, p).real();
        double aqq = m.at(q, q).real();
        // phase to make the pivot real, then a real Jacobi rotation
        std::complex<double> ph = apq / std::abs(apq);
        double g = std::abs(apq);
        double theta = 0.5 * std::atan2(2 * g, aqq - app);
        double cth = std::cos(theta), sth = std::sin(theta);
        // columns
        for (std::size_t i = 0; i < d; ++i) {
          auto vip = m.at(i, p), viq = m.at(i, q);
          m.at(i, p) = cth * vip - sth * std::conj(ph) * viq;
          m.at(i, q) = sth * ph * vip + cth * viq;
        }
        // rows
        for (std::size_t i = 0; i < d; ++i) {
          auto vpi = m.at(p, i), vqi = m.at(q, i);
          m.at(p, i) = cth * vpi - sth * ph * vqi;
          m.at(q, i) = sth * std::conj(ph) * vpi + cth * vqi;
        }
      }
  }
  std::vector<double> eig(d);
  for (std::size_t i = 0; i < d; ++i) eig[i] = m.at(i, i).real();
  std::sort(eig.begin(), eig.end());
  return eig;
}

std::vector<std::complex<double>> stabilizer_statevector(const StabilizerTableau& t) {
  const std::size_t n = t.num_qubits();
  if (n > 12) throw InputError("stabilizer_statevector: too many qubits");
  const std::size_t d = std::size_t(1) << n;
  // project a basis state onto the stabilizer subspace
  std::vector<DenseOp> projs;
  for (std::size_t k = 0; k < n; ++k) {
    DenseOp p = dense_pauli(n, t.stabilizer(k));
    DenseOp pr = DenseOp::identity(d);
    pr.add_scaled(p, 1.0);
    for (auto& v : pr.a) v *= 0.5;
    projs.push_back(std::move(pr));
  }
  for (std::size_t seed = 0; seed < d; ++seed) {
    std::vector<std::complex<double>> v(d, 0.0);
    v[seed] = 1.0;
    for (const auto& pr : projs) {
      std::vector<std::complex<double>> w(d, 0.0);
      for (std::size_t r = 0; r < d; ++r) {
        for (std::size_t c = 0; c < d; ++c) {
          auto u = pr.at(r, c);
          if (u != std::complex<double>(0.0)) w[r] += u * v[c];
        }
      }
      v.swap(w);
    }
    double norm = 0;
    for (auto& x : v) norm += std::norm(x);
    if (norm > 1e-9) {
      double s = 1.0 / std::sqrt(norm);
      for (auto& x : v) x *= s;
      return v;
    }
  }
  throw InternalError("stabilizer_statevector: projection vanished everywhere");
}

}  // namespace mbqc
