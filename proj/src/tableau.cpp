#include "mbqc/tableau.hpp"

namespace mbqc {

std::string PauliOp::str() const {
  static const char* ph[4] = {"+", "+i", "-", "-i"};
  std::string s = ph[phase & 3];
  for (std::size_t q = 0; q < size(); ++q) {
    int k = (x[q] ? 1 : 0) + (z[q] ? 2 : 0);
    s += "IXZY"[k];
  }
  return s;
}

StabilizerTableau::StabilizerTableau(std::size_t n)
    : n_(n), xs_(2 * n * n, 0), zs_(2 * n * n, 0), r_(2 * n, 0) {
  for (std::size_t q = 0; q < n; ++q) {
    X(q, q) = 1;           // destabilizer X_q
    Z(n + q, q) = 1;       // stabilizer Z_q
  }
}

void StabilizerTableau::h(std::size_t q) {
  for (std::size_t i = 0; i < 2 * n_; ++i) {
    r_[i] ^= X(i, q) & Z(i, q);
    std::swap(X(i, q), Z(i, q));
  }
}

void StabilizerTableau::s(std::size_t q) {
  for (std::size_t i = 0; i < 2 * n_; ++i) {
    r_[i] ^= X(i, q) & Z(i, q);
    Z(i, q) ^= X(i, q);
  }
}

void StabilizerTableau::cx(std::size_t a, std::size_t b) {
  for (std::size_t i = 0; i < 2 * n_; ++i) {
    r_[i] ^= X(i, a) & Z(i, b) & (X(i, b) ^ Z(i, a) ^ 1);
    X(i, b) ^= X(i, a);
    Z(i, a) ^= Z(i, b);
  }
}

void StabilizerTableau::cz(std::size_t a, std::size_t b) {
  h(b);
  cx(a, b);
  h(b);
}

void StabilizerTableau::x(std::size_t q) {
  for (std::size_t i = 0; i < 2 * n_; ++i) r_[i] ^= Z(i, q);
}

void StabilizerTableau::z(std::size_t q) {
  for (std::size_t i = 0; i < 2 * n_; ++i) r_[i] ^= X(i, q);
}

namespace {
// Aaronson-Gottesman g: exponent of i contributed by multiplying single-qubit
// Paulis (x1,z1) * (x2,z2).
inline int g_phase(int x1, int z1, int x2, int z2) {
  if (!x1 && !z1) return 0;
  if (x1 && z1) return z2 - x2;
  if (x1) return z2 * (2 * x2 - 1);
  return x2 * (1 - 2 * z2);
}
}  // namespace

void StabilizerTableau::rowsum(std::size_t h, std::size_t i) {
  int acc = 2 * r_[h] + 2 * r_[i];
  for (std::size_t q = 0; q < n_; ++q) {
    acc += g_phase(X(i, q), Z(i, q), X(h, q), Z(h, q));
    X(h, q) ^= X(i, q);
    Z(h, q) ^= Z(i, q);
  }
  acc &= 3;
  r_[h] = static_cast<uint8_t>(acc / 2);
}

int StabilizerTableau::rowsum_into(std::vector<uint8_t>& xh, std::vector<uint8_t>& zh,
                                   int rh, std::size_t i) const {
  int acc = 2 * rh + 2 * r_[i];
  for (std::size_t q = 0; q < n_; ++q) {
    acc += g_phase(X(i, q), Z(i, q), xh[q], zh[q]);
    xh[q] ^= X(i, q);
    zh[q] ^= Z(i, q);
  }
  return (acc & 3) / 2;
}

StabilizerTableau::MeasureResult StabilizerTableau::measure_z(std::size_t q, Rng& rng) {
  std::size_t p = 2 * n_;
  for (std::size_t i = n_; i < 2 * n_; ++i)
    if (X(i, q)) {
      p = i;
      break;
    }
  MeasureResult res;
  if (p < 2 * n_) {
    // random outcome; p anticommutes with Z_q
    for (std::size_t i = 0; i < 2 * n_; ++i)
      if (i != p && X(i, q)) rowsum(i, p);
    // destabilizer row p-n becomes old stabilizer
    for (std::size_t q2 = 0; q2 < n_; ++q2) {
      X(p - n_, q2) = X(p, q2);
      Z(p - n_, q2) = Z(p, q2);
      X(p, q2) = 0;
      Z(p, q2) = 0;
    }
    r_[p - n_] = r_[p];
    Z(p, q) = 1;
    res.outcome = rng.bernoulli(0.5) ? 1 : 0;
    r_[p] = static_cast<uint8_t>(res.outcome);
    res.deterministic = false;
  } else {
    // deterministic
    std::vector<uint8_t> xh(n_, 0), zh(n_, 0);
    int rh = 0;
    for (std::size_t i = 0; i < n_; ++i)
      if (X(i, q)) rh = rowsum_into(xh, zh, rh, i + n_);
    res.outcome = rh;
    res.deterministic = true;
  }
  return res;
}

StabilizerTableau::MeasureResult StabilizerTableau::measure_x(std::size_t q, Rng& rng) {
  h(q);
  auto r = measure_z(q, rng);
  h(q);
  return r;
}

void StabilizerTableau::prep_plus(std::size_t q, Rng& rng) {
  auto m = measure_z(q, rng);
  if (m.outcome) x(q);
  h(q);
}

int StabilizerTableau::pauli_expectation(const PauliOp& p) const {
  // P commutes with every stabilizer iff it is (up to sign) a product of
  // them; the destabilizer anticommutation pattern names the factors.
  for (std::size_t i = n_; i < 2 * n_; ++i) {
    int t = 0;
    for (std::size_t q = 0; q < n_; ++q)
      t ^= (p.x[q] & Z(i, q)) ^ (p.z[q] & X(i, q));
    if (t) return 0;
  }
  std::vector<uint8_t> xh(n_, 0), zh(n_, 0);
  int rh = 0;
  for (std::size_t i = 0; i < n_; ++i) {
    int t = 0;
    for (std::size_t q = 0; q < n_; ++q)
      t ^= (p.x[q] & Z(i, q)) ^ (p.z[q] & X(i, q));
    if (t) rh = rowsum_into(xh, zh, rh, i + n_);
  }
  // xh,zh should now equal p's masks; compare sign including p's phase.
  for (std::size_t q = 0; q < n_; ++q)
    if (xh[q] != p.x[q] || zh[q] != p.z[q])
      throw InternalError("pauli_expectation: generator reconstruction failed");
  // p = i^{phase} X^x Z^z = i^{phase - ycount} * (Hermitian form); Hermitian
  // inputs need phase == ycount mod 2.
  int ycount = 0;
  for (std::size_t q = 0; q < n_; ++q) ycount += p.x[q] & p.z[q];
  int pphase = (p.phase - ycount) & 3;  // sign exponent relative to Hermitian rep
  if (pphase & 1) throw InputError("pauli_expectation: non-Hermitian Pauli");
  int sign = (pphase >> 1) ^ rh;
  return sign ? -1 : 1;
}

PauliOp StabilizerTableau::stabilizer(std::size_t k) const {
  PauliOp p(n_);
  for (std::size_t q = 0; q < n_; ++q) {
    p.x[q] = X(n_ + k, q);
    p.z[q] = Z(n_ + k, q);
  }
  // Hermitian row (-1)^r * prod(Y's Hermitian) in the X^xZ^z convention.
  int ycount = 0;
  for (std::size_t q = 0; q < n_; ++q) ycount += p.x[q] & p.z[q];
  p.phase = (2 * r_[n_ + k] + ycount) & 3;
  return p;
}

PauliOp StabilizerTableau::destabilizer(std::size_t k) const {
  PauliOp p(n_);
  for (std::size_t q = 0; q < n_; ++q) {
    p.x[q] = X(k, q);
    p.z[q] = Z(k, q);
  }
  int ycount = 0;
  for (std::size_t q = 0; q < n_; ++q) ycount += p.x[q] & p.z[q];
  p.phase = (2 * r_[k] + ycount) & 3;
  return p;
}

void StabilizerTableau::check_invariants() const {
  auto sym = [&](std::size_t i, std::size_t j) {
    int t = 0;
    for (std::size_t q = 0; q < n_; ++q)
      t ^= (X(i, q) & Z(j, q)) ^ (Z(i, q) & X(j, q));
    return t;
  };
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) {
      if (sym(n_ + i, n_ + j) != 0) throw InternalError("stabilizers do not commute");
      if (sym(i, j) != 0) throw InternalError("destabilizers do not commute");
      if (sym(i, n_ + j) != (i == j ? 1 : 0))
        throw InternalError("destabilizer pairing broken");
    }
}

void CliffordCircuit::apply_to(StabilizerTableau& t) const {
  for (const auto& g : gates) {
    switch (g.g) {
      case G::H: t.h(g.a); break;
      case G::S: t.s(g.a); break;
      case G::Sdg: t.s(g.a); t.s(g.a); t.s(g.a); break;
      case G::CX: t.cx(g.a, g.b); break;
      case G::CZ: t.cz(g.a, g.b); break;
      case G::X: t.x(g.a); break;
      case G::Z: t.z(g.a); break;
    }
  }
}

void CliffordCircuit::conjugate(PauliOp& p) const {
  for (const auto& g : gates) {
    switch (g.g) {
      case G::H: p.conj_h(g.a); break;
      case G::S: p.conj_s(g.a); break;
      case G::Sdg: p.conj_sdg(g.a); break;
      case G::CX: p.conj_cx(g.a, g.b); break;
      case G::CZ: p.conj_cz(g.a, g.b); break;
      case G::X: p.conj_x(g.a); break;
      case G::Z: p.conj_z(g.a); break;
    }
  }
}

void CliffordCircuit::conjugate_inverse(PauliOp& p) const {
  for (auto it = gates.rbegin(); it != gates.rend(); ++it) {
    switch (it->g) {
      case G::H: p.conj_h(it->a); break;
      case G::S: p.conj_sdg(it->a); break;
      case G::Sdg: p.conj_s(it->a); break;
      case G::CX: p.conj_cx(it->a, it->b); break;
      case G::CZ: p.conj_cz(it->a, it->b); break;
      case G::X: p.conj_x(it->a); break;
      case G::Z: p.conj_z(it->a); break;
    }
  }
}

CliffordCircuit diagonalizing_circuit(const std::vector<PauliOp>& generators) {
  if (generators.empty()) return {};
  const std::size_t n = generators[0].size();
  const std::size_t m = generators.size();
  std::vector<PauliOp> rows = generators;
  CliffordCircuit c;
  c.n = n;

  auto apply = [&](CliffordCircuit::G g, uint32_t a, uint32_t b) {
    c.gates.push_back({g, a, b});
    for (auto& r : rows) {
      switch (g) {
        case CliffordCircuit::G::H: r.conj_h(a); break;
        case CliffordCircuit::G::S: r.conj_s(a); break;
        case CliffordCircuit::G::Sdg: r.conj_sdg(a); break;
        case CliffordCircuit::G::CX: r.conj_cx(a, b); break;
        case CliffordCircuit::G::CZ: r.conj_cz(a, b); break;
        case CliffordCircuit::G::X: r.conj_x(a); break;
        case CliffordCircuit::G::Z: r.conj_z(a); break;
      }
    }
  };

  for (std::size_t k = 0; k < m; ++k) {
    // Bring row k to Z_k. Rows < k are already Z_0..Z_{k-1}; commutation with
    // them forces row k to have no X support below qubit k, so gates here
    // never disturb the finished rows.
    std::size_t pivot = n;
    for (std::size_t q = k; q < n; ++q)
      if (rows[k].x[q]) {
        pivot = q;
        break;
      }
    if (pivot == n) {
      for (std::size_t q = k; q < n; ++q)
        if (rows[k].z[q]) {
          apply(CliffordCircuit::G::H, static_cast<uint32_t>(q), 0);
          pivot = q;
          break;
        }
    }
    if (pivot == n)
      throw InputError("diagonalizing_circuit: generator dependent on earlier ones");
    if (pivot != k) {  // swap qubits k and pivot (three CX)
      apply(CliffordCircuit::G::CX, static_cast<uint32_t>(k), static_cast<uint32_t>(pivot));
      apply(CliffordCircuit::G::CX, static_cast<uint32_t>(pivot), static_cast<uint32_t>(k));
      apply(CliffordCircuit::G::CX, static_cast<uint32_t>(k), static_cast<uint32_t>(pivot));
    }
    for (std::size_t q = 0; q < n; ++q)
      if (q != k && rows[k].x[q])
        apply(CliffordCircuit::G::CX, static_cast<uint32_t>(k), static_cast<uint32_t>(q));
    if (rows[k].z[k]) apply(CliffordCircuit::G::S, static_cast<uint32_t>(k), 0);
    for (std::size_t q = 0; q < n; ++q)
      if (q != k && rows[k].z[q])
        apply(CliffordCircuit::G::CZ, static_cast<uint32_t>(k), static_cast<uint32_t>(q));
    apply(CliffordCircuit::G::H, static_cast<uint32_t>(k), 0);
    if (!(rows[k].z[k] == 1 && rows[k].x[k] == 0))
      throw InternalError("diagonalizing_circuit: reduction failed");
  }
  // verify
  for (std::size_t k = 0; k < m; ++k)
    for (std::size_t q = 0; q < n; ++q)
      if (rows[k].x[q] || (rows[k].z[q] != (q == k ? 1 : 0)))
        throw InternalError("diagonalizing_circuit: residual support");
  return c;
}

}  // namespace mbqc
