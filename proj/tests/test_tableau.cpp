#include "doctest.h"
#include "mbqc/tableau.hpp"

using namespace mbqc;

TEST_CASE("prep |+> then measure X is deterministically +1") {
  Rng rng(1, 0, 0);
  StabilizerTableau t(1);
  t.prep_plus(0, rng);
  auto m = t.measure_x(0, rng);
  CHECK(m.deterministic);
  CHECK(m.outcome == 0);
}

TEST_CASE("4-qubit cluster ring satisfies its stabilizer parity constraints") {
  Rng rng(2, 0, 0);
  StabilizerTableau t(4);
  for (int q = 0; q < 4; ++q) t.h(q);
  t.cz(0, 1);
  t.cz(1, 2);
  t.cz(2, 3);
  t.cz(3, 0);

  PauliOp x0x2(4), x1x3(4);
  x0x2.x[0] = x0x2.x[2] = 1;
  x1x3.x[1] = x1x3.x[3] = 1;
  CHECK(t.pauli_expectation(x0x2) == 1);
  CHECK(t.pauli_expectation(x1x3) == 1);

  auto m0 = t.measure_x(0, rng);
  auto m1 = t.measure_x(1, rng);
  auto m2 = t.measure_x(2, rng);
  auto m3 = t.measure_x(3, rng);
  CHECK((m0.outcome ^ m2.outcome) == 0);
  CHECK((m1.outcome ^ m3.outcome) == 0);
}

TEST_CASE("X propagates through CZ as X tensor Z") {
  PauliOp p(2);
  p.x[0] = 1;
  p.conj_cz(0, 1);
  CHECK(p.x[0] == 1);
  CHECK(p.z[0] == 0);
  CHECK(p.z[1] == 1);
  CHECK(p.x[1] == 0);
  CHECK(p.phase == 0);
}

TEST_CASE("random circuits preserve tableau invariants and measurement repeats") {
  Rng rng(3, 0, 0);
  for (int trial = 0; trial < 20; ++trial) {
    StabilizerTableau t(5);
    for (int step = 0; step < 60; ++step) {
      int op = rng.next_below(5);
      std::size_t a = rng.next_below(5), b = rng.next_below(5);
      if (b == a) b = (a + 1) % 5;
      switch (op) {
        case 0: t.h(a); break;
        case 1: t.s(a); break;
        case 2: t.cx(a, b); break;
        case 3: t.cz(a, b); break;
        case 4: t.x(a); break;
      }
    }
    t.check_invariants();
    std::size_t q = rng.next_below(5);
    auto m1 = t.measure_z(q, rng);
    auto m2 = t.measure_z(q, rng);
    CHECK(m2.deterministic);
    CHECK(m1.outcome == m2.outcome);
  }
}

TEST_CASE("stabilizer/destabilizer accessors give Hermitian commuting pairs") {
  Rng rng(4, 0, 0);
  StabilizerTableau t(3);
  t.h(0);
  t.cx(0, 1);
  t.cx(1, 2);
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) {
      bool anti = !t.stabilizer(i).commutes(t.destabilizer(j));
      CHECK(anti == (i == j));
    }
    CHECK(t.pauli_expectation(t.stabilizer(i)) == 1);
  }
}

TEST_CASE("diagonalizing circuit maps generators onto Z_k") {
  // the five-qubit code stabilizers
  auto pauli = [](const std::string& s) {
    PauliOp p(s.size());
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (s[i] == 'X') p.x[i] = 1;
      if (s[i] == 'Z') p.z[i] = 1;
      if (s[i] == 'Y') p.x[i] = p.z[i] = 1;
    }
    return p;
  };
  std::vector<PauliOp> gens = {pauli("XZZXI"), pauli("IXZZX"), pauli("XIXZZ"),
                               pauli("ZXIXZ"), pauli("ZZZZZ")};
  auto c = diagonalizing_circuit(gens);
  for (std::size_t k = 0; k < gens.size(); ++k) {
    PauliOp p = gens[k];
    c.conjugate(p);
    for (std::size_t q = 0; q < 5; ++q) {
      CHECK(p.x[q] == 0);
      CHECK(p.z[q] == (q == k ? 1 : 0));
    }
    CHECK((p.phase & 1) == 0);
  }
}
