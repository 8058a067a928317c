#include <complex>

#include "doctest.h"
#include "mbqc/dense.hpp"
#include "mbqc/distill.hpp"
#include "support/oracles.hpp"

using namespace mbqc;

namespace {

}  // namespace

TEST_CASE("two perfect inputs distill to a perfect pair with certainty") {
  BellDiagonalState perfect;
  auto o = dejmps(perfect, perfect);
  CHECK(o.success_prob == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(o.output.fidelity() == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("frozen Werner F=0.9 values (exact rational oracle)") {
  // one DEJMPS round on Werner(F=9/10): success 197/225, fidelity 365/394,
  // from the exact 16-term enumeration in rational arithmetic.
  test::Frac F(9, 10), t(1, 30);
  test::Frac N = (F + t) * (F + t) + (t + t) * (t + t);
  test::Frac A = (F * F + t * t) / N;
  CHECK(N.n == 197);
  CHECK(N.d == 225);
  CHECK(A.n == 365);
  CHECK(A.d == 394);

  auto o = dejmps(BellDiagonalState::werner(0.1), BellDiagonalState::werner(0.1));
  CHECK(o.success_prob == doctest::Approx(197.0 / 225.0).epsilon(1e-15));
  CHECK(o.output.fidelity() == doctest::Approx(365.0 / 394.0).epsilon(1e-15));
}

TEST_CASE("dejmps equals the dense 4-qubit oracle on random Bell-diagonal pairs") {
  Rng rng(21, 0, 0);
  for (int trial = 0; trial < 40; ++trial) {
    auto a = test::random_bell_diagonal(rng);
    auto b = test::random_bell_diagonal(rng);
    auto got = dejmps(a, b);
    auto want = test::dejmps_dense(a, b);
    CHECK(got.success_prob == doctest::Approx(want.success).epsilon(1e-12));
    for (int k = 0; k < 4; ++k)
      CHECK(got.success_prob * got.output.p[k] ==
            doctest::Approx(want.diag[k]).epsilon(0).scale(1).epsilon(1e-12));
  }
}

TEST_CASE("component-relabeling symmetries of dejmps") {
  // The protocol's rotations single out the Phi-/Psi- pair, so only specific
  // relabelings commute with it: swapping the two inputs, and exchanging the
  // Phi- and Psi+ labels on both inputs (which leaves the output untouched).
  Rng rng(22, 0, 0);
  for (int t = 0; t < 20; ++t) {
    auto a = test::random_bell_diagonal(rng);
    auto b = test::random_bell_diagonal(rng);
    auto o1 = dejmps(a, b);
    auto o2 = dejmps(b, a);
    CHECK(o1.success_prob == doctest::Approx(o2.success_prob).epsilon(1e-13));
    for (int k = 0; k < 4; ++k)
      CHECK(o1.output.p[k] == doctest::Approx(o2.output.p[k]).epsilon(1e-12));

    auto a2 = a, b2 = b;
    std::swap(a2.p[1], a2.p[2]);
    std::swap(b2.p[1], b2.p[2]);
    auto o3 = dejmps(a2, b2);
    CHECK(o3.success_prob == doctest::Approx(o1.success_prob).epsilon(1e-13));
    for (int k = 0; k < 4; ++k)
      CHECK(o3.output.p[k] == doctest::Approx(o1.output.p[k]).epsilon(1e-12));
  }
}

TEST_CASE("concatenated DEJMPS composes single steps over a balanced tree") {
  auto in = BellDiagonalState::werner(0.05);
  auto two = concatenate_dejmps(in, 2);
  auto one = dejmps(in, in);
  CHECK(two.success_prob == doctest::Approx(one.success_prob).epsilon(1e-15));
  CHECK(two.output.fidelity() == doctest::Approx(one.output.fidelity()).epsilon(1e-15));

  BellDiagonalState perfect;
  auto four_perfect = concatenate_dejmps(perfect, 4);
  CHECK(four_perfect.success_prob == doctest::Approx(1.0));
  CHECK(four_perfect.output.fidelity() == doctest::Approx(1.0));

  auto four = concatenate_dejmps(in, 4);
  auto lvl1 = dejmps(in, in);
  auto lvl2 = dejmps(lvl1.output, lvl1.output);
  CHECK(four.success_prob ==
        doctest::Approx(lvl1.success_prob * lvl1.success_prob * lvl2.success_prob)
            .epsilon(1e-13));
  CHECK(four.output.fidelity() == doctest::Approx(lvl2.output.fidelity()).epsilon(1e-13));
  CHECK(four.round_fidelities.size() == 2);
  CHECK(four.round_fidelities[0] <= four.round_fidelities[1]);

  CHECK_THROWS_AS(concatenate_dejmps(in, 3), InputError);
  CHECK_THROWS_AS(concatenate_dejmps(in, 1), InputError);
}

TEST_CASE("five-to-one: perfect inputs, strict policy accepts everything noiselessly") {
  BellDiagonalState perfect;
  auto o = five_to_one(perfect, AcceptancePolicy::strict());
  CHECK(o.success_prob == doctest::Approx(1.0).epsilon(1e-13));
  CHECK(o.output.fidelity() == doctest::Approx(1.0).epsilon(1e-13));
}

TEST_CASE("five-to-one: strict beats all-accepting on fidelity, loses on success") {
  auto in = BellDiagonalState::werner(0.05);
  auto strict = five_to_one(in, AcceptancePolicy::strict());
  auto all = five_to_one(in, AcceptancePolicy::all());
  CHECK(all.success_prob == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(strict.success_prob < all.success_prob);
  CHECK(strict.output.fidelity() > all.output.fidelity());
  CHECK(strict.output.fidelity() > in.fidelity());
  CHECK_THROWS_AS(five_to_one(in, AcceptancePolicy{}), InputError);
}

TEST_CASE("five-to-one policy family is monotone in the failure/fidelity plane") {
  // widening the accepted set trades fidelity for success
  auto in = BellDiagonalState::werner(0.05);
  auto policies = five_to_one_policies(in);
  CHECK(policies.size() == 16);
  double last_fail = 2, last_fid = 2;
  for (const auto& pol : policies) {
    auto o = five_to_one(in, pol);
    auto [pn, pe] = tradeoff_point(o);
    CHECK(pe <= last_fail + 1e-12);
    CHECK(1 - pn <= last_fid + 1e-12);
    last_fail = pe;
    last_fid = 1 - pn;
  }
  CHECK(last_fail == doctest::Approx(0.0));  // accepting everything never fails
}

TEST_CASE("five-to-one matches the dense bilateral-circuit oracle") {
  // Mixture decomposition over the 4^5 one-sided error classes: every class
  // is evolved as an explicit 10-qubit statevector through the bilateral
  // decoder, so the oracle shares no conjugation algebra with the
  // implementation.
  Rng rng(23, 0, 0);
  std::vector<PauliOp> gens;
  {
    auto pauli = [](const char* s) {
      PauliOp p(5);
      for (int i = 0; i < 5; ++i) {
        if (s[i] == 'X') p.x[i] = 1;
        if (s[i] == 'Z') p.z[i] = 1;
      }
      return p;
    };
    gens = {pauli("ZZZZZ"), pauli("XZZXI"), pauli("IXZZX"), pauli("XIXZZ"),
            pauli("ZXIXZ")};
  }
  auto decode = diagonalizing_circuit(gens);
  const std::size_t n = 10;
  const std::size_t d = 1u << n;

  // five Bell pairs (i, i+5)
  std::vector<std::complex<double>> pairs(d, 0.0);
  pairs[0] = 1.0;
  for (int i = 0; i < 5; ++i) {
    test::vec_apply_gate(pairs, n, dense_gate_h(), {std::size_t(i)});
    test::vec_apply_gate(pairs, n, dense_gate_cx(), {std::size_t(i), std::size_t(i + 5)});
  }
  auto evolve = [&](const PauliOp& err5) {
    std::vector<std::complex<double>> v = pairs;
    PauliOp big(n);
    for (int q = 0; q < 5; ++q) {
      big.x[q] = err5.x[q];
      big.z[q] = err5.z[q];
    }
    v = test::vec_apply_pauli(v, n, big);
    test::vec_apply_circuit(v, n, decode, 0);
    test::vec_apply_circuit(v, n, decode, 5);
    return v;
  };

  auto base = evolve(PauliOp(5));
  std::array<int, 4> base_par{};
  for (int i = 1; i < 5; ++i) {
    PauliOp zz(n);
    zz.z[i] = zz.z[i + 5] = 1;
    auto e = test::vec_expectation(base, n, zz).real();
    REQUIRE(std::abs(std::abs(e) - 1.0) < 1e-10);
    base_par[i - 1] = e > 0 ? 0 : 1;
  }
  // kept-pair stabilizers of the baseline, found densely and sign-normalized
  // so their expectation on the baseline is +1
  PauliOp s1(n), s2(n);
  {
    bool got1 = false, got2 = false;
    for (int pa = 0; pa < 4; ++pa)
      for (int pb = 1; pb < 4; ++pb) {
        PauliOp p(n);
        p.x[0] = pa & 1;
        p.z[0] = (pa >> 1) & 1;
        p.x[5] = pb & 1;
        p.z[5] = (pb >> 1) & 1;
        auto e = test::vec_expectation(base, n, p);
        if (std::abs(std::abs(e.real()) - 1.0) < 1e-10) {
          if (e.real() < 0) p.phase = (p.phase + 2) & 3;
          if (pb == 1 && !got1) s1 = p, got1 = true;
          if (pb == 2 && !got2) s2 = p, got2 = true;
        }
      }
    REQUIRE(got1);
    REQUIRE(got2);
  }
  auto proj_weight = [&](const std::vector<std::complex<double>>& v, int b1, int b2) {
    // <v| (1 + (-1)^{b1} s1)/2 (1 + (-1)^{b2} s2)/2 |v>
    double w = 0;
    for (int m1 = 0; m1 < 2; ++m1)
      for (int m2 = 0; m2 < 2; ++m2) {
        PauliOp p(n);
        if (m1) p = s1;
        if (m2) {
          if (m1)
            p.mul(s2);
          else
            p = s2;
        }
        double sign = ((m1 & b1) ^ (m2 & b2)) ? -1.0 : 1.0;
        double e = test::vec_expectation(v, n, p).real();
        w += 0.25 * sign * e;
      }
    return w;
  };

  // per-class evolution (256 classes reused over trials via caching of
  // pattern/weights, since the class geometry does not depend on the input)
  struct ClassInfo {
    uint8_t pattern;
    std::array<double, 4> w;
  };
  std::vector<ClassInfo> classes(1024);
  for (int code = 0; code < 1024; ++code) {
    PauliOp err(5);
    for (int q = 0; q < 5; ++q) {
      int e = (code >> (2 * q)) & 3;
      err.x[q] = e & 1;
      err.z[q] = (e >> 1) & 1;
    }
    auto v = evolve(err);
    uint8_t pattern = 0;
    for (int i = 1; i < 5; ++i) {
      PauliOp zz(n);
      zz.z[i] = zz.z[i + 5] = 1;
      auto e = test::vec_expectation(v, n, zz).real();
      REQUIRE(std::abs(std::abs(e) - 1.0) < 1e-10);
      int par = e > 0 ? 0 : 1;
      pattern |= (par ^ base_par[i - 1]) << (i - 1);
    }
    ClassInfo ci;
    ci.pattern = pattern;
    for (int b1 = 0; b1 < 2; ++b1)
      for (int b2 = 0; b2 < 2; ++b2) ci.w[b1 + 2 * b2] = proj_weight(v, b1, b2);
    classes[code] = ci;
  }

  for (int trial = 0; trial < 4; ++trial) {
    BellDiagonalState in =
        trial == 0 ? BellDiagonalState::werner(0.07) : test::random_bell_diagonal(rng);
    double cls[4] = {in.p[0], in.p[2], in.p[1], in.p[3]};  // x+2z indexing
    std::array<std::array<double, 4>, 16> want{};
    for (int code = 0; code < 1024; ++code) {
      double pr = 1;
      for (int q = 0; q < 5; ++q) pr *= cls[(code >> (2 * q)) & 3];
      const auto& ci = classes[code];
      for (int k = 0; k < 4; ++k) want[ci.pattern][k] += pr * ci.w[k];
    }
    auto got = five_to_one_table(in);
    for (int pat = 0; pat < 16; ++pat)
      for (int k = 0; k < 4; ++k)
        CHECK(got.weight[pat][k] ==
              doctest::Approx(want[pat][k]).epsilon(0).scale(1).epsilon(1e-12));
  }
}

TEST_CASE("tradeoff points are definitional") {
  DistillationOutcome o;
  o.success_prob = 0.8;
  o.output.p = {0.99, 0.005, 0.0025, 0.0025};
  auto [pn, pe] = tradeoff_point(o);
  CHECK(pn == doctest::Approx(0.01));
  CHECK(pe == doctest::Approx(0.2));
}
