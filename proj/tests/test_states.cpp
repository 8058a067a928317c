#include "doctest.h"
#include "mbqc/dense.hpp"
#include "mbqc/pauli_channel.hpp"
#include "support/oracles.hpp"

using namespace mbqc;

TEST_CASE("perfect Bell inputs and a noiseless circuit fuse to the pure GHZ component") {
  for (uint32_t arity : {3u, 4u}) {
    std::vector<BellDiagonalState> in(arity - 1);
    auto g = ghz_fusion(in, arity, {});
    CHECK(g.p[0] == doctest::Approx(1.0).epsilon(1e-14));
  }
}

TEST_CASE("ghz_fusion matches the dense density-matrix oracle") {
  Rng rng(11, 0, 0);
  auto run_case = [&](uint32_t arity, const std::vector<BellDiagonalState>& in,
                      const NoiseParams& np) {
    auto got = ghz_fusion(in, arity, np);

    // dense path on members 0..arity-1 and ancillas arity..2(arity-1)-? :
    const std::size_t n = arity + (arity - 2);
    DenseOp rho;
    {
      // pair 0 on (0,1); pair k-1 on (anc k-2, member k)
      std::vector<std::pair<std::size_t, std::size_t>> pairs;
      pairs.push_back({0, 1});
      for (uint32_t k = 2; k < arity; ++k) pairs.push_back({arity + (k - 2), k});
      // dense qubit order: build kron over pairs, then permute implicitly by
      // constructing directly: start with identity-sized rho of dim 2^n and
      // fill via sequential kron in pair order, tracking the qubit order.
      std::vector<std::size_t> order;
      DenseOp acc(1);
      acc.at(0, 0) = 1.0;
      for (std::size_t pi = 0; pi < pairs.size(); ++pi) {
        acc = acc.kron(test::bell_pair_density(in[pi]));
        order.push_back(pairs[pi].first);
        order.push_back(pairs[pi].second);
      }
      // permute: dense index uses qubit 0 = MSB in `order`; map into natural
      // order by relabeling through a permutation of basis states.
      std::vector<std::size_t> pos_of(n);
      for (std::size_t i = 0; i < n; ++i) pos_of[order[i]] = i;
      std::size_t d = std::size_t(1) << n;
      rho = DenseOp(d);
      auto remap = [&](std::size_t idx) {
        std::size_t out = 0;
        for (std::size_t q = 0; q < n; ++q) {
          std::size_t bit = (idx >> (n - 1 - pos_of[q])) & 1u;
          out |= bit << (n - 1 - q);
        }
        return out;
      };
      for (std::size_t r = 0; r < d; ++r)
        for (std::size_t c = 0; c < d; ++c) rho.at(remap(r), remap(c)) = acc.at(r, c);
    }
    for (uint32_t k = 2; k < arity; ++k) {
      std::size_t anc = arity + (k - 2);
      DenseOp cx = dense_gate_cx();
      dense_apply_gate(rho, n, cx, {k - 1, anc});
      test::dense_depolarize2(rho, n, k - 1, anc, np.p_g);
      test::dense_measure_fix(rho, n, anc, k, np.p_m);
    }
    std::vector<std::size_t> members(arity);
    for (uint32_t i = 0; i < arity; ++i) members[i] = i;
    auto want = test::dense_ghz_diagonal(rho, n, members);
    REQUIRE(want.size() == got.p.size());
    for (std::size_t i = 0; i < want.size(); ++i)
      CHECK(got.p[i] == doctest::Approx(want[i]).epsilon(0).scale(1).epsilon(1e-12));
  };

  SUBCASE("two Werner inputs, noiseless circuit") {
    run_case(3, {BellDiagonalState::werner(0.06), BellDiagonalState::werner(0.06)}, {});
  }
  SUBCASE("arity 4, three Werner inputs, gate and measurement noise") {
    NoiseParams np;
    np.p_g = 0.001;
    np.p_m = 0.001;
    run_case(4,
             {BellDiagonalState::werner(0.03), BellDiagonalState::werner(0.05),
              BellDiagonalState::werner(0.01)},
             np);
  }
  SUBCASE("random parameter draws") {
    for (int t = 0; t < 25; ++t) {
      uint32_t arity = 3 + (t & 1);
      std::vector<BellDiagonalState> in;
      for (uint32_t k = 0; k + 1 < arity; ++k) in.push_back(test::random_bell_diagonal(rng));
      NoiseParams np;
      np.p_g = rng.next_double() * 0.2;
      np.p_m = rng.next_double() * 0.2;
      run_case(arity, in, np);
    }
  }
}

TEST_CASE("fusion output probabilities stay normalized and nonnegative") {
  Rng rng(12, 0, 0);
  for (int t = 0; t < 50; ++t) {
    NoiseParams np;
    np.p_g = rng.next_double();
    np.p_m = rng.next_double();
    std::vector<BellDiagonalState> in = {test::random_bell_diagonal(rng),
                                         test::random_bell_diagonal(rng),
                                         test::random_bell_diagonal(rng)};
    auto g = ghz_fusion(in, 4, np);
    g.check();
  }
}

TEST_CASE("twirl of the pure stabilizer state is a point mass on identity") {
  Rng rng(13, 0, 0);
  StabilizerTableau bell(2);
  bell.h(0);
  bell.cx(0, 1);
  auto psi = stabilizer_statevector(bell);
  DenseOp rho(4);
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) rho.at(r, c) = psi[r] * std::conj(psi[c]);
  auto p = twirl_to_pauli(rho, bell);
  CHECK(p[0] == doctest::Approx(1.0).epsilon(1e-12));
  for (int k = 1; k < 4; ++k) CHECK(std::abs(p[k]) < 1e-12);
}

TEST_CASE("Werner state twirled over the Bell stabilizers returns its own diagonal") {
  StabilizerTableau bell(2);
  bell.h(0);
  bell.cx(0, 1);
  double pn = 0.21;
  auto rho = test::bell_pair_density(BellDiagonalState::werner(pn));
  auto p = twirl_to_pauli(rho, bell);
  std::vector<double> sorted = p;
  std::sort(sorted.begin(), sorted.end());
  CHECK(sorted[3] == doctest::Approx(1 - pn).epsilon(1e-12));
  for (int k = 0; k < 3; ++k) CHECK(sorted[k] == doctest::Approx(pn / 3).epsilon(1e-12));
}

TEST_CASE("twirl matches the dense group-averaging oracle on random states") {
  Rng rng(14, 0, 0);
  StabilizerTableau s0(2);
  s0.h(0);
  s0.cx(0, 1);
  auto psi = stabilizer_statevector(s0);
  const std::size_t d = 4;

  for (int trial = 0; trial < 30; ++trial) {
    auto rho = test::random_density(2, rng);
    auto p = twirl_to_pauli(rho, s0);

    // oracle: T(rho) = 1/|S| sum_s s rho s, then expand over d_k |psi><psi| d_k
    DenseOp twirled(d);
    for (int mask = 0; mask < 4; ++mask) {
      PauliOp s(2);
      if (mask & 1) s.mul(s0.stabilizer(0));
      if (mask & 2) s.mul(s0.stabilizer(1));
      DenseOp sm = dense_pauli(2, s);
      twirled.add_scaled(sm.mul(rho).mul(sm), 0.25);
    }
    DenseOp recon(d);
    for (int mask = 0; mask < 4; ++mask) {
      PauliOp dk(2);
      if (mask & 1) dk.mul(s0.destabilizer(0));
      if (mask & 2) dk.mul(s0.destabilizer(1));
      DenseOp dm = dense_pauli(2, dk);
      std::vector<std::complex<double>> v(d, 0.0);
      for (std::size_t r = 0; r < d; ++r)
        for (std::size_t c = 0; c < d; ++c) v[r] += dm.at(r, c) * psi[c];
      DenseOp proj(d);
      for (std::size_t r = 0; r < d; ++r)
        for (std::size_t c = 0; c < d; ++c) proj.at(r, c) = v[r] * std::conj(v[c]);
      recon.add_scaled(proj, p[mask]);
    }
    CHECK(twirled.max_abs_diff(recon) < 1e-12);

    double sum = 0;
    for (double v : p) {
      CHECK(v >= -1e-12);
      sum += v;
    }
    CHECK(sum == doctest::Approx(1.0).epsilon(1e-12));
  }
}

TEST_CASE("twirl rejects non-states") {
  StabilizerTableau s0(1);
  DenseOp rho(2);
  rho.at(0, 0) = 2.0;  // trace 2
  CHECK_THROWS_AS(twirl_to_pauli(rho, s0), InputError);
  DenseOp neg(2);
  neg.at(0, 0) = 1.5;
  neg.at(1, 1) = -0.5;  // negative eigenvalue
  CHECK_THROWS_AS(twirl_to_pauli(neg, s0), InputError);
}
