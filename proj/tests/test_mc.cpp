#include <doctest.h>

#include "lvr/errors.hpp"
#include "lvr/mc.hpp"
#include "lvr/weingarten.hpp"

using namespace lvr;

TEST_CASE("haar samples are unitary") {
  std::mt19937_64 rng(42);
  for (int trial = 0; trial < 200; ++trial) {
    int n = 2 + trial % 5;
    Eigen::MatrixXcd u = sample_haar_unitary(n, rng);
    CHECK((u.adjoint() * u - Eigen::MatrixXcd::Identity(n, n)).norm() < 1e-10);
  }
}

TEST_CASE("haar estimates are deterministic and match exact moments") {
  std::vector<HaarMomentSpec> moments;
  moments.push_back({{{0, 0}}, {{0, 0}}});          // |U00|^2 -> 1/3
  moments.push_back({{{0, 0}}, {{1, 1}}});          // U00 U11* -> 0
  moments.push_back({{{0, 0}, {0, 0}}, {{0, 0}, {0, 0}}});  // |U00|^4
  auto est = mc_haar(3, moments, 20000, 7);
  auto est2 = mc_haar(3, moments, 20000, 7);
  for (std::size_t i = 0; i < est.size(); ++i) {
    CHECK(est[i].real_part.mean == est2[i].real_part.mean);  // bit identical
    CHECK(est[i].imag_part.mean == est2[i].imag_part.mean);
  }

  CHECK(std::abs(est[0].real_part.mean - 1.0 / 3.0) <= 4 * est[0].real_part.standard_error);
  CHECK(std::abs(est[1].real_part.mean) <= 4 * est[1].real_part.standard_error + 1e-12);
  std::vector<int> aa{0, 0};
  double exact = static_cast<double>(haar_moment(aa, aa, aa, aa, 3).convert_to<double>());
  CHECK(std::abs(est[2].real_part.mean - exact) <= 4 * est[2].real_part.standard_error);
}

TEST_CASE("metropolis gaussian invariants") {
  McModelParams params;
  params.p = 2;
  params.lambda = 0.0;
  params.N = 4;
  params.k_max = 2;
  params.sweeps = 20000;
  params.burn_in = 3000;
  params.seed = 5;
  McModelResult result = mc_model(params);
  CHECK(result.adapted);
  // (1/N) Tr M Mdag -> 1 and (1/N) Tr (M Mdag)^2 -> 2 at lambda = 0
  CHECK(std::abs(result.invariants[0].mean - 1.0) <= 4 * result.invariants[0].standard_error);
  CHECK(std::abs(result.invariants[1].mean - 2.0) <= 4 * result.invariants[1].standard_error);

  // connected combination E_c[((1/N)Tr M Mdag)^2] = 1/N^2 at lambda = 0
  REQUIRE(!result.connected.empty());
  const auto& pair11 = result.connected.front();
  CHECK(pair11.k1 == 1);
  CHECK(pair11.k2 == 1);
  CHECK(std::abs(pair11.estimate.mean - 1.0 / 16.0) <= 4 * pair11.estimate.standard_error);

  McModelResult again = mc_model(params);
  CHECK(result.invariants[0].mean == again.invariants[0].mean);  // seed determinism

  CHECK_THROWS_AS(mc_model(McModelParams{2, -0.1, 4}), DomainError);
}
