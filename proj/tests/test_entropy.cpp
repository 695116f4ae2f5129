#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "qvlc/entropy.hpp"
#include "qvlc/verify.hpp"
#include "test_util.hpp"

using namespace qvlc;
using testutil::diag_density;
using testutil::diag_matrix;

namespace {

DensityOperator conjugated(const DensityOperator& rho, const Matrix& u) {
  DensityOperator out;
  out.matrix = u * rho.matrix * u.adjoint();
  return out;
}

} // namespace

TEST_CASE("pure states carry zero entropy") {
  CHECK(von_neumann(diag_density({1.0, 0.0, 0.0}), 2).value == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(von_neumann(diag_density({1.0, 0.0, 0.0}), 3).value == doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("maximally mixed qubit has one bit of entropy") {
  const DensityOperator rho = validate_density(Matrix::Identity(2, 2) / 2.0);
  CHECK(von_neumann(rho, 2).value == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("dyadic spectrum evaluates exactly") {
  CHECK(von_neumann(diag_density({0.5, 0.25, 0.25}), 2).value == doctest::Approx(1.5));
}

TEST_CASE("all Renyi orders coincide on a uniform spectrum") {
  const DensityOperator rho = validate_density(Matrix::Identity(2, 2) / 2.0);
  for (double alpha : {0.0, 0.3, 0.5, 2.0, 8.0}) {
    CHECK(renyi(rho, alpha, 2).value == doctest::Approx(1.0).epsilon(1e-12));
  }
}

TEST_CASE("order one half on a dyadic spectrum") {
  const EntropyValue s = renyi(diag_density({0.5, 0.25, 0.25}), 0.5, 2);
  CHECK(s.value == doctest::Approx(1.5431066063272239).epsilon(1e-12));
  CHECK(s.order == 0.5);
  CHECK(s.base_k == 2);
}

TEST_CASE("order zero counts the rank") {
  CHECK(renyi(diag_density({0.9, 0.1, 0.0}), 0.0, 2).value == doctest::Approx(1.0));
}

TEST_CASE("order one is routed to von_neumann") {
  CHECK_THROWS_AS(renyi(diag_density({0.5, 0.5}), 1.0, 2), AlphaIsOne);
}

TEST_CASE("negative and non-finite orders are rejected") {
  CHECK_THROWS_AS(renyi(diag_density({0.5, 0.5}), -0.5, 2), AlphaOutOfRange);
  CHECK_THROWS_AS(renyi(diag_density({0.5, 0.5}), kPosInfinity, 2), AlphaOutOfRange);
}

TEST_CASE("relative entropy of identical operators vanishes") {
  const DensityOperator rho = diag_density({0.6, 0.3, 0.1});
  CHECK(std::abs(relative_entropy(rho, rho, 2)) < 1e-12);
}

TEST_CASE("relative entropy on commuting diagonals") {
  const double v = relative_entropy(diag_density({0.5, 0.5}), diag_density({2.0 / 3, 1.0 / 3}), 2);
  CHECK(v == doctest::Approx(0.08496250072115619).epsilon(1e-12));
}

TEST_CASE("disjoint supports give an infinite relative entropy") {
  const double v = relative_entropy(diag_density({1.0, 0.0}), diag_density({0.0, 1.0}), 2);
  CHECK(std::isinf(v));
}

TEST_CASE("relative entropy requires equal dimensions") {
  CHECK_THROWS_AS(relative_entropy(diag_density({0.5, 0.5}), diag_density({1.0}), 2),
                  DimensionMismatch);
}

TEST_CASE("Renyi divergence of identical operators vanishes") {
  const DensityOperator rho = diag_density({0.7, 0.2, 0.1});
  CHECK(std::abs(renyi_divergence(rho, rho, 2.0, 2)) < 1e-12);
}

TEST_CASE("order-2 divergence on commuting diagonals") {
  const double v =
      renyi_divergence(diag_density({0.5, 0.5}), diag_density({2.0 / 3, 1.0 / 3}), 2.0, 2);
  CHECK(v == doctest::Approx(0.16992500144231237).epsilon(1e-12));
}

TEST_CASE("divergence approaches relative entropy as the order drops to one") {
  const DensityOperator rho = diag_density({0.5, 0.5});
  const DensityOperator sigma = diag_density({2.0 / 3, 1.0 / 3});
  const double limit = renyi_divergence(rho, sigma, 1.0 + 1e-4, 2);
  const double target = relative_entropy(rho, sigma, 2);
  CHECK(std::abs(limit - target) < 1e-3);
}

TEST_CASE("divergence needs order above one") {
  CHECK_THROWS_AS(renyi_divergence(diag_density({0.5, 0.5}), diag_density({0.5, 0.5}), 0.5, 2),
                  AlphaOutOfRange);
}

TEST_CASE("divergence is infinite without support containment") {
  const double v = renyi_divergence(diag_density({0.5, 0.5}), diag_density({1.0, 0.0}), 2.0, 2);
  CHECK(std::isinf(v));
}

TEST_CASE("escort at t = 0 is the identity map") {
  std::mt19937_64 gen(17);
  const Matrix u = testutil::random_unitary(3, gen);
  const DensityOperator rho = conjugated(diag_density({0.5, 0.3, 0.2}), u);
  const DensityOperator esc = escort(rho, 0.0);
  CHECK((esc.matrix - rho.matrix).cwiseAbs().maxCoeff() < 1e-9);
}

TEST_CASE("escort of a two-point spectrum at t = 1") {
  const DensityOperator esc = escort(diag_density({0.64, 0.36}), 1.0);
  CHECK(std::abs(esc.matrix(0, 0).real() - 4.0 / 7) < 1e-12);
  CHECK(std::abs(esc.matrix(1, 1).real() - 3.0 / 7) < 1e-12);
}

TEST_CASE("escort of a dyadic spectrum at t = 1") {
  const DensityOperator esc = escort(diag_density({0.5, 0.25, 0.25}), 1.0);
  CHECK(std::abs(esc.matrix(0, 0).real() - 0.41421) < 1e-5);
  CHECK(std::abs(esc.matrix(1, 1).real() - 0.29289) < 1e-5);
  CHECK(std::abs(esc.matrix(2, 2).real() - 0.29289) < 1e-5);
}

TEST_CASE("escort commutes with its source") {
  std::mt19937_64 gen(23);
  for (int trial = 0; trial < 5; ++trial) {
    const DensityOperator rho = random_density(4, 100 + trial);
    const DensityOperator esc = escort(rho, 1.5);
    const Matrix commutator = rho.matrix * esc.matrix - esc.matrix * rho.matrix;
    CHECK(commutator.cwiseAbs().maxCoeff() < 1e-9);
  }
}

TEST_CASE("Renyi entropy is non-increasing in the order") {
  for (int trial = 0; trial < 10; ++trial) {
    const DensityOperator rho = random_density(5, 200 + trial);
    const double grid[] = {0.0, 0.25, 0.5, 0.75, 1.0, 1.5, 2.0, 4.0};
    double prev = kPosInfinity;
    for (double alpha : grid) {
      const double value =
          alpha == 1.0 ? von_neumann(rho, 2).value : renyi(rho, alpha, 2).value;
      CHECK(value <= prev + 1e-9);
      prev = value;
    }
  }
}

TEST_CASE("block spectra are additive") {
  const DensityOperator rho = diag_density({0.6, 0.25, 0.15});
  const SpectralDecomposition dec = eigh(rho);
  for (int K = 1; K <= 4; ++K) {
    const RealVector block = product_spectrum(dec.eigenvalues, K);
    Matrix m = Matrix::Zero(block.size(), block.size());
    for (int i = 0; i < block.size(); ++i) m(i, i) = block(i);
    const DensityOperator big = validate_density(m);
    for (double alpha : {0.5, 2.0}) {
      CHECK(std::abs(renyi(big, alpha, 2).value - K * renyi(rho, alpha, 2).value) < 1e-8);
    }
    CHECK(std::abs(von_neumann(big, 2).value - K * von_neumann(rho, 2).value) < 1e-8);
  }
}

TEST_CASE("entropies are basis independent") {
  std::mt19937_64 gen(31);
  const DensityOperator rho = random_density(4, 77);
  const Matrix u = testutil::random_unitary(4, gen);
  const DensityOperator rotated = conjugated(rho, u);
  CHECK(std::abs(von_neumann(rho, 2).value - von_neumann(rotated, 2).value) < 1e-8);
  for (double alpha : {0.0, 0.5, 2.0}) {
    CHECK(std::abs(renyi(rho, alpha, 2).value - renyi(rotated, alpha, 2).value) < 1e-8);
  }
  const DensityOperator tau = random_density(4, 78);
  const DensityOperator tau_rotated = conjugated(tau, u);
  CHECK(std::abs(relative_entropy(rho, tau, 2) - relative_entropy(rotated, tau_rotated, 2)) <
        1e-8);
  CHECK(std::abs(renyi_divergence(rho, tau, 2.0, 2) -
                 renyi_divergence(rotated, tau_rotated, 2.0, 2)) < 1e-8);
}

TEST_CASE("entropy values respect the log_k d ceiling") {
  for (int trial = 0; trial < 5; ++trial) {
    const DensityOperator rho = random_density(6, 300 + trial);
    for (int k : {2, 3}) {
      const double cap = log_base(6.0, k);
      CHECK(von_neumann(rho, k).value >= -1e-12);
      CHECK(von_neumann(rho, k).value <= cap + 1e-12);
      CHECK(renyi(rho, 0.5, k).value <= cap + 1e-12);
    }
  }
}
