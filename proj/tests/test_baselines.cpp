#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <vector>

#include "padeint/exact_propagator.hpp"
#include "padeint/metrics.hpp"
#include "padeint/models.hpp"
#include "padeint/newmark.hpp"
#include "support/test_oracles.hpp"

using namespace padeint;
using Catch::Approx;

TEST_CASE("matrix exponential satisfies the basic identities", "[expm]") {
  CHECK((expm(Eigen::MatrixXd::Zero(4, 4)) -
         Eigen::MatrixXd::Identity(4, 4)).norm() < 1e-15);

  Eigen::MatrixXd A(6, 6);
  for (int i = 0; i < 6; ++i) {
    for (int j = 0; j < 6; ++j) A(i, j) = std::sin(3.0 * i + j) * 0.8;
  }
  const Eigen::MatrixXd E = expm(A);
  const Eigen::MatrixXd Einv = expm(-A);
  CHECK((E * Einv - Eigen::MatrixXd::Identity(6, 6)).norm() < 1e-12);
  // Semigroup property exercises the scaling stage.
  CHECK((expm(2.0 * A) - E * E).norm() / E.norm() < 1e-12);
}

TEST_CASE("state exponential matches the oscillator closed form", "[expm]") {
  for (int idx : {1, 3}) {
    const SdofCase c = sdof_case(idx);
    const SecondOrderSystem sys = sdof_system(c);
    const double dt = 0.21;
    const Eigen::MatrixXd E = expm(dense_state_matrix(sys, dt));
    const Eigen::Matrix2d want = oracle::sdof_transition(c.m, c.c, c.k, dt);
    CHECK((E - want).norm() < 1e-13);
  }
}

TEST_CASE("unit-interval quadrature integrates polynomials exactly",
          "[quadrature]") {
  std::vector<double> x, w;
  gauss_legendre_01(5, x, w);
  REQUIRE(x.size() == 5);
  for (size_t i = 0; i < x.size(); ++i) {
    CHECK(x[i] > 0.0);
    CHECK(x[i] < 1.0);
    if (i) CHECK(x[i] > x[i - 1]);
  }
  for (int k = 0; k <= 9; ++k) {  // exact through degree 2n-1
    double s = 0.0;
    for (size_t i = 0; i < x.size(); ++i) s += w[i] * std::pow(x[i], k);
    CHECK(s == Approx(1.0 / (k + 1)).margin(1e-14));
  }
}

TEST_CASE("load weights: recurrence agrees with direct quadrature",
          "[propagator]") {
  Eigen::MatrixXd A(4, 4);
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) A(i, j) = 0.3 * std::cos(2.0 * i - j);
  }
  A += Eigen::MatrixXd::Identity(4, 4);  // safely invertible
  const auto B = load_convolution_weights(A, 3);
  REQUIRE(B.size() == 4);

  std::vector<double> x, w;
  gauss_legendre_01(32, x, w);
  for (int k = 0; k <= 3; ++k) {
    Eigen::MatrixXd direct = Eigen::MatrixXd::Zero(4, 4);
    for (size_t i = 0; i < x.size(); ++i) {
      direct += w[i] * std::pow(x[i] - 0.5, k) * expm(A * (1.0 - x[i]));
    }
    CHECK((B[k] - direct).norm() < 1e-10);
  }
}

TEST_CASE("load weights survive a singular state matrix", "[propagator]") {
  // A = 0 has no inverse, forcing the quadrature fallback; the integrals
  // collapse to the moments of (tau - 1/2).
  const Eigen::MatrixXd Z = Eigen::MatrixXd::Zero(3, 3);
  const auto B = load_convolution_weights(Z, 2);
  CHECK((B[0] - Eigen::MatrixXd::Identity(3, 3)).norm() < 1e-13);
  CHECK(B[1].norm() < 1e-13);
  CHECK((B[2] - Eigen::MatrixXd::Identity(3, 3) / 12.0).norm() < 1e-13);
}

TEST_CASE("propagator reproduces free vibration to machine precision",
          "[propagator]") {
  for (int idx : {1, 2, 3, 4}) {
    const SecondOrderSystem sys = sdof_system(sdof_case(idx));
    ExactPropagator prop(sys, 0.01);
    for (int s = 0; s < 100; ++s) prop.step();
    CHECK(prop.displacement(0) ==
          Approx(sdof_analytic(idx, 1.0)).margin(1e-12));
  }
}

TEST_CASE("propagator result does not depend on the step size",
          "[propagator]") {
  // With a load that is polynomial of degree <= pf inside every step the
  // propagator is exact, so halving the step must change nothing.
  auto sys = oracle::random_system(3, 13, false);
  sys.force_spatial = {1.0, -0.4, 0.7};
  sys.force_signal = [](double t) { return 2.0 - 3.0 * t; };

  // The raw state scales velocity by dt, so compare physical quantities.
  auto worst_uv = [](const ExactPropagator& a, const ExactPropagator& b) {
    double w = 0.0;
    for (int d = 0; d < a.ndof(); ++d) {
      w = std::max(w, std::abs(a.displacement(d) - b.displacement(d)));
      w = std::max(w, std::abs(a.velocity(d) - b.velocity(d)));
    }
    return w;
  };

  ExactPropagator coarse(sys, 0.2, 1);
  ExactPropagator fine(sys, 0.1, 1);
  coarse.step();
  fine.step();
  fine.step();
  CHECK(worst_uv(coarse, fine) < 1e-10);

  SECTION("quadratic load with quadratic fit") {
    sys.force_signal = [](double t) { return 1.0 + t * (2.0 - 5.0 * t); };
    ExactPropagator a(sys, 0.3, 2);
    ExactPropagator b(sys, 0.1, 2);
    a.step();
    for (int s = 0; s < 3; ++s) b.step();
    CHECK(worst_uv(a, b) < 1e-10);
  }
}

TEST_CASE("trapezoidal baseline converges at second order", "[newmark]") {
  const SdofCase c = sdof_case(3);
  const SecondOrderSystem sys = sdof_system(c);
  std::vector<double> dts{c.Tn / 16, c.Tn / 32, c.Tn / 64};
  std::vector<double> errs;
  for (double dt : dts) {
    const int ns = static_cast<int>(std::llround(2.0 / dt));
    NewmarkIntegrator nm(sys, dt);
    std::vector<double> u{nm.displacement(0)}, ref{sdof_analytic(3, 0.0)};
    for (int s = 1; s <= ns; ++s) {
      nm.step();
      u.push_back(nm.displacement(0));
      ref.push_back(sdof_analytic(3, s * dt));
    }
    errs.push_back(l2_error(u, ref, dt));
  }
  CHECK(convergence_slope(dts, errs) == Approx(2.0).margin(0.2));
}

TEST_CASE("baseline starts from the consistent acceleration", "[newmark]") {
  const SdofCase c = sdof_case(5);
  const SecondOrderSystem sys = sdof_system(c);
  NewmarkIntegrator nm(sys, 0.01);
  // m a0 = f(0) - c v0 - k u0 with f(0) = 10 from the cosine tone.
  CHECK(nm.acceleration(0) == Approx(10.0 - c.k * c.u0).margin(1e-12));
  CHECK(nm.displacement(0) == Approx(c.u0));
  CHECK(nm.velocity(0) == Approx(c.v0));
}
