#include "padeint/newmark.hpp"

namespace padeint {

namespace {
constexpr double kGamma = 0.5;
constexpr double kBeta = 0.25;
}  // namespace

NewmarkIntegrator::NewmarkIntegrator(const SecondOrderSystem& sys, double dt,
                                     SolvePath path)
    : sys_(sys), dt_(dt), n_(sys.ndof()) {
  sys_.validate();
  if (!(dt > 0.0)) {
    throw std::invalid_argument("NewmarkIntegrator: dt must be positive");
  }
  d_ = sys_.u0;
  v_ = sys_.v0;

  // Consistent initial acceleration from equilibrium at t = 0.
  std::vector<double> r = sys_.eval_force(0.0);
  sys_.C.multiply_add(-1.0, v_, r);
  sys_.K.multiply_add(-1.0, d_, r);
  RealFactorization mass;
  mass.factorize(sys_.M, path);
  a_ = mass.solve(r);

  eff_.factorize(assemble_effective(1.0, sys_.M, kGamma * dt_, sys_.C,
                                    kBeta * dt_ * dt_, sys_.K),
                 path);
}

void NewmarkIntegrator::step() {
  const double t1 = (step_ + 1) * dt_;
  // Predictors with the unknown acceleration left out.
  std::vector<double> dp(n_), vp(n_);
  for (int i = 0; i < n_; ++i) {
    dp[i] = d_[i] + dt_ * v_[i] + dt_ * dt_ * (0.5 - kBeta) * a_[i];
    vp[i] = v_[i] + dt_ * (1.0 - kGamma) * a_[i];
  }
  std::vector<double> rhs = sys_.eval_force(t1);
  sys_.C.multiply_add(-1.0, vp, rhs);
  sys_.K.multiply_add(-1.0, dp, rhs);
  a_ = eff_.solve(rhs);
  for (int i = 0; i < n_; ++i) {
    d_[i] = dp[i] + kBeta * dt_ * dt_ * a_[i];
    v_[i] = vp[i] + kGamma * dt_ * a_[i];
  }
  ++step_;
}

}  // namespace padeint
