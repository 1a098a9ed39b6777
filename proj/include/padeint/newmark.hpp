#pragma once

#include "padeint/linear_solver.hpp"
#include "padeint/system.hpp"

namespace padeint {

// Average-acceleration Newmark integrator (gamma = 1/2, beta = 1/4),
// implemented in the conventional displacement/velocity/acceleration form
// with the effective matrix M + gamma*dt*C + beta*dt^2*K factorized once.
// Deliberately shares no machinery with the rational-approximant stepper so
// the two act as independent checks on each other.
class NewmarkIntegrator {
public:
  NewmarkIntegrator(const SecondOrderSystem& sys, double dt,
                    SolvePath path = SolvePath::Auto);

  void step();

  int step_index() const { return step_; }
  double dt() const { return dt_; }
  double time() const { return step_ * dt_; }
  int ndof() const { return n_; }

  double displacement(int dof) const { return d_[dof]; }
  double velocity(int dof) const { return v_[dof]; }
  double acceleration(int dof) const { return a_[dof]; }

private:
  SecondOrderSystem sys_;
  double dt_;
  int n_;
  int step_ = 0;
  std::vector<double> d_, v_, a_;
  RealFactorization eff_;
};

}  // namespace padeint
