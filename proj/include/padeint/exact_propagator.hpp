#pragma once

#include <Eigen/Dense>
#include <vector>

#include "padeint/force_fit.hpp"
#include "padeint/system.hpp"

namespace padeint {

// Dense companion matrix A = [-dt*Minv*C, -dt^2*Minv*K; I, 0] of the scaled
// first-order form. Reference-path only; the stepper never forms this.
Eigen::MatrixXd dense_state_matrix(const SecondOrderSystem& sys, double dt);

// Matrix exponential by scaling and squaring with a fixed high-order kernel.
// Accurate to machine precision for the desk-scale matrices it is used on.
Eigen::MatrixXd expm(const Eigen::MatrixXd& A);

// Gauss-Legendre nodes and weights on [0, 1].
void gauss_legendre_01(int n, std::vector<double>& nodes,
                       std::vector<double>& weights);

// Load convolution weights B_k = integral_0^1 exp(A(1-tau)) (tau-1/2)^k dtau.
// Uses the integration-by-parts recurrence when A is safely invertible and
// falls back to quadrature otherwise (singular stiffness gives singular A).
std::vector<Eigen::MatrixXd> load_convolution_weights(const Eigen::MatrixXd& A,
                                                      int pf);

// Reference integrator: z <- exp(A) z + sum_k B_k Ftilde_k with the same
// per-step load fit as the production stepper. For loads that are polynomial
// of degree <= pf within every step this is exact up to roundoff, making it
// the yardstick that isolates pure time-discretization error.
class ExactPropagator {
public:
  ExactPropagator(const SecondOrderSystem& sys, double dt, int pf = 1);

  void step();

  int step_index() const { return step_; }
  double dt() const { return dt_; }
  double time() const { return step_ * dt_; }
  int ndof() const { return n_; }

  double displacement(int dof) const { return z_[n_ + dof]; }
  double velocity(int dof) const { return z_[dof] / dt_; }
  const std::vector<double>& state() const { return z_; }
  void set_state(const std::vector<double>& z, int step_index = 0);

private:
  SecondOrderSystem sys_;
  double dt_;
  int n_;
  int step_ = 0;
  ForceFitter fitter_;
  std::vector<double> z_;
  Eigen::MatrixXd E_;
  std::vector<Eigen::MatrixXd> B_;
  Eigen::PartialPivLU<Eigen::MatrixXd> mass_lu_;
};

}  // namespace padeint
