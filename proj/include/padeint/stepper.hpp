#pragma once

#include <complex>
#include <map>
#include <vector>

#include "padeint/force_fit.hpp"
#include "padeint/linear_solver.hpp"
#include "padeint/pade_scheme.hpp"
#include "padeint/system.hpp"

namespace padeint {

struct StepperOptions {
  int order = 1;          // half-order M; the scheme converges at rate 2M
  int force_degree = -1;  // per-step load polynomial degree, -1 means order
  SolvePath path = SolvePath::Auto;
  // Cross-checks the recursive power cache against a direct rebuild every
  // step and throws NumericalError on disagreement. Test instrumentation.
  bool validate_cache = false;
  // Permutation of the factor blocks (real roots first, then conjugate
  // pairs). The product of commuting factors is order-independent, which a
  // test asserts; empty means canonical order.
  std::vector<int> block_order;
};

// One-step integrator for M u'' + C u' + K u = f advancing the scaled state
// z = [dt*velocity; displacement] by a rational approximation of the state
// transition. Each step costs one factorized solve per real denominator root
// and one complex solve per conjugate root pair; all factorizations happen
// once at construction. The companion state matrix is only ever applied, not
// formed.
class PadeStepper {
public:
  PadeStepper(const SecondOrderSystem& sys, double dt,
              StepperOptions opts = {});

  void step();

  int step_index() const { return step_; }
  double dt() const { return dt_; }
  double time() const { return step_ * dt_; }
  int ndof() const { return n_; }
  const PadeScheme& scheme() const { return scheme_; }

  double displacement(int dof) const { return z_[n_ + dof]; }
  double velocity(int dof) const { return z_[dof] / dt_; }
  const std::vector<double>& state() const { return z_; }
  // Replaces the state (and rebuilds the power cache); used by stability
  // probes that propagate basis vectors.
  void set_state(const std::vector<double>& z, int step_index = 0);

  // y = A x for the companion matrix A = [-dt*Minv*C, -dt^2*Minv*K; I, 0].
  std::vector<double> apply_A(const std::vector<double>& x) const;

  // Single-factor solve (r I - A) x = g for real root index `block`.
  std::vector<double> solve_real_block(int block,
                                       const std::vector<double>& g) const;

  struct PairSolve {
    std::vector<double> x;                  // pair-block solution, real
    std::vector<double> Ax;                 // A x, byproduct
    std::vector<double> A2x;                // A^2 x, byproduct
    std::vector<std::complex<double>> y;    // intermediate (r I - A)^{-1} g
  };
  // Two-factor solve (r I - A)(conj(r) I - A) x = g for pair index `pair`
  // through one complex factorization; A x and A^2 x fall out for free.
  PairSolve solve_complex_pair(int pair, const std::vector<double>& g) const;

private:
  void seed_cache();
  std::vector<double> mass_solve(const std::vector<double>& rhs) const;

  SecondOrderSystem sys_;
  double dt_ = 0.0;
  StepperOptions opts_;
  PadeScheme scheme_;
  ForceFitter fitter_;

  int n_ = 0;
  int step_ = 0;
  std::vector<double> z_;

  RealFactorization mass_;
  std::vector<RealFactorization> real_blocks_;
  std::vector<ComplexFactorization> pair_blocks_;

  std::vector<double> phat_d_;               // dense by power of A
  std::vector<std::vector<double>> ck_d_;    // ck_d_[k][j]: A^j weight in C_k
  int force_jmax_ = -1;                      // top nonzero power in any C_k

  std::vector<int> cached_powers_;           // ascending, all >= 1
  std::map<int, std::vector<double>> cache_; // power -> A^power z_

  std::vector<double> minv_spatial_;         // separable loads: Minv * spatial
  // A^j [Minv*spatial; 0] for the powers the load polynomials touch; fixed
  // spatial pattern means the per-step load term reduces to scaled adds.
  std::vector<std::vector<double>> force_powers_;
};

}  // namespace padeint
