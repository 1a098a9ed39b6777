#pragma once

#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "padeint/sparse.hpp"

namespace padeint {

using ScalarSignal = std::function<double(double)>;
using VectorForce = std::function<std::vector<double>(double)>;

// M u'' + C u' + K u = f(t) with initial displacement/velocity.
// The load is either absent, a general vector-valued callable, or separable
// as (fixed spatial vector) * (scalar signal). The separable form is the one
// the stepper can precompute against, so model builders should prefer it.
struct SecondOrderSystem {
  SparseRealMatrix M;
  SparseRealMatrix C;
  SparseRealMatrix K;

  std::vector<double> u0;
  std::vector<double> v0;

  VectorForce force;                  // empty means consult separable parts
  std::vector<double> force_spatial;  // empty means no load
  ScalarSignal force_signal;

  std::string name;  // model tag carried into CSV metadata

  int ndof() const { return M.rows(); }
  bool has_force() const;
  bool separable_force() const;

  // Evaluates the load at time t; zero vector when the system is unforced.
  std::vector<double> eval_force(double t) const;

  // Shape and initial-condition consistency; throws invalid_argument.
  void validate() const;
};

SecondOrderSystem make_unforced_system(SparseRealMatrix M, SparseRealMatrix C,
                                       SparseRealMatrix K,
                                       std::vector<double> u0,
                                       std::vector<double> v0);

}  // namespace padeint
