#include "padeint/system.hpp"

namespace padeint {

bool SecondOrderSystem::has_force() const {
  return static_cast<bool>(force) || !force_spatial.empty();
}

bool SecondOrderSystem::separable_force() const {
  return !force && !force_spatial.empty() && static_cast<bool>(force_signal);
}

std::vector<double> SecondOrderSystem::eval_force(double t) const {
  if (force) return force(t);
  if (force_spatial.empty()) return std::vector<double>(ndof(), 0.0);
  const double s = force_signal ? force_signal(t) : 1.0;
  std::vector<double> f(force_spatial);
  for (double& v : f) v *= s;
  return f;
}

void SecondOrderSystem::validate() const {
  const int n = ndof();
  if (n <= 0) throw std::invalid_argument("system: empty mass matrix");
  if (M.rows() != M.cols() || C.rows() != C.cols() || K.rows() != K.cols()) {
    throw std::invalid_argument("system: matrices must be square");
  }
  if (C.rows() != n || K.rows() != n) {
    throw std::invalid_argument("system: matrix sizes disagree");
  }
  if (static_cast<int>(u0.size()) != n || static_cast<int>(v0.size()) != n) {
    throw std::invalid_argument("system: initial conditions have wrong length");
  }
  if (!force_spatial.empty() && static_cast<int>(force_spatial.size()) != n) {
    throw std::invalid_argument("system: spatial load has wrong length");
  }
  if (force && !force_spatial.empty()) {
    throw std::invalid_argument(
        "system: provide either a general force or a separable one, not both");
  }
  if (!force_spatial.empty() && !force_signal) {
    throw std::invalid_argument(
        "system: separable load needs both the spatial vector and the signal");
  }
}

SecondOrderSystem make_unforced_system(SparseRealMatrix M, SparseRealMatrix C,
                                       SparseRealMatrix K,
                                       std::vector<double> u0,
                                       std::vector<double> v0) {
  SecondOrderSystem sys;
  sys.M = std::move(M);
  sys.C = std::move(C);
  sys.K = std::move(K);
  sys.u0 = std::move(u0);
  sys.v0 = std::move(v0);
  sys.validate();
  return sys;
}

}  // namespace padeint
