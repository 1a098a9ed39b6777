#pragma once

#include <functional>
#include <vector>

namespace padeint {

// Gauss-Lobatto-Legendre nodes on [-1, 1]: the endpoints plus the p-1 roots
// of the Legendre derivative P'_p. p+1 nodes total, ascending. p in [1, 16].
std::vector<double> gll_nodes(int p);

// Lagrange cardinal polynomial l-th of the given nodes, evaluated at xi.
double lagrange_basis(const std::vector<double>& nodes, int l, double xi);

// Interpolates a time slice of a vector-valued load on one step [t0, t0+dt]
// by a degree-p polynomial in (s - 1/2), s = (t - t0)/dt in [0, 1], collocated
// at the GLL nodes. Node count equals coefficient count, so polynomial inputs
// of degree <= p are reproduced exactly.
//
// coeffs[k][i] is the k-th coefficient for DOF i; f(t0 + s*dt) ~ sum_k
// coeffs[k] * (s - 1/2)^k.
class ForceFitter {
public:
  explicit ForceFitter(int degree);

  int degree() const { return p_; }
  // Fitting abscissae in s (unit step coordinate), ascending.
  const std::vector<double>& sample_points() const { return s_nodes_; }

  std::vector<std::vector<double>> fit(
      const std::function<std::vector<double>(double)>& force, double t0,
      double dt) const;
  std::vector<double> fit_scalar(const std::function<double(double)>& signal,
                                 double t0, double dt) const;

private:
  int p_;
  std::vector<double> s_nodes_;
  // Inverse Vandermonde in the (s - 1/2) monomial basis, column-major.
  std::vector<double> vinv_;
};

}  // namespace padeint
