#include "padeint/force_fit.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace padeint {

namespace {

// Legendre P_p and P'_p by the standard three-term recurrence.
void legendre_pair(int p, double x, double& P, double& dP) {
  double pm1 = 1.0, pm0 = x;
  if (p == 0) {
    P = 1.0;
    dP = 0.0;
    return;
  }
  for (int k = 2; k <= p; ++k) {
    const double pk = ((2 * k - 1) * x * pm0 - (k - 1) * pm1) / k;
    pm1 = pm0;
    pm0 = pk;
  }
  P = pm0;
  dP = p * (x * pm0 - pm1) / (x * x - 1.0);
}

}  // namespace

std::vector<double> gll_nodes(int p) {
  if (p < 1 || p > 16) {
    throw std::invalid_argument("gll_nodes: degree must be in [1, 16]");
  }
  std::vector<double> x(p + 1);
  x.front() = -1.0;
  x.back() = 1.0;
  // Interior nodes are the extrema of P_p. Chebyshev-Gauss-Lobatto points are
  // close enough for Newton on P'_p to converge in a few iterations.
  for (int i = 1; i < p; ++i) {
    double xi = -std::cos(std::numbers::pi * i / p);
    for (int it = 0; it < 64; ++it) {
      double P, dP;
      legendre_pair(p, xi, P, dP);
      // P'' from the Legendre ODE: (1-x^2)P'' = 2xP' - p(p+1)P
      const double d2P = (2.0 * xi * dP - p * (p + 1) * P) / (1.0 - xi * xi);
      const double step = dP / d2P;
      xi -= step;
      if (std::abs(step) < 1e-15) break;
    }
    x[i] = xi;
  }
  // Symmetrize; the node set of P'_p is exactly even.
  for (int i = 1; 2 * i < p; ++i) {
    const double m = 0.5 * (x[i] - x[p - i]);
    x[i] = m;
    x[p - i] = -m;
  }
  if (p % 2 == 0) x[p / 2] = 0.0;
  return x;
}

double lagrange_basis(const std::vector<double>& nodes, int l, double xi) {
  if (l < 0 || l >= static_cast<int>(nodes.size())) {
    throw std::invalid_argument("lagrange_basis: index out of range");
  }
  double v = 1.0;
  for (int j = 0; j < static_cast<int>(nodes.size()); ++j) {
    if (j == l) continue;
    v *= (xi - nodes[j]) / (nodes[l] - nodes[j]);
  }
  return v;
}

ForceFitter::ForceFitter(int degree) : p_(degree) {
  if (degree < 0 || degree > 16) {
    throw std::invalid_argument("ForceFitter: degree must be in [0, 16]");
  }
  if (degree == 0) {
    // Single midstep sample; the constant fit is the midpoint value.
    s_nodes_ = {0.5};
    vinv_ = {1.0};
    return;
  }
  const std::vector<double> xi = gll_nodes(degree);
  s_nodes_.resize(xi.size());
  for (size_t i = 0; i < xi.size(); ++i) s_nodes_[i] = 0.5 * (xi[i] + 1.0);

  const int n = degree + 1;
  Eigen::MatrixXd V(n, n);
  for (int i = 0; i < n; ++i) {
    double pw = 1.0;
    for (int k = 0; k < n; ++k) {
      V(i, k) = pw;
      pw *= (s_nodes_[i] - 0.5);
    }
  }
  Eigen::MatrixXd Vi = V.partialPivLu().inverse();
  vinv_.assign(Vi.data(), Vi.data() + n * n);  // Eigen default is column-major
}

std::vector<std::vector<double>> ForceFitter::fit(
    const std::function<std::vector<double>(double)>& force, double t0,
    double dt) const {
  const int n = p_ + 1;
  std::vector<std::vector<double>> samples(n);
  for (int i = 0; i < n; ++i) samples[i] = force(t0 + s_nodes_[i] * dt);
  const size_t ndof = samples[0].size();
  std::vector<std::vector<double>> coeffs(n, std::vector<double>(ndof, 0.0));
  for (int k = 0; k < n; ++k) {
    for (int i = 0; i < n; ++i) {
      const double w = vinv_[k + i * n];
      if (w == 0.0) continue;
      for (size_t d = 0; d < ndof; ++d) coeffs[k][d] += w * samples[i][d];
    }
  }
  return coeffs;
}

std::vector<double> ForceFitter::fit_scalar(
    const std::function<double(double)>& signal, double t0, double dt) const {
  const int n = p_ + 1;
  std::vector<double> samples(n);
  for (int i = 0; i < n; ++i) samples[i] = signal(t0 + s_nodes_[i] * dt);
  std::vector<double> coeffs(n, 0.0);
  for (int k = 0; k < n; ++k) {
    for (int i = 0; i < n; ++i) coeffs[k] += vinv_[k + i * n] * samples[i];
  }
  return coeffs;
}

}  // namespace padeint
