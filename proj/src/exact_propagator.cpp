#include "padeint/exact_propagator.hpp"

#include <cmath>

namespace padeint {

namespace {

Eigen::MatrixXd to_dense(const SparseRealMatrix& m) {
  Eigen::MatrixXd out = Eigen::MatrixXd::Zero(m.rows(), m.cols());
  for (int r = 0; r < m.rows(); ++r) {
    for (int p = m.row_ptr()[r]; p < m.row_ptr()[r + 1]; ++p) {
      out(r, m.col_idx()[p]) += m.values()[p];
    }
  }
  return out;
}

}  // namespace

Eigen::MatrixXd dense_state_matrix(const SecondOrderSystem& sys, double dt) {
  const int n = sys.ndof();
  const Eigen::MatrixXd M = to_dense(sys.M);
  const Eigen::MatrixXd C = to_dense(sys.C);
  const Eigen::MatrixXd K = to_dense(sys.K);
  Eigen::PartialPivLU<Eigen::MatrixXd> lu(M);
  Eigen::MatrixXd A = Eigen::MatrixXd::Zero(2 * n, 2 * n);
  A.topLeftCorner(n, n) = -dt * lu.solve(C);
  A.topRightCorner(n, n) = -dt * dt * lu.solve(K);
  A.bottomLeftCorner(n, n) = Eigen::MatrixXd::Identity(n, n);
  return A;
}

Eigen::MatrixXd expm(const Eigen::MatrixXd& A) {
  // 13th-degree rational kernel with scaling and squaring; coefficients are
  // the standard ones for this degree.
  static const double b[14] = {64764752532480000.0,
                               32382376266240000.0,
                               7771770303897600.0,
                               1187353796428800.0,
                               129060195264000.0,
                               10559470521600.0,
                               670442572800.0,
                               33522128640.0,
                               1323241920.0,
                               40840800.0,
                               960960.0,
                               16380.0,
                               182.0,
                               1.0};
  const double theta13 = 5.371920351148152;
  const int n = static_cast<int>(A.rows());
  const double nrm = A.cwiseAbs().colwise().sum().maxCoeff();
  int s = 0;
  if (nrm > theta13) {
    s = static_cast<int>(std::ceil(std::log2(nrm / theta13)));
  }
  const Eigen::MatrixXd As = A / std::pow(2.0, s);
  const Eigen::MatrixXd I = Eigen::MatrixXd::Identity(n, n);
  const Eigen::MatrixXd A2 = As * As;
  const Eigen::MatrixXd A4 = A2 * A2;
  const Eigen::MatrixXd A6 = A2 * A4;
  const Eigen::MatrixXd U =
      As * (A6 * (b[13] * A6 + b[11] * A4 + b[9] * A2) + b[7] * A6 +
            b[5] * A4 + b[3] * A2 + b[1] * I);
  const Eigen::MatrixXd V = A6 * (b[12] * A6 + b[10] * A4 + b[8] * A2) +
                            b[6] * A6 + b[4] * A4 + b[2] * A2 + b[0] * I;
  Eigen::MatrixXd E = (V - U).partialPivLu().solve(V + U);
  for (int i = 0; i < s; ++i) E = E * E;
  return E;
}

void gauss_legendre_01(int n, std::vector<double>& nodes,
                       std::vector<double>& weights) {
  // Golub-Welsch: eigenvalues of the symmetric Jacobi matrix are the nodes
  // on [-1, 1]; weights come from the first eigenvector components.
  Eigen::MatrixXd J = Eigen::MatrixXd::Zero(n, n);
  for (int k = 1; k < n; ++k) {
    const double beta = k / std::sqrt(4.0 * k * k - 1.0);
    J(k, k - 1) = beta;
    J(k - 1, k) = beta;
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(J);
  nodes.resize(n);
  weights.resize(n);
  for (int i = 0; i < n; ++i) {
    const double x = es.eigenvalues()(i);
    const double v0 = es.eigenvectors()(0, i);
    nodes[i] = 0.5 * (x + 1.0);
    weights[i] = v0 * v0;  // 2*v0^2 on [-1,1], halved by the interval map
  }
}

std::vector<Eigen::MatrixXd> load_convolution_weights(const Eigen::MatrixXd& A,
                                                      int pf) {
  const int n = static_cast<int>(A.rows());
  const Eigen::MatrixXd I = Eigen::MatrixXd::Identity(n, n);
  const Eigen::MatrixXd E = expm(A);
  std::vector<Eigen::MatrixXd> B(pf + 1);

  Eigen::JacobiSVD<Eigen::MatrixXd> svd(A);
  const double smin = svd.singularValues()(svd.singularValues().size() - 1);
  const double smax = svd.singularValues()(0);
  if (smax > 0.0 && smin / smax > 1e-8) {
    Eigen::PartialPivLU<Eigen::MatrixXd> lu(A);
    B[0] = lu.solve(E - I);
    double half_pow = 1.0;
    for (int k = 1; k <= pf; ++k) {
      half_pow *= -0.5;
      const double sign = (k % 2 == 0) ? 1.0 : -1.0;
      B[k] = lu.solve(k * B[k - 1] + half_pow * (E - sign * I));
    }
    return B;
  }

  // Singular (or nearly singular) A: evaluate the defining integrals by
  // quadrature. exp(A(1-tau)) (tau-1/2)^k is entire in tau, so high-order
  // Gauss-Legendre converges past machine precision.
  std::vector<double> tau, w;
  gauss_legendre_01(32, tau, w);
  for (int k = 0; k <= pf; ++k) B[k] = Eigen::MatrixXd::Zero(n, n);
  for (size_t q = 0; q < tau.size(); ++q) {
    const Eigen::MatrixXd Eq = expm(A * (1.0 - tau[q]));
    double poly = 1.0;
    for (int k = 0; k <= pf; ++k) {
      B[k] += (w[q] * poly) * Eq;
      poly *= (tau[q] - 0.5);
    }
  }
  return B;
}

ExactPropagator::ExactPropagator(const SecondOrderSystem& sys, double dt,
                                 int pf)
    : sys_(sys), dt_(dt), n_(sys.ndof()), fitter_(pf) {
  sys_.validate();
  if (!(dt > 0.0)) {
    throw std::invalid_argument("ExactPropagator: dt must be positive");
  }
  z_.assign(2 * n_, 0.0);
  for (int i = 0; i < n_; ++i) {
    z_[i] = dt_ * sys_.v0[i];
    z_[n_ + i] = sys_.u0[i];
  }
  const Eigen::MatrixXd A = dense_state_matrix(sys_, dt_);
  E_ = expm(A);
  B_ = load_convolution_weights(A, pf);
  mass_lu_.compute(to_dense(sys_.M));
}

void ExactPropagator::set_state(const std::vector<double>& z, int step_index) {
  if (static_cast<int>(z.size()) != 2 * n_) {
    throw std::invalid_argument("set_state: state length must be 2*ndof");
  }
  z_ = z;
  step_ = step_index;
}

void ExactPropagator::step() {
  const double t0 = step_ * dt_;
  Eigen::VectorXd z = Eigen::Map<const Eigen::VectorXd>(z_.data(), 2 * n_);
  Eigen::VectorXd znew = E_ * z;
  if (sys_.has_force()) {
    const std::vector<std::vector<double>> a = fitter_.fit(
        [this](double t) { return sys_.eval_force(t); }, t0, dt_);
    for (size_t k = 0; k < B_.size() && k < a.size(); ++k) {
      Eigen::VectorXd fk =
          Eigen::Map<const Eigen::VectorXd>(a[k].data(), n_);
      Eigen::VectorXd F = Eigen::VectorXd::Zero(2 * n_);
      F.head(n_) = dt_ * dt_ * mass_lu_.solve(fk);
      znew += B_[k] * F;
    }
  }
  Eigen::Map<Eigen::VectorXd>(z_.data(), 2 * n_) = znew;
  ++step_;
}

}  // namespace padeint
