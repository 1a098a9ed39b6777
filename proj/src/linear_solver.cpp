#include "padeint/linear_solver.hpp"

#include <Eigen/Dense>
#include <Eigen/Sparse>
#include <Eigen/SparseLU>
#include <cmath>

namespace padeint {

namespace {

// Auto resolves to dense for anything a desk-size unit test would build and
// to sparse for meshes. The feasible range of both paths overlaps so tests
// can force either one on the same matrix.
constexpr int kDenseCutoff = 64;

template <typename Scalar>
void append_scaled(std::vector<TripletT<Scalar>>& out, Scalar s,
                   const SparseRealMatrix& m) {
  if (s == Scalar(0)) return;
  for (int r = 0; r < m.rows(); ++r) {
    for (int p = m.row_ptr()[r]; p < m.row_ptr()[r + 1]; ++p) {
      out.push_back({r, m.col_idx()[p], s * Scalar(m.values()[p])});
    }
  }
}

template <typename Scalar>
SparseMatrixT<Scalar> combine(Scalar a, const SparseRealMatrix& M, Scalar b,
                              const SparseRealMatrix& C, Scalar c,
                              const SparseRealMatrix& K) {
  if (M.rows() != C.rows() || M.rows() != K.rows() || M.rows() != M.cols()) {
    throw std::invalid_argument("effective matrix: operand shapes disagree");
  }
  std::vector<TripletT<Scalar>> trips;
  trips.reserve(static_cast<size_t>(M.nnz()) + C.nnz() + K.nnz());
  append_scaled(trips, a, M);
  append_scaled(trips, b, C);
  append_scaled(trips, c, K);
  return SparseMatrixT<Scalar>::from_triplets(M.rows(), M.cols(), trips);
}

template <typename Scalar>
Eigen::SparseMatrix<Scalar> to_eigen(const SparseMatrixT<Scalar>& m) {
  std::vector<Eigen::Triplet<Scalar>> trips;
  trips.reserve(static_cast<size_t>(m.nnz()));
  for (int r = 0; r < m.rows(); ++r) {
    for (int p = m.row_ptr()[r]; p < m.row_ptr()[r + 1]; ++p) {
      trips.emplace_back(r, m.col_idx()[p], m.values()[p]);
    }
  }
  Eigen::SparseMatrix<Scalar> out(m.rows(), m.cols());
  out.setFromTriplets(trips.begin(), trips.end());
  out.makeCompressed();
  return out;
}

template <typename Scalar>
Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> to_dense(
    const SparseMatrixT<Scalar>& m) {
  Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> out =
      Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>::Zero(m.rows(),
                                                                  m.cols());
  for (int r = 0; r < m.rows(); ++r) {
    for (int p = m.row_ptr()[r]; p < m.row_ptr()[r + 1]; ++p) {
      out(r, m.col_idx()[p]) += m.values()[p];
    }
  }
  return out;
}

}  // namespace

SparseRealMatrix assemble_effective(double a, const SparseRealMatrix& M,
                                    double b, const SparseRealMatrix& C,
                                    double c, const SparseRealMatrix& K) {
  return combine<double>(a, M, b, C, c, K);
}

SparseComplexMatrix assemble_effective(std::complex<double> a,
                                       const SparseRealMatrix& M,
                                       std::complex<double> b,
                                       const SparseRealMatrix& C,
                                       std::complex<double> c,
                                       const SparseRealMatrix& K) {
  return combine<std::complex<double>>(a, M, b, C, c, K);
}

template <typename Scalar>
struct FactorizationT<Scalar>::Impl {
  using DenseMat = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
  using Vec = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

  int n = 0;
  SolvePath path = SolvePath::Auto;
  Eigen::FullPivLU<DenseMat> dense;
  Eigen::SparseLU<Eigen::SparseMatrix<Scalar>> sparse;

  void factorize(const SparseMatrixT<Scalar>& m, SolvePath requested) {
    if (m.rows() != m.cols()) {
      throw std::invalid_argument("factorize: matrix must be square");
    }
    n = 0;  // stays not-ready unless the factorization below succeeds
    const int nn = m.rows();
    path = requested;
    if (path == SolvePath::Auto) {
      path = nn <= kDenseCutoff ? SolvePath::Dense : SolvePath::Sparse;
    }
    if (path == SolvePath::Dense) {
      dense.compute(to_dense(m));
      if (!dense.isInvertible()) {
        throw SingularSystemError("effective matrix is singular (dense path)");
      }
    } else {
      sparse.compute(to_eigen(m));
      if (sparse.info() != Eigen::Success) {
        throw SingularSystemError("effective matrix is singular (sparse path)");
      }
      // SparseLU can report success on some near-singular inputs; a probe
      // solve catches the NaN/Inf fallout before it reaches the stepper.
      Vec probe = sparse.solve(Vec::Ones(nn));
      if (!probe.allFinite()) {
        throw SingularSystemError("effective matrix is singular (sparse path)");
      }
    }
    n = nn;
  }

  Vec solve(const Vec& rhs) const {
    return path == SolvePath::Dense ? Vec(dense.solve(rhs))
                                    : Vec(sparse.solve(rhs));
  }
};

template <typename Scalar>
FactorizationT<Scalar>::FactorizationT() : impl_(std::make_unique<Impl>()) {}

template <typename Scalar>
FactorizationT<Scalar>::~FactorizationT() = default;

template <typename Scalar>
FactorizationT<Scalar>::FactorizationT(FactorizationT&&) noexcept = default;

template <typename Scalar>
FactorizationT<Scalar>& FactorizationT<Scalar>::operator=(
    FactorizationT&&) noexcept = default;

template <typename Scalar>
void FactorizationT<Scalar>::factorize(const SparseMatrixT<Scalar>& m,
                                       SolvePath path) {
  impl_->factorize(m, path);
}

template <typename Scalar>
bool FactorizationT<Scalar>::ready() const {
  return impl_->n > 0;
}

template <typename Scalar>
int FactorizationT<Scalar>::size() const {
  return impl_->n;
}

template <typename Scalar>
SolvePath FactorizationT<Scalar>::active_path() const {
  return impl_->path;
}

template <typename Scalar>
std::vector<Scalar> FactorizationT<Scalar>::solve(
    const std::vector<Scalar>& rhs) const {
  if (static_cast<int>(rhs.size()) != impl_->n) {
    throw std::invalid_argument("solve: rhs size mismatch");
  }
  typename Impl::Vec b =
      Eigen::Map<const typename Impl::Vec>(rhs.data(), impl_->n);
  typename Impl::Vec x = impl_->solve(b);
  return std::vector<Scalar>(x.data(), x.data() + impl_->n);
}

template <typename Scalar>
void FactorizationT<Scalar>::solve_in_place(std::vector<Scalar>& rhs) const {
  rhs = solve(rhs);
}

template class FactorizationT<double>;
template class FactorizationT<std::complex<double>>;

}  // namespace padeint
