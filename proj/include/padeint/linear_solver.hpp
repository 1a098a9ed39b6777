#pragma once

#include <complex>
#include <memory>
#include <stdexcept>
#include <vector>

#include "padeint/sparse.hpp"

namespace padeint {

class SingularSystemError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Dense is the oracle route for small systems, sparse the production route.
// Auto switches on size so every unit problem exercises the dense path and
// every mesh problem the sparse one; tests pin the path explicitly to compare
// the two against each other.
enum class SolvePath { Auto, Dense, Sparse };

// S = a*M + b*C + c*K on the union sparsity pattern.
SparseRealMatrix assemble_effective(double a, const SparseRealMatrix& M,
                                    double b, const SparseRealMatrix& C,
                                    double c, const SparseRealMatrix& K);
SparseComplexMatrix assemble_effective(std::complex<double> a,
                                       const SparseRealMatrix& M,
                                       std::complex<double> b,
                                       const SparseRealMatrix& C,
                                       std::complex<double> c,
                                       const SparseRealMatrix& K);

template <typename Scalar>
class FactorizationT {
public:
  FactorizationT();
  ~FactorizationT();
  FactorizationT(FactorizationT&&) noexcept;
  FactorizationT& operator=(FactorizationT&&) noexcept;

  // Factorizes once; numerically singular input raises SingularSystemError.
  void factorize(const SparseMatrixT<Scalar>& m, SolvePath path = SolvePath::Auto);

  bool ready() const;
  int size() const;
  SolvePath active_path() const;  // resolved path, never Auto

  std::vector<Scalar> solve(const std::vector<Scalar>& rhs) const;
  void solve_in_place(std::vector<Scalar>& rhs) const;

private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

using RealFactorization = FactorizationT<double>;
using ComplexFactorization = FactorizationT<std::complex<double>>;

}  // namespace padeint
