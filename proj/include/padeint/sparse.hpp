#pragma once

#include <complex>
#include <iosfwd>
#include <string>
#include <vector>

namespace padeint {

template <typename Scalar>
struct TripletT {
  int row = 0;
  int col = 0;
  Scalar value{};
};

// Compressed sparse rows with sorted column indices. Duplicate entries in the
// triplet input are summed. Row-wise products are deterministic regardless of
// thread count because each row is reduced by exactly one thread, in index
// order.
template <typename Scalar>
class SparseMatrixT {
public:
  SparseMatrixT() = default;

  static SparseMatrixT from_triplets(int rows, int cols,
                                     std::vector<TripletT<Scalar>> triplets);
  static SparseMatrixT identity(int n);
  static SparseMatrixT zero(int rows, int cols) {
    return from_triplets(rows, cols, {});
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  int nnz() const { return static_cast<int>(values_.size()); }

  const std::vector<int>& row_ptr() const { return row_ptr_; }
  const std::vector<int>& col_idx() const { return col_idx_; }
  const std::vector<Scalar>& values() const { return values_; }

  Scalar coeff(int r, int c) const;

  // y = A x. The parallel kernel and the serial reference produce bitwise
  // identical results; the reference stays as the test oracle.
  void multiply(const Scalar* x, Scalar* y) const;
  void multiply_serial(const Scalar* x, Scalar* y) const;
  std::vector<Scalar> multiply(const std::vector<Scalar>& x) const;

  // y = alpha * A x + y, used by the effective-matrix assembly path.
  void multiply_add(Scalar alpha, const Scalar* x, Scalar* y) const;
  void multiply_add(Scalar alpha, const std::vector<Scalar>& x,
                    std::vector<Scalar>& y) const {
    multiply_add(alpha, x.data(), y.data());
  }

private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<int> row_ptr_{0};
  std::vector<int> col_idx_;
  std::vector<Scalar> values_;
};

using SparseRealMatrix = SparseMatrixT<double>;
using SparseComplexMatrix = SparseMatrixT<std::complex<double>>;

// Plain-text coordinate import/export (1-based indices, % comments,
// "matrix coordinate real general" header).
SparseRealMatrix read_matrix_market(std::istream& in);
SparseRealMatrix read_matrix_market_file(const std::string& path);
void write_matrix_market(std::ostream& out, const SparseRealMatrix& m);
void write_matrix_market_file(const std::string& path, const SparseRealMatrix& m);

}  // namespace padeint
