#include "padeint/sparse.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace padeint {

template <typename Scalar>
SparseMatrixT<Scalar> SparseMatrixT<Scalar>::from_triplets(
    int rows, int cols, std::vector<TripletT<Scalar>> triplets) {
  if (rows < 0 || cols < 0)
    throw std::invalid_argument("sparse matrix: negative dimension");
  for (const auto& t : triplets)
    if (t.row < 0 || t.row >= rows || t.col < 0 || t.col >= cols)
      throw std::invalid_argument("sparse matrix: triplet index out of range");

  std::sort(triplets.begin(), triplets.end(),
            [](const auto& a, const auto& b) {
              return a.row != b.row ? a.row < b.row : a.col < b.col;
            });

  SparseMatrixT m;
  m.rows_ = rows;
  m.cols_ = cols;
  m.row_ptr_.assign(rows + 1, 0);
  m.col_idx_.reserve(triplets.size());
  m.values_.reserve(triplets.size());
  for (size_t i = 0; i < triplets.size();) {
    size_t j = i;
    Scalar sum{};
    while (j < triplets.size() && triplets[j].row == triplets[i].row &&
           triplets[j].col == triplets[i].col)
      sum += triplets[j++].value;
    m.col_idx_.push_back(triplets[i].col);
    m.values_.push_back(sum);
    ++m.row_ptr_[triplets[i].row + 1];
    i = j;
  }
  for (int r = 0; r < rows; ++r) m.row_ptr_[r + 1] += m.row_ptr_[r];
  return m;
}

template <typename Scalar>
SparseMatrixT<Scalar> SparseMatrixT<Scalar>::identity(int n) {
  std::vector<TripletT<Scalar>> t(n);
  for (int i = 0; i < n; ++i) t[i] = {i, i, Scalar(1)};
  return from_triplets(n, n, std::move(t));
}

template <typename Scalar>
Scalar SparseMatrixT<Scalar>::coeff(int r, int c) const {
  for (int k = row_ptr_[r]; k < row_ptr_[r + 1]; ++k)
    if (col_idx_[k] == c) return values_[k];
  return Scalar{};
}

template <typename Scalar>
void SparseMatrixT<Scalar>::multiply_serial(const Scalar* x, Scalar* y) const {
  for (int r = 0; r < rows_; ++r) {
    Scalar acc{};
    for (int k = row_ptr_[r]; k < row_ptr_[r + 1]; ++k)
      acc += values_[k] * x[col_idx_[k]];
    y[r] = acc;
  }
}

template <typename Scalar>
void SparseMatrixT<Scalar>::multiply(const Scalar* x, Scalar* y) const {
#ifdef _OPENMP
#pragma omp parallel for schedule(static) if (rows_ > 2048)
#endif
  for (int r = 0; r < rows_; ++r) {
    Scalar acc{};
    for (int k = row_ptr_[r]; k < row_ptr_[r + 1]; ++k)
      acc += values_[k] * x[col_idx_[k]];
    y[r] = acc;
  }
}

template <typename Scalar>
std::vector<Scalar> SparseMatrixT<Scalar>::multiply(
    const std::vector<Scalar>& x) const {
  if (static_cast<int>(x.size()) != cols_)
    throw std::invalid_argument("sparse matrix: size mismatch in product");
  std::vector<Scalar> y(rows_);
  multiply(x.data(), y.data());
  return y;
}

template <typename Scalar>
void SparseMatrixT<Scalar>::multiply_add(Scalar alpha, const Scalar* x,
                                         Scalar* y) const {
  for (int r = 0; r < rows_; ++r) {
    Scalar acc{};
    for (int k = row_ptr_[r]; k < row_ptr_[r + 1]; ++k)
      acc += values_[k] * x[col_idx_[k]];
    y[r] += alpha * acc;
  }
}

template class SparseMatrixT<double>;
template class SparseMatrixT<std::complex<double>>;

SparseRealMatrix read_matrix_market(std::istream& in) {
  std::string line;
  bool header_seen = false;
  bool symmetric = false;
  long long rows = 0, cols = 0, entries = 0;
  std::vector<TripletT<double>> trip;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    if (line[0] == '%') {
      if (!header_seen && line.rfind("%%MatrixMarket", 0) == 0) {
        header_seen = true;
        if (line.find("coordinate") == std::string::npos ||
            line.find("real") == std::string::npos)
          throw std::invalid_argument(
              "matrix import: only coordinate real format is supported");
        symmetric = line.find("symmetric") != std::string::npos;
      }
      continue;
    }
    std::istringstream ls(line);
    if (rows == 0) {
      if (!(ls >> rows >> cols >> entries) || rows <= 0 || cols <= 0)
        throw std::invalid_argument("matrix import: bad size line");
      trip.reserve(static_cast<size_t>(entries) * (symmetric ? 2 : 1));
      continue;
    }
    long long r, c;
    double v;
    if (!(ls >> r >> c >> v))
      throw std::invalid_argument("matrix import: bad entry line");
    if (r < 1 || r > rows || c < 1 || c > cols)
      throw std::invalid_argument("matrix import: entry index out of range");
    trip.push_back({static_cast<int>(r - 1), static_cast<int>(c - 1), v});
    if (symmetric && r != c)
      trip.push_back({static_cast<int>(c - 1), static_cast<int>(r - 1), v});
  }
  if (rows == 0) throw std::invalid_argument("matrix import: empty input");
  return SparseRealMatrix::from_triplets(static_cast<int>(rows),
                                         static_cast<int>(cols),
                                         std::move(trip));
}

SparseRealMatrix read_matrix_market_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("matrix import: cannot open " + path);
  return read_matrix_market(in);
}

void write_matrix_market(std::ostream& out, const SparseRealMatrix& m) {
  out << "%%MatrixMarket matrix coordinate real general\n";
  out << m.rows() << " " << m.cols() << " " << m.nnz() << "\n";
  out.precision(17);
  for (int r = 0; r < m.rows(); ++r)
    for (int k = m.row_ptr()[r]; k < m.row_ptr()[r + 1]; ++k)
      out << r + 1 << " " << m.col_idx()[k] + 1 << " " << m.values()[k] << "\n";
}

void write_matrix_market_file(const std::string& path,
                              const SparseRealMatrix& m) {
  std::ofstream out(path);
  if (!out) throw std::invalid_argument("matrix export: cannot open " + path);
  write_matrix_market(out, m);
}

}  // namespace padeint
