#include "silt/matrix.hpp"

#include <cassert>
#include <ostream>
#include <stdexcept>
#include <utility>

namespace silt {

Matrix::Matrix(std::initializer_list<std::initializer_list<std::int64_t>> rows) {
  rows_ = static_cast<int>(rows.size());
  cols_ = rows_ == 0 ? 0 : static_cast<int>(rows.begin()->size());
  data_.reserve(static_cast<std::size_t>(rows_) * cols_);
  for (const auto& r : rows) {
    if (static_cast<int>(r.size()) != cols_) throw std::invalid_argument("ragged matrix literal");
    for (auto v : r) data_.emplace_back(v);
  }
}

Matrix Matrix::identity(int n) {
  Matrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::from_columns(int rows, const std::vector<Vec>& columns) {
  Matrix m(rows, static_cast<int>(columns.size()));
  for (int c = 0; c < m.cols_; ++c) {
    assert(static_cast<int>(columns[c].size()) == rows);
    for (int r = 0; r < rows; ++r) m(r, c) = columns[c][r];
  }
  return m;
}

Matrix Matrix::from_rows(int cols, const std::vector<Vec>& rows) {
  Matrix m(static_cast<int>(rows.size()), cols);
  for (int r = 0; r < m.rows_; ++r) {
    assert(static_cast<int>(rows[r].size()) == cols);
    std::copy(rows[r].begin(), rows[r].end(), m.data_.begin() + static_cast<std::ptrdiff_t>(r) * cols);
  }
  return m;
}

Vec Matrix::row(int r) const {
  auto b = data_.begin() + static_cast<std::ptrdiff_t>(r) * cols_;
  return Vec(b, b + cols_);
}

Vec Matrix::column(int c) const {
  Vec v(rows_);
  for (int r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

bool Matrix::is_zero() const noexcept {
  for (auto x : data_)
    if (!x.is_zero()) return false;
  return true;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

Matrix Matrix::block(int r0, int c0, int nrows, int ncols) const {
  assert(r0 + nrows <= rows_ && c0 + ncols <= cols_);
  Matrix b(nrows, ncols);
  for (int r = 0; r < nrows; ++r)
    for (int c = 0; c < ncols; ++c) b(r, c) = (*this)(r0 + r, c0 + c);
  return b;
}

void Matrix::set_block(int r0, int c0, const Matrix& b) {
  assert(r0 + b.rows_ <= rows_ && c0 + b.cols_ <= cols_);
  for (int r = 0; r < b.rows_; ++r)
    for (int c = 0; c < b.cols_; ++c) (*this)(r0 + r, c0 + c) = b(r, c);
}

Matrix Matrix::select_columns(const std::vector<int>& cols) const {
  Matrix m(rows_, static_cast<int>(cols.size()));
  for (int r = 0; r < rows_; ++r)
    for (int j = 0; j < m.cols_; ++j) m(r, j) = (*this)(r, cols[j]);
  return m;
}

Matrix Matrix::select_rows(const std::vector<int>& rows) const {
  Matrix m(static_cast<int>(rows.size()), cols_);
  for (int i = 0; i < m.rows_; ++i)
    for (int c = 0; c < cols_; ++c) m(i, c) = (*this)(rows[i], c);
  return m;
}

Matrix Matrix::hstack(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_) throw std::invalid_argument("hstack: row mismatch");
  Matrix m(a.rows_, a.cols_ + b.cols_);
  m.set_block(0, 0, a);
  m.set_block(0, a.cols_, b);
  return m;
}

Matrix Matrix::vstack(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.cols_) throw std::invalid_argument("vstack: column mismatch");
  Matrix m(a.rows_ + b.rows_, a.cols_);
  m.set_block(0, 0, a);
  m.set_block(a.rows_, 0, b);
  return m;
}

Matrix Matrix::block_diagonal(const Matrix& a, const Matrix& b) {
  Matrix m(a.rows_ + b.rows_, a.cols_ + b.cols_);
  m.set_block(0, 0, a);
  m.set_block(a.rows_, a.cols_, b);
  return m;
}

Matrix& Matrix::operator+=(const Matrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix sum: shape mismatch");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix difference: shape mismatch");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
  return *this;
}

Matrix& Matrix::operator*=(Fp s) {
  for (auto& x : data_) x *= s;
  return *this;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product: shape mismatch");
  const std::uint64_t p = field_characteristic();
  Matrix m(a.rows_, b.cols_);
  // accumulate in 64 bits; p < 2^31 so p^2 < 2^62 and four terms fit before reducing
  std::vector<std::uint64_t> acc(b.cols_);
  for (int i = 0; i < a.rows_; ++i) {
    std::fill(acc.begin(), acc.end(), 0);
    int pending = 0;
    for (int k = 0; k < a.cols_; ++k) {
      const std::uint64_t x = a(i, k).value();
      if (x == 0) continue;
      const Fp* brow = b.data_.data() + static_cast<std::size_t>(k) * b.cols_;
      for (int j = 0; j < b.cols_; ++j) acc[j] += x * brow[j].value();
      if (++pending == 3) {
        for (auto& v : acc) v %= p;
        pending = 0;
      }
    }
    for (int j = 0; j < b.cols_; ++j) m(i, j) = Fp(static_cast<std::int64_t>(acc[j] % p));
  }
  return m;
}

Vec Matrix::operator*(const Vec& v) const {
  if (static_cast<int>(v.size()) != cols_) throw std::invalid_argument("matrix-vector: shape mismatch");
  Vec out(rows_);
  for (int r = 0; r < rows_; ++r) {
    Fp s;
    for (int c = 0; c < cols_; ++c) s += (*this)(r, c) * v[c];
    out[r] = s;
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const Matrix& m) {
  os << '[';
  for (int r = 0; r < m.rows(); ++r) {
    os << (r ? ", [" : "[");
    for (int c = 0; c < m.cols(); ++c) os << (c ? ", " : "") << m(r, c);
    os << ']';
  }
  return os << ']';
}

RowEchelon rref(Matrix m) {
  RowEchelon out;
  const int R = m.rows(), C = m.cols();
  int r = 0;
  for (int c = 0; c < C && r < R; ++c) {
    int piv = -1;
    for (int i = r; i < R; ++i)
      if (!m(i, c).is_zero()) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    if (piv != r)
      for (int j = 0; j < C; ++j) std::swap(m(piv, j), m(r, j));
    const Fp inv = m(r, c).inverse();
    for (int j = c; j < C; ++j) m(r, j) *= inv;
    for (int i = 0; i < R; ++i) {
      if (i == r) continue;
      const Fp f = m(i, c);
      if (f.is_zero()) continue;
      for (int j = c; j < C; ++j) m(i, j) -= f * m(r, j);
    }
    out.pivots.push_back(c);
    ++r;
  }
  out.rank = r;
  out.reduced = std::move(m);
  return out;
}

int rank(const Matrix& m) { return rref(m).rank; }

Matrix kernel_basis(const Matrix& m) {
  const auto e = rref(m);
  const int C = m.cols();
  std::vector<bool> is_pivot(C, false);
  for (int c : e.pivots) is_pivot[c] = true;
  Matrix k(C, C - e.rank);
  int col = 0;
  for (int f = 0; f < C; ++f) {
    if (is_pivot[f]) continue;
    k(f, col) = 1;
    for (int i = 0; i < e.rank; ++i) k(e.pivots[i], col) = -e.reduced(i, f);
    ++col;
  }
  return k;
}

std::optional<Matrix> solve(const Matrix& m, const Matrix& b) {
  if (m.rows() != b.rows()) throw std::invalid_argument("solve: row mismatch");
  const int C = m.cols();
  const auto e = rref(Matrix::hstack(m, b));
  // a pivot inside the b block means inconsistency
  if (e.rank > 0 && e.pivots.back() >= C) {
    for (int pc : e.pivots)
      if (pc >= C) return std::nullopt;
  }
  Matrix x(C, b.cols());
  for (int i = 0; i < e.rank; ++i)
    for (int j = 0; j < b.cols(); ++j) x(e.pivots[i], j) = e.reduced(i, C + j);
  return x;
}

std::optional<Matrix> inverse(const Matrix& m) {
  if (m.rows() != m.cols()) return std::nullopt;
  const int n = m.rows();
  const auto e = rref(Matrix::hstack(m, Matrix::identity(n)));
  if (n > 0 && (e.rank < n || e.pivots[n - 1] != n - 1)) return std::nullopt;
  return e.reduced.block(0, n, n, n);
}

Matrix column_space(const Matrix& m) { return m.select_columns(rref(m).pivots); }

Matrix left_annihilator(const Matrix& u) { return kernel_basis(u.transpose()).transpose(); }

std::vector<int> extend_basis(const Matrix& base, const Matrix& candidates) {
  SpanBuilder sb(base.rows());
  for (int c = 0; c < base.cols(); ++c) sb.add(base.column(c));
  std::vector<int> picked;
  for (int c = 0; c < candidates.cols(); ++c)
    if (sb.add(candidates.column(c))) picked.push_back(c);
  return picked;
}

Vec SpanBuilder::reduce(Vec v) const {
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    const Fp f = v[pivots_[i]];
    if (!f.is_zero()) axpy(v, -f, rows_[i]);
  }
  return v;
}

bool SpanBuilder::contains(const Vec& v) const { return silt::is_zero(reduce(v)); }

bool SpanBuilder::add(const Vec& v) {
  Vec r = reduce(v);
  int piv = -1;
  for (int i = 0; i < dim_; ++i)
    if (!r[i].is_zero()) {
      piv = i;
      break;
    }
  if (piv < 0) return false;
  const Fp inv = r[piv].inverse();
  for (auto& x : r) x *= inv;
  // keep stored rows fully reduced against the new pivot
  for (auto& row : rows_) {
    const Fp f = row[piv];
    if (!f.is_zero()) axpy(row, -f, r);
  }
  pivot_row_[piv] = static_cast<int>(rows_.size());
  rows_.push_back(std::move(r));
  pivots_.push_back(piv);
  return true;
}

bool is_zero(const Vec& v) noexcept {
  for (auto x : v)
    if (!x.is_zero()) return false;
  return true;
}

Vec add(const Vec& a, const Vec& b) {
  Vec out(a);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] += b[i];
  return out;
}

Vec scaled(const Vec& a, Fp s) {
  Vec out(a);
  for (auto& x : out) x *= s;
  return out;
}

void axpy(Vec& y, Fp a, const Vec& x) {
  for (std::size_t i = 0; i < y.size(); ++i) y[i] += a * x[i];
}

}  // namespace silt
