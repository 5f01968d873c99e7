#pragma once

#include <initializer_list>
#include <iosfwd>
#include <optional>
#include <vector>

#include "silt/field.hpp"

namespace silt {

using Vec = std::vector<Fp>;

/// Dense row-major matrix over F_p. 0 x n and n x 0 shapes are legal and act
/// as zero maps.
class Matrix {
 public:
  Matrix() = default;
  Matrix(int rows, int cols) : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * cols) {}
  Matrix(std::initializer_list<std::initializer_list<std::int64_t>> rows);

  static Matrix identity(int n);
  static Matrix from_columns(int rows, const std::vector<Vec>& columns);
  static Matrix from_rows(int cols, const std::vector<Vec>& rows);

  int rows() const noexcept { return rows_; }
  int cols() const noexcept { return cols_; }
  bool empty() const noexcept { return rows_ == 0 || cols_ == 0; }

  Fp& operator()(int r, int c) { return data_[static_cast<std::size_t>(r) * cols_ + c]; }
  Fp operator()(int r, int c) const { return data_[static_cast<std::size_t>(r) * cols_ + c]; }

  const std::vector<Fp>& data() const noexcept { return data_; }

  Vec row(int r) const;
  Vec column(int c) const;
  bool is_zero() const noexcept;

  Matrix transpose() const;
  Matrix block(int r0, int c0, int nrows, int ncols) const;
  void set_block(int r0, int c0, const Matrix& b);
  Matrix select_columns(const std::vector<int>& cols) const;
  Matrix select_rows(const std::vector<int>& rows) const;

  static Matrix hstack(const Matrix& a, const Matrix& b);
  static Matrix vstack(const Matrix& a, const Matrix& b);
  static Matrix block_diagonal(const Matrix& a, const Matrix& b);

  Matrix& operator+=(const Matrix& o);
  Matrix& operator-=(const Matrix& o);
  Matrix& operator*=(Fp s);

  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(Matrix a, Fp s) { return a *= s; }
  friend Matrix operator*(Fp s, Matrix a) { return a *= s; }
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  Vec operator*(const Vec& v) const;

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }
  friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<Fp> data_;
};

std::ostream& operator<<(std::ostream& os, const Matrix& m);

struct RowEchelon {
  Matrix reduced;
  int rank = 0;
  std::vector<int> pivots;  // pivot column of each nonzero row, increasing
};

/// Reduced row-echelon form with leftmost pivots.
RowEchelon rref(Matrix m);

int rank(const Matrix& m);

/// Columns form a basis of {x : m x = 0}; one column per non-pivot column,
/// in increasing order of the free variable.
Matrix kernel_basis(const Matrix& m);

/// Some x with m x = b (free variables set to zero), or nullopt when b is not
/// in the column space of m.
std::optional<Matrix> solve(const Matrix& m, const Matrix& b);

std::optional<Matrix> inverse(const Matrix& m);

/// Basis of the column space, taken from the pivot columns of m.
Matrix column_space(const Matrix& m);

/// Rows spanning {y : y^T u = 0}; an (rows(u) - rank u) x rows(u) matrix whose
/// kernel is exactly the column space of u.
Matrix left_annihilator(const Matrix& u);

/// Indices of the columns of `candidates` that extend the column space of
/// `base` greedily from left to right.
std::vector<int> extend_basis(const Matrix& base, const Matrix& candidates);

/// Incremental span membership over a fixed ambient dimension, used where
/// vectors arrive one at a time.
class SpanBuilder {
 public:
  explicit SpanBuilder(int ambient_dim) : dim_(ambient_dim), pivot_row_(ambient_dim, -1) {}

  int ambient_dim() const noexcept { return dim_; }
  int rank() const noexcept { return static_cast<int>(rows_.size()); }

  /// Reduces v against the stored echelon rows.
  Vec reduce(Vec v) const;
  bool contains(const Vec& v) const;
  /// Adds v; returns false if it was already in the span.
  bool add(const Vec& v);
  Matrix basis_rows() const { return Matrix::from_rows(dim_, rows_); }

 private:
  int dim_;
  std::vector<Vec> rows_;
  std::vector<int> pivots_;
  std::vector<int> pivot_row_;
};

bool is_zero(const Vec& v) noexcept;
Vec add(const Vec& a, const Vec& b);
Vec scaled(const Vec& a, Fp s);
void axpy(Vec& y, Fp a, const Vec& x);

}  // namespace silt
