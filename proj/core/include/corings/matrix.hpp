#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "corings/field.hpp"

namespace corings {

struct Entry {
  std::size_t col;
  Scalar value;
};

/// Sorted by column, no explicit zeros.
using SparseRow = std::vector<Entry>;

/// A matrix over a Field, stored row-sparse.
///
/// Maps act on row vectors: the matrix of f : V -> W has dim V rows and
/// dim W columns, row i being f(e_i). Composition "g after f" is f * g.
/// Kronecker products use row-major pair indexing (i, j) -> i * n + j.
class Mat {
 public:
  Mat(Field field, std::size_t rows, std::size_t cols);

  static Mat identity(Field field, std::size_t n);
  static Mat from_dense(Field field, const std::vector<std::vector<Scalar>>& rows,
                        std::size_t cols);
  static Mat row_vector(Field field, std::span<const Scalar> values);
  static Mat unit_row(Field field, std::size_t n, std::size_t index);

  const Field& field() const noexcept { return field_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  std::size_t nnz() const;

  Scalar at(std::size_t i, std::size_t j) const;
  const SparseRow& row(std::size_t i) const { return data_[i]; }
  Mat row_mat(std::size_t i) const;

  void set(std::size_t i, std::size_t j, const Scalar& value);
  void add_to(std::size_t i, std::size_t j, const Scalar& value);
  /// Row must be sorted, reduced and zero-free.
  void set_row(std::size_t i, SparseRow row);

  bool is_zero() const;
  bool is_square() const noexcept { return rows_ == cols_; }

  Mat transpose() const;
  Mat scaled(const Scalar& s) const;
  Mat select_rows(std::span<const std::size_t> indices) const;
  Mat select_cols(std::span<const std::size_t> indices) const;
  std::vector<std::vector<Scalar>> dense() const;

  Mat operator+(const Mat& other) const;
  Mat operator-(const Mat& other) const;
  Mat operator-() const;
  Mat operator*(const Mat& other) const;

  friend bool operator==(const Mat& a, const Mat& b);

 private:
  Field field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<SparseRow> data_;
};

Mat kron(const Mat& a, const Mat& b);
Mat vstack(std::span<const Mat> blocks);
/// Sum of coeffs[t] * mats[t]; coeffs is a 1 x mats.size() row.
Mat linear_combination(const Mat& coeffs, std::span<const Mat> mats);
/// Permutation matrix sending e_i to e_{target[i]}.
Mat permutation(Field field, std::span<const std::size_t> target);

/// y += a * x, all rows over field.
void row_axpy(SparseRow& y, const Scalar& a, const SparseRow& x, const Field& field);
Scalar row_at(const SparseRow& row, std::size_t col);

std::string format_row(const Mat& m, std::size_t i);
std::string format_matrix(const Mat& m);

void require_same_field(const Field& a, const Field& b, const char* where);
void require_dims(bool ok, const std::string& what);

}  // namespace corings
