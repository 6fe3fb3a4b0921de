#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "corings/matrix.hpp"

namespace corings {

struct Echelon {
  Mat reduced;                      // nonzero rows only, RREF
  std::vector<std::size_t> pivots;  // strictly increasing
};

/// Reduced row echelon form of the row space of m.
Echelon rref(const Mat& m);
std::size_t rank(const Mat& m);

/// A subspace of k^n, held as an RREF basis.
class Subspace {
 public:
  /// The zero subspace of k^n.
  Subspace(Field field, std::size_t ambient_dim);
  /// Row space of the generators.
  static Subspace span(const Mat& generators);
  static Subspace full(Field field, std::size_t ambient_dim);

  std::size_t ambient_dim() const noexcept { return ambient_dim_; }
  std::size_t dim() const noexcept { return pivots_.size(); }
  const Mat& basis() const noexcept { return basis_; }
  const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }
  const Field& field() const noexcept { return basis_.field(); }

  /// Remainder of row i of v after clearing every pivot column.
  SparseRow reduce(const SparseRow& v) const;
  bool contains(const SparseRow& v) const;
  /// First row of m not in the subspace, if any.
  std::optional<std::size_t> first_row_outside(const Mat& m) const;
  bool contains_rows(const Mat& m) const { return !first_row_outside(m).has_value(); }

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_dim_ == b.ambient_dim_ && a.basis_ == b.basis_;
  }

 private:
  Subspace(std::size_t ambient_dim, Echelon e);

  std::size_t ambient_dim_;
  Mat basis_;
  std::vector<std::size_t> pivots_;
};

/// {v : v * m^T = 0}, the vectors orthogonal to every row of m.
Subspace null_space(const Mat& m);
/// {v : v * f = 0} for a map f stored in the row-vector convention.
Subspace map_kernel(const Mat& f);
Subspace image(const Mat& f);

/// k^n / relations, with the non-pivot coordinates of the relation basis as
/// quotient basis (increasing order).
class QuotientSpace {
 public:
  QuotientSpace(std::size_t ambient_dim, Subspace relations);

  std::size_t ambient_dim() const noexcept { return ambient_dim_; }
  std::size_t dim() const noexcept { return rep_columns_.size(); }
  const Subspace& relations() const noexcept { return relations_; }
  const std::vector<std::size_t>& rep_columns() const noexcept { return rep_columns_; }
  /// ambient_dim x dim
  const Mat& project() const noexcept { return project_; }
  /// dim x ambient_dim
  const Mat& lift() const noexcept { return lift_; }

 private:
  std::size_t ambient_dim_;
  Subspace relations_;
  std::vector<std::size_t> rep_columns_;
  Mat project_;
  Mat lift_;
};

/// X with X * a = b, when every row of b lies in the row space of a.
std::optional<Mat> solve_left(const Mat& a, const Mat& b);
/// Throws Error(kIsoFailure) when m is not invertible.
Mat inverse(const Mat& m);
bool is_invertible(const Mat& m);

}  // namespace corings
