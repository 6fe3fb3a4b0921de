#pragma once

#include <memory>
#include <string>
#include <vector>

#include "corings/matrix.hpp"
#include "corings/verdict.hpp"

namespace corings {

/// A finite-dimensional unital associative algebra given by structure
/// constants: a_i * a_j = sum_t mul[i][j][t] a_t.
class Algebra {
 public:
  /// products[i][j] is the 1 x dim row of a_i * a_j; unit is 1 x dim.
  Algebra(Field field, std::vector<std::vector<Mat>> products, Mat unit,
          std::vector<std::string> labels = {}, std::string name = {});

  const Field& field() const noexcept { return field_; }
  std::size_t dim() const noexcept { return dim_; }
  const Mat& unit() const noexcept { return unit_; }
  const std::string& name() const noexcept { return name_; }
  const std::vector<std::string>& labels() const noexcept { return labels_; }

  /// Row of a_i * a_j.
  const Mat& product(std::size_t i, std::size_t j) const { return products_.at(i).at(j); }
  /// Left multiplication by a_i: row j is a_i * a_j.
  const Mat& left_mult(std::size_t i) const { return left_mult_.at(i); }
  /// Right multiplication by a_j: row i is a_i * a_j.
  const Mat& right_mult(std::size_t j) const { return right_mult_.at(j); }
  const std::vector<Mat>& left_mults() const noexcept { return left_mult_; }
  const std::vector<Mat>& right_mults() const noexcept { return right_mult_; }

  /// Product of two 1 x dim rows.
  Mat multiply(const Mat& x, const Mat& y) const;

 private:
  Field field_;
  std::size_t dim_;
  std::vector<std::vector<Mat>> products_;
  Mat unit_;
  std::vector<Mat> left_mult_;
  std::vector<Mat> right_mult_;
  std::vector<std::string> labels_;
  std::string name_;
};

using AlgebraPtr = std::shared_ptr<const Algebra>;

/// Same field, dimension, unit and structure constants.
bool same_algebra(const Algebra& a, const Algebra& b);
inline bool same_algebra(const AlgebraPtr& a, const AlgebraPtr& b) {
  return a == b || same_algebra(*a, *b);
}

/// Associativity on all basis triples, then the unit law on all basis vectors.
Verdict check_algebra(const Algebra& a);

/// Row-major basis (i, i') -> i * a2.dim() + i', product computed factorwise.
AlgebraPtr tensor_algebra(const AlgebraPtr& a, const AlgebraPtr& a2);

AlgebraPtr ground_algebra(Field field);
/// k[x]/(x^2) with basis {1, x}.
AlgebraPtr dual_numbers(Field field);
/// Group algebra from a multiplication table over {0..n-1}; 0 must be the identity.
AlgebraPtr group_algebra(const std::vector<std::vector<std::size_t>>& table, Field field,
                         std::string name = {});
/// n x n matrix algebra with basis E_ij at index i * n + j.
AlgebraPtr matrix_algebra(std::size_t n, Field field);

struct AlgebraMorphism {
  AlgebraPtr source;
  AlgebraPtr target;
  Mat map;  // source.dim x target.dim
};

/// Throws Error(kDimensionMismatch) on shape errors, kFieldMismatch on fields.
Verdict check_algebra_morphism(const AlgebraMorphism& f);
AlgebraMorphism identity_morphism(const AlgebraPtr& a);
AlgebraMorphism compose(const AlgebraMorphism& g, const AlgebraMorphism& f);
AlgebraMorphism tensor_morphisms(const AlgebraMorphism& f, const AlgebraMorphism& f2);
/// The unit map k -> A.
AlgebraMorphism unit_morphism(const AlgebraPtr& a);

}  // namespace corings
