#include "corings/linalg.hpp"

#include <algorithm>
#include <map>

#include "corings/error.hpp"

namespace corings {

namespace {

// Incremental Gauss-Jordan: pivot rows stay fully reduced against each other,
// so reducing an incoming row needs one pass over its pivot columns.
class EchelonBuilder {
 public:
  explicit EchelonBuilder(const Field& field) : field_(field) {}

  SparseRow reduce(SparseRow v) const {
    std::vector<std::pair<std::size_t, Scalar>> hits;
    for (const auto& e : v) {
      auto it = pivot_rows_.find(e.col);
      if (it != pivot_rows_.end()) hits.emplace_back(e.col, e.value);
    }
    for (const auto& [col, coef] : hits) {
      row_axpy(v, -coef, pivot_rows_.at(col), field_);
    }
    return v;
  }

  bool insert(SparseRow v) {
    v = reduce(std::move(v));
    if (v.empty()) return false;
    const std::size_t pivot = v.front().col;
    Scalar inv = field_.inverse(v.front().value);
    for (auto& e : v) {
      e.value *= inv;
      field_.reduce_in_place(e.value);
    }
    for (auto& [col, row] : pivot_rows_) {
      Scalar c = row_at(row, pivot);
      if (sgn(c) != 0) row_axpy(row, -c, v, field_);
    }
    pivot_rows_.emplace(pivot, std::move(v));
    return true;
  }

  Echelon finish(std::size_t cols) && {
    Echelon out{Mat(field_, pivot_rows_.size(), cols), {}};
    std::size_t r = 0;
    for (auto& [col, row] : pivot_rows_) {
      out.pivots.push_back(col);
      out.reduced.set_row(r++, std::move(row));
    }
    return out;
  }

 private:
  Field field_;
  std::map<std::size_t, SparseRow> pivot_rows_;
};

}  // namespace

Echelon rref(const Mat& m) {
  EchelonBuilder builder(m.field());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (!m.row(i).empty()) builder.insert(m.row(i));
  }
  return std::move(builder).finish(m.cols());
}

std::size_t rank(const Mat& m) { return rref(m).pivots.size(); }

Subspace::Subspace(Field field, std::size_t ambient_dim)
    : ambient_dim_(ambient_dim), basis_(field, 0, ambient_dim) {}

Subspace::Subspace(std::size_t ambient_dim, Echelon e)
    : ambient_dim_(ambient_dim), basis_(std::move(e.reduced)), pivots_(std::move(e.pivots)) {}

Subspace Subspace::span(const Mat& generators) {
  return Subspace(generators.cols(), rref(generators));
}

Subspace Subspace::full(Field field, std::size_t ambient_dim) {
  return span(Mat::identity(field, ambient_dim));
}

SparseRow Subspace::reduce(const SparseRow& v) const {
  SparseRow out = v;
  std::vector<std::pair<std::size_t, Scalar>> hits;
  for (std::size_t r = 0; r < pivots_.size(); ++r) {
    Scalar c = row_at(v, pivots_[r]);
    if (sgn(c) != 0) hits.emplace_back(r, c);
  }
  for (const auto& [r, c] : hits) row_axpy(out, -c, basis_.row(r), field());
  return out;
}

bool Subspace::contains(const SparseRow& v) const { return reduce(v).empty(); }

std::optional<std::size_t> Subspace::first_row_outside(const Mat& m) const {
  require_dims(m.cols() == ambient_dim_, "subspace membership: ambient dimension mismatch");
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (!contains(m.row(i))) return i;
  }
  return std::nullopt;
}

Subspace null_space(const Mat& m) {
  Echelon e = rref(m);
  const std::size_t n = m.cols();
  std::vector<char> is_pivot(n, 0);
  for (std::size_t p : e.pivots) is_pivot[p] = 1;
  std::vector<std::size_t> free_cols;
  for (std::size_t j = 0; j < n; ++j) {
    if (!is_pivot[j]) free_cols.push_back(j);
  }
  Mat gens(m.field(), free_cols.size(), n);
  for (std::size_t k = 0; k < free_cols.size(); ++k) {
    const std::size_t f = free_cols[k];
    gens.set(k, f, Scalar(1));
    for (std::size_t r = 0; r < e.pivots.size(); ++r) {
      Scalar c = e.reduced.at(r, f);
      if (sgn(c) != 0) gens.set(k, e.pivots[r], -c);
    }
  }
  return Subspace::span(gens);
}

Subspace map_kernel(const Mat& f) { return null_space(f.transpose()); }

Subspace image(const Mat& f) { return Subspace::span(f); }

QuotientSpace::QuotientSpace(std::size_t ambient_dim, Subspace relations)
    : ambient_dim_(ambient_dim),
      relations_(std::move(relations)),
      project_(relations_.field(), ambient_dim, 0),
      lift_(relations_.field(), 0, ambient_dim) {
  require_dims(relations_.ambient_dim() == ambient_dim,
               "quotient: relations live in k^" + std::to_string(relations_.ambient_dim()) +
                   ", ambient is k^" + std::to_string(ambient_dim));
  const Field field = relations_.field();
  const auto& pivots = relations_.pivots();
  std::vector<std::size_t> pivot_row(ambient_dim, ambient_dim);
  for (std::size_t r = 0; r < pivots.size(); ++r) pivot_row[pivots[r]] = r;
  std::vector<std::size_t> rep_index(ambient_dim, ambient_dim);
  for (std::size_t j = 0; j < ambient_dim; ++j) {
    if (pivot_row[j] == ambient_dim) {
      rep_index[j] = rep_columns_.size();
      rep_columns_.push_back(j);
    }
  }
  project_ = Mat(field, ambient_dim, rep_columns_.size());
  lift_ = Mat(field, rep_columns_.size(), ambient_dim);
  for (std::size_t j = 0; j < ambient_dim; ++j) {
    if (pivot_row[j] == ambient_dim) {
      project_.set_row(j, SparseRow{{rep_index[j], Scalar(1)}});
      continue;
    }
    // e_j = basis_r - (rest of basis_r); the rest lives on rep columns only.
    SparseRow row;
    for (const auto& e : relations_.basis().row(pivot_row[j])) {
      if (e.col == j) continue;
      Scalar v = -e.value;
      field.reduce_in_place(v);
      row.push_back({rep_index[e.col], std::move(v)});
    }
    project_.set_row(j, std::move(row));
  }
  for (std::size_t q = 0; q < rep_columns_.size(); ++q) {
    lift_.set_row(q, SparseRow{{rep_columns_[q], Scalar(1)}});
  }
}

std::optional<Mat> solve_left(const Mat& a, const Mat& b) {
  require_same_field(a.field(), b.field(), "solve_left");
  require_dims(a.cols() == b.cols(), "solve_left: column mismatch");
  const Field& field = a.field();
  const std::size_t n = a.cols();
  const std::size_t r = a.rows();
  // [a | I] reduced; rows whose pivot is < n carry their combination in the tail.
  Mat aug(field, r, n + r);
  for (std::size_t i = 0; i < r; ++i) {
    SparseRow row = a.row(i);
    row.push_back({n + i, Scalar(1)});
    aug.set_row(i, std::move(row));
  }
  Echelon e = rref(aug);
  std::vector<std::size_t> used;
  for (std::size_t k = 0; k < e.pivots.size(); ++k) {
    if (e.pivots[k] < n) used.push_back(k);
  }
  Mat x(field, b.rows(), r);
  for (std::size_t i = 0; i < b.rows(); ++i) {
    SparseRow residual = b.row(i);
    SparseRow combo;
    for (std::size_t k : used) {
      Scalar c = row_at(residual, e.pivots[k]);
      if (sgn(c) == 0) continue;
      const SparseRow& full = e.reduced.row(k);
      SparseRow head, tail;
      for (const auto& en : full) {
        if (en.col < n) {
          head.push_back(en);
        } else {
          tail.push_back({en.col - n, en.value});
        }
      }
      row_axpy(residual, -c, head, field);
      row_axpy(combo, c, tail, field);
    }
    if (!residual.empty()) return std::nullopt;
    x.set_row(i, std::move(combo));
  }
  return x;
}

bool is_invertible(const Mat& m) { return m.is_square() && rank(m) == m.rows(); }

Mat inverse(const Mat& m) {
  if (!m.is_square()) {
    throw Error(ErrorKind::kIsoFailure, "non-square " + std::to_string(m.rows()) + "x" +
                                            std::to_string(m.cols()) + " matrix has no inverse");
  }
  auto x = solve_left(m, Mat::identity(m.field(), m.rows()));
  if (!x || !(*x * m == Mat::identity(m.field(), m.rows()))) {
    throw Error(ErrorKind::kIsoFailure, "matrix is singular");
  }
  return *x;
}

}  // namespace corings
