#include "corings/matrix.hpp"

#include <algorithm>
#include <sstream>

#include "corings/error.hpp"

namespace corings {

void require_same_field(const Field& a, const Field& b, const char* where) {
  if (!(a == b)) {
    throw Error(ErrorKind::kFieldMismatch,
                std::string(where) + ": " + a.name() + " vs " + b.name());
  }
}

void require_dims(bool ok, const std::string& what) {
  if (!ok) throw Error(ErrorKind::kDimensionMismatch, what);
}

Mat::Mat(Field field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols), data_(rows) {}

Mat Mat::identity(Field field, std::size_t n) {
  Mat m(field, n, n);
  for (std::size_t i = 0; i < n; ++i) m.data_[i].push_back({i, Scalar(1)});
  return m;
}

Mat Mat::from_dense(Field field, const std::vector<std::vector<Scalar>>& rows, std::size_t cols) {
  Mat m(field, rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    require_dims(rows[i].size() == cols, "dense row " + std::to_string(i) + " has " +
                                             std::to_string(rows[i].size()) + " entries, expected " +
                                             std::to_string(cols));
    for (std::size_t j = 0; j < cols; ++j) {
      Scalar v = field.reduce(rows[i][j]);
      if (sgn(v) != 0) m.data_[i].push_back({j, std::move(v)});
    }
  }
  return m;
}

Mat Mat::row_vector(Field field, std::span<const Scalar> values) {
  Mat m(field, 1, values.size());
  for (std::size_t j = 0; j < values.size(); ++j) {
    Scalar v = field.reduce(values[j]);
    if (sgn(v) != 0) m.data_[0].push_back({j, std::move(v)});
  }
  return m;
}

Mat Mat::unit_row(Field field, std::size_t n, std::size_t index) {
  Mat m(field, 1, n);
  m.data_[0].push_back({index, Scalar(1)});
  return m;
}

std::size_t Mat::nnz() const {
  std::size_t n = 0;
  for (const auto& r : data_) n += r.size();
  return n;
}

Scalar row_at(const SparseRow& row, std::size_t col) {
  auto it = std::lower_bound(row.begin(), row.end(), col,
                             [](const Entry& e, std::size_t c) { return e.col < c; });
  if (it != row.end() && it->col == col) return it->value;
  return Scalar(0);
}

Scalar Mat::at(std::size_t i, std::size_t j) const { return row_at(data_.at(i), j); }

Mat Mat::row_mat(std::size_t i) const {
  Mat m(field_, 1, cols_);
  m.data_[0] = data_.at(i);
  return m;
}

void Mat::set(std::size_t i, std::size_t j, const Scalar& value) {
  require_dims(i < rows_ && j < cols_, "Mat::set index out of range");
  Scalar v = field_.reduce(value);
  auto& row = data_[i];
  auto it = std::lower_bound(row.begin(), row.end(), j,
                             [](const Entry& e, std::size_t c) { return e.col < c; });
  if (it != row.end() && it->col == j) {
    if (sgn(v) == 0) {
      row.erase(it);
    } else {
      it->value = std::move(v);
    }
  } else if (sgn(v) != 0) {
    row.insert(it, Entry{j, std::move(v)});
  }
}

void Mat::add_to(std::size_t i, std::size_t j, const Scalar& value) {
  set(i, j, at(i, j) + value);
}

void Mat::set_row(std::size_t i, SparseRow row) { data_.at(i) = std::move(row); }

bool Mat::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const SparseRow& r) { return r.empty(); });
}

Mat Mat::transpose() const {
  Mat t(field_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (const auto& e : data_[i]) t.data_[e.col].push_back({i, e.value});
  }
  return t;
}

Mat Mat::scaled(const Scalar& s) const {
  Mat out(field_, rows_, cols_);
  Scalar f = field_.reduce(s);
  if (sgn(f) == 0) return out;
  for (std::size_t i = 0; i < rows_; ++i) {
    for (const auto& e : data_[i]) {
      Scalar v = e.value * f;
      field_.reduce_in_place(v);
      out.data_[i].push_back({e.col, std::move(v)});
    }
  }
  return out;
}

Mat Mat::select_rows(std::span<const std::size_t> indices) const {
  Mat out(field_, indices.size(), cols_);
  for (std::size_t k = 0; k < indices.size(); ++k) out.data_[k] = data_.at(indices[k]);
  return out;
}

Mat Mat::select_cols(std::span<const std::size_t> indices) const {
  std::vector<std::size_t> position(cols_, cols_);
  for (std::size_t k = 0; k < indices.size(); ++k) position.at(indices[k]) = k;
  Mat out(field_, rows_, indices.size());
  for (std::size_t i = 0; i < rows_; ++i) {
    for (const auto& e : data_[i]) {
      if (position[e.col] != cols_) out.data_[i].push_back({position[e.col], e.value});
    }
    std::sort(out.data_[i].begin(), out.data_[i].end(),
              [](const Entry& a, const Entry& b) { return a.col < b.col; });
  }
  return out;
}

std::vector<std::vector<Scalar>> Mat::dense() const {
  std::vector<std::vector<Scalar>> out(rows_, std::vector<Scalar>(cols_));
  for (std::size_t i = 0; i < rows_; ++i) {
    for (const auto& e : data_[i]) out[i][e.col] = e.value;
  }
  return out;
}

void row_axpy(SparseRow& y, const Scalar& a, const SparseRow& x, const Field& field) {
  if (sgn(a) == 0 || x.empty()) return;
  SparseRow out;
  out.reserve(y.size() + x.size());
  auto yi = y.begin();
  auto xi = x.begin();
  Scalar tmp;
  while (yi != y.end() || xi != x.end()) {
    if (xi == x.end() || (yi != y.end() && yi->col < xi->col)) {
      out.push_back(std::move(*yi));
      ++yi;
    } else if (yi == y.end() || xi->col < yi->col) {
      tmp = a * xi->value;
      field.reduce_in_place(tmp);
      if (sgn(tmp) != 0) out.push_back({xi->col, tmp});
      ++xi;
    } else {
      tmp = yi->value + a * xi->value;
      field.reduce_in_place(tmp);
      if (sgn(tmp) != 0) out.push_back({xi->col, tmp});
      ++xi;
      ++yi;
    }
  }
  y = std::move(out);
}

Mat Mat::operator+(const Mat& other) const {
  require_same_field(field_, other.field_, "Mat::operator+");
  require_dims(rows_ == other.rows_ && cols_ == other.cols_, "Mat::operator+ shape mismatch");
  Mat out = *this;
  const Scalar one(1);
  for (std::size_t i = 0; i < rows_; ++i) row_axpy(out.data_[i], one, other.data_[i], field_);
  return out;
}

Mat Mat::operator-(const Mat& other) const {
  require_same_field(field_, other.field_, "Mat::operator-");
  require_dims(rows_ == other.rows_ && cols_ == other.cols_, "Mat::operator- shape mismatch");
  Mat out = *this;
  const Scalar minus_one(-1);
  for (std::size_t i = 0; i < rows_; ++i) row_axpy(out.data_[i], minus_one, other.data_[i], field_);
  return out;
}

Mat Mat::operator-() const { return scaled(Scalar(-1)); }

Mat Mat::operator*(const Mat& other) const {
  require_same_field(field_, other.field_, "Mat::operator*");
  require_dims(cols_ == other.rows_, "Mat::operator* inner dimension " + std::to_string(cols_) +
                                         " vs " + std::to_string(other.rows_));
  Mat out(field_, rows_, other.cols_);
  std::vector<Scalar> acc(other.cols_);
  std::vector<char> used(other.cols_, 0);
  std::vector<std::size_t> touched;
  Scalar prod;
  for (std::size_t i = 0; i < rows_; ++i) {
    touched.clear();
    for (const auto& e : data_[i]) {
      for (const auto& f : other.data_[e.col]) {
        mpq_mul(prod.get_mpq_t(), e.value.get_mpq_t(), f.value.get_mpq_t());
        if (!used[f.col]) {
          used[f.col] = 1;
          touched.push_back(f.col);
          acc[f.col] = prod;
        } else {
          acc[f.col] += prod;
        }
      }
    }
    std::sort(touched.begin(), touched.end());
    auto& row = out.data_[i];
    for (std::size_t j : touched) {
      used[j] = 0;
      field_.reduce_in_place(acc[j]);
      if (sgn(acc[j]) != 0) row.push_back({j, acc[j]});
    }
  }
  return out;
}

bool operator==(const Mat& a, const Mat& b) {
  if (!(a.field_ == b.field_) || a.rows_ != b.rows_ || a.cols_ != b.cols_) return false;
  for (std::size_t i = 0; i < a.rows_; ++i) {
    const auto& ra = a.data_[i];
    const auto& rb = b.data_[i];
    if (ra.size() != rb.size()) return false;
    for (std::size_t k = 0; k < ra.size(); ++k) {
      if (ra[k].col != rb[k].col || ra[k].value != rb[k].value) return false;
    }
  }
  return true;
}

Mat kron(const Mat& a, const Mat& b) {
  require_same_field(a.field(), b.field(), "kron");
  const Field& field = a.field();
  Mat out(field, a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < b.rows(); ++k) {
      SparseRow row;
      row.reserve(a.row(i).size() * b.row(k).size());
      for (const auto& ea : a.row(i)) {
        for (const auto& eb : b.row(k)) {
          Scalar v = ea.value * eb.value;
          field.reduce_in_place(v);
          row.push_back({ea.col * b.cols() + eb.col, std::move(v)});
        }
      }
      out.set_row(i * b.rows() + k, std::move(row));
    }
  }
  return out;
}

Mat vstack(std::span<const Mat> blocks) {
  require_dims(!blocks.empty(), "vstack of nothing");
  std::size_t rows = 0;
  for (const auto& b : blocks) {
    require_same_field(blocks[0].field(), b.field(), "vstack");
    require_dims(b.cols() == blocks[0].cols(), "vstack column mismatch");
    rows += b.rows();
  }
  Mat out(blocks[0].field(), rows, blocks[0].cols());
  std::size_t r = 0;
  for (const auto& b : blocks) {
    for (std::size_t i = 0; i < b.rows(); ++i) out.set_row(r++, b.row(i));
  }
  return out;
}

Mat linear_combination(const Mat& coeffs, std::span<const Mat> mats) {
  require_dims(coeffs.rows() == 1 && coeffs.cols() == mats.size(),
               "linear_combination: coefficient row has wrong length");
  require_dims(!mats.empty(), "linear_combination of nothing");
  const Field& field = coeffs.field();
  Mat out(field, mats[0].rows(), mats[0].cols());
  for (const auto& e : coeffs.row(0)) {
    const Mat& m = mats[e.col];
    SparseRow tmp;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      tmp = out.row(i);
      row_axpy(tmp, e.value, m.row(i), field);
      out.set_row(i, std::move(tmp));
    }
  }
  return out;
}

Mat permutation(Field field, std::span<const std::size_t> target) {
  Mat p(field, target.size(), target.size());
  for (std::size_t i = 0; i < target.size(); ++i) p.set_row(i, SparseRow{{target[i], Scalar(1)}});
  return p;
}

std::string format_row(const Mat& m, std::size_t i) {
  std::ostringstream out;
  out << '[';
  for (std::size_t j = 0; j < m.cols(); ++j) {
    if (j) out << ',';
    out << m.field().format(m.at(i, j));
  }
  out << ']';
  return out.str();
}

std::string format_matrix(const Mat& m) {
  std::ostringstream out;
  out << '[';
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (i) out << ',';
    out << format_row(m, i);
  }
  out << ']';
  return out.str();
}

}  // namespace corings
