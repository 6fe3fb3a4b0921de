#include "corings/algebra.hpp"

#include "corings/error.hpp"

namespace corings {

Algebra::Algebra(Field field, std::vector<std::vector<Mat>> products, Mat unit,
                 std::vector<std::string> labels, std::string name)
    : field_(field),
      dim_(products.size()),
      products_(std::move(products)),
      unit_(std::move(unit)),
      labels_(std::move(labels)),
      name_(std::move(name)) {
  require_dims(unit_.rows() == 1 && unit_.cols() == dim_, "algebra unit must be 1 x dim");
  require_same_field(field_, unit_.field(), "algebra unit");
  for (std::size_t i = 0; i < dim_; ++i) {
    require_dims(products_[i].size() == dim_, "structure constants must be dim x dim rows");
    for (std::size_t j = 0; j < dim_; ++j) {
      const Mat& p = products_[i][j];
      require_same_field(field_, p.field(), "structure constants");
      require_dims(p.rows() == 1 && p.cols() == dim_, "structure constant row has wrong length");
    }
  }
  if (labels_.empty()) labels_ = default_labels("a", dim_);
  require_dims(labels_.size() == dim_, "algebra labels");
  for (std::size_t i = 0; i < dim_; ++i) {
    Mat l(field_, dim_, dim_);
    Mat r(field_, dim_, dim_);
    for (std::size_t j = 0; j < dim_; ++j) {
      l.set_row(j, products_[i][j].row(0));
      r.set_row(j, products_[j][i].row(0));
    }
    left_mult_.push_back(std::move(l));
    right_mult_.push_back(std::move(r));
  }
}

Mat Algebra::multiply(const Mat& x, const Mat& y) const {
  require_dims(x.rows() == 1 && x.cols() == dim_ && y.rows() == 1 && y.cols() == dim_,
               "algebra multiply expects 1 x dim rows");
  // x * y = sum_i x_i (a_i * y) = sum_i x_i (y * L_i)
  Mat out(field_, 1, dim_);
  for (const auto& e : x.row(0)) {
    Mat term = (y * left_mult_[e.col]).scaled(e.value);
    out = out + term;
  }
  return out;
}

bool same_algebra(const Algebra& a, const Algebra& b) {
  if (&a == &b) return true;
  if (!(a.field() == b.field()) || a.dim() != b.dim() || !(a.unit() == b.unit())) return false;
  for (std::size_t i = 0; i < a.dim(); ++i) {
    if (!(a.left_mult(i) == b.left_mult(i))) return false;
  }
  return true;
}

Verdict check_algebra(const Algebra& a) {
  const std::size_t n = a.dim();
  const auto& labels = a.labels();
  return CheckSequence()
      .then("associativity",
            [&](Condition& c) {
              for (std::size_t i = 0; i < n; ++i) {
                for (std::size_t j = 0; j < n; ++j) {
                  for (std::size_t t = 0; t < n; ++t) {
                    Mat lhs = a.product(i, j) * a.right_mult(t);
                    Mat rhs = a.product(j, t) * a.left_mult(i);
                    if (!(lhs == rhs)) {
                      c.status = Condition::Status::kFail;
                      c.witness = "(" + labels[i] + "," + labels[j] + "," + labels[t] + ")";
                      c.detail = "(a_i a_j) a_t=" + format_row(lhs, 0) +
                                 " a_i (a_j a_t)=" + format_row(rhs, 0);
                      return;
                    }
                  }
                }
              }
            })
      .then("unit",
            [&](Condition& c) {
              for (std::size_t i = 0; i < n; ++i) {
                Mat e = Mat::unit_row(a.field(), n, i);
                Mat left = a.unit() * a.right_mult(i);  // u * a_i
                Mat right = a.unit() * a.left_mult(i);  // a_i * u
                if (!(left == e) || !(right == e)) {
                  c.status = Condition::Status::kFail;
                  c.witness = labels[i];
                  c.detail = "u*a_i=" + format_row(left, 0) + " a_i*u=" + format_row(right, 0);
                  return;
                }
              }
            })
      .done();
}

namespace {

std::vector<std::string> pair_labels(const std::vector<std::string>& a,
                                     const std::vector<std::string>& b) {
  std::vector<std::string> out;
  out.reserve(a.size() * b.size());
  for (const auto& x : a) {
    for (const auto& y : b) out.push_back(x + "⊗" + y);
  }
  return out;
}

}  // namespace

AlgebraPtr tensor_algebra(const AlgebraPtr& a, const AlgebraPtr& a2) {
  require_same_field(a->field(), a2->field(), "tensor_algebra");
  const std::size_t n = a->dim(), n2 = a2->dim();
  std::vector<std::vector<Mat>> products(n * n2);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t i2 = 0; i2 < n2; ++i2) {
      auto& row = products[i * n2 + i2];
      row.reserve(n * n2);
      for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t j2 = 0; j2 < n2; ++j2) {
          row.push_back(kron(a->product(i, j), a2->product(i2, j2)));
        }
      }
    }
  }
  std::string name;
  if (!a->name().empty() && !a2->name().empty()) name = a->name() + "⊗" + a2->name();
  return std::make_shared<const Algebra>(a->field(), std::move(products),
                                         kron(a->unit(), a2->unit()),
                                         pair_labels(a->labels(), a2->labels()), std::move(name));
}

AlgebraPtr ground_algebra(Field field) {
  std::vector<std::vector<Mat>> products{{Mat::unit_row(field, 1, 0)}};
  return std::make_shared<const Algebra>(field, std::move(products), Mat::unit_row(field, 1, 0),
                                         std::vector<std::string>{"1"}, "k");
}

AlgebraPtr dual_numbers(Field field) {
  Mat one = Mat::unit_row(field, 2, 0);
  Mat x = Mat::unit_row(field, 2, 1);
  Mat zero(field, 1, 2);
  std::vector<std::vector<Mat>> products{{one, x}, {x, zero}};
  return std::make_shared<const Algebra>(field, std::move(products), one,
                                         std::vector<std::string>{"1", "x"}, "k[x]/(x^2)");
}

AlgebraPtr group_algebra(const std::vector<std::vector<std::size_t>>& table, Field field,
                         std::string name) {
  const std::size_t n = table.size();
  std::vector<std::vector<Mat>> products(n);
  for (std::size_t i = 0; i < n; ++i) {
    require_dims(table[i].size() == n, "group table must be square");
    for (std::size_t j = 0; j < n; ++j) {
      require_dims(table[i][j] < n, "group table entry out of range");
      products[i].push_back(Mat::unit_row(field, n, table[i][j]));
    }
  }
  return std::make_shared<const Algebra>(field, std::move(products), Mat::unit_row(field, n, 0),
                                         default_labels("g", n), std::move(name));
}

AlgebraPtr matrix_algebra(std::size_t n, Field field) {
  const std::size_t d = n * n;
  std::vector<std::vector<Mat>> products(d);
  std::vector<std::string> labels;
  Mat unit(field, 1, d);
  for (std::size_t i = 0; i < n; ++i) {
    unit.set(0, i * n + i, Scalar(1));
    for (std::size_t j = 0; j < n; ++j) {
      labels.push_back("E_" + std::to_string(i + 1) + std::to_string(j + 1));
      for (std::size_t k = 0; k < n; ++k) {
        for (std::size_t l = 0; l < n; ++l) {
          Mat p(field, 1, d);
          if (j == k) p.set(0, i * n + l, Scalar(1));
          products[i * n + j].push_back(std::move(p));
        }
      }
    }
  }
  return std::make_shared<const Algebra>(field, std::move(products), std::move(unit),
                                         std::move(labels), "M_" + std::to_string(n));
}

Verdict check_algebra_morphism(const AlgebraMorphism& f) {
  require_same_field(f.source->field(), f.target->field(), "algebra morphism");
  require_same_field(f.source->field(), f.map.field(), "algebra morphism map");
  require_dims(f.map.rows() == f.source->dim() && f.map.cols() == f.target->dim(),
               "algebra morphism matrix is " + std::to_string(f.map.rows()) + "x" +
                   std::to_string(f.map.cols()) + ", expected " +
                   std::to_string(f.source->dim()) + "x" + std::to_string(f.target->dim()));
  const Algebra& a = *f.source;
  const Algebra& b = *f.target;
  const auto& labels = a.labels();
  return CheckSequence()
      .then("unit",
            [&](Condition& c) {
              Mat image = a.unit() * f.map;
              if (!(image == b.unit())) {
                c.status = Condition::Status::kFail;
                c.witness = "1";
                c.detail = "f(1)=" + format_row(image, 0) + " 1=" + format_row(b.unit(), 0);
              }
            })
      .then("multiplicativity",
            [&](Condition& c) {
              for (std::size_t i = 0; i < a.dim(); ++i) {
                Mat fi = f.map.row_mat(i);
                for (std::size_t j = 0; j < a.dim(); ++j) {
                  Mat lhs = a.product(i, j) * f.map;
                  Mat rhs = b.multiply(fi, f.map.row_mat(j));
                  if (!(lhs == rhs)) {
                    c.status = Condition::Status::kFail;
                    c.witness = "(" + labels[i] + "," + labels[j] + ")";
                    c.detail = "f(a_i a_j)=" + format_row(lhs, 0) +
                               " f(a_i)f(a_j)=" + format_row(rhs, 0);
                    return;
                  }
                }
              }
            })
      .done();
}

AlgebraMorphism identity_morphism(const AlgebraPtr& a) {
  return {a, a, Mat::identity(a->field(), a->dim())};
}

AlgebraMorphism compose(const AlgebraMorphism& g, const AlgebraMorphism& f) {
  if (!same_algebra(f.target, g.source)) {
    throw Error(ErrorKind::kObjectMismatch, "algebra morphisms are not composable");
  }
  return {f.source, g.target, f.map * g.map};
}

AlgebraMorphism tensor_morphisms(const AlgebraMorphism& f, const AlgebraMorphism& f2) {
  return {tensor_algebra(f.source, f2.source), tensor_algebra(f.target, f2.target),
          kron(f.map, f2.map)};
}

AlgebraMorphism unit_morphism(const AlgebraPtr& a) {
  return {ground_algebra(a->field()), a, a->unit()};
}

}  // namespace corings
