#include "corings/bimodule.hpp"

#include <algorithm>

#include "corings/error.hpp"

namespace corings {

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

SparseRow merge_row(std::vector<Entry> entries, const Field& field) {
  std::sort(entries.begin(), entries.end(),
            [](const Entry& a, const Entry& b) { return a.col < b.col; });
  SparseRow out;
  for (auto& e : entries) {
    if (!out.empty() && out.back().col == e.col) {
      out.back().value += e.value;
    } else {
      out.push_back(std::move(e));
    }
  }
  SparseRow cleaned;
  for (auto& e : out) {
    field.reduce_in_place(e.value);
    if (sgn(e.value) != 0) cleaned.push_back(std::move(e));
  }
  return cleaned;
}

// Marks c failed if any of the actions differs as a matrix.
bool compare_action(Condition& c, const Mat& lhs, const Mat& rhs,
                    const std::vector<std::string>& row_labels, const std::string& context) {
  return compare_rows(c, lhs, rhs, row_labels, context);
}

}  // namespace

Bimodule make_bimodule(AlgebraPtr left, AlgebraPtr right, std::vector<Mat> left_action,
                       std::vector<Mat> right_action, std::vector<std::string> labels) {
  require_same_field(left->field(), right->field(), "bimodule algebras");
  require_dims(left_action.size() == left->dim(),
               "bimodule needs one left action matrix per basis element of the left algebra");
  require_dims(right_action.size() == right->dim(),
               "bimodule needs one right action matrix per basis element of the right algebra");
  std::size_t dim = left_action.empty() ? (right_action.empty() ? 0 : right_action[0].rows())
                                        : left_action[0].rows();
  for (const auto* group : {&left_action, &right_action}) {
    for (const Mat& a : *group) {
      require_same_field(left->field(), a.field(), "bimodule action");
      require_dims(a.rows() == dim && a.cols() == dim,
                   "bimodule action matrices must all be " + std::to_string(dim) + "x" +
                       std::to_string(dim));
    }
  }
  if (labels.empty()) labels = default_labels("m", dim);
  require_dims(labels.size() == dim, "bimodule labels");
  return Bimodule{std::move(left), std::move(right), dim, std::move(left_action),
                  std::move(right_action), std::move(labels)};
}

Verdict check_bimodule(const Bimodule& m) {
  const Field field = m.field();
  const Algebra& a = *m.left;
  const Algebra& b = *m.right;
  const Mat id = Mat::identity(field, m.dim);
  return CheckSequence()
      .then("left_unit",
            [&](Condition& c) { compare_action(c, m.left_by(a.unit()), id, m.labels, "1.m"); })
      .then("left_action",
            [&](Condition& c) {
              for (std::size_t i = 0; i < a.dim(); ++i) {
                for (std::size_t j = 0; j < a.dim(); ++j) {
                  // a_i (a_j m) = (a_i a_j) m
                  Mat lhs = m.left_action[j] * m.left_action[i];
                  Mat rhs = m.left_by(a.product(i, j));
                  if (!compare_action(c, lhs, rhs, m.labels,
                                      "(" + a.labels()[i] + "," + a.labels()[j] + ")")) {
                    return;
                  }
                }
              }
            })
      .then("right_unit",
            [&](Condition& c) { compare_action(c, m.right_by(b.unit()), id, m.labels, "m.1"); })
      .then("right_action",
            [&](Condition& c) {
              for (std::size_t i = 0; i < b.dim(); ++i) {
                for (std::size_t j = 0; j < b.dim(); ++j) {
                  Mat lhs = m.right_action[i] * m.right_action[j];
                  Mat rhs = m.right_by(b.product(i, j));
                  if (!compare_action(c, lhs, rhs, m.labels,
                                      "(" + b.labels()[i] + "," + b.labels()[j] + ")")) {
                    return;
                  }
                }
              }
            })
      .then("actions_commute",
            [&](Condition& c) {
              for (std::size_t i = 0; i < a.dim(); ++i) {
                for (std::size_t j = 0; j < b.dim(); ++j) {
                  if (!compare_action(c, m.left_action[i] * m.right_action[j],
                                      m.right_action[j] * m.left_action[i], m.labels,
                                      "(" + a.labels()[i] + "," + b.labels()[j] + ")")) {
                    return;
                  }
                }
              }
            })
      .done();
}

Verdict check_bimodule_morphism(const Bimodule& src, const Bimodule& tgt, const Mat& f) {
  require_dims(f.rows() == src.dim && f.cols() == tgt.dim,
               "bimodule morphism is " + std::to_string(f.rows()) + "x" +
                   std::to_string(f.cols()) + ", expected " + std::to_string(src.dim) + "x" +
                   std::to_string(tgt.dim));
  if (!same_algebra(src.left, tgt.left) || !same_algebra(src.right, tgt.right)) {
    throw Error(ErrorKind::kAlgebraMismatch, "bimodule morphism between different algebras");
  }
  return CheckSequence()
      .then("left_linear",
            [&](Condition& c) {
              for (std::size_t i = 0; i < src.left->dim(); ++i) {
                if (!compare_rows(c, src.left_action[i] * f, f * tgt.left_action[i], src.labels,
                                  "acting by " + src.left->labels()[i])) {
                  return;
                }
              }
            })
      .then("right_linear",
            [&](Condition& c) {
              for (std::size_t j = 0; j < src.right->dim(); ++j) {
                if (!compare_rows(c, src.right_action[j] * f, f * tgt.right_action[j],
                                  src.labels, "acting by " + src.right->labels()[j])) {
                  return;
                }
              }
            })
      .done();
}

bool is_left_linear(const Mat& f, const Bimodule& src, const Bimodule& tgt) {
  if (!same_algebra(src.left, tgt.left)) return false;
  if (f.rows() != src.dim || f.cols() != tgt.dim) return false;
  for (std::size_t i = 0; i < src.left->dim(); ++i) {
    if (!(src.left_action[i] * f == f * tgt.left_action[i])) return false;
  }
  return true;
}

bool is_right_linear(const Mat& f, const Bimodule& src, const Bimodule& tgt) {
  if (!same_algebra(src.right, tgt.right)) return false;
  if (f.rows() != src.dim || f.cols() != tgt.dim) return false;
  for (std::size_t j = 0; j < src.right->dim(); ++j) {
    if (!(src.right_action[j] * f == f * tgt.right_action[j])) return false;
  }
  return true;
}

Bimodule regular_bimodule(const AlgebraPtr& a) {
  return Bimodule{a, a, a->dim(), a->left_mults(), a->right_mults(), a->labels()};
}

Bimodule restrict_scalars(const Bimodule& m, const AlgebraMorphism* along_left,
                          const AlgebraMorphism* along_right) {
  Bimodule out = m;
  if (along_left) {
    if (!same_algebra(along_left->target, m.left)) {
      throw Error(ErrorKind::kAlgebraMismatch, "restriction along a map into the wrong algebra");
    }
    out.left = along_left->source;
    out.left_action.clear();
    for (std::size_t i = 0; i < along_left->source->dim(); ++i) {
      out.left_action.push_back(m.left_by(along_left->map.row_mat(i)));
    }
  }
  if (along_right) {
    if (!same_algebra(along_right->target, m.right)) {
      throw Error(ErrorKind::kAlgebraMismatch, "restriction along a map into the wrong algebra");
    }
    out.right = along_right->source;
    out.right_action.clear();
    for (std::size_t j = 0; j < along_right->source->dim(); ++j) {
      out.right_action.push_back(m.right_by(along_right->map.row_mat(j)));
    }
  }
  return out;
}

Bimodule right_module(const Bimodule& m) {
  Bimodule out = m;
  out.left = ground_algebra(m.field());
  out.left_action = {Mat::identity(m.field(), m.dim)};
  return out;
}

Bimodule left_module(const Bimodule& m) {
  Bimodule out = m;
  out.right = ground_algebra(m.field());
  out.right_action = {Mat::identity(m.field(), m.dim)};
  return out;
}

Bimodule with_right_action(const Bimodule& m, AlgebraPtr right, std::vector<Mat> right_action) {
  return make_bimodule(m.left, std::move(right), m.left_action, std::move(right_action),
                       m.labels);
}

Bimodule tensor_over_k(const Bimodule& m, const Bimodule& n) {
  require_same_field(m.field(), n.field(), "tensor_over_k");
  Bimodule out;
  out.left = tensor_algebra(m.left, n.left);
  out.right = tensor_algebra(m.right, n.right);
  out.dim = m.dim * n.dim;
  for (const Mat& l : m.left_action) {
    for (const Mat& l2 : n.left_action) out.left_action.push_back(kron(l, l2));
  }
  for (const Mat& r : m.right_action) {
    for (const Mat& r2 : n.right_action) out.right_action.push_back(kron(r, r2));
  }
  out.labels = pair_labels(m.labels, n.labels);
  return out;
}

PresentedTensor tensor_over_alg(const Bimodule& m, const Bimodule& n) {
  require_same_field(m.field(), n.field(), "tensor_over_alg");
  if (!same_algebra(m.right, n.left)) {
    throw Error(ErrorKind::kAlgebraMismatch,
                "right algebra of the left factor differs from left algebra of the right factor");
  }
  const Field field = m.field();
  const AlgebraPtr& over = m.right;
  const std::size_t dm = m.dim, dn = n.dim, db = over->dim();
  Mat gens(field, dm * db * dn, dm * dn);
  for (std::size_t i = 0; i < dm; ++i) {
    for (std::size_t t = 0; t < db; ++t) {
      const SparseRow& mb = m.right_action[t].row(i);
      for (std::size_t j = 0; j < dn; ++j) {
        std::vector<Entry> entries;
        for (const auto& e : mb) entries.push_back({e.col * dn + j, e.value});
        for (const auto& e : n.left_action[t].row(j)) entries.push_back({i * dn + e.col, -e.value});
        gens.set_row((i * db + t) * dn + j, merge_row(std::move(entries), field));
      }
    }
  }
  QuotientSpace quot(dm * dn, Subspace::span(gens));
  const Mat& rel = quot.relations().basis();
  const auto& reps = quot.rep_columns();

  auto descend = [&](const Mat& ambient_action, const std::string& what) {
    if (rel.rows() > 0 && !(rel * ambient_action * quot.project()).is_zero()) {
      throw Error(ErrorKind::kIllDefinedAction, what + " does not preserve tensor relations");
    }
    return ambient_action.select_rows(reps) * quot.project();
  };

  Bimodule result;
  result.left = m.left;
  result.right = n.right;
  result.dim = quot.dim();
  const Mat id_m = Mat::identity(field, dm);
  const Mat id_n = Mat::identity(field, dn);
  for (std::size_t i = 0; i < m.left->dim(); ++i) {
    result.left_action.push_back(
        descend(kron(m.left_action[i], id_n), "left action of " + m.left->labels()[i]));
  }
  for (std::size_t j = 0; j < n.right->dim(); ++j) {
    result.right_action.push_back(
        descend(kron(id_m, n.right_action[j]), "right action of " + n.right->labels()[j]));
  }
  for (std::size_t col : reps) {
    result.labels.push_back(m.labels[col / dn] + "⊗" + n.labels[col % dn]);
  }
  return PresentedTensor{m, n, over, std::move(quot), std::move(result)};
}

Mat induced_map(const Mat& f, const Mat& g, const PresentedTensor& src,
                const PresentedTensor& tgt) {
  require_dims(f.rows() == src.left_factor.dim && f.cols() == tgt.left_factor.dim,
               "induced_map: left map has shape " + std::to_string(f.rows()) + "x" +
                   std::to_string(f.cols()));
  require_dims(g.rows() == src.right_factor.dim && g.cols() == tgt.right_factor.dim,
               "induced_map: right map has shape " + std::to_string(g.rows()) + "x" +
                   std::to_string(g.cols()));
  Mat ambient = kron(f, g);
  if (src.relations().rows() > 0) {
    Mat image = src.relations() * ambient * tgt.project();
    if (!image.is_zero()) {
      throw Error(ErrorKind::kDescentFailure,
                  "the map does not send tensor relations to tensor relations "
                  "(is the pair balanced over the middle algebra?)");
    }
  }
  return ambient.select_rows(src.quot.rep_columns()) * tgt.project();
}

Mat left_unitor(const PresentedTensor& t) {
  const Bimodule& a = t.left_factor;
  const Bimodule& m = t.right_factor;
  const Algebra& alg = *t.over;
  if (a.dim != alg.dim()) {
    throw Error(ErrorKind::kPrecondition, "left unitor needs the algebra itself as left factor");
  }
  for (std::size_t j = 0; j < alg.dim(); ++j) {
    if (!(a.right_action[j] == alg.right_mult(j))) {
      throw Error(ErrorKind::kPrecondition, "left factor is not the regular right module");
    }
  }
  Mat mult(m.field(), a.dim * m.dim, m.dim);
  for (std::size_t i = 0; i < a.dim; ++i) {
    for (std::size_t j = 0; j < m.dim; ++j) mult.set_row(i * m.dim + j, m.left_action[i].row(j));
  }
  Mat u = mult.select_rows(t.quot.rep_columns());
  if (!is_invertible(u)) throw Error(ErrorKind::kIsoFailure, "A (x)_A M -> M is not bijective");
  return u;
}

Mat right_unitor(const PresentedTensor& t) {
  const Bimodule& m = t.left_factor;
  const Bimodule& a = t.right_factor;
  const Algebra& alg = *t.over;
  if (a.dim != alg.dim()) {
    throw Error(ErrorKind::kPrecondition, "right unitor needs the algebra itself as right factor");
  }
  for (std::size_t i = 0; i < alg.dim(); ++i) {
    if (!(a.left_action[i] == alg.left_mult(i))) {
      throw Error(ErrorKind::kPrecondition, "right factor is not the regular left module");
    }
  }
  Mat mult(m.field(), m.dim * a.dim, m.dim);
  for (std::size_t j = 0; j < m.dim; ++j) {
    for (std::size_t i = 0; i < a.dim; ++i) mult.set_row(j * a.dim + i, m.right_action[i].row(j));
  }
  Mat u = mult.select_rows(t.quot.rep_columns());
  if (!is_invertible(u)) throw Error(ErrorKind::kIsoFailure, "M (x)_A A -> M is not bijective");
  return u;
}

Associator associate(const Bimodule& m, const Bimodule& n, const Bimodule& p) {
  return associate(tensor_over_alg(m, n), tensor_over_alg(n, p));
}

Associator associate(const PresentedTensor& mn, const PresentedTensor& np) {
  require_dims(mn.right_factor.dim == np.left_factor.dim,
               "associator: middle factors of different dimension");
  const Bimodule& m = mn.left_factor;
  const Bimodule& p = np.right_factor;
  const Field field = m.field();
  PresentedTensor left = tensor_over_alg(mn.result, p);
  PresentedTensor right = tensor_over_alg(m, np.result);
  const Mat id_m = Mat::identity(field, m.dim);
  const Mat id_p = Mat::identity(field, p.dim);

  // Both bracketings go through the flat ambient M (x)_k N (x)_k P.
  Mat right_to_flat = kron(id_m, np.lift());
  Mat flat_to_left = kron(mn.project(), id_p) * left.project();
  Mat left_to_flat = kron(mn.lift(), id_p);
  Mat flat_to_right = kron(id_m, np.project()) * right.project();

  if (right.relations().rows() > 0 &&
      !(right.relations() * right_to_flat * flat_to_left).is_zero()) {
    throw Error(ErrorKind::kDescentFailure, "associator M(NP) -> (MN)P is not well defined");
  }
  if (left.relations().rows() > 0 &&
      !(left.relations() * left_to_flat * flat_to_right).is_zero()) {
    throw Error(ErrorKind::kDescentFailure, "associator (MN)P -> M(NP) is not well defined");
  }
  Mat r2l = right_to_flat.select_rows(right.quot.rep_columns()) * flat_to_left;
  Mat l2r = left_to_flat.select_rows(left.quot.rep_columns()) * flat_to_right;
  if (!(r2l * l2r == Mat::identity(field, right.dim())) ||
      !(l2r * r2l == Mat::identity(field, left.dim()))) {
    throw Error(ErrorKind::kIsoFailure, "associator maps are not mutually inverse");
  }
  return Associator{mn, std::move(left), np, std::move(right), std::move(r2l), std::move(l2r)};
}

EtaMap eta_map(const PresentedTensor& mc, const PresentedTensor& nc) {
  const Bimodule& m = mc.left_factor;
  const Bimodule& c = mc.right_factor;
  const Bimodule& n = nc.left_factor;
  const Bimodule& c2 = nc.right_factor;
  require_same_field(m.field(), n.field(), "eta_map");
  const Field field = m.field();

  Bimodule source = tensor_over_k(mc.result, nc.result);
  PresentedTensor target = tensor_over_alg(tensor_over_k(m, n), tensor_over_k(c, c2));

  const std::size_t dm = m.dim, dc = c.dim, dn = n.dim, dc2 = c2.dim;
  std::vector<std::size_t> shuffle(dm * dc * dn * dc2);
  for (std::size_t im = 0; im < dm; ++im) {
    for (std::size_t ic = 0; ic < dc; ++ic) {
      for (std::size_t in = 0; in < dn; ++in) {
        for (std::size_t ic2 = 0; ic2 < dc2; ++ic2) {
          shuffle[((im * dc + ic) * dn + in) * dc2 + ic2] =
              ((im * dn + in) * dc + ic) * dc2 + ic2;
        }
      }
    }
  }
  Mat reshuffle = permutation(field, shuffle) * target.project();

  const Mat id_mc = Mat::identity(field, mc.ambient_dim());
  const Mat id_nc = Mat::identity(field, nc.ambient_dim());
  if (mc.relations().rows() > 0 && !(kron(mc.relations(), id_nc) * reshuffle).is_zero()) {
    throw Error(ErrorKind::kDescentFailure, "eta does not descend along M (x)_A C");
  }
  if (nc.relations().rows() > 0 && !(kron(id_mc, nc.relations()) * reshuffle).is_zero()) {
    throw Error(ErrorKind::kDescentFailure, "eta does not descend along N (x)_A' C'");
  }
  Mat map = kron(mc.lift(), nc.lift()) * reshuffle;
  Verdict linear = check_bimodule_morphism(source, target.result, map);
  if (!linear) {
    throw Error(ErrorKind::kDescentFailure, "eta is not bilinear: " + linear.summary());
  }
  if (!is_invertible(map)) {
    throw Error(ErrorKind::kIsoFailure, "eta is not bijective (" + std::to_string(map.rows()) +
                                            "x" + std::to_string(map.cols()) + ")");
  }
  return EtaMap{std::move(source), std::move(target), std::move(map)};
}

Verdict check_eta_naturality(const Mat& f, const Bimodule& m, const Bimodule& m2,
                             const Mat& g, const Bimodule& n, const Bimodule& n2,
                             const Bimodule& c, const Bimodule& c2) {
  if (!is_right_linear(f, m, m2)) {
    throw Error(ErrorKind::kPrecondition, "f is not right linear over the coring base");
  }
  if (!is_right_linear(g, n, n2)) {
    throw Error(ErrorKind::kPrecondition, "g is not right linear over the coring base");
  }
  const Field field = m.field();
  PresentedTensor mc = tensor_over_alg(m, c);
  PresentedTensor m2c = tensor_over_alg(m2, c);
  PresentedTensor nc = tensor_over_alg(n, c2);
  PresentedTensor n2c = tensor_over_alg(n2, c2);
  EtaMap eta = eta_map(mc, nc);
  EtaMap eta2 = eta_map(m2c, n2c);
  Mat fc = induced_map(f, Mat::identity(field, c.dim), mc, m2c);
  Mat gc = induced_map(g, Mat::identity(field, c2.dim), nc, n2c);
  Mat lhs = kron(fc, gc) * eta2.map;
  Mat fg = induced_map(kron(f, g), Mat::identity(field, c.dim * c2.dim), eta.target, eta2.target);
  Mat rhs = eta.map * fg;
  return CheckSequence()
      .then("naturality", [&](Condition& cond) { compare_rows(cond, lhs, rhs, eta.source.labels); })
      .done();
}

Subspace hom_space(const Bimodule& src, const Bimodule& tgt, bool left_linear,
                   bool right_linear) {
  require_same_field(src.field(), tgt.field(), "hom_space");
  const Field field = src.field();
  const std::size_t ds = src.dim, dt = tgt.dim;
  std::vector<Mat> blocks;
  // Constraint rows for X * F - F * Y = 0.
  auto add_constraints = [&](const Mat& x, const Mat& y) {
    Mat rows(field, ds * dt, ds * dt);
    for (std::size_t p = 0; p < ds; ++p) {
      for (std::size_t q = 0; q < dt; ++q) {
        std::vector<Entry> entries;
        for (const auto& e : x.row(p)) entries.push_back({e.col * dt + q, e.value});
        for (std::size_t i = 0; i < dt; ++i) {
          Scalar v = y.at(i, q);
          if (sgn(v) != 0) entries.push_back({p * dt + i, -v});
        }
        rows.set_row(p * dt + q, merge_row(std::move(entries), field));
      }
    }
    blocks.push_back(std::move(rows));
  };
  if (left_linear) {
    if (!same_algebra(src.left, tgt.left)) {
      throw Error(ErrorKind::kAlgebraMismatch, "hom_space: left algebras differ");
    }
    for (std::size_t i = 0; i < src.left->dim(); ++i) {
      add_constraints(src.left_action[i], tgt.left_action[i]);
    }
  }
  if (right_linear) {
    if (!same_algebra(src.right, tgt.right)) {
      throw Error(ErrorKind::kAlgebraMismatch, "hom_space: right algebras differ");
    }
    for (std::size_t j = 0; j < src.right->dim(); ++j) {
      add_constraints(src.right_action[j], tgt.right_action[j]);
    }
  }
  if (blocks.empty()) return Subspace::full(field, ds * dt);
  return null_space(vstack(blocks));
}

Mat random_hom(const Subspace& homs, std::size_t src_dim, std::size_t tgt_dim,
               std::mt19937_64& rng) {
  require_dims(homs.ambient_dim() == src_dim * tgt_dim, "random_hom: shape mismatch");
  std::uniform_int_distribution<int> coef(-3, 3);
  Mat flat(homs.field(), 1, homs.ambient_dim());
  for (std::size_t r = 0; r < homs.dim(); ++r) {
    flat = flat + homs.basis().row_mat(r).scaled(Scalar(coef(rng)));
  }
  Mat f(homs.field(), src_dim, tgt_dim);
  for (const auto& e : flat.row(0)) f.set(e.col / tgt_dim, e.col % tgt_dim, e.value);
  return f;
}

}  // namespace corings
