#include "corings/ext_category.hpp"

#include "corings/error.hpp"

namespace corings {

namespace {

// Row (j, l) is e_j . w_l, where w_l is row l of w read as an element of
// the algebra acting on the right of `module`.
Mat act_by_rows(const Bimodule& module, const Mat& w) {
  const std::size_t n = module.dim, k = w.rows();
  Mat out(module.field(), n * k, n);
  for (std::size_t l = 0; l < k; ++l) {
    Mat act = module.right_by(w.row_mat(l));
    for (std::size_t j = 0; j < n; ++j) out.set_row(j * k + l, act.row(j));
  }
  return out;
}

void require_composable(const ExtMorphism& g, const ExtMorphism& f) {
  if (!same_coring(f.target, g.source)) {
    throw Error(ErrorKind::kObjectMismatch, "Ext morphisms are not composable");
  }
}

// e . b = e_(0) eps(e_(1) b) for every basis element b of the target base.
std::vector<Mat> composite_action(const ExtMorphism& g, const Mat& f_lift, const Bimodule& e) {
  const Coring& c = g.source;
  std::vector<Mat> action;
  for (const Mat& rb : g.right_action) action.push_back(f_lift * act_by_rows(e, rb * c.counit()));
  return action;
}

}  // namespace

Mat ExtMorphism::action_matrix() const {
  const std::size_t dc = source.dim(), db = right_action.size();
  Mat out(source.field(), dc * db, dc);
  for (std::size_t i = 0; i < dc; ++i) {
    for (std::size_t j = 0; j < db; ++j) out.set_row(i * db + j, right_action[j].row(i));
  }
  return out;
}

Bimodule ExtMorphism::carrier() const {
  return with_right_action(source.carrier(), target.base(), right_action);
}

Mat ExtMorphism::coaction() const {
  return coact_lift * tensor_over_alg(carrier(), target.carrier()).project();
}

Mat ExtMorphism::canonical_lift() const {
  PresentedTensor t = tensor_over_alg(carrier(), target.carrier());
  return coact_lift * t.project() * t.lift();
}

ExtMorphism ext_from_action_matrix(Coring source, Coring target, const Mat& action,
                                   Mat coact_lift) {
  const std::size_t dc = source.dim(), db = target.base()->dim();
  require_dims(action.rows() == dc * db && action.cols() == dc,
               "right action matrix must be " + std::to_string(dc * db) + "x" +
                   std::to_string(dc));
  std::vector<Mat> right_action;
  for (std::size_t j = 0; j < db; ++j) {
    Mat r(source.field(), dc, dc);
    for (std::size_t i = 0; i < dc; ++i) r.set_row(i, action.row(i * db + j));
    right_action.push_back(std::move(r));
  }
  return ExtMorphism{std::move(source), std::move(target), std::move(right_action),
                     std::move(coact_lift)};
}

Verdict check_ext_morphism(const ExtMorphism& m) {
  return validate_right_extension(m.source, m.target, m.right_action, m.coact_lift);
}

RightExtension to_extension(const ExtMorphism& m) {
  return make_right_extension(m.source, m.target, m.right_action, m.coact_lift);
}

ExtMorphism ext_identity(const Coring& c) {
  return ExtMorphism{c, c, c.carrier().right_action, c.comul_lift()};
}

ExtMorphism ext_to_unit(const Coring& c) {
  const Field& field = c.field();
  return ExtMorphism{c, unit_coring(field), {Mat::identity(field, c.dim())},
                     Mat::identity(field, c.dim())};
}

ExtMorphism ext_to_trivial(const Coring& c) {
  const AlgebraPtr& a = c.base();
  const std::size_t da = a->dim();
  Mat lift(c.field(), c.dim(), c.dim() * da);
  for (std::size_t i = 0; i < c.dim(); ++i) {
    for (const auto& u : a->unit().row(0)) lift.set(i, i * da + u.col, u.value);
  }
  return ExtMorphism{c, trivial_coring(a), c.carrier().right_action, std::move(lift)};
}

bool ext_equal(const ExtMorphism& a, const ExtMorphism& b) {
  if (!same_coring(a.source, b.source) || !same_coring(a.target, b.target)) return false;
  if (a.right_action.size() != b.right_action.size()) return false;
  for (std::size_t j = 0; j < a.right_action.size(); ++j) {
    if (!(a.right_action[j] == b.right_action[j])) return false;
  }
  return a.coaction() == b.coaction();
}

ExtMorphism ext_compose(const ExtMorphism& g, const ExtMorphism& f) {
  require_composable(g, f);
  const Coring& c = g.source;
  const Bimodule e = f.carrier();
  const Mat x = f.canonical_lift();
  std::vector<Mat> action = composite_action(g, x, e);
  // e -> sum x_{i,jk} y_{k,ln} (e_j . eps(c_l)) (x) d_n
  const Field& field = c.field();
  Mat lift = x * kron(Mat::identity(field, e.dim), g.canonical_lift()) *
             kron(act_by_rows(e, c.counit()), Mat::identity(field, g.target.dim()));
  ExtMorphism out{f.source, g.target, std::move(action), std::move(lift)};
  out.coact_lift = out.canonical_lift();
  return out;
}

ExtMorphism ext_compose_via_cotensor(const ExtMorphism& g, const ExtMorphism& f) {
  require_composable(g, f);
  const Coring& c = g.source;
  const Coring& d = g.target;
  const Field& field = c.field();
  const Bimodule e = f.carrier();

  RightComodule rho_e = make_right_comodule(e, c, f.coact_lift);
  Cotensor ec = cotensor(rho_e, regular_left_comodule(c));
  if (ec.kernel.dim() != e.dim || rank(rho_e.coaction) != e.dim ||
      !ec.kernel.contains_rows(rho_e.coaction)) {
    throw Error(ErrorKind::kIsoFailure, "E -> E box_C C is not bijective");
  }

  const Bimodule c_b = g.carrier();
  PresentedTensor e_c = tensor_over_alg(e, c_b);
  PresentedTensor c_d = tensor_over_alg(c_b, d.carrier());
  Associator assoc = associate(e_c, c_d);
  Mat rho_g = g.coact_lift * c_d.project();
  Mat pushed = rho_e.coaction *
               induced_map(Mat::identity(field, e.dim), rho_g, e_c, assoc.right);

  ExtMorphism out{f.source, d, composite_action(g, f.canonical_lift(), e),
                  Mat(field, e.dim, e.dim * d.dim())};
  PresentedTensor e_d = tensor_over_alg(out.carrier(), d.carrier());
  Mat psi = induced_map(rho_e.coaction, Mat::identity(field, d.dim()), e_d, assoc.left) *
            assoc.left_to_right;
  if (rank(psi) != e_d.dim()) {
    throw Error(ErrorKind::kIsoFailure, "E (x)_B D -> E box_C (C (x)_B D) is not injective");
  }
  std::optional<Mat> solved = solve_left(psi, pushed);
  if (!solved) {
    throw Error(ErrorKind::kIsoFailure, "pushed coaction leaves the image of E (x)_B D");
  }
  out.coact_lift = *solved * e_d.lift();
  return out;
}

ExtMorphism ext_tensor_morphisms(const ExtMorphism& m, const ExtMorphism& m2) {
  require_same_field(m.source.field(), m2.source.field(), "ext_tensor_morphisms");
  ExtensionData data = tensor_extension_data(m.source, m.target, m.right_action, m.coact_lift,
                                             m2.source, m2.target, m2.right_action,
                                             m2.coact_lift);
  return ExtMorphism{std::move(data.c), std::move(data.d), std::move(data.right_action),
                     std::move(data.coact_lift)};
}

ExtMorphism ext_from_coring_iso(const CoringsMorphism& m) {
  const Coring& c = m.source;
  if (!is_invertible(m.phi) || !is_invertible(m.varphi.map)) {
    throw Error(ErrorKind::kIsoFailure, "corings morphism is not an isomorphism");
  }
  Mat inv = inverse(m.varphi.map);
  std::vector<Mat> action;
  for (std::size_t j = 0; j < inv.rows(); ++j) {
    action.push_back(c.carrier().right_by(inv.row_mat(j)));
  }
  Mat lift = c.comul_lift() * kron(Mat::identity(c.field(), c.dim()), m.phi);
  return ExtMorphism{c, m.target, std::move(action), std::move(lift)};
}

ExtMorphism corings_to_ext(const CoringsMorphism& m) {
  BaseRingExtension bre = base_ring_extension(m);
  const RightComodule& rho = bre.extension.coaction;
  return ExtMorphism{bre.coring, m.target, bre.extension.carrier.right_action,
                     rho.coaction * rho.tens.lift()};
}

}  // namespace corings
