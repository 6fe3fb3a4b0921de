#include "corings/coring.hpp"

#include "corings/error.hpp"

namespace corings {


Coring::Coring(Bimodule carrier, Mat comul_lift, Mat counit, std::string name) {
  if (!same_algebra(carrier.left, carrier.right)) {
    throw Error(ErrorKind::kAlgebraMismatch, "coring carrier must be an (A,A)-bimodule");
  }
  const std::size_t d = carrier.dim;
  require_same_field(carrier.field(), comul_lift.field(), "coring comultiplication");
  require_same_field(carrier.field(), counit.field(), "coring counit");
  require_dims(comul_lift.rows() == d && comul_lift.cols() == d * d,
               "comultiplication lift must be " + std::to_string(d) + "x" +
                   std::to_string(d * d));
  require_dims(counit.rows() == d && counit.cols() == carrier.left->dim(),
               "counit must be " + std::to_string(d) + "x" + std::to_string(carrier.left->dim()));
  PresentedTensor square = tensor_over_alg(carrier, carrier);
  Mat comul = comul_lift * square.project();
  auto impl = std::make_shared<Impl>(std::move(carrier), std::move(comul_lift), std::move(comul),
                                     std::move(counit), std::move(square), std::move(name));
  impl_ = std::move(impl);
}

const Associator& Coring::cube() const {
  std::call_once(impl_->cube_once,
                 [this] { impl_->cube = associate(impl_->square, impl_->square); });
  return *impl_->cube;
}

bool same_coring(const Coring& a, const Coring& b) {
  if (a.shares_data(b)) return true;
  const Bimodule& x = a.carrier();
  const Bimodule& y = b.carrier();
  if (!same_algebra(a.base(), b.base()) || x.dim != y.dim) return false;
  for (std::size_t i = 0; i < x.left_action.size(); ++i) {
    if (!(x.left_action[i] == y.left_action[i]) || !(x.right_action[i] == y.right_action[i])) {
      return false;
    }
  }
  return a.comul() == b.comul() && a.counit() == b.counit();
}

Verdict check_coring(const Coring& c) {
  const Field field = c.field();
  const Mat id = Mat::identity(field, c.dim());
  const Bimodule base = regular_bimodule(c.base());
  return CheckSequence()
      .then("bilinearity",
            [&](Condition& cond) {
              fail_from(cond, check_bimodule(c.carrier()), "carrier") &&
                  fail_from(cond,
                            check_bimodule_morphism(c.carrier(), c.square().result, c.comul()),
                            "comultiplication") &&
                  fail_from(cond, check_bimodule_morphism(c.carrier(), base, c.counit()),
                            "counit");
            })
      .then("coassociativity",
            [&](Condition& cond) {
              const Associator& cube = c.cube();
              Mat lhs = c.comul() * induced_map(c.comul(), id, c.square(), cube.left);
              Mat rhs = c.comul() * induced_map(id, c.comul(), c.square(), cube.right) *
                        cube.right_to_left;
              compare_rows(cond, lhs, rhs, c.labels());
            })
      .then("counit_right",
            [&](Condition& cond) {
              PresentedTensor ca = tensor_over_alg(c.carrier(), base);
              Mat lhs = c.comul() * induced_map(id, c.counit(), c.square(), ca) * right_unitor(ca);
              compare_rows(cond, lhs, id, c.labels());
            })
      .then("counit_left",
            [&](Condition& cond) {
              PresentedTensor ac = tensor_over_alg(base, c.carrier());
              Mat lhs = c.comul() * induced_map(c.counit(), id, c.square(), ac) * left_unitor(ac);
              compare_rows(cond, lhs, id, c.labels());
            })
      .done();
}

RightComodule make_right_comodule(Bimodule carrier, const Coring& c, const Mat& coact_lift) {
  if (!same_algebra(carrier.right, c.base())) {
    throw Error(ErrorKind::kAlgebraMismatch,
                "right comodule carrier is not a right module over the coring base");
  }
  require_dims(coact_lift.rows() == carrier.dim && coact_lift.cols() == carrier.dim * c.dim(),
               "right coaction lift must be " + std::to_string(carrier.dim) + "x" +
                   std::to_string(carrier.dim * c.dim()));
  PresentedTensor tens = tensor_over_alg(carrier, c.carrier());
  Mat coaction = coact_lift * tens.project();
  return RightComodule{std::move(carrier), c, std::move(tens), std::move(coaction)};
}

LeftComodule make_left_comodule(Bimodule carrier, const Coring& c, const Mat& coact_lift) {
  if (!same_algebra(carrier.left, c.base())) {
    throw Error(ErrorKind::kAlgebraMismatch,
                "left comodule carrier is not a left module over the coring base");
  }
  require_dims(coact_lift.rows() == carrier.dim && coact_lift.cols() == c.dim() * carrier.dim,
               "left coaction lift must be " + std::to_string(carrier.dim) + "x" +
                   std::to_string(c.dim() * carrier.dim));
  PresentedTensor tens = tensor_over_alg(c.carrier(), carrier);
  Mat coaction = coact_lift * tens.project();
  return LeftComodule{std::move(carrier), c, std::move(tens), std::move(coaction)};
}

RightComodule regular_right_comodule(const Coring& c) {
  return RightComodule{c.carrier(), c, c.square(), c.comul()};
}

LeftComodule regular_left_comodule(const Coring& c) {
  return LeftComodule{c.carrier(), c, c.square(), c.comul()};
}

LeftComodule regular_left_comodule(const Coring& c, const Bimodule& carrier) {
  return make_left_comodule(carrier, c, c.comul_lift());
}

Verdict check_comodule(const RightComodule& m) {
  const Field field = m.carrier.field();
  const Coring& c = m.coring;
  const Mat id_m = Mat::identity(field, m.carrier.dim);
  const Mat id_c = Mat::identity(field, c.dim());
  return CheckSequence()
      .then("linearity",
            [&](Condition& cond) {
              fail_from(cond, check_bimodule_morphism(m.carrier, m.tens.result, m.coaction));
            })
      .then("coassociativity",
            [&](Condition& cond) {
              Associator assoc = associate(m.tens, c.square());
              Mat lhs = m.coaction * induced_map(m.coaction, id_c, m.tens, assoc.left);
              Mat rhs = m.coaction * induced_map(id_m, c.comul(), m.tens, assoc.right) *
                        assoc.right_to_left;
              compare_rows(cond, lhs, rhs, m.carrier.labels);
            })
      .then("counit",
            [&](Condition& cond) {
              PresentedTensor ma = tensor_over_alg(m.carrier, regular_bimodule(c.base()));
              Mat lhs = m.coaction * induced_map(id_m, c.counit(), m.tens, ma) * right_unitor(ma);
              compare_rows(cond, lhs, id_m, m.carrier.labels);
            })
      .done();
}

Verdict check_comodule(const LeftComodule& m) {
  const Field field = m.carrier.field();
  const Coring& c = m.coring;
  const Mat id_m = Mat::identity(field, m.carrier.dim);
  const Mat id_c = Mat::identity(field, c.dim());
  return CheckSequence()
      .then("linearity",
            [&](Condition& cond) {
              fail_from(cond, check_bimodule_morphism(m.carrier, m.tens.result, m.coaction));
            })
      .then("coassociativity",
            [&](Condition& cond) {
              Associator assoc = associate(c.square(), m.tens);
              Mat lhs = m.coaction * induced_map(c.comul(), id_m, m.tens, assoc.left);
              Mat rhs = m.coaction * induced_map(id_c, m.coaction, m.tens, assoc.right) *
                        assoc.right_to_left;
              compare_rows(cond, lhs, rhs, m.carrier.labels);
            })
      .then("counit",
            [&](Condition& cond) {
              PresentedTensor am = tensor_over_alg(regular_bimodule(c.base()), m.carrier);
              Mat lhs = m.coaction * induced_map(c.counit(), id_m, m.tens, am) * left_unitor(am);
              compare_rows(cond, lhs, id_m, m.carrier.labels);
            })
      .done();
}

Verdict check_left_colinear(const Mat& f, const LeftComodule& m, const LeftComodule& n) {
  if (!same_coring(m.coring, n.coring)) {
    throw Error(ErrorKind::kObjectMismatch, "colinearity between comodules over different corings");
  }
  require_dims(f.rows() == m.carrier.dim && f.cols() == n.carrier.dim,
               "colinear map has the wrong shape");
  const Mat id_c = Mat::identity(f.field(), m.coring.dim());
  return CheckSequence()
      .then("colinear",
            [&](Condition& cond) {
              Mat lhs = f * n.coaction;
              Mat rhs = m.coaction * induced_map(id_c, f, m.tens, n.tens);
              compare_rows(cond, lhs, rhs, m.carrier.labels);
            })
      .done();
}

LeftComodule left_coaction_on_tensor(const LeftComodule& x, const PresentedTensor& xp) {
  require_dims(xp.left_factor.dim == x.carrier.dim, "left factor is not the comodule carrier");
  Associator assoc = associate(x.tens, xp);
  const Mat id_p = Mat::identity(x.carrier.field(), xp.right_factor.dim);
  Mat coaction = induced_map(x.coaction, id_p, xp, assoc.left) * assoc.left_to_right;
  return LeftComodule{xp.result, x.coring, std::move(assoc.right), std::move(coaction)};
}

Verdict check_bicomodule(const LeftComodule& left, const RightComodule& right) {
  require_dims(left.carrier.dim == right.carrier.dim, "bicomodule sides have different carriers");
  Verdict out;
  out.absorb(check_comodule(left), "left.");
  if (!out) return out;
  out.absorb(check_comodule(right), "right.");
  if (!out) return out;
  LeftComodule target = left_coaction_on_tensor(left, right.tens);
  out.absorb(check_left_colinear(right.coaction, left, target));
  return out;
}

Cotensor cotensor(const RightComodule& m, const LeftComodule& n) {
  if (!same_coring(m.coring, n.coring)) {
    throw Error(ErrorKind::kObjectMismatch, "cotensor over different corings");
  }
  const Field field = m.carrier.field();
  PresentedTensor mn = tensor_over_alg(m.carrier, n.carrier);
  Associator assoc = associate(m.tens, n.tens);
  Mat rho_n = induced_map(m.coaction, Mat::identity(field, n.carrier.dim), mn, assoc.left);
  Mat m_lambda = induced_map(Mat::identity(field, m.carrier.dim), n.coaction, mn, assoc.right) *
                 assoc.right_to_left;
  Mat defect = rho_n - m_lambda;
  Subspace kernel = map_kernel(defect);
  return Cotensor{std::move(mn), std::move(kernel), std::move(defect)};
}

}  // namespace corings
