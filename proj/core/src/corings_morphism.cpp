#include "corings/corings_morphism.hpp"

#include "corings/error.hpp"

namespace corings {

Bimodule restrict_to_source(const CoringsMorphism& m) {
  return restrict_scalars(m.target.carrier(), &m.varphi, &m.varphi);
}

Mat omega_map(const PresentedTensor& over_a, const PresentedTensor& over_b) {
  const Field& field = over_a.left_factor.field();
  return induced_map(Mat::identity(field, over_a.left_factor.dim),
                     Mat::identity(field, over_a.right_factor.dim), over_a, over_b);
}

Verdict check_corings_morphism(const CoringsMorphism& m) {
  const Coring& c = m.source;
  const Coring& d = m.target;
  require_same_field(c.field(), d.field(), "corings morphism");
  require_dims(m.phi.rows() == c.dim() && m.phi.cols() == d.dim(),
               "phi must be " + std::to_string(c.dim()) + "x" + std::to_string(d.dim()));
  if (!same_algebra(m.varphi.source, c.base()) || !same_algebra(m.varphi.target, d.base())) {
    throw Error(ErrorKind::kAlgebraMismatch, "varphi does not connect the two base algebras");
  }
  std::optional<Bimodule> restricted;
  return CheckSequence()
      .then("algebra_map",
            [&](Condition& cond) { fail_from(cond, check_algebra_morphism(m.varphi)); })
      .then("bilinearity",
            [&](Condition& cond) {
              restricted = restrict_to_source(m);
              fail_from(cond, check_bimodule_morphism(c.carrier(), *restricted, m.phi));
            })
      .then("counit",
            [&](Condition& cond) {
              compare_rows(cond, m.phi * d.counit(), c.counit() * m.varphi.map, c.labels());
            })
      .then("comultiplication",
            [&](Condition& cond) {
              PresentedTensor dd = tensor_over_alg(*restricted, *restricted);
              Mat rhs = c.comul() * induced_map(m.phi, m.phi, c.square(), dd) *
                        omega_map(dd, d.square());
              compare_rows(cond, m.phi * d.comul(), rhs, c.labels());
            })
      .done();
}

CoringsMorphism corings_identity(const Coring& c) {
  return CoringsMorphism{c, c, Mat::identity(c.field(), c.dim()), identity_morphism(c.base())};
}

CoringsMorphism corings_compose(const CoringsMorphism& g, const CoringsMorphism& f) {
  if (!same_coring(f.target, g.source)) {
    throw Error(ErrorKind::kObjectMismatch, "corings morphisms are not composable");
  }
  return CoringsMorphism{f.source, g.target, f.phi * g.phi, compose(g.varphi, f.varphi)};
}

bool corings_equal(const CoringsMorphism& a, const CoringsMorphism& b) {
  return same_coring(a.source, b.source) && same_coring(a.target, b.target) && a.phi == b.phi &&
         a.varphi.map == b.varphi.map;
}

}  // namespace corings
