#include "corings/monoidal.hpp"

#include <functional>

#include "corings/error.hpp"

namespace corings {

namespace {

ExtMorphism compose_m(const ExtMorphism& g, const ExtMorphism& f) { return ext_compose(g, f); }
CoringsMorphism compose_m(const CoringsMorphism& g, const CoringsMorphism& f) {
  return corings_compose(g, f);
}
ExtMorphism tensor_m(const ExtMorphism& a, const ExtMorphism& b) {
  return ext_tensor_morphisms(a, b);
}
CoringsMorphism tensor_m(const CoringsMorphism& a, const CoringsMorphism& b) {
  return corings_tensor_morphisms(a, b);
}
bool equal_m(const ExtMorphism& a, const ExtMorphism& b) { return ext_equal(a, b); }
bool equal_m(const CoringsMorphism& a, const CoringsMorphism& b) { return corings_equal(a, b); }
Verdict check_m(const ExtMorphism& m) { return check_ext_morphism(m); }
Verdict check_m(const CoringsMorphism& m) { return check_corings_morphism(m); }

template <typename M>
M identity_m(const Coring& c);
template <>
ExtMorphism identity_m<ExtMorphism>(const Coring& c) {
  return ext_identity(c);
}
template <>
CoringsMorphism identity_m<CoringsMorphism>(const Coring& c) {
  return corings_identity(c);
}

template <typename M>
M from_iso(const CoringsMorphism& iso);
template <>
ExtMorphism from_iso<ExtMorphism>(const CoringsMorphism& iso) {
  return ext_from_coring_iso(iso);
}
template <>
CoringsMorphism from_iso<CoringsMorphism>(const CoringsMorphism& iso) {
  return iso;
}

template <typename M>
std::string label(const M& m) {
  return m.name.empty() ? "(" + m.source.name() + "->" + m.target.name() + ")" : m.name;
}

// Runs body over the cases of one condition; the first failing case, or the
// first thrown library error, becomes the witness.
void each_case(Condition& cond, std::size_t n,
               const std::function<std::string(std::size_t)>& case_name,
               const std::function<std::string(std::size_t)>& body) {
  for (std::size_t i = 0; i < n; ++i) {
    std::string problem;
    try {
      problem = body(i);
    } catch (const Error& e) {
      problem = e.what();
    }
    if (!problem.empty()) {
      cond.status = Condition::Status::kFail;
      cond.witness = case_name(i);
      cond.detail = problem;
      return;
    }
  }
}

template <typename M>
std::string validated(const M& m, const std::string& what) {
  Verdict v = check_m(m);
  return v ? std::string() : what + " " + v.summary();
}

template <typename M>
std::string unit_problems(const Coring& c, const CoringsMorphism& iso,
                          const std::vector<M>& morphisms, bool left) {
  M to = from_iso<M>(iso);
  M back = from_iso<M>(inverse_iso(iso));
  if (auto p = validated(to, "unitor"); !p.empty()) return p;
  if (auto p = validated(back, "inverse unitor"); !p.empty()) return p;
  if (!equal_m(compose_m(to, back), identity_m<M>(c))) return "unitor o inverse != id";
  if (!equal_m(compose_m(back, to), identity_m<M>(iso.source))) return "inverse o unitor != id";
  const Coring unit = unit_coring(c.field());
  for (const M& f : morphisms) {
    if (!same_coring(f.target, c)) continue;
    const Coring& src = f.source;
    CoringsMorphism src_iso = left ? left_unit_iso(src) : right_unit_iso(src);
    M lhs = compose_m(to, left ? tensor_m(identity_m<M>(unit), f) : tensor_m(f, identity_m<M>(unit)));
    M rhs = compose_m(f, from_iso<M>(src_iso));
    if (!equal_m(lhs, rhs)) return "not natural in " + label(f);
  }
  return {};
}

template <typename M>
Verdict verify_monoidal(const Family<M>& fam) {
  const auto& objs = fam.objects;
  const std::size_t n = objs.size();
  const auto& sq = fam.composable;
  return CheckSequence()
      .then("identity_preservation",
            [&](Condition& cond) {
              each_case(
                  cond, n * n,
                  [&](std::size_t k) {
                    return "id_" + objs[k / n].name() + "⊗id_" + objs[k % n].name();
                  },
                  [&](std::size_t k) -> std::string {
                    const Coring& a = objs[k / n];
                    const Coring& b = objs[k % n];
                    M lhs = tensor_m(identity_m<M>(a), identity_m<M>(b));
                    if (!equal_m(lhs, identity_m<M>(tensor_coring(a, b)))) {
                      return "tensor of identities is not the identity";
                    }
                    return {};
                  });
            })
      .then("interchange",
            [&](Condition& cond) {
              each_case(
                  cond, sq.size() * sq.size(),
                  [&](std::size_t k) {
                    const auto& [g, f] = sq[k / sq.size()];
                    const auto& [g2, f2] = sq[k % sq.size()];
                    return "(" + label(g) + "•" + label(f) + ")⊗(" + label(g2) + "•" + label(f2) +
                           ")";
                  },
                  [&](std::size_t k) -> std::string {
                    const auto& [g, f] = sq[k / sq.size()];
                    const auto& [g2, f2] = sq[k % sq.size()];
                    M lhs = tensor_m(compose_m(g, f), compose_m(g2, f2));
                    M rhs = compose_m(tensor_m(g, g2), tensor_m(f, f2));
                    if (auto p = validated(lhs, "composite"); !p.empty()) return p;
                    if (!equal_m(lhs, rhs)) return "the two composites differ";
                    return {};
                  });
            })
      .then("unitors",
            [&](Condition& cond) {
              each_case(
                  cond, 2 * n,
                  [&](std::size_t k) {
                    return std::string(k % 2 == 0 ? "k⊗" : "") + objs[k / 2].name() +
                           (k % 2 == 0 ? "" : "⊗k");
                  },
                  [&](std::size_t k) {
                    const Coring& c = objs[k / 2];
                    const bool left = k % 2 == 0;
                    return unit_problems<M>(c, left ? left_unit_iso(c) : right_unit_iso(c),
                                            fam.morphisms, left);
                  });
            })
      .then("associator",
            [&](Condition& cond) {
              each_case(
                  cond, fam.triples.size(),
                  [&](std::size_t k) {
                    const auto& t = fam.triples[k];
                    return "(" + objs.at(t[0]).name() + "⊗" + objs.at(t[1]).name() + ")⊗" +
                           objs.at(t[2]).name();
                  },
                  [&](std::size_t k) -> std::string {
                    const auto& t = fam.triples[k];
                    CoringsMorphism iso = associator_iso(objs.at(t[0]), objs.at(t[1]),
                                                         objs.at(t[2]));
                    if (auto p = validated(iso, "associator"); !p.empty()) return p;
                    CoringsMorphism inv = inverse_iso(iso);
                    if (auto p = validated(inv, "inverse associator"); !p.empty()) return p;
                    M to = from_iso<M>(iso);
                    M back = from_iso<M>(inv);
                    if (auto p = validated(to, "associator"); !p.empty()) return p;
                    if (auto p = validated(back, "inverse associator"); !p.empty()) return p;
                    if (!equal_m(compose_m(to, back), identity_m<M>(iso.target)) ||
                        !equal_m(compose_m(back, to), identity_m<M>(iso.source))) {
                      return "associator maps are not mutually inverse";
                    }
                    return {};
                  });
            })
      .done();
}

CoringsMorphism collapse_iso(const Coring& source, const Coring& target) {
  require_dims(source.dim() == target.dim(), "collapse between corings of different dimension");
  const Field& field = source.field();
  return CoringsMorphism{source, target, Mat::identity(field, source.dim()),
                         AlgebraMorphism{source.base(), target.base(),
                                         Mat::identity(field, target.base()->dim())},
                         {}};
}

}  // namespace

CoringsMorphism corings_tensor_morphisms(const CoringsMorphism& m, const CoringsMorphism& m2) {
  require_same_field(m.source.field(), m2.source.field(), "corings_tensor_morphisms");
  return CoringsMorphism{tensor_coring(m.source, m2.source), tensor_coring(m.target, m2.target),
                         kron(m.phi, m2.phi), tensor_morphisms(m.varphi, m2.varphi), {}};
}

CoringsMorphism left_unit_iso(const Coring& c) {
  return collapse_iso(tensor_coring(unit_coring(c.field()), c), c);
}

CoringsMorphism right_unit_iso(const Coring& c) {
  return collapse_iso(tensor_coring(c, unit_coring(c.field())), c);
}

CoringsMorphism associator_iso(const Coring& c, const Coring& c2, const Coring& c3) {
  return collapse_iso(tensor_coring(tensor_coring(c, c2), c3),
                      tensor_coring(c, tensor_coring(c2, c3)));
}

CoringsMorphism inverse_iso(const CoringsMorphism& m) {
  return CoringsMorphism{m.target, m.source, inverse(m.phi),
                         AlgebraMorphism{m.varphi.target, m.varphi.source, inverse(m.varphi.map)},
                         {}};
}

Verdict verify_ext_monoidal(const ExtFamily& family) { return verify_monoidal(family); }

Verdict verify_corings_monoidal(const CoringsFamily& family) { return verify_monoidal(family); }

}  // namespace corings
