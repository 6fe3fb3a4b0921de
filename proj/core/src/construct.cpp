#include "corings/construct.hpp"

#include <map>
#include <mutex>

#include "corings/error.hpp"

namespace corings {

namespace {

Bimodule k_carrier(Field field, std::size_t dim, std::vector<std::string> labels) {
  AlgebraPtr k = ground_algebra(field);
  return make_bimodule(k, k, {Mat::identity(field, dim)}, {Mat::identity(field, dim)},
                       std::move(labels));
}

struct ExtensionParts {
  Verdict verdict;
  ErrorKind failure_kind = ErrorKind::kValidationFailure;
  std::optional<RightExtension> extension;
};

ExtensionParts build_extension(const Coring& c, const Coring& d, std::vector<Mat> right_action,
                               const Mat& coact_lift) {
  ExtensionParts parts;
  require_same_field(c.field(), d.field(), "right extension");
  Bimodule carrier = with_right_action(c.carrier(), d.base(), std::move(right_action));
  std::optional<PresentedTensor> sq;
  std::optional<RightComodule> rho;
  std::optional<LeftComodule> regular;
  parts.verdict =
      CheckSequence()
          .then("bimodule",
                [&](Condition& cond) {
                  if (!fail_from(cond, check_bimodule(carrier))) {
                    parts.failure_kind = ErrorKind::kNotABimodule;
                  }
                })
          .then("delta_right_linear",
                [&](Condition& cond) {
                  sq = tensor_over_alg(c.carrier(), carrier);
                  if (!fail_from(cond, check_bimodule_morphism(carrier, sq->result, c.comul()))) {
                    parts.failure_kind = ErrorKind::kDeltaNotRightLinear;
                  }
                })
          .then("coaction",
                [&](Condition& cond) {
                  rho = make_right_comodule(carrier, d, coact_lift);
                  if (!fail_from(cond, check_comodule(*rho))) {
                    parts.failure_kind = ErrorKind::kNotACoaction;
                  }
                })
          .then("colinear",
                [&](Condition& cond) {
                  regular = LeftComodule{carrier, c, *sq, c.comul()};
                  LeftComodule target = left_coaction_on_tensor(*regular, rho->tens);
                  if (!fail_from(cond, check_left_colinear(rho->coaction, *regular, target))) {
                    parts.failure_kind = ErrorKind::kNotColinear;
                  }
                })
          .done();
  if (parts.verdict) {
    parts.extension = RightExtension{c, d, std::move(carrier), std::move(*rho),
                                     std::move(*regular)};
  }
  return parts;
}

}  // namespace

namespace {

// Tensor corings keyed by the shared data of their factors. Entries keep the
// factors alive, so a key is never reused for different data.
struct TensorCache {
  struct Entry {
    Coring c;
    Coring c2;
    Coring result;
  };
  std::mutex mutex;
  std::map<std::pair<const void*, const void*>, Entry> entries;
};

TensorCache& tensor_cache() {
  static TensorCache cache;
  return cache;
}

}  // namespace

Coring tensor_coring(const Coring& c, const Coring& c2) {
  require_same_field(c.field(), c2.field(), "tensor_coring");
  const std::pair key{c.identity(), c2.identity()};
  TensorCache& cache = tensor_cache();
  {
    std::lock_guard lock(cache.mutex);
    if (auto it = cache.entries.find(key); it != cache.entries.end()) return it->second.result;
  }
  EtaMap eta = eta_map(c.square(), c2.square());
  Mat comul = kron(c.comul(), c2.comul()) * eta.map;
  Coring result(tensor_over_k(c.carrier(), c2.carrier()), comul * eta.target.lift(),
                kron(c.counit(), c2.counit()), c.name() + "⊗" + c2.name());
  std::lock_guard lock(cache.mutex);
  return cache.entries.try_emplace(key, TensorCache::Entry{c, c2, result}).first->second.result;
}

Verdict validate_right_extension(const Coring& c, const Coring& d,
                                 const std::vector<Mat>& right_action, const Mat& coact_lift) {
  return build_extension(c, d, right_action, coact_lift).verdict;
}

RightExtension make_right_extension(const Coring& c, const Coring& d,
                                    std::vector<Mat> right_action, const Mat& coact_lift) {
  ExtensionParts parts = build_extension(c, d, std::move(right_action), coact_lift);
  if (!parts.extension) {
    throw Error(parts.failure_kind, "right extension rejected: " + parts.verdict.summary());
  }
  return std::move(*parts.extension);
}

ExtensionData tensor_extension_data(const Coring& c, const Coring& d,
                                    const std::vector<Mat>& right_action, const Mat& coact_lift,
                                    const Coring& c2, const Coring& d2,
                                    const std::vector<Mat>& right_action2,
                                    const Mat& coact_lift2) {
  Bimodule x = with_right_action(c.carrier(), d.base(), right_action);
  Bimodule x2 = with_right_action(c2.carrier(), d2.base(), right_action2);
  PresentedTensor xd = tensor_over_alg(x, d.carrier());
  PresentedTensor xd2 = tensor_over_alg(x2, d2.carrier());
  EtaMap eta = eta_map(xd, xd2);
  Mat lift = kron(coact_lift * xd.project(), coact_lift2 * xd2.project()) * eta.map *
             eta.target.lift();
  std::vector<Mat> action;
  for (const Mat& r : right_action) {
    for (const Mat& r2 : right_action2) action.push_back(kron(r, r2));
  }
  return ExtensionData{tensor_coring(c, c2), tensor_coring(d, d2), std::move(action),
                       std::move(lift)};
}

RightExtension tensor_extension(const RightExtension& e, const RightExtension& e2) {
  require_same_field(e.c.field(), e2.c.field(), "tensor_extension");
  ExtensionData data = tensor_extension_data(
      e.c, e.d, e.carrier.right_action, e.coaction.coaction * e.coaction.tens.lift(), e2.c, e2.d,
      e2.carrier.right_action, e2.coaction.coaction * e2.coaction.tens.lift());
  return make_right_extension(data.c, data.d, std::move(data.right_action), data.coact_lift);
}

BaseRingExtension base_ring_extension(const CoringsMorphism& m) {
  Verdict v = check_corings_morphism(m);
  if (!v) throw Error(ErrorKind::kInvalidMorphism, "base ring extension: " + v.summary());
  const Coring& c = m.source;
  const Coring& d = m.target;
  const Field field = c.field();
  const AlgebraPtr& b = d.base();
  const Bimodule regular_b = regular_bimodule(b);
  PresentedTensor inner =
      tensor_over_alg(restrict_scalars(regular_b, nullptr, &m.varphi), c.carrier());
  PresentedTensor outer =
      tensor_over_alg(inner.result, restrict_scalars(regular_b, &m.varphi, nullptr));
  const std::size_t db = b->dim(), dc = c.dim();
  // Triple b_i (x) c_j (x) b_l in flat coordinates, projected onto the carrier.
  Mat full = kron(inner.project(), Mat::identity(field, db)) * outer.project();
  const Mat& unit = b->unit();
  auto with_unit_right = [&](std::size_t i, std::size_t s) {
    Mat row(field, 1, outer.dim());
    for (const auto& u : unit.row(0)) {
      row = row + full.row_mat((i * dc + s) * db + u.col).scaled(u.value);
    }
    return row;
  };
  auto with_unit_left = [&](std::size_t t, std::size_t l) {
    Mat row(field, 1, outer.dim());
    for (const auto& u : unit.row(0)) {
      row = row + full.row_mat((u.col * dc + t) * db + l).scaled(u.value);
    }
    return row;
  };

  const std::size_t dx = outer.dim();
  Mat comul_lift(field, dx, dx * dx);
  Mat counit(field, dx, db);
  Mat coact_lift(field, dx, dx * d.dim());
  const auto& reps = outer.quot.rep_columns();
  const auto& inner_reps = inner.quot.rep_columns();
  const Mat c_counit = c.counit() * m.varphi.map;
  for (std::size_t r = 0; r < dx; ++r) {
    const std::size_t l = reps[r] % db;
    const std::size_t flat = inner_reps[reps[r] / db];
    const std::size_t i = flat / dc, j = flat % dc;
    Mat delta(field, 1, dx * dx);
    Mat coact(field, 1, dx * d.dim());
    for (const auto& e : c.comul_lift().row(j)) {
      const std::size_t s = e.col / dc, t = e.col % dc;
      Mat left = with_unit_right(i, s);
      delta = delta + kron(left, with_unit_left(t, l)).scaled(e.value);
      coact = coact + kron(left, m.phi.row_mat(t) * d.carrier().right_action[l]).scaled(e.value);
    }
    comul_lift.set_row(r, delta.row(0));
    coact_lift.set_row(r, coact.row(0));
    Mat bi = Mat::unit_row(field, db, i);
    Mat bl = Mat::unit_row(field, db, l);
    counit.set_row(r, b->multiply(b->multiply(bi, c_counit.row_mat(j)), bl).row(0));
  }
  Coring x(outer.result, std::move(comul_lift), std::move(counit),
           b->name() + "⊗" + c.name() + "⊗" + b->name());
  RightExtension ext = make_right_extension(x, d, x.carrier().right_action, coact_lift);
  return BaseRingExtension{std::move(inner), std::move(outer), std::move(x), std::move(ext)};
}

Mat base_extension_collapse(const BaseRingExtension& ext, const Coring& c) {
  const Bimodule& cc = c.carrier();
  const std::size_t db = ext.outer.right_factor.dim, dc = c.dim();
  require_dims(cc.left->dim() == db, "collapse needs the identity base extension");
  const auto& reps = ext.outer.quot.rep_columns();
  const auto& inner_reps = ext.inner.quot.rep_columns();
  Mat out(c.field(), reps.size(), dc);
  for (std::size_t r = 0; r < reps.size(); ++r) {
    const std::size_t l = reps[r] % db;
    const std::size_t flat = inner_reps[reps[r] / db];
    const std::size_t i = flat / dc, j = flat % dc;
    out.set_row(r, (Mat::unit_row(c.field(), dc, j) * cc.left_action[i] * cc.right_action[l])
                       .row(0));
  }
  if (!is_invertible(out)) {
    throw Error(ErrorKind::kIsoFailure, "B (x)_A C (x)_A B -> C is not bijective");
  }
  return out;
}

Coring unit_coring(Field field) {
  return Coring(regular_bimodule(ground_algebra(field)), Mat::identity(field, 1),
                Mat::identity(field, 1), "k");
}

Coring trivial_coring(const AlgebraPtr& a) {
  const Field& field = a->field();
  const std::size_t d = a->dim();
  Mat lift(field, d, d * d);
  for (std::size_t i = 0; i < d; ++i) {
    for (const auto& u : a->unit().row(0)) lift.set(i, i * d + u.col, u.value);
  }
  return Coring(regular_bimodule(a), std::move(lift), Mat::identity(field, d), a->name());
}

Coring matrix_coalgebra(std::size_t n, Field field) {
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      labels.push_back("e_" + std::to_string(i + 1) + std::to_string(j + 1));
    }
  }
  const std::size_t d = n * n;
  Mat lift(field, d, d * d);
  Mat counit(field, d, 1);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t t = 0; t < n; ++t) lift.set(i * n + j, (i * n + t) * d + (t * n + j), 1);
    }
    counit.set(i * n + i, 0, 1);
  }
  return Coring(k_carrier(field, d, std::move(labels)), std::move(lift), std::move(counit),
                "M" + std::to_string(n) + "^c");
}

Coring grouplike_coalgebra(std::size_t n, Field field) {
  Mat lift(field, n, n * n);
  Mat counit(field, n, 1);
  for (std::size_t i = 0; i < n; ++i) {
    lift.set(i, i * n + i, 1);
    counit.set(i, 0, 1);
  }
  return Coring(k_carrier(field, n, default_labels("g", n)), std::move(lift), std::move(counit),
                "k[G" + std::to_string(n) + "]");
}

Coring sweedler_coring(const AlgebraMorphism& inclusion) {
  if (rank(inclusion.map) != inclusion.source->dim()) {
    throw Error(ErrorKind::kNotInjective, "sweedler coring needs an injective algebra map");
  }
  const AlgebraPtr& a = inclusion.target;
  const Field& field = a->field();
  const std::size_t da = a->dim();
  Bimodule regular = regular_bimodule(a);
  PresentedTensor t = tensor_over_alg(restrict_scalars(regular, nullptr, &inclusion),
                                      restrict_scalars(regular, &inclusion, nullptr));
  const std::size_t dt = t.dim();
  auto pure = [&](const Mat& x, const Mat& y) { return kron(x, y) * t.project(); };
  Mat lift(field, dt, dt * dt);
  Mat counit(field, dt, da);
  const auto& reps = t.quot.rep_columns();
  for (std::size_t r = 0; r < dt; ++r) {
    Mat ai = Mat::unit_row(field, da, reps[r] / da);
    Mat al = Mat::unit_row(field, da, reps[r] % da);
    lift.set_row(r, kron(pure(ai, a->unit()), pure(a->unit(), al)).row(0));
    counit.set_row(r, a->multiply(ai, al).row(0));
  }
  return Coring(t.result, std::move(lift), std::move(counit),
                a->name() + "⊗_" + inclusion.source->name() + a->name());
}

}  // namespace corings
