#include <doctest.h>

#include "fixtures.hpp"

using namespace corings;
using namespace corings::testing;

namespace {

std::vector<Mat> action_of(const Coring& c) { return c.carrier().right_action; }

}  // namespace

TEST_CASE("fixture corings") {
  for (const Field& f : fields()) {
    Coring k = unit_coring(f);
    CHECK(k.dim() == 1);
    CHECK(same_coring(trivial_coring(ground_algebra(f)), k));
    CHECK(check_coring(k).ok());

    Coring m = matrix_coalgebra(2, f);
    CHECK(m.dim() == 4);
    CHECK(check_coring(m).ok());

    AlgebraPtr d = dual_numbers(f);
    Coring s = sweedler_coring(unit_morphism(d));
    CHECK(s.dim() == 4);
    CHECK(s.base()->dim() == 2);
    CHECK(check_coring(s).ok());

    AlgebraMorphism aug{d, ground_algebra(f), dense(f, {{1}, {0}})};
    try {
      sweedler_coring(aug);
      FAIL("accepted a non-injective map");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::kNotInjective);
    }
  }
}

TEST_CASE("unit coring is a unit for the tensor product") {
  for (const Field& f : fields()) {
    Coring k = unit_coring(f);
    for (const auto& [name, c] : fixture_family(f)) {
      CAPTURE(name);
      CHECK(same_coring(tensor_coring(k, c), c));
      CHECK(same_coring(tensor_coring(c, k), c));
    }
  }
}

TEST_CASE("tensor of grouplike coalgebras is grouplike") {
  Field f = q();
  Coring g = grouplike_coalgebra(2, f);
  Coring t = tensor_coring(g, g);
  REQUIRE(t.dim() == 4);
  for (std::size_t i = 0; i < 4; ++i) {
    Mat expected(f, 1, 16);
    expected.set(0, i * 4 + i, 1);
    CHECK(t.comul_lift().row_mat(i) == expected);
    CHECK(t.counit().at(i, 0) == 1);
  }
  CHECK(check_coring(t).ok());
}

TEST_CASE("tensor square of the matrix coalgebra") {
  Coring c = matrix_coalgebra(2, f5());
  Coring t = tensor_coring(c, c);
  CHECK(t.dim() == 16);
  CHECK(check_coring(t).ok());
  CHECK(t.counit() == kron(c.counit(), c.counit()));
}

TEST_CASE("property: tensor corings over the fixture family") {
  for (const Field& f : fields()) {
    auto family = fixture_family(f);
    family.push_back({"sweedler", sweedler_coring(unit_morphism(dual_numbers(f)))});
    for (const auto& [n1, c1] : family) {
      for (const auto& [n2, c2] : family) {
        CAPTURE(n1);
        CAPTURE(n2);
        Coring t = tensor_coring(c1, c2);
        CHECK(t.dim() == c1.dim() * c2.dim());
        CHECK(check_coring(t).ok());
        CHECK(t.counit() == kron(c1.counit(), c2.counit()));
      }
    }
  }
}

TEST_CASE("right extension examples") {
  for (const Field& f : fields()) {
    for (const auto& [name, c] : fixture_family(f)) {
      CAPTURE(name);
      CHECK(validate_right_extension(c, c, action_of(c), c.comul_lift()).ok());
      Coring triv = trivial_coring(c.base());
      // c -> c ⊗ 1
      Mat to_triv(f, c.dim(), c.dim() * triv.dim());
      for (std::size_t i = 0; i < c.dim(); ++i) {
        for (const Entry& e : c.base()->unit().row(0)) to_triv.set(i, i * triv.dim() + e.col, e.value);
      }
      CHECK(validate_right_extension(c, triv, action_of(c), to_triv).ok());
      Coring k = unit_coring(f);
      CHECK(validate_right_extension(c, k, {Mat::identity(f, c.dim())}, Mat::identity(f, c.dim()))
                .ok());
    }
  }
}

TEST_CASE("invalid extension data is rejected with a named kind") {
  Field f = f5();
  Coring c = matrix_coalgebra(2, f);
  Coring k = unit_coring(f);
  try {
    make_right_extension(c, k, {Mat::identity(f, 4)}, Mat(f, 4, 4));
    FAIL("accepted a zero coaction");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::kNotACoaction);
  }
  Mat bent = Mat::identity(f, 4);
  bent.set(0, 1, 1);
  Verdict v = validate_right_extension(c, k, {Mat::identity(f, 4)}, bent);
  CHECK(!v.ok());
}

TEST_CASE("tensor of regular extensions is regular") {
  for (const Field& f : fields()) {
    for (const auto& [n1, c1] : fixture_family(f)) {
      for (const auto& [n2, c2] : fixture_family(f)) {
        RightExtension e1 = make_right_extension(c1, c1, action_of(c1), c1.comul_lift());
        RightExtension e2 = make_right_extension(c2, c2, action_of(c2), c2.comul_lift());
        RightExtension t = tensor_extension(e1, e2);
        Coring tc = tensor_coring(c1, c2);
        CHECK(same_coring(t.c, tc));
        CHECK(same_coring(t.d, tc));
        CHECK(t.coaction.coaction == regular_right_comodule(tc).coaction);
      }
    }
  }
}

TEST_CASE("tensor of extensions by the unit coring") {
  Field f = q();
  Coring c = matrix_coalgebra(2, f);
  Coring k = unit_coring(f);
  RightExtension e = make_right_extension(c, k, {Mat::identity(f, 4)}, Mat::identity(f, 4));
  RightExtension t = tensor_extension(e, e);
  CHECK(t.d.dim() == 1);
  CHECK(t.c.dim() == 16);
  CHECK(t.coaction.coaction == Mat::identity(f, 16));
}

TEST_CASE("mixed grouplike and matrix extension over F_5") {
  Field f = f5();
  Coring g = grouplike_coalgebra(2, f);
  Coring m = matrix_coalgebra(2, f);
  RightExtension eg = make_right_extension(g, g, action_of(g), g.comul_lift());
  RightExtension em = make_right_extension(m, unit_coring(f), {Mat::identity(f, 4)},
                                           Mat::identity(f, 4));
  RightExtension t = tensor_extension(eg, em);
  ExtensionData data = tensor_extension_data(g, g, action_of(g), g.comul_lift(), m,
                                             unit_coring(f), {Mat::identity(f, 4)},
                                             Mat::identity(f, 4));
  CHECK(validate_right_extension(data.c, data.d, data.right_action, data.coact_lift).ok());
  CHECK(t.c.dim() == 8);
  CHECK(t.d.dim() == 2);
}

TEST_CASE("property: tensor extensions validate") {
  for (const Field& f : fields()) {
    std::vector<RightExtension> exts;
    for (const auto& [name, c] : fixture_family(f)) {
      exts.push_back(make_right_extension(c, c, action_of(c), c.comul_lift()));
      exts.push_back(make_right_extension(c, unit_coring(f), {Mat::identity(f, c.dim())},
                                          Mat::identity(f, c.dim())));
    }
    for (const auto& a : exts) {
      for (const auto& b : exts) {
        ExtensionData d = tensor_extension_data(a.c, a.d, a.carrier.right_action,
                                                a.coaction.coaction * a.coaction.tens.lift(),
                                                b.c, b.d, b.carrier.right_action,
                                                b.coaction.coaction * b.coaction.tens.lift());
        CHECK(validate_right_extension(d.c, d.d, d.right_action, d.coact_lift).ok());
      }
    }
  }
}

TEST_CASE("base ring extension along the identity collapses to the coring") {
  for (const Field& f : fields()) {
    std::vector<NamedCoring> all = fixture_family(f);
    all.push_back({"sweedler", sweedler_coring(unit_morphism(dual_numbers(f)))});
    for (const auto& [name, c] : all) {
      CAPTURE(name);
      BaseRingExtension bre = base_ring_extension(corings_identity(c));
      CHECK(check_coring(bre.coring).ok());
      Mat p = base_extension_collapse(bre, c);
      CHECK(is_invertible(p));
      // p carries the coaction onto Δ.
      const RightComodule& rho = bre.extension.coaction;
      Mat moved = rho.coaction * induced_map(p, Mat::identity(f, c.dim()), rho.tens, c.square());
      CHECK(moved == p * c.comul());
      CHECK(bre.coring.counit() == p * c.counit());
    }
  }
}

TEST_CASE("base ring extension of the dual numbers collapse") {
  for (const Field& f : fields()) {
    AlgebraPtr d = dual_numbers(f);
    Coring s = sweedler_coring(unit_morphism(d));
    Coring k = unit_coring(f);
    AlgebraMorphism aug{d, ground_algebra(f), dense(f, {{1}, {0}})};
    CoringsMorphism m{s, k, s.counit() * aug.map, aug, "collapse"};
    REQUIRE(check_corings_morphism(m).ok());
    BaseRingExtension bre = base_ring_extension(m);
    CHECK(bre.coring.dim() == 1);
    CHECK(check_coring(bre.coring).ok());
  }
}

TEST_CASE("base ring extension along a counit") {
  for (const Field& f : fields()) {
    for (const auto& [name, c] : fixture_family(f)) {
      CoringsMorphism eps{c, trivial_coring(c.base()), c.counit(), identity_morphism(c.base()), {}};
      REQUIRE(check_corings_morphism(eps).ok());
      BaseRingExtension bre = base_ring_extension(eps);
      CHECK(check_coring(bre.coring).ok());
      CHECK(validate_right_extension(bre.extension.c, bre.extension.d,
                                     bre.extension.carrier.right_action,
                                     bre.extension.coaction.coaction *
                                         bre.extension.coaction.tens.lift())
                .ok());
    }
  }
}

TEST_CASE("base ring extension rejects invalid morphisms") {
  Field f = q();
  Coring c = matrix_coalgebra(2, f);
  CoringsMorphism bad{c, c, Mat(f, 4, 4), identity_morphism(c.base()), {}};
  try {
    base_ring_extension(bad);
    FAIL("accepted an invalid morphism");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::kInvalidMorphism);
  }
}
