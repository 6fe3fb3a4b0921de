#include <doctest.h>

#include "fixtures.hpp"

using namespace corings;
using namespace corings::testing;

namespace {

Mat bent_coaction(const ExtMorphism& m) {
  Mat lift = m.coact_lift;
  lift.set(0, lift.cols() - 1, lift.at(0, lift.cols() - 1) + 1);
  return lift;
}

}  // namespace

TEST_CASE("ext morphism examples") {
  for (const Field& f : fields()) {
    for (const auto& [name, c] : fixture_family(f)) {
      CAPTURE(name);
      CHECK(check_ext_morphism(ext_identity(c)).ok());
      CHECK(check_ext_morphism(ext_to_unit(c)).ok());
      CHECK(check_ext_morphism(ext_to_trivial(c)).ok());
      ExtMorphism zero = ext_to_unit(c);
      zero.coact_lift = Mat(f, c.dim(), c.dim());
      CHECK(check_ext_morphism(zero).failed_condition() == "coaction");
    }
  }
}

TEST_CASE("identity morphisms") {
  Field f = f5();
  Coring m = matrix_coalgebra(2, f);
  ExtMorphism id = ext_identity(m);
  Mat expected(f, 1, 16);
  expected.set(0, 0, 1);
  expected.set(0, 6, 1);
  CHECK(id.coact_lift.row_mat(0) == expected);
  Coring t = trivial_coring(dual_numbers(f));
  ExtMorphism idt = ext_identity(t);
  CHECK(idt.action_matrix().rows() == 4);
  CHECK(is_invertible(idt.coaction()));
  ExtMorphism idk = ext_identity(unit_coring(f));
  CHECK(idk.coact_lift == Mat::identity(f, 1));
}

TEST_CASE("unit laws of bullet composition") {
  for (const Field& f : fields()) {
    Corpus c = corpus(f);
    for (const ExtMorphism& m : c.ext) {
      CHECK(ext_equal(ext_compose(m, ext_identity(m.source)), m));
      CHECK(ext_equal(ext_compose(ext_identity(m.target), m), m));
    }
    Coring mc = matrix_coalgebra(2, f);
    ExtMorphism u = ext_compose(ext_to_unit(mc), ext_identity(mc));
    CHECK(ext_equal(u, ext_to_unit(mc)));
  }
}

TEST_CASE("associativity on three-chains") {
  for (const Field& f : fields()) {
    Corpus c = corpus(f);
    std::size_t chains = 0;
    for (const auto& h : c.ext)
      for (const auto& g : c.ext)
        for (const auto& m : c.ext) {
          if (!same_coring(m.target, g.source) || !same_coring(g.target, h.source)) continue;
          ++chains;
          ExtMorphism left = ext_compose(h, ext_compose(g, m));
          ExtMorphism right = ext_compose(ext_compose(h, g), m);
          CHECK(left.coact_lift == right.coact_lift);
          CHECK(left.action_matrix() == right.action_matrix());
        }
    CHECK(chains >= 3);
  }
}

TEST_CASE("cotensor route agrees with the explicit formula") {
  for (const Field& f : fields()) {
    Corpus c = corpus(f);
    for (const auto& [g, m] : composable_pairs(c.ext)) {
      ExtMorphism a = ext_compose(g, m);
      ExtMorphism b = ext_compose_via_cotensor(g, m);
      CHECK(a.coact_lift == b.coact_lift);
      CHECK(ext_equal(a, b));
    }
    Coring mc = matrix_coalgebra(2, f);
    ExtMorphism id = ext_identity(mc);
    CHECK(ext_compose_via_cotensor(id, id).coaction() == mc.comul());
  }
}

TEST_CASE("composition checks its operands") {
  Field f = q();
  Coring m = matrix_coalgebra(2, f);
  Coring g = grouplike_coalgebra(2, f);
  try {
    ext_compose(ext_identity(m), ext_identity(g));
    FAIL("composed mismatched morphisms");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::kObjectMismatch);
  }
}

TEST_CASE("tensor of ext morphisms") {
  for (const Field& f : fields()) {
    Coring m = matrix_coalgebra(2, f);
    Coring g = grouplike_coalgebra(2, f);
    ExtMorphism t = ext_tensor_morphisms(ext_identity(m), ext_identity(g));
    CHECK(ext_equal(t, ext_identity(tensor_coring(m, g))));
    ExtMorphism u = ext_tensor_morphisms(ext_to_unit(m), ext_to_unit(g));
    CHECK(u.target.dim() == 1);
    CHECK(check_ext_morphism(u).ok());
  }
}

TEST_CASE("property: tensor commutes with composition") {
  for (const Field& f : fields()) {
    Corpus c = corpus(f);
    auto pairs = composable_pairs(c.ext);
    for (std::size_t i = 0; i < pairs.size(); i += 3) {
      for (std::size_t j = 1; j < pairs.size(); j += 4) {
        const auto& [g, m] = pairs[i];
        const auto& [g2, m2] = pairs[j];
        ExtMorphism a = ext_compose(ext_tensor_morphisms(g, g2), ext_tensor_morphisms(m, m2));
        ExtMorphism b = ext_tensor_morphisms(ext_compose(g, m), ext_compose(g2, m2));
        CHECK(ext_equal(a, b));
      }
    }
  }
}

TEST_CASE("monoidal structure of the extension category") {
  for (const Field& f : fields()) {
    Corpus c = corpus(f);
    ExtFamily fam{c.objects, c.ext, composable_pairs(c.ext), {{0, 1, 2}, {1, 2, 3}}};
    Verdict v = verify_ext_monoidal(fam);
    CHECK(v.ok());
    CHECK(v.conditions().size() == 4);
  }
  Coring k = unit_coring(f5());
  ExtFamily single{{k}, {ext_identity(k)}, {}, {{0, 0, 0}}};
  single.composable = composable_pairs(single.morphisms);
  CHECK(verify_ext_monoidal(single).ok());
}

TEST_CASE("a corrupted morphism breaks interchange") {
  Field f = f5();
  Corpus c = corpus(f);
  c.ext[1].coact_lift = bent_coaction(c.ext[1]);
  ExtFamily fam{c.objects, c.ext, composable_pairs(c.ext), {}};
  Verdict v = verify_ext_monoidal(fam);
  CHECK(v.failed_condition() == "interchange");
  CHECK(!v.witness().empty());
}

TEST_CASE("corings morphism examples") {
  for (const Field& f : fields()) {
    Coring m = matrix_coalgebra(2, f);
    CHECK(check_corings_morphism(corings_identity(m)).ok());
    for (const auto& [name, c] : fixture_family(f)) {
      CoringsMorphism eps{c, trivial_coring(c.base()), c.counit(), identity_morphism(c.base()), {}};
      CHECK(check_corings_morphism(eps).ok());
    }
    Coring g2 = grouplike_coalgebra(2, f);
    Coring g4 = tensor_coring(g2, g2);
    CoringsMorphism incl{g2, g4, dense(f, {{1, 0, 0, 0}, {0, 0, 0, 1}}),
                         identity_morphism(g2.base()), {}};
    CHECK(check_corings_morphism(incl).ok());
    CoringsMorphism eps4{g4, unit_coring(f), g4.counit(), identity_morphism(g4.base()), {}};
    CoringsMorphism comp = corings_compose(eps4, incl);
    CHECK(comp.phi == g2.counit());
    CHECK(corings_equal(corings_compose(corings_identity(g4), incl), incl));

    CoringsMorphism bad{g2, g4, dense(f, {{1, 0, 0, 0}, {-1, 0, 0, 2}}),
                        identity_morphism(g2.base()), {}};
    CHECK(check_corings_morphism(bad).failed_condition() == "comultiplication");
  }
}

TEST_CASE("corings morphisms compose associatively") {
  Field f = q();
  Corpus c = corpus(f);
  for (const auto& h : c.cor)
    for (const auto& g : c.cor)
      for (const auto& m : c.cor) {
        if (!same_coring(m.target, g.source) || !same_coring(g.target, h.source)) continue;
        CHECK(corings_equal(corings_compose(h, corings_compose(g, m)),
                            corings_compose(corings_compose(h, g), m)));
      }
}

TEST_CASE("tensor of corings morphisms") {
  for (const Field& f : fields()) {
    Corpus c = corpus(f);
    for (const auto& a : c.cor)
      for (const auto& b : c.cor) {
        CoringsMorphism t = corings_tensor_morphisms(a, b);
        CHECK(check_corings_morphism(t).ok());
        CHECK(t.phi == kron(a.phi, b.phi));
      }
    Coring m = matrix_coalgebra(2, f);
    Coring g = grouplike_coalgebra(2, f);
    CoringsMorphism ids = corings_tensor_morphisms(corings_identity(m), corings_identity(g));
    CHECK(corings_equal(ids, corings_identity(tensor_coring(m, g))));
    CoringsMorphism e1{m, unit_coring(f), m.counit(), identity_morphism(m.base()), {}};
    CoringsMorphism e2{g, unit_coring(f), g.counit(), identity_morphism(g.base()), {}};
    CoringsMorphism e12 = corings_tensor_morphisms(e1, e2);
    CHECK(e12.phi == tensor_coring(m, g).counit());
    CHECK(e12.target.dim() == 1);
  }
}

TEST_CASE("monoidal structure of the corings category") {
  for (const Field& f : fields()) {
    Corpus c = corpus(f);
    CoringsFamily fam{c.objects, c.cor, composable_pairs(c.cor), {{0, 1, 2}, {1, 2, 3}}};
    CHECK(verify_corings_monoidal(fam).ok());
  }
}

TEST_CASE("unit and associator isomorphisms") {
  Field f = f5();
  Coring m = matrix_coalgebra(2, f);
  Coring g = grouplike_coalgebra(2, f);
  CoringsMorphism l = left_unit_iso(m);
  CHECK(check_corings_morphism(l).ok());
  CHECK(corings_equal(corings_compose(inverse_iso(l), l), corings_identity(l.source)));
  CHECK(check_corings_morphism(right_unit_iso(g)).ok());
  CoringsMorphism a = associator_iso(m, g, m);
  CHECK(check_corings_morphism(a).ok());
  CHECK(check_corings_morphism(inverse_iso(a)).ok());
  CHECK(check_ext_morphism(ext_from_coring_iso(a)).ok());
}

TEST_CASE("corings morphisms as extension morphisms") {
  for (const Field& f : fields()) {
    Corpus c = corpus(f);
    for (const auto& m : c.cor) {
      CAPTURE(m.name);
      ExtMorphism e = corings_to_ext(m);
      CHECK(check_ext_morphism(e).ok());
      CHECK(same_coring(e.target, m.target));
    }
    AlgebraPtr d = dual_numbers(f);
    Coring s = sweedler_coring(unit_morphism(d));
    AlgebraMorphism aug{d, ground_algebra(f), dense(f, {{1}, {0}})};
    ExtMorphism collapse = corings_to_ext({s, unit_coring(f), s.counit() * aug.map, aug, {}});
    CHECK(collapse.source.dim() == 1);
    CHECK(check_ext_morphism(collapse).ok());
  }
}

TEST_CASE("identity corings morphism gives the identity extension up to the collapse") {
  for (const Field& f : fields()) {
    std::vector<NamedCoring> all = fixture_family(f);
    all.push_back({"sweedler", sweedler_coring(unit_morphism(dual_numbers(f)))});
    for (const auto& [name, c] : all) {
      CAPTURE(name);
      CoringsMorphism id = corings_identity(c);
      ExtMorphism e = corings_to_ext(id);
      Mat p = base_extension_collapse(base_ring_extension(id), c);
      Mat pinv = inverse(p);
      ExtMorphism target = ext_identity(c);
      for (std::size_t j = 0; j < e.right_action.size(); ++j) {
        CHECK(pinv * e.right_action[j] * p == target.right_action[j]);
      }
      PresentedTensor ed = tensor_over_alg(e.carrier(), e.target.carrier());
      Mat moved = pinv * e.coaction() * induced_map(p, Mat::identity(f, c.dim()), ed, c.square());
      CHECK(moved == target.coaction());
    }
  }
}
