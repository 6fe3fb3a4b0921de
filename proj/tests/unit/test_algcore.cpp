#include <doctest.h>

#include "fixtures.hpp"

using namespace corings;
using namespace corings::testing;

namespace {

// Two-dimensional algebra on {a_0, a_1} with the given a_1 * a_1 and unit.
AlgebraPtr two_dim(const Field& f, std::initializer_list<long> x_squared,
                   std::initializer_list<long> unit) {
  std::vector<std::vector<Mat>> p(2);
  p[0] = {row(f, {1, 0}), row(f, {0, 1})};
  p[1] = {row(f, {0, 1}), row(f, x_squared)};
  return std::make_shared<const Algebra>(f, p, row(f, unit));
}

}  // namespace

TEST_CASE("dual numbers pass the algebra axioms") {
  for (const Field& f : fields()) {
    AlgebraPtr d = dual_numbers(f);
    CHECK(d->dim() == 2);
    CHECK(d->product(1, 1).is_zero());
    CHECK(check_algebra(*d).ok());
  }
  CHECK(check_algebra(*ground_algebra(q())).ok());
}

TEST_CASE("a wrong unit vector fails the unit law at the first basis element") {
  AlgebraPtr a = two_dim(q(), {1, 0}, {0, 1});
  Verdict v = check_algebra(*a);
  CHECK(v.failed_condition() == "unit");
  CHECK(v.witness() == a->labels()[0]);
  CHECK(check_algebra(*two_dim(q(), {1, 0}, {1, 0})).ok());
}

TEST_CASE("non-associative structure constants are caught") {
  Field f = q();
  // a_1 a_1 = a_2, a_2 a_1 = a_1 and everything else zero except the unit.
  std::vector<std::vector<Mat>> p(3, std::vector<Mat>(3, Mat(f, 1, 3)));
  for (std::size_t i = 0; i < 3; ++i) {
    p[0][i] = Mat::unit_row(f, 3, i);
    p[i][0] = Mat::unit_row(f, 3, i);
  }
  p[1][1] = Mat::unit_row(f, 3, 2);
  p[2][1] = Mat::unit_row(f, 3, 1);
  Algebra a(f, p, Mat::unit_row(f, 3, 0));
  CHECK(check_algebra(a).failed_condition() == "associativity");
}

TEST_CASE("tensor of dual numbers") {
  Field f = f5();
  AlgebraPtr d = dual_numbers(f);
  AlgebraPtr t = tensor_algebra(d, d);
  REQUIRE(t->dim() == 4);
  // Basis 1⊗1, 1⊗y, x⊗1, x⊗y at indices 0..3.
  CHECK(t->product(2, 1) == Mat::unit_row(f, 4, 3));
  CHECK(t->product(3, 3).is_zero());
  CHECK(t->product(1, 1).is_zero());
  CHECK(t->unit() == Mat::unit_row(f, 4, 0));
  CHECK(check_algebra(*t).ok());
}

TEST_CASE("tensor of group algebras is the group algebra of the product") {
  Field f = Field::prime(2);
  std::vector<std::vector<std::size_t>> c2 = {{0, 1}, {1, 0}};
  AlgebraPtr g = group_algebra(c2, f);
  AlgebraPtr t = tensor_algebra(g, g);
  // C2 x C2 with (a, b) at index 2a + b.
  std::vector<std::vector<std::size_t>> klein(4, std::vector<std::size_t>(4));
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) klein[i][j] = ((i >> 1) ^ (j >> 1)) << 1 | ((i ^ j) & 1);
  AlgebraPtr expected = group_algebra(klein, f);
  CHECK(same_algebra(t, expected));
}

TEST_CASE("unit coherence of the tensor algebra") {
  for (const Field& f : fields()) {
    AlgebraPtr k = ground_algebra(f);
    for (AlgebraPtr a : {dual_numbers(f), matrix_algebra(2, f)}) {
      CHECK(same_algebra(tensor_algebra(k, a), a));
      CHECK(same_algebra(tensor_algebra(a, k), a));
    }
  }
}

TEST_CASE("algebra morphisms out of the dual numbers") {
  Field f = q();
  AlgebraPtr d = dual_numbers(f);
  AlgebraPtr k = ground_algebra(f);
  CHECK(check_algebra_morphism(identity_morphism(d)).ok());
  CHECK(check_algebra_morphism({d, k, dense(f, {{1}, {0}})}).ok());
  Verdict bad = check_algebra_morphism({d, k, dense(f, {{1}, {1}})});
  CHECK(bad.failed_condition() == "multiplicativity");
  CHECK(bad.witness() == "(x,x)");
  CHECK_THROWS_AS(check_algebra_morphism({d, k, dense(f, {{1, 0}, {0, 1}})}), Error);
}

TEST_CASE("property: tensor of morphisms is a morphism") {
  for (const Field& f : fields()) {
    AlgebraPtr d = dual_numbers(f);
    AlgebraPtr k = ground_algebra(f);
    AlgebraPtr m2 = matrix_algebra(2, f);
    std::vector<AlgebraMorphism> ms = {identity_morphism(d), {d, k, dense(f, {{1}, {0}})},
                                       unit_morphism(d), unit_morphism(m2),
                                       identity_morphism(m2)};
    for (const auto& a : ms)
      for (const auto& b : ms) {
        REQUIRE(check_algebra_morphism(a).ok());
        AlgebraMorphism t = tensor_morphisms(a, b);
        CHECK(t.map == kron(a.map, b.map));
        CHECK(check_algebra_morphism(t).ok());
      }
  }
}

TEST_CASE("property: fixture algebras satisfy the axioms") {
  for (const Field& f : fields()) {
    CHECK(check_algebra(*matrix_algebra(2, f)).ok());
    CHECK(check_algebra(*matrix_algebra(3, f)).ok());
    CHECK(check_algebra(*group_algebra({{0, 1, 2}, {1, 2, 0}, {2, 0, 1}}, f)).ok());
    CHECK(check_algebra(*tensor_algebra(matrix_algebra(2, f), dual_numbers(f))).ok());
  }
}

TEST_CASE("composition of algebra morphisms") {
  Field f = q();
  AlgebraPtr d = dual_numbers(f);
  AlgebraMorphism u = unit_morphism(d);
  AlgebraMorphism aug{d, ground_algebra(f), dense(f, {{1}, {0}})};
  AlgebraMorphism c = compose(aug, u);
  CHECK(c.map == Mat::identity(f, 1));
  CHECK_THROWS_AS(compose(u, u), Error);
}
