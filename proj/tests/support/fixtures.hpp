#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include <corings/corings.hpp>

namespace corings::testing {

inline Field q() { return Field::rationals(); }
inline Field f5() { return Field::prime(5); }

inline Mat dense(const Field& field, std::initializer_list<std::initializer_list<long>> rows) {
  std::vector<std::vector<Scalar>> out;
  std::size_t cols = 0;
  for (const auto& r : rows) {
    std::vector<Scalar> row;
    for (long v : r) row.push_back(field.reduce(Scalar(v)));
    cols = row.size();
    out.push_back(std::move(row));
  }
  return Mat::from_dense(field, out, cols);
}

inline Mat row(const Field& field, std::initializer_list<long> values) {
  return dense(field, {values});
}

/// Naive dense product, kept apart from Mat::operator*.
inline std::vector<std::vector<Scalar>> naive_product(const Mat& a, const Mat& b) {
  std::vector<std::vector<Scalar>> out(a.rows(), std::vector<Scalar>(b.cols(), Scalar(0)));
  auto da = a.dense();
  auto db = b.dense();
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j)
      for (std::size_t t = 0; t < a.cols(); ++t) out[i][j] += da[i][t] * db[t][j];
  for (auto& r : out)
    for (auto& x : r) a.field().reduce_in_place(x);
  return out;
}

struct NamedCoring {
  std::string name;
  Coring coring;
};

/// trivial(k), regular dual numbers, matrix coalgebra, grouplike.
inline std::vector<NamedCoring> fixture_family(const Field& field) {
  return {
      {"unit", unit_coring(field)},
      {"dual", trivial_coring(dual_numbers(field))},
      {"matrix", matrix_coalgebra(2, field)},
      {"grouplike", grouplike_coalgebra(2, field)},
  };
}

inline std::vector<Field> fields() { return {q(), f5()}; }

struct Corpus {
  std::vector<Coring> objects;
  std::vector<ExtMorphism> ext;
  std::vector<CoringsMorphism> cor;
};

// Objects C2 = matrix, G2 = grouplike, TD = trivial dual numbers and k, with
// identities, maps to k, maps to trivial corings and the swap of G2.
inline Corpus corpus(const Field& f) {
  Corpus out;
  Coring m = matrix_coalgebra(2, f);
  Coring g = grouplike_coalgebra(2, f);
  Coring td = trivial_coring(dual_numbers(f));
  Coring k = unit_coring(f);
  out.objects = {m, g, td, k};
  for (const Coring& c : out.objects) {
    out.ext.push_back(ext_identity(c));
    out.ext.push_back(ext_to_unit(c));
    out.cor.push_back(corings_identity(c));
  }
  out.ext.push_back(ext_to_trivial(td));
  out.cor.push_back({m, k, m.counit(), identity_morphism(m.base()), "epsC"});
  out.cor.push_back({g, k, g.counit(), identity_morphism(g.base()), "epsG"});
  CoringsMorphism swap{g, g, dense(f, {{0, 1}, {1, 0}}), identity_morphism(g.base()), "swapG"};
  out.cor.push_back(swap);
  out.ext.push_back(ext_from_coring_iso(swap));
  return out;
}

}  // namespace corings::testing
