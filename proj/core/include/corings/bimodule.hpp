#pragma once

#include <random>
#include <string>
#include <vector>

#include "corings/algebra.hpp"
#include "corings/linalg.hpp"

namespace corings {

/// A finite-dimensional (A,B)-bimodule. With maps acting on row vectors,
/// v * left_action[i] = a_i . v and v * right_action[j] = v . b_j.
/// One-sided modules use the ground algebra on the other side.
struct Bimodule {
  AlgebraPtr left;
  AlgebraPtr right;
  std::size_t dim = 0;
  std::vector<Mat> left_action;
  std::vector<Mat> right_action;
  std::vector<std::string> labels;

  const Field& field() const { return left->field(); }
  /// Action matrix of a general element (1 x dim row of the algebra).
  Mat left_by(const Mat& a) const { return linear_combination(a, left_action); }
  Mat right_by(const Mat& b) const { return linear_combination(b, right_action); }
};

/// Shape-checks and fills default labels; does not check the axioms.
Bimodule make_bimodule(AlgebraPtr left, AlgebraPtr right, std::vector<Mat> left_action,
                       std::vector<Mat> right_action, std::vector<std::string> labels = {});

/// Module axioms on each side and commutation of the two actions.
Verdict check_bimodule(const Bimodule& m);
/// f : src -> tgt commutes with both actions.
Verdict check_bimodule_morphism(const Bimodule& src, const Bimodule& tgt, const Mat& f);
bool is_left_linear(const Mat& f, const Bimodule& src, const Bimodule& tgt);
bool is_right_linear(const Mat& f, const Bimodule& src, const Bimodule& tgt);

Bimodule regular_bimodule(const AlgebraPtr& a);
/// Pull actions back along algebra maps into left/right algebras (nullptr keeps a side).
Bimodule restrict_scalars(const Bimodule& m, const AlgebraMorphism* along_left,
                          const AlgebraMorphism* along_right);
/// Forget the left action (left algebra becomes k).
Bimodule right_module(const Bimodule& m);
/// Forget the right action.
Bimodule left_module(const Bimodule& m);
Bimodule with_right_action(const Bimodule& m, AlgebraPtr right, std::vector<Mat> right_action);

/// M (x)_k N over (A (x) A', B (x) B') with the factorwise bi-action.
Bimodule tensor_over_k(const Bimodule& m, const Bimodule& n);

/// M (x)_B N realized as (M (x)_k N) / span{(m b) (x) n - m (x) (b n)}.
struct PresentedTensor {
  Bimodule left_factor;
  Bimodule right_factor;
  AlgebraPtr over;
  QuotientSpace quot;
  Bimodule result;

  std::size_t ambient_dim() const { return quot.ambient_dim(); }
  std::size_t dim() const { return quot.dim(); }
  const Mat& project() const { return quot.project(); }
  const Mat& lift() const { return quot.lift(); }
  const Mat& relations() const { return quot.relations().basis(); }
};

/// Throws kAlgebraMismatch if m.right and n.left differ, kIllDefinedAction if
/// an induced action fails to preserve the relations.
PresentedTensor tensor_over_alg(const Bimodule& m, const Bimodule& n);

/// f (x) g descended to the quotients: src.lift * (f (x)_k g) * tgt.project.
/// Throws kDescentFailure when src relations are not sent into tgt relations.
Mat induced_map(const Mat& f, const Mat& g, const PresentedTensor& src,
                const PresentedTensor& tgt);

/// A (x)_A M -> M, a (x) m -> a m. The left factor must be A as a right
/// A-module. Throws kIsoFailure if the result is not bijective.
Mat left_unitor(const PresentedTensor& t);
/// M (x)_A A -> M, m (x) a -> m a.
Mat right_unitor(const PresentedTensor& t);

/// The two bracketings of M (x) N (x) P and the verified isomorphisms
/// between them.
struct Associator {
  PresentedTensor inner_left;   // M (x) N
  PresentedTensor left;         // (M (x) N) (x) P
  PresentedTensor inner_right;  // N (x) P
  PresentedTensor right;        // M (x) (N (x) P)
  Mat right_to_left;
  Mat left_to_right;
};

Associator associate(const Bimodule& m, const Bimodule& n, const Bimodule& p);
Associator associate(const PresentedTensor& mn, const PresentedTensor& np);

/// (M (x)_A C) (x)_k (N (x)_A' C') -> (M (x)_k N) (x)_{A(x)A'} (C (x)_k C'),
/// (m (x) c) (x) (n (x) c') -> (m (x) n) (x) (c (x) c').
struct EtaMap {
  Bimodule source;
  PresentedTensor target;
  Mat map;
};

/// Builds the reshuffle, verifies descent, linearity and invertibility.
EtaMap eta_map(const PresentedTensor& mc, const PresentedTensor& nc);

/// eta_{M2,N2} o ((f (x) C) (x) (g (x) C')) == ((f (x) g) (x) (C (x) C')) o eta_{M,N}.
/// Throws kPrecondition unless f is right A-linear and g right A'-linear.
Verdict check_eta_naturality(const Mat& f, const Bimodule& m, const Bimodule& m2,
                             const Mat& g, const Bimodule& n, const Bimodule& n2,
                             const Bimodule& c, const Bimodule& c2);

/// Linear maps src -> tgt commuting with the selected actions, as vectors of
/// length src.dim * tgt.dim (entry (i, j) at i * tgt.dim + j).
Subspace hom_space(const Bimodule& src, const Bimodule& tgt, bool left_linear, bool right_linear);
/// Random element of a hom space with small integer coefficients.
Mat random_hom(const Subspace& homs, std::size_t src_dim, std::size_t tgt_dim,
               std::mt19937_64& rng);

}  // namespace corings
