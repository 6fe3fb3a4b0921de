#pragma once

#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "corings/bimodule.hpp"

namespace corings {

/// An A-coring (C, Delta, eps). Delta is supplied as a lift into C (x)_k C and
/// stored projected onto C (x)_A C. Copies share the same immutable data.
class Coring {
  struct Impl {
    Impl(Bimodule carrier, Mat comul_lift, Mat comul, Mat counit, PresentedTensor square,
         std::string name)
        : carrier(std::move(carrier)),
          comul_lift(std::move(comul_lift)),
          comul(std::move(comul)),
          counit(std::move(counit)),
          square(std::move(square)),
          name(std::move(name)) {}

    Bimodule carrier;
    Mat comul_lift;
    Mat comul;
    Mat counit;
    PresentedTensor square;
    std::string name;
    mutable std::once_flag cube_once;
    mutable std::optional<Associator> cube;
  };

 public:
  /// Shape checks only; see check_coring for the axioms.
  Coring(Bimodule carrier, Mat comul_lift, Mat counit, std::string name = {});

  const AlgebraPtr& base() const { return impl_->carrier.left; }
  const Field& field() const { return impl_->carrier.field(); }
  const Bimodule& carrier() const { return impl_->carrier; }
  std::size_t dim() const { return impl_->carrier.dim; }
  const std::vector<std::string>& labels() const { return impl_->carrier.labels; }
  const std::string& name() const { return impl_->name; }

  /// Delta as supplied, C -> C (x)_k C.
  const Mat& comul_lift() const { return impl_->comul_lift; }
  /// Delta in the coordinates of square(), C -> C (x)_A C.
  const Mat& comul() const { return impl_->comul; }
  /// comul() lifted back through the representative columns.
  Mat canonical_comul_lift() const { return impl_->comul * impl_->square.lift(); }
  /// eps : C -> A, dim x dim(A).
  const Mat& counit() const { return impl_->counit; }
  const PresentedTensor& square() const { return impl_->square; }
  /// (C (x)_A C) (x)_A C and C (x)_A (C (x)_A C), built on first use.
  const Associator& cube() const;

  bool shares_data(const Coring& other) const { return impl_ == other.impl_; }
  /// Address of the shared data; stable while any copy is alive.
  const void* identity() const noexcept { return impl_.get(); }

 private:
  std::shared_ptr<const Impl> impl_;
};

/// Same base algebra, carrier, comultiplication and counit.
bool same_coring(const Coring& a, const Coring& b);

/// Conditions, in order: bilinearity, coassociativity, counit_right, counit_left.
Verdict check_coring(const Coring& c);

/// X with rho : X -> X (x)_A C. X may carry any left action; rho must be
/// a bimodule map.
struct RightComodule {
  Bimodule carrier;
  Coring coring;
  PresentedTensor tens;  // carrier (x)_A C
  Mat coaction;
};

/// C (x)_A X with lambda : X -> C (x)_A X.
struct LeftComodule {
  Bimodule carrier;
  Coring coring;
  PresentedTensor tens;  // C (x)_A X
  Mat coaction;
};

/// Throws kAlgebraMismatch when the carrier's acting algebra is not the base.
RightComodule make_right_comodule(Bimodule carrier, const Coring& c, const Mat& coact_lift);
LeftComodule make_left_comodule(Bimodule carrier, const Coring& c, const Mat& coact_lift);

/// C as a comodule over itself via Delta. The carrier may be replaced by a
/// bimodule with the same coring-side action (for instance C over (A,B)).
RightComodule regular_right_comodule(const Coring& c);
LeftComodule regular_left_comodule(const Coring& c);
LeftComodule regular_left_comodule(const Coring& c, const Bimodule& carrier);

/// Conditions: linearity, coassociativity, counit.
Verdict check_comodule(const RightComodule& m);
Verdict check_comodule(const LeftComodule& m);

/// lambda^N o f == (C (x) f) o lambda^M. Throws kObjectMismatch for
/// comodules over different corings.
Verdict check_left_colinear(const Mat& f, const LeftComodule& m, const LeftComodule& n);

/// The left C-coaction on X (x)_B P induced from one on X, followed by
/// re-association into C (x)_A (X (x)_B P).
LeftComodule left_coaction_on_tensor(const LeftComodule& x, const PresentedTensor& xp);

/// Left colinearity of the right coaction of x_right together with both
/// comodule axiom sets. The two comodules must share a carrier.
Verdict check_bicomodule(const LeftComodule& left, const RightComodule& right);

/// M box_C N inside M (x)_A N.
struct Cotensor {
  PresentedTensor tensor;  // M (x)_A N
  Subspace kernel;         // subspace of tensor coordinates
  /// Defect map rho (x) N - (M (x) lambda), into (M (x)_A C) (x)_A N.
  Mat defect;
};

Cotensor cotensor(const RightComodule& m, const LeftComodule& n);

}  // namespace corings
