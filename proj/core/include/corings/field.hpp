#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace corings {

using Scalar = mpq_class;

/// The ground field: the rationals, or a prime field F_p with p < 2^31.
///
/// Elements of F_p are carried as integer-valued Scalars in [0, p). Matrix
/// kernels accumulate exactly in Q and call reduce() once per entry, so a
/// sum of products never needs intermediate reduction.
class Field {
 public:
  enum class Kind { kRationals, kPrime };

  static Field rationals() { return Field(Kind::kRationals, 0); }
  /// Throws Error(kInvalidField) unless p is a prime below 2^31.
  static Field prime(std::uint64_t p);

  Kind kind() const noexcept { return kind_; }
  std::uint32_t modulus() const noexcept { return p_; }
  bool is_prime() const noexcept { return kind_ == Kind::kPrime; }

  /// Canonical representative: lowest terms over Q, [0, p) over F_p.
  Scalar reduce(const Scalar& x) const;
  void reduce_in_place(Scalar& x) const;
  Scalar inverse(const Scalar& x) const;

  /// Accepts "n", "-n", "n/d". Over F_p the value is reduced mod p.
  Scalar parse(std::string_view text) const;
  std::string format(const Scalar& x) const;
  /// "Q" or "F_p".
  std::string name() const;

  friend bool operator==(const Field& a, const Field& b) noexcept {
    return a.kind_ == b.kind_ && a.p_ == b.p_;
  }

 private:
  Field(Kind kind, std::uint32_t p) : kind_(kind), p_(p) {}

  Kind kind_;
  std::uint32_t p_;
};

bool is_prime(std::uint64_t n);

}  // namespace corings
