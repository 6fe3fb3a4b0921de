#include "corings/field.hpp"

#include <cctype>

#include "corings/error.hpp"

namespace corings {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

Field Field::prime(std::uint64_t p) {
  if (p >= (std::uint64_t{1} << 31) || !corings::is_prime(p)) {
    throw Error(ErrorKind::kInvalidField,
                "field F_" + std::to_string(p) + " requires a prime modulus below 2^31");
  }
  return Field(Kind::kPrime, static_cast<std::uint32_t>(p));
}

namespace {

unsigned long mod_ui(const mpz_class& z, std::uint32_t p) {
  return mpz_fdiv_ui(z.get_mpz_t(), p);
}

unsigned long inv_mod(unsigned long a, std::uint32_t p) {
  // a^(p-2) mod p
  std::uint64_t result = 1, base = a % p, e = p - 2;
  while (e > 0) {
    if (e & 1) result = result * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return static_cast<unsigned long>(result);
}

}  // namespace

void Field::reduce_in_place(Scalar& x) const {
  if (kind_ == Kind::kRationals) {
    x.canonicalize();
    return;
  }
  unsigned long num = mod_ui(x.get_num(), p_);
  if (x.get_den() == 1) {
    x = num;
    return;
  }
  unsigned long den = mod_ui(x.get_den(), p_);
  if (den == 0) {
    throw Error(ErrorKind::kInvalidField,
                "denominator divisible by " + std::to_string(p_) + " in " + name());
  }
  x = static_cast<unsigned long>(std::uint64_t{num} * inv_mod(den, p_) % p_);
}

Scalar Field::reduce(const Scalar& x) const {
  Scalar y = x;
  reduce_in_place(y);
  return y;
}

Scalar Field::inverse(const Scalar& x) const {
  if (sgn(x) == 0) throw Error(ErrorKind::kPrecondition, "inverse of zero");
  if (kind_ == Kind::kRationals) return Scalar(1) / x;
  unsigned long v = mod_ui(reduce(x).get_num(), p_);
  return Scalar(inv_mod(v, p_));
}

Scalar Field::parse(std::string_view text) const {
  std::string s(text);
  bool ok = !s.empty();
  std::size_t slashes = 0;
  for (std::size_t i = 0; i < s.size() && ok; ++i) {
    char ch = s[i];
    if (ch == '/') {
      ++slashes;
      ok = i > 0 && i + 1 < s.size();
    } else if (ch == '-' || ch == '+') {
      ok = (i == 0);
    } else {
      ok = std::isdigit(static_cast<unsigned char>(ch)) != 0;
    }
  }
  if (!ok || slashes > 1) {
    throw Error(ErrorKind::kSyntax, "malformed scalar \"" + s + "\"");
  }
  if (s.front() == '+') s.erase(0, 1);
  Scalar value;
  if (value.set_str(s, 10) != 0) {
    throw Error(ErrorKind::kSyntax, "malformed scalar \"" + s + "\"");
  }
  if (value.get_den() == 0) throw Error(ErrorKind::kSyntax, "zero denominator in \"" + s + "\"");
  return reduce(value);
}

std::string Field::format(const Scalar& x) const { return reduce(x).get_str(); }

std::string Field::name() const {
  return kind_ == Kind::kRationals ? std::string("Q") : "F_" + std::to_string(p_);
}

}  // namespace corings
