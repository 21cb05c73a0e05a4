#pragma once

#include <compare>
#include <concepts>
#include <optional>
#include <string>
#include <string_view>

#include <gmpxx.h>

#include "fanocheck/errors.hpp"

namespace fanocheck {

/// Operations every coefficient domain of the toolkit provides.
///
/// Scalars carry their own domain (a number field, a rational-function
/// field), so zero and one are produced from an existing value rather than
/// default-constructed.
template <class S>
concept ExactScalar = requires(const S a, const S b, long n) {
  { a + b } -> std::same_as<S>;
  { a - b } -> std::same_as<S>;
  { a * b } -> std::same_as<S>;
  { a / b } -> std::same_as<S>;
  { -a } -> std::same_as<S>;
  { a == b } -> std::convertible_to<bool>;
  { a.is_zero() } -> std::convertible_to<bool>;
  { a.zero_like() } -> std::same_as<S>;
  { a.one_like() } -> std::same_as<S>;
  { a.from_int(n) } -> std::same_as<S>;
  { a.to_string() } -> std::convertible_to<std::string>;
};

/// Arbitrary-precision rational number, always in lowest terms with a
/// positive denominator.
class Rational {
public:
  Rational() = default;
  Rational(long n) : value_(n) {} // NOLINT(google-explicit-constructor)
  Rational(long num, long den) {
    if (den == 0)
      throw DivisionByZero("rational with zero denominator");
    value_ = mpq_class(mpz_class(num), mpz_class(den));
    value_.canonicalize();
  }
  explicit Rational(mpq_class v) : value_(std::move(v)) { value_.canonicalize(); }
  explicit Rational(const mpz_class &n) : value_(n) {}

  /// Parses "p", "-p" or "p/q".
  static Rational parse(std::string_view text) {
    mpq_class v;
    if (v.set_str(std::string(text), 10) != 0)
      throw std::invalid_argument("not a rational: " + std::string(text));
    if (v.get_den() == 0)
      throw DivisionByZero("rational with zero denominator");
    v.canonicalize();
    return Rational(std::move(v));
  }

  const mpq_class &value() const { return value_; }
  mpz_class num() const { return value_.get_num(); }
  mpz_class den() const { return value_.get_den(); }

  bool is_zero() const { return sgn(value_) == 0; }
  bool is_one() const { return value_ == 1; }
  bool is_integer() const { return value_.get_den() == 1; }
  int sign() const { return sgn(value_); }

  Rational zero_like() const { return Rational(); }
  Rational one_like() const { return Rational(1); }
  Rational from_int(long n) const { return Rational(n); }

  Rational inverse() const {
    if (is_zero())
      throw DivisionByZero("inverse of rational zero");
    return Rational(mpq_class(1) / value_);
  }

  Rational operator-() const { return Rational(mpq_class(-value_)); }
  Rational &operator+=(const Rational &o) { value_ += o.value_; return *this; }
  Rational &operator-=(const Rational &o) { value_ -= o.value_; return *this; }
  Rational &operator*=(const Rational &o) { value_ *= o.value_; return *this; }
  Rational &operator/=(const Rational &o) {
    if (o.is_zero())
      throw DivisionByZero("rational division by zero");
    value_ /= o.value_;
    return *this;
  }

  friend Rational operator+(Rational a, const Rational &b) { return a += b; }
  friend Rational operator-(Rational a, const Rational &b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational &b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational &b) { return a /= b; }

  friend bool operator==(const Rational &a, const Rational &b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const Rational &a, const Rational &b) {
    int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  std::string to_string() const { return value_.get_str(); }

private:
  mpq_class value_;
};

inline std::optional<mpz_class> exact_isqrt(const mpz_class &n) {
  if (sgn(n) < 0)
    return std::nullopt;
  if (mpz_perfect_square_p(n.get_mpz_t()) == 0)
    return std::nullopt;
  mpz_class r;
  mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
  return r;
}

/// Nonnegative square root when `a` is the square of a rational.
inline std::optional<Rational> sqrt_exact(const Rational &a) {
  auto n = exact_isqrt(a.num());
  if (!n)
    return std::nullopt;
  auto d = exact_isqrt(a.den());
  if (!d)
    return std::nullopt;
  return Rational(mpq_class(*n, *d));
}

} // namespace fanocheck
