#pragma once

#include <memory>
#include <optional>
#include <string>
#include <utility>

#include "fanocheck/errors.hpp"
#include "fanocheck/upoly.hpp"

namespace fanocheck {

/// Element of K(t) for a coefficient field K and a named transcendental t.
/// Invariant: denominator monic, gcd(numerator, denominator) = 1, zero is 0/1.
template <ExactScalar S>
class RationalFunction {
public:
  /// The constant c in K(t).
  RationalFunction(const S &c, std::string var)
      : var_(std::make_shared<const std::string>(std::move(var))),
        num_(UPoly<S>::constant(c)), den_(UPoly<S>::constant(c.one_like())), unit_(c.one_like()) {}

  RationalFunction(UPoly<S> num, UPoly<S> den, const S &like, std::shared_ptr<const std::string> var)
      : var_(std::move(var)), num_(std::move(num)), den_(std::move(den)), unit_(like.one_like()) {
    normalize();
  }

  /// The transcendental t itself.
  static RationalFunction variable(const S &like, std::string var) {
    RationalFunction one(like.one_like(), std::move(var));
    one.num_ = UPoly<S>::monomial(like.one_like(), 1);
    return one;
  }

  const UPoly<S> &numerator() const { return num_; }
  const UPoly<S> &denominator() const { return den_; }
  const std::string &variable_name() const { return *var_; }
  const S &unit() const { return unit_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_constant() const { return num_.degree() <= 0 && den_.degree() == 0; }
  /// Value of a constant function.
  S constant_value() const { return num_.is_zero() ? unit_.zero_like() : num_.lead(); }

  RationalFunction zero_like() const { return make(UPoly<S>(), one_poly()); }
  RationalFunction one_like() const { return make(one_poly(), one_poly()); }
  RationalFunction from_int(long n) const {
    return make(UPoly<S>::constant(unit_.from_int(n)), one_poly());
  }
  RationalFunction from_scalar(const S &c) const { return make(UPoly<S>::constant(c), one_poly()); }
  /// num/den in the same field as this element.
  RationalFunction with(UPoly<S> num, UPoly<S> den) const { return make(std::move(num), std::move(den)); }

  RationalFunction operator-() const { return make(-num_, den_); }

  friend RationalFunction operator+(const RationalFunction &a, const RationalFunction &b) {
    a.check_same(b);
    if (a.den_ == b.den_)
      return a.make(a.num_ + b.num_, a.den_);
    return a.make(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend RationalFunction operator-(const RationalFunction &a, const RationalFunction &b) {
    return a + (-b);
  }
  friend RationalFunction operator*(const RationalFunction &a, const RationalFunction &b) {
    a.check_same(b);
    return a.make(a.num_ * b.num_, a.den_ * b.den_);
  }
  friend RationalFunction operator/(const RationalFunction &a, const RationalFunction &b) {
    a.check_same(b);
    if (b.is_zero())
      throw DivisionByZero("rational function division by zero");
    return a.make(a.num_ * b.den_, a.den_ * b.num_);
  }

  friend bool operator==(const RationalFunction &a, const RationalFunction &b) {
    a.check_same(b);
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  /// Specialization t = x; DivisionByZero if the denominator vanishes there.
  S evaluate(const S &x) const {
    S d = den_.evaluate(x);
    if (d.is_zero())
      throw DivisionByZero("rational function has a pole at " + x.to_string());
    return num_.evaluate(x) / d;
  }

  std::string to_string() const {
    if (den_.degree() == 0)
      return num_.to_string(*var_);
    return "(" + num_.to_string(*var_) + ")/(" + den_.to_string(*var_) + ")";
  }

private:
  UPoly<S> one_poly() const { return UPoly<S>::constant(unit_); }

  RationalFunction make(UPoly<S> num, UPoly<S> den) const {
    return RationalFunction(std::move(num), std::move(den), unit_, var_);
  }

  void check_same(const RationalFunction &o) const {
    if (var_ != o.var_ && *var_ != *o.var_)
      throw FieldMismatch("rational functions in " + *var_ + " and " + *o.var_);
  }

  void normalize() {
    if (den_.is_zero())
      throw DivisionByZero("rational function with zero denominator");
    if (num_.is_zero()) {
      den_ = one_poly();
      return;
    }
    UPoly<S> g = gcd(num_, den_);
    if (g.degree() > 0) {
      num_ = num_.divmod(g).first;
      den_ = den_.divmod(g).first;
    }
    const S inv = unit_ / den_.lead();
    num_ = num_.scaled(inv);
    den_ = den_.scaled(inv);
  }

  std::shared_ptr<const std::string> var_;
  UPoly<S> num_;
  UPoly<S> den_;
  S unit_;
};

/// Square root in K(t) when numerator and denominator are squares in K[t].
template <ExactScalar S>
std::optional<RationalFunction<S>> sqrt_exact(const RationalFunction<S> &f) {
  auto n = exact_square_root(f.numerator());
  if (!n)
    return std::nullopt;
  auto d = exact_square_root(f.denominator());
  if (!d)
    return std::nullopt;
  return f.with(*n, *d);
}

} // namespace fanocheck
