#pragma once

#include <cstddef>
#include <memory>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fanocheck/errors.hpp"
#include "fanocheck/rational.hpp"
#include "fanocheck/upoly.hpp"

namespace fanocheck {

/// A monogenic number field Q[x]/(m(x)) with m monic and irreducible.
/// The rationals are the degree-1 field with m(x) = x.
class NumberField {
public:
  /// `minpoly` lists the coefficients from degree 0 upwards and must be monic.
  /// Use make_number_field() to get irreducibility checked.
  NumberField(std::vector<Rational> minpoly, std::string generator)
      : minpoly_(std::move(minpoly)), generator_(std::move(generator)) {
    if (minpoly_.size() < 2 || !minpoly_.back().is_one())
      throw std::invalid_argument("minimal polynomial must be monic of degree >= 1");
    const std::size_t d = degree();
    // x^(d+k) mod m for k = 0 .. d-2, used to fold products back into the basis.
    std::vector<Rational> power(d, Rational());
    for (std::size_t i = 0; i < d; ++i)
      power[i] = -minpoly_[i];
    for (std::size_t k = 0; k + 1 < d; ++k) {
      high_powers_.push_back(power);
      std::vector<Rational> next(d, Rational());
      const Rational top = power[d - 1];
      for (std::size_t i = d - 1; i > 0; --i)
        next[i] = power[i - 1];
      for (std::size_t i = 0; i < d; ++i)
        next[i] -= top * minpoly_[i];
      power = std::move(next);
    }
  }

  std::size_t degree() const { return minpoly_.size() - 1; }
  const std::vector<Rational> &minpoly() const { return minpoly_; }
  const std::string &generator() const { return generator_; }
  const std::vector<std::vector<Rational>> &high_powers() const { return high_powers_; }

  bool same_as(const NumberField &other) const {
    return this == &other || minpoly_ == other.minpoly_;
  }

private:
  std::vector<Rational> minpoly_;
  std::string generator_;
  std::vector<std::vector<Rational>> high_powers_;
};

using FieldRef = std::shared_ptr<const NumberField>;

namespace detail {

inline std::vector<mpz_class> integer_divisors(mpz_class n) {
  n = abs(n);
  std::vector<mpz_class> out;
  for (mpz_class d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      if (d * d != n)
        out.push_back(n / d);
    }
  }
  const std::size_t positive = out.size();
  for (std::size_t i = 0; i < positive; ++i)
    out.push_back(-out[i]);
  return out;
}

/// Monic integer polynomial whose roots are D times the roots of `monic`.
inline std::vector<mpz_class> integral_rescale(const std::vector<Rational> &monic) {
  mpz_class lcm = 1;
  for (const auto &c : monic)
    mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.den().get_mpz_t());
  const std::size_t n = monic.size() - 1;
  std::vector<mpz_class> out(n + 1);
  mpz_class scale = 1;
  for (std::size_t k = n + 1; k-- > 0;) {
    mpq_class v = monic[k].value() * mpq_class(scale);
    out[k] = v.get_num();
    scale *= lcm;
  }
  return out;
}

inline mpz_class eval_int(const std::vector<mpz_class> &p, const mpz_class &x) {
  mpz_class acc = 0;
  for (std::size_t i = p.size(); i-- > 0;)
    acc = acc * x + p[i];
  return acc;
}

inline bool has_integer_root(const std::vector<mpz_class> &p) {
  if (p[0] == 0)
    return true;
  for (const auto &d : integer_divisors(p[0]))
    if (eval_int(p, d) == 0)
      return true;
  return false;
}

/// Monic integer quartic split into two monic integer quadratics (Gauss).
inline bool has_quadratic_factor(const std::vector<mpz_class> &p) {
  const mpz_class &a0 = p[0], &a1 = p[1], &a2 = p[2], &a3 = p[3];
  for (const auto &b : integer_divisors(a0)) {
    const mpz_class d = a0 / b;
    if (b != d) {
      const mpz_class num = a1 - b * a3, den = d - b;
      if (num % den != 0)
        continue;
      const mpz_class a = num / den, c = a3 - a;
      if (a * c + b + d == a2)
        return true;
    } else {
      if (a1 != b * a3)
        continue;
      const mpz_class disc = a3 * a3 - 4 * (a2 - 2 * b);
      auto r = exact_isqrt(disc);
      if (r && (a3 + *r) % 2 == 0)
        return true;
    }
  }
  return false;
}

} // namespace detail

/// Builds Q[x]/(m) after checking m is monic of degree 1..4 and has neither a
/// rational root nor (for quartics) a rational quadratic factor.
inline FieldRef make_number_field(std::vector<Rational> minpoly, std::string generator = "a") {
  if (minpoly.size() < 2 || minpoly.size() > 5)
    throw std::invalid_argument("minimal polynomial degree must be between 1 and 4");
  if (!minpoly.back().is_one())
    throw std::invalid_argument("minimal polynomial must be monic");
  const std::size_t n = minpoly.size() - 1;
  if (n >= 2) {
    const auto integral = detail::integral_rescale(minpoly);
    if (detail::has_integer_root(integral))
      throw ReduciblePolynomial("minimal polynomial has a rational root");
    if (n == 4 && detail::has_quadratic_factor(integral))
      throw ReduciblePolynomial("minimal polynomial has a rational quadratic factor");
  }
  return std::make_shared<const NumberField>(std::move(minpoly), std::move(generator));
}

/// An element of a number field in power-basis coordinates.
class FieldElement {
public:
  FieldElement(FieldRef field, std::vector<Rational> coords)
      : field_(std::move(field)), coords_(std::move(coords)) {
    if (coords_.size() > field_->degree())
      coords_ = reduce(coords_);
    coords_.resize(field_->degree(), Rational());
  }
  FieldElement(FieldRef field, const Rational &c) : field_(std::move(field)) {
    coords_.assign(field_->degree(), Rational());
    coords_[0] = c;
  }
  /// Power-basis generator of the field.
  static FieldElement generator(const FieldRef &field) {
    if (field->degree() == 1)
      return FieldElement(field, -field->minpoly()[0]);
    std::vector<Rational> c(field->degree(), Rational());
    c[1] = 1;
    return FieldElement(field, std::move(c));
  }

  const FieldRef &field() const { return field_; }
  const std::vector<Rational> &coords() const { return coords_; }

  bool is_zero() const {
    for (const auto &c : coords_)
      if (!c.is_zero())
        return false;
    return true;
  }
  bool is_rational() const {
    for (std::size_t i = 1; i < coords_.size(); ++i)
      if (!coords_[i].is_zero())
        return false;
    return true;
  }
  const Rational &rational_part() const { return coords_[0]; }

  FieldElement zero_like() const { return FieldElement(field_, Rational()); }
  FieldElement one_like() const { return FieldElement(field_, Rational(1)); }
  FieldElement from_int(long n) const { return FieldElement(field_, Rational(n)); }
  FieldElement from_rational(const Rational &r) const { return FieldElement(field_, r); }

  FieldElement operator-() const {
    FieldElement out = *this;
    for (auto &c : out.coords_)
      c = -c;
    return out;
  }

  friend FieldElement operator+(const FieldElement &a, const FieldElement &b) {
    a.check_same(b);
    FieldElement out = a;
    for (std::size_t i = 0; i < out.coords_.size(); ++i)
      out.coords_[i] += b.coords_[i];
    return out;
  }
  friend FieldElement operator-(const FieldElement &a, const FieldElement &b) {
    a.check_same(b);
    FieldElement out = a;
    for (std::size_t i = 0; i < out.coords_.size(); ++i)
      out.coords_[i] -= b.coords_[i];
    return out;
  }
  friend FieldElement operator*(const FieldElement &a, const FieldElement &b) {
    a.check_same(b);
    const std::size_t d = a.coords_.size();
    if (d == 1)
      return FieldElement(a.field_, a.coords_[0] * b.coords_[0]);
    std::vector<Rational> prod(2 * d - 1, Rational());
    for (std::size_t i = 0; i < d; ++i) {
      if (a.coords_[i].is_zero())
        continue;
      for (std::size_t j = 0; j < d; ++j)
        if (!b.coords_[j].is_zero())
          prod[i + j] += a.coords_[i] * b.coords_[j];
    }
    return FieldElement(a.field_, a.reduce(prod));
  }
  friend FieldElement operator/(const FieldElement &a, const FieldElement &b) {
    return a * b.inverse();
  }

  FieldElement operator*(const Rational &r) const {
    FieldElement out = *this;
    for (auto &c : out.coords_)
      c *= r;
    return out;
  }

  /// Multiplicative inverse through the extended Euclidean algorithm in Q[x].
  FieldElement inverse() const {
    if (is_zero())
      throw DivisionByZero("inverse of zero in Q(" + field_->generator() + ")");
    if (coords_.size() == 1)
      return FieldElement(field_, coords_[0].inverse());
    const UPoly<Rational> a(coords_);
    const UPoly<Rational> m(field_->minpoly());
    auto [g, s, t] = extended_gcd(a, m, Rational(1));
    if (g.degree() != 0)
      throw ReduciblePolynomial("element shares a factor with the minimal polynomial");
    return FieldElement(field_, s.coeffs());
  }

  friend bool operator==(const FieldElement &a, const FieldElement &b) {
    a.check_same(b);
    return a.coords_ == b.coords_;
  }

  /// Human-readable form in the power basis, e.g. "3/2 - 5*tau".
  std::string to_string() const {
    std::string out;
    for (std::size_t i = 0; i < coords_.size(); ++i) {
      const Rational &c = coords_[i];
      if (c.is_zero())
        continue;
      std::string mag = (c.sign() < 0 ? -c : c).to_string();
      std::string term;
      if (i == 0)
        term = mag;
      else {
        term = mag == "1" ? "" : mag + "*";
        term += field_->generator();
        if (i > 1)
          term += "^" + std::to_string(i);
      }
      if (out.empty())
        out = c.sign() < 0 ? "-" + term : term;
      else
        out += (c.sign() < 0 ? " - " : " + ") + term;
    }
    return out.empty() ? "0" : out;
  }

  /// Coordinate list "[c0,c1,...]", stable across runs.
  std::string key() const {
    std::string out = "[";
    for (std::size_t i = 0; i < coords_.size(); ++i) {
      if (i)
        out += ",";
      out += coords_[i].to_string();
    }
    return out + "]";
  }

private:
  void check_same(const FieldElement &o) const {
    if (!field_->same_as(*o.field_))
      throw FieldMismatch("Q(" + field_->generator() + ") vs Q(" + o.field_->generator() + ")");
  }

  std::vector<Rational> reduce(const std::vector<Rational> &full) const {
    const std::size_t d = field_->degree();
    std::vector<Rational> out(full.begin(), full.begin() + static_cast<long>(std::min(d, full.size())));
    out.resize(d, Rational());
    const auto &hp = field_->high_powers();
    for (std::size_t k = d; k < full.size(); ++k) {
      if (full[k].is_zero())
        continue;
      if (k - d >= hp.size())
        throw std::logic_error("product degree exceeds reduction table");
      for (std::size_t i = 0; i < d; ++i)
        out[i] += full[k] * hp[k - d][i];
    }
    return out;
  }

  FieldRef field_;
  std::vector<Rational> coords_;
};

inline FieldElement operator*(const Rational &r, const FieldElement &a) { return a * r; }

/// Square root inside a field of degree at most 2; absent if `a` is not a
/// square there. Throws UnsupportedField for higher degree unless `a` is the
/// square of a rational.
inline std::optional<FieldElement> is_square_in_field(const FieldElement &a) {
  const FieldRef &f = a.field();
  if (a.is_rational()) {
    if (auto r = sqrt_exact(a.rational_part()))
      return FieldElement(f, *r);
    if (f->degree() == 1)
      return std::nullopt;
  }
  if (f->degree() > 2)
    throw UnsupportedField("square roots are implemented for degree <= 2");
  // m = x^2 + p x + q, theta = (-p + sqrt(D)) / 2 with D = p^2 - 4q.
  const Rational p = f->minpoly()[1], q = f->minpoly()[0];
  const Rational D = p * p - 4 * q;
  const Rational &a0 = a.coords()[0], &a1 = a.coords()[1];
  // a = A + B sqrt(D)
  const Rational A = a0 - a1 * p / 2, B = a1 / 2;
  auto to_field = [&](const Rational &X, const Rational &Y) {
    // X + Y sqrt(D) = X + Y (2 theta + p)
    return FieldElement(f, std::vector<Rational>{X + Y * p, 2 * Y});
  };
  std::vector<std::pair<Rational, Rational>> candidates;
  if (B.is_zero()) {
    if (auto x = sqrt_exact(A))
      candidates.emplace_back(*x, Rational());
    if (auto y = sqrt_exact(A / D))
      candidates.emplace_back(Rational(), *y);
  } else if (auto n = sqrt_exact(A * A - D * B * B)) {
    for (const Rational &x2 : {(A + *n) / 2, (A - *n) / 2}) {
      auto x = sqrt_exact(x2);
      if (x && !x->is_zero())
        candidates.emplace_back(*x, B / (2 * *x));
    }
  }
  for (const auto &[X, Y] : candidates) {
    FieldElement r = to_field(X, Y);
    if (r * r == a)
      return r;
  }
  return std::nullopt;
}

inline std::optional<FieldElement> sqrt_exact(const FieldElement &a) { return is_square_in_field(a); }

namespace fields {

inline FieldRef rationals() {
  static const FieldRef f = make_number_field({Rational(0), Rational(1)}, "q");
  return f;
}

/// Q(tau), tau^2 = tau + 1.
inline FieldRef golden() {
  static const FieldRef f = make_number_field({Rational(-1), Rational(-1), Rational(1)}, "tau");
  return f;
}

/// Q(omega), omega^2 + omega + 1 = 0.
inline FieldRef eisenstein() {
  static const FieldRef f = make_number_field({Rational(1), Rational(1), Rational(1)}, "omega");
  return f;
}

/// Q(s) with s^4 = 4 s^2 + 1, i.e. s^2 = 2 tau + 1; contains tau = (s^2 - 1)/2.
inline FieldRef golden_root() {
  static const FieldRef f = make_number_field(
      {Rational(-1), Rational(0), Rational(-4), Rational(0), Rational(1)}, "s");
  return f;
}

/// tau as an element of golden_root().
inline FieldElement tau_in_golden_root() {
  return FieldElement(golden_root(), {Rational(-1, 2), Rational(0), Rational(1, 2)});
}

/// Element c0 + c1*tau of golden().
inline FieldElement golden_element(const Rational &c0, const Rational &c1) {
  return FieldElement(golden(), {c0, c1});
}

} // namespace fields

} // namespace fanocheck
