#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "fanocheck/rational.hpp"

namespace fanocheck {

/// Dense univariate polynomial, coefficients stored from degree 0 upwards.
/// The zero polynomial has no coefficients; otherwise the top coefficient is
/// nonzero.
template <ExactScalar S>
class UPoly {
public:
  UPoly() = default;
  explicit UPoly(std::vector<S> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

  static UPoly constant(const S &c) { return UPoly(std::vector<S>{c}); }
  /// c * x^k
  static UPoly monomial(const S &c, std::size_t k) {
    std::vector<S> v(k + 1, c.zero_like());
    v[k] = c;
    return UPoly(std::move(v));
  }

  bool is_zero() const { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  const S &lead() const { return coeffs_.back(); }
  const std::vector<S> &coeffs() const { return coeffs_; }

  /// Coefficient of x^k; `like` supplies the domain for out-of-range zeros.
  S coeff(std::size_t k, const S &like) const {
    return k < coeffs_.size() ? coeffs_[k] : like.zero_like();
  }

  UPoly operator-() const {
    std::vector<S> v;
    v.reserve(coeffs_.size());
    for (const auto &c : coeffs_)
      v.push_back(-c);
    return UPoly(std::move(v));
  }

  friend UPoly operator+(const UPoly &a, const UPoly &b) {
    if (a.is_zero())
      return b;
    if (b.is_zero())
      return a;
    std::vector<S> v = a.coeffs_.size() >= b.coeffs_.size() ? a.coeffs_ : b.coeffs_;
    const auto &shorter = a.coeffs_.size() >= b.coeffs_.size() ? b.coeffs_ : a.coeffs_;
    for (std::size_t i = 0; i < shorter.size(); ++i)
      v[i] = v[i] + shorter[i];
    return UPoly(std::move(v));
  }
  friend UPoly operator-(const UPoly &a, const UPoly &b) { return a + (-b); }

  friend UPoly operator*(const UPoly &a, const UPoly &b) {
    if (a.is_zero() || b.is_zero())
      return UPoly();
    std::vector<S> v(a.coeffs_.size() + b.coeffs_.size() - 1, a.lead().zero_like());
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (a.coeffs_[i].is_zero())
        continue;
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
        v[i + j] = v[i + j] + a.coeffs_[i] * b.coeffs_[j];
    }
    return UPoly(std::move(v));
  }

  UPoly scaled(const S &c) const {
    std::vector<S> v;
    v.reserve(coeffs_.size());
    for (const auto &x : coeffs_)
      v.push_back(x * c);
    return UPoly(std::move(v));
  }

  friend bool operator==(const UPoly &a, const UPoly &b) {
    if (a.coeffs_.size() != b.coeffs_.size())
      return false;
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
      if (!(a.coeffs_[i] == b.coeffs_[i]))
        return false;
    return true;
  }

  /// Euclidean division; throws DivisionByZero for a zero divisor.
  std::pair<UPoly, UPoly> divmod(const UPoly &d) const {
    if (d.is_zero())
      throw DivisionByZero("polynomial division by zero");
    if (degree() < d.degree())
      return {UPoly(), *this};
    const S inv_lead = d.lead().one_like() / d.lead();
    std::vector<S> rem = coeffs_;
    std::vector<S> quot(coeffs_.size() - d.coeffs_.size() + 1, d.lead().zero_like());
    for (long k = degree() - d.degree(); k >= 0; --k) {
      const S c = rem[static_cast<std::size_t>(k + d.degree())] * inv_lead;
      quot[static_cast<std::size_t>(k)] = c;
      if (c.is_zero())
        continue;
      for (std::size_t j = 0; j < d.coeffs_.size(); ++j)
        rem[static_cast<std::size_t>(k) + j] = rem[static_cast<std::size_t>(k) + j] - c * d.coeffs_[j];
    }
    rem.erase(rem.begin() + d.degree(), rem.end());
    return {UPoly(std::move(quot)), UPoly(std::move(rem))};
  }

  UPoly monic() const {
    if (is_zero())
      return *this;
    return scaled(lead().one_like() / lead());
  }

  UPoly derivative() const {
    if (coeffs_.size() <= 1)
      return UPoly();
    std::vector<S> v;
    for (std::size_t i = 1; i < coeffs_.size(); ++i)
      v.push_back(coeffs_[i] * coeffs_[i].from_int(static_cast<long>(i)));
    return UPoly(std::move(v));
  }

  S evaluate(const S &x) const {
    if (is_zero())
      return x.zero_like();
    S acc = coeffs_.back();
    for (std::size_t i = coeffs_.size() - 1; i-- > 0;)
      acc = acc * x + coeffs_[i];
    return acc;
  }

  std::string to_string(const std::string &var = "x") const {
    if (is_zero())
      return "0";
    std::string out;
    for (std::size_t i = coeffs_.size(); i-- > 0;) {
      if (coeffs_[i].is_zero())
        continue;
      if (!out.empty())
        out += " + ";
      out += "(" + coeffs_[i].to_string() + ")";
      if (i >= 1)
        out += "*" + var;
      if (i >= 2)
        out += "^" + std::to_string(i);
    }
    return out;
  }

private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero())
      coeffs_.pop_back();
  }

  std::vector<S> coeffs_;
};

/// Monic greatest common divisor; gcd(0, 0) = 0.
template <ExactScalar S>
UPoly<S> gcd(UPoly<S> a, UPoly<S> b) {
  while (!b.is_zero()) {
    auto r = a.divmod(b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

/// Returns (g, s, t) with s*a + t*b = g = gcd(a, b), g monic.
template <ExactScalar S>
std::tuple<UPoly<S>, UPoly<S>, UPoly<S>> extended_gcd(const UPoly<S> &a, const UPoly<S> &b,
                                                      const S &like) {
  UPoly<S> r0 = a, r1 = b;
  UPoly<S> s0 = UPoly<S>::constant(like.one_like()), s1;
  UPoly<S> t0, t1 = UPoly<S>::constant(like.one_like());
  while (!r1.is_zero()) {
    auto [q, r] = r0.divmod(r1);
    r0 = std::exchange(r1, r);
    s0 = std::exchange(s1, s0 - q * s1);
    t0 = std::exchange(t1, t0 - q * t1);
  }
  if (r0.is_zero())
    return {r0, s0, t0};
  const S inv = like.one_like() / r0.lead();
  return {r0.scaled(inv), s0.scaled(inv), t0.scaled(inv)};
}

/// Square root of a polynomial whose leading coefficient has a square root
/// in the scalar domain (via the overload set `sqrt_exact`), solved from the
/// top coefficient down. Absent when `p` is not a square.
template <ExactScalar S>
std::optional<UPoly<S>> exact_square_root(const UPoly<S> &p) {
  if (p.is_zero())
    return p;
  if (p.degree() % 2 != 0)
    return std::nullopt;
  auto lead_root = sqrt_exact(p.lead());
  if (!lead_root)
    return std::nullopt;
  const auto n = static_cast<std::size_t>(p.degree() / 2);
  const S two_lead = *lead_root + *lead_root;
  std::vector<S> q(n + 1, lead_root->zero_like());
  q[n] = *lead_root;
  // Coefficient of x^(n+k) in q^2 for k = n-1 .. 0 determines q[k].
  for (std::size_t k = n; k-- > 0;) {
    S acc = p.coeff(n + k, *lead_root);
    for (std::size_t i = k + 1; i <= n; ++i) {
      const std::size_t j = n + k - i;
      if (j > k && j <= n)
        acc = acc - q[i] * q[j];
    }
    q[k] = acc / two_lead;
  }
  UPoly<S> root(std::move(q));
  if (!(root * root == p))
    return std::nullopt;
  return root;
}

} // namespace fanocheck
