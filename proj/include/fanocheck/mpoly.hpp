#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <memory>
#include <numeric>
#include <optional>
#include <string>
#include <stdexcept>
#include <type_traits>
#include <utility>
#include <vector>

#include "fanocheck/errors.hpp"
#include "fanocheck/upoly.hpp"

namespace fanocheck {

/// Variable names of a polynomial ring; the scalar domain travels with the
/// coefficients.
struct PolyRing {
  std::vector<std::string> names;

  std::size_t arity() const { return names.size(); }
  std::size_t index_of(const std::string &name) const {
    for (std::size_t i = 0; i < names.size(); ++i)
      if (names[i] == name)
        return i;
    throw std::out_of_range("no variable " + name);
  }
};

using RingRef = std::shared_ptr<const PolyRing>;

inline RingRef make_ring(std::vector<std::string> names) {
  return std::make_shared<const PolyRing>(PolyRing{std::move(names)});
}

/// x0, x1, ..., x{n-1}
inline RingRef make_indexed_ring(std::size_t n, const std::string &prefix = "x") {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i)
    names.push_back(prefix + std::to_string(i));
  return make_ring(std::move(names));
}

inline bool same_ring(const RingRef &a, const RingRef &b) {
  return a == b || a->names == b->names;
}

using Monomial = std::vector<unsigned>;

inline unsigned total_degree(const Monomial &m) { return std::accumulate(m.begin(), m.end(), 0U); }

/// Graded lexicographic order, largest monomial first.
struct GrlexDescending {
  bool operator()(const Monomial &a, const Monomial &b) const {
    const unsigned da = total_degree(a), db = total_degree(b);
    if (da != db)
      return da > db;
    return a > b;
  }
};

/// Sparse multivariate polynomial. Terms are kept in descending grlex
/// order with no zero coefficients stored.
template <ExactScalar S>
class MPoly {
public:
  using TermMap = std::map<Monomial, S, GrlexDescending>;

  /// The zero polynomial; `like` fixes the scalar domain.
  MPoly(RingRef ring, const S &like) : ring_(std::move(ring)), unit_(like.one_like()) {}

  static MPoly constant(RingRef ring, const S &c) {
    MPoly p(std::move(ring), c);
    if (!c.is_zero())
      p.terms_.emplace(Monomial(p.arity(), 0), c);
    return p;
  }
  static MPoly variable(RingRef ring, std::size_t i, const S &like) {
    MPoly p(std::move(ring), like);
    Monomial m(p.arity(), 0);
    m.at(i) = 1;
    p.terms_.emplace(std::move(m), like.one_like());
    return p;
  }
  static MPoly monomial(RingRef ring, Monomial m, const S &c) {
    MPoly p(std::move(ring), c);
    if (m.size() != p.arity())
      throw RingMismatch("monomial arity differs from ring arity");
    if (!c.is_zero())
      p.terms_.emplace(std::move(m), c);
    return p;
  }

  const RingRef &ring() const { return ring_; }
  std::size_t arity() const { return ring_->arity(); }
  const TermMap &terms() const { return terms_; }
  const S &unit() const { return unit_; }
  std::size_t size() const { return terms_.size(); }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && fanocheck::total_degree(terms_.begin()->first) == 0);
  }
  /// -1 for the zero polynomial.
  long total_degree() const {
    return terms_.empty() ? -1 : static_cast<long>(fanocheck::total_degree(terms_.begin()->first));
  }
  long degree_in(std::size_t i) const {
    long d = -1;
    for (const auto &[m, c] : terms_)
      d = std::max(d, static_cast<long>(m[i]));
    return d;
  }
  bool is_homogeneous() const {
    if (terms_.empty())
      return true;
    const unsigned d = fanocheck::total_degree(terms_.begin()->first);
    for (const auto &[m, c] : terms_)
      if (fanocheck::total_degree(m) != d)
        return false;
    return true;
  }

  const Monomial &leading_monomial() const { return terms_.begin()->first; }
  const S &leading_coefficient() const { return terms_.begin()->second; }

  S coeff(const Monomial &m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? unit_.zero_like() : it->second;
  }

  MPoly zero_like() const { return MPoly(ring_, unit_); }
  MPoly one_like() const { return constant(ring_, unit_); }
  MPoly from_int(long n) const { return constant(ring_, unit_.from_int(n)); }
  MPoly from_scalar(const S &c) const { return constant(ring_, c); }
  MPoly var(std::size_t i) const { return variable(ring_, i, unit_); }

  MPoly operator-() const {
    MPoly out(ring_, unit_);
    for (const auto &[m, c] : terms_)
      out.terms_.emplace_hint(out.terms_.end(), m, -c);
    return out;
  }

  MPoly &operator+=(const MPoly &o) {
    check_ring(o);
    for (const auto &[m, c] : o.terms_)
      add_term(m, c);
    return *this;
  }
  MPoly &operator-=(const MPoly &o) {
    check_ring(o);
    for (const auto &[m, c] : o.terms_)
      add_term(m, -c);
    return *this;
  }
  friend MPoly operator+(MPoly a, const MPoly &b) { return a += b; }
  friend MPoly operator-(MPoly a, const MPoly &b) { return a -= b; }

  friend MPoly operator*(const MPoly &a, const MPoly &b) {
    a.check_ring(b);
    MPoly out(a.ring_, a.unit_);
    Monomial m(a.arity());
    for (const auto &[ma, ca] : a.terms_)
      for (const auto &[mb, cb] : b.terms_) {
        for (std::size_t i = 0; i < m.size(); ++i)
          m[i] = ma[i] + mb[i];
        out.add_term(m, ca * cb);
      }
    return out;
  }
  MPoly &operator*=(const MPoly &o) { return *this = *this * o; }

  MPoly scaled(const S &c) const {
    MPoly out(ring_, unit_);
    if (c.is_zero())
      return out;
    for (const auto &[m, x] : terms_)
      out.terms_.emplace_hint(out.terms_.end(), m, x * c);
    return out;
  }

  MPoly pow(unsigned n) const {
    MPoly result = one_like(), base = *this;
    while (n > 0) {
      if (n & 1U)
        result = result * base;
      n >>= 1U;
      if (n > 0)
        base = base * base;
    }
    return result;
  }

  friend bool operator==(const MPoly &a, const MPoly &b) {
    a.check_ring(b);
    if (a.terms_.size() != b.terms_.size())
      return false;
    auto ib = b.terms_.begin();
    for (const auto &[m, c] : a.terms_) {
      if (m != ib->first || !(c == ib->second))
        return false;
      ++ib;
    }
    return true;
  }

  /// Replaces variable i by images[i]; all images must share one ring.
  MPoly substitute(const std::vector<MPoly> &images) const {
    if (images.size() != arity())
      throw RingMismatch("substitution needs one image per variable");
    if (images.empty())
      return *this;
    const RingRef &target = images.front().ring_;
    for (const auto &im : images)
      if (!same_ring(im.ring_, target))
        throw RingMismatch("substitution images live in different rings");
    std::vector<std::vector<MPoly>> powers(arity());
    for (std::size_t i = 0; i < arity(); ++i)
      powers[i].push_back(MPoly::constant(target, unit_));
    MPoly out(target, unit_);
    for (const auto &[m, c] : terms_) {
      MPoly term = MPoly::constant(target, c);
      for (std::size_t i = 0; i < m.size(); ++i) {
        if (m[i] == 0)
          continue;
        while (powers[i].size() <= m[i])
          powers[i].push_back(powers[i].back() * images[i]);
        term = term * powers[i][m[i]];
      }
      out += term;
    }
    return out;
  }

  MPoly partial_derivative(std::size_t i) const {
    if (i >= arity())
      throw std::out_of_range("variable index out of range");
    MPoly out(ring_, unit_);
    for (const auto &[m, c] : terms_) {
      if (m[i] == 0)
        continue;
      Monomial d = m;
      d[i] -= 1;
      out.add_term(d, c * c.from_int(static_cast<long>(m[i])));
    }
    return out;
  }

  S evaluate(const std::vector<S> &point) const {
    if (point.size() != arity())
      throw RingMismatch("evaluation point has the wrong length");
    S acc = unit_.zero_like();
    for (const auto &[m, c] : terms_) {
      S t = c;
      for (std::size_t i = 0; i < m.size(); ++i)
        for (unsigned k = 0; k < m[i]; ++k)
          t = t * point[i];
      acc = acc + t;
    }
    return acc;
  }

  /// Quotient when `d` divides this polynomial exactly, absent otherwise.
  std::optional<MPoly> divide_exact(const MPoly &d) const {
    check_ring(d);
    if (d.is_zero())
      throw DivisionByZero("multivariate division by zero");
    MPoly rem = *this;
    MPoly quot(ring_, unit_);
    const Monomial &lm = d.leading_monomial();
    const S inv_lc = unit_ / d.leading_coefficient();
    Monomial q(arity());
    while (!rem.is_zero()) {
      const Monomial &rm = rem.leading_monomial();
      for (std::size_t i = 0; i < q.size(); ++i) {
        if (rm[i] < lm[i])
          return std::nullopt;
        q[i] = rm[i] - lm[i];
      }
      const S c = rem.leading_coefficient() * inv_lc;
      quot.add_term(q, c);
      rem -= d.times_term(q, c);
    }
    return quot;
  }

  /// Coefficients with respect to variable i: result[k] is the coefficient
  /// of x_i^k, as a polynomial of the same ring free of x_i.
  std::vector<MPoly> coefficients_in(std::size_t i) const {
    std::vector<MPoly> out(static_cast<std::size_t>(std::max(degree_in(i), 0L)) + 1,
                           MPoly(ring_, unit_));
    for (const auto &[m, c] : terms_) {
      Monomial r = m;
      r[i] = 0;
      out[m[i]].add_term(r, c);
    }
    return out;
  }

  /// The polynomial as a univariate one in variable i; other variables must
  /// not occur.
  UPoly<S> to_upoly(std::size_t i) const {
    std::vector<S> coeffs(static_cast<std::size_t>(std::max(degree_in(i), 0L)) + 1, unit_.zero_like());
    for (const auto &[m, c] : terms_) {
      for (std::size_t j = 0; j < m.size(); ++j)
        if (j != i && m[j] != 0)
          throw RingMismatch("polynomial is not univariate in " + ring_->names[i]);
      coeffs[m[i]] = c;
    }
    return UPoly<S>(std::move(coeffs));
  }

  static MPoly from_upoly(RingRef ring, std::size_t i, const UPoly<S> &u, const S &like) {
    MPoly out(std::move(ring), like);
    for (std::size_t k = 0; k < u.coeffs().size(); ++k) {
      Monomial m(out.arity(), 0);
      m[i] = static_cast<unsigned>(k);
      out.add_term(m, u.coeffs()[k]);
    }
    return out;
  }

  /// Applies f to every coefficient, landing in scalar domain T.
  template <class F, class T = std::invoke_result_t<F, const S &>>
  MPoly<T> map_coefficients(F f, const T &like) const {
    MPoly<T> out(ring_, like);
    for (const auto &[m, c] : terms_)
      out += MPoly<T>::monomial(ring_, m, f(c));
    return out;
  }

  /// Canonical serialization: terms in descending grlex order.
  std::string to_string() const {
    if (terms_.empty())
      return "0";
    std::string out;
    for (const auto &[m, c] : terms_) {
      if (!out.empty())
        out += " + ";
      out += "(" + c.to_string() + ")";
      for (std::size_t i = 0; i < m.size(); ++i) {
        if (m[i] == 0)
          continue;
        out += "*" + ring_->names[i];
        if (m[i] > 1)
          out += "^" + std::to_string(m[i]);
      }
    }
    return out;
  }

  MPoly times_term(const Monomial &q, const S &c) const {
    MPoly out(ring_, unit_);
    Monomial m(arity());
    for (const auto &[mm, x] : terms_) {
      for (std::size_t i = 0; i < m.size(); ++i)
        m[i] = mm[i] + q[i];
      out.terms_.emplace_hint(out.terms_.end(), m, x * c);
    }
    return out;
  }

  void add_term(const Monomial &m, const S &c) {
    if (c.is_zero())
      return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (inserted)
      return;
    it->second = it->second + c;
    if (it->second.is_zero())
      terms_.erase(it);
  }

private:
  void check_ring(const MPoly &o) const {
    if (!same_ring(ring_, o.ring_))
      throw RingMismatch("polynomials from different rings");
  }

  RingRef ring_;
  TermMap terms_;
  S unit_;
};

/// Exact quotient for fraction-free elimination over polynomial rings.
template <ExactScalar S>
MPoly<S> exact_quotient(const MPoly<S> &a, const MPoly<S> &b) {
  auto q = a.divide_exact(b);
  if (!q)
    throw Error("inexact polynomial quotient in fraction-free elimination");
  return *q;
}

} // namespace fanocheck
