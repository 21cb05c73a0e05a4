#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fanocheck/errors.hpp"
#include "fanocheck/matrix.hpp"
#include "fanocheck/mpoly.hpp"

namespace fanocheck {

/// Linear form sum c_i x_i in the given ring.
template <ExactScalar S>
MPoly<S> linear_form(const RingRef &ring, const std::vector<S> &coeffs) {
  if (coeffs.size() != ring->arity())
    throw RingMismatch("linear form needs one coefficient per variable");
  MPoly<S> out(ring, coeffs.front());
  for (std::size_t i = 0; i < coeffs.size(); ++i)
    if (!coeffs[i].is_zero())
      out += MPoly<S>::variable(ring, i, coeffs[i]).scaled(coeffs[i]);
  return out;
}

/// The ring with variable k removed.
inline RingRef remaining_ring(const RingRef &ring, std::size_t k) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < ring->arity(); ++i)
    if (i != k)
      names.push_back(ring->names[i]);
  return make_ring(std::move(names));
}

/// Substitutes x_k = image, where image lives in remaining_ring(ring, k);
/// the result lives in that ring too.
template <ExactScalar S>
MPoly<S> eliminate_variable(const MPoly<S> &p, std::size_t k, const MPoly<S> &image) {
  std::vector<MPoly<S>> images;
  for (std::size_t i = 0, j = 0; i < p.arity(); ++i)
    images.push_back(i == k ? image : image.var(j++));
  return p.substitute(images);
}

/// Sets x_k = 1.
template <ExactScalar S>
MPoly<S> dehomogenize(const MPoly<S> &p, std::size_t k) {
  const RingRef r = remaining_ring(p.ring(), k);
  return eliminate_variable(p, k, MPoly<S>::constant(r, p.unit()));
}

template <ExactScalar S>
std::vector<S> gradient_at(const MPoly<S> &p, const std::vector<S> &point) {
  std::vector<S> g;
  for (std::size_t i = 0; i < p.arity(); ++i)
    g.push_back(p.partial_derivative(i).evaluate(point));
  return g;
}

/// Matrix of second partials of an affine polynomial at a point.
template <ExactScalar S>
ExactMatrix<S> hessian_at(const MPoly<S> &p_affine, const std::vector<S> &point) {
  const std::size_t n = p_affine.arity();
  ExactMatrix<S> h(n, n, p_affine.unit());
  std::vector<MPoly<S>> first;
  for (std::size_t i = 0; i < n; ++i)
    first.push_back(p_affine.partial_derivative(i));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      h(i, j) = first[i].partial_derivative(j).evaluate(point);
      h(j, i) = h(i, j);
    }
  return h;
}

/// Affine data of a projective point in the chart x_k = 1.
template <ExactScalar S>
struct ChartData {
  MPoly<S> affine;
  std::vector<S> point;
};

template <ExactScalar S>
ChartData<S> to_chart(const MPoly<S> &p, const std::vector<S> &point, std::size_t k) {
  if (point.at(k).is_zero())
    throw ChartMismatch("coordinate " + std::to_string(k) + " vanishes at the point");
  const S inv = point[k].one_like() / point[k];
  std::vector<S> affine_point;
  for (std::size_t i = 0; i < point.size(); ++i)
    if (i != k)
      affine_point.push_back(point[i] * inv);
  return {dehomogenize(p, k), std::move(affine_point)};
}

/// Hessian of the dehomogenization of p in the chart x_k = 1, at the point.
template <ExactScalar S>
ExactMatrix<S> hessian_in_chart(const MPoly<S> &p, const std::vector<S> &point, std::size_t k) {
  const auto c = to_chart(p, point, k);
  return hessian_at(c.affine, c.point);
}

/// Ring with variables u, t for binary forms on a line.
inline RingRef line_ring() {
  static const RingRef r = make_ring({"u", "t"});
  return r;
}

/// p(u * base + t * dir) as a binary form in u, t.
template <ExactScalar S>
MPoly<S> restrict_to_line(const MPoly<S> &p, const std::vector<S> &base, const std::vector<S> &dir) {
  if (base.size() != p.arity() || dir.size() != p.arity())
    throw RingMismatch("line points must have one coordinate per variable");
  bool independent = false;
  for (std::size_t i = 0; i < base.size() && !independent; ++i)
    for (std::size_t j = i + 1; j < base.size() && !independent; ++j)
      independent = !(base[i] * dir[j] - base[j] * dir[i]).is_zero();
  if (!independent)
    throw DegenerateLine("base and direction are proportional");
  const RingRef r = line_ring();
  const auto u = MPoly<S>::variable(r, 0, p.unit()), t = MPoly<S>::variable(r, 1, p.unit());
  std::vector<MPoly<S>> images;
  for (std::size_t i = 0; i < base.size(); ++i)
    images.push_back(u.scaled(base[i]) + t.scaled(dir[i]));
  return p.substitute(images);
}

/// Square root of a multivariate polynomial, solved term by term from the
/// leading monomial down. Absent when p is not a square.
template <ExactScalar S>
std::optional<MPoly<S>> exact_square_root(const MPoly<S> &p) {
  if (p.is_zero())
    return p;
  const Monomial &lm = p.leading_monomial();
  Monomial half(lm.size());
  for (std::size_t i = 0; i < lm.size(); ++i) {
    if (lm[i] % 2 != 0)
      return std::nullopt;
    half[i] = lm[i] / 2;
  }
  auto lc_root = sqrt_exact(p.leading_coefficient());
  if (!lc_root)
    return std::nullopt;
  MPoly<S> q = MPoly<S>::monomial(p.ring(), half, *lc_root);
  const S two_lc = *lc_root + *lc_root;
  MPoly<S> r = p - q * q;
  Monomial m(lm.size());
  while (!r.is_zero()) {
    const Monomial &rm = r.leading_monomial();
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (rm[i] < half[i])
        return std::nullopt;
      m[i] = rm[i] - half[i];
    }
    if (!GrlexDescending{}(half, m))
      return std::nullopt;
    const auto t = MPoly<S>::monomial(p.ring(), m, r.leading_coefficient() / two_lc);
    r -= (q + q + t) * t;
    q += t;
  }
  return q;
}

/// Writes p = c * q^2 with q normalized to leading coefficient 1.
template <ExactScalar S>
std::optional<std::pair<S, MPoly<S>>> square_up_to_constant(const MPoly<S> &p) {
  if (p.is_zero())
    return std::nullopt;
  const S c = p.leading_coefficient();
  auto q = exact_square_root(p.scaled(c.one_like() / c));
  if (!q)
    return std::nullopt;
  return std::make_pair(c, *q);
}

/// Determinant of the Sylvester matrix of p and q with respect to variable
/// var, by fraction-free elimination over the polynomial ring.
template <ExactScalar S>
MPoly<S> sylvester_resultant(const MPoly<S> &p, const MPoly<S> &q, std::size_t var) {
  if (p.is_zero() || q.is_zero())
    return p.zero_like();
  const auto a = p.coefficients_in(var), b = q.coefficients_in(var);
  const std::size_t m = a.size() - 1, n = b.size() - 1;
  const std::size_t size = m + n;
  if (size == 0)
    return p.one_like();
  ExactMatrix<MPoly<S>> syl(size, size, p.zero_like());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k <= m; ++k)
      syl(i, i + k) = a[m - k];
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t k = 0; k <= n; ++k)
      syl(n + i, i + k) = b[n - k];
  return determinant(syl);
}

namespace detail {

template <ExactScalar S>
UPoly<S> gcd_all(const std::vector<UPoly<S>> &ps) {
  UPoly<S> g;
  for (const auto &p : ps)
    g = gcd(g, p);
  return g;
}

/// Whether the three ternary conics share a zero on the line z = 0.
template <ExactScalar S>
bool common_zero_at_infinity(const std::array<MPoly<S>, 3> &f) {
  const S zero = f[0].unit().zero_like(), one = f[0].unit();
  bool all_vanish_at_x = true;
  std::vector<UPoly<S>> affine;
  for (const auto &fi : f) {
    if (!fi.evaluate({one, zero, zero}).is_zero())
      all_vanish_at_x = false;
    const RingRef rx = make_ring({fi.ring()->names[0]});
    const auto x = MPoly<S>::variable(rx, 0, one);
    affine.push_back(fi.substitute({x, x.one_like(), x.zero_like()}).to_upoly(0));
  }
  if (all_vanish_at_x)
    return true;
  const auto g = gcd_all(affine);
  return g.is_zero() || g.degree() > 0;
}

} // namespace detail

/// True when the ternary cubic has no singular point. A common zero of the
/// partials is searched at infinity directly and in the affine chart via
/// resultants eliminating the first variable; frames where the resultants
/// degenerate are retried after a unitriangular change of coordinates.
/// Returns false if no frame certifies smoothness.
template <ExactScalar S>
bool ternary_cubic_is_smooth(const MPoly<S> &c) {
  if (c.arity() != 3 || !c.is_homogeneous() || c.total_degree() != 3)
    throw std::invalid_argument("expected a ternary homogeneous cubic");
  static const std::array<std::array<long, 3>, 8> shears{{{0, 0, 0}, {1, 0, 0}, {0, 1, 1}, {1, 2, 3},
                                                          {2, -1, 1}, {3, 1, -2}, {-1, 3, 2}, {5, -2, 7}}};
  const S one = c.unit();
  const auto x = c.var(0), y = c.var(1), z = c.var(2);
  for (const auto &[a, b, d] : shears) {
    const auto cf = c.substitute({x + y.scaled(one.from_int(a)) + z.scaled(one.from_int(b)),
                                  y + z.scaled(one.from_int(d)), z});
    const std::array<MPoly<S>, 3> f{cf.partial_derivative(0), cf.partial_derivative(1),
                                    cf.partial_derivative(2)};
    if (detail::common_zero_at_infinity(f))
      return false;
    const RingRef rxy = make_ring({c.ring()->names[0], c.ring()->names[1]});
    const auto ax = MPoly<S>::variable(rxy, 0, one), ay = MPoly<S>::variable(rxy, 1, one);
    std::array<MPoly<S>, 3> g{f[0].substitute({ax, ay, ax.one_like()}),
                              f[1].substitute({ax, ay, ax.one_like()}),
                              f[2].substitute({ax, ay, ax.one_like()})};
    std::vector<UPoly<S>> res;
    bool degenerate = false;
    for (auto [i, j] : {std::pair{0, 1}, std::pair{0, 2}, std::pair{1, 2}}) {
      const auto r = sylvester_resultant(g[i], g[j], 0);
      if (r.is_zero()) {
        degenerate = true;
        break;
      }
      res.push_back(r.to_upoly(1));
    }
    if (degenerate)
      continue;
    if (detail::gcd_all(res).degree() == 0)
      return true;
  }
  return false;
}

enum class ConicType { irreducible, line_pair, double_line };

inline std::string to_string(ConicType t) {
  switch (t) {
  case ConicType::irreducible:
    return "irreducible";
  case ConicType::line_pair:
    return "line-pair";
  case ConicType::double_line:
    return "double-line";
  }
  return "?";
}

/// Classification of a ternary conic by the rank of its symmetric matrix.
template <ExactScalar S>
ConicType ternary_conic_classify(const MPoly<S> &q) {
  if (q.arity() != 3 || !q.is_homogeneous() || q.total_degree() != 2)
    throw std::invalid_argument("expected a ternary homogeneous conic");
  const S half = q.unit() / q.unit().from_int(2);
  ExactMatrix<S> a(3, 3, q.unit());
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = i; j < 3; ++j) {
      Monomial m(3, 0);
      m[i] += 1;
      m[j] += 1;
      const S c = q.coeff(m);
      a(i, j) = i == j ? c : c * half;
      a(j, i) = a(i, j);
    }
  switch (rank(a)) {
  case 3:
    return ConicType::irreducible;
  case 2:
    return ConicType::line_pair;
  default:
    return ConicType::double_line;
  }
}

} // namespace fanocheck
