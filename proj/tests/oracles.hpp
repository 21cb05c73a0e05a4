#pragma once

#include <cstddef>
#include <cstdlib>
#include <random>
#include <utility>
#include <vector>

#include "fanocheck/mpoly.hpp"
#include "fanocheck/number_field.hpp"

// Plain Gauss-Jordan rank, no fraction-free tricks.
template <class S>
std::size_t naive_rank(std::vector<std::vector<S>> a) {
  std::size_t r = 0;
  const std::size_t rows = a.size(), cols = rows ? a[0].size() : 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && a[p][c].is_zero())
      ++p;
    if (p == rows)
      continue;
    std::swap(a[p], a[r]);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a[i][c].is_zero())
        continue;
      const S f = a[i][c] / a[r][c];
      for (std::size_t j = c; j < cols; ++j)
        a[i][j] = a[i][j] - f * a[r][j];
    }
    ++r;
  }
  return r;
}

template <class M>
auto rows_of(const M &m) {
  std::vector<decltype(m.row(0))> out;
  for (std::size_t i = 0; i < m.rows(); ++i)
    out.push_back(m.row(i));
  return out;
}

namespace oracle {

using namespace fanocheck;

inline Rational small_rational(std::mt19937 &rng) {
  std::uniform_int_distribution<long> num(-9, 9), den(1, 5);
  return Rational(num(rng), den(rng));
}

inline FieldElement random_element(const FieldRef &k, std::mt19937 &rng) {
  std::vector<Rational> c;
  for (std::size_t i = 0; i < k->degree(); ++i)
    c.push_back(small_rational(rng));
  return FieldElement(k, c);
}

// Schoolbook product of coordinate vectors, then reduction by the monic
// minimal polynomial from the top degree down.
inline std::vector<Rational> naive_product(const std::vector<Rational> &a, const std::vector<Rational> &b,
                                           const std::vector<Rational> &minpoly) {
  const std::size_t n = minpoly.size() - 1;
  std::vector<Rational> p(2 * n - 1);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      p[i + j] += a[i] * b[j];
  for (std::size_t k = p.size(); k-- > n;) {
    const Rational c = p[k];
    for (std::size_t i = 0; i < n; ++i)
      p[k - n + i] -= c * minpoly[i];
    p[k] = Rational();
  }
  p.resize(n);
  return p;
}

inline std::vector<std::vector<Rational>> random_low_rank(std::mt19937 &rng, std::size_t n, std::size_t m, std::size_t r) {
  std::uniform_int_distribution<long> d(-3, 3);
  std::vector<std::vector<Rational>> left(n, std::vector<Rational>(r)), right(r, std::vector<Rational>(m));
  for (auto &row : left)
    for (auto &x : row)
      x = Rational(d(rng));
  for (auto &row : right)
    for (auto &x : row)
      x = Rational(d(rng), 1 + std::abs(d(rng)));
  std::vector<std::vector<Rational>> out(n, std::vector<Rational>(m));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < m; ++j)
      for (std::size_t k = 0; k < r; ++k)
        out[i][j] += left[i][k] * right[k][j];
  return out;
}

inline MPoly<FieldElement> random_ternary_cubic(std::mt19937 &rng, const RingRef &ring, const FieldElement &one) {
  std::uniform_int_distribution<long> d(-4, 4);
  MPoly<FieldElement> out(ring, one);
  for (unsigned a = 0; a <= 3; ++a)
    for (unsigned b = 0; a + b <= 3; ++b) {
      const FieldElement c(one.field(), {Rational(d(rng)), Rational(d(rng))});
      if (!c.is_zero())
        out += MPoly<FieldElement>::monomial(ring, {a, b, 3 - a - b}, c);
    }
  return out;
}

} // namespace oracle
