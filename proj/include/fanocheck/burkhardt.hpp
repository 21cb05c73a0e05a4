#pragma once

#include <array>
#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "fanocheck/errors.hpp"
#include "fanocheck/gram.hpp"
#include "fanocheck/group.hpp"
#include "fanocheck/matrix.hpp"
#include "fanocheck/mpoly.hpp"
#include "fanocheck/number_field.hpp"
#include "fanocheck/poly_algorithms.hpp"

namespace fanocheck::burkhardt {

using Poly = MPoly<FieldElement>;
using Triple = std::array<std::size_t, 3>;

/// Plane x_{i2} = w x_{i1}, x_{i3} = w^2 x_{i1}, sigma_1 = 0 for sign +,
/// with w and w^2 exchanged for sign -.
struct JPlane {
  Triple triple;
  int sign;
  /// Three linear forms as coefficient rows in x0..x5.
  std::vector<std::vector<FieldElement>> equations;

  std::string label() const {
    return std::string("Pi") + (sign > 0 ? "+" : "-") + "_" + std::to_string(triple[0]) +
           std::to_string(triple[1]) + std::to_string(triple[2]);
  }
  bool contains_index(std::size_t k) const {
    return triple[0] == k || triple[1] == k || triple[2] == k;
  }
};

struct BurkhardtModel {
  FieldRef field;
  RingRef ring_p5;
  RingRef ring_p4;
  Poly sigma1;
  Poly sigma4;
  /// sigma4 after eliminating x5 = -(x0 + ... + x4).
  Poly quartic_p4;
  std::vector<Orbit<Point>> point_orbits;
  std::vector<Point> singular_points;
  std::vector<JPlane> planes;
  Group<Perm> s6;
  /// Permutation of plane indices induced by each element of s6.
  std::vector<Perm> plane_action;

  FieldElement omega() const { return FieldElement::generator(field); }
  FieldElement one() const { return FieldElement(field, Rational(1)); }
};

inline Poly elementary_symmetric(const RingRef &ring, std::size_t k, const FieldElement &one) {
  const std::size_t n = ring->arity();
  Poly out(ring, one);
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i)
    idx[i] = i;
  while (true) {
    Monomial m(n, 0);
    for (auto i : idx)
      m[i] = 1;
    out += Poly::monomial(ring, m, one);
    std::size_t pos = k;
    while (pos > 0 && idx[pos - 1] == n - k + pos - 1)
      --pos;
    if (pos == 0)
      break;
    ++idx[pos - 1];
    for (std::size_t j = pos; j < k; ++j)
      idx[j] = idx[j - 1] + 1;
  }
  return out;
}

inline JPlane make_jplane(const Triple &t, int sign, const FieldElement &omega) {
  const FieldElement zero = omega.zero_like(), one = omega.one_like();
  const FieldElement w1 = sign > 0 ? omega : omega * omega;
  const FieldElement w2 = sign > 0 ? omega * omega : omega;
  std::vector<FieldElement> e1(6, zero), e2(6, zero), s(6, one);
  e1[t[1]] = one;
  e1[t[0]] = -w1;
  e2[t[2]] = one;
  e2[t[0]] = -w2;
  return {t, sign, {e1, e2, s}};
}

/// Canonical key of the row space of a set of linear forms.
inline std::string row_space_key(const std::vector<std::vector<FieldElement>> &rows) {
  const auto e = rref(ExactMatrix<FieldElement>(rows, rows.front().front())).matrix;
  std::string k;
  for (std::size_t i = 0; i < e.rows(); ++i)
    for (std::size_t j = 0; j < e.cols(); ++j)
      k += e(i, j).key();
  return k;
}

/// Linear forms transported by a coordinate permutation (form composed with g^-1).
inline std::vector<std::vector<FieldElement>> transport_forms(const Perm &g,
                                                              const std::vector<std::vector<FieldElement>> &rows) {
  std::vector<std::vector<FieldElement>> out;
  for (const auto &r : rows) {
    std::vector<FieldElement> t = r;
    for (std::size_t i = 0; i < r.size(); ++i)
      t[g(i)] = r[i];
    out.push_back(std::move(t));
  }
  return out;
}

inline BurkhardtModel build_model() {
  BurkhardtModel m{fields::eisenstein(), make_indexed_ring(6), make_indexed_ring(5),
                   Poly(make_indexed_ring(6), FieldElement(fields::eisenstein(), Rational(1))),
                   Poly(make_indexed_ring(6), FieldElement(fields::eisenstein(), Rational(1))),
                   Poly(make_indexed_ring(5), FieldElement(fields::eisenstein(), Rational(1))),
                   {}, {}, {}, {}, {}};
  const FieldElement one = m.one(), w = m.omega(), zero = one.zero_like();
  m.sigma1 = elementary_symmetric(m.ring_p5, 1, one);
  m.sigma4 = elementary_symmetric(m.ring_p5, 4, one);
  std::vector<Poly> images;
  Poly last(m.ring_p4, one);
  for (std::size_t i = 0; i < 5; ++i) {
    images.push_back(Poly::variable(m.ring_p4, i, one));
    last -= images.back();
  }
  images.push_back(last);
  m.quartic_p4 = m.sigma4.substitute(images);

  m.s6 = symmetric_group_s6();
  auto act = [](const Perm &g, const Point &p) { return act_on_point(g, p); };
  const Point p30{one, one, w, w, w * w, w * w};
  const Point p15{one, -one, zero, zero, zero, zero};
  for (const auto &p : {p30, p15}) {
    m.point_orbits.push_back(orbit_of(p, m.s6.generators, act, canonical_point, m.s6.order()));
    for (const auto &q : m.point_orbits.back().members)
      m.singular_points.push_back(q);
  }

  for (std::size_t a = 0; a < 6; ++a)
    for (std::size_t b = a + 1; b < 6; ++b)
      for (std::size_t c = b + 1; c < 6; ++c)
        for (int sign : {1, -1})
          m.planes.push_back(make_jplane({a, b, c}, sign, w));

  std::map<std::string, std::size_t> by_key;
  for (std::size_t i = 0; i < m.planes.size(); ++i)
    by_key.emplace(row_space_key(m.planes[i].equations), i);
  std::vector<Perm> generator_perms;
  for (const auto &g : m.s6.generators) {
    std::vector<std::size_t> img;
    for (const auto &pl : m.planes) {
      auto it = by_key.find(row_space_key(transport_forms(g, pl.equations)));
      if (it == by_key.end())
        throw Error("a coordinate permutation moves " + pl.label() + " off the j-plane family");
      img.push_back(it->second);
    }
    generator_perms.emplace_back(std::move(img));
  }
  m.plane_action = induced_action(m.s6, generator_perms);
  return m;
}

inline FieldElement apply_form(const std::vector<FieldElement> &form, const Point &p) {
  FieldElement acc = p.front().zero_like();
  for (std::size_t i = 0; i < form.size(); ++i)
    acc = acc + form[i] * p[i];
  return acc;
}

inline bool plane_contains(const JPlane &pl, const Point &p) {
  for (const auto &e : pl.equations)
    if (!apply_form(e, p).is_zero())
      return false;
  return true;
}

/// Whether sigma4 vanishes identically on the plane.
inline bool plane_on_quartic(const BurkhardtModel &m, const JPlane &pl) {
  const auto k = kernel_basis(ExactMatrix<FieldElement>(pl.equations, m.one()));
  if (k.vectors.size() != 3)
    return false;
  const RingRef r = make_ring({"a", "b", "c"});
  std::vector<Poly> images;
  for (std::size_t i = 0; i < 6; ++i) {
    Poly im(r, m.one());
    for (std::size_t j = 0; j < 3; ++j)
      if (!k.vectors[j][i].is_zero())
        im += Poly::variable(r, j, m.one()).scaled(k.vectors[j][i]);
    images.push_back(std::move(im));
  }
  return m.sigma4.substitute(images).is_zero() && m.sigma1.substitute(images).is_zero();
}

struct NodeCheck {
  Point point;
  bool on_quartic;
  bool gradient_zero;
  FieldElement hessian_det;

  bool is_node() const { return on_quartic && gradient_zero && !hessian_det.is_zero(); }
};

/// Node test in the P^4 model at a point of P^5 on sigma_1 = 0.
inline NodeCheck check_node(const BurkhardtModel &m, const Point &p) {
  const Point q(p.begin(), p.begin() + 5);
  const bool on = m.sigma1.evaluate(p).is_zero() && m.sigma4.evaluate(p).is_zero();
  bool grad_zero = true;
  for (const auto &g : gradient_at(m.quartic_p4, q))
    grad_zero = grad_zero && g.is_zero();
  std::size_t chart = 0;
  while (q[chart].is_zero())
    ++chart;
  const FieldElement det = determinant(hessian_in_chart(m.quartic_p4, q, chart));
  return {p, on, grad_zero, det};
}

inline std::vector<NodeCheck> verify_nodes(const BurkhardtModel &m) {
  std::vector<NodeCheck> out;
  for (const auto &p : m.singular_points)
    out.push_back(check_node(m, p));
  return out;
}

struct IncidenceReport {
  std::vector<std::size_t> points_per_plane;
  std::vector<std::size_t> planes_per_point;
  std::vector<bool> plane_on_quartic;
};

inline IncidenceReport plane_incidence(const BurkhardtModel &m) {
  IncidenceReport r{std::vector<std::size_t>(m.planes.size(), 0),
                    std::vector<std::size_t>(m.singular_points.size(), 0), {}};
  for (std::size_t i = 0; i < m.planes.size(); ++i) {
    r.plane_on_quartic.push_back(plane_on_quartic(m, m.planes[i]));
    for (std::size_t j = 0; j < m.singular_points.size(); ++j)
      if (plane_contains(m.planes[i], m.singular_points[j])) {
        ++r.points_per_plane[i];
        ++r.planes_per_point[j];
      }
  }
  return r;
}

enum class Meet { line, point };

/// Intersection type from the rank of the six stacked linear forms.
inline Meet plane_pair_meet(const JPlane &a, const JPlane &b) {
  auto rows = a.equations;
  rows.insert(rows.end(), b.equations.begin(), b.equations.end());
  switch (rank(ExactMatrix<FieldElement>(rows, rows.front().front()))) {
  case 3:
    throw IdenticalPlanes(a.label() + " and " + b.label() + " coincide");
  case 4:
    return Meet::line;
  case 5:
    return Meet::point;
  default:
    throw Error("unexpected rank for the planes " + a.label() + ", " + b.label());
  }
}

/// 1 if positions 1 <= a < b <= 3 and 1 <= a' < b' <= 3 exist with
/// i_a = j_a', i_b = j_b' and b - a = b' - a'.
inline int delta_rule(const Triple &i, const Triple &j) {
  std::size_t common = 0;
  for (auto x : i)
    for (auto y : j)
      common += x == y ? 1 : 0;
  if (common != 2)
    throw NotCTwo("the triples share " + std::to_string(common) + " indices");
  for (std::size_t a = 0; a < 3; ++a)
    for (std::size_t b = a + 1; b < 3; ++b)
      for (std::size_t a2 = 0; a2 < 3; ++a2)
        for (std::size_t b2 = a2 + 1; b2 < 3; ++b2)
          if (i[a] == j[a2] && i[b] == j[b2] && b - a == b2 - a2)
            return 1;
  return 0;
}

/// Pairing predicted by the combinatorial rule on triples and signs.
inline int predicted_pairing(const JPlane &p, const JPlane &q) {
  if (p.triple == q.triple)
    return p.sign == q.sign ? -2 : 1;
  std::size_t c = 0;
  for (auto x : p.triple)
    for (auto y : q.triple)
      c += x == y ? 1 : 0;
  if (c == 0)
    return 1;
  if (c == 1)
    return 0;
  const int d = delta_rule(p.triple, q.triple);
  return p.sign == q.sign ? d : 1 - d;
}

struct MeetReport {
  std::size_t pairs = 0;
  std::size_t lines = 0;
  std::size_t points = 0;
  std::size_t delta_pairs = 0;
  std::vector<std::string> mismatches;
};

/// Geometric Gram matrix: -2 on the diagonal, 1 for planes meeting in a
/// line, 0 for planes meeting in a point. The rule report records every
/// pair where geometry and the combinatorial prediction differ.
inline GramMatrix build_gram(const BurkhardtModel &m, MeetReport *report = nullptr) {
  const std::size_t n = m.planes.size();
  ExactMatrix<Rational> g(n, n, Rational());
  MeetReport local;
  for (std::size_t i = 0; i < n; ++i) {
    g(i, i) = Rational(-2);
    for (std::size_t j = i + 1; j < n; ++j) {
      const Meet t = plane_pair_meet(m.planes[i], m.planes[j]);
      const int value = t == Meet::line ? 1 : 0;
      g(i, j) = g(j, i) = Rational(value);
      ++local.pairs;
      ++(t == Meet::line ? local.lines : local.points);
      const auto &a = m.planes[i], &b = m.planes[j];
      std::size_t c = 0;
      for (auto x : a.triple)
        for (auto y : b.triple)
          c += x == y ? 1 : 0;
      local.delta_pairs += c == 2 ? 1 : 0;
      if (predicted_pairing(a, b) != value)
        local.mismatches.push_back(a.label() + "," + b.label());
    }
  }
  std::vector<std::string> labels;
  for (const auto &p : m.planes)
    labels.push_back(p.label());
  if (report)
    *report = local;
  else if (!local.mismatches.empty())
    throw RuleMismatch("geometry and rule disagree on " + local.mismatches.front());
  return GramMatrix(std::move(labels), std::move(g));
}

inline std::vector<std::size_t> planes_where(const BurkhardtModel &m, bool contains_five) {
  std::vector<std::size_t> idx;
  for (std::size_t i = 0; i < m.planes.size(); ++i)
    if (m.planes[i].contains_index(5) == contains_five)
      idx.push_back(i);
  return idx;
}

struct GramRanks {
  std::size_t full;
  std::size_t avoiding_five;
  std::size_t containing_five;
  std::size_t kernel_dimension;
};

inline GramRanks gram_ranks(const BurkhardtModel &m, const GramMatrix &g) {
  const auto avoid = planes_where(m, false), contain = planes_where(m, true);
  const std::size_t full = rank(g.matrix);
  return {full, rank(g.matrix.select(avoid, avoid)), rank(g.matrix.select(contain, contain)),
          kernel_basis(g.matrix).vectors.size()};
}

struct InvariantRank {
  std::string subgroup;
  std::size_t order;
  std::vector<std::size_t> orbit_sizes;
  std::size_t orbit_sum_rank;
  long trace_dimension;
};

/// Plane permutations for the elements of a subgroup of S6.
inline std::vector<Perm> restrict_action(const BurkhardtModel &m, const Group<Perm> &h) {
  std::vector<Perm> out;
  for (const auto &g : h.elements) {
    auto i = m.s6.find(g);
    if (!i)
      throw Error("element " + g.to_string() + " is not in S6");
    out.push_back(m.plane_action[*i]);
  }
  return out;
}

inline InvariantRank invariant_rank_for(const GramMatrix &g, const std::string &name,
                                        const std::vector<Perm> &action) {
  const auto orbits = orbits_of_action(action, g.size());
  std::vector<std::size_t> sizes;
  for (const auto &o : orbits)
    sizes.push_back(o.size());
  return {name, action.size(), sizes, rank(orbit_sum_gram(g, orbits)),
          invariant_dimension_via_trace(g, action)};
}

inline Group<Perm> alternating_group_a6(const BurkhardtModel &m) {
  Group<Perm> a6;
  std::vector<Perm> evens;
  for (const auto &g : m.s6.elements)
    if (g.is_even())
      evens.push_back(g);
  a6.elements = evens;
  return a6;
}

/// Invariant ranks for the trivial group, S6, A6 and both A5 embeddings.
inline std::vector<InvariantRank> invariant_ranks(const BurkhardtModel &m, const GramMatrix &g) {
  std::vector<InvariantRank> out;
  out.push_back(invariant_rank_for(g, "trivial", {Perm::identity(m.planes.size())}));
  out.push_back(invariant_rank_for(g, "S6", m.plane_action));
  out.push_back(invariant_rank_for(g, "A6", restrict_action(m, alternating_group_a6(m))));
  out.push_back(invariant_rank_for(g, "A5-standard", restrict_action(m, subgroup_standard_A5())));
  out.push_back(invariant_rank_for(g, "A5-nonstandard", restrict_action(m, subgroup_nonstandard_A5())));
  return out;
}

} // namespace fanocheck::burkhardt
