#pragma once

#include <cstddef>
#include <fstream>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "fanocheck/errors.hpp"
#include "fanocheck/gram.hpp"
#include "fanocheck/group.hpp"
#include "fanocheck/matrix.hpp"
#include "fanocheck/mpoly.hpp"
#include "fanocheck/number_field.hpp"
#include "fanocheck/poly_algorithms.hpp"
#include "fanocheck/ratfun.hpp"

namespace fanocheck::barth {

using Poly = MPoly<FieldElement>;
using RF = RationalFunction<FieldElement>;
using RFPoly = MPoly<RF>;
using Vec = std::vector<FieldElement>;

/// "0", "-1", "tau", "1-tau", "2+3*tau", ...
inline std::string golden_label(const FieldElement &a) {
  const Rational c0 = a.coords()[0], c1 = a.coords()[1];
  if (c1 == Rational(0))
    return c0.to_string();
  std::string t = c1 == Rational(1) ? "tau" : c1 == Rational(-1) ? "-tau" : c1.to_string() + "*tau";
  if (c0 == Rational(0))
    return t;
  if (c1 == Rational(-1))
    return c0.to_string() + t;
  if (c1 == Rational(1))
    return t + (c0 > Rational(0) ? "+" : "") + c0.to_string();
  return c0.to_string() + (c1 > Rational(0) ? "+" : "") + t;
}

inline std::string vector_label(const Vec &v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i)
    out += (i ? "," : "") + golden_label(v[i]);
  return out + ")";
}

struct LabelledVector {
  std::string label;
  Vec coords;
};

struct BarthModel {
  FieldRef field;
  /// x0..x3
  RingRef ring;
  /// x0..x2, coordinates on a plane x3 = v.x
  RingRef plane_ring;
  Poly sextic;
  /// N, R, M as 3x3 matrices acting on x0..x2; x3 is fixed.
  std::vector<std::pair<std::string, MatElem>> generators;
  Group<MatElem> group;
  /// Actual matrices of the group elements, in the order of group.elements.
  std::vector<MatElem> rotations;
  /// Orbits of [1:0:0:0], [1:1:1:1], [1:0:0:1].
  std::vector<Orbit<Point>> sigma_orbits;
  std::vector<LabelledVector> xi_planes;
  std::vector<LabelledVector> theta_planes;

  FieldElement one() const { return FieldElement(field, Rational(1)); }
  FieldElement tau() const { return FieldElement::generator(field); }
  FieldElement num(long c0, long c1 = 0) const {
    return FieldElement(field, {Rational(c0), Rational(c1)});
  }
  Poly var(std::size_t i) const { return Poly::variable(ring, i, one()); }
  Poly plane_var(std::size_t i) const { return Poly::variable(plane_ring, i, one()); }

  const MatElem &generator(const std::string &name) const {
    for (const auto &[n, g] : generators)
      if (n == name)
        return g;
    throw UnboundLetter("no generator named " + name);
  }
  std::map<std::string, MatElem> letters() const {
    return std::map<std::string, MatElem>(generators.begin(), generators.end());
  }
  MatElem identity() const { return MatElem(ExactMatrix<FieldElement>::identity(3, one())); }

  const LabelledVector &xi(const std::string &label) const {
    for (const auto &p : xi_planes)
      if (p.label == label)
        return p;
    throw std::invalid_argument("no plane Xi" + label);
  }
  const LabelledVector &theta_projectively(const Vec &u) const {
    const auto key = object_key(canonical_point(u));
    for (const auto &p : theta_planes)
      if (object_key(canonical_point(p.coords)) == key)
        return p;
    throw std::invalid_argument("no plane Theta" + vector_label(u));
  }
};

/// 4(t^2x0^2 - x1^2)(t^2x1^2 - x2^2)(t^2x2^2 - x0^2) - (1+2t) x3^2 (x0^2+x1^2+x2^2-x3^2)^2
inline Poly barth_sextic(const RingRef &ring, const FieldElement &one) {
  const FieldElement t = FieldElement::generator(one.field());
  const FieldElement t2 = t * t;
  std::vector<Poly> x;
  for (std::size_t i = 0; i < 4; ++i)
    x.push_back(Poly::variable(ring, i, one));
  Poly prod = x[0].one_like();
  for (std::size_t i = 0; i < 3; ++i) {
    const Poly &a = x[i], &b = x[(i + 1) % 3];
    prod *= (a * a).scaled(t2) - b * b;
  }
  const Poly sphere = x[0] * x[0] + x[1] * x[1] + x[2] * x[2] - x[3] * x[3];
  return prod.scaled(one.from_int(4)) - (x[3] * x[3] * sphere * sphere).scaled(one + t + t);
}

/// The plane x3 = v.x carried by g is x3 = (g^-T v).x.
inline Vec transport_vector(const MatElem &g, const Vec &v) {
  const MatElem inv = g.inverse();
  Vec out(v.size(), v.front().zero_like());
  for (std::size_t i = 0; i < v.size(); ++i)
    for (std::size_t j = 0; j < v.size(); ++j)
      out[i] = out[i] + inv(j, i) * v[j];
  return out;
}

/// g acting on the first three coordinates of a point of P^3.
inline Point act_on_p3(const MatElem &g, const Point &p) {
  Point head(p.begin(), p.begin() + 3);
  Point out = act_on_point(g, head);
  out.push_back(p[3]);
  return out;
}

inline std::string exact_key(const MatElem &g) {
  std::string k;
  for (std::size_t i = 0; i < g.dimension(); ++i)
    for (std::size_t j = 0; j < g.dimension(); ++j)
      k += g(i, j).key();
  return k;
}

inline BarthModel build_barth() {
  const FieldRef k = fields::golden();
  const FieldElement one(k, Rational(1));
  BarthModel m{k, make_indexed_ring(4), make_indexed_ring(3), Poly(make_indexed_ring(4), one),
               {}, {}, {}, {}, {}, {}};
  m.sextic = barth_sextic(m.ring, one);
  const FieldElement t = m.tau(), z = one.zero_like(), h = FieldElement(k, Rational(1, 2));
  auto mat = [&](std::vector<std::vector<FieldElement>> rows) {
    return MatElem(ExactMatrix<FieldElement>(std::move(rows), one));
  };
  m.generators = {
      {"N", mat({{-one, z, z}, {z, -one, z}, {z, z, one}})},
      {"R", mat({{z, z, one}, {one, z, z}, {z, one, z}})},
      {"M", mat({{h * t, h * (t - one), h}, {h * (t - one), h, -h * t}, {-h, h * t, h * (t - one)}})}};
  std::vector<MatElem> gens;
  for (const auto &[n, g] : m.generators)
    gens.push_back(g);
  m.group = generate_group(gens, 120);
  m.rotations.push_back(m.identity());
  for (std::size_t i = 1; i < m.group.order(); ++i)
    m.rotations.push_back(gens[m.group.via[i]] * m.rotations[m.group.parent[i]]);

  auto act = [](const MatElem &g, const Point &p) { return act_on_p3(g, p); };
  for (const Point &seed : {Point{one, z, z, z}, Point{one, one, one, one}, Point{one, z, z, one}})
    m.sigma_orbits.push_back(orbit_of(seed, gens, act, canonical_point, m.group.order()));

  auto keep = [](const Vec &v) { return v; };
  const auto xi = orbit_of(Vec{one, one, one}, gens, transport_vector, keep, m.group.order());
  for (const auto &v : xi.members)
    m.xi_planes.push_back({vector_label(v), v});
  auto act_dual = [](const MatElem &g, const Vec &u) { return transport_vector(g, u); };
  const auto theta = orbit_of(Vec{t, one, z}, gens, act_dual, canonical_point, m.group.order());
  for (const auto &u : theta.members)
    m.theta_planes.push_back({vector_label(u), u});
  return m;
}

// ---------------------------------------------------------------- fixtures

inline FieldElement golden_from_json(const nlohmann::json &j, const FieldRef &k) {
  return FieldElement(k, {Rational::parse(j.at(0).dump()), Rational::parse(j.at(1).dump())});
}

/// [{"label": "(1,1,1)", "<key>": [[c0, c1], ...]}], entries c0 + c1*tau.
inline std::vector<LabelledVector> load_plane_fixture(const std::string &path, const std::string &key,
                                                      const FieldRef &k) {
  std::ifstream in(path);
  if (!in)
    throw std::runtime_error("cannot open fixture " + path);
  std::vector<LabelledVector> out;
  for (const auto &e : nlohmann::json::parse(in)) {
    Vec v;
    for (const auto &c : e.at(key))
      v.push_back(golden_from_json(c, k));
    out.push_back({e.at("label").get<std::string>(), std::move(v)});
  }
  return out;
}

struct WordRow {
  std::string label;
  std::string word;
};

inline std::vector<WordRow> load_word_fixture(const std::string &path) {
  std::ifstream in(path);
  if (!in)
    throw std::runtime_error("cannot open fixture " + path);
  std::vector<WordRow> out;
  for (const auto &e : nlohmann::json::parse(in))
    out.push_back({e.at("label").get<std::string>(), e.at("word").get<std::string>()});
  return out;
}

/// Expected entries of one row of the pairing matrix, grouped by value.
struct RowPattern {
  std::string row;
  std::vector<std::string> zero;
  std::vector<std::string> one;
  std::vector<std::string> minus_two;
};

inline RowPattern load_row_pattern(const std::string &path) {
  std::ifstream in(path);
  if (!in)
    throw std::runtime_error("cannot open fixture " + path);
  const auto j = nlohmann::json::parse(in);
  return {j.at("row").get<std::string>(), j.at("zero").get<std::vector<std::string>>(),
          j.at("one").get<std::vector<std::string>>(), j.at("minus_two").get<std::vector<std::string>>()};
}

/// Computed Xi planes must coincide with the listed ones (labels and
/// vectors); Theta planes are compared projectively. Returns the first
/// discrepancy.
inline std::optional<std::string> compare_plane_lists(const BarthModel &m, const std::vector<LabelledVector> &xi,
                                                      const std::vector<LabelledVector> &theta) {
  if (xi.size() != m.xi_planes.size())
    return "listed " + std::to_string(xi.size()) + " Xi planes, computed " + std::to_string(m.xi_planes.size());
  for (const auto &p : xi) {
    bool found = false;
    for (const auto &q : m.xi_planes)
      found = found || (q.coords == p.coords && q.label == p.label);
    if (!found)
      return "Xi" + p.label + " is not in the computed orbit";
  }
  if (theta.size() != m.theta_planes.size())
    return "listed " + std::to_string(theta.size()) + " Theta planes, computed " +
           std::to_string(m.theta_planes.size());
  for (const auto &p : theta) {
    try {
      m.theta_projectively(p.coords);
    } catch (const std::invalid_argument &) {
      return "Theta" + p.label + " is not in the computed orbit";
    }
  }
  return std::nullopt;
}

// --------------------------------------------------------------- invariance

struct InvarianceScalar {
  std::string generator;
  FieldElement scalar;
};

inline std::vector<InvarianceScalar> verify_invariance(const BarthModel &m) {
  std::vector<InvarianceScalar> out;
  for (const auto &[name, g] : m.generators) {
    const Poly image = act_on_poly(g, m.sextic);
    const FieldElement c = image.leading_coefficient() / m.sextic.leading_coefficient();
    if (!(image == m.sextic.scaled(c)))
      throw NotInvariant("the sextic is not proportional to its image under " + name);
    out.push_back({name, c});
  }
  return out;
}

// -------------------------------------------------------------------- nodes

struct BarthNode {
  Point point;
  bool on_surface;
  bool gradient_zero;
  FieldElement hessian_det;

  bool is_node() const { return on_surface && gradient_zero && !hessian_det.is_zero(); }
};

inline BarthNode check_node(const BarthModel &m, const Point &p) {
  bool grad_zero = true;
  for (const auto &g : gradient_at(m.sextic, p))
    grad_zero = grad_zero && g.is_zero();
  std::size_t chart = 0;
  while (p[chart].is_zero())
    ++chart;
  return {p, m.sextic.evaluate(p).is_zero(), grad_zero, determinant(hessian_in_chart(m.sextic, p, chart))};
}

inline std::vector<BarthNode> verify_nodes_barth(const BarthModel &m) {
  std::vector<BarthNode> out;
  for (const auto &o : m.sigma_orbits)
    for (const auto &p : o.members)
      out.push_back(check_node(m, p));
  return out;
}

// ------------------------------------------------------ plane restrictions

/// The sextic on x3 = v.x, in x0, x1, x2.
inline Poly restrict_to_xi(const BarthModel &m, const Vec &v) {
  return eliminate_variable(m.sextic, 3, linear_form(m.plane_ring, v));
}

/// The sextic on u.x = 0, solved for the first variable with u_k != 0.
inline Poly restrict_to_theta(const BarthModel &m, const Vec &u) {
  std::size_t k = 0;
  while (u.at(k).is_zero())
    ++k;
  const RingRef r = remaining_ring(m.ring, k);
  Vec coeffs;
  for (std::size_t i = 0; i < 4; ++i)
    if (i != k)
      coeffs.push_back(i < 3 ? -(u[i] / u[k]) : m.one().zero_like());
  return eliminate_variable(m.sextic, k, linear_form(r, coeffs));
}

/// Cubics printed for the planes x3 = x0+x1+x2, x3 = x0-x1-x2 (as squared
/// factors of the restriction) and for the surfaces over x3 = x0+x1-x2 and
/// x3 = x0-x1-x2.
struct PrintedCubics {
  Poly first_square;
  Poly second_square;
  Poly surface_1_1_m1;
  Poly surface_1_m1_m1;
};

inline PrintedCubics printed_cubics(const BarthModel &m) {
  const Poly x0 = m.plane_var(0), x1 = m.plane_var(1), x2 = m.plane_var(2);
  const FieldElement t = m.tau(), one = m.one();
  const FieldElement a = t - one - one, b = t - one - one - one;
  return {(x0 * x1 * x1 + x1 * x2 * x2 + x2 * x0 * x0).scaled(a) + (x0 * x1 * x2).scaled(b) -
              (x0 * x0 * x1 + x1 * x1 * x2 + x2 * x2 * x0),
          (x0 * x1 * x1 - x1 * x2 * x2 - x2 * x0 * x0).scaled(-a) + (x0 * x1 * x2).scaled(-b) -
              (x0 * x0 * x1 + x1 * x1 * x2 - x2 * x2 * x0),
          (x0 * x1 * x1 + x1 * x2 * x2 - x2 * x0 * x0).scaled(a) - (x0 * x1 * x2).scaled(b) -
              (x0 * x0 * x1 - x1 * x1 * x2 + x2 * x2 * x0),
          (x0 * x1 * x1 - x1 * x2 * x2 - x2 * x0 * x0).scaled(a) + (x0 * x1 * x2).scaled(b) +
              (x0 * x0 * x1 + x1 * x1 * x2 - x2 * x2 * x0)};
}

/// -4(5 tau + 3)
inline FieldElement square_constant(const BarthModel &m) { return m.num(-12, -20); }

struct XiRestriction {
  std::string label;
  FieldElement constant;
  Poly cubic;
  bool smooth;
};

struct ThetaRestriction {
  std::string label;
  FieldElement constant;
  Poly line;
  Poly conic;
  ConicType conic_type;
};

struct RestrictionReport {
  std::vector<XiRestriction> xi;
  std::vector<ThetaRestriction> theta;
  bool first_square_identity = false;
  bool second_square_identity = false;
  /// Restriction to Theta(-1,0,tau) over x3^2 (x1^2 + (1+tau^2) x2^2 - x3^2)^2.
  FieldElement theta_example_scalar = FieldElement(fields::golden(), Rational(0));
  std::size_t xi_boundary_lines = 0;
  std::size_t theta_boundary_lines = 0;
};

inline XiRestriction restrict_xi_checked(const BarthModel &m, const LabelledVector &p) {
  const Poly r = restrict_to_xi(m, p.coords);
  const auto sq = square_up_to_constant(r);
  if (!sq || sq->second.total_degree() != 3)
    throw RestrictionMismatch("restriction to Xi" + p.label + " is not a constant times a squared cubic");
  return {p.label, sq->first, sq->second, ternary_cubic_is_smooth(sq->second)};
}

inline ThetaRestriction restrict_theta_checked(const BarthModel &m, const LabelledVector &p) {
  const Poly r = restrict_to_theta(m, p.coords);
  const auto sq = square_up_to_constant(r);
  if (!sq)
    throw RestrictionMismatch("restriction to Theta" + p.label + " is not a constant times a square");
  const std::size_t x3 = r.ring()->index_of("x3");
  const Poly line = r.var(x3);
  const auto conic = sq->second.divide_exact(line);
  if (!conic)
    throw RestrictionMismatch("x3 does not divide the square root of the restriction to Theta" + p.label);
  if (!(r == (line * line * *conic * *conic).scaled(sq->first)))
    throw RestrictionMismatch("Theta" + p.label + " restriction does not recombine");
  return {p.label, sq->first, line, *conic, ternary_conic_classify(*conic)};
}

inline RestrictionReport verify_plane_restrictions(const BarthModel &m) {
  RestrictionReport rep;
  for (const auto &p : m.xi_planes) {
    rep.xi.push_back(restrict_xi_checked(m, p));
    if (!rep.xi.back().smooth)
      throw RestrictionMismatch("cubic on Xi" + p.label + " is not certified smooth");
  }
  for (const auto &p : m.theta_planes) {
    rep.theta.push_back(restrict_theta_checked(m, p));
    if (rep.theta.back().conic_type != ConicType::irreducible)
      throw RestrictionMismatch("conic on Theta" + p.label + " is " + to_string(rep.theta.back().conic_type));
  }

  const auto cubics = printed_cubics(m);
  const FieldElement c = square_constant(m);
  const FieldElement one = m.one(), z = one.zero_like();
  rep.first_square_identity =
      restrict_to_xi(m, {one, one, one}) == (cubics.first_square * cubics.first_square).scaled(c);
  rep.second_square_identity =
      restrict_to_xi(m, {one, -one, -one}) == (cubics.second_square * cubics.second_square).scaled(c);
  if (!rep.first_square_identity || !rep.second_square_identity)
    throw RestrictionMismatch("printed square restriction does not match");

  const Vec u{-one, z, m.tau()};
  const Poly r = restrict_to_theta(m, m.theta_projectively(u).coords);
  const Poly x1 = r.var(0), x2 = r.var(1), x3 = r.var(2);
  const Poly conic = x1 * x1 + (x2 * x2).scaled(one + m.tau() * m.tau()) - x3 * x3;
  const Poly shape = x3 * x3 * conic * conic;
  rep.theta_example_scalar = r.leading_coefficient() / shape.leading_coefficient();
  if (!(r == shape.scaled(rep.theta_example_scalar)))
    throw RestrictionMismatch("restriction to Theta(-1,0,tau) is not proportional to the printed form");

  std::map<std::string, bool> lines;
  for (const auto &p : m.xi_planes)
    lines[object_key(canonical_point(p.coords))] = true;
  rep.xi_boundary_lines = lines.size();
  lines.clear();
  for (const auto &p : m.theta_planes)
    lines[object_key(canonical_point(p.coords))] = true;
  rep.theta_boundary_lines = lines.size();
  if (rep.xi_boundary_lines != 10 || rep.theta_boundary_lines != 6)
    throw RestrictionMismatch("planes meet x3 = 0 in " + std::to_string(rep.xi_boundary_lines) + " and " +
                              std::to_string(rep.theta_boundary_lines) + " lines");
  return rep;
}

// --------------------------------------------------- plane classification

inline RFPoly lift(const Poly &p, const RF &like) {
  return p.map_coefficients([&](const FieldElement &c) { return like.from_scalar(c); }, like);
}

inline Poly specialize(const RFPoly &p, const FieldElement &value) {
  return p.map_coefficients([&](const RF &c) { return c.evaluate(value); }, value.one_like());
}

/// An even sextic a6 x^6 + a4 x^4 + a2 x^2 + a0 with a6, a0 != 0 is not the
/// square of a cubic q: the x^5 and x coefficients of q^2 force q to have
/// no x^2 and no x term, and then q^2 has x^3 coefficient 2 q3 q0 != 0.
template <ExactScalar S>
bool parity_certificate(const UPoly<S> &f) {
  if (f.degree() != 6)
    return false;
  const S zero = f.lead().zero_like();
  return !f.coeff(0, zero).is_zero() && f.coeff(1, zero).is_zero() && f.coeff(3, zero).is_zero() &&
         f.coeff(5, zero).is_zero() && !f.lead().is_zero();
}

struct PlaneClassificationReport {
  bool pencil_line_divides_once = false;
  bool pencil_base_is_theta = false;
  bool family_closed_form = false;
  bool family_odd_coefficients_vanish = false;
  bool family_constant_term = false;
  bool family_leading_coefficient = false;
  bool family_parity_certificate = false;
  bool family_no_square_root = false;
  bool controls_are_squares = false;
  bool controls_match_xi = false;
  bool section_closed_form = false;
  bool section_parity_certificate = false;
  bool section_no_square_root = false;
  std::string family_restriction;
  std::string section_restriction;

  std::vector<std::string> failures() const {
    std::vector<std::string> out;
    auto need = [&](bool ok, const char *what) {
      if (!ok)
        out.emplace_back(what);
    };
    need(pencil_line_divides_once, "pencil through tau x0 + x1 = x3 = 0: line multiplicity is not 1");
    need(pencil_base_is_theta, "lambda = 0 member is not Theta(tau,1,0)");
    need(family_closed_form, "f(1,x1,-x1) differs from its closed form");
    need(family_odd_coefficients_vanish, "f(1,x1,-x1) has odd terms");
    need(family_constant_term, "constant term of f(1,x1,-x1) differs");
    need(family_leading_coefficient, "leading coefficient of f(1,x1,-x1) differs");
    need(family_parity_certificate, "no parity certificate for f(1,x1,-x1)");
    need(family_no_square_root, "f or f(1,x1,-x1) has a square root over Q(tau)(mu)");
    need(controls_are_squares, "mu = 1 or mu = -1 member is not a square");
    need(controls_match_xi, "mu = 1, -1 members differ from Xi(1,1,1), Xi(-1,-1,-1)");
    need(section_closed_form, "g(x1,-x1,1) differs from its closed form");
    need(section_parity_certificate, "no parity certificate for g(x1,-x1,1)");
    need(section_no_square_root, "g or g(x1,-x1,1) is a square");
    return out;
  }
};

inline PlaneClassificationReport verify_plane_classification(const BarthModel &m) {
  PlaneClassificationReport rep;
  const FieldElement one = m.one(), t = m.tau(), z = one.zero_like();
  const RF K(one, "lambda");
  const RFPoly sextic = lift(m.sextic, K);

  // tau x0 + x1 = lambda x3
  {
    const RF lambda = RF::variable(one, "lambda");
    const RFPoly l4 = lift(linear_form(m.plane_ring, Vec{t, one, z}), K);
    const RFPoly r = eliminate_variable(sextic, 3, l4.scaled(K.one_like() / lambda));
    const auto q = r.divide_exact(l4);
    rep.pencil_line_divides_once = q && !q->divide_exact(l4);
    try {
      m.theta_projectively(Vec{t, one, z});
      rep.pencil_base_is_theta = true;
    } catch (const std::invalid_argument &) {
      rep.pencil_base_is_theta = false;
    }
  }

  // x0 + x1 + x2 = x3 / mu
  const RF F(one, "mu");
  const RF mu = RF::variable(one, "mu");
  const RFPoly f =
      eliminate_variable(lift(m.sextic, F), 3, lift(linear_form(m.plane_ring, Vec{one, one, one}), F).scaled(mu));
  const RingRef rx = make_ring({"x1"});
  const RFPoly x = RFPoly::variable(rx, 0, F.one_like());
  const RFPoly f1 = f.substitute({x.one_like(), x, -x});
  rep.family_restriction = f1.to_string();
  {
    const RF c8 = F.from_scalar(m.num(4, 8));
    const RF mu2 = mu * mu;
    const RF tt = F.from_scalar(t), o = F.one_like();
    const RF a6 = -c8, a4 = -(c8 * (mu2 - F.from_int(3))), a2 = c8 * (mu2 - tt) * (mu2 + tt - o),
             a0 = -(F.from_scalar(one + t + t) * mu2 * (mu + o) * (mu + o) * (mu - o) * (mu - o));
    const RFPoly closed =
        x.pow(6).scaled(a6) + x.pow(4).scaled(a4) + x.pow(2).scaled(a2) + x.one_like().scaled(a0);
    rep.family_closed_form = f1 == closed;
    const UPoly<RF> u = f1.to_upoly(0);
    rep.family_odd_coefficients_vanish =
        u.coeff(1, F).is_zero() && u.coeff(3, F).is_zero() && u.coeff(5, F).is_zero();
    rep.family_constant_term = u.coeff(0, F) == a0;
    rep.family_leading_coefficient = u.degree() == 6 && u.lead() == a6;
    rep.family_parity_certificate = parity_certificate(u);
    rep.family_no_square_root =
        !exact_square_root(f1) && !square_up_to_constant(f1) && !square_up_to_constant(f);
  }
  {
    bool squares = true, match = true;
    const Poly xs = Poly::variable(rx, 0, one);
    const Poly expected_f1 = ((xs.pow(3) - xs) * (xs.pow(3) - xs)).scaled(-m.num(4, 8));
    for (const FieldElement &value : {one, -one}) {
      const Poly fv = specialize(f, value);
      squares = squares && square_up_to_constant(fv).has_value() && specialize(f1, value) == expected_f1;
      match = match && fv == restrict_to_xi(m, {value, value, value});
    }
    rep.controls_are_squares = squares;
    rep.controls_match_xi = match;
  }

  // x0 + x1 + x2 = 0
  {
    const RingRef r = remaining_ring(m.ring, 0);
    const Poly g = eliminate_variable(m.sextic, 0, linear_form(r, Vec{-one, -one, z}));
    const Poly xs = Poly::variable(rx, 0, one);
    const Poly g1 = g.substitute({xs, -xs, xs.one_like()});
    rep.section_restriction = g1.to_string();
    const Poly closed = (xs.pow(6).scaled(one.from_int(4)) + xs.pow(4).scaled(one.from_int(4)) -
                         xs.pow(2).scaled(one.from_int(4)) + xs.one_like())
                            .scaled(-(one + t + t));
    rep.section_closed_form = g1 == closed;
    rep.section_parity_certificate = parity_certificate(g1.to_upoly(0));
    rep.section_no_square_root = !exact_square_root(g1) && !square_up_to_constant(g1) && !square_up_to_constant(g);
  }

  const auto bad = rep.failures();
  if (!bad.empty()) {
    std::string msg;
    for (const auto &b : bad)
      msg += (msg.empty() ? "" : "; ") + b;
    throw FamilyCheckFailed(msg);
  }
  return rep;
}

// ----------------------------------------------------------------- surfaces

/// Component of the preimage of x3 = v.x on the double solid: w = sign*C*cubic
/// with C^2 = 4(5 tau + 3).
struct SolidSurface {
  std::string label;
  Vec v;
  int sign;
  /// x3 - v.x
  Poly linear;
  /// y = C * cubic on the plane, with the sign already applied.
  Poly cubic;

  std::string name() const { return std::string("Xi") + (sign > 0 ? "+" : "-") + label; }
};

struct SurfaceFamily {
  std::vector<SolidSurface> plus;
  std::vector<SolidSurface> minus;
  std::vector<std::string> theta_labels;
  /// Permutation of plus indices induced by each element of the group.
  std::vector<Perm> action;

  std::size_t index_of(const std::string &label) const {
    for (std::size_t i = 0; i < plus.size(); ++i)
      if (plus[i].label == label)
        return i;
    throw std::invalid_argument("no surface over Xi" + label);
  }
};

/// l1..l6 and q3^2 / (1 + 2 tau) in x0..x3, so that the sextic is
/// 4 l1...l6 - (1 + 2 tau) x3^2 (x0^2 + x1^2 + x2^2 - x3^2)^2.
struct SolidForms {
  std::vector<Poly> l;
  Poly q3_squared;
};

inline SolidForms solid_forms(const BarthModel &m) {
  const Poly x0 = m.var(0), x1 = m.var(1), x2 = m.var(2), x3 = m.var(3);
  const FieldElement t = m.tau();
  SolidForms s{{x0.scaled(t) - x1, x1.scaled(t) - x2, x2.scaled(t) - x0, x0.scaled(t) + x1, x1.scaled(t) + x2,
                x2.scaled(t) + x0},
               x0.zero_like()};
  const Poly sphere = x0 * x0 + x1 * x1 + x2 * x2 - x3 * x3;
  s.q3_squared = (x3 * x3 * sphere * sphere).scaled(m.one() + t + t);
  return s;
}

/// C^2 cubic^2 + 4 l1...l6 - q3^2 on x3 = v.x.
inline Poly solid_residual(const BarthModel &m, const SolidForms &s, const SolidSurface &x) {
  Poly prod = s.l.front().one_like();
  for (const auto &l : s.l)
    prod *= l;
  const Poly rest = prod.scaled(m.one().from_int(4)) - s.q3_squared;
  const Poly on_plane = eliminate_variable(rest, 3, linear_form(m.plane_ring, x.v));
  return (x.cubic * x.cubic).scaled(m.num(12, 20)) + on_plane;
}

inline SurfaceFamily build_solid_surfaces(const BarthModel &m) {
  SurfaceFamily fam;
  const auto &seed = m.xi("(1,1,1)");
  const Poly seed_cubic = printed_cubics(m).first_square;
  std::map<std::string, std::size_t> slot;
  for (std::size_t i = 0; i < m.xi_planes.size(); ++i)
    slot[object_key(m.xi_planes[i].coords)] = i;
  std::vector<std::optional<Poly>> cubic(m.xi_planes.size());
  for (const auto &g : m.rotations) {
    const auto it = slot.find(object_key(transport_vector(g, seed.coords)));
    if (it == slot.end())
      throw SurfaceNotOnSolid("a rotation moves Xi(1,1,1) off the plane list");
    const Poly c = act_on_poly(g, seed_cubic);
    if (!cubic[it->second])
      cubic[it->second] = c;
    else if (!(*cubic[it->second] == c))
      throw SurfaceNotOnSolid("two rotations carry Xi+(1,1,1) to different surfaces over Xi" +
                              m.xi_planes[it->second].label);
  }
  const SolidForms forms = solid_forms(m);
  for (std::size_t i = 0; i < m.xi_planes.size(); ++i) {
    const auto &p = m.xi_planes[i];
    Vec lin{-p.coords[0], -p.coords[1], -p.coords[2], m.one()};
    SolidSurface s{p.label, p.coords, 1, linear_form(m.ring, lin), *cubic[i]};
    if (!solid_residual(m, forms, s).is_zero())
      throw SurfaceNotOnSolid(s.name() + " does not lie on the double solid");
    fam.plus.push_back(s);
    s.sign = -1;
    s.cubic = -s.cubic;
    if (!solid_residual(m, forms, s).is_zero())
      throw SurfaceNotOnSolid(s.name() + " does not lie on the double solid");
    fam.minus.push_back(s);
  }
  for (const auto &p : m.theta_planes)
    for (const char *sg : {"+", "-"})
      fam.theta_labels.push_back(std::string("Theta") + sg + p.label);

  std::vector<Perm> gen_perms;
  for (const auto &mg : m.group.generators) {
    // group.generators are projective normal forms; use the actual matrix
    const MatElem *g = nullptr;
    for (const auto &[n, h] : m.generators)
      if (object_key(h) == object_key(mg))
        g = &h;
    std::vector<std::size_t> img;
    for (const auto &s : fam.plus) {
      const auto it = slot.find(object_key(transport_vector(*g, s.v)));
      if (it == slot.end() || !(act_on_poly(*g, s.cubic) == fam.plus[it->second].cubic))
        throw SurfaceNotOnSolid("a generator moves " + s.name() + " out of the + family");
      img.push_back(it->second);
    }
    gen_perms.emplace_back(std::move(img));
  }
  fam.action = induced_action(m.group, gen_perms);
  return fam;
}

// ------------------------------------------------------------------ table 1

struct Table1Report {
  std::size_t rows_matched = 0;
  /// Pairing of Xi+(1,1,1) with the surface whose cubic is transported by M^3.
  int m3_pairing = 0;
  /// Pairing of Xi+(1,1,1) with the surface transported by RN.
  int rn_pairing = 0;
  bool printed_matrices = false;
  bool printed_cubics = false;
  std::string note;
};

int surface_pair_intersection(const SolidSurface &a, const SolidSurface &b);

inline Table1Report verify_table1(const BarthModel &m, const SurfaceFamily &fam, const std::vector<WordRow> &rows) {
  Table1Report rep;
  const SolidSurface &seed = fam.plus.at(fam.index_of("(1,1,1)"));
  const auto letters = m.letters();
  for (const auto &row : rows) {
    const MatElem g = eval_word(GroupWord::parse(row.word), letters, m.identity());
    const SolidSurface &target = fam.plus.at(fam.index_of(row.label));
    const Vec v = transport_vector(g, seed.v);
    const Poly c = act_on_poly(g, seed.cubic);
    if (!(v == target.v))
      throw Table1Mismatch(row.label + ": " + row.word + " carries (1,1,1) to " + vector_label(v));
    if (!(c == target.cubic))
      throw Table1Mismatch(row.label + ": " + row.word + " lands on the - surface or a different cubic");
    ++rep.rows_matched;
  }

  const FieldElement one = m.one(), t = m.tau(), z = one.zero_like(), h(m.field, Rational(1, 2));
  const MatElem m3 = eval_word(GroupWord::parse("M^3"), letters, m.identity());
  const MatElem rn = eval_word(GroupWord::parse("RN"), letters, m.identity());
  const ExactMatrix<FieldElement> m3_printed(
      {{h, h * t, h * (one - t)}, {h * t, h * (one - t), h}, {h * (t - one), -h, -h * t}}, one);
  const ExactMatrix<FieldElement> rn_printed({{z, z, one}, {-one, z, z}, {z, -one, z}}, one);
  rep.printed_matrices = m3.matrix() == m3_printed && rn.matrix() == rn_printed;
  const auto printed = printed_cubics(m);
  const auto &s1 = fam.plus.at(fam.index_of("(1,1,-1)"));
  const auto &s2 = fam.plus.at(fam.index_of("(1,-1,-1)"));
  rep.printed_cubics = s1.cubic == printed.surface_1_1_m1 && s2.cubic == printed.surface_1_m1_m1 &&
                       seed.cubic == printed.first_square;
  if (!rep.printed_matrices || !rep.printed_cubics)
    throw Table1Mismatch("printed M^3, RN or surface equations differ from the computed ones");
  rep.m3_pairing = surface_pair_intersection(seed, s1);
  rep.rn_pairing = surface_pair_intersection(seed, s2);
  if (rep.m3_pairing == 1 && rep.rn_pairing == 0)
    rep.note = "the surface obtained by M^3 lies over (1,1,-1) and meets Xi+(1,1,1) in the line x2 = 0; "
               "the worked example names it (1,-1,-1) in its conclusion";
  return rep;
}

// ------------------------------------------------------------------ table 2

/// -2 on the diagonal; otherwise 1 when the cubics agree on the common line
/// of the two planes (the surfaces share it) and 0 when they meet in points.
inline int surface_pair_intersection(const SolidSurface &a, const SolidSurface &b) {
  if (a.sign != b.sign)
    throw std::invalid_argument("pairing is defined within one sign class");
  if (a.v == b.v)
    return -2;
  const FieldElement one = a.v.front().one_like();
  ExactMatrix<FieldElement> d(1, 3, one);
  for (std::size_t i = 0; i < 3; ++i)
    d(0, i) = a.v[i] - b.v[i];
  const auto k = kernel_basis(d);
  const MPoly<FieldElement> diff = a.cubic - b.cubic;
  return restrict_to_line(diff, k.vectors.at(0), k.vectors.at(1)).is_zero() ? 1 : 0;
}

inline ExactMatrix<Rational> pairing_matrix(const std::vector<SolidSurface> &family) {
  ExactMatrix<Rational> out(family.size(), family.size(), Rational());
  for (std::size_t i = 0; i < family.size(); ++i)
    for (std::size_t j = i; j < family.size(); ++j) {
      out(i, j) = Rational(surface_pair_intersection(family[i], family[j]));
      out(j, i) = out(i, j);
    }
  return out;
}

struct Table2Report {
  std::size_t entries_matched = 0;
  std::size_t entries_total = 0;
  bool row_pattern = false;
  bool row_multisets = false;
  std::size_t rank = 0;
  bool minus_equals_plus = false;
  std::size_t orbit_count = 0;
  std::size_t orbit_sum_rank = 0;
  long trace_dimension = 0;
};

/// Compares the + family pairings with the listed matrix (rows in listed
/// label order) and derives the rank and invariant data.
inline Table2Report verify_table2_and_ranks(const BarthModel &m, const SurfaceFamily &fam,
                                            const LabelledMatrix &listed, const RowPattern &pattern) {
  (void)m;
  Table2Report rep;
  const ExactMatrix<Rational> plus = pairing_matrix(fam.plus);
  std::vector<std::size_t> at;
  for (const auto &l : listed.labels) {
    try {
      at.push_back(fam.index_of(l));
    } catch (const std::invalid_argument &) {
      throw Table2Mismatch("listed label " + l + " is not a surface");
    }
  }
  if (at.size() != fam.plus.size())
    throw Table2Mismatch("listed matrix has " + std::to_string(at.size()) + " labels");
  for (std::size_t i = 0; i < at.size(); ++i)
    for (std::size_t j = 0; j < at.size(); ++j) {
      ++rep.entries_total;
      const Rational &got = plus(at[i], at[j]);
      if (!(got == listed.matrix(i, j)))
        throw Table2Mismatch("entry (" + listed.labels[i] + ", " + listed.labels[j] + ") [" +
                             std::to_string(i) + "," + std::to_string(j) + "]: computed " + got.to_string() +
                             ", listed " + listed.matrix(i, j).to_string());
      ++rep.entries_matched;
    }

  const std::size_t r0 = fam.index_of(pattern.row);
  bool ok = true;
  auto expect = [&](const std::vector<std::string> &labels, long value) {
    for (const auto &l : labels)
      ok = ok && plus(r0, fam.index_of(l)) == Rational(value);
  };
  expect(pattern.zero, 0);
  expect(pattern.one, 1);
  expect(pattern.minus_two, -2);
  rep.row_pattern = ok && pattern.zero.size() + pattern.one.size() + pattern.minus_two.size() == fam.plus.size();

  rep.row_multisets = true;
  for (std::size_t i = 0; i < plus.rows(); ++i) {
    std::size_t c[3] = {0, 0, 0};
    for (std::size_t j = 0; j < plus.cols(); ++j) {
      const Rational &e = plus(i, j);
      c[e == Rational(-2) ? 0 : e == Rational(1) ? 1 : e == Rational(0) ? 2 : 0] += 1;
    }
    rep.row_multisets = rep.row_multisets && c[0] == 1 && c[1] == 12 && c[2] == 7;
  }

  rep.rank = rank(plus);
  rep.minus_equals_plus = pairing_matrix(fam.minus) == plus;

  std::vector<std::string> labels;
  for (const auto &s : fam.plus)
    labels.push_back(s.label);
  const GramMatrix g(labels, plus);
  const auto orbits = orbits_of_action(fam.action, fam.plus.size());
  rep.orbit_count = orbits.size();
  rep.orbit_sum_rank = rank(orbit_sum_gram(g, orbits));
  rep.trace_dimension = invariant_dimension_via_trace(g, fam.action);
  return rep;
}

// -------------------------------------------------------------- rationality

/// Objects over Q(s), s^4 = 4 s^2 + 1, tau = (s^2 - 1)/2, with
/// q3 = s x3 (x0^2 + x1^2 + x2^2 - x3^2).
struct RationalityScene {
  FieldRef field;
  FieldElement s;
  FieldElement tau;
  /// x0..x3, y
  RingRef ring;
  std::vector<MPoly<FieldElement>> l;
  MPoly<FieldElement> q3;
};

inline RationalityScene rationality_scene() {
  const FieldRef k = fields::golden_root();
  const FieldElement one(k, Rational(1));
  RationalityScene sc{k, FieldElement::generator(k), fields::tau_in_golden_root(),
                      make_ring({"x0", "x1", "x2", "x3", "y"}), {}, MPoly<FieldElement>(make_indexed_ring(1), one)};
  std::vector<MPoly<FieldElement>> x;
  for (std::size_t i = 0; i < 4; ++i)
    x.push_back(MPoly<FieldElement>::variable(sc.ring, i, one));
  const FieldElement t = sc.tau;
  sc.l = {x[0].scaled(t) - x[1], x[1].scaled(t) - x[2], x[2].scaled(t) - x[0],
          x[0].scaled(t) + x[1], x[1].scaled(t) + x[2], x[2].scaled(t) + x[0]};
  sc.q3 = (x[3] * (x[0] * x[0] + x[1] * x[1] + x[2] * x[2] - x[3] * x[3])).scaled(sc.s);
  return sc;
}

struct RationalityReport {
  bool coordinate_change = false;
  bool first_factorization = false;
  bool second_factorization = false;
  bool first_line_on_cubic = false;
  bool second_line_on_cubic = false;
  std::size_t line_rank = 0;
  std::string line_determinant;
  /// The root of 2 tau + 1 in the linear factors that makes both
  /// factorizations hold.
  std::string root;
  /// Whether the factorizations also hold with the opposite root (they do not).
  bool opposite_root_factors = true;
};

inline RationalityReport rationality_checks() {
  using P = MPoly<FieldElement>;
  RationalityReport rep;
  const RationalityScene sc = rationality_scene();
  const auto &l = sc.l;
  const P y = P::variable(sc.ring, 4, sc.s.one_like());
  const FieldElement two = sc.s.from_int(2), four = sc.s.from_int(4);
  {
    const P w = (y * l[0] * l[1]).scaled(two) + sc.q3;
    P six = l[0].one_like();
    for (const auto &li : l)
      six *= li;
    const P lhs = w * w + six.scaled(four) - sc.q3 * sc.q3;
    const P rhs = (l[0] * l[1]).scaled(four) * (y * y * l[0] * l[1] + y * sc.q3 + l[2] * l[3] * l[4] * l[5]);
    rep.coordinate_change = lhs == rhs;
  }
  if (!rep.coordinate_change)
    throw IdentityFailed("coordinate-change identity for the quartic threefold");

  // Cubic surface over Q(s)(lambda) in x0..x3.
  const RF F(sc.s.one_like(), "lambda");
  const RF lambda = RF::variable(sc.s.one_like(), "lambda");
  const RingRef r4 = make_indexed_ring(4);
  const RingRef r3 = make_indexed_ring(3);
  std::vector<MPoly<FieldElement>> to4;
  for (std::size_t i = 0; i < 4; ++i)
    to4.push_back(MPoly<FieldElement>::variable(r4, i, sc.s.one_like()));
  to4.push_back(to4[0].zero_like());
  auto down = [&](const P &p) {
    const P q = p.substitute(to4);
    return q.map_coefficients([&](const FieldElement &c) { return F.from_scalar(c); }, F);
  };
  std::vector<RFPoly> L;
  for (const auto &li : l)
    L.push_back(down(li));
  const RFPoly q3 = down(sc.q3);
  const RFPoly cubic = (L[0] * L[1] * L[3]).scaled(lambda * lambda) + q3.scaled(lambda) + L[2] * L[4] * L[5];

  const FieldElement one = sc.s.one_like();
  auto on_plane = [&](const RFPoly &p, std::vector<FieldElement> v) {
    std::vector<RF> c;
    for (const auto &e : v)
      c.push_back(F.from_scalar(e));
    return eliminate_variable(p, 3, linear_form(r3, c));
  };
  const RF k23 = F.from_scalar(sc.tau + sc.tau - one - one - one);
  auto factorizations = [&](const FieldElement &root) {
    const RF r = F.from_scalar(root);
    const std::vector<FieldElement> v1{one, one, one}, v2{one, -one, -one};
    const RFPoly first = (L[3].scaled(lambda) + L[2].scaled(r * k23)) * ((L[0] * L[1]).scaled(lambda) + (L[4] * L[5]).scaled(r));
    const RFPoly second = (L[0].scaled(lambda) + L[5].scaled(r * k23)) * ((L[1] * L[3]).scaled(lambda) + (L[2] * L[4]).scaled(r));
    return std::make_pair(on_plane(cubic, v1) == on_plane(first, v1), on_plane(cubic, v2) == on_plane(second, v2));
  };
  const FieldElement root = -sc.s;
  rep.root = root.to_string();
  std::tie(rep.first_factorization, rep.second_factorization) = factorizations(root);
  const auto opposite = factorizations(sc.s);
  rep.opposite_root_factors = opposite.first || opposite.second;
  if (!rep.first_factorization)
    throw IdentityFailed("factorization of the cubic surface on x3 = x0 + x1 + x2");
  if (!rep.second_factorization)
    throw IdentityFailed("factorization of the cubic surface on x3 = x0 - x1 - x2");

  // Lines {x3 - v.x = 0, linear factor = 0} and their span.
  const RF rr = F.from_scalar(root);
  auto coeff_row = [&](const RFPoly &p) {
    std::vector<RF> row;
    for (std::size_t i = 0; i < 4; ++i) {
      Monomial e(4, 0);
      e[i] = 1;
      row.push_back(p.coeff(e));
    }
    return row;
  };
  const RFPoly a1 = L[3].scaled(lambda) + L[2].scaled(rr * k23);
  const RFPoly a2 = L[0].scaled(lambda) + L[5].scaled(rr * k23);
  const std::vector<RF> p1{-F.one_like(), -F.one_like(), -F.one_like(), F.one_like()};
  const std::vector<RF> p2{-F.one_like(), F.one_like(), F.one_like(), F.one_like()};
  auto line_on_cubic = [&](const std::vector<RF> &plane, const RFPoly &factor) {
    const ExactMatrix<RF> eq({plane, coeff_row(factor)}, F);
    const auto k = kernel_basis(eq);
    return k.vectors.size() == 2 && restrict_to_line(cubic, k.vectors[0], k.vectors[1]).is_zero();
  };
  rep.first_line_on_cubic = line_on_cubic(p1, a1);
  rep.second_line_on_cubic = line_on_cubic(p2, a2);
  if (!rep.first_line_on_cubic || !rep.second_line_on_cubic)
    throw IdentityFailed("a line does not lie on the cubic surface");
  const ExactMatrix<RF> span({p1, coeff_row(a1), p2, coeff_row(a2)}, F);
  const auto b = bareiss(span);
  rep.line_rank = b.rank;
  rep.line_determinant = b.determinant.to_string();
  if (rep.line_rank != 4)
    throw IdentityFailed("the two lines meet: rank " + std::to_string(rep.line_rank));
  return rep;
}

} // namespace fanocheck::barth
