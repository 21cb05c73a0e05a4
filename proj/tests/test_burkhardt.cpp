#include "catch_amalgamated.hpp"

#include <random>
#include <set>

#include "fanocheck/burkhardt.hpp"
#include "oracles.hpp"

using namespace fanocheck;
using namespace fanocheck::burkhardt;

namespace {

const BurkhardtModel &model() {
  static const BurkhardtModel m = build_model();
  return m;
}

const GramMatrix &gram() {
  static const GramMatrix g = build_gram(model());
  return g;
}

// Elementary symmetric function by direct summation over index sets.
FieldElement e_k(const std::vector<FieldElement> &x, std::size_t k) {
  FieldElement acc = x.front().zero_like();
  const std::size_t n = x.size();
  for (unsigned mask = 0; mask < (1U << n); ++mask) {
    if (static_cast<std::size_t>(__builtin_popcount(mask)) != k)
      continue;
    FieldElement t = x.front().one_like();
    for (std::size_t i = 0; i < n; ++i)
      if (mask & (1U << i))
        t = t * x[i];
    acc = acc + t;
  }
  return acc;
}

// Defining relations of the plane, written out from its triple and sign.
bool on_plane(const JPlane &pl, const Point &p) {
  const FieldElement w = model().omega();
  const FieldElement w1 = pl.sign > 0 ? w : w * w, w2 = pl.sign > 0 ? w * w : w;
  const auto [a, b, c] = pl.triple;
  return (p[b] - w1 * p[a]).is_zero() && (p[c] - w2 * p[a]).is_zero() && e_k(p, 1).is_zero();
}

} // namespace

TEST_CASE("singular points come in orbits of 30 and 15", "[burkhardt]") {
  const auto &m = model();
  REQUIRE(m.point_orbits.size() == 2);
  CHECK(m.point_orbits[0].size() == 30);
  CHECK(m.point_orbits[1].size() == 15);
  std::set<std::string> keys;
  for (const auto &p : m.singular_points)
    keys.insert(object_key(canonical_point(p)));
  CHECK(keys.size() == 45);
}

TEST_CASE("all 45 points are nodes", "[burkhardt]") {
  const auto &m = model();
  for (const auto &c : verify_nodes(m)) {
    INFO(point_to_string(c.point));
    REQUIRE(c.is_node());
    // Gradient of sigma4 is proportional to that of sigma1: every partial
    // e3(x without x_i) takes the same value.
    std::vector<FieldElement> partials;
    for (std::size_t i = 0; i < 6; ++i) {
      std::vector<FieldElement> rest;
      for (std::size_t j = 0; j < 6; ++j)
        if (j != i)
          rest.push_back(c.point[j]);
      partials.push_back(e_k(rest, 3));
    }
    for (const auto &d : partials)
      REQUIRE(d == partials.front());
    REQUIRE(e_k(c.point, 4).is_zero());
    REQUIRE(e_k(c.point, 1).is_zero());
  }
}

TEST_CASE("a smooth point of the quartic is not a node", "[burkhardt]") {
  const auto &m = model();
  const FieldElement one = m.one(), w = m.omega();
  // On Pi+_012 with x0 = 1 and x3 + x4 + x5 = 0.
  const Point p{one, w, w * w, one, one.from_int(-3), one.from_int(2)};
  REQUIRE(e_k(p, 4).is_zero());
  CHECK_FALSE(check_node(m, p).is_node());
}

TEST_CASE("forty planes lie on the quartic with 9 and 8 incidences", "[burkhardt]") {
  const auto &m = model();
  REQUIRE(m.planes.size() == 40);
  const auto r = plane_incidence(m);
  std::mt19937 rng(3);
  std::uniform_int_distribution<long> d(-6, 6);
  for (std::size_t i = 0; i < m.planes.size(); ++i) {
    const auto &pl = m.planes[i];
    INFO(pl.label());
    REQUIRE(r.plane_on_quartic[i]);
    REQUIRE(r.points_per_plane[i] == 9);
    std::size_t direct = 0;
    for (const auto &p : m.singular_points)
      direct += on_plane(pl, p) ? 1 : 0;
    REQUIRE(direct == 9);
    // Random points of the plane satisfy sigma4 = 0.
    const FieldElement w = m.omega();
    const FieldElement w1 = pl.sign > 0 ? w : w * w, w2 = pl.sign > 0 ? w * w : w;
    std::vector<std::size_t> others;
    for (std::size_t k = 0; k < 6; ++k)
      if (!pl.contains_index(k))
        others.push_back(k);
    for (int trial = 0; trial < 10; ++trial) {
      Point p(6, m.one().zero_like());
      p[pl.triple[0]] = m.one().from_int(d(rng));
      p[pl.triple[1]] = w1 * p[pl.triple[0]];
      p[pl.triple[2]] = w2 * p[pl.triple[0]];
      p[others[0]] = m.one().from_int(d(rng));
      p[others[1]] = m.one().from_int(d(rng));
      p[others[2]] = -(p[others[0]] + p[others[1]]);
      REQUIRE(e_k(p, 4).is_zero());
    }
  }
  for (auto c : r.planes_per_point)
    CHECK(c == 8);
}

TEST_CASE("the delta rule needs exactly two shared indices", "[burkhardt]") {
  CHECK(delta_rule({0, 1, 2}, {0, 1, 3}) == 1);
  CHECK(delta_rule({0, 1, 2}, {0, 3, 2}) == 1);
  CHECK(delta_rule({0, 1, 2}, {1, 3, 2}) == 0);
  CHECK(delta_rule({0, 1, 2}, {1, 2, 4}) == 1);
  CHECK_THROWS_AS(delta_rule({0, 1, 2}, {0, 3, 4}), NotCTwo);
  CHECK_THROWS_AS(delta_rule({0, 1, 2}, {0, 1, 2}), NotCTwo);
  const FieldElement w = model().omega();
  CHECK_THROWS_AS(plane_pair_meet(make_jplane({0, 1, 2}, 1, w), make_jplane({0, 1, 2}, 1, w)), IdenticalPlanes);
}

TEST_CASE("geometry agrees with the meet rule on every pair", "[burkhardt]") {
  MeetReport r;
  build_gram(model(), &r);
  CHECK(r.pairs == 780);
  CHECK(r.lines + r.points == 780);
  // 20 triples with 9 neighbours each, four sign choices per pair.
  CHECK(r.delta_pairs == 20 * 9 / 2 * 4);
  CHECK(r.mismatches.empty());
}

TEST_CASE("gram ranks", "[burkhardt]") {
  const auto &m = model();
  const auto &g = gram();
  const auto ranks = gram_ranks(m, g);
  const auto avoid = planes_where(m, false), contain = planes_where(m, true);
  REQUIRE(avoid.size() == 20);
  REQUIRE(contain.size() == 20);
  CHECK(ranks.full == naive_rank(rows_of(g.matrix)));
  CHECK(ranks.avoiding_five == naive_rank(rows_of(g.matrix.select(avoid, avoid))));
  CHECK(ranks.containing_five == naive_rank(rows_of(g.matrix.select(contain, contain))));
  CHECK(ranks.full == 16);
  CHECK(ranks.avoiding_five == 16);
  CHECK(ranks.containing_five == 12);
  CHECK(ranks.kernel_dimension == 24);
}

TEST_CASE("invariant ranks for S6, A6 and the two A5", "[burkhardt]") {
  const auto &m = model();
  const auto rs = invariant_ranks(m, gram());
  REQUIRE(rs.size() == 5);
  CHECK(rs[0].orbit_sum_rank == 16);
  CHECK(rs[0].trace_dimension == 16);
  const std::vector<std::pair<std::string, std::size_t>> expected{
      {"S6", 1}, {"A6", 1}, {"A5-standard", 1}, {"A5-nonstandard", 2}};
  for (std::size_t i = 0; i < expected.size(); ++i) {
    INFO(rs[i + 1].subgroup);
    CHECK(rs[i + 1].subgroup == expected[i].first);
    CHECK(rs[i + 1].orbit_sum_rank == expected[i].second);
    CHECK(rs[i + 1].trace_dimension == static_cast<long>(expected[i].second));
  }
  CHECK(rs[2].order == 360);
}
