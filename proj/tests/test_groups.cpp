#include "catch_amalgamated.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "fanocheck/group.hpp"

using namespace fanocheck;

namespace {

bool even_by_inversions(const std::vector<std::size_t> &v) {
  int inv = 0;
  for (std::size_t i = 0; i < v.size(); ++i)
    for (std::size_t j = i + 1; j < v.size(); ++j)
      inv += v[i] > v[j] ? 1 : 0;
  return inv % 2 == 0;
}

std::set<std::vector<std::size_t>> image_set(const Group<Perm> &g) {
  std::set<std::vector<std::size_t>> out;
  for (const auto &p : g.elements)
    out.insert(p.images());
  return out;
}

MatElem golden_matrix(const std::vector<std::vector<long>> &rows) {
  const FieldElement zero(fields::golden(), Rational(0));
  std::vector<std::vector<FieldElement>> r;
  for (const auto &row : rows) {
    r.emplace_back();
    for (long x : row)
      r.back().push_back(zero.from_int(x));
  }
  return MatElem(ExactMatrix<FieldElement>(r, zero));
}

} // namespace

TEST_CASE("permutation products apply the right factor first", "[perm]") {
  const Perm a = Perm::from_cycles(3, {{0, 1}});
  const Perm b = Perm::from_cycles(3, {{1, 2}});
  CHECK((a * b)(1) == 2);
  CHECK((a * b)(2) == 0);
  CHECK((a * a).is_identity());
  CHECK((a * b * (a * b).inverse()).is_identity());
  CHECK_FALSE(a.is_even());
  CHECK((a * b).is_even());
  CHECK(Perm::from_cycles(5, {{0, 1, 2}}).fixed_points() == 2);
  CHECK_THROWS(Perm({0, 0, 1}));
  CHECK_THROWS(a * Perm::identity(4));
}

TEST_CASE("S6 enumerates every permutation of six letters", "[group]") {
  const auto s6 = symmetric_group_s6();
  REQUIRE(s6.order() == 720);
  std::vector<std::size_t> v(6);
  std::iota(v.begin(), v.end(), 0);
  std::set<std::vector<std::size_t>> all;
  do
    all.insert(v);
  while (std::next_permutation(v.begin(), v.end()));
  CHECK(image_set(s6) == all);
  CHECK(is_transitive(s6));
}

TEST_CASE("the two A5 subgroups", "[group]") {
  const auto std5 = subgroup_standard_A5();
  const auto non5 = subgroup_nonstandard_A5();
  CHECK(std5.order() == 60);
  CHECK(non5.order() == 60);
  std::vector<std::size_t> v(6);
  std::iota(v.begin(), v.end(), 0);
  std::set<std::vector<std::size_t>> even_fixing_5;
  do
    if (v[5] == 5 && even_by_inversions(v))
      even_fixing_5.insert(v);
  while (std::next_permutation(v.begin(), v.end()));
  CHECK(image_set(std5) == even_fixing_5);
  CHECK_FALSE(is_transitive(std5));
  CHECK(is_transitive(non5));
  for (const auto &p : non5.elements)
    CHECK(even_by_inversions(p.images()));
}

TEST_CASE("spanning tree reproduces every element", "[group]") {
  const auto s6 = symmetric_group_s6();
  for (std::size_t i = 1; i < s6.order(); ++i)
    REQUIRE(s6.elements[i] == s6.generators[s6.via[i]] * s6.elements[s6.parent[i]]);
  const auto action = induced_action(s6, s6.generators);
  REQUIRE(action.size() == 720);
  for (std::size_t i = 0; i < 720; ++i)
    REQUIRE(action[i] == s6.elements[i]);
}

TEST_CASE("order bound stops runaway closures", "[group]") {
  CHECK_THROWS_AS(generate_group(std::vector<Perm>{Perm::from_cycles(6, {{0, 1, 2, 3, 4, 5}}),
                                                   Perm::from_cycles(6, {{0, 1}})},
                                 100),
                  OrderBoundExceeded);
}

TEST_CASE("orbits and stabilizers", "[group]") {
  const auto std5 = subgroup_standard_A5();
  const FieldElement one(fields::golden(), Rational(1)), z = one.zero_like();
  const Point p{one, z, z, z, z, z};
  auto canon = [](const Point &x) { return x; };
  auto act = [](const Perm &g, const Point &x) { return act_on_point(g, x); };
  const auto o = orbit_of(p, std5.generators, act, canon, 60);
  CHECK(o.size() == 5);
  CHECK(o.stabilizer_order == 12);
  const Point q{z, z, z, z, z, one};
  CHECK(orbit_of(q, std5.generators, act, canon, 60).size() == 1);
}

TEST_CASE("group words parse and evaluate left to right", "[word]") {
  const auto w = GroupWord::parse("R^2M^3");
  REQUIRE(w.letters.size() == 2);
  CHECK(w.letters[0] == std::make_pair(std::string("R"), 2));
  CHECK(w.to_string() == "R^2M^3");
  CHECK(GroupWord::parse("Id").letters.empty());
  CHECK(GroupWord::parse("RM^-1N").letters[1].second == -1);
  CHECK_THROWS(GroupWord::parse("r2"));
  const Perm a = Perm::from_cycles(4, {{0, 1}}), b = Perm::from_cycles(4, {{1, 2, 3}});
  const std::map<std::string, Perm> env{{"A", a}, {"B", b}};
  CHECK(eval_word(GroupWord::parse("AB^2"), env, Perm::identity(4)) == a * b * b);
  CHECK(eval_word(GroupWord::parse("B^-1"), env, Perm::identity(4)) == b.inverse());
  CHECK_THROWS_AS(eval_word(GroupWord::parse("AC"), env, Perm::identity(4)), UnboundLetter);
}

TEST_CASE("matrix elements compare projectively", "[matelem]") {
  const MatElem g = golden_matrix({{0, 1, 0}, {0, 0, 1}, {1, 0, 0}});
  const MatElem g3 = golden_matrix({{0, 3, 0}, {0, 0, 3}, {3, 0, 0}});
  CHECK(g.projectively_equal(g3));
  CHECK((g * g * g).is_scalar());
  CHECK((g3 * g3.inverse()).is_scalar());
  CHECK(g.inverse().projectively_equal(g * g));
  CHECK_THROWS(golden_matrix({{1, 1}, {2, 2}}));
  const auto grp = generate_group(std::vector<MatElem>{g, golden_matrix({{-1, 0, 0}, {0, 1, 0}, {0, 0, 1}})}, 100);
  // Signed cyclic permutations modulo scalars: 3 * 8 / 2.
  CHECK(grp.order() == 12);
}

TEST_CASE("polynomial action is composition with the inverse", "[matelem]") {
  const FieldElement one(fields::golden(), Rational(1));
  const RingRef r = make_indexed_ring(3);
  const auto x = MPoly<FieldElement>::variable(r, 0, one), y = MPoly<FieldElement>::variable(r, 1, one);
  const MatElem g = golden_matrix({{1, 1, 0}, {0, 1, 0}, {0, 0, 1}});
  const auto p = x * y;
  const auto gp = act_on_poly(g, p);
  const Point pt{one.from_int(2), one.from_int(5), one.from_int(7)};
  CHECK(gp.evaluate(act_on_point(g, pt)) == p.evaluate(pt));
  const Perm s = Perm::from_cycles(3, {{0, 1}});
  CHECK(act_on_poly(s, x * x * y) == x * y * y);
}
