#include "catch_amalgamated.hpp"

#include "fanocheck/gram.hpp"

using namespace fanocheck;

namespace {

GramMatrix a2_chain() {
  return GramMatrix({"a", "b", "c"}, integer_matrix({{-2, 1, 0}, {1, -2, 1}, {0, 1, -2}}));
}

GramMatrix affine_a1() { return GramMatrix({"e", "f"}, integer_matrix({{-2, 2}, {2, -2}})); }

} // namespace

TEST_CASE("gram matrices are validated", "[gram]") {
  CHECK_NOTHROW(a2_chain());
  CHECK_THROWS(GramMatrix({"a", "b"}, integer_matrix({{-2, 1}, {0, -2}})));
  CHECK_THROWS(GramMatrix({"a", "b"}, integer_matrix({{-2, 1}, {1, -1}})));
  CHECK_THROWS(GramMatrix({"a"}, integer_matrix({{-2, 1}, {1, -2}})));
}

TEST_CASE("orbit sums need a partition", "[gram]") {
  const auto g = a2_chain();
  CHECK_THROWS_AS(orbit_sum_gram(g, {{0, 1}}), InvalidPartition);
  CHECK_THROWS_AS(orbit_sum_gram(g, {{0, 1}, {1, 2}}), InvalidPartition);
  CHECK_THROWS_AS(orbit_sum_gram(g, {{0, 1, 2}, {}}), InvalidPartition);
  CHECK_THROWS_AS(orbit_sum_gram(g, {{0, 1, 5}}), InvalidPartition);
  const auto s = orbit_sum_gram(g, {{0, 2}, {1}});
  CHECK(s == integer_matrix({{-4, 2}, {2, -2}}));
  CHECK(rank(s) == 2);
}

TEST_CASE("orbits of a permutation action", "[gram]") {
  const Perm flip = Perm::from_cycles(3, {{0, 2}});
  const auto orbits = orbits_of_action({Perm::identity(3), flip}, 3);
  REQUIRE(orbits.size() == 2);
  CHECK(orbits[0] == std::vector<std::size_t>{0, 2});
  CHECK(orbits[1] == std::vector<std::size_t>{1});
}

TEST_CASE("trace dimension on small lattices", "[gram]") {
  const Perm flip = Perm::from_cycles(3, {{0, 2}});
  // Nondegenerate: invariants are spanned by a + c and b.
  CHECK(invariant_dimension_via_trace(a2_chain(), {Perm::identity(3), flip}) == 2);
  CHECK(invariant_dimension_via_trace(a2_chain(), {Perm::identity(3)}) == 3);
  // e + f spans the kernel; the swap acts as -1 on the quotient.
  const Perm swap = Perm::from_cycles(2, {{0, 1}});
  CHECK(invariant_dimension_via_trace(affine_a1(), {Perm::identity(2), swap}) == 0);
  CHECK(rank(orbit_sum_gram(affine_a1(), {{0, 1}})) == 0);
  CHECK(invariant_dimension_via_trace(affine_a1(), {Perm::identity(2)}) == 1);
  CHECK(rank(orbit_sum_gram(affine_a1(), {{0}, {1}})) == 1);
}

TEST_CASE("actions must preserve the pairing", "[gram]") {
  const Perm bad = Perm::from_cycles(3, {{0, 1}});
  CHECK_THROWS_AS(invariant_dimension_via_trace(a2_chain(), {Perm::identity(3), bad}), ActionNotGramPreserving);
  CHECK_THROWS_AS(invariant_dimension_via_trace(a2_chain(), {Perm::identity(2)}), ActionNotGramPreserving);
}

TEST_CASE("gram json round trip", "[gram]") {
  const auto g = a2_chain();
  const auto j = gram_to_json(g.labels, g.matrix);
  CHECK(j.at("rows")[1][2] == 1);
  const auto back = gram_from_json(j);
  CHECK(back.labels == g.labels);
  CHECK(back.matrix == g.matrix);
  auto broken = j;
  broken["rows"].erase(1);
  CHECK_THROWS(gram_from_json(broken));
  CHECK_THROWS(gram_to_json({"a"}, ExactMatrix<Rational>({{Rational(1, 2)}}, Rational())));
}
