#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "fanocheck/barth.hpp"
#include "fanocheck/burkhardt.hpp"
#include "fanocheck/matrix.hpp"
#include "fanocheck/poly_algorithms.hpp"
#include "oracles.hpp"

using namespace fanocheck;

namespace {

struct Verdict {
  bool pass;
  std::string detail;
};

std::string fixture(const std::string &name) { return std::string(FANOCHECK_FIXTURES_DIR) + "/" + name; }

const burkhardt::BurkhardtModel &bmodel() {
  static const auto m = burkhardt::build_model();
  return m;
}

const GramMatrix &bgram() {
  static const auto g = burkhardt::build_gram(bmodel(), nullptr);
  return g;
}

const barth::BarthModel &xmodel() {
  static const auto m = barth::build_barth();
  return m;
}

const barth::SurfaceFamily &xsurfaces() {
  static const auto f = barth::build_solid_surfaces(xmodel());
  return f;
}

Verdict burkhardt_nodes() {
  const auto &m = bmodel();
  std::set<std::string> keys;
  for (const auto &p : m.singular_points)
    keys.insert(object_key(canonical_point(p)));
  std::size_t nodes = 0;
  for (const auto &c : burkhardt::verify_nodes(m))
    nodes += c.is_node() ? 1 : 0;
  std::ostringstream d;
  d << "orbits " << m.point_orbits.at(0).size() << "+" << m.point_orbits.at(1).size() << ", " << keys.size()
    << " distinct, " << nodes << " nodes";
  return {m.point_orbits.size() == 2 && m.point_orbits[0].size() == 30 && m.point_orbits[1].size() == 15 &&
              keys.size() == 45 && nodes == 45,
          d.str()};
}

Verdict burkhardt_incidence() {
  const auto r = burkhardt::plane_incidence(bmodel());
  std::size_t on = 0, nine = 0, eight = 0;
  for (std::size_t i = 0; i < r.plane_on_quartic.size(); ++i) {
    on += r.plane_on_quartic[i] ? 1 : 0;
    nine += r.points_per_plane[i] == 9 ? 1 : 0;
  }
  for (auto c : r.planes_per_point)
    eight += c == 8 ? 1 : 0;
  std::ostringstream d;
  d << on << "/40 planes on the quartic, " << nine << "/40 with 9 points, " << eight << "/45 points on 8 planes";
  return {on == 40 && nine == 40 && eight == 45, d.str()};
}

Verdict burkhardt_meet_rule() {
  burkhardt::MeetReport r;
  burkhardt::build_gram(bmodel(), &r);
  std::ostringstream d;
  d << r.pairs << " pairs (" << r.lines << " lines, " << r.points << " points, " << r.delta_pairs
    << " delta cases), " << r.mismatches.size() << " mismatches";
  return {r.pairs == 780 && r.mismatches.empty(), d.str()};
}

Verdict burkhardt_gram_ranks() {
  const auto r = burkhardt::gram_ranks(bmodel(), bgram());
  std::ostringstream d;
  d << "full " << r.full << ", avoiding 5: " << r.avoiding_five << ", containing 5: " << r.containing_five
    << " (required 16, 16, 16)";
  return {r.full == 16 && r.avoiding_five == 16 && r.containing_five == 16, d.str()};
}

Verdict burkhardt_invariant_ranks() {
  const auto rs = burkhardt::invariant_ranks(bmodel(), bgram());
  const std::map<std::string, std::size_t> want{{"S6", 1}, {"A6", 1}, {"A5-standard", 1}, {"A5-nonstandard", 2}};
  bool ok = true;
  std::ostringstream d;
  for (const auto &r : rs) {
    auto it = want.find(r.subgroup);
    if (it == want.end())
      continue;
    ok = ok && r.orbit_sum_rank == it->second && r.trace_dimension == static_cast<long>(it->second);
    d << r.subgroup << " " << r.orbit_sum_rank << "/" << r.trace_dimension << " ";
  }
  return {ok, d.str()};
}

Verdict barth_group_and_nodes() {
  const auto &m = xmodel();
  const auto scalars = barth::verify_invariance(m);
  std::size_t nodes = 0, total = 0;
  for (const auto &n : barth::verify_nodes_barth(m)) {
    ++total;
    nodes += n.is_node() ? 1 : 0;
  }
  std::ostringstream d;
  d << "invariant under " << scalars.size() << " generators, group " << m.group.order() << ", orbits "
    << m.sigma_orbits.at(0).size() << "+" << m.sigma_orbits.at(1).size() << "+" << m.sigma_orbits.at(2).size()
    << ", " << nodes << "/" << total << " nodes";
  return {scalars.size() == 3 && m.group.order() == 60 && m.sigma_orbits[0].size() == 15 &&
              m.sigma_orbits[1].size() == 20 && m.sigma_orbits[2].size() == 30 && nodes == 65 && total == 65,
          d.str()};
}

Verdict barth_restrictions() {
  const auto r = barth::verify_plane_restrictions(xmodel());
  std::size_t smooth = 0, irreducible = 0;
  for (const auto &x : r.xi)
    smooth += x.smooth ? 1 : 0;
  for (const auto &t : r.theta)
    irreducible += t.conic_type == ConicType::irreducible ? 1 : 0;
  std::ostringstream d;
  d << smooth << "/20 smooth double cubics, " << irreducible << "/6 line^2 conic^2, printed squares "
    << (r.first_square_identity && r.second_square_identity ? "match" : "differ");
  return {smooth == 20 && r.xi.size() == 20 && irreducible == 6 && r.theta.size() == 6 && r.first_square_identity &&
              r.second_square_identity,
          d.str()};
}

Verdict barth_plane_family() {
  const auto r = barth::verify_plane_classification(xmodel());
  const auto bad = r.failures();
  std::string d = bad.empty() ? "closed forms match, non-squareness certified, controls are squares" : "failed:";
  for (const auto &b : bad)
    d += " " + b;
  return {bad.empty(), d};
}

Verdict barth_tables() {
  const auto &m = xmodel();
  const auto t1 = barth::verify_table1(m, xsurfaces(), barth::load_word_fixture(fixture("table1_words.json")));
  const auto t2 = barth::verify_table2_and_ranks(m, xsurfaces(), load_gram_fixture(fixture("table2.json")),
                                                 barth::load_row_pattern(fixture("first_line.json")));
  std::ostringstream d;
  d << "table 1 " << t1.rows_matched << "/20, table 2 " << t2.entries_matched << "/" << t2.entries_total
    << ", minus = plus " << (t2.minus_equals_plus ? "yes" : "no") << ", rank " << t2.rank << ", orbit-sum rank "
    << t2.orbit_sum_rank << ", trace dimension " << t2.trace_dimension;
  return {t1.rows_matched == 20 && t2.entries_matched == 400 && t2.minus_equals_plus && t2.rank == 14 &&
              t2.orbit_sum_rank == 1 && t2.trace_dimension == 1,
          d.str()};
}

Verdict barth_rationality() {
  const auto r = barth::rationality_checks();
  std::ostringstream d;
  d << "coordinate change " << r.coordinate_change << ", factorizations " << r.first_factorization
    << r.second_factorization << ", lines on cubic " << r.first_line_on_cubic << r.second_line_on_cubic
    << ", line rank " << r.line_rank;
  return {r.coordinate_change && r.first_factorization && r.second_factorization && r.first_line_on_cubic &&
              r.second_line_on_cubic && r.line_rank == 4,
          d.str()};
}

Verdict kernel_properties() {
  std::mt19937 rng(2024);
  std::uniform_int_distribution<std::size_t> dim(1, 8);
  std::size_t rank_ok = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = dim(rng), k = dim(rng);
    const std::size_t r = std::uniform_int_distribution<std::size_t>(0, std::min(n, k))(rng);
    const auto rows = oracle::random_low_rank(rng, n, k, r);
    rank_ok += rank(ExactMatrix<Rational>(rows, Rational())) == naive_rank(rows) ? 1 : 0;
  }
  const FieldElement one(fields::golden(), Rational(1));
  const RingRef ring = make_indexed_ring(3);
  std::size_t sqrt_ok = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const auto c = oracle::random_ternary_cubic(rng, ring, one);
    const auto q = exact_square_root(c * c);
    sqrt_ok += q && (*q == c || *q == -c) ? 1 : 0;
  }
  std::size_t axioms_ok = 0;
  for (const FieldRef &k : {fields::golden(), fields::eisenstein(), fields::golden_root()})
    for (int trial = 0; trial < 1000; ++trial) {
      const auto a = oracle::random_element(k, rng), b = oracle::random_element(k, rng),
                 c = oracle::random_element(k, rng);
      bool ok = a + b == b + a && a * b == b * a && (a + b) + c == a + (b + c) && (a * b) * c == a * (b * c) &&
                a * (b + c) == a * b + a * c && (a * b).coords() == oracle::naive_product(a.coords(), b.coords(), k->minpoly());
      if (!a.is_zero())
        ok = ok && a * a.inverse() == a.one_like();
      axioms_ok += ok ? 1 : 0;
    }
  std::ostringstream d;
  d << "rank " << rank_ok << "/100, square roots " << sqrt_ok << "/100, field axioms " << axioms_ok << "/3000";
  return {rank_ok == 100 && sqrt_ok == 100 && axioms_ok == 3000, d.str()};
}

} // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Verdict()>>> criteria{
      {"Burkhardt singular orbits and nodes", burkhardt_nodes},
      {"j-plane incidence", burkhardt_incidence},
      {"meet-rule equivalence", burkhardt_meet_rule},
      {"Burkhardt Gram ranks", burkhardt_gram_ranks},
      {"Burkhardt invariant ranks", burkhardt_invariant_ranks},
      {"Barth invariance, orbits and nodes", barth_group_and_nodes},
      {"plane restrictions", barth_restrictions},
      {"plane family checks", barth_plane_family},
      {"tables 1 and 2 with ranks", barth_tables},
      {"rationality identities", barth_rationality},
      {"kernel and oracle properties", kernel_properties},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Verdict v{false, ""};
    try {
      v = criteria[i].second();
    } catch (const std::exception &e) {
      v = {false, std::string("exception: ") + e.what()};
    }
    failed += v.pass ? 0 : 1;
    std::cout << (v.pass ? "PASS" : "FAIL") << " criterion " << i + 1 << ": " << criteria[i].first << " -- "
              << v.detail << std::endl;
  }
  std::cout << criteria.size() - failed << "/" << criteria.size() << " criteria passed" << std::endl;
  return failed == 0 ? 0 : 1;
}
