#pragma once

#include <algorithm>
#include <atomic>
#include <chrono>
#include <filesystem>
#include <functional>
#include <map>
#include <mutex>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "fanocheck/barth.hpp"
#include "fanocheck/burkhardt.hpp"
#include "fanocheck/errors.hpp"
#include "fanocheck/gram.hpp"

namespace fanocheck {

inline constexpr const char *toolkit_version = "1.0.0";

enum class Status { pass, fail, skipped };

inline std::string to_string(Status s) {
  switch (s) {
  case Status::pass:
    return "pass";
  case Status::fail:
    return "fail";
  case Status::skipped:
    return "skipped";
  }
  return "?";
}

struct CheckResult {
  std::string name;
  Status status = Status::skipped;
  std::string expected;
  std::string actual;
  long millis = 0;
};

/// Models shared by the checks, built on first use.
class CheckContext {
public:
  explicit CheckContext(std::string fixtures_dir) : dir_(std::move(fixtures_dir)) {}

  const std::string &fixtures_dir() const { return dir_; }

  /// Path of a fixture file; throws when it does not exist.
  std::string fixture(const std::string &name) const {
    const std::filesystem::path p = std::filesystem::path(dir_) / name;
    if (!std::filesystem::exists(p))
      throw std::runtime_error("missing fixture " + p.string());
    return p.string();
  }

  const burkhardt::BurkhardtModel &burkhardt_model() {
    std::call_once(bk_once_, [&] { bk_.emplace(burkhardt::build_model()); });
    return *bk_;
  }

  const GramMatrix &burkhardt_gram() {
    std::call_once(bkg_once_, [&] {
      burkhardt::MeetReport r;
      bk_gram_.emplace(burkhardt::build_gram(burkhardt_model(), &r));
      meet_ = r;
    });
    return *bk_gram_;
  }

  const burkhardt::MeetReport &meet_report() {
    burkhardt_gram();
    return meet_;
  }

  const barth::BarthModel &barth_model() {
    std::call_once(bt_once_, [&] { bt_.emplace(barth::build_barth()); });
    return *bt_;
  }

  const barth::SurfaceFamily &barth_surfaces() {
    std::call_once(bts_once_, [&] { bt_surfaces_.emplace(barth::build_solid_surfaces(barth_model())); });
    return *bt_surfaces_;
  }

private:
  std::string dir_;
  std::once_flag bk_once_, bkg_once_, bt_once_, bts_once_;
  std::optional<burkhardt::BurkhardtModel> bk_;
  std::optional<GramMatrix> bk_gram_;
  burkhardt::MeetReport meet_;
  std::optional<barth::BarthModel> bt_;
  std::optional<barth::SurfaceFamily> bt_surfaces_;
};

struct Outcome {
  bool pass;
  std::string actual;
};

struct CheckSpec {
  std::string name;
  std::string claim;
  std::string expected;
  std::function<Outcome(CheckContext &, const std::string &expected)> run;
};

namespace detail {

inline Outcome equal_to_expected(const std::string &expected, std::string actual) {
  const bool ok = actual == expected;
  return {ok, std::move(actual)};
}

inline std::string join(const std::vector<std::string> &parts, const std::string &sep) {
  std::string out;
  for (const auto &p : parts)
    out += (out.empty() ? "" : sep) + p;
  return out;
}

template <class T>
std::string value_range(const std::vector<T> &v) {
  const auto [lo, hi] = std::minmax_element(v.begin(), v.end());
  return *lo == *hi ? std::to_string(*lo) : std::to_string(*lo) + ".." + std::to_string(*hi);
}

inline Outcome burkhardt_orbits(CheckContext &c, const std::string &e) {
  const auto &m = c.burkhardt_model();
  std::set<std::string> keys;
  for (const auto &p : m.singular_points)
    keys.insert(object_key(canonical_point(p)));
  return equal_to_expected(e, "orbits " + std::to_string(m.point_orbits[0].size()) + "+" +
                                  std::to_string(m.point_orbits[1].size()) + ", " + std::to_string(keys.size()) +
                                  " distinct points");
}

inline Outcome burkhardt_nodes(CheckContext &c, const std::string &e) {
  const auto nodes = burkhardt::verify_nodes(c.burkhardt_model());
  const auto ok = std::count_if(nodes.begin(), nodes.end(), [](const auto &n) { return n.is_node(); });
  return equal_to_expected(e, std::to_string(ok) + "/" + std::to_string(nodes.size()) + " nodes");
}

inline Outcome burkhardt_incidence(CheckContext &c, const std::string &e) {
  const auto &m = c.burkhardt_model();
  const auto r = burkhardt::plane_incidence(m);
  const auto on = std::count(r.plane_on_quartic.begin(), r.plane_on_quartic.end(), true);
  return equal_to_expected(e, std::to_string(on) + "/" + std::to_string(m.planes.size()) +
                                  " planes on the quartic, " + value_range(r.points_per_plane) +
                                  " points per plane, " + value_range(r.planes_per_point) + " planes per point");
}

inline Outcome burkhardt_meet_rule(CheckContext &c, const std::string &e) {
  const auto &r = c.meet_report();
  std::string actual = std::to_string(r.pairs) + " pairs, " + std::to_string(r.mismatches.size()) + " mismatches";
  if (!r.mismatches.empty())
    actual += " (first " + r.mismatches.front() + ")";
  return equal_to_expected(e, actual);
}

inline Outcome burkhardt_gram_rank(CheckContext &c, const std::string &e) {
  const auto r = burkhardt::gram_ranks(c.burkhardt_model(), c.burkhardt_gram());
  return equal_to_expected(e, "full " + std::to_string(r.full) + ", avoiding 5: " + std::to_string(r.avoiding_five) +
                                  ", containing 5: " + std::to_string(r.containing_five));
}

inline Outcome burkhardt_invariant_ranks(CheckContext &c, const std::string &e) {
  std::vector<std::string> parts;
  for (const auto &r : burkhardt::invariant_ranks(c.burkhardt_model(), c.burkhardt_gram())) {
    if (r.subgroup == "trivial")
      continue;
    parts.push_back(r.subgroup + " " + std::to_string(r.orbit_sum_rank) + "/" + std::to_string(r.trace_dimension));
  }
  return equal_to_expected(e, join(parts, ", "));
}

inline Outcome barth_orbits(CheckContext &c, const std::string &e) {
  const auto &m = c.barth_model();
  std::set<std::string> exact, points;
  for (const auto &g : m.rotations)
    exact.insert(barth::exact_key(g));
  std::vector<std::string> lengths;
  std::size_t total = 0;
  for (const auto &o : m.sigma_orbits) {
    lengths.push_back(std::to_string(o.size()));
    total += o.size();
    for (const auto &p : o.members)
      points.insert(object_key(p));
  }
  const MatElem m5 = eval_word(GroupWord::parse("M^5"), m.letters(), m.identity());
  const auto xi = barth::load_plane_fixture(c.fixture("xi_planes.json"), "v", m.field);
  const auto theta = barth::load_plane_fixture(c.fixture("theta_planes.json"), "u", m.field);
  const auto diff = barth::compare_plane_lists(m, xi, theta);
  std::string actual = "group " + std::to_string(m.group.order()) + " (" + std::to_string(exact.size()) +
                       " matrices), M^5 " + (m5.is_scalar() ? "= 1" : "!= 1") + ", Sigma " + join(lengths, "+") +
                       " = " + std::to_string(total) + " with " + std::to_string(points.size()) + " distinct, planes " +
                       (diff ? *diff : "as listed");
  return equal_to_expected(e, actual);
}

inline Outcome barth_invariance(CheckContext &c, const std::string &) {
  std::vector<std::string> parts;
  for (const auto &s : barth::verify_invariance(c.barth_model()))
    parts.push_back(s.generator + " " + s.scalar.to_string());
  return {true, "projectively invariant; scalars " + join(parts, ", ")};
}

inline Outcome barth_nodes(CheckContext &c, const std::string &e) {
  const auto nodes = barth::verify_nodes_barth(c.barth_model());
  const auto ok = std::count_if(nodes.begin(), nodes.end(), [](const auto &n) { return n.is_node(); });
  return equal_to_expected(e, std::to_string(ok) + "/" + std::to_string(nodes.size()) + " nodes");
}

inline Outcome barth_restrictions(CheckContext &c, const std::string &e) {
  const auto r = barth::verify_plane_restrictions(c.barth_model());
  const std::string core = std::to_string(r.xi.size()) + " smooth double cubics, " + std::to_string(r.theta.size()) +
                           " line^2 conic^2, printed squares match, " + std::to_string(r.xi_boundary_lines) +
                           " and " + std::to_string(r.theta_boundary_lines) + " boundary lines";
  return {core == e, core + "; Theta(-1,0,tau) scalar " + r.theta_example_scalar.to_string()};
}

inline Outcome barth_plane_classification(CheckContext &c, const std::string &e) {
  const auto r = barth::verify_plane_classification(c.barth_model());
  return equal_to_expected(e, r.failures().empty() ? "all family checks pass" : join(r.failures(), "; "));
}

inline Outcome barth_surfaces(CheckContext &c, const std::string &e) {
  const auto &f = c.barth_surfaces();
  return equal_to_expected(e, std::to_string(f.plus.size() + f.minus.size()) + " surfaces on the double solid, " +
                                  std::to_string(f.theta_labels.size()) + " Theta-side labels");
}

inline Outcome barth_table1(CheckContext &c, const std::string &e) {
  const auto r = barth::verify_table1(c.barth_model(), c.barth_surfaces(),
                                      barth::load_word_fixture(c.fixture("table1_words.json")));
  const std::string core = std::to_string(r.rows_matched) + "/20 rows, printed M^3, RN and surfaces match";
  return {core == e, r.note.empty() ? core : core + "; note: " + r.note};
}

inline Outcome barth_table2(CheckContext &c, const std::string &e) {
  const auto r = barth::verify_table2_and_ranks(c.barth_model(), c.barth_surfaces(),
                                                load_gram_fixture(c.fixture("table2.json")),
                                                barth::load_row_pattern(c.fixture("first_line.json")));
  return equal_to_expected(e, std::to_string(r.entries_matched) + "/" + std::to_string(r.entries_total) +
                                  " entries, first line " + (r.row_pattern ? "matches" : "differs") + ", rows " +
                                  (r.row_multisets ? "1x(-2) 12x1 7x0" : "irregular") + ", rank " +
                                  std::to_string(r.rank) + ", minus " + (r.minus_equals_plus ? "=" : "!=") + " plus");
}

inline Outcome barth_invariant_rank(CheckContext &c, const std::string &e) {
  const auto &f = c.barth_surfaces();
  std::vector<std::string> labels;
  for (const auto &s : f.plus)
    labels.push_back(s.label);
  const GramMatrix g(labels, barth::pairing_matrix(f.plus));
  const auto orbits = orbits_of_action(f.action, g.size());
  return equal_to_expected(e, "Gram rank " + std::to_string(rank(g.matrix)) + ", " + std::to_string(orbits.size()) +
                                  " orbit, orbit-sum rank " + std::to_string(rank(orbit_sum_gram(g, orbits))) +
                                  ", trace dimension " + std::to_string(invariant_dimension_via_trace(g, f.action)));
}

inline Outcome barth_rationality(CheckContext &, const std::string &e) {
  const auto r = barth::rationality_checks();
  const std::string core = std::string("coordinate change, both factorizations, both lines on the cubic, line rank ") +
                           std::to_string(r.line_rank);
  return {core == e && !r.opposite_root_factors,
          core + "; root " + r.root + (r.opposite_root_factors ? ", opposite root also factors" : "") +
              "; determinant " + r.line_determinant};
}

} // namespace detail

/// Every check in a fixed order.
inline const std::vector<CheckSpec> &check_catalog() {
  using namespace detail;
  static const std::vector<CheckSpec> catalog{
      {"burkhardt/orbits", "singular points of the Burkhardt quartic form S6-orbits of lengths 30 and 15",
       "orbits 30+15, 45 distinct points", burkhardt_orbits},
      {"burkhardt/nodes", "all 45 singular points are nodes (gradient zero, Hessian nondegenerate)", "45/45 nodes",
       burkhardt_nodes},
      {"burkhardt/incidence", "the 40 j-planes lie on the quartic, each through nine singular points",
       "40/40 planes on the quartic, 9 points per plane, 8 planes per point", burkhardt_incidence},
      {"burkhardt/meet-rule", "pairs of j-planes meet in a line or a point exactly as the index-triple rule predicts",
       "780 pairs, 0 mismatches", burkhardt_meet_rule},
      {"burkhardt/gram-rank", "Gram matrix of the j-planes and both 20x20 blocks have rank 16",
       "full 16, avoiding 5: 16, containing 5: 16", burkhardt_gram_rank},
      {"burkhardt/invariant-ranks", "invariant class ranks (orbit sums / trace average) for S6, A6 and both A5",
       "S6 1/1, A6 1/1, A5-standard 1/1, A5-nonstandard 2/2", burkhardt_invariant_ranks},
      {"barth/orbits", "N, R, M generate 60 rotations; node orbits of lengths 15, 20, 30; plane orbits as listed",
       "group 60 (60 matrices), M^5 = 1, Sigma 15+20+30 = 65 with 65 distinct, planes as listed", barth_orbits},
      {"barth/invariance", "the Barth sextic is invariant under N, R, M up to a recorded scalar",
       "projectively invariant", barth_invariance},
      {"barth/nodes", "all 65 points of the three orbits are nodes of the sextic", "65/65 nodes", barth_nodes},
      {"barth/restrictions", "the sextic restricts to double smooth cubics on Xi planes, line^2 conic^2 on Theta planes",
       "20 smooth double cubics, 6 line^2 conic^2, printed squares match, 10 and 6 boundary lines",
       barth_restrictions},
      {"barth/plane-classification", "no other plane pencil member restricts to a double cubic",
       "all family checks pass", barth_plane_classification},
      {"barth/surfaces", "each Xi plane splits into two surfaces on the double solid",
       "40 surfaces on the double solid, 12 Theta-side labels", barth_surfaces},
      {"barth/table1", "the listed words carry Xi+(1,1,1) to every Xi+ surface",
       "20/20 rows, printed M^3, RN and surfaces match", barth_table1},
      {"barth/table2", "pairings of the Xi+ surfaces match the listed matrix, which has rank 14",
       "400/400 entries, first line matches, rows 1x(-2) 12x1 7x0, rank 14, minus = plus", barth_table2},
      {"barth/invariant-rank", "the A5-invariant part of the Xi+ lattice has rank 1",
       "Gram rank 14, 1 orbit, orbit-sum rank 1, trace dimension 1", barth_invariant_rank},
      {"barth/rationality", "identities behind the rationality of the double solid",
       "coordinate change, both factorizations, both lines on the cubic, line rank 4", barth_rationality},
  };
  return catalog;
}

/// Checks of a suite ("burkhardt", "barth" or "all"), optionally filtered by
/// names given either in full ("barth/table2") or without the suite prefix.
inline std::vector<const CheckSpec *> select_checks(const std::string &suite, const std::vector<std::string> &names) {
  if (suite != "burkhardt" && suite != "barth" && suite != "all")
    throw std::invalid_argument("unknown suite " + suite);
  std::vector<const CheckSpec *> out;
  std::set<std::string> used;
  for (const auto &c : check_catalog()) {
    const auto slash = c.name.find('/');
    const std::string prefix = c.name.substr(0, slash), shortname = c.name.substr(slash + 1);
    if (suite != "all" && prefix != suite)
      continue;
    bool wanted = names.empty();
    for (const auto &n : names)
      if (n == c.name || n == shortname) {
        wanted = true;
        used.insert(n);
      }
    if (wanted)
      out.push_back(&c);
  }
  for (const auto &n : names)
    if (!used.count(n))
      throw std::invalid_argument("no check named " + n + " in suite " + suite);
  return out;
}

inline CheckResult run_check(const CheckSpec &spec, CheckContext &ctx) {
  CheckResult r{spec.name, Status::fail, spec.expected, "", 0};
  const auto t0 = std::chrono::steady_clock::now();
  try {
    const Outcome o = spec.run(ctx, spec.expected);
    r.status = o.pass ? Status::pass : Status::fail;
    r.actual = o.actual;
  } catch (const std::exception &e) {
    r.actual = e.what();
  }
  r.millis = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

/// Runs the checks on a pool of `jobs` threads; results keep catalog order.
inline std::vector<CheckResult> run_checks(const std::vector<const CheckSpec *> &checks, CheckContext &ctx,
                                           unsigned jobs) {
  std::vector<CheckResult> out(checks.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < checks.size(); i = next++)
      out[i] = run_check(*checks[i], ctx);
  };
  const unsigned n = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(checks.size())));
  std::vector<std::thread> pool;
  for (unsigned k = 1; k < n; ++k)
    pool.emplace_back(worker);
  worker();
  for (auto &t : pool)
    t.join();
  return out;
}

struct SuiteReport {
  std::string suite;
  std::vector<CheckResult> checks;

  std::size_t count(Status s) const {
    return static_cast<std::size_t>(
        std::count_if(checks.begin(), checks.end(), [&](const CheckResult &c) { return c.status == s; }));
  }
  bool all_passed() const { return count(Status::fail) == 0; }
};

inline nlohmann::json report_to_json(const SuiteReport &r) {
  nlohmann::json checks = nlohmann::json::array();
  for (const auto &c : r.checks)
    checks.push_back({{"name", c.name},
                      {"status", to_string(c.status)},
                      {"expected", c.expected},
                      {"actual", c.actual},
                      {"millis", c.millis}});
  return {{"suite", r.suite},
          {"toolkit_version", toolkit_version},
          {"checks", checks},
          {"summary",
           {{"pass", r.count(Status::pass)}, {"fail", r.count(Status::fail)}, {"skipped", r.count(Status::skipped)}}}};
}

inline std::string report_to_text(const SuiteReport &r) {
  std::ostringstream out;
  for (const auto &c : r.checks) {
    std::string tag = to_string(c.status);
    std::transform(tag.begin(), tag.end(), tag.begin(), ::toupper);
    out << tag << "  " << c.name << " (" << c.millis << " ms)\n";
    out << "      expected: " << c.expected << "\n";
    out << "      actual:   " << c.actual << "\n";
  }
  out << "suite " << r.suite << ": " << r.count(Status::pass) << " passed, " << r.count(Status::fail) << " failed, "
      << r.count(Status::skipped) << " skipped\n";
  return out.str();
}

} // namespace fanocheck
