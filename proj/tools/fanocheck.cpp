#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "fanocheck/checks.hpp"

#ifndef FANOCHECK_FIXTURES_DIR
#define FANOCHECK_FIXTURES_DIR "fixtures/v1"
#endif

namespace {

int run_verify(const std::string &suite, const std::vector<std::string> &names, const std::string &format,
               const std::string &out_path, const std::string &fixtures, unsigned jobs) {
  std::vector<const fanocheck::CheckSpec *> checks;
  try {
    checks = fanocheck::select_checks(suite, names);
  } catch (const std::invalid_argument &e) {
    std::cerr << "fanocheck: " << e.what() << "\n";
    return 2;
  }
  fanocheck::CheckContext ctx(fixtures);
  const fanocheck::SuiteReport report{suite, fanocheck::run_checks(checks, ctx, jobs)};
  const std::string text =
      format == "json" ? fanocheck::report_to_json(report).dump(2) + "\n" : fanocheck::report_to_text(report);
  if (out_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(out_path);
    if (!out) {
      std::cerr << "fanocheck: cannot write " << out_path << "\n";
      return 2;
    }
    out << text;
  }
  return report.all_passed() ? 0 : 1;
}

void run_list() {
  for (const auto &c : fanocheck::check_catalog())
    std::cout << c.name << "\t" << c.claim << "\n";
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"Exact verification of the Burkhardt quartic and Barth sextic computations"};
  app.require_subcommand(1);
  app.set_version_flag("--version", fanocheck::toolkit_version);

  std::string suite, format = "text", out_path, fixtures = FANOCHECK_FIXTURES_DIR;
  std::vector<std::string> names;
  unsigned jobs = 1;
  auto *verify = app.add_subcommand("verify", "run verification checks");
  verify->add_option("suite", suite, "burkhardt, barth or all")
      ->required()
      ->check(CLI::IsMember({"burkhardt", "barth", "all"}));
  verify->add_option("--check", names, "check name, with or without the suite prefix (repeatable)");
  verify->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));
  verify->add_option("--out", out_path, "write the report to a file");
  verify->add_option("--fixtures", fixtures, "fixture directory");
  verify->add_option("--jobs", jobs, "worker threads")->check(CLI::Range(1u, 256u));
  app.add_subcommand("list", "print the check catalog");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  if (app.got_subcommand("list")) {
    run_list();
    return 0;
  }
  return run_verify(suite, names, format, out_path, fixtures, jobs);
}
