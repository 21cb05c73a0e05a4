#include "catch_amalgamated.hpp"

#include <algorithm>
#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>
#include <sys/wait.h>
#include <unistd.h>

#include <json.hpp>

namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out;
};

Run run(const std::string &args) {
  const std::string cmd = std::string(FANOCHECK_CLI) + " " + args + " 2>/dev/null";
  FILE *p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  std::string out;
  std::array<char, 4096> buf{};
  while (std::fgets(buf.data(), buf.size(), p))
    out += buf.data();
  const int status = pclose(p);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

fs::path scratch_fixtures() {
  const fs::path dir = fs::temp_directory_path() / ("fanocheck-cli-" + std::to_string(::getpid()));
  fs::remove_all(dir);
  fs::create_directories(dir);
  for (const auto &e : fs::directory_iterator(FANOCHECK_FIXTURES_DIR))
    fs::copy_file(e.path(), dir / e.path().filename());
  return dir;
}

} // namespace

TEST_CASE("list prints the catalog", "[cli]") {
  const auto r = run("list");
  CHECK(r.code == 0);
  for (const char *name : {"burkhardt/orbits", "burkhardt/gram-rank", "barth/table2", "barth/rationality"})
    CHECK(r.out.find(name) != std::string::npos);
  CHECK(std::count(r.out.begin(), r.out.end(), '\n') == 16);
}

TEST_CASE("usage errors exit with 2", "[cli]") {
  CHECK(run("verify nosuch").code == 2);
  CHECK(run("verify barth --check nosuch").code == 2);
  CHECK(run("verify barth --format yaml").code == 2);
  CHECK(run("").code == 2);
  CHECK(run("--help").code == 0);
}

TEST_CASE("json report for one check", "[cli]") {
  const auto r = run("verify barth --check table2 --format json");
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j.at("suite") == "barth");
  CHECK(j.at("toolkit_version").is_string());
  REQUIRE(j.at("checks").size() == 1);
  const auto &c = j["checks"][0];
  CHECK(c.at("name") == "barth/table2");
  CHECK(c.at("status") == "pass");
  CHECK(c.at("expected") == c.at("actual"));
  CHECK(c.at("millis").is_number_integer());
  CHECK(j.at("summary").at("pass") == 1);
  CHECK(j.at("summary").at("fail") == 0);
  CHECK(j.at("summary").at("skipped") == 0);
}

TEST_CASE("a corrupted fixture fails with the entry coordinates", "[cli]") {
  const fs::path dir = scratch_fixtures();
  nlohmann::json t2;
  std::ifstream(dir / "table2.json") >> t2;
  auto &e = t2["rows"][2][5];
  e = e.get<long>() == 1 ? 0 : 1;
  t2["rows"][5][2] = e;
  std::ofstream(dir / "table2.json") << t2.dump();
  const auto r = run("verify barth --check barth/table2 --fixtures " + dir.string());
  const auto all = run("verify all --format json --fixtures " + dir.string());
  fs::remove_all(dir);
  CHECK(r.code == 1);
  CHECK(r.out.find("FAIL") != std::string::npos);
  CHECK(r.out.find("[2,5]") != std::string::npos);
  CHECK(all.code == 1);
  for (const auto &c : nlohmann::json::parse(all.out)["checks"])
    if (c["name"] == "barth/table2") {
      CHECK(c["status"] == "fail");
      CHECK(c["actual"].get<std::string>().find("[2,5]") != std::string::npos);
    }
}

TEST_CASE("a missing fixture fails the check that needs it", "[cli]") {
  const fs::path dir = scratch_fixtures();
  fs::remove(dir / "table1_words.json");
  const auto r = run("verify barth --check table1 --format json --fixtures " + dir.string());
  fs::remove_all(dir);
  CHECK(r.code == 1);
  CHECK(nlohmann::json::parse(r.out)["checks"][0]["status"] == "fail");
}

TEST_CASE("results do not depend on the number of jobs", "[cli]") {
  const std::string checks = "--check orbits --check nodes --check invariance --check incidence --format json";
  auto strip = [](const std::string &text) {
    auto j = nlohmann::json::parse(text);
    for (auto &c : j["checks"])
      c.erase("millis");
    return j;
  };
  const auto one = run("verify all " + checks + " --jobs 1");
  const auto four = run("verify all " + checks + " --jobs 4");
  REQUIRE(one.code == 0);
  REQUIRE(four.code == 0);
  CHECK(strip(one.out) == strip(four.out));
  CHECK(strip(one.out)["checks"].size() == 6);
}

TEST_CASE("report can be written to a file", "[cli]") {
  const fs::path out = fs::temp_directory_path() / ("fanocheck-out-" + std::to_string(::getpid()) + ".txt");
  const auto r = run("verify burkhardt --check meet-rule --out " + out.string());
  CHECK(r.code == 0);
  CHECK(r.out.empty());
  std::ifstream in(out);
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  fs::remove(out);
  CHECK(text.find("PASS  burkhardt/meet-rule") != std::string::npos);
}
