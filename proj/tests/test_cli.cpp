#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <regex>
#include <sstream>
#include <string>

#include <doctest.h>
#include <json.hpp>

#include "askey/families.hpp"

using namespace askey;
using nlohmann::json;

namespace {

struct Run {
  int code;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(ASKEY_CLI) + " " + args + " 2>/dev/null";
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p);
  std::string out;
  char buf[4096];
  while (std::size_t n = fread(buf, 1, sizeof buf, p)) out.append(buf, n);
  const int status = pclose(p);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::vector<std::string> lines(const std::string& s) {
  std::vector<std::string> v;
  std::istringstream in(s);
  for (std::string l; std::getline(in, l);) v.push_back(l);
  return v;
}

std::string strip_time(const std::string& s) { return std::regex_replace(s, std::regex("\"wallTimeMs\": [0-9]+"), ""); }

std::filesystem::path temp_file(const std::string& name) { return std::filesystem::temp_directory_path() / name; }

}  // namespace

TEST_CASE("eval examples") {
  Run r = run("eval --family cqu --n 0 --qparams 1/2,2/3 --at-z 7/5");
  CHECK(r.code == 0);
  CHECK(lines(r.out).at(0) == "1");

  r = run("eval --family ultraspherical --n 2 --alpha 0 --at 1/2");
  CHECK(r.code == 0);
  CHECK(lines(r.out).at(0) == "-1/8");
  CHECK(lines(r.out).at(1) == "-0.125");

  const QRacahParams p(Rat(1, 3), Rat(1, 2), Rat(1, 5), 3, Rat(1, 16));
  r = run("eval --family q-racah --n 1 --x N --alpha 1/3 --beta 1/2 --delta 1/5 --N 3 --q 1/16");
  CHECK(r.code == 0);
  CHECK(lines(r.out).at(0) == qracah(1, 3, p).str());

  r = run("eval --family cqu --n 2 --qparams 1/2,2/3");
  CHECK(lines(r.out).at(0) == "1287/12950 z^2 + 612/6475 + 1287/12950 z^-2");
}

TEST_CASE("eval rejects bad input with exit 2") {
  CHECK(run("eval --family nope --n 1").code == 2);
  CHECK(run("eval --family cqu --n 1 --qparams 3/2,1 --at 0").code == 2);
  CHECK(run("eval --family racah --n 1 --alpha 1/2 --beta 1/3 --N 3 --delta 1/5 --x 9").code == 2);
  CHECK(run("eval --family ultraspherical --n 1 --at 0").code == 2);
}

TEST_CASE("table") {
  Run r = run("table --family q-racah-weights --N 3 --alpha 1/3 --beta 1/2 --delta 1/5 --q 1/16");
  CHECK(r.code == 0);
  auto ls = lines(r.out);
  REQUIRE(ls.size() == 5);
  CHECK(ls[0] == "index,exact,float");
  CHECK(ls[1].rfind("0,1,", 0) == 0);

  const RacahParams rp(Rat(1, 2), Rat(1, 3), 3, Rat(1, 5));
  r = run("table --family racah-weights --N 3 --alpha 1/2 --beta 1/3 --delta 1/5");
  ls = lines(r.out);
  REQUIRE(ls.size() == 5);
  Rat sum(0);
  for (std::size_t i = 1; i < ls.size(); ++i) {
    const auto a = ls[i].find(','), b = ls[i].find(',', a + 1);
    sum += Rat::parse(ls[i].substr(a + 1, b - a - 1));
  }
  CHECK(sum == racah_norms(0, rp).h0);

  r = run("table --family racah-weights --N 3 --alpha 1/2 --beta 1/3 --delta 1/5 --from 3 --to 2");
  CHECK(r.code == 0);
  CHECK(lines(r.out) == std::vector<std::string>{"index,exact,float"});
}

TEST_CASE("verify theorem-5-1 passes on the default grid") {
  const Run r = run("verify --suite theorem-5-1");
  CHECK(r.code == 0);
  const json j = json::parse(r.out);
  CHECK(j["suite"] == "theorem-5-1");
  CHECK(j["summary"]["fail"] == 0);
  CHECK(j["summary"]["error"] == 0);
  CHECK(j["summary"]["pass"] == j["checks"].size());
  CHECK(j["checks"].size() == 63);
  for (const char* key : {"version", "suite", "grid", "checks", "summary", "wallTimeMs"}) CHECK(j.contains(key));
}

TEST_CASE("verify rejects bad configuration with exit 2") {
  CHECK(run("verify --suite duality --qparams 3/2,1").code == 2);
  CHECK(run("verify --suite nope").code == 2);
  CHECK(run("verify --suite duality --format yaml").code == 2);
  CHECK(run("verify --suite duality --alpha -1").code == 2);
  CHECK(run("verify --suite duality --jobs 0").code == 2);
  CHECK(run("verify").code == 2);
}

TEST_CASE("reports are byte-stable apart from wall time") {
  const Run a = run("verify --suite difference --jobs 1");
  const Run b = run("verify --suite difference --jobs 3");
  CHECK(strip_time(a.out) == strip_time(b.out));
  const Run c = run("verify --suite restriction --format csv");
  const Run d = run("verify --suite restriction --format csv --jobs 2");
  CHECK(c.out == d.out);
  CHECK(lines(c.out).at(0) == "id,params,verdict,location,lhs,rhs,residual,message");
}

TEST_CASE("mutation yields exit 1 and localized witnesses") {
  const Run r = run("verify --suite weight-recurrence --mutate 0");
  CHECK(r.code == 1);
  const json j = json::parse(r.out);
  for (const auto& c : j["checks"]) {
    CHECK(c["verdict"] == "fail");
    CHECK(c.contains("witness"));
  }
  CHECK(run("verify --suite weight-recurrence --mutate x").code == 2);
}

TEST_CASE("config file supplies defaults and flags override it") {
  const auto path = temp_file("askey_test.conf");
  {
    std::ofstream f(path);
    f << "# defaults\nqparams = 1/2,2/3\ngrid-lmax = 2\nformat = text\n";
  }
  Run r = run("verify --suite theorem-5-1 --config " + path.string());
  CHECK(r.code == 0);
  CHECK(r.out.find("suite theorem-5-1: 6 pass, 0 fail, 0 error") != std::string::npos);

  r = run("verify --suite theorem-5-1 --format json --qparams 2/3,1/2 --config " + path.string());
  const json j = json::parse(r.out);
  CHECK(j["grid"]["qparams"] == json::array({"2/3,1/2"}));
  CHECK(j["checks"].size() == 6);

  {
    std::ofstream f(path);
    f << "colour = blue\n";
  }
  CHECK(run("verify --suite duality --config " + path.string()).code == 2);
  std::filesystem::remove(path);
}

TEST_CASE("--out writes the report to a file") {
  const auto path = temp_file("askey_report.json");
  const Run r = run("verify --suite difference --out " + path.string());
  CHECK(r.code == 0);
  CHECK(r.out.empty());
  std::ifstream in(path);
  CHECK(json::parse(in)["summary"]["pass"] == 3);
  std::filesystem::remove(path);
}

TEST_CASE("suite all fails only on the two second-order limits") {
  const Run r = run("verify --suite all --qparams 1/2,2/3");
  CHECK(r.code == 1);
  const json j = json::parse(r.out);
  std::vector<std::string> failing;
  for (const auto& c : j["checks"]) {
    if (c["verdict"] != "pass") failing.push_back(c["id"]);
  }
  CHECK(failing == std::vector<std::string>{"limit.cqu-to-ultra", "limit.dual-addition-q-to-1"});
  CHECK(j["summary"]["error"] == 0);
}
