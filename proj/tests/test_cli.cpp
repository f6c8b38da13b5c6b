#include <sys/wait.h>

#include <cstdio>
#include <fstream>

#include "doctest.h"
#include "support.hpp"

namespace {

struct Run {
  int status;
  std::string out;
};

// stdout and stderr together
Run run(const std::string& args, const std::string& env = "") {
  const std::string cmd = env + " " + LOCUSKIT_CLI + " " + args + " 2>&1";
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  std::string out;
  char buf[4096];
  for (std::size_t n; (n = fread(buf, 1, sizeof buf, p)) > 0;) out.append(buf, n);
  const int st = pclose(p);
  return {WIFEXITED(st) ? WEXITSTATUS(st) : -1, out};
}

void write(const std::string& path, const std::string& text) { std::ofstream(path) << text; }

}  // namespace

TEST_CASE("derive k = 2 matches the golden file") {
  const Run r = run("derive --scenario euler --k 2");
  CHECK(r.status == 0);
  CHECK(r.out == lk_test::slurp(lk_test::data_path("euler_k2_locus.txt")));
  CHECK(run("derive --scenario euler --k 2 --formulation full").out == r.out);
  CHECK(run("derive --scenario euler --k 2 --modular").out == r.out);
}

TEST_CASE("derive errors") {
  const Run z = run("derive --scenario euler --k 0");
  CHECK(z.status == 1);
  CHECK(z.out.find("k must be positive") != std::string::npos);
  CHECK(z.out.find("E_K_NONPOSITIVE") != std::string::npos);
  CHECK(run("derive").status == 1);
  CHECK(run("derive --scenario euler --k 2 --format xml").status == 1);
  CHECK(run("derive --system /nonexistent.sys").status == 1);
  const Run b = run("derive --scenario euler --k 2", "LOCUSKIT_BUDGET_PAIRS=3");
  CHECK(b.status == 2);
  CHECK(b.out.find("E_BUDGET") != std::string::npos);
}

TEST_CASE("derive from a system file") {
  write("bisector.sys", "vars: a b x y\neliminate: a b\na^2 - x^2 - y^2\nb^2 - (x - 1)^2 - y^2\na - b\n");
  const Run r = run("derive --system bisector.sys");
  CHECK(r.status == 0);
  CHECK(r.out == "2*x - 1\n");
  const Run j = run("derive --system bisector.sys --format json --out bisector.json");
  const auto rep = nlohmann::json::parse(j.out);
  CHECK(rep["schema"] == 1);
  CHECK(rep["locus"] == "2*x - 1");
  CHECK(rep["input"]["system"] == "bisector.sys");
  CHECK(nlohmann::json::parse(lk_test::slurp("bisector.json"))["locus"] == "2*x - 1");
}

TEST_CASE("analyze with membership checks") {
  const Run r = run("analyze --scenario euler --k 2 --check-point 1/2 1/2:sqrt3 "
                    "--check-point 1/2 -1/2:sqrt3 --format json");
  REQUIRE(r.status == 0);
  const auto rep = nlohmann::json::parse(r.out);
  CHECK(rep["factorization"]["factors"].size() == 3);
  CHECK(rep["membership"] == true);
  CHECK(rep["isolated_points"].size() == 2);
  CHECK(rep["classification"]["total"]["incircle"] == 0);
  CHECK(rep["status"] == "ok");
  CHECK(rep["input"]["k"] == "2");
  const Run miss = run("analyze --scenario euler --k 2 --check-point 1/3 1/5 --format json");
  CHECK(nlohmann::json::parse(miss.out)["membership"] == false);
}

TEST_CASE("analyze k = 19/10 has no incircle samples") {
  const Run r = run("analyze --scenario euler --k 19/10 --format json");
  REQUIRE(r.status == 0);
  const auto rep = nlohmann::json::parse(r.out);
  for (const auto& f : rep["classification"]["per_factor"]) CHECK(f["incircle"] == 0);
  CHECK(rep["input"]["k"] == "19/10");
}

TEST_CASE("analyze an empty locus") {
  write("empty.sys", "vars: a x y\neliminate: a\n1\n");
  const Run r = run("analyze --system empty.sys --out empty.json");
  CHECK(r.status == 1);
  CHECK(r.out.find("empty locus") != std::string::npos);
  const auto rep = nlohmann::json::parse(lk_test::slurp("empty.json"));
  CHECK(rep["status"] == "empty locus");
  CHECK(rep["errors"][0]["code"] == "E_EMPTY_LOCUS");
}

TEST_CASE("plot") {
  const Run c = run("plot --poly \"x^3 - x^2 - y^2\" --out cubic.svg");
  CHECK(c.status == 0);
  const std::string svg = lk_test::slurp("cubic.svg");
  std::size_t circles = 0;
  for (auto p = svg.find("<circle"); p != std::string::npos; p = svg.find("<circle", p + 1)) ++circles;
  CHECK(circles == 1);
  CHECK(run("plot --poly \"x^3 - x^2 - y^2\" --out cubic2.svg").status == 0);
  CHECK(lk_test::slurp("cubic2.svg") == svg);

  const Run e = run("plot --scenario euler --k 2 --out k2.svg --format json");
  REQUIRE(e.status == 0);
  CHECK(nlohmann::json::parse(e.out)["isolated_points"].size() == 2);

  const Run k3 = run("plot --scenario euler --k 3 --classify --out k3.svg --csv k3.csv --resolution 128");
  CHECK(k3.status == 0);
  const std::string csv = lk_test::slurp("k3.csv");
  CHECK(csv.find(",incircle\n") != std::string::npos);
  CHECK(csv.find(",ex_a\n") != std::string::npos);
  CHECK(run("plot --poly \"x - y\" --classify").status == 1);
  CHECK(run("plot --poly \"x - y\" --resolution 4").status == 1);
  CHECK(run("plot --poly \"x - y\" --bbox 1 1 0 0").status == 1);
}
