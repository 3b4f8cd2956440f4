#include "doctest.h"

#include <charconv>
#include <clocale>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "rflight/density.hpp"
#include "rflight/model.hpp"

namespace {

struct Outcome {
  int code = 0;
  std::string out;
  std::string err;
};

Outcome run(std::vector<std::string> args) {
  args.insert(args.begin(), "rflight");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = rflight::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> result;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) result.push_back(line);
  return result;
}

std::vector<std::string> cells(const std::string& line) {
  std::vector<std::string> result;
  std::istringstream in(line);
  for (std::string cell; std::getline(in, cell, ',');) result.push_back(cell);
  return result;
}

double parse(const std::string& s) {
  double v = 0.0;
  const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
  REQUIRE(res.ec == std::errc{});
  REQUIRE(res.ptr == s.data() + s.size());
  return v;
}

}  // namespace

TEST_CASE("density-profile defaults") {
  const Outcome r = run({"density-profile"});
  REQUIRE(r.code == 0);
  const auto rows = lines(r.out);
  REQUIRE(rows.size() == 501);
  CHECK(rows[0] == "r,ac_density");
  const auto p = rflight::validate_params(5.0, 2.0);
  double prev_r = -1.0, prev_v = -1.0;
  for (std::size_t i = 1; i < rows.size(); ++i) {
    const auto c = cells(rows[i]);
    REQUIRE(c.size() == 2);
    const double radius = parse(c[0]);
    const double value = parse(c[1]);
    CHECK(radius > prev_r);
    CHECK(value > prev_v);
    CHECK(radius < 0.5);
    // 17 significant digits round-trip to the library value exactly
    CHECK(value == rflight::ac_density(radius, 0.1, p));
    prev_r = radius;
    prev_v = value;
  }
  CHECK(parse(cells(rows[1])[1]) == doctest::Approx(0.224).epsilon(1e-3));
  CHECK(parse(cells(rows[500])[0]) == doctest::Approx(0.499).epsilon(1e-12));
}

TEST_CASE("density-profile options") {
  const Outcome two = run({"density-profile", "--points", "2"});
  CHECK(two.code == 0);
  CHECK(lines(two.out).size() == 3);
  CHECK(run({"density-profile", "--t", "0.1", "--rmax", "0.6"}).code == 2);
  CHECK(run({"density-profile", "--points", "1"}).code == 2);
  CHECK(run({"density-profile", "--c", "-1"}).code == 2);
  CHECK(run({"density-profile", "--t", "0"}).code == 2);
  const Outcome narrow = run({"density-profile", "--rmax", "0.25", "--points", "5"});
  REQUIRE(narrow.code == 0);
  const auto rows = lines(narrow.out);
  REQUIRE(rows.size() == 6);
  CHECK(cells(rows[5])[0] == "0.20000000000000001");
}

TEST_CASE("gcurves") {
  const Outcome r = run({"gcurves"});
  REQUIRE(r.code == 0);
  const auto rows = lines(r.out);
  REQUIRE(rows.size() == 801);
  CHECK(rows[0] == "lambda,t,g_exact,g_tilde,gap");
  bool found = false;
  for (std::size_t i = 1; i < rows.size(); ++i) {
    const auto c = cells(rows[i]);
    REQUIRE(c.size() == 5);
    const double lambda = parse(c[0]), t = parse(c[1]), g = parse(c[2]), gt = parse(c[3]), gap = parse(c[4]);
    CHECK(std::abs(gap - (g - gt)) <= 1e-15);
    CHECK(t > 0.0);
    CHECK(t <= 1.0);
    if (lambda == 1.0 && std::abs(t - 0.7) < 1e-12) {
      found = true;
      CHECK(gap == doctest::Approx(0.00575).epsilon(1e-3));
    }
  }
  CHECK(found);
  // the first rows sit near t = 0, where both curves vanish
  const auto first = cells(rows[1]);
  CHECK(parse(first[2]) < 0.01);
  CHECK(parse(first[3]) < 0.01);

  const Outcome single = run({"gcurves", "--lambda", "2", "--tmin", "0", "--tmax", "0.4", "--points", "4"});
  REQUIRE(single.code == 0);
  const auto srows = lines(single.out);
  REQUIRE(srows.size() == 5);
  CHECK(parse(cells(srows[4])[4]) == doctest::Approx(0.0090799).epsilon(1e-4));
  CHECK(run({"gcurves", "--tmin", "0.5", "--tmax", "0.2"}).code == 2);
  CHECK(run({"gcurves", "--lambda", "0"}).code == 2);
}

TEST_CASE("simulate is reproducible and partitions the mass") {
  const std::vector<std::string> args{"simulate", "--samples", "100000", "--seed", "7"};
  const Outcome a = run(args);
  const Outcome b = run(args);
  REQUIRE(a.code == 0);
  CHECK(a.out == b.out);
  auto with_workers = args;
  with_workers.insert(with_workers.end(), {"--workers", "3"});
  CHECK(run(with_workers).out == a.out);
  CHECK(run({"simulate", "--samples", "100000", "--seed", "8"}).out != a.out);

  const auto rows = lines(a.out);
  REQUIRE(rows.size() == 52);
  CHECK(rows[0] == "r_lo,r_hi,mass");
  double total = 0.0;
  for (std::size_t i = 1; i + 1 < rows.size(); ++i) total += parse(cells(rows[i])[2]);
  const auto atom = cells(rows.back());
  REQUIRE(atom.size() == 2);
  CHECK(atom[0] == "atom");
  const double w = std::exp(-0.2);
  CHECK(std::abs(parse(atom[1]) - w) <= 3.0 * std::sqrt(w * (1 - w) / 1e5));
  CHECK(std::abs(total + parse(atom[1]) - 1.0) <= 1e-12);
}

TEST_CASE("simulate raw output") {
  const Outcome r = run({"simulate", "--raw", "--samples", "500", "--seed", "3"});
  REQUIRE(r.code == 0);
  const auto rows = lines(r.out);
  REQUIRE(rows.size() == 501);
  CHECK(rows[0] == "x1,x2,x3,n_switches");
  for (std::size_t i = 1; i < rows.size(); ++i) {
    const auto c = cells(rows[i]);
    REQUIRE(c.size() == 4);
    const double radius = std::hypot(parse(c[0]), parse(c[1]), parse(c[2]));
    CHECK(radius <= 0.5 * (1 + 1e-12));
    if (c[3] == "0") CHECK(radius == doctest::Approx(0.5).epsilon(1e-12));
  }
  CHECK(run({"simulate", "--samples", "0"}).code == 2);
  CHECK(run({"simulate", "--bins", "0"}).code == 2);
}

TEST_CASE("validate exit codes") {
  const Outcome quick = run({"validate", "--quick"});
  CHECK(quick.code == 0);
  CHECK(quick.out.find("FAIL") == std::string::npos);
  CHECK(quick.out.rfind("PASS ", 0) == 0);
  const Outcome csv = run({"validate", "--quick", "--csv", "--t", "0.1"});
  CHECK(csv.code == 0);
  CHECK(lines(csv.out).at(0) == "name,lhs,rhs,tolerance,passed");
  CHECK(run({"validate", "--tol", "abc"}).code == 2);
  CHECK(run({"validate", "--tol", "-1"}).code == 2);
  CHECK(run({"validate", "--samples", "10"}).code == 2);
  CHECK(run({"validate", "--terms", "0"}).code == 2);
  // a term budget too small for the series is a check failure, not a usage error
  CHECK(run({"validate", "--quick", "--terms", "3"}).code == 1);
}

TEST_CASE("usage errors and help") {
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"density-profile", "--bogus"}).code == 2);
  const Outcome help = run({"--help"});
  CHECK(help.code == 0);
  CHECK(help.out.find("density-profile") != std::string::npos);
}

TEST_CASE("output file and verbose run spec") {
  const auto path = std::filesystem::temp_directory_path() / "rflight_cli_test.csv";
  const Outcome r = run({"density-profile", "--points", "3", "--output", path.string(), "--verbose"});
  REQUIRE(r.code == 0);
  CHECK(r.out.empty());
  CHECK(r.err.find("command=density-profile") != std::string::npos);
  CHECK(r.err.find("seed=20160701") != std::string::npos);
  std::ifstream in(path, std::ios::binary);
  const std::string content((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  CHECK(content == run({"density-profile", "--points", "3"}).out);
  CHECK(content.find('\r') == std::string::npos);
  std::filesystem::remove(path);
  CHECK(run({"gcurves", "--output", "/nonexistent-dir/x.csv"}).code == 2);
}

TEST_CASE("CSV does not depend on the process locale") {
  const std::string reference = run({"density-profile", "--points", "4"}).out;
  const char* previous = std::setlocale(LC_ALL, nullptr);
  const std::string saved = previous ? previous : "C";
  bool switched = false;
  for (const char* name : {"de_DE.UTF-8", "de_DE.utf8", "fr_FR.UTF-8", "C.UTF-8"}) {
    if (std::setlocale(LC_ALL, name)) {
      switched = true;
      break;
    }
  }
  const std::string localized = run({"density-profile", "--points", "4"}).out;
  std::setlocale(LC_ALL, saved.c_str());
  CHECK(localized == reference);
  if (!switched) MESSAGE("no alternative locale installed; compared under the C locale only");
}
