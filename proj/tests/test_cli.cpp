#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <numbers>
#include <sstream>

#include "hilbertnorm/cli.hpp"

using hilbertnorm::cli::run;
using json = nlohmann::json;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result call(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

json call_json(std::vector<std::string> args) {
  const auto r = call(std::move(args));
  REQUIRE(r.code == 0);
  return json::parse(r.out);
}

std::vector<std::vector<std::string>> csv_rows(const std::string& text) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    std::vector<std::string> cells;
    std::string cell;
    std::istringstream ls(line);
    while (std::getline(ls, cell, ',')) cells.push_back(cell);
    if (!line.empty() && line.back() == ',') cells.emplace_back();
    rows.push_back(std::move(cells));
  }
  return rows;
}

std::filesystem::path temp_file(const std::string& name, const std::string& content) {
  const auto path = std::filesystem::temp_directory_path() / name;
  std::ofstream(path) << content;
  return path;
}

const double kPi = std::numbers::pi;

}  // namespace

TEST_CASE("bound on the growth space at alpha = 1/2") {
  const auto j = call_json({"bound", "--space", "hinf", "--alpha", "0.5"});
  CHECK(j["lower"].get<double>() == doctest::Approx(kPi).epsilon(1e-15));
  CHECK(j["upper"].get<double>() == doctest::Approx(kPi).epsilon(1e-15));
  CHECK(j["gap"].get<double>() <= 1e-6);
  CHECK(j.contains("quadrature_err"));
  CHECK(j["exact"].get<bool>());
}

TEST_CASE("bound above 2/3 carries the split point") {
  const auto j = call_json({"bound", "--alpha", "0.8"});
  CHECK(!j["exact"].get<bool>());
  CHECK(j["regime_split_t"].get<double>() == doctest::Approx(1.0 / 3.0));
  CHECK(j["upper"].get<double>() > j["lower"].get<double>());
}

TEST_CASE("bound on A^p") {
  const auto j = call_json({"bound", "--space", "ap", "--p", "3"});
  CHECK(j["lower"].get<double>() == doctest::Approx(kPi / std::sin(2.0 * kPi / 3.0)));
  CHECK(call({"bound", "--space", "ap", "--p", "4.5"}).code == 1);
}

TEST_CASE("tnorm") {
  const auto j = call_json({"tnorm", "--alpha", "0.8", "--t", "0.5"});
  CHECK(j["regime"] == "boundary_formula");
  CHECK(j["value"].get<double>() == doctest::Approx(2.0).epsilon(1e-14));

  const auto k = call_json({"tnorm", "--alpha", "0.8", "--t", "0.1"});
  CHECK(k["regime"] == "interior_max");
  CHECK(k["x0"].get<double>() > 0.0);
}

TEST_CASE("verify") {
  const auto j = call_json({"verify", "beta_2p"});
  CHECK(j["passed"].get<bool>());
  CHECK(j["lemma_id"] == "beta_2p");
  CHECK(j["worst_margin"].get<double>() >= -1e-12);

  const auto rows_path = std::filesystem::temp_directory_path() / "hilbertnorm_rows.csv";
  const auto r = call({"verify", "beta_2p", "--rows", rows_path.string()});
  CHECK(r.code == 0);
  std::ifstream in(rows_path);
  std::stringstream ss;
  ss << in.rdbuf();
  CHECK(csv_rows(ss.str()).size() == 200);
  std::filesystem::remove(rows_path);

  CHECK(call({"verify", "no_such_lemma"}).code == 1);
}

TEST_CASE("sweeps") {
  const auto r = call({"--format", "csv", "sweep", "bound"});
  REQUIRE(r.code == 0);
  const auto rows = csv_rows(r.out);
  REQUIRE(rows.size() == 20);
  CHECK(rows[0][0] == "alpha");
  for (std::size_t i = 1; i < rows.size(); ++i) {
    CHECK(std::stod(rows[i][1]) <= std::stod(rows[i][2]));
    CHECK(rows[i].back().empty());
  }

  const auto ap = csv_rows(call({"--format", "csv", "sweep", "apref"}).out);
  CHECK(ap.size() == 20);
  CHECK(std::stod(ap[10][1]) == doctest::Approx(kPi / std::sin(2.0 * kPi / 3.0)));

  const auto tn = call_json({"sweep", "tnorm", "--alpha", "0.9"});
  const auto& trows = tn["rows"];
  REQUIRE(trows.size() == 99);
  for (std::size_t i = 1; i < trows.size(); ++i) {
    CHECK(trows[i]["t"].get<double>() > trows[i - 1]["t"].get<double>());
  }

  // Out-of-domain rows are kept with an error instead of aborting.
  const auto bad = csv_rows(call({"--format", "csv", "sweep", "bound", "--from", "0.5", "--to",
                                  "1.2", "--step", "0.25"})
                                .out);
  REQUIRE(bad.size() == 4);
  CHECK(bad[1].back().empty());
  CHECK(!bad[3].back().empty());
}

TEST_CASE("apply") {
  const auto j = call_json({"apply", "--method", "integral", "--falpha", "0.5", "--at", "0.5,0"});
  const auto v = j["value"];
  CHECK(v[0].get<double>() > 0.0);
  CHECK(j.contains("err_estimate"));

  const auto coeffs = temp_file("hilbertnorm_one.json", "[[1, 0]]");
  const auto c = call_json({"apply", "--method", "coeffs", "--coeffs", coeffs.string(), "--m",
                            "400", "--at", "0.5,0"});
  CHECK(c["value"][0].get<double>() == doctest::Approx(2.0 * std::log(2.0)).epsilon(1e-12));

  const auto i = call_json({"apply", "--method", "integral", "--coeffs", coeffs.string(), "--at",
                            "0.5,0"});
  CHECK(i["value"][0].get<double>() == doctest::Approx(2.0 * std::log(2.0)).epsilon(1e-12));

  const auto req = temp_file(
      "hilbertnorm_req.json",
      R"({"op": "apply", "method": "integral", "input": [[1, 0]], "at": [0.5, 0]})");
  const auto q = call_json({"apply", "--request", req.string()});
  CHECK(q["value"][0].get<double>() == doctest::Approx(2.0 * std::log(2.0)).epsilon(1e-12));

  CHECK(call({"apply", "--method", "integral", "--coeffs", coeffs.string(), "--at", "1,0"}).code ==
        1);
  std::filesystem::remove(coeffs);
  std::filesystem::remove(req);
}

TEST_CASE("norm") {
  const auto coeffs = temp_file("hilbertnorm_z.json", "[[0, 0], [1, 0]]");
  const auto j = call_json({"norm", "--space", "ap", "--p", "3", "--coeffs", coeffs.string()});
  CHECK(j["value"].get<double>() == doctest::Approx(std::cbrt(0.4)).epsilon(1e-10));
  const auto k = call_json({"norm", "--space", "hinf", "--alpha", "0.5", "--falpha", "0.5"});
  CHECK(std::abs(k["value"].get<double>() - std::sqrt(2.0)) < 1e-3);
  CHECK(call({"norm", "--space", "ap", "--p", "5", "--coeffs", coeffs.string()}).code == 1);
  std::filesystem::remove(coeffs);
}

TEST_CASE("exit codes and usage") {
  CHECK(call({}).code == 1);
  const auto u = call({"frobnicate"});
  CHECK(u.code == 1);
  CHECK(u.err.find("Usage") != std::string::npos);
  CHECK(call({"tnorm", "--alpha", "1.5", "--t", "0.5"}).code == 1);
  CHECK(call({"bound", "--alpha", "0"}).code == 1);
  CHECK(call({"--help"}).code == 0);

  // A budget too small to converge is an accuracy failure.
  const auto acc = call({"--tol", "1e-300", "apply", "--method", "integral", "--falpha", "0.9",
                         "--at", "0.99,0"});
  CHECK(acc.code == 2);
}

TEST_CASE("output is deterministic and --out writes the same bytes") {
  const std::vector<std::string> args{"--format", "csv", "sweep", "tnorm", "--alpha", "0.9"};
  const auto a = call(args);
  const auto b = call(args);
  CHECK(a.out == b.out);

  const auto path = std::filesystem::temp_directory_path() / "hilbertnorm_out.csv";
  auto with_out = args;
  with_out.insert(with_out.begin(), {"--out", path.string()});
  CHECK(call(with_out).code == 0);
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  CHECK(ss.str() == a.out);
  std::filesystem::remove(path);
}
