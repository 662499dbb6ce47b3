#include "cli.hpp"

#include "symm/exact_moments.hpp"
#include "symm/mollifier.hpp"
#include "symm/self_similar.hpp"

#include <doctest.h>
#include <json.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

using symm::cli::run;
using json = nlohmann::json;

namespace {

json run_json(const std::vector<std::string>& args, int expected_code = 0) {
  const auto r = run(args);
  REQUIRE(r.exit_code == expected_code);
  return json::parse(r.out);
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream f(p);
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

std::filesystem::path temp_file(const char* name) {
  return std::filesystem::temp_directory_path() / name;
}

}  // namespace

TEST_CASE("paper examples through the command line") {
  CHECK(run_json({"gk", "U", "4"})["result"] == "24024");
  CHECK(run_json({"cp", "5", "3/13", "--exact"})["result"] == "23/72");
  CHECK(run_json({"mollify", "Sp", "--P", "0,1", "--Q", "1"})["result"] == "1 + 2*theta^-1 + theta^-2");
}

TEST_CASE("round trip of exact results") {
  for (auto s : symm::kAllSymmetries) {
    for (std::uint64_t k : {1, 5, 17, 40}) {
      const auto j = run_json({"gk", std::string(symm::to_string(s)), std::to_string(k), "--factor"});
      CHECK(symm::BigInt(j["result"].get<std::string>()) == symm::g_exact(s, k));
      CHECK(j["details"]["factorization"] == symm::g_factored(s, k).to_string());
    }
  }
  const auto c = run_json({"cp", "7", "0.35", "--exact"});
  CHECK(symm::parse_rational(c["result"].get<std::string>()) == symm::cp_exact(7, symm::Rational(7, 20)));
  const auto m = run_json({"mollify", "O", "--P", "0,0,1", "--Q", "1", "--theta", "1/2"});
  CHECK(m["result"] == "4*theta^-2 + 4*theta^-3");
  CHECK(m["details"]["value_at_theta"] == "48");
}

TEST_CASE("numeric commands") {
  const auto g = run_json({"ghalf"});
  CHECK(g["result"].get<std::string>().rfind("1.0362329154", 0) == 0);
  CHECK(g["details"]["within_bounds"] == true);
  const auto l = run_json({"glambda", "U", "1/2", "--limit", "--digits", "10"});
  CHECK(l["result"].get<std::string>().rfind("1.03623291", 0) == 0);
  CHECK(l.contains("err_estimate"));
  CHECK(run_json({"poles", "O", "2"})["result"] == 2);
  CHECK(run_json({"classify", "5", "3", "13"})["result"] == "SelfSimilar");
  CHECK(run_json({"vp", "U", "3", "100"})["result"] == "65");
  CHECK(run_json({"vp", "U", "101", "100"})["details"]["zero_window"] == true);
  const auto a = run_json({"assemble", "U", "1", "2", "--ak", "0.6079271018540266286632767792"});
  CHECK(std::stod(a["result"].get<std::string>()) == doctest::Approx(0.05066059182116889));
  CHECK(a["details"]["log_power"] == 4);
  CHECK(run_json({"asym", "Sp", "80"}).contains("details"));
  CHECK(run_json({"ak", "spquad", "1", "--cutoff", "1000"}).contains("err_estimate"));
}

TEST_CASE("errors and usage") {
  const auto pole = run_json({"glambda", "U", "-1.5"}, 1);
  CHECK(pole["error"]["kind"] == "PoleError");
  CHECK(run_json({"mollify", "O", "--P", "1,1", "--Q", "1"}, 1)["error"]["kind"] == "ConstraintError");
  CHECK(run_json({"gk", "O", "0"}, 1)["error"]["kind"] == "DomainError");
  const auto zero = run_json({"gk", "U", "0"});
  CHECK(zero["result"] == "1");
  CHECK(zero["details"].contains("warning"));
  CHECK(run({}).exit_code == 2);
  CHECK(run({"bogus"}).exit_code == 2);
  CHECK(run({"gk", "X", "3"}).exit_code == 2);
  CHECK(run({"gk", "U"}).exit_code == 2);
  CHECK(run({"gk", "U", "three"}).exit_code == 2);
  CHECK(run({"cp", "5", "1/3", "--exact", "--eps", "1e-3"}).exit_code == 2);
  CHECK(run({"gk", "U", "3", "--json", "--csv"}).exit_code == 2);
  CHECK(run({"--help"}).exit_code == 0);
}

TEST_CASE("csv output") {
  const auto r = run({"gk", "U", "3", "--csv"});
  REQUIRE(r.exit_code == 0);
  CHECK(r.out == "command,inputs.sym,inputs.k,result,details.b_exponent\ngk,U,3,42,9\n");
}

TEST_CASE("deterministic output and opt-in timing") {
  const std::vector<std::string> args{"glambda", "Sp", "1.7", "--digits", "20"};
  CHECK(run(args).out == run(args).out);
  CHECK_FALSE(run_json(args).contains("elapsed_ms"));
  auto timed = args;
  timed.push_back("--timing");
  CHECK(run_json(timed).contains("elapsed_ms"));
}

TEST_CASE("cp-plot") {
  const auto svg = temp_file("symm_cp3.svg");
  const auto csv = temp_file("symm_cp3.csv");
  REQUIRE(run({"cp-plot", "3", "0.2", "8", "2000", "--svg", svg.string()}).exit_code == 0);
  REQUIRE(run({"cp-plot", "3", "0.2", "8", "2000", "--csv", csv.string()}).exit_code == 0);
  CHECK(run({"cp-plot", "3", "0.2", "8", "20"}).exit_code == 2);

  const std::string s = slurp(svg);
  CHECK(s.rfind("<?xml", 0) == 0);
  CHECK(s.find("<svg xmlns=\"http://www.w3.org/2000/svg\"") != std::string::npos);
  CHECK(s.find("</svg>") != std::string::npos);
  CHECK(s.find("href") == std::string::npos);

  const auto at = s.find("points=\"");
  REQUIRE(at != std::string::npos);
  const auto from = at + 8;
  std::istringstream pts(s.substr(from, s.find('"', from) - from));
  std::vector<double> ys;
  std::string pt;
  while (pts >> pt) ys.push_back(std::stod(pt.substr(pt.find(',') + 1)));
  REQUIRE(ys.size() == 2000);

  // Ordinates are an affine image of the samples.
  const auto samples = symm::sample_cp(3, 0.2, 8.0, 2000, 1e-9);
  std::size_t lo = 0, hi = 0;
  for (std::size_t i = 0; i < samples.size(); ++i) {
    if (samples[i].cp < samples[lo].cp) lo = i;
    if (samples[i].cp > samples[hi].cp) hi = i;
  }
  const double a = (ys[hi] - ys[lo]) / (samples[hi].cp - samples[lo].cp);
  CHECK(a < 0);  // SVG y grows downward
  for (std::size_t i = 0; i < samples.size(); ++i) {
    REQUIRE(std::abs(ys[i] - (ys[lo] + a * (samples[i].cp - samples[lo].cp))) < 2e-3);
  }

  std::istringstream lines(slurp(csv));
  std::string header, line;
  std::getline(lines, header);
  CHECK(header == "x,cp");
  std::size_t n = 0;
  while (std::getline(lines, line)) {
    const auto comma = line.find(',');
    REQUIRE(std::abs(std::stod(line.substr(comma + 1)) - samples[n].cp) < 1e-15);
    ++n;
  }
  CHECK(n == 2000);
  std::filesystem::remove(svg);
  std::filesystem::remove(csv);
}
