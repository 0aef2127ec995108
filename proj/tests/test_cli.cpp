#include <sys/wait.h>

#include <array>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iterator>
#include <string>

#include <catch2/catch_amalgamated.hpp>
#include <json.hpp>

namespace {

struct RunResult {
  int exit_code;
  std::string out;
};

// Runs the CLI through the shell, capturing stdout; stderr is dropped unless
// the caller redirects it.
RunResult run(const std::string& args) {
  const std::string cmd = std::string(PHASEMASS_CLI_PATH) + " " + args;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  std::array<char, 4096> buf{};
  std::size_t got = 0;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0)
    out.append(buf.data(), got);
  const int status = pclose(pipe);
  return {WEXITSTATUS(status), out};
}

std::string temp_path(const std::string& name) {
  return std::string("cli_test_") + name;
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  REQUIRE(f.good());
  f << text;
}

}  // namespace

TEST_CASE("ratios emits the three-particle report with the mean scale") {
  const auto r = run("ratios");
  REQUIRE(r.exit_code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["masses"] == "paper");
  REQUIRE(j["results"].size() == 3);
  CHECK(j["results"][0]["particle"] == "electron");
  CHECK(j["results"][0]["ratio"]["den"] == 1820);
  CHECK(j["results"][1]["ratio"]["num"] == 14);
  CHECK(j["results"][2]["deviation_pct"] == 0.0);
  CHECK(j["mean_inferred_M_mev"] == 940.8876190476191);
}

TEST_CASE("ratios respects the csv format flag") {
  const auto r = run("ratios --format csv");
  REQUIRE(r.exit_code == 0);
  CHECK(r.out.starts_with("particle,ratio_num,ratio_den,"));
  CHECK(r.out.find("mean_M,,,,,,940.888\n") != std::string::npos);
}

TEST_CASE("freq emits the golden frequency table") {
  const auto r = run("freq --format csv");
  REQUIRE(r.exit_code == 0);
  CHECK(r.out ==
        "particle,mass_mev,freq_zhz,freq_zhz_rounded_3sf\n"
        "electron,0.511,0.123559,0.124\n"
        "pion,135,32.6429,32.6\n"
        "proton,938,226.807,227\n");
}

TEST_CASE("freq natural units report the phase rate") {
  const auto r = run("freq --units natural");
  REQUIRE(r.exit_code == 0);
  const auto j = nlohmann::json::parse(r.out);
  REQUIRE(j.size() == 3);
  CHECK(j[0]["phase_rate"] == 0.511);
  CHECK(j[2]["phase_rate"] == 938.0);
}

TEST_CASE("mc-align output is byte-deterministic and schema-complete") {
  const std::string args = "mc-align --dim 16 --samples 500 --seed 7";
  const auto a = run(args);
  const auto b = run(args);
  REQUIRE(a.exit_code == 0);
  CHECK(a.out == b.out);
  const auto j = nlohmann::json::parse(a.out);
  CHECK(j["samples"] == 500);
  CHECK(j["seed"] == 7);
  CHECK(j["expected_num"] == 1);
  CHECK(j["expected_den"] == 1820);
  CHECK(j["mean"].is_number());
  CHECK(j["stderr"].is_number());
  const auto c = run("mc-align --dim 16 --samples 500 --seed 8");
  CHECK(c.out != a.out);
}

TEST_CASE("mc-align respects the dimension flag") {
  const auto r = run("mc-align --dim 12 --samples 500 --seed 0");
  REQUIRE(r.exit_code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["expected_den"] == 495);
}

TEST_CASE("mc-accrual proton is exact") {
  const auto r = run("mc-accrual --particle proton --samples 100 --seed 0");
  REQUIRE(r.exit_code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["mean"] == 1.0);
  CHECK(j["stderr"] == 0.0);
  CHECK(j["expected_num"] == 1);
  CHECK(j["expected_den"] == 1);
}

TEST_CASE("mc-accrual pion carries its exact expectation") {
  const auto r = run("mc-accrual --particle pion --samples 200 --seed 1");
  REQUIRE(r.exit_code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["expected_num"] == 14);
  CHECK(j["expected_den"] == 99);
  CHECK(j["mean"].get<double>() > 0.05);
  CHECK(j["mean"].get<double>() < 0.25);
}

TEST_CASE("repcheck reports the fourth and fifth plane answers") {
  const auto r = run("repcheck");
  REQUIRE(r.exit_code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["fourth_plane"]["feasible"] == true);
  REQUIRE(j["fourth_plane"]["solutions"].size() == 2);
  CHECK(j["fourth_plane"]["solutions"][0] ==
        nlohmann::json::array({0.0, 0.0, 0.0, 1.0}));
  CHECK(j["fifth_plane"]["feasible"] == false);
  const double res = j["fifth_plane"]["residual"].get<double>();
  CHECK(res >= 0.5 - 1e-9);
  CHECK(res <= 0.51);
}

TEST_CASE("subspace count prints the exact binomial") {
  const auto r = run("subspace count --dim 16 --sub-dim 4");
  REQUIRE(r.exit_code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["count"] == "1820");
  const auto csv = run("subspace count --dim 12 --sub-dim 4 --format csv");
  CHECK(csv.out == "N,n,count\n12,4,495\n");
}

TEST_CASE("subspace dot reads matrix files") {
  const std::string a = temp_path("a.txt");
  const std::string b = temp_path("b.txt");
  write_file(a,
             "1 0 0 0 0\n"
             "0 1 0 0 0\n"
             "0 0 1 0 0\n"
             "0 0 0 1 0\n");
  // Fourth vector rotated by 60 degrees into the fifth coordinate.
  write_file(b,
             "# comment lines and blanks are ignored\n"
             "1 0 0 0 0\n"
             "0 1 0 0 0\n"
             "0 0 1 0 0\n\n"
             "0 0 0 0.5 0.8660254037844386\n");
  const auto r = run("subspace dot " + a + " " + b);
  REQUIRE(r.exit_code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["ambient"] == 5);
  CHECK(j["sub"] == 4);
  CHECK(std::abs(j["dot"].get<double>() - 0.5) < 1e-12);
  std::remove(a.c_str());
  std::remove(b.c_str());
}

TEST_CASE("subspace expand emits one weight per index set") {
  const std::string a = temp_path("e.txt");
  write_file(a,
             "1 0 0 0 0\n"
             "0 1 0 0 0\n"
             "0 0 1 0 0\n"
             "0 0 0 1 0\n");
  const auto r = run("subspace expand " + a);
  REQUIRE(r.exit_code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["N"] == 5);
  CHECK(j["n"] == 4);
  REQUIRE(j["coeffs"].size() == 5);
  CHECK(j["coeffs"][0]["alpha"] == nlohmann::json::array({1, 2, 3, 4}));
  CHECK(j["coeffs"][0]["w"] == 1.0);

  const auto csv = run("subspace expand " + a + " --format csv");
  CHECK(csv.out.starts_with("alpha,w\n1-2-3-4,1\n"));
  std::remove(a.c_str());
}

TEST_CASE("problems emits the three supplementary tables") {
  const auto r = run("problems");
  REQUIRE(r.exit_code == 0);
  const auto j = nlohmann::json::parse(r.out);
  REQUIRE(j["alignment_choices"].size() == 4);
  CHECK(j["alignment_choices"][0]["choices"] == "1");
  CHECK(j["alignment_choices"][1]["choices"] == "20");
  CHECK(j["alignment_choices"][2]["choices"] == "84");
  CHECK(j["alignment_choices"][3]["choices"] == "220");
  CHECK(j["compton_frequencies"][0]["freq_zhz_rounded_3sf"] == 0.124);
  bool found = false;
  for (const auto& row : j["coefficient_economy"]) {
    if (row["n"] == 4 && row["N"] == 16) {
      found = true;
      CHECK(row["dof"] == 48);
      CHECK(row["coeff_count_minus_one"] == "1819");
      CHECK(row["suffice"] == false);
    }
  }
  CHECK(found);
}

TEST_CASE("--output writes the same bytes to a file") {
  const std::string path = temp_path("out.json");
  const auto direct = run("ratios");
  const auto filed = run("ratios --output " + path);
  REQUIRE(filed.exit_code == 0);
  CHECK(filed.out.empty());
  std::ifstream f(path, std::ios::binary);
  REQUIRE(f.good());
  std::string content((std::istreambuf_iterator<char>(f)),
                      std::istreambuf_iterator<char>());
  CHECK(content == direct.out);
  std::remove(path.c_str());
}

TEST_CASE("usage errors exit with code 2 and a synopsis on stderr") {
  const auto r = run("no-such-command 2>/dev/null");
  CHECK(r.exit_code == 2);
  const auto stderr_too = run("no-such-command 2>&1");
  CHECK(stderr_too.out.find("usage: phasemass") != std::string::npos);
  const auto bad_flag = run("ratios --masses bogus 2>/dev/null");
  CHECK(bad_flag.exit_code == 2);
  const auto missing = run("mc-accrual --samples 100 2>/dev/null");
  CHECK(missing.exit_code == 2);
  const auto none = run("2>/dev/null");
  CHECK(none.exit_code == 2);
}

TEST_CASE("computation errors exit with code 1") {
  // Degenerate matrix: rank-deficient input is a computation failure.
  const std::string a = temp_path("sing.txt");
  write_file(a, "1 0 0\n2 0 0\n");
  const auto r = run("subspace dot " + a + " " + a + " 2>/dev/null");
  CHECK(r.exit_code == 1);
  // Enumeration too large to materialize.
  const auto big = run("subspace count --dim -3 --sub-dim 4 2>/dev/null");
  CHECK(big.exit_code == 1);
  std::remove(a.c_str());
}

TEST_CASE("help is printed on request with exit 0") {
  const auto r = run("--help");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("ratios") != std::string::npos);
  CHECK(r.out.find("subspace") != std::string::npos);
}
