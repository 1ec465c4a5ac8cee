#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "doctest.h"
#include "json.hpp"
#include "testutil.hpp"

using fractheta::ErrorCode;
using fractheta::Rational;
using fractheta::cli::parse_h_list;
using fractheta::cli::run;
using testutil::throws_code;

namespace {

namespace fs = std::filesystem;

/// Scratch file that removes itself; every CLI invocation in these tests
/// writes to a file so the test binary's stdout stays clean.
class TempFile {
 public:
  explicit TempFile(const std::string& stem)
      : path_(fs::temp_directory_path() / stem) {}
  ~TempFile() {
    std::error_code ignored;
    fs::remove(path_, ignored);
  }
  [[nodiscard]] std::string str() const { return path_.string(); }
  [[nodiscard]] std::string contents() const {
    std::ifstream in(path_, std::ios::binary);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
  }

 private:
  fs::path path_;
};

std::vector<std::string> split_lines(const std::string& text) {
  std::vector<std::string> lines;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) lines.push_back(line);
  return lines;
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("step-size ranges parse to exact rational chains") {
  const std::vector<Rational> chain = parse_h_list("1/4..1/64");
  REQUIRE(chain.size() == 5);
  CHECK(chain.front() == Rational{1, 4});
  CHECK(chain[2] == Rational{1, 16});
  CHECK(chain.back() == Rational{1, 64});

  const std::vector<Rational> pair = parse_h_list("1/3..1/6");
  REQUIRE(pair.size() == 2);
  CHECK(pair[0] == Rational{1, 3});
  CHECK(pair[1] == Rational{1, 6});

  const std::vector<Rational> single = parse_h_list("2");
  REQUIRE(single.size() == 1);
  CHECK(single[0] == Rational{2, 1});

  const std::vector<Rational> listed = parse_h_list("1/4,1/8,1/32");
  REQUIRE(listed.size() == 3);
  CHECK(listed[1] == Rational{1, 8});
}

TEST_CASE("malformed step-size specifications are rejected") {
  for (const char* bad : {"1/4..1/10", "garbage", "1/4..1/8,1/16", "0/4",
                          "-1/4", "", "1/0", "1/8..1/4"}) {
    CAPTURE(bad);
    CHECK(throws_code(ErrorCode::malformed_range,
                      [&] { return parse_h_list(bad); }));
  }
}

TEST_CASE("weights dump is byte exact for the identity scheme") {
  TempFile out("fractheta_test_weights_id.csv");
  const int code = run({"weights", "--family", "bt", "--alpha", "0",
                        "--theta", "0.2", "--n", "2", "--out", out.str()});
  REQUIRE(code == 0);
  CHECK(out.contents() ==
        "j,omega\n"
        "0,1.0000000000000000e+00\n"
        "1,0.0000000000000000e+00\n"
        "2,0.0000000000000000e+00\n");
}

TEST_CASE("exit codes separate usage, validation, and numerical failures") {
  TempFile out("fractheta_test_codes.csv");
  // Usage / parse problems -> 2.
  CHECK(run({"weights", "--family", "xx", "--alpha", "0.5", "--theta", "0",
             "--n", "4", "--out", out.str()}) == 2);
  CHECK(run({"no-such-command"}) == 2);
  CHECK(run({"weights", "--family", "bt", "--alpha", "0.5"}) == 2);
  // Domain validation -> 2.
  CHECK(run({"weights", "--family", "bt", "--alpha", "-0.5", "--theta", "0.7",
             "--n", "4", "--out", out.str()}) == 2);
  CHECK(run({"solve", "--example", "caputo", "--family", "bt", "--alpha",
             "0.5", "--theta", "0", "--n", "8", "--h", "1/8", "--out",
             out.str()}) == 2);
  CHECK(run({"solve", "--example", "caputo", "--family", "bt", "--alpha",
             "0.5", "--theta", "0", "--out", out.str()}) == 2);
  CHECK(run({"solve", "--example", "caputo", "--family", "bt", "--alpha",
             "0.5", "--theta", "0", "--n", "8", "--correction", "on", "--out",
             out.str()}) == 2);
  // Numerical breakdown (curve pole hit by an odd sample count) -> 3.
  CHECK(run({"region", "--family", "bn", "--alpha", "0.5", "--theta", "1",
             "--samples", "17", "--out", out.str()}) == 3);
  // Help is a success.
  CHECK(run({"--help"}) == 0);
}

TEST_CASE("negative option values parse as values") {
  TempFile out("fractheta_test_negative.csv");
  CHECK(run({"weights", "--family", "bt", "--alpha", "-0.5", "--theta", "-1",
             "--n", "4", "--out", out.str()}) == 0);
  const std::vector<std::string> lines = split_lines(out.contents());
  REQUIRE(lines.size() == 6);
  CHECK(lines[0] == "j,omega");
}

TEST_CASE("reruns are byte identical") {
  TempFile first("fractheta_test_det_a.csv");
  TempFile second("fractheta_test_det_b.csv");
  const std::vector<std::string> base = {
      "table", "--example", "caputo", "--family", "bt",    "--alphas", "0.5",
      "--thetas", "0,0.45", "--h",    "1/4..1/16"};
  std::vector<std::string> args_a = base;
  args_a.insert(args_a.end(), {"--out", first.str()});
  std::vector<std::string> args_b = base;
  args_b.insert(args_b.end(), {"--out", second.str()});
  REQUIRE(run(args_a) == 0);
  REQUIRE(run(args_b) == 0);
  const std::string text = first.contents();
  CHECK(text == second.contents());
  CHECK_FALSE(text.empty());

  TempFile json_a("fractheta_test_det_a.json");
  TempFile json_b("fractheta_test_det_b.json");
  REQUIRE(run({"weights", "--family", "bn", "--alpha", "0.7", "--theta", "0.9",
               "--n", "32", "--format", "json", "--out", json_a.str()}) == 0);
  REQUIRE(run({"weights", "--family", "bn", "--alpha", "0.7", "--theta", "0.9",
               "--n", "32", "--format", "json", "--out", json_b.str()}) == 0);
  CHECK(json_a.contents() == json_b.contents());
}

TEST_CASE("json artifacts parse and carry the scheme") {
  TempFile out("fractheta_test_weights.json");
  REQUIRE(run({"weights", "--family", "bt", "--alpha", "0.5", "--theta", "0.2",
               "--n", "8", "--format", "json", "--out", out.str()}) == 0);
  const nlohmann::json doc = nlohmann::json::parse(out.contents());
  CHECK(doc["command"] == "weights");
  CHECK(doc["scheme"]["family"] == "bt");
  CHECK(doc["scheme"]["alpha"] == 0.5);
  REQUIRE(doc["omega"].size() == 9);
  CHECK(double(doc["omega"][0]) ==
        doctest::Approx(std::sqrt(1.6 / 2.6)).epsilon(1e-14));
}

TEST_CASE("corrections dump exposes the exponent set and residual") {
  TempFile csv("fractheta_test_corr.csv");
  REQUIRE(run({"corrections", "--family", "bt", "--alpha", "0.5", "--theta",
               "0", "--beta", "1.1", "--n", "4", "--out", csv.str()}) == 0);
  const std::vector<std::string> lines = split_lines(csv.contents());
  REQUIRE(lines.size() == 6);  // header + rows n=0..4, single column
  CHECK(lines[0] == "n,j,omega_nj");
  CHECK(lines[1] == "0,1,0.0000000000000000e+00");

  TempFile empty("fractheta_test_corr_empty.csv");
  REQUIRE(run({"corrections", "--family", "bt", "--alpha", "0.5", "--theta",
               "0", "--beta", "3", "--n", "4", "--out", empty.str()}) == 0);
  CHECK(empty.contents() == "n,j,omega_nj\n");

  TempFile json_out("fractheta_test_corr.json");
  REQUIRE(run({"corrections", "--family", "bt", "--alpha", "-1.5", "--theta",
               "0", "--beta", "1.1", "--n", "64", "--format", "json", "--out",
               json_out.str()}) == 0);
  const nlohmann::json doc = nlohmann::json::parse(json_out.contents());
  REQUIRE(doc["exponents"].size() == 3);
  CHECK(double(doc["exponents"][2]) == doctest::Approx(3.1));
  CHECK(double(doc["max_residual"]) <= 1e-9);
}

TEST_CASE("solve trajectory artifacts") {
  TempFile caputo("fractheta_test_solve_caputo.csv");
  REQUIRE(run({"solve", "--example", "caputo", "--family", "bt", "--alpha",
               "0.5", "--theta", "0.45", "--n", "64", "--out",
               caputo.str()}) == 0);
  const std::vector<std::string> lines = split_lines(caputo.contents());
  REQUIRE(lines.size() == 66);
  CHECK(lines[0] == "n,x,u_num,u_exact,abs_err");
  CHECK(lines[1] ==
        "0,0.0000000000000000e+00,1.0000000000000000e+00,"
        "1.0000000000000000e+00,0.0000000000000000e+00");

  // Worst trajectory error matches the reference table cell within 1%.
  double max_err = 0.0;
  for (std::size_t i = 2; i < lines.size(); ++i) {
    const std::size_t last_comma = lines[i].rfind(',');
    max_err = std::max(max_err, std::stod(lines[i].substr(last_comma + 1)));
  }
  CHECK(std::abs(max_err / 2.278e-4 - 1.0) <= 0.01);

  // The abel example has no closed-form reference: nan columns.
  TempFile abel("fractheta_test_solve_abel.csv");
  REQUIRE(run({"solve", "--example", "abel", "--family", "bt", "--alpha",
               "0.5", "--theta", "0", "--lambda", "-1", "--n", "16", "--out",
               abel.str()}) == 0);
  const std::vector<std::string> abel_lines = split_lines(abel.contents());
  REQUIRE(abel_lines.size() == 18);
  CHECK(abel_lines[1].substr(abel_lines[1].size() - 8) == ",nan,nan");

  TempFile bagley("fractheta_test_solve_bagley.json");
  REQUIRE(run({"solve", "--example", "bagley", "--family", "bn", "--theta1",
               "1", "--theta2", "0.7", "--h", "1/32", "--format", "json",
               "--out", bagley.str()}) == 0);
  const nlohmann::json doc = nlohmann::json::parse(bagley.contents());
  CHECK(doc["example"] == "bagley");
}

TEST_CASE("table artifact layout") {
  TempFile out("fractheta_test_table.csv");
  REQUIRE(run({"table", "--example", "caputo", "--family", "bt", "--alphas",
               "0.5", "--thetas", "0.45", "--h", "1/4..1/64", "--out",
               out.str()}) == 0);
  const std::vector<std::string> lines = split_lines(out.contents());
  REQUIRE(lines.size() == 6);
  CHECK(lines[0] == "alpha,thetas,h,error,rate");
  CHECK(lines[1].substr(0, 13) == "0.5,0.45,1/4,");
  // Coarsest row carries no rate; later rows do.
  CHECK(lines[1].back() == ',');
  CHECK(lines[5].find("1/64,") != std::string::npos);
  CHECK(lines[5].back() != ',');

  TempFile bag("fractheta_test_table_bagley.csv");
  REQUIRE(run({"table", "--example", "bagley", "--family", "bt", "--theta1",
               "0,0.45", "--theta2", "0,-0.1", "--h", "1/4..1/8", "--out",
               bag.str()}) == 0);
  const std::vector<std::string> bag_lines = split_lines(bag.contents());
  REQUIRE(bag_lines.size() == 5);  // two columns x two steps
  CHECK(bag_lines[1].substr(0, 12) == "-2;-1.5,0;0,");
}

TEST_CASE("region artifact includes the appended origin") {
  TempFile out("fractheta_test_region.csv");
  REQUIRE(run({"region", "--family", "bt", "--alpha", "0.5", "--theta", "0",
               "--samples", "16", "--out", out.str()}) == 0);
  const std::vector<std::string> lines = split_lines(out.contents());
  REQUIRE(lines.size() == 18);  // header + 16 samples + origin
  CHECK(lines[0] == "phi,re_z,im_z");
  CHECK(lines.back() ==
        "0.0000000000000000e+00,0.0000000000000000e+00,"
        "0.0000000000000000e+00");
}

TEST_CASE("stability check verdicts") {
  TempFile violation("fractheta_test_check_viol.csv");
  REQUIRE(run({"check-stability", "--family", "bn", "--alpha",
               "0.6666666666666666", "--theta", "0.9", "--vartheta",
               "1.5707963267948966", "--out", violation.str()}) == 0);
  const std::vector<std::string> lines = split_lines(violation.contents());
  REQUIRE(lines.size() == 2);
  CHECK(lines[0] == "verdict,phi,re_z,im_z");
  CHECK(lines[1].substr(0, 10) == "violation,");

  TempFile stable("fractheta_test_check_ok.csv");
  REQUIRE(run({"check-stability", "--family", "bt", "--alpha", "0.5",
               "--theta", "0.2", "--out", stable.str()}) == 0);
  CHECK(split_lines(stable.contents())[1] == "stable-evidence,nan,nan,nan");

  // Differentiation orders have no default sector: the half-angle is required.
  TempFile missing("fractheta_test_check_missing.csv");
  CHECK(run({"check-stability", "--family", "bt", "--alpha", "-0.5", "--theta",
             "0.2", "--out", missing.str()}) == 2);
}

}  // TEST_SUITE
