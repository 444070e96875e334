#include <gtest/gtest.h>

#include <algorithm>
#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include "hk/error.hpp"
#include "hk/io.hpp"

namespace hk::io {
namespace {

struct CliRun {
  int status;
  std::string out;
};

// Runs the hkd binary with `stdin_text` piped in.
CliRun run_cli(const std::string& args, const std::string& stdin_text) {
  const auto dir = std::filesystem::temp_directory_path();
  const auto in = dir / ("hkd_io_test_" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) +
                         "_" + ::testing::UnitTest::GetInstance()->current_test_info()->name() + ".json");
  std::ofstream(in) << stdin_text;
  const std::string cmd = std::string(HKD_CLI_PATH) + " " + args + " < " + in.string();
  FILE* pipe = popen(cmd.c_str(), "r");
  std::string out;
  std::array<char, 4096> buf;
  while (std::size_t n = std::fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), n);
  const int status = pclose(pipe);
  std::filesystem::remove(in);
  return {WEXITSTATUS(status), out};
}

const char* kP1O2 = R"({"vertices": [[0], [2]]})";
const char* kSquare = R"({"vertices": [[-1, -1], [1, -1], [1, 1], [-1, 1]]})";

std::string error_code(const std::string& text) {
  try {
    parse_spec(text);
  } catch (const Error& e) {
    return std::string(error_code_name(e.code())) + ": " + e.what();
  }
  return "ok";
}

TEST(Io, PiecewiseJsonRoundTrip) {
  const PiecewisePoly f({0, make_rat(1, 3), 1}, {Poly{1, 0, make_rat(-9, 2)}, Poly{}});
  const Json j = to_json(f);
  EXPECT_EQ(j["breakpoints"][1], "1/3");
  EXPECT_EQ(j["pieces"][0][2], "-9/2");
  EXPECT_TRUE(j["pieces"][1].empty());
  const PiecewisePoly g = pw_from_json(j);
  EXPECT_EQ(g.breakpoints(), f.breakpoints());
  EXPECT_EQ(g.pieces(), f.pieces());
  EXPECT_THROW(pw_from_json(Json::parse(R"({"breakpoints": ["0", "x"], "pieces": [[]]})")), Error);
}

TEST(Io, SpecForms) {
  EXPECT_EQ(parse_spec(kSquare).lattice_dim(), 2u);
  EXPECT_EQ(parse_spec(R"({"rays": [[1,0],[0,1],[-1,-1]], "coeffs": [1,1,1]})").lattice_dim(), 2u);
  const PairSpec s = parse_spec(R"({"segre": [{"vertices": [[0],[1]]}, {"vertices": [[0],[2]]}]})");
  EXPECT_TRUE(s.is_segre());
  EXPECT_EQ(s.lattice_dim(), 2u);
}

TEST(Io, SpecDiagnosticsNameTheField) {
  EXPECT_EQ(error_code(R"({"vertices": [[0, 0], [1, "a"]]})"),
            "parse_error: field $.vertices[1][1]: expected an integer");
  EXPECT_EQ(error_code(R"({"rays": [[1]], "coeffs": [1, 2]})"),
            "parse_error: field $.coeffs: length differs from rays");
  EXPECT_EQ(error_code(R"({"segre": [{"vertices": [[0],[1]]}, {"rays": [[1]]}]})"),
            "parse_error: field $.segre[1]: missing \"coeffs\"");
  EXPECT_NE(error_code(R"({"vertices": [[0]], "rays": [[1]]})").find("exactly one"), std::string::npos);
  EXPECT_EQ(error_code("{").rfind("parse_error: invalid JSON", 0), 0u);
  EXPECT_EQ(error_code(R"({"rays": [[1,0],[0,1]], "coeffs": [1,1]})").rfind("unbounded", 0), 0u);
}

TEST(Io, SampleCsv) {
  const PiecewisePoly f({0, 2}, {Poly{0, 1}});
  const std::string csv = sample_csv(f, 4);
  EXPECT_EQ(csv, "lambda,value\n0,0\n1/2,1/2\n1,1\n3/2,3/2\n2,2\n");
  EXPECT_THROW(sample_csv(f, 0), Error);
}

TEST(Io, PlotSvg) {
  const PiecewisePoly f({0, 1, 2}, {Poly{0, 1}, Poly{2, -1}});
  const std::string svg = plot_svg(f, 16, "demo");
  EXPECT_EQ(svg.rfind("<svg", 0), 0u);
  EXPECT_NE(svg.find("<polyline"), std::string::npos);
  EXPECT_NE(svg.find("<circle"), std::string::npos);
  EXPECT_NE(svg.find("</svg>"), std::string::npos);
}

TEST(Io, DensityCommand) {
  const CommandResult r = run_command("density", kP1O2, {});
  ASSERT_EQ(r.exit_code, 0) << r.body;
  const Json j = Json::parse(r.body);
  EXPECT_EQ(j["command"], "density");
  EXPECT_EQ(j["hkd"]["breakpoints"], Json::parse(R"(["0", "1", "3/2"])"));
  EXPECT_EQ(j["hkd"]["pieces"], Json::parse(R"([["0", "2"], ["6", "-4"]])"));
  EXPECT_EQ(j["e_hk"], "3/2");
}

TEST(Io, OtherCommands) {
  const Json tiling = Json::parse(run_command("tiling", kSquare, {}).body);
  EXPECT_EQ(tiling["is_tiler"], true);
  EXPECT_EQ(tiling["B"], "0");

  const Json limit = Json::parse(run_command("limit", kSquare, {}).body);
  EXPECT_EQ(limit["limit_A"], "4/3");
  EXPECT_EQ(limit["phi_integral"], "1/3");

  const Json ehk = Json::parse(run_command("ehk", kSquare, {}).body);
  EXPECT_EQ(ehk["e_hk"], "3");
  EXPECT_EQ(ehk["e0"], "8");

  CommandOptions o;
  o.k = 2;
  const Json phi = Json::parse(run_command("phi", kSquare, o).body);
  EXPECT_EQ(phi["phi"]["breakpoints"], Json::parse(R"(["0", "1/4"])"));

  o = {};
  o.q = 2;
  o.lambda = Rat(1);
  const Json oracle =
      Json::parse(run_command("oracle", R"({"vertices": [[0,0],[1,0],[0,1]]})", o).body);
  EXPECT_EQ(oracle["f_value"], "3/4");

  const Json report = Json::parse(run_command("report", kSquare, {}).body);
  EXPECT_EQ(report["h0"], "9");
  EXPECT_EQ(report["is_tiler"], true);

  const Json segre = Json::parse(
      run_command("segre", R"({"segre": [{"vertices": [[0],[1]]}, {"vertices": [[0],[1]]}]})", {}).body);
  EXPECT_EQ(segre["e_hk"], "4/3");
  EXPECT_EQ(segre["phi"]["pieces"][0], Json::parse(R"(["1", "0", "-1"])"));
}

TEST(Io, CsvAndSvgFormats) {
  CommandOptions o;
  o.format = "csv";
  o.samples = 10;
  const CommandResult csv = run_command("phi", kSquare, o);
  EXPECT_EQ(csv.extension, "csv");
  EXPECT_EQ(std::count(csv.body.begin(), csv.body.end(), '\n'), 12);
  o.format = "svg";
  EXPECT_EQ(run_command("density", kP1O2, o).extension, "svg");
  o.format = "csv";
  EXPECT_NE(run_command("tiling", kSquare, o).exit_code, 0);
}

TEST(Io, ErrorsBecomeJson) {
  const CommandResult r = run_command("density", R"({"vertices": [[0,0],[1,1]]})", {});
  EXPECT_NE(r.exit_code, 0);
  EXPECT_EQ(Json::parse(r.body)["error"]["code"], "degenerate");
  EXPECT_EQ(Json::parse(run_command("bogus", kSquare, {}).body)["error"]["code"], "invalid_argument");
  const Json e = Json::parse(error_json(ErrorCode::kEmpty, "nothing"));
  EXPECT_EQ(e["error"]["message"], "nothing");
}

TEST(Cli, DensityFromStdin) {
  const CliRun r = run_cli("density", kP1O2);
  ASSERT_EQ(r.status, 0) << r.out;
  EXPECT_EQ(Json::parse(r.out)["hkd"]["pieces"][1], Json::parse(R"(["6", "-4"])"));
}

TEST(Cli, ConvergenceCsv) {
  const CliRun r = run_cli("convergence --lambda 5/4 --q 8 --format csv", kP1O2);
  ASSERT_EQ(r.status, 0) << r.out;
  EXPECT_EQ(r.out.substr(0, r.out.find('\n')), "q,m,count,f_value,exact_value,gap");
  EXPECT_NE(r.out.find("8,10,6,3/4,1,1/4"), std::string::npos) << r.out;
}

TEST(Cli, OutputDirectory) {
  const auto dir = std::filesystem::temp_directory_path() / "hkd_cli_out";
  std::filesystem::remove_all(dir);
  const CliRun r = run_cli("tiling --output " + dir.string(), kSquare);
  ASSERT_EQ(r.status, 0) << r.out;
  const auto file = dir / "tiling.json";
  EXPECT_TRUE(std::filesystem::exists(file));
  std::ifstream in(file);
  EXPECT_EQ(Json::parse(in)["is_tiler"], true);
  std::filesystem::remove_all(dir);
}

TEST(Cli, ErrorsExitNonzero) {
  const CliRun bad = run_cli("density", "not json");
  EXPECT_NE(bad.status, 0);
  EXPECT_EQ(Json::parse(bad.out)["error"]["code"], "parse_error");
  const CliRun lam = run_cli("oracle --lambda x", kSquare);
  EXPECT_NE(lam.status, 0);
  const CliRun dim = run_cli("density", R"({"vertices": [[0,0,0],[1,0,0],[0,1,0],[0,0,1]]})");
  EXPECT_NE(dim.status, 0);
  EXPECT_EQ(Json::parse(dim.out)["error"]["code"], "unsupported_dimension");
}

}  // namespace
}  // namespace hk::io
