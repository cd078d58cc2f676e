#include <catch2/catch_amalgamated.hpp>

#include <filesystem>
#include <sstream>

#include "cli/commands.hpp"
#include "phasefit/coefficients.hpp"
#include "phasefit/io.hpp"

using namespace phasefit;
namespace fs = std::filesystem;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "phasefit");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> v;
  std::istringstream in(text);
  for (std::string l; std::getline(in, l);) v.push_back(l);
  return v;
}

fs::path scratch_dir() {
  auto p = fs::temp_directory_path() / "phasefit_cli_test";
  fs::create_directories(p);
  return p;
}

}  // namespace

TEST_CASE("coeffs subcommand", "[cli]") {
  const auto r = invoke({"coeffs", "--method", "pf-d3", "--v", "0.7", "--format", "csv"});
  REQUIRE(r.code == 0);
  const auto ls = lines(r.out);
  REQUIRE(ls.size() == 14);
  CHECK(ls[0] == "j,b");
  const auto b = coefficients(MethodId::PFD3, 0.7).b;
  for (int j = 0; j <= kSteps; ++j) {
    CHECK(ls[j + 1] == std::to_string(j) + "," + format_number(b[j], 17));
    CHECK(std::stod(ls[j + 1].substr(ls[j + 1].find(',') + 1)) == b[j]);
  }
}

TEST_CASE("phaselag subcommand", "[cli]") {
  const auto r = invoke({"phaselag", "--method", "pf-d2", "--v", "1.0", "--s-from", "0", "--s-to", "2",
                         "--n", "400", "--format", "csv"});
  REQUIRE(r.code == 0);
  const auto ls = lines(r.out);
  REQUIRE(ls.size() == 401);
  CHECK(ls[0] == "s,pl");
  CHECK(ls[1] == "0,0");
  CHECK(ls.back().rfind("2,", 0) == 0);
}

TEST_CASE("stability-map subcommand", "[cli]") {
  const auto dir = scratch_dir();
  const auto pgm = (dir / "map.pgm").string();
  const auto r = invoke({"stability-map", "--method", "pf-d4", "--s-max", "1.5", "--v-max", "1.5", "--n", "30",
                         "--out", pgm});
  REQUIRE(r.code == 0);
  const auto text = read_file(pgm);
  CHECK(text.rfind("P2\n30 30\n255\n", 0) == 0);

  const auto csv = invoke({"stability-map", "--method", "classical", "--n", "5"});
  REQUIRE(csv.code == 0);
  CHECK(lines(csv.out).size() == 26);
  CHECK(lines(csv.out)[0] == "s,v,stable");
}

TEST_CASE("solve subcommand", "[cli]") {
  const auto dir = scratch_dir();
  const auto out = (dir / "result.csv").string();
  const auto traj = (dir / "traj.csv").string();
  const auto r = invoke({"solve", "--method", "pf-d3", "--energy", "341.495874", "--steps-per-unit", "256",
                         "--out", out, "--trajectory", traj});
  REQUIRE(r.code == 0);
  const auto ls = lines(read_file(out));
  REQUIRE(ls.size() == 2);
  CHECK(ls[0] == "method,E,h,delta,digits");
  CHECK(ls[1].rfind("pf-d3,341.49587400000001,0.00390625,", 0) == 0);
  const auto tl = lines(read_file(traj));
  CHECK(tl[0] == "x,y");
  CHECK(tl.size() == 3842);
  CHECK(tl[1] == "0,0");
}

TEST_CASE("accuracy curve", "[cli]") {
  const double E = 163.215341;
  const auto rows = cli::accuracy_curve(
      {kAllMethods.begin(), kAllMethods.end()}, E, {15.0 / 120, 15.0 / 240, 15.0 / 480});
  CHECK(rows.size() == 21);
  CHECK(rows[0].method == MethodId::Classical);
  CHECK(rows[2].steps == 480);
  CHECK(rows[3].method == MethodId::PFD0);

  CHECK(cli::accuracy_curve({MethodId::Classical}, E, {0.01}).size() == 1);

  const auto ladder = cli::accuracy_curve({MethodId::Classical}, E, {15.0 / 1200, 15.0 / 1920, 15.0 / 2400});
  CHECK(ladder[1].digits > ladder[0].digits);
  CHECK(ladder[2].digits > ladder[1].digits);

  CHECK_THROWS_AS(cli::accuracy_curve({MethodId::Classical}, E, {}), std::invalid_argument);
  CHECK_THROWS_AS(cli::accuracy_curve({MethodId::Classical}, E, {0.01, 0.02}), std::invalid_argument);

  const auto r = invoke({"accuracy-curve", "--methods", "classical,pf-d5", "--energy", "341.495874", "--steps",
                         "1200,2400"});
  REQUIRE(r.code == 0);
  const auto ls = lines(r.out);
  REQUIRE(ls.size() == 5);
  CHECK(ls[0] == "method,E,h,steps,delta,digits");
  CHECK(ls[1].rfind("classical,341.49587400000001,0.012500000000000001,1200,", 0) == 0);
  CHECK(ls[4].rfind("pf-d5,", 0) == 0);
}

TEST_CASE("errors and exit codes", "[cli]") {
  const auto dir = scratch_dir();
  const auto target = dir / "never.csv";
  fs::remove(target);

  const auto bad = invoke({"coeffs", "--method", "pf-d9", "--out", target.string()});
  CHECK(bad.code == cli::kUsage);
  CHECK_FALSE(fs::exists(target));

  const auto low = invoke({"solve", "--method", "classical", "--energy", "30", "--steps-per-unit", "64", "--out",
                           target.string()});
  CHECK(low.code == cli::kFailure);
  CHECK(low.err.rfind("error: ", 0) == 0);
  CHECK(lines(low.err).size() == 1);
  CHECK_FALSE(fs::exists(target));

  CHECK(invoke({}).code == cli::kUsage);
  CHECK(invoke({"--help"}).code == 0);
  for (const auto& p : fs::directory_iterator(dir)) {
    CHECK(p.path().filename().string().find(".tmp.") == std::string::npos);
  }
}
