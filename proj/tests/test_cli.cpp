// End-to-end checks of the command-line binary: exit codes, output shape,
// and byte-for-byte determinism of repeated runs.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <sys/wait.h>

#include <nlohmann/json.hpp>

namespace fs = std::filesystem;

namespace {

const std::string kBin = SPHEREKERN_CLI_PATH;

struct RunResult {
  int exit_code = -1;
  std::string output;
};

RunResult run(const std::string& args) {
  static int counter = 0;
  const fs::path cap = fs::temp_directory_path() / ("spherekern_cli_out_" +
                                                    std::to_string(counter++) + ".txt");
  const std::string cmd = kBin + " " + args + " > " + cap.string() + " 2>&1";
  const int raw = std::system(cmd.c_str());
  RunResult r;
  if (raw != -1 && WIFEXITED(raw)) r.exit_code = WEXITSTATUS(raw);
  std::ifstream in(cap);
  std::stringstream ss;
  ss << in.rdbuf();
  r.output = ss.str();
  fs::remove(cap);
  return r;
}

fs::path write_temp(const std::string& name, const std::string& text) {
  const fs::path p = fs::temp_directory_path() / name;
  std::ofstream out(p);
  out << text;
  return p;
}

const char* kFullScheme =
    R"({"schema":"spherekern/1","manifold":"sphere","d":3,"k_max":10,"rule":"full","weights":"unit"})";
const char* kEvenScheme =
    R"({"schema":"spherekern/1","manifold":"sphere","d":3,"k_max":10,"rule":"even","weights":"unit"})";
const char* kPoints =
    "# d=3, repr=polar\n"
    "polar,0,0.4\n"
    "polar,1.2,1.8\n"
    "polar,2.9,0.9\n";
const char* kAntipodal =
    "# d=3, repr=polar\n"
    "polar,0.5,1.1\n"
    "polar,3.641592653589793,2.0415926535897933\n";

}  // namespace

TEST_CASE("usage errors exit with 2") {
  CHECK(run("definitely-not-a-command").exit_code == 2);
  CHECK(run("tau").exit_code == 2);  // missing required flags
  CHECK(run("gram --scheme /nonexistent.json --points /nonexistent.csv").exit_code == 2);
  CHECK(run("certify --bound no-such-bound").exit_code == 2);
  CHECK(run("eval --d 3 --index 0,1 --format yaml --point polar:0,1").exit_code == 2);
  CHECK(run("").exit_code == 2);  // a subcommand is required

  // Duplicate points make the Gram matrix ill-posed; that is an input error,
  // not a verdict.
  const fs::path scheme = write_temp("cli_dup_scheme.json", kFullScheme);
  const fs::path dup = write_temp("cli_dup_points.csv",
                                  "# d=3, repr=polar\n"
                                  "polar,0.5,1.1\n"
                                  "polar,0.5,1.1\n");
  const auto r = run("check-spd --scheme " + scheme.string() + " --points " + dup.string());
  CHECK(r.exit_code == 2);
  CHECK(r.output.find("coincide") != std::string::npos);
}

TEST_CASE("help is exit 0") {
  const auto r = run("--help");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("eval") != std::string::npos);
}

TEST_CASE("tau lists the expected family") {
  const auto r = run("tau --d 4 --k 1 --format csv");
  CHECK(r.exit_code == 0);
  CHECK(r.output == "-1,1,1\n0,0,1\n0,1,1\n1,1,1\n");
  const auto js = nlohmann::json::parse(run("tau --d 3 --k 2").output);
  CHECK(js.at("schema").get<std::string>() == "spherekern/1");
  CHECK(js.at("count").get<int>() == 5);
  CHECK(js.at("count_closed_form").get<int>() == 5);
  const auto zr = nlohmann::json::parse(run("tau --d 5 --k 3 --jzero 3").output);
  CHECK(zr.at("count").get<int>() == 1);
  CHECK(zr.at("indices")[0] == nlohmann::json::array({0, 0, 0, 3}));
}

TEST_CASE("eval produces harmonic and kernel values") {
  const auto r = run("eval --d 3 --index 0,1 --point polar:0,0 --format csv");
  CHECK(r.exit_code == 0);
  // Y_{(0,1)} at the north pole is sqrt(3): parse "point,re,im" row 2
  {
    std::stringstream ss(r.output);
    std::string header, cell;
    std::getline(ss, header);
    std::getline(ss, cell, ',');  // "polar:0"
    std::getline(ss, cell, ',');  // "0" (second half of the literal)
    std::getline(ss, cell, ',');  // re
    CHECK(std::abs(std::stod(cell) - 1.7320508075688772) <= 1e-13);
  }

  const auto sch = write_temp("cli_full_scheme.json", kFullScheme);
  const auto kr = run("eval --scheme " + sch.string() +
                      " --pair polar:0.3,1.0 polar:2.0,2.2");
  CHECK(kr.exit_code == 0);
  const auto js = nlohmann::json::parse(kr.output);
  CHECK(js.at("hermitian_residual").get<double>() <= 1e-10);
  CHECK(js.at("config").at("k_max").get<int>() == 10);
}

TEST_CASE("addition-test passes clean and fails when perturbed") {
  CHECK(run("addition-test --d 3 --k-max 8 --pairs 5 --seed 2").exit_code == 0);
  CHECK(run("addition-test --d 3 --k-max 8 --pairs 5 --seed 2 --perturb 1e-6").exit_code == 1);
  const auto js = nlohmann::json::parse(run("addition-test --d 3 --k-max 6 --pairs 3").output);
  CHECK(js.at("passed").get<bool>());
  CHECK(js.at("max_rel_error").get<double>() < 1e-10);
  CHECK(js.at("normalization_constants").contains("A_2"));
}

TEST_CASE("gram, check-spd and witness wire the verdicts to exit codes") {
  const auto sch = write_temp("cli_full_scheme.json", kFullScheme);
  const auto even = write_temp("cli_even_scheme.json", kEvenScheme);
  const auto pts = write_temp("cli_points.csv", kPoints);
  const auto anti = write_temp("cli_antipodal.csv", kAntipodal);

  const auto g = run("gram --scheme " + sch.string() + " --points " + pts.string());
  CHECK(g.exit_code == 0);
  const auto js = nlohmann::json::parse(g.output);
  CHECK(js.at("report").at("verdict").get<std::string>() == "positive-definite");
  CHECK(js.at("matrix").at("re").size() == 3);

  CHECK(run("check-spd --scheme " + sch.string() + " --points " + pts.string()).exit_code == 0);
  CHECK(run("check-spd --scheme " + even.string() + " --points " + anti.string()).exit_code == 1);

  CHECK(run("witness --scheme " + sch.string() + " --points " + pts.string()).exit_code == 0);
  const auto w = run("witness --scheme " + even.string() + " --points " + anti.string());
  CHECK(w.exit_code == 1);
  const auto wj = nlohmann::json::parse(w.output);
  CHECK(wj.at("witness_found").get<bool>());
  CHECK(wj.at("quadratic_form").get<double>() <= 1e-10);

  // mismatched dimensions are an input error
  const auto p4 = write_temp("cli_points4.csv", "# d=4, repr=polar\npolar,0,1,1\n");
  CHECK(run("gram --scheme " + sch.string() + " --points " + p4.string()).exit_code == 2);
}

TEST_CASE("certify sweeps pass and report zero violations") {
  const auto r = run("certify --bound lohofer --m-max 25");
  CHECK(r.exit_code == 0);
  const auto js = nlohmann::json::parse(r.output);
  CHECK(js.at("passed").get<bool>());
  CHECK(js.at("certificates")[0].at("violations").empty());

  CHECK(run("certify --bound ptilde --j 3 --l-max 12").exit_code == 0);
  CHECK(run("certify --bound haagerup --n-max 25").exit_code == 0);
}

TEST_CASE("rates writes parity csv files and a verdict") {
  // jzero scheme: the complement is almost everything, so the verdict is
  // negative (exit 1), but the artifacts must still be written.
  const auto sch = write_temp(
      "cli_jz.json",
      R"({"schema":"spherekern/1","manifold":"sphere","d":4,"k_max":24,"rule":"jzero","j":1,"weights":"unit"})");
  const fs::path prefix = fs::temp_directory_path() / "cli_rates";
  const auto r = run("rates --scheme " + sch.string() + " --j 1 --out " + prefix.string());
  CHECK(r.exit_code == 1);
  std::ifstream even(prefix.string() + "-even.csv");
  REQUIRE(even.good());
  std::string header;
  std::getline(even, header);
  CHECK(header == "degree,value");
  std::ifstream vj(prefix.string() + ".json");
  REQUIRE(vj.good());
  nlohmann::json js;
  vj >> js;
  CHECK_FALSE(js.at("positive").get<bool>());
  CHECK(js.at("count_rate").at("even_trend").contains("tends_to_zero"));
  fs::remove(prefix.string() + "-even.csv");
  fs::remove(prefix.string() + "-odd.csv");
  fs::remove(prefix.string() + ".json");
}

TEST_CASE("identical configuration produces byte-identical output") {
  const auto sch = write_temp("cli_full_scheme.json", kFullScheme);
  const auto pts = write_temp("cli_points.csv", kPoints);
  const auto a = run("gram --scheme " + sch.string() + " --points " + pts.string());
  const auto b = run("gram --scheme " + sch.string() + " --points " + pts.string());
  CHECK(a.output == b.output);
  const auto c = run("addition-test --d 3 --d 4 --k-max 8 --pairs 4 --seed 7");
  const auto d = run("addition-test --d 3 --d 4 --k-max 8 --pairs 4 --seed 7");
  CHECK(c.output == d.output);
  const auto e = run("certify --bound harmonic-product --k-max 8 --points-n 4");
  const auto f = run("certify --bound harmonic-product --k-max 8 --points-n 4");
  CHECK(e.output == f.output);
}
