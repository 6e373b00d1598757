#include <doctest.h>

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include <sys/wait.h>

namespace fs = std::filesystem;

namespace {

std::string cli_path() {
  if (const char* env = std::getenv("ONECOB_CLI")) return env;
  return ONECOB_CLI_PATH;
}

const fs::path& work_dir() {
  static const fs::path dir = [] {
    const auto stamp = std::chrono::steady_clock::now().time_since_epoch().count();
    fs::path d = fs::temp_directory_path() /
                 ("onecob-cli-test-" + std::to_string(static_cast<long long>(stamp)));
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

fs::path write_file(const std::string& name, const std::string& text) {
  const fs::path path = work_dir() / name;
  std::ofstream out(path, std::ios::binary);
  out << text;
  REQUIRE(out.good());
  return path;
}

std::string slurp(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct RunResult {
  int exit_code = -1;
  std::string out;
  std::string err;
};

RunResult run_cli(const std::string& args) {
  const fs::path out_path = work_dir() / "stdout.txt";
  const fs::path err_path = work_dir() / "stderr.txt";
  const std::string cmd = "\"" + cli_path() + "\" " + args + " > \"" +
                          out_path.string() + "\" 2> \"" + err_path.string() + "\"";
  const int rc = std::system(cmd.c_str());
  RunResult r;
  if (rc != -1 && WIFEXITED(rc)) r.exit_code = WEXITSTATUS(rc);
  r.out = slurp(out_path);
  r.err = slurp(err_path);
  return r;
}

const char* kExampleDoc =
    R"({"source":"+--+","target":"+-",)"
    R"("arcs":[["in0","in1"],["in2","out1"],["in3","out0"]],"circles":0})";

}  // namespace

TEST_CASE("brauer: the 4-to-2 example prints its exact 4x16 CSV image") {
  const fs::path k = write_file("example.json", kExampleDoc);
  const RunResult r = run_cli("brauer \"" + k.string() + "\" --p 2");
  CHECK(r.exit_code == 0);
  CHECK(r.out ==
        "1,0,0,0,0,0,0,0,0,0,0,0,1,0,0,0\n"
        "0,0,1,0,0,0,0,0,0,0,0,0,0,0,1,0\n"
        "0,1,0,0,0,0,0,0,0,0,0,0,0,1,0,0\n"
        "0,0,0,1,0,0,0,0,0,0,0,0,0,0,0,1\n");
}

TEST_CASE("brauer: JSON output and the circle scalar") {
  const fs::path k = write_file("circle.json",
                                R"({"source":"","target":"","arcs":[],"circles":1})");
  const RunResult r = run_cli("brauer \"" + k.string() + "\" --p 3 --format json");
  CHECK(r.exit_code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j.at("rows") == 1);
  CHECK(j.at("cols") == 1);
  CHECK(j.at("entries").at(0).at(0) == "3");
}

TEST_CASE("brauer: degenerate color count and tiny cell caps exit with 2") {
  const fs::path k = write_file("example.json", kExampleDoc);
  const RunResult bad_p = run_cli("brauer \"" + k.string() + "\" --p 1");
  CHECK(bad_p.exit_code == 2);
  CHECK(bad_p.err.find("error:") != std::string::npos);
  const RunResult capped = run_cli("brauer \"" + k.string() + "\" --p 2 --max-cells 32");
  CHECK(capped.exit_code == 2);
  CHECK(capped.err.find("cap") != std::string::npos);
}

TEST_CASE("compose joins along the shared boundary, or exits 2 on mismatch") {
  const fs::path cup = write_file(
      "cup.json", R"({"source":"","target":"-+","arcs":[["out0","out1"]],"circles":0})");
  const fs::path cap_mp = write_file(
      "capmp.json", R"({"source":"-+","target":"","arcs":[["in0","in1"]],"circles":0})");
  const fs::path cap_pm = write_file(
      "cappm.json", R"({"source":"+-","target":"","arcs":[["in0","in1"]],"circles":0})");

  const RunResult ok = run_cli("compose \"" + cup.string() + "\" \"" + cap_mp.string() + "\"");
  CHECK(ok.exit_code == 0);
  const auto j = nlohmann::json::parse(ok.out);
  CHECK(j.at("source") == "");
  CHECK(j.at("target") == "");
  CHECK(j.at("circles") == 1);

  const RunResult bad = run_cli("compose \"" + cup.string() + "\" \"" + cap_pm.string() + "\"");
  CHECK(bad.exit_code == 2);
  CHECK(bad.err.find("error:") != std::string::npos);
}

TEST_CASE("tensor places the pieces side by side") {
  const fs::path cap = write_file(
      "cappm.json", R"({"source":"+-","target":"","arcs":[["in0","in1"]],"circles":0})");
  const fs::path ring = write_file(
      "ring.json", R"({"source":"","target":"","arcs":[],"circles":2})");
  const RunResult r = run_cli("tensor \"" + cap.string() + "\" \"" + ring.string() + "\"");
  CHECK(r.exit_code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j.at("source") == "+-");
  CHECK(j.at("target") == "");
  CHECK(j.at("circles") == 2);
}

TEST_CASE("decompose then recompose reproduces the cobordism through files") {
  const fs::path k = write_file("example.json", kExampleDoc);
  const RunResult dec = run_cli("decompose \"" + k.string() + "\"");
  CHECK(dec.exit_code == 0);
  const auto word = nlohmann::json::parse(dec.out);
  CHECK(word.at("layers").size() == 4);

  const fs::path w = write_file("word.json", dec.out);
  const RunResult rec = run_cli("recompose \"" + w.string() + "\"");
  CHECK(rec.exit_code == 0);
  CHECK(nlohmann::json::parse(rec.out) == nlohmann::json::parse(kExampleDoc));
}

TEST_CASE("tqft-eval prints exact images under the chosen theory") {
  const fs::path x = write_file("x.csv", "1,1\n0,1\n");
  const fs::path circle = write_file(
      "circle.json", R"({"source":"","target":"","arcs":[],"circles":1})");
  const fs::path cap = write_file(
      "cappm.json", R"({"source":"+-","target":"","arcs":[["in0","in1"]],"circles":0})");

  const RunResult rc = run_cli("tqft-eval \"" + circle.string() + "\" --x \"" + x.string() + "\"");
  CHECK(rc.exit_code == 0);
  CHECK(rc.out == "2\n");

  const RunResult rcap = run_cli("tqft-eval \"" + cap.string() + "\" --x \"" + x.string() + "\"");
  CHECK(rcap.exit_code == 0);
  CHECK(rcap.out == "1,1,0,1\n");

  // The same matrix provided as a JSON document.
  const fs::path xj = write_file(
      "x.json", R"({"rows":2,"cols":2,"entries":[["1","1"],["0","1"]]})");
  const RunResult rj = run_cli("tqft-eval \"" + cap.string() + "\" --x \"" + xj.string() + "\"");
  CHECK(rj.exit_code == 0);
  CHECK(rj.out == "1,1,0,1\n");
}

TEST_CASE("tqft-check validates the defining identities") {
  const fs::path good = write_file("x.csv", "1,1\n0,1\n");
  const RunResult ok = run_cli("tqft-check --x \"" + good.string() + "\"");
  CHECK(ok.exit_code == 0);
  const auto j = nlohmann::json::parse(ok.out);
  CHECK(j.at("checked") == 5);
  CHECK(j.at("failed") == 0);

  const fs::path singular = write_file("xs.csv", "1,1\n1,1\n");
  const RunResult bad = run_cli("tqft-check --x \"" + singular.string() + "\"");
  CHECK(bad.exit_code == 2);
  CHECK(bad.err.find("singular") != std::string::npos);

  const fs::path rect = write_file("xr.csv", "1,1,0\n0,1,2\n");
  CHECK(run_cli("tqft-check --x \"" + rect.string() + "\"").exit_code == 2);
}

TEST_CASE("verify subcommands sweep and exit 0 when everything passes") {
  const RunResult fun = run_cli("verify functoriality --p 2 --max-points 1");
  CHECK(fun.exit_code == 0);
  const auto jf = nlohmann::json::parse(fun.out);
  CHECK(jf.at("failed") == 0);
  CHECK(jf.at("checked").get<std::uint64_t>() > 0);

  const RunResult faith = run_cli("verify faithfulness --p 2 --max-points 2 --max-circles 1");
  CHECK(faith.exit_code == 0);
  CHECK(nlohmann::json::parse(faith.out).at("failed") == 0);

  const RunResult theta = run_cli("verify theta --p 2 --max-points 2 --trials 5 --seed 42");
  CHECK(theta.exit_code == 0);
  const auto jt = nlohmann::json::parse(theta.out);
  CHECK(jt.at("checked") == 26);  // 3 theories x 7 generators + 5 trials
  CHECK(jt.at("failed") == 0);
}

TEST_CASE("usage errors are reported through the argument parser") {
  CHECK(run_cli("").exit_code != 0);                     // a subcommand is required
  CHECK(run_cli("frobnicate").exit_code != 0);           // unknown subcommand
  const fs::path k = write_file("example.json", kExampleDoc);
  CHECK(run_cli("brauer \"" + k.string() + "\"").exit_code != 0);  // --p missing
  CHECK(run_cli("brauer \"" + k.string() + "\" --p 2 --format yaml").exit_code != 0);
  CHECK(run_cli("verify theta --p 2 --trials 5").exit_code != 0);  // --seed required
  const RunResult missing = run_cli("brauer \"" + (work_dir() / "no-such.json").string() + "\" --p 2");
  CHECK(missing.exit_code == 2);
  CHECK(missing.err.find("cannot open") != std::string::npos);
}
