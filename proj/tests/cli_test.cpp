// End-to-end tests for the gwilf command-line tool: formats, exit codes,
// cache behavior, and determinism across thread counts.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <unistd.h>

#include <json.hpp>

#include "gwilf/serialize.hpp"
#include "golden.hpp"

namespace fs = std::filesystem;

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
  std::string err;
};

std::string slurp(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

class TempDir {
 public:
  TempDir() {
    path_ = fs::temp_directory_path() /
            ("gwilf_cli_test_" + std::to_string(counter_++) + "_" +
             std::to_string(::getpid()));
    fs::create_directories(path_);
  }
  ~TempDir() {
    std::error_code ec;
    fs::remove_all(path_, ec);
  }
  const fs::path& path() const { return path_; }

 private:
  static inline int counter_ = 0;
  fs::path path_;
};

RunResult run_cli(const std::string& args, const std::string& env_prefix = "") {
  static const TempDir io_dir;
  const fs::path out_path = io_dir.path() / "stdout.txt";
  const fs::path err_path = io_dir.path() / "stderr.txt";
  const std::string command = env_prefix + " \"" + GWILF_CLI_PATH + "\" " + args +
                              " >" + out_path.string() + " 2>" + err_path.string();
  const int status = std::system(command.c_str());
  RunResult result;
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  result.out = slurp(out_path);
  result.err = slurp(err_path);
  return result;
}

}  // namespace

TEST_CASE("dist renders known polynomials") {
  auto r = run_cli("dist --k 3 --n 3 --mode exact --format text");
  CHECK(r.exit_code == 0);
  CHECK(r.out == "q+5\n");

  r = run_cli("dist --k 4 --n 5 --mode brute --format text");
  CHECK(r.exit_code == 0);
  CHECK(r.out == "q^5+4q^2+12q+103\n");

  r = run_cli("dist --k 3 --n 1");
  CHECK(r.exit_code == 0);
  CHECK(r.out == "1\n");

  r = run_cli("dist --pattern 123 --n 4");
  CHECK(r.out == std::string(golden::kF[3]) + "\n");
}

TEST_CASE("dist json round-trips") {
  const auto r = run_cli("dist --k 3 --n 4 --format json");
  REQUIRE(r.exit_code == 0);
  const nlohmann::json j = nlohmann::json::parse(r.out);
  CHECK(j["k"] == 3);
  CHECK(j["n"] == 4);
  CHECK(j["mode"] == "exact");
  CHECK(!j.contains("r"));
  const gwilf::QPoly parsed = gwilf::qpoly_from_json(j["poly"].dump());
  CHECK(parsed == golden::f(4));
  // Canonical rendering: serializing the parsed polynomial reproduces the
  // field byte for byte.
  CHECK(gwilf::qpoly_to_json(parsed) == j["poly"].dump());
}

TEST_CASE("counts formats") {
  auto r = run_cli("counts --k 4 --r 1 --n 1..8 --format bfile");
  CHECK(r.exit_code == 0);
  CHECK(r.out == "1 0\n2 0\n3 0\n4 1\n5 12\n6 102\n7 770\n8 5545\n");

  r = run_cli("counts --k 3 --r 0 --n 5");
  CHECK(r.exit_code == 0);
  CHECK(r.out == "42\n");

  r = run_cli("counts --k 3 --r 3 --n 3");
  CHECK(r.exit_code == 0);
  CHECK(r.out == "0\n");

  r = run_cli("counts --k 4 --r 1 --n 4..6 --format json");
  CHECK(r.exit_code == 0);
  const nlohmann::json j = nlohmann::json::parse(r.out);
  CHECK(j["k"] == 4);
  CHECK(j["mode"] == "truncated");
  CHECK(j["r"] == 1);
  REQUIRE(j["counts"].size() == 3);
  CHECK(j["counts"][0] == nlohmann::json({"4", "1"}));
  CHECK(j["counts"][2] == nlohmann::json({"6", "102"}));
  CHECK(j.dump() + "\n" == r.out);
}

TEST_CASE("verify proven formulas and skipped rows") {
  auto r = run_cli("verify --r 0..2 --n 4..12");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("MISMATCH") == std::string::npos);
  CHECK(r.out.find("all ") != std::string::npos);

  r = run_cli("verify --r 1 --n 2");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("skipped") != std::string::npos);

  r = run_cli("verify --r 0..7 --n 5..10 --format json");
  CHECK(r.exit_code == 0);
  const nlohmann::json j = nlohmann::json::parse(r.out);
  CHECK(j["all_match"] == true);
  CHECK(j["k"] == 3);
  // Rendering is canonical: parse-then-dump reproduces the bytes.
  CHECK(j.dump() + "\n" == r.out);
}

TEST_CASE("oracle agreement") {
  auto r = run_cli("oracle --k 3 --n 1..6");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("agree") != std::string::npos);

  r = run_cli("oracle --k 5 --n 1..5 --format json");
  CHECK(r.exit_code == 0);
  CHECK(nlohmann::json::parse(r.out)["all_match"] == true);
}

TEST_CASE("moments output") {
  auto r = run_cli("moments --k 3 --n 3 --order 2");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("mean = 1/6") != std::string::npos);
  CHECK(r.out.find("centered[2] = 5/36") != std::string::npos);

  r = run_cli("moments --k 3 --n 6 --order 1");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("mean = 10/3") != std::string::npos);

  r = run_cli("moments --k 3 --n 3..5 --order 4 --format json");
  CHECK(r.exit_code == 0);
  const nlohmann::json j = nlohmann::json::parse(r.out);
  REQUIRE(j["reports"].size() == 3);
  CHECK(j["reports"][0]["mean"] == "1/6");
  CHECK(j["reports"][0]["standardized"][0] == nlohmann::json({"2", "1"}));
  CHECK(j.dump() + "\n" == r.out);
}

TEST_CASE("resource limits exit with code 3") {
  CHECK(run_cli("dist --k 3 --n 30").exit_code == 3);
  CHECK(run_cli("moments --k 3 --n 25").exit_code == 3);
  CHECK(run_cli("counts --k 3 --r 2 --n 40 --max-states 10").exit_code == 3);
  CHECK(run_cli("dist --k 3 --n 12 --max-seconds 0.000000001").exit_code == 3);
  CHECK(run_cli("dist --k 3 --n 11 --mode brute").exit_code == 3);
}

TEST_CASE("usage errors exit with code 1") {
  CHECK(run_cli("counts --k 3 --n 5").exit_code == 1);       // missing --r
  CHECK(run_cli("dist --k 3").exit_code == 1);               // missing --n
  CHECK(run_cli("dist --pattern 132 --n 5").exit_code == 1); // not increasing
  CHECK(run_cli("dist --k 2 --n 5").exit_code == 1);
  CHECK(run_cli("dist --k 3 --n 5 --format bfile").exit_code == 1);
  CHECK(run_cli("dist --k 3 --pattern 1234 --n 5").exit_code == 1);
  CHECK(run_cli("verify --r 9 --n 5..6").exit_code == 1);
  CHECK(run_cli("verify --k 4 --n 5..6").exit_code == 1);
  CHECK(run_cli("nonsense").exit_code == 1);
  CHECK(run_cli("dist --k 3 --n 2..4").exit_code == 1);      // range not allowed
  CHECK(run_cli("counts --k 3 --r 1 --n 6..4").exit_code == 1);
  CHECK(run_cli("--help").exit_code == 0);
}

TEST_CASE("guard override computes larger n") {
  const auto r = run_cli("counts --k 3 --r 0 --n 17..17");
  CHECK(r.exit_code == 0);  // truncated mode has no feasibility guard
  const auto forced = run_cli("dist --k 4 --n 11 --force --max-seconds 300");
  CHECK(forced.exit_code == 0);
}

TEST_CASE("cache reuse is byte-identical and survives corruption") {
  TempDir cache_dir;
  const std::string env = "GWILF_CACHE_DIR=" + cache_dir.path().string();
  const std::string args = "counts --k 3 --r 1 --n 1..8 --cache --format bfile";

  const auto cold = run_cli(args, env);
  REQUIRE(cold.exit_code == 0);
  const fs::path cache_file = cache_dir.path() / "k3_truncated_r1.json";
  CHECK(fs::exists(cache_file));

  const auto warm = run_cli(args, env);
  CHECK(warm.exit_code == 0);
  CHECK(warm.out == cold.out);

  // Corrupt one entry: the run warns, recomputes, and still agrees.
  {
    nlohmann::json doc = nlohmann::json::parse(slurp(cache_file));
    doc["entries"]["5"] = nlohmann::json::array({"not-a-number"});
    std::ofstream(cache_file) << doc.dump();
  }
  const auto recovered = run_cli(args, env);
  CHECK(recovered.exit_code == 0);
  CHECK(recovered.out == cold.out);
  CHECK(recovered.err.find("corrupt") != std::string::npos);

  // A header from another format version is ignored outright.
  {
    nlohmann::json doc = nlohmann::json::parse(slurp(cache_file));
    doc["format_version"] = 999;
    std::ofstream(cache_file) << doc.dump();
  }
  const auto versioned = run_cli(args, env);
  CHECK(versioned.exit_code == 0);
  CHECK(versioned.out == cold.out);
  CHECK(versioned.err.find("warning") != std::string::npos);

  // Unreadable file: same story.
  std::ofstream(cache_file) << "{{{";
  const auto garbled = run_cli(args, env);
  CHECK(garbled.exit_code == 0);
  CHECK(garbled.out == cold.out);
  CHECK(garbled.err.find("warning") != std::string::npos);
}

TEST_CASE("cached exact distributions serve moments beyond the guard") {
  TempDir cache_dir;
  const std::string env = "GWILF_CACHE_DIR=" + cache_dir.path().string();
  // Fill the cache past the default guard, then read it back without --force.
  REQUIRE(run_cli("dist --k 3 --n 17 --force --cache --max-seconds 300", env).exit_code ==
          0);
  const auto r = run_cli("moments --k 3 --n 17 --order 2 --cache", env);
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("mean = 340/3") != std::string::npos);  // C(17,3)/6
  // Without the cache the same request trips the guard.
  CHECK(run_cli("moments --k 3 --n 17 --order 2", env).exit_code == 3);
}

TEST_CASE("thread count does not change output") {
  const auto serial = run_cli("dist --k 3 --n 8 --threads 1");
  const auto parallel = run_cli("dist --k 3 --n 8 --threads 4");
  CHECK(serial.exit_code == 0);
  CHECK(parallel.exit_code == 0);
  CHECK(serial.out == parallel.out);

  const auto counts1 = run_cli("counts --k 4 --r 1 --n 1..10 --format bfile --threads 1");
  const auto counts3 = run_cli("counts --k 4 --r 1 --n 1..10 --format bfile --threads 3");
  CHECK(counts1.out == counts3.out);
}

TEST_CASE("output redirection to a file") {
  TempDir dir;
  const fs::path target = dir.path() / "out.txt";
  const auto r = run_cli("dist --k 3 --n 5 --out " + target.string());
  CHECK(r.exit_code == 0);
  CHECK(r.out.empty());
  CHECK(slurp(target) == std::string(golden::kF[4]) + "\n");
}
