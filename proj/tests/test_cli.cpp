// Copyright The Akhiezer Transform Authors
// SPDX-License-Identifier: Apache-2.0

// Runs the command-line tool as a subprocess and checks exit codes and files.

#include <doctest.h>
#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>
#include <string>

#include "akhiezer/csv_io.hpp"

namespace fs = std::filesystem;
using namespace akhiezer;

namespace {

struct Workdir {
  fs::path dir;
  Workdir() {
    dir = fs::temp_directory_path() / ("akz_cli_" + std::to_string(::getpid()));
    fs::create_directories(dir);
  }
  ~Workdir() { fs::remove_all(dir); }
  std::string operator/(const std::string& name) const { return (dir / name).string(); }
};

int run(const std::string& args) {
  const std::string cmd = std::string(AKHIEZER_CLI_PATH) + " " + args + " >/dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  REQUIRE(WIFEXITED(status));
  return WEXITSTATUS(status);
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

double max_dev(const VectorSignal& a, const VectorSignal& b) {
  double m = 0.0;
  for (std::size_t k = 0; k < a.grid().n; ++k) {
    m = std::max({m, std::abs(a.x1[k] - b.x1[k]), std::abs(a.x2[k] - b.x2[k])});
  }
  return m;
}

}  // namespace

TEST_CASE("generate and apply") {
  const Workdir w;
  const std::string sig = w / "g.csv";
  REQUIRE(run("generate --grid=-30:30:1024 --signal gaussian --signal2 bump --out " + sig) == 0);
  const VectorSignal x = io::read_csv_file(sig);
  CHECK(x.grid().n == 1024);

  // Cross-path agreement for C with the deviation file.
  const std::string c_out = w / "c.csv";
  CHECK(run("apply --input " + sig + " --transform C --method both --out " + c_out) == 0);
  const std::string dev = slurp(c_out + ".deviation.csv");
  CHECK(dev.rfind("t,dev1,dev2\n", 0) == 0);
  const VectorSignal direct_c = [&] {
    REQUIRE(run("apply --input " + sig + " --transform C --method direct --out " +
                (w / "cd.csv")) == 0);
    return io::read_csv_file(w / "cd.csv");
  }();
  CHECK(max_dev(io::read_csv_file(c_out), direct_c) < 1e-6);

  // A tolerance nobody can meet is an invariant failure.
  CHECK(run("apply --input " + sig + " --transform S --method both --tolerance 1e-300 --out " +
            (w / "s.csv")) == 1);

  // phi then psi recovers the input.
  const std::string y = w / "y.csv", z = w / "z.csv";
  REQUIRE(run("apply --input " + sig + " --transform phi --out " + y) == 0);
  REQUIRE(run("apply --input " + y + " --transform psi --out " + z) == 0);
  CHECK(max_dev(io::read_csv_file(z), x) < 1e-6);

  // Identical invocations give identical bytes.
  const std::string y2 = w / "y2.csv";
  REQUIRE(run("apply --input " + sig + " --transform phi --out " + y2) == 0);
  CHECK(slurp(y) == slurp(y2));

  const std::string smooth = w / "smooth.csv";
  REQUIRE(run("generate --grid=-30:30:1024 --signal gaussian --out " + smooth) == 0);
  CHECK(run("apply --input " + smooth + " --transform hilbert --method direct --out " +
            (w / "h.csv")) == 0);
  CHECK(run("apply --input " + smooth + " --transform hilbert --method spectral --out " +
            (w / "h2.csv")) == 2);
  // The narrow bump is too steep for this spacing: the quadrature says so.
  CHECK(run("apply --input " + sig + " --transform hilbert --method direct --out " +
            (w / "h3.csv")) == 1);
  CHECK_FALSE(fs::exists(w / "h3.csv"));
}

TEST_CASE("input errors exit with 2 and write nothing") {
  const Workdir w;
  const std::string bad = w / "bad.csv", out = w / "out.csv";
  std::ofstream(bad) << "t,re1,im1,re2,im2\n0,1,0,0,0\n1,nan,0,0,0\n";
  CHECK(run("apply --input " + bad + " --transform C --out " + out) == 2);
  CHECK_FALSE(fs::exists(out));
  CHECK(run("apply --input " + (w / "missing.csv") + " --out " + out) == 2);
  CHECK(run("generate --omega -1 --out " + out) == 2);
  CHECK(run("generate --grid=1:0:10 --out " + out) == 2);
  CHECK(run("generate --omega 1 --sigma 1 --out " + out) == 2);
  CHECK(run("generate --signal triangle --out " + out) == 2);
  CHECK(run("nonsense") == 2);
  CHECK(run("bench --sizes 64,32") == 2);
  CHECK_FALSE(fs::exists(out));
}

TEST_CASE("environment supplies defaults") {
  const Workdir w;
  const std::string out = w / "env.csv";
  const std::string cmd = "AKHIEZER_GRID=-4:4:33 AKHIEZER_OUT=" + out + " " +
                          std::string(AKHIEZER_CLI_PATH) + " generate >/dev/null 2>&1";
  REQUIRE(std::system(cmd.c_str()) == 0);
  CHECK(io::read_csv_file(out).grid().n == 33);
}

TEST_CASE("verify and bench") {
  const Workdir w;
  const std::string report = w / "report.json";
  CHECK(run("verify --out " + report) == 0);
  const auto j = nlohmann::json::parse(slurp(report));
  CHECK(j["all_pass"] == true);
  const std::string again = w / "again.json";
  CHECK(run("verify --out " + again) == 0);
  CHECK(slurp(report) == slurp(again));
  CHECK(run("verify --inject-fault --out " + (w / "fault.json")) == 1);
  CHECK(nlohmann::json::parse(slurp(w / "fault.json"))["all_pass"] == false);

  const std::string csv = w / "bench.csv";
  CHECK(run("bench --sizes 2 --out " + csv) == 0);
  CHECK(slurp(csv).find("\n2,") != std::string::npos);
}
