#include <doctest.h>

#include <sys/wait.h>
#include <unistd.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

#include <json.hpp>

#include "walshkit/cube_function.hpp"
#include "walshkit/fwht.hpp"
#include "walshkit/io.hpp"
#include "walshkit/rng.hpp"
#include "walshkit/spectral_ops.hpp"

#ifndef WALSHKIT_CLI_PATH
#error "WALSHKIT_CLI_PATH must point at the CLI binary"
#endif

namespace fs = std::filesystem;
using nlohmann::json;
using namespace walshkit;

namespace {

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() /
           ("walshkit-test-" + std::to_string(::getpid()) + "-" +
            std::to_string(counter()++));
    fs::create_directories(path);
  }
  ~TempDir() {
    std::error_code ec;
    fs::remove_all(path, ec);
  }
  static int& counter() {
    static int value = 0;
    return value;
  }
  std::string file(const std::string& name) const { return (path / name).string(); }
};

int run_cli(const std::string& args) {
  const std::string cmd =
      std::string(WALSHKIT_CLI_PATH) + " " + args + " >/dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  if (status == -1) return -1;
  return WEXITSTATUS(status);
}

json load(const std::string& path) { return io::read_json_file(path); }

std::string body_of(const std::string& path) {
  return io::canonical_dump(load(path).at("body"));
}

}  // namespace

TEST_CASE("construct chebyshev writes a degree-d unit-sup function") {
  TempDir dir;
  const std::string out = dir.file("cheb.json");
  REQUIRE(run_cli("construct chebyshev --n 8 --d 2 --out " + out) == 0);
  const CubeFunction f = io::function_from_json(load(out)).as_function();
  CHECK(f.n() == 8);
  CHECK(degree(fwht_forward(f)) == 2);
  CHECK(lp_norm(f, std::numeric_limits<double>::infinity()) == 1.0);
  CHECK(fs::exists(out + ".manifest.json"));
  const json manifest = load(out + ".manifest.json");
  CHECK(manifest.at("command") == "construct");
  CHECK(manifest.at("artifacts").size() == 1);
}

TEST_CASE("construct character matches the library pattern") {
  TempDir dir;
  const std::string out = dir.file("w.json");
  REQUIRE(run_cli("construct character --n 5 --mask 0b10101 --out " + out) == 0);
  const CubeFunction f = io::function_from_json(load(out)).as_function();
  const CubeFunction expected = CubeFunction::character(5, 0b10101);
  for (std::size_t i = 0; i < f.size(); ++i) {
    CHECK(f.value(i) == expected.value(i));
  }
}

TEST_CASE("construct kushilevitz emits 64 unimodular values") {
  TempDir dir;
  const std::string out = dir.file("k1.json");
  REQUIRE(run_cli("construct kushilevitz --k 1 --out " + out) == 0);
  const CubeFunction f = io::function_from_json(load(out)).as_function();
  CHECK(f.size() == 64);
  for (std::size_t i = 0; i < f.size(); ++i) {
    CHECK(std::abs(f.value(i).real()) == 1.0);
    CHECK(f.value(i).imag() == 0.0);
  }
}

TEST_CASE("construct rejects bad parameters with exit 3") {
  TempDir dir;
  CHECK(run_cli("construct chebyshev --n 4 --d 9 --out " + dir.file("x.json")) == 3);
  CHECK(run_cli("construct nonsense --out " + dir.file("y.json")) == 3);
  CHECK(run_cli("construct chebyshev --n 4 --d 2") == 3);  // missing --out
}

TEST_CASE("apply heat scales a character file") {
  TempDir dir;
  const std::string in = dir.file("w.json");
  const std::string out = dir.file("hw.json");
  REQUIRE(run_cli("construct character --n 6 --mask 0b111 --out " + in) == 0);
  REQUIRE(run_cli("apply heat --t 0.5 --in " + in + " --out " + out) == 0);
  const CubeFunction f = io::function_from_json(load(out)).as_function();
  const CubeFunction w = CubeFunction::character(6, 0b111);
  const double scale = std::exp(-0.5 * 3);
  for (std::size_t i = 0; i < f.size(); ++i) {
    CHECK(f.value(i).real() ==
          doctest::Approx(scale * w.value(i).real()).epsilon(1e-12));
  }
}

TEST_CASE("apply project --low 0 keeps only the mean") {
  TempDir dir;
  const std::string in = dir.file("cheb.json");
  const std::string out = dir.file("mean.json");
  REQUIRE(run_cli("construct chebyshev --n 6 --d 3 --out " + in) == 0);
  REQUIRE(run_cli("apply project --low 0 --in " + in + " --out " + out) == 0);
  const CubeFunction f = io::function_from_json(load(out)).as_function();
  for (std::size_t i = 1; i < f.size(); ++i) {
    CHECK(std::abs(f.value(i) - f.value(0)) <= 1e-12);
  }
}

TEST_CASE("projection at or above the degree is the identity") {
  TempDir dir;
  const std::string in = dir.file("cheb.json");
  const std::string out = dir.file("same.json");
  REQUIRE(run_cli("construct chebyshev --n 8 --d 2 --out " + in) == 0);
  REQUIRE(run_cli("apply project --low 2 --in " + in + " --out " + out) == 0);
  const CubeFunction a = io::function_from_json(load(in)).as_function();
  const CubeFunction b = io::function_from_json(load(out)).as_function();
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(std::abs(a.value(i) - b.value(i)) <= 1e-12);
  }
}

TEST_CASE("singular imaginary power exits 1") {
  TempDir dir;
  const std::string in = dir.file("const.json");
  // A subcube indicator has a nonzero mean, so (0)^(iu) is undefined.
  REQUIRE(run_cli("construct subcube --n 4 --fixed 0b11 --minus 0b0 --out " + in) == 0);
  CHECK(run_cli("apply power --z 0+1i --gamma 0 --in " + in + " --out " +
                dir.file("o.json")) == 1);
}

TEST_CASE("malformed input files exit 3") {
  TempDir dir;
  const std::string bad = dir.file("bad.json");
  std::ofstream(bad) << "{ not json";
  CHECK(run_cli("apply heat --t 0.1 --in " + bad + " --out " + dir.file("o.json")) ==
        3);
  const std::string wrong = dir.file("wrong.json");
  std::ofstream(wrong) << R"({"n": 3, "kind": "point", "re": [1, 2], "im": [0]})";
  CHECK(run_cli("apply heat --t 0.1 --in " + wrong + " --out " + dir.file("p.json")) ==
        3);
}

TEST_CASE("verify exit codes follow the verdict contract") {
  TempDir dir;
  CHECK(run_cli("verify bm-l2 --n 10 --d 3 --trials 100 --seed 7 --out " +
                dir.file("bm.json")) == 0);
  CHECK(run_cli("verify kushilevitz --k 1 --out " + dir.file("k.json")) == 0);
  const json body = load(dir.file("k.json")).at("body");
  CHECK(body.at("observed").get<double>() == 6.0);
  CHECK(run_cli("verify bogus-check") == 3);
  CHECK(run_cli("verify kushilevitz --k 3 --out " + dir.file("k3.json")) == 3);
}

TEST_CASE("verify reports are byte-identical across runs and thread counts") {
  TempDir dir;
  const std::string base =
      "verify bm-l2 --n 8 --d 3 --trials 50 --seed 123 --out ";
  REQUIRE(run_cli(base + dir.file("a.json") + " --threads 1") == 0);
  REQUIRE(run_cli(base + dir.file("b.json") + " --threads 1") == 0);
  REQUIRE(run_cli(base + dir.file("c.json") + " --threads 4") == 0);
  CHECK(body_of(dir.file("a.json")) == body_of(dir.file("b.json")));
  CHECK(body_of(dir.file("a.json")) == body_of(dir.file("c.json")));
}

TEST_CASE("report merges into deterministic CSV") {
  TempDir dir;
  REQUIRE(run_cli("verify bm-l2 --n 6 --d 2 --trials 20 --seed 1 --out " +
                  dir.file("r1.json")) == 0);
  REQUIRE(run_cli("verify bm-l2 --n 6 --d 3 --trials 20 --seed 2 --out " +
                  dir.file("r2.json")) == 0);
  const std::string csv = dir.file("table.csv");
  REQUIRE(run_cli("report '" + dir.file("r*.json") + "' --format csv --out " + csv) ==
          0);
  std::ifstream in(csv);
  std::string line;
  int rows = 0;
  while (std::getline(in, line)) ++rows;
  CHECK(rows == 3);  // header + two reports

  const std::string csv2 = dir.file("table2.csv");
  REQUIRE(run_cli("report '" + dir.file("r*.json") + "' --format csv --out " + csv2) ==
          0);
  std::ifstream a(csv), b(csv2);
  const std::string sa((std::istreambuf_iterator<char>(a)), {});
  const std::string sb((std::istreambuf_iterator<char>(b)), {});
  CHECK(sa == sb);
}

TEST_CASE("report groups mixed checks into markdown sections") {
  TempDir dir;
  REQUIRE(run_cli("verify bm-l2 --n 6 --d 2 --trials 20 --seed 1 --out " +
                  dir.file("m1.json")) == 0);
  REQUIRE(run_cli("verify kushilevitz --k 1 --out " + dir.file("m2.json")) == 0);
  const std::string md = dir.file("table.md");
  REQUIRE(run_cli("report '" + dir.file("m*.json") + "' --format md --out " + md) == 0);
  std::ifstream in(md);
  const std::string text((std::istreambuf_iterator<char>(in)), {});
  CHECK(text.find("## bm-l2") != std::string::npos);
  CHECK(text.find("## kushilevitz") != std::string::npos);
}

TEST_CASE("report propagates malformed inputs and empty globs as exit 3") {
  TempDir dir;
  const std::string bad = dir.file("r-bad.json");
  std::ofstream(bad) << "{ nope";
  CHECK(run_cli("report '" + dir.file("r-*.json") + "' --format csv") == 3);
  CHECK(run_cli("report '" + dir.file("missing-*.json") + "' --format csv") == 3);
}

TEST_CASE("search subcommand emits a report with a witness") {
  TempDir dir;
  const std::string out = dir.file("search.json");
  REQUIRE(run_cli("search --n 6 --d 2 --k 1 --p 4 --eps 4 --restarts 4 "
                  "--steps 60 --seed 9 --out " +
                  out) == 0);
  const json body = load(out).at("body");
  CHECK(body.at("check_id") == "bernstein");
  CHECK(body.at("verdict") == "report");
  CHECK(body.at("observed").get<double>() >= 1.0 - 1e-9);
  CHECK(!body.at("witness").is_null());
}

TEST_CASE("function JSON round-trips bit-exactly") {
  Rng rng(404, 0);
  std::vector<Complex> values(table_size(6));
  for (Complex& v : values) v = Complex(rng.gaussian(), rng.gaussian());
  const CubeFunction f(6, values);

  const json j = io::function_to_json(f);
  const CubeFunction back = io::function_from_json(j).as_function();
  for (std::size_t i = 0; i < f.size(); ++i) CHECK(back.value(i) == f.value(i));

  const Spectrum s = fwht_forward(f);
  const json js = io::spectrum_to_json(s);
  // Serialize-parse-serialize is a fixed point.
  CHECK(io::canonical_dump(js) ==
        io::canonical_dump(json::parse(io::canonical_dump(js))));
  const Spectrum sback = io::function_from_json(js).as_spectrum();
  for (std::size_t m = 0; m < s.size(); ++m) {
    CHECK(sback.coeff(static_cast<std::uint32_t>(m)) ==
          s.coeff(static_cast<std::uint32_t>(m)));
  }
}

TEST_CASE("function JSON rejects unknown kinds and bad shapes") {
  json j = io::function_to_json(CubeFunction::constant(3, 1.0));
  j["kind"] = "weird";
  CHECK_THROWS_AS(io::function_from_json(j), DomainError);
  json k = io::function_to_json(CubeFunction::constant(3, 1.0));
  k["re"] = std::vector<double>{1.0};
  CHECK_THROWS_AS(io::function_from_json(k), DomainError);
  CHECK_THROWS_AS(io::function_from_json(json::object()), DomainError);
}

TEST_CASE("multiplier descriptors serialize by kind") {
  using spectral::LevelMultiplier;
  const json power =
      io::multiplier_to_json(LevelMultiplier::power(Complex(0.0, 2.0), 0.5));
  CHECK(power.at("kind") == "power");
  CHECK(power.at("gamma") == 0.5);
  CHECK(power.at("z")[1] == 2.0);

  const json heat = io::multiplier_to_json(LevelMultiplier::heat(0.25));
  CHECK(heat.at("kind") == "heat");
  CHECK(heat.at("t") == 0.25);

  const json low = io::multiplier_to_json(LevelMultiplier::project_low(3));
  CHECK(low.at("kind") == "project-low");
  CHECK(low.at("d") == 3);
}

TEST_CASE("--json echoes the constructed artifact") {
  TempDir dir;
  const std::string out = dir.file("w.json");
  const std::string echoed = dir.file("echo.txt");
  const std::string cmd = std::string(WALSHKIT_CLI_PATH) +
                          " construct character --n 3 --mask 0b1 --out " + out +
                          " --json > " + echoed + " 2>/dev/null";
  REQUIRE(WEXITSTATUS(std::system(cmd.c_str())) == 0);
  std::ifstream in(echoed);
  json j;
  in >> j;
  CHECK(j.at("kind") == "point");
  CHECK(j.at("n") == 3);
}
