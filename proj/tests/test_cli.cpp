// End-to-end tests that drive the installed CLI binary.

#include <sys/wait.h>

#include <array>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <string>
#include <vector>

#include "doctest.h"
#include "json.hpp"

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
};

RunResult run(const std::string& args) {
  const std::string cmd = std::string(MICZ_CLI_PATH) + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult r;
  std::array<char, 4096> buf;
  size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
  const int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

struct Csv {
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;
};

Csv parse_csv(const std::string& text) {
  Csv c;
  size_t pos = 0;
  while (pos < text.size()) {
    size_t eol = text.find('\n', pos);
    if (eol == std::string::npos) eol = text.size();
    const std::string line = text.substr(pos, eol - pos);
    pos = eol + 1;
    if (line.empty() || line[0] == '#') continue;
    std::vector<std::string> cells;
    size_t cpos = 0;
    while (true) {
      const size_t comma = line.find(',', cpos);
      cells.push_back(line.substr(cpos, comma == std::string::npos ? comma : comma - cpos));
      if (comma == std::string::npos) break;
      cpos = comma + 1;
    }
    if (c.columns.empty())
      c.columns = std::move(cells);
    else
      c.rows.push_back(std::move(cells));
  }
  return c;
}

size_t col_index(const Csv& c, const std::string& name) {
  for (size_t i = 0; i < c.columns.size(); ++i)
    if (c.columns[i] == name) return i;
  REQUIRE_MESSAGE(false, "missing column " << name);
  return 0;
}

}  // namespace

TEST_CASE("spectrum tables in the three geometries") {
  const auto flat = run("spectrum --n-max 2");
  REQUIRE(flat.exit_code == 0);
  auto t = parse_csv(flat.out);
  const size_t e = col_index(t, "energy");
  const size_t n = col_index(t, "n");
  REQUIRE(t.rows.size() == 5);  // 1 + 4 states
  CHECK(std::stod(t.rows[0][e]) == doctest::Approx(-0.5).epsilon(1e-15));
  CHECK(t.rows[0][n] == "1");
  for (size_t i = 1; i < 5; ++i)
    CHECK(std::stod(t.rows[i][e]) == doctest::Approx(-0.125).epsilon(1e-15));
  CHECK(col_index(t, "kappa") < t.columns.size());

  const auto sp = run("spectrum --geometry sphere --radius 1 --n-max 2");
  REQUIRE(sp.exit_code == 0);
  t = parse_csv(sp.out);
  const size_t es = col_index(t, "energy");
  CHECK(std::stod(t.rows[0][es]) == doctest::Approx(-0.5).epsilon(1e-15));
  CHECK(std::stod(t.rows.back()[es]) == doctest::Approx(1.375).epsilon(1e-15));
  CHECK(col_index(t, "sigma") < t.columns.size());
}

TEST_CASE("hyperboloid spectrum drops unbound states and reports both criteria") {
  const auto r = run("spectrum --geometry hyperboloid --radius 10 --n-max 10 --j 0 --m 0");
  REQUIRE(r.exit_code == 0);
  const auto t = parse_csv(r.out);
  REQUIRE(t.rows.size() == 3);  // n = 1, 2, 3 only
  const size_t n = col_index(t, "n");
  const size_t bb = col_index(t, "bound_bracket_criterion");
  CHECK(t.rows[0][n] == "1");
  CHECK(t.rows[2][n] == "3");
  CHECK(t.rows[0][bb] == "true");
  CHECK(t.rows[1][bb] == "true");
  CHECK(t.rows[2][bb] == "false");  // marginal level: admitted by normalizability only
  const size_t e = col_index(t, "energy");
  CHECK(std::stod(t.rows[0][e]) == doctest::Approx(-0.4).epsilon(1e-14));
}

TEST_CASE("flat ground-state wavefunction matches 2 e^{-r}") {
  const auto r = run("wavefunction --n 1 --j 0 --m 0 --grid-min 0.1 --grid-max 5 --grid-points 25");
  REQUIRE(r.exit_code == 0);
  const auto t = parse_csv(r.out);
  const size_t xi = col_index(t, "coordinate");
  const size_t ri = col_index(t, "R");
  REQUIRE(t.rows.size() == 25);
  for (const auto& row : t.rows) {
    const double x = std::stod(row[xi]);
    const double want = 2.0 * std::exp(-x);
    CHECK(std::stod(row[ri]) == doctest::Approx(want).epsilon(1e-12));
  }
  // Z at the default angles is Y00 = 1/sqrt(4 pi), real
  const size_t zr = col_index(t, "Z_re"), zim = col_index(t, "Z_im");
  CHECK(std::stod(t.rows[0][zr]) ==
        doctest::Approx(1.0 / std::sqrt(4.0 * std::acos(-1.0))).epsilon(1e-13));
  CHECK(std::stod(t.rows[0][zim]) == 0.0);
}

TEST_CASE("csv and json agree bitwise at 17 significant digits") {
  const std::string args =
      "wavefunction --geometry sphere --radius 2.5 --s 1/2 --lambda1 0.3 "
      "--n 5/2 --j 3/2 --m 1/2 --grid-points 12";
  const auto csv = run(args);
  const auto js = run(args + " --format json");
  REQUIRE(csv.exit_code == 0);
  REQUIRE(js.exit_code == 0);
  const auto t = parse_csv(csv.out);
  const auto doc = nlohmann::json::parse(js.out);
  REQUIRE(doc["columns"].size() == t.columns.size());
  REQUIRE(doc["rows"].size() == t.rows.size());
  for (size_t i = 0; i < t.rows.size(); ++i)
    for (size_t c = 0; c < t.columns.size(); ++c) {
      const double a = std::stod(t.rows[i][c]);
      const double b = std::stod(doc["rows"][i][c].get<std::string>());
      CHECK(a == b);  // bitwise: both printed with %.17g
    }
  CHECK(doc["config"]["sigma"].is_number());
  CHECK(doc["config"]["energy"].is_number());
}

TEST_CASE("repeated runs are byte-identical") {
  const std::string args = "spectrum --geometry sphere --radius 1.7 --s 1 --lambda2 0.4 --n-max 3";
  const auto a = run(args);
  const auto b = run(args);
  CHECK(a.exit_code == 0);
  CHECK(a.out == b.out);
}

TEST_CASE("error paths use the documented exit codes") {
  CHECK(run("spectrum --no-such-flag").exit_code == 2);
  CHECK(run("wavefunction --n 1 --j 3 --m 0").exit_code == 2);  // j out of range
  // unbound hyperboloid state
  CHECK(run("wavefunction --geometry hyperboloid --radius 0.5 --n 1 --j 0 --m 0").exit_code == 2);
  const auto bad = run("wavefunction --n 1 --j 3 --m 0");
  CHECK(bad.out.find("validation") != std::string::npos);
}

TEST_CASE("verify suites run clean") {
  const auto r = run("verify --suite reductions");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("suite=reductions") != std::string::npos);
  CHECK(r.out.find("failed=0") != std::string::npos);
  CHECK(r.out.find("FAIL") == std::string::npos);

  const auto ids = run("verify --suite identities");
  CHECK(ids.exit_code == 0);
  CHECK(ids.out.find("failed=0") != std::string::npos);

  CHECK(run("verify --suite no-such-suite").exit_code == 2);
}
