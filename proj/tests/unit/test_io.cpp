#include <cstdio>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <string>

#include "ddfpp/io.hpp"
#include "doctest.h"
#include "helpers.hpp"

using namespace ddfpp;
namespace fs = std::filesystem;

namespace {

fs::path scratch(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / "ddfpp_io_tests";
  fs::create_directories(dir);
  return dir / name;
}

std::vector<std::string> lines_of(const fs::path& p) {
  std::ifstream in(p);
  std::vector<std::string> out;
  for (std::string l; std::getline(in, l);) out.push_back(l);
  return out;
}

CellField random_field(const Grid2D& g, const IdealEos& eos, unsigned seed) {
  std::mt19937_64 rng(seed);
  CellField f(g);
  for (int j = 0; j < g.ny; ++j)
    for (int i = 0; i < g.nx; ++i) f.set_state(i, j, testutil::random_state(rng, eos));
  return f;
}

}  // namespace

TEST_CASE("CSV output layout and bit-exact round trip") {
  const IdealEos eos{5.0 / 3.0};
  const Grid2D g(2, 2, 0.0, 1.0, 0.0, 1.0, 2);
  const CellField f = random_field(g, eos, 3);
  const fs::path p = scratch("small.csv");
  write_csv(p.string(), f, eos);
  const auto lines = lines_of(p);
  REQUIRE(lines.size() == 5);
  CHECK(lines[0] == kCsvHeader);

  const Grid2D h(7, 5, -1.0, 2.0, 0.0, 0.5, 4);
  const CellField u = random_field(h, eos, 9);
  const fs::path q = scratch("round.csv");
  write_csv(q.string(), u, eos);
  const CellField back = read_csv(q.string(), h);
  bool same = true;
  for (int j = 0; j < h.ny; ++j)
    for (int i = 0; i < h.nx; ++i) same = same && back.state(i, j) == u.state(i, j);
  CHECK(same);
  CHECK_THROWS_AS(read_csv(q.string(), g), IoError);  // wrong grid
  CHECK_THROWS_AS(read_csv(scratch("missing.csv").string(), g), IoError);
}

TEST_CASE("VTK header") {
  const IdealEos eos{1.4};
  const Grid2D g(3, 4, 0.0, 3.0, 0.0, 2.0, 2);
  const fs::path p = scratch("field.vtk");
  write_vtk(p.string(), random_field(g, eos, 5), eos);
  const auto lines = lines_of(p);
  bool dims = false, cells = false;
  for (const auto& l : lines) {
    dims = dims || l == "DIMENSIONS 4 5 1";
    cells = cells || l == "CELL_DATA 12";
  }
  CHECK(lines.at(0).rfind("# vtk DataFile", 0) == 0);
  CHECK(dims);
  CHECK(cells);
}

TEST_CASE("unwritable paths raise IoError; run log format") {
  const IdealEos eos{1.4};
  const Grid2D g(2, 2, 0.0, 1.0, 0.0, 1.0, 2);
  const CellField f = random_field(g, eos, 1);
  const std::string bad = "/nonexistent-dir/x/y.csv";
  CHECK_THROWS_AS(write_csv(bad, f, eos), IoError);
  CHECK_THROWS_AS(write_vtk(bad, f, eos), IoError);
  CHECK_THROWS_AS(RunLog{bad}, IoError);

  const fs::path p = scratch("run_log.csv");
  {
    RunLog log(p.string());
    CHECK(log.is_open());
    StateVector tot;
    tot[kRho] = 1.5;
    log.append(0.1, 0.01, 1e-15, tot, 7);
  }
  const auto lines = lines_of(p);
  REQUIRE(lines.size() == 2);
  CHECK(lines[0] == kRunLogHeader);
  int commas = 0;
  for (char c : lines[1]) commas += c == ',';
  CHECK(commas == 7);
  CHECK(std::stod(lines[1].substr(0, lines[1].find(','))) == 0.1);
}
