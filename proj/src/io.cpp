#include "ddfpp/io.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <sstream>
#include <vector>

namespace ddfpp {

namespace {

std::ofstream open_out(const std::string& path) {
  std::ofstream out(path, std::ios::out | std::ios::trunc);
  if (!out) throw IoError("cannot open '" + path + "' for writing");
  return out;
}

std::string g17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void finish(std::ofstream& out, const std::string& path) {
  out.flush();
  if (!out) throw IoError("write to '" + path + "' failed");
}

double div_at(const DivergenceField* div, int i, int j) { return div ? (*div)(i, j) : 0.0; }

}  // namespace

void write_csv(const std::string& path, const CellField& u, const IdealEos& eos, const DivergenceField* div) {
  std::ofstream out = open_out(path);
  const Grid2D& g = u.grid();
  out << kCsvHeader << '\n';
  for (int j = 0; j < g.ny; ++j)
    for (int i = 0; i < g.nx; ++i) {
      const StateVector s = u.state(i, j);
      out << g17(g.xc(i)) << ',' << g17(g.yc(j));
      for (int c = 0; c < kNumVars; ++c) out << ',' << g17(s[c]);
      out << ',' << g17(pressure(s, eos)) << ',' << g17(div_at(div, i, j)) << '\n';
    }
  finish(out, path);
}

CellField read_csv(const std::string& path, const Grid2D& grid) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open '" + path + "' for reading");
  std::string line;
  if (!std::getline(in, line) || line != kCsvHeader) throw IoError("'" + path + "': unexpected CSV header");
  CellField u(grid);
  const double tol_x = 1e-9 * grid.dx(), tol_y = 1e-9 * grid.dy();
  for (int j = 0; j < grid.ny; ++j)
    for (int i = 0; i < grid.nx; ++i) {
      if (!std::getline(in, line)) throw IoError("'" + path + "': too few rows");
      std::vector<double> vals;
      std::stringstream ss(line);
      std::string tok;
      while (std::getline(ss, tok, ',')) {
        char* end = nullptr;
        const double v = std::strtod(tok.c_str(), &end);
        if (end == tok.c_str()) throw IoError("'" + path + "': bad number '" + tok + "'");
        vals.push_back(v);
      }
      if (vals.size() != 12) throw IoError("'" + path + "': expected 12 columns");
      if (std::abs(vals[0] - grid.xc(i)) > tol_x || std::abs(vals[1] - grid.yc(j)) > tol_y)
        throw IoError("'" + path + "': row does not match the grid cell centre");
      for (int c = 0; c < kNumVars; ++c) u(c, i, j) = vals[2 + c];
    }
  return u;
}

void write_vtk(const std::string& path, const CellField& u, const IdealEos& eos, const DivergenceField* div) {
  std::ofstream out = open_out(path);
  const Grid2D& g = u.grid();
  const long n = static_cast<long>(g.nx) * g.ny;
  out << "# vtk DataFile Version 3.0\n"
      << "ddfpp cell averages\n"
      << "ASCII\n"
      << "DATASET STRUCTURED_POINTS\n"
      << "DIMENSIONS " << g.nx + 1 << ' ' << g.ny + 1 << " 1\n"
      << "ORIGIN " << g17(g.x_lo) << ' ' << g17(g.y_lo) << " 0\n"
      << "SPACING " << g17(g.dx()) << ' ' << g17(g.dy()) << " 1\n"
      << "CELL_DATA " << n << '\n';
  auto scalar = [&](const char* name, auto f) {
    out << "SCALARS " << name << " double 1\nLOOKUP_TABLE default\n";
    for (int j = 0; j < g.ny; ++j)
      for (int i = 0; i < g.nx; ++i) out << g17(f(i, j)) << '\n';
  };
  auto vector = [&](const char* name, int c0) {
    out << "VECTORS " << name << " double\n";
    for (int j = 0; j < g.ny; ++j)
      for (int i = 0; i < g.nx; ++i)
        out << g17(u(c0, i, j)) << ' ' << g17(u(c0 + 1, i, j)) << ' ' << g17(u(c0 + 2, i, j)) << '\n';
  };
  scalar("rho", [&](int i, int j) { return u(kRho, i, j); });
  scalar("E", [&](int i, int j) { return u(kEnergy, i, j); });
  scalar("p", [&](int i, int j) { return pressure(u.state(i, j), eos); });
  scalar("eps_div_cell", [&](int i, int j) { return div_at(div, i, j); });
  vector("momentum", kMx);
  vector("B", kBx);
  finish(out, path);
}

RunLog::RunLog(const std::string& path) : out_(open_out(path)), path_(path) {
  out_ << kRunLogHeader << '\n';
  finish(out_, path_);
}

void RunLog::append(double t, double dt, double eps_div, const StateVector& totals, long limiter_hits) {
  out_ << g17(t) << ',' << g17(dt) << ',' << g17(eps_div) << ',' << g17(totals[kRho]) << ',' << g17(totals[kMx]) << ','
       << g17(totals[kMy]) << ',' << g17(totals[kEnergy]) << ',' << limiter_hits << '\n';
  finish(out_, path_);
}

}  // namespace ddfpp
