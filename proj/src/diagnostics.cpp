#include "ddfpp/diagnostics.hpp"

#include <cmath>

namespace ddfpp {

double divergence_error(const InterfaceSet& traces, const Grid2D& grid, const QuadratureRule& quad) {
  return discrete_divergence(traces, grid, quad).max_abs();
}

StateVector conserved_totals(const CellField& u) {
  StateVector tot;
  const double area = u.grid().cell_area();
  for (int c = 0; c < kNumVars; ++c) {
    double s = 0.0;
    for (int j = 0; j < u.ny(); ++j)
      for (int i = 0; i < u.nx(); ++i) s += u(c, i, j);
    tot[c] = s * area;
  }
  return tot;
}

namespace {

std::array<double, kNumVars> as_array(const PrimitiveState& w) {
  return {w.rho, w.v[0], w.v[1], w.v[2], w.B[0], w.B[1], w.B[2], w.p};
}

}  // namespace

PrimitiveErrors l1_errors(const CellField& numeric, const CellField& exact_averages, const IdealEos& eos,
                          NormKind norm) {
  const Grid2D& g = numeric.grid();
  if (exact_averages.nx() != g.nx || exact_averages.ny() != g.ny)
    throw ConfigError("l1_errors: field shapes differ");
  PrimitiveErrors err{};
  for (int j = 0; j < g.ny; ++j)
    for (int i = 0; i < g.nx; ++i) {
      const auto a = as_array(to_primitive(numeric.state(i, j), eos));
      const auto b = as_array(to_primitive(exact_averages.state(i, j), eos));
      for (int c = 0; c < kNumVars; ++c) err[c] += std::abs(a[c] - b[c]);
    }
  const double w = norm == NormKind::Integral ? g.cell_area() : 1.0 / (static_cast<double>(g.nx) * g.ny);
  for (double& e : err) e *= w;
  return err;
}

PrimitiveErrors l1_errors(const CellField& numeric, const ExactFunction& exact, double t, const IdealEos& eos,
                          NormKind norm) {
  const CellField ref = cell_averages([&](double x, double y) { return exact(x, y, t); }, numeric.grid(), eos, 5);
  return l1_errors(numeric, ref, eos, norm);
}

std::vector<ConvergenceRow> l1_error_and_order(const std::vector<int>& resolutions,
                                               const std::vector<PrimitiveErrors>& errors) {
  if (resolutions.size() != errors.size()) throw ConfigError("l1_error_and_order: size mismatch");
  if (resolutions.size() < 2) throw ConfigError("convergence study needs at least two resolutions");
  std::vector<ConvergenceRow> rows;
  for (std::size_t r = 0; r < resolutions.size(); ++r) {
    ConvergenceRow row;
    row.n = resolutions[r];
    row.errors = errors[r];
    if (r > 0) {
      if (resolutions[r] != 2 * resolutions[r - 1])
        throw ConfigError("convergence study resolutions must double: " + std::to_string(resolutions[r - 1]) +
                          " -> " + std::to_string(resolutions[r]));
      PrimitiveErrors ord{};
      for (int c = 0; c < kNumVars; ++c) {
        const double a = errors[r - 1][c], b = errors[r][c];
        ord[c] = (a > 0.0 && b > 0.0) ? std::log2(a / b) : std::nan("");
      }
      row.orders = ord;
    }
    rows.push_back(row);
  }
  return rows;
}

}  // namespace ddfpp
