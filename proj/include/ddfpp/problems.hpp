#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "ddfpp/grid.hpp"
#include "ddfpp/state.hpp"

namespace ddfpp {

using PrimitiveFunction = std::function<PrimitiveState(double x, double y)>;
using ExactFunction = std::function<PrimitiveState(double x, double y, double t)>;

struct ProblemSpec {
  std::string name;
  std::string description;
  double x_lo = 0.0, x_hi = 1.0, y_lo = 0.0, y_hi = 1.0;
  int nx = 100, ny = 100;  // full-scale preset resolution
  double gamma = 5.0 / 3.0;
  double t_end = 1.0;
  std::vector<double> snapshots;
  std::function<BoundarySpec(const IdealEos&)> boundary;
  PrimitiveFunction init;
  std::optional<ExactFunction> exact;
};

const std::vector<ProblemSpec>& builtin_problems();
const ProblemSpec& find_problem(const std::string& name);  // ConfigError when unknown

Grid2D make_grid(const ProblemSpec& spec, int nx, int ny, int k);

// Gauss-Legendre nodes/weights on [-1/2, 1/2] (weights sum to 1).
struct GaussRule {
  std::vector<double> x, w;
};
GaussRule gauss_rule(int points);

// Tensor-product 5-point Gauss averages of the primitive data converted to conserved variables.
// Throws ConfigError when a sampled state is inadmissible.
CellField init_cell_averages(const ProblemSpec& spec, const Grid2D& grid, int points_per_axis = 5);
CellField cell_averages(const std::function<PrimitiveState(double, double)>& f, const Grid2D& grid,
                        const IdealEos& eos, int points_per_axis = 5);

// Named component of the smooth vortex, for tests.
PrimitiveState vortex_state(double x, double y);

}  // namespace ddfpp
