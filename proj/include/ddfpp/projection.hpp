#pragma once

#include <array>
#include <vector>

#include "ddfpp/grid.hpp"
#include "ddfpp/reconstruct.hpp"

namespace ddfpp {

// Per-cell discrete divergence of the inner traces, interior cells, row-major (j, i).
struct DivergenceField {
  int nx = 0, ny = 0;
  std::vector<double> values;
  double operator()(int i, int j) const { return values[static_cast<std::size_t>(j) * nx + i]; }
  double max_abs() const;
};

double cell_divergence(const InterfaceSet& t, int i, int j, const Grid2D& g, const QuadratureRule& quad);
DivergenceField discrete_divergence(const InterfaceSet& t, const Grid2D& g, const QuadratureRule& quad);

struct ProjectionStats {
  double max_a1 = 0.0, max_a2 = 0.0;  // largest corrections over interior cells
};

// Projects the inner traces of one cell onto the discretely divergence-free set.
void ddf_project_cell(InterfaceSet& t, int i, int j, const Grid2D& g, const QuadratureRule& quad,
                      double* a1_out = nullptr, double* a2_out = nullptr);

// Projects every stored cell (interior and the ghost ring). Cells flagged in `quiet` hold traces equal to
// their average, are already divergence-free and are skipped.
ProjectionStats ddf_project(InterfaceSet& t, const Grid2D& g, const QuadratureRule& quad, int threads = 1,
                            const CellMask* quiet = nullptr);

using Mat4 = std::array<std::array<double, 4>, 4>;

// Matrix acting on (B1 east, B1 west, B2 north, B2 south) of a single-node cell.
Mat4 projection_matrix(double dx, double dy);
bool projection_matrix_check(double dx = 1.0, double dy = 1.0, double tol = 1e-14);

}  // namespace ddfpp
