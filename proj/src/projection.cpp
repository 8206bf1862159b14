#include "ddfpp/projection.hpp"

#include <algorithm>
#include <cmath>

#include "ddfpp/parallel.hpp"

namespace ddfpp {

double DivergenceField::max_abs() const {
  double m = 0.0;
  for (double v : values) m = std::max(m, std::abs(v));
  return m;
}

double cell_divergence(const InterfaceSet& t, int i, int j, const Grid2D& g, const QuadratureRule& quad) {
  double sx = 0.0, sy = 0.0;
  for (int m = 0; m < t.q(); ++m) {
    const double w = quad.weights[m];
    sx += w * (t.at(i, j, kEast, m)[kBx] - t.at(i, j, kWest, m)[kBx]);
    sy += w * (t.at(i, j, kNorth, m)[kBy] - t.at(i, j, kSouth, m)[kBy]);
  }
  return sx / g.dx() + sy / g.dy();
}

DivergenceField discrete_divergence(const InterfaceSet& t, const Grid2D& g, const QuadratureRule& quad) {
  DivergenceField d;
  d.nx = g.nx;
  d.ny = g.ny;
  d.values.resize(static_cast<std::size_t>(g.nx) * g.ny);
  for (int j = 0; j < g.ny; ++j)
    for (int i = 0; i < g.nx; ++i) d.values[static_cast<std::size_t>(j) * g.nx + i] = cell_divergence(t, i, j, g, quad);
  return d;
}

void ddf_project_cell(InterfaceSet& t, int i, int j, const Grid2D& g, const QuadratureRule& quad, double* a1_out,
                      double* a2_out) {
  const double dx = g.dx(), dy = g.dy();
  const double rx = dx / dy, ry = dy / dx;
  const double d = cell_divergence(t, i, j, g, quad);
  const double a1 = dx * d / (2.0 * (1.0 + rx * rx));
  const double a2 = dy * d / (2.0 * (1.0 + ry * ry));
  for (int m = 0; m < t.q(); ++m) {
    t.at(i, j, kEast, m)[kBx] -= a1;
    t.at(i, j, kWest, m)[kBx] += a1;
    t.at(i, j, kNorth, m)[kBy] -= a2;
    t.at(i, j, kSouth, m)[kBy] += a2;
  }
  if (a1_out) *a1_out = a1;
  if (a2_out) *a2_out = a2;
}

ProjectionStats ddf_project(InterfaceSet& t, const Grid2D& g, const QuadratureRule& quad, int threads,
                            const CellMask* quiet) {
  const int rows = g.ny + 2;
  std::vector<ProjectionStats> per_row(rows);
  parallel_for(-1, g.ny + 1, threads, [&](int j0, int j1) {
    for (int j = j0; j < j1; ++j) {
      ProjectionStats& s = per_row[j + 1];
      for (int i = -1; i <= g.nx; ++i) {
        if (quiet && (*quiet)(i, j)) continue;
        double a1, a2;
        ddf_project_cell(t, i, j, g, quad, &a1, &a2);
        if (i >= 0 && i < g.nx && j >= 0 && j < g.ny) {
          s.max_a1 = std::max(s.max_a1, std::abs(a1));
          s.max_a2 = std::max(s.max_a2, std::abs(a2));
        }
      }
    }
  });
  ProjectionStats total;
  for (const auto& s : per_row) {
    total.max_a1 = std::max(total.max_a1, s.max_a1);
    total.max_a2 = std::max(total.max_a2, s.max_a2);
  }
  return total;
}

Mat4 projection_matrix(double dx, double dy) {
  const double r = dx / dy;
  const double eta = 1.0 / (2.0 * (1.0 + r * r));
  const double mu = r * eta;
  const double zeta = 1.0 / (2.0 * (1.0 + 1.0 / (r * r)));
  return Mat4{{{1.0 - eta, eta, -mu, mu}, {eta, 1.0 - eta, mu, -mu}, {-mu, mu, 1.0 - zeta, zeta}, {mu, -mu, zeta, 1.0 - zeta}}};
}

bool projection_matrix_check(double dx, double dy, double tol) {
  const Mat4 P = projection_matrix(dx, dy);
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) {
      double s = 0.0;
      for (int k = 0; k < 4; ++k) s += P[r][k] * P[k][c];
      if (!(std::abs(s - P[r][c]) <= tol)) return false;
    }
  return true;
}

}  // namespace ddfpp
