#include "ddfpp/grid.hpp"

#include <cmath>
#include <string>

namespace ddfpp {

Grid2D::Grid2D(int nx_, int ny_, double xlo, double xhi, double ylo, double yhi, int ghost_)
    : nx(nx_), ny(ny_), x_lo(xlo), x_hi(xhi), y_lo(ylo), y_hi(yhi), ghost(ghost_) {
  if (nx <= 0 || ny <= 0) throw ConfigError("grid: cell counts must be positive");
  if (!(x_hi > x_lo) || !(y_hi > y_lo)) throw ConfigError("grid: empty domain");
  if (ghost < 0) throw ConfigError("grid: negative ghost width");
}

CellField::CellField(const Grid2D& g) : grid_(g) {
  sx_ = g.nx + 2 * g.ghost;
  plane_ = static_cast<std::size_t>(sx_) * static_cast<std::size_t>(g.ny + 2 * g.ghost);
  data_.assign(plane_ * kNumVars, 0.0);
}

void CellField::axpy_interior(double a, const CellField& x) {
  for (int c = 0; c < kNumVars; ++c)
    for (int j = 0; j < ny(); ++j) {
      double* dst = plane(c) + index(0, j);
      const double* src = x.plane(c) + x.index(0, j);
      for (int i = 0; i < nx(); ++i) dst[i] += a * src[i];
    }
}

QuadratureRule edge_quadrature(int k) {
  QuadratureRule q;
  q.k = k;
  if (k == 2) {
    q.Q = 1;
    q.L = 2;
    q.nodes = {0.0, 0.0, 0.0, 0.0};
    q.weights = {1.0, 0.0, 0.0, 0.0};
  } else if (k == 5) {
    q.Q = 4;
    q.L = 4;
    const double a = 0.5 / std::sqrt(5.0);
    q.nodes = {-0.5, -a, a, 0.5};
    q.weights = {1.0 / 12.0, 5.0 / 12.0, 5.0 / 12.0, 1.0 / 12.0};
  } else {
    throw ConfigError("unsupported reconstruction order k=" + std::to_string(k) + " (use 2 or 5)");
  }
  q.w_hat1 = 1.0 / (q.L * (q.L - 1));
  return q;
}

int required_ghost_width(int k) {
  if (k == 2) return 2;
  if (k == 5) return 4;
  throw ConfigError("unsupported reconstruction order k=" + std::to_string(k));
}

BoundarySpec BoundarySpec::all(BoundaryKind k) {
  BoundarySpec b;
  for (auto& s : b.sides) s.kind = k;
  return b;
}

void BoundarySpec::validate() const {
  auto periodic = [&](Side s) { return (*this)[s].kind == BoundaryKind::Periodic; };
  if (periodic(Side::West) != periodic(Side::East))
    throw ConfigError("boundary: periodic condition on x sides must be paired");
  if (periodic(Side::South) != periodic(Side::North))
    throw ConfigError("boundary: periodic condition on y sides must be paired");
  for (const auto& s : sides)
    if (s.kind == BoundaryKind::Dirichlet && !s.dirichlet) throw ConfigError("boundary: dirichlet side without data");
}

namespace {

// Fill ghost cell (gi, gj) of the given side from interior/source cell (si, sj).
void copy_cell(CellField& f, int gi, int gj, int si, int sj) {
  for (int c = 0; c < kNumVars; ++c) f(c, gi, gj) = f(c, si, sj);
}

void mirror_cell(CellField& f, int gi, int gj, int si, int sj, Axis normal) {
  copy_cell(f, gi, gj, si, sj);
  f(normal_momentum(normal), gi, gj) = -f(normal_momentum(normal), gi, gj);
  f(normal_field(normal), gi, gj) = -f(normal_field(normal), gi, gj);
}

}  // namespace

void fill_ghosts(CellField& f, const BoundarySpec& bc, double t) {
  bc.validate();
  const Grid2D& g = f.grid();
  const int nx = g.nx, ny = g.ny, ng = g.ghost;

  // x sides for interior rows first, then y sides over the full padded width (fills corners).
  for (int j = 0; j < ny; ++j) {
    for (int s = 1; s <= ng; ++s) {
      const int gw = -s, ge = nx - 1 + s;
      switch (bc[Side::West].kind) {
        case BoundaryKind::Periodic: copy_cell(f, gw, j, nx - s, j); break;
        case BoundaryKind::Outflow: copy_cell(f, gw, j, 0, j); break;
        case BoundaryKind::Reflecting: mirror_cell(f, gw, j, s - 1, j, Axis::X); break;
        case BoundaryKind::Dirichlet: {
          auto v = bc[Side::West].dirichlet(g.xc(gw), g.yc(j), t);
          if (v) f.set_state(gw, j, *v); else copy_cell(f, gw, j, 0, j);
          break;
        }
      }
      switch (bc[Side::East].kind) {
        case BoundaryKind::Periodic: copy_cell(f, ge, j, s - 1, j); break;
        case BoundaryKind::Outflow: copy_cell(f, ge, j, nx - 1, j); break;
        case BoundaryKind::Reflecting: mirror_cell(f, ge, j, nx - s, j, Axis::X); break;
        case BoundaryKind::Dirichlet: {
          auto v = bc[Side::East].dirichlet(g.xc(ge), g.yc(j), t);
          if (v) f.set_state(ge, j, *v); else copy_cell(f, ge, j, nx - 1, j);
          break;
        }
      }
    }
  }
  for (int i = -ng; i < nx + ng; ++i) {
    for (int s = 1; s <= ng; ++s) {
      const int gs = -s, gn = ny - 1 + s;
      switch (bc[Side::South].kind) {
        case BoundaryKind::Periodic: copy_cell(f, i, gs, i, ny - s); break;
        case BoundaryKind::Outflow: copy_cell(f, i, gs, i, 0); break;
        case BoundaryKind::Reflecting: mirror_cell(f, i, gs, i, s - 1, Axis::Y); break;
        case BoundaryKind::Dirichlet: {
          auto v = bc[Side::South].dirichlet(g.xc(i), g.yc(gs), t);
          if (v) f.set_state(i, gs, *v); else copy_cell(f, i, gs, i, 0);
          break;
        }
      }
      switch (bc[Side::North].kind) {
        case BoundaryKind::Periodic: copy_cell(f, i, gn, i, s - 1); break;
        case BoundaryKind::Outflow: copy_cell(f, i, gn, i, ny - 1); break;
        case BoundaryKind::Reflecting: mirror_cell(f, i, gn, i, ny - s, Axis::Y); break;
        case BoundaryKind::Dirichlet: {
          auto v = bc[Side::North].dirichlet(g.xc(i), g.yc(gn), t);
          if (v) f.set_state(i, gn, *v); else copy_cell(f, i, gn, i, ny - 1);
          break;
        }
      }
    }
  }
}

CellMask quiet_cells(const CellField& f, int radius) {
  const int nx = f.nx(), ny = f.ny();
  if (f.ghost() < radius + 1) throw ConfigError("quiet_cells: ghost width too small");
  auto equal = [&](int i, int j, int k, int l) {
    for (int c = 0; c < kNumVars; ++c)
      if (f(c, i, j) != f(c, k, l)) return false;
    return true;
  };
  // row[i, j]: cells i-radius..i+radius of row j all equal (i, j)
  const int rows = ny + 2 + 2 * radius;
  std::vector<unsigned char> row(static_cast<std::size_t>(nx + 2) * rows);
  for (int r = 0; r < rows; ++r) {
    const int j = r - 1 - radius;
    for (int i = -1; i <= nx; ++i) {
      bool same = true;
      for (int d = -radius; d <= radius && same; ++d) same = d == 0 || equal(i + d, j, i, j);
      row[static_cast<std::size_t>(r) * (nx + 2) + (i + 1)] = same;
    }
  }
  CellMask m;
  m.nx = nx;
  m.ny = ny;
  m.flag.assign(static_cast<std::size_t>(nx + 2) * (ny + 2), 0);
  for (int j = -1; j <= ny; ++j)
    for (int i = -1; i <= nx; ++i) {
      bool same = true;
      for (int d = -radius; d <= radius && same; ++d)
        same = row[static_cast<std::size_t>(j + d + 1 + radius) * (nx + 2) + (i + 1)] && (d == 0 || equal(i, j + d, i, j));
      m.flag[static_cast<std::size_t>(j + 1) * (nx + 2) + (i + 1)] = same;
    }
  return m;
}

}  // namespace ddfpp
