#include "ddfpp/reconstruct.hpp"

#include "ddfpp/eigensystem.hpp"
#include "ddfpp/parallel.hpp"
#include "ddfpp/weno.hpp"

namespace ddfpp {

InterfaceSet::InterfaceSet(int nx, int ny, int q) : nx_(nx), ny_(ny), q_(q) {
  data_.assign(static_cast<std::size_t>(nx + 2) * (ny + 2) * values_per_cell(), 0.0);
}

// ---------------------------------------------------------------- second order

std::vector<SlopePair> van_albada_slopes(const CellField& f, const Grid2D& g) {
  const double dx = g.dx(), dy = g.dy();
  const double ex = 3.0 * dx, ey = 3.0 * dy;
  auto limited = [](double l, double r, double el, double er) {
    return ((r * r + er) * l + (l * l + el) * r) / (l * l + r * r + el + er);
  };
  std::vector<SlopePair> s(static_cast<std::size_t>(g.nx + 2) * (g.ny + 2));
  for (int j = -1; j <= g.ny; ++j)
    for (int i = -1; i <= g.nx; ++i) {
      SlopePair& sp = s[static_cast<std::size_t>(j + 1) * (g.nx + 2) + (i + 1)];
      for (int c = 0; c < kNumVars; ++c) {
        const double u = f(c, i, j);
        sp.sx[c] = limited((u - f(c, i - 1, j)) / dx, (f(c, i + 1, j) - u) / dx, ex, ex);
        sp.sy[c] = limited((u - f(c, i, j - 1)) / dy, (f(c, i, j + 1) - u) / dy, ey, ey);
      }
    }
  return s;
}

InterfaceSet linear_interface_values(const CellField& f, const std::vector<SlopePair>& slopes, const Grid2D& g) {
  InterfaceSet t(g.nx, g.ny, 1);
  const double hx = 0.5 * g.dx(), hy = 0.5 * g.dy();
  for (int j = -1; j <= g.ny; ++j)
    for (int i = -1; i <= g.nx; ++i) {
      const SlopePair& sp = slopes[static_cast<std::size_t>(j + 1) * (g.nx + 2) + (i + 1)];
      for (int c = 0; c < kNumVars; ++c) {
        const double u = f(c, i, j);
        t.at(i, j, kWest, 0)[c] = u - sp.sx[c] * hx;
        t.at(i, j, kEast, 0)[c] = u + sp.sx[c] * hx;
        t.at(i, j, kSouth, 0)[c] = u - sp.sy[c] * hy;
        t.at(i, j, kNorth, 0)[c] = u + sp.sy[c] * hy;
      }
    }
  return t;
}

// ---------------------------------------------------------------- fifth order

namespace {

bool same_states(const double* a, int count) {
  for (int m = 1; m < count; ++m)
    for (int c = 0; c < kNumVars; ++c)
      if (a[m * kNumVars + c] != a[c]) return false;
  return true;
}

}  // namespace

void WenoReconstructor::x_sweep(const CellField& f, InterfaceSet& out, bool transposed) {
  const int nx = f.nx(), ny = f.ny();
  const int E = nx + 3, R = ny + 6;
  const std::size_t need = static_cast<std::size_t>(E) * R * kNumVars;
  if (edge_minus_.size() < need) {
    edge_minus_.resize(need);
    edge_plus_.resize(need);
  }
  const WenoNodeTable& right = weno_table_right_edge();
  const WenoNodeTable& left = weno_table_left_edge();
  const auto& gl = weno_tables_gauss_lobatto();
  const WenoNodeTable* right_p = &right;
  const WenoNodeTable* left_p = &left;
  const WenoNodeTable* gl_p[4] = {&gl[0], &gl[1], &gl[2], &gl[3]};
  const bool chr = chardecomp_;
  const int stride_c = static_cast<int>(f.plane(1) - f.plane(0));

  // Step 1: edge averages along every row.
  parallel_for(0, R, threads_, [&](int r0, int r1) {
    double u[6 * kNumVars], w[6 * kNumVars], vm[kNumVars], vp[kNumVars];
    for (int r = r0; r < r1; ++r) {
      const int j = r - 3;
      for (int e = 0; e < E; ++e) {
        const int i = e - 2;
        const double* base = f.plane(0) + f.index(i - 2, j);
        for (int m = 0; m < 6; ++m)
          for (int c = 0; c < kNumVars; ++c) u[m * kNumVars + c] = base[c * stride_c + m];
        double* om = edge_minus_.data() + (static_cast<std::size_t>(r) * E + e) * kNumVars;
        double* op = edge_plus_.data() + (static_cast<std::size_t>(r) * E + e) * kNumVars;
        if (same_states(u, 6)) {
          for (int c = 0; c < kNumVars; ++c) om[c] = op[c] = u[c];
          continue;
        }
        CharacteristicBasis basis;
        bool use_char = false;
        if (chr) {
          StateVector mean;
          for (int c = 0; c < kNumVars; ++c) mean[c] = 0.5 * (u[2 * kNumVars + c] + u[3 * kNumVars + c]);
          basis = characteristic_basis(mean, Axis::X, eos_);
          use_char = basis.valid;
          if (!use_char) fallbacks_.fetch_add(1, std::memory_order_relaxed);
        }
        const double* src = u;
        if (use_char) {
          apply(basis.Lt, u, w, 6);
          src = w;
        }
        weno5z_states<kNumVars>(src, &right_p, 1, vm);
        weno5z_states<kNumVars>(src + kNumVars, &left_p, 1, vp);
        if (use_char) {
          apply(basis.Rt, vm, om, 1);
          apply(basis.Rt, vp, op, 1);
        } else {
          for (int c = 0; c < kNumVars; ++c) {
            om[c] = vm[c];
            op[c] = vp[c];
          }
        }
      }
    }
  });

  // Step 2: point values at the edge nodes from edge averages along each edge.
  const int Q = out.q();
  parallel_for(-1, ny + 1, threads_, [&](int j0, int j1) {
    double w[5 * kNumVars], val[4][kNumVars];
    for (int j = j0; j < j1; ++j) {
      for (int e = 0; e < E; ++e) {
        const int i = e - 2;  // edge i+1/2
        const double* sm = edge_minus_.data() + (static_cast<std::size_t>(j + 1) * E + e) * kNumVars;  // rows j-2..j+2
        const double* sp = edge_plus_.data() + (static_cast<std::size_t>(j + 1) * E + e) * kNumVars;
        const std::size_t row_step = static_cast<std::size_t>(E) * kNumVars;
        double gm[5 * kNumVars], gp[5 * kNumVars];
        for (int m = 0; m < 5; ++m)
          for (int c = 0; c < kNumVars; ++c) {
            gm[m * kNumVars + c] = sm[m * row_step + c];
            gp[m * kNumVars + c] = sp[m * row_step + c];
          }
        CharacteristicBasis basis;
        bool basis_ready = false, use_char = false;

        for (int side = 0; side < 2; ++side) {
          // side 0: minus trace (East face of cell i); side 1: plus trace (West face of cell i+1)
          const int ci = side == 0 ? i : i + 1;
          if (ci < -1 || ci > nx) continue;
          const double* g = side == 0 ? gm : gp;
          const int face = side == 0 ? kEast : kWest;
          auto store = [&](int node, const double* v) {
            if (!transposed) {
              double* dst = out.at(ci, j, face, node);
              for (int c = 0; c < kNumVars; ++c) dst[c] = v[c];
            } else {
              double* dst = out.at(j, ci, face == kEast ? kNorth : kSouth, node);
              for (int c = 0; c < kNumVars; ++c) dst[c] = v[c];
              std::swap(dst[kMx], dst[kMy]);
              std::swap(dst[kBx], dst[kBy]);
            }
          };
          if (same_states(g, 5)) {
            for (int n = 0; n < Q; ++n) store(n, g + 2 * kNumVars);
            continue;
          }
          if (chr && !basis_ready) {
            StateVector mean;
            for (int c = 0; c < kNumVars; ++c) mean[c] = 0.5 * (f(c, i, j) + f(c, i + 1, j));
            basis = characteristic_basis(mean, Axis::Y, eos_);
            basis_ready = true;
            use_char = basis.valid;
            if (!use_char) fallbacks_.fetch_add(1, std::memory_order_relaxed);
          }
          const double* src = g;
          if (use_char) {
            apply(basis.Lt, g, w, 5);
            src = w;
          }
          weno5z_states<kNumVars>(src, gl_p, Q, &val[0][0]);
          if (use_char) {
            double phys[4][kNumVars];
            apply(basis.Rt, &val[0][0], &phys[0][0], Q);
            for (int n = 0; n < Q; ++n) store(n, phys[n]);
          } else {
            for (int n = 0; n < Q; ++n) store(n, val[n]);
          }
        }
      }
    }
  });
}

void WenoReconstructor::reconstruct(const CellField& f, InterfaceSet& out, ReconstructStats* stats) {
  const Grid2D& g = f.grid();
  if (g.ghost < required_ghost_width(5)) throw ConfigError("weno reconstruction needs ghost width 4");
  if (out.nx() != g.nx || out.ny() != g.ny || out.q() != 4) out = InterfaceSet(g.nx, g.ny, 4);
  fallbacks_.store(0);

  x_sweep(f, out, false);

  // y faces: sweep the transposed field in x and write back with components swapped.
  const Grid2D gt(g.ny, g.nx, g.y_lo, g.y_hi, g.x_lo, g.x_hi, g.ghost);
  if (transposed_.nx() != gt.nx || transposed_.ny() != gt.ny || transposed_.ghost() != gt.ghost)
    transposed_ = CellField(gt);
  for (int j = -g.ghost; j < g.ny + g.ghost; ++j)
    for (int i = -g.ghost; i < g.nx + g.ghost; ++i) {
      transposed_.set_state(j, i, swap_xy(f.state(i, j)));
    }
  x_sweep(transposed_, out, true);

  if (stats) stats->basis_fallbacks += fallbacks_.load();
}

InterfaceSet weno5z_interface_values(const CellField& field, const Grid2D& grid, const QuadratureRule& quad,
                                     bool chardecomp, const IdealEos& eos, ReconstructStats* stats) {
  if (quad.Q != 4) throw ConfigError("weno5z_interface_values requires the four-point Gauss-Lobatto rule");
  if (field.grid().nx != grid.nx || field.grid().ny != grid.ny) throw ConfigError("field/grid mismatch");
  InterfaceSet out(grid.nx, grid.ny, 4);
  WenoReconstructor rec(eos, chardecomp);
  rec.reconstruct(field, out, stats);
  return out;
}

}  // namespace ddfpp
