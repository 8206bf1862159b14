#include "ddfpp/flux.hpp"

#include <algorithm>
#include <cmath>

#include "ddfpp/parallel.hpp"

namespace ddfpp {

FluxVector lax_friedrichs(const ConservedState& um, const ConservedState& up, Axis axis, double alpha,
                          const IdealEos& eos) {
  if (!(alpha > 0.0)) throw DomainError("lax_friedrichs: viscosity must be positive");
  const FluxVector fm = physical_flux(um, axis, eos);
  const FluxVector fp = physical_flux(up, axis, eos);
  FluxVector f;
  for (int c = 0; c < kNumVars; ++c) f[c] = 0.5 * (fm[c] + fp[c] - alpha * (up[c] - um[c]));
  return f;
}

ViscosityBounds global_viscosity(const InterfaceSet& t, const QuadratureRule& quad, const Grid2D& g,
                                 const IdealEos& eos, DiscriminantForm form, bool skip_inadmissible,
                                 const CellMask* quiet, ViscosityWorkspace* ws, const CellMask* changed) {
  using TraceInfo = ViscosityWorkspace::Slot;
  const int nx = g.nx, ny = g.ny, Q = quad.Q;
  const int per_cell = 4 * Q;
  thread_local ViscosityWorkspace scratch;
  ViscosityWorkspace& W = ws ? *ws : scratch;
  const bool reuse = ws && changed && W.valid && W.nx == nx && W.ny == ny && W.q == Q;
  if (W.nx != nx || W.ny != ny || W.q != Q) {
    W.slots.assign(static_cast<std::size_t>(nx + 2) * (ny + 2) * per_cell, TraceInfo{});
    W.cells.assign(static_cast<std::size_t>(nx) * ny, ViscosityBounds{});
    W.nx = nx;
    W.ny = ny;
    W.q = Q;
  }
  W.valid = false;
  auto slot = [&](int i, int j, int face, int m) -> TraceInfo& {
    return W.slots[(static_cast<std::size_t>(j + 1) * (nx + 2) + (i + 1)) * per_cell + face * Q + m];
  };
  auto dirty = [&](int i, int j) { return !reuse || (*changed)(i, j); };
  auto bad_trace = [&](int i, int j, const double* p) {
    return CellDomainError(i, j, "inadmissible interface value: speed_info: inadmissible state (rho=" +
                                     std::to_string(p[kRho]) + ")");
  };

  const double* prev = nullptr;
  const TraceInfo* prev_info = nullptr;
  auto fill = [&](int i, int j, int face) {
    if (!dirty(i, j)) {
      // traces unchanged since the previous call: only the stricter admissibility demand can differ
      if (!skip_inadmissible)
        for (int m = 0; m < Q; ++m)
          if (!slot(i, j, face, m).ok) throw bad_trace(i, j, t.at(i, j, face, m));
      return;
    }
    if (quiet && (*quiet)(i, j) && face != kWest && (i >= 0 && i < nx && j >= 0 && j < ny)) {
      // west node 0 was filled just before; every trace of a quiet cell is the same state
      const TraceInfo& first = slot(i, j, kWest, 0);
      for (int m = 0; m < Q; ++m) slot(i, j, face, m) = first;
      return;
    }
    for (int m = 0; m < Q; ++m) {
      const double* p = t.at(i, j, face, m);
      TraceInfo& ti = slot(i, j, face, m);
      // smooth and constant regions repeat the same trace many times
      if (prev && std::equal(p, p + kNumVars, prev)) {
        ti = *prev_info;
      } else {
        StateVector u;
        for (int c = 0; c < kNumVars; ++c) u[c] = p[c];
        ti.ok = try_speed_info(u, eos, form, ti.s, ti.w);
        if (!ti.ok && !skip_inadmissible) throw bad_trace(i, j, p);
      }
      prev = p;
      prev_info = &ti;
    }
  };
  for (int j = 0; j < ny; ++j) {
    for (int i = 0; i < nx; ++i)
      for (int f = 0; f < 4; ++f) fill(i, j, f);
    fill(-1, j, kEast);
    fill(nx, j, kWest);
  }
  for (int i = 0; i < nx; ++i) {
    fill(i, -1, kNorth);
    fill(i, ny, kSouth);
  }

  auto jump_term = [](const double* lo, const double* hi, int comp) {
    return std::abs(hi[comp] - lo[comp]) / (2.0 * std::sqrt(0.5 * (hi[kRho] + lo[kRho])));
  };
  auto pair = [](double& acc, const TraceInfo& a, const TraceInfo& b, int dir) {
    if (a.ok && b.ok) acc = std::max(acc, pair_viscosity(a.s, b.s, dir));
  };
  auto jump = [&](double& acc, const TraceInfo& a, const TraceInfo& b, const double* lo, const double* hi, int comp) {
    if (a.ok && b.ok) acc = std::max(acc, jump_term(lo, hi, comp));
  };
  // A cell whose traces, and the neighbour traces across its edges, all equal one state contributes
  // exactly pair(u, u) and no jump; detect that once instead of evaluating every pairing.
  auto uniform_cell = [&](int i, int j) {
    if (quiet)
      return (*quiet)(i, j) && (*quiet)(i - 1, j) && (*quiet)(i + 1, j) && (*quiet)(i, j - 1) && (*quiet)(i, j + 1) &&
             slot(i, j, kWest, 0).ok;
    const double* p0 = t.at(i, j, kWest, 0);
    auto same = [&](const double* p) { return std::equal(p, p + kNumVars, p0); };
    for (int f = 0; f < 4; ++f)
      for (int m = 0; m < Q; ++m)
        if (!same(t.at(i, j, f, m))) return false;
    for (int m = 0; m < Q; ++m)
      if (!same(t.at(i - 1, j, kEast, m)) || !same(t.at(i + 1, j, kWest, m)) || !same(t.at(i, j - 1, kNorth, m)) ||
          !same(t.at(i, j + 1, kSouth, m)))
        return false;
    return slot(i, j, kWest, 0).ok;
  };
  // pairings owned by cell (i, j): its own two sweeps, the traces across it, its west/south edges
  // (and the east/north domain edges for the last column/row)
  auto cell_bounds = [&](int i, int j) {
    ViscosityBounds r;
    if (uniform_cell(i, j)) {
      const TraceInfo& u = slot(i, j, kWest, 0);
      r.alpha_hat1 = pair_viscosity(u.s, u.s, 0);
      r.alpha_hat2 = pair_viscosity(u.s, u.s, 1);
      r.wave1 = u.w[0];
      r.wave2 = u.w[1];
      return r;
    }
    for (int m = 0; m < Q; ++m) {
      const TraceInfo &Wt = slot(i, j, kWest, m), &E = slot(i, j, kEast, m);
      const TraceInfo &S = slot(i, j, kSouth, m), &N = slot(i, j, kNorth, m);
      const TraceInfo &Wn = slot(i - 1, j, kEast, m), &En = slot(i + 1, j, kWest, m);
      const TraceInfo &Sn = slot(i, j - 1, kNorth, m), &Nn = slot(i, j + 1, kSouth, m);
      pair(r.alpha_hat1, E, Wt, 0);
      pair(r.alpha_hat1, En, Wn, 0);
      pair(r.alpha_hat1, Wn, Wt, 0);
      pair(r.alpha_hat2, N, S, 1);
      pair(r.alpha_hat2, Nn, Sn, 1);
      pair(r.alpha_hat2, Sn, S, 1);
      jump(r.beta1, Wn, Wt, t.at(i - 1, j, kEast, m), t.at(i, j, kWest, m), kBx);
      jump(r.beta2, Sn, S, t.at(i, j - 1, kNorth, m), t.at(i, j, kSouth, m), kBy);
      if (i == nx - 1) {
        pair(r.alpha_hat1, E, En, 0);
        jump(r.beta1, E, En, t.at(i, j, kEast, m), t.at(i + 1, j, kWest, m), kBx);
      }
      if (j == ny - 1) {
        pair(r.alpha_hat2, N, Nn, 1);
        jump(r.beta2, N, Nn, t.at(i, j, kNorth, m), t.at(i, j + 1, kSouth, m), kBy);
      }
      for (const TraceInfo* p : {&Wt, &E, &S, &N}) {
        if (!p->ok) continue;
        r.wave1 = std::max(r.wave1, p->w[0]);
        r.wave2 = std::max(r.wave2, p->w[1]);
      }
    }
    return r;
  };

  ViscosityBounds b;
  for (int j = 0; j < ny; ++j)
    for (int i = 0; i < nx; ++i) {
      ViscosityBounds& cb = W.cells[static_cast<std::size_t>(j) * nx + i];
      if (dirty(i, j) || dirty(i - 1, j) || dirty(i + 1, j) || dirty(i, j - 1) || dirty(i, j + 1)) cb = cell_bounds(i, j);
      b.alpha_hat1 = std::max(b.alpha_hat1, cb.alpha_hat1);
      b.alpha_hat2 = std::max(b.alpha_hat2, cb.alpha_hat2);
      b.beta1 = std::max(b.beta1, cb.beta1);
      b.beta2 = std::max(b.beta2, cb.beta2);
      b.wave1 = std::max(b.wave1, cb.wave1);
      b.wave2 = std::max(b.wave2, cb.wave2);
    }
  W.valid = true;
  return b;
}

namespace {

inline void load(const double* p, StateVector& u) {
  for (int c = 0; c < kNumVars; ++c) u[c] = p[c];
}

}  // namespace

EdgeFluxes edge_flux_quadrature(const InterfaceSet& t, const QuadratureRule& quad, const Grid2D& g, double alpha1,
                                double alpha2, const IdealEos& eos, int threads, const CellMask* quiet) {
  if (!(alpha1 > 0.0) || !(alpha2 > 0.0)) throw DomainError("lax_friedrichs: viscosity must be positive");
  EdgeFluxes ef;
  ef.nx = g.nx;
  ef.ny = g.ny;
  ef.f1.assign(static_cast<std::size_t>(g.nx + 1) * g.ny, StateVector{});
  ef.f2.assign(static_cast<std::size_t>(g.nx) * (g.ny + 1), StateVector{});
  parallel_for(0, g.ny + 1, threads, [&](int j0, int j1) {
    // Equal traces on both sides give F(u) exactly, so runs of identical nodes reuse the previous flux.
    StateVector last_u;
    FluxVector last_f;
    bool have_last[2] = {false, false};
    auto node_flux = [&](const double* a, const double* b, Axis axis, double alpha, int i, int j, StateVector& acc,
                         double w) {
      StateVector um, up;
      load(a, um);
      load(b, up);
      try {
        FluxVector f;
        if (um == up) {
          const int ax = static_cast<int>(axis);
          if (!(have_last[ax] && last_u == um)) {
            last_f = physical_flux(um, axis, eos);
            last_u = um;
            have_last[ax] = true;
            have_last[1 - ax] = false;
          }
          f = last_f;
        } else {
          f = lax_friedrichs(um, up, axis, alpha, eos);
        }
        for (int c = 0; c < kNumVars; ++c) acc[c] += w * f[c];
      } catch (const DomainError& e) {
        throw CellDomainError(i, j, std::string("edge flux: ") + e.what());
      }
    };
    // both sides quiet: every node carries the one state, so the flux is F(u) at each node
    auto quiet_edge = [&](int i0, int j0_, int i1, int j1_, Axis axis, int i, int j, StateVector& acc) {
      if (!quiet || !(*quiet)(i0, j0_) || !(*quiet)(i1, j1_)) return false;
      StateVector u;
      load(t.at(i1, j1_, kWest, 0), u);
      FluxVector f;
      try {
        f = physical_flux(u, axis, eos);
      } catch (const DomainError& e) {
        throw CellDomainError(i, j, std::string("edge flux: ") + e.what());
      }
      for (int m = 0; m < quad.Q; ++m)
        for (int c = 0; c < kNumVars; ++c) acc[c] += quad.weights[m] * f[c];
      return true;
    };
    for (int j = j0; j < j1; ++j) {
      if (j < g.ny)
        for (int i = 0; i <= g.nx; ++i) {
          StateVector& acc = ef.x(i, j);
          if (quiet_edge(i - 1, j, i, j, Axis::X, i, j, acc)) continue;
          for (int m = 0; m < quad.Q; ++m)
            node_flux(t.at(i - 1, j, kEast, m), t.at(i, j, kWest, m), Axis::X, alpha1, i, j, acc, quad.weights[m]);
        }
      for (int i = 0; i < g.nx; ++i) {
        StateVector& acc = ef.y(i, j);
        if (quiet_edge(i, j - 1, i, j, Axis::Y, i, j, acc)) continue;
        for (int m = 0; m < quad.Q; ++m)
          node_flux(t.at(i, j - 1, kNorth, m), t.at(i, j, kSouth, m), Axis::Y, alpha2, i, j, acc, quad.weights[m]);
      }
    }
  });
  return ef;
}

std::vector<StateVector> godunov_powell_source(const InterfaceSet& t, const QuadratureRule& quad, const Grid2D& g,
                                               int threads) {
  std::vector<StateVector> src(static_cast<std::size_t>(g.nx) * g.ny);
  const double idx = 1.0 / g.dx(), idy = 1.0 / g.dy();
  // contribution -(w / h) * (jump / 2) * S(mean) of one edge node
  auto add_edge = [](StateVector& acc, const double* lo, const double* hi, int comp, double scale) {
    const double jump = hi[comp] - lo[comp];
    if (jump == 0.0) return;
    StateVector mean;
    for (int c = 0; c < kNumVars; ++c) mean[c] = 0.5 * (lo[c] + hi[c]);
    const StateVector s = powell_source_vector(mean);
    const double f = -0.5 * scale * jump;
    for (int c = 0; c < kNumVars; ++c) acc[c] += f * s[c];
  };
  parallel_for(0, g.ny, threads, [&](int j0, int j1) {
    for (int j = j0; j < j1; ++j)
      for (int i = 0; i < g.nx; ++i) {
        StateVector acc;
        try {
          for (int m = 0; m < quad.Q; ++m) {
            const double w = quad.weights[m];
            add_edge(acc, t.at(i, j, kEast, m), t.at(i + 1, j, kWest, m), kBx, w * idx);
            add_edge(acc, t.at(i - 1, j, kEast, m), t.at(i, j, kWest, m), kBx, w * idx);
            add_edge(acc, t.at(i, j, kNorth, m), t.at(i, j + 1, kSouth, m), kBy, w * idy);
            add_edge(acc, t.at(i, j - 1, kNorth, m), t.at(i, j, kSouth, m), kBy, w * idy);
          }
        } catch (const DomainError& e) {
          throw CellDomainError(i, j, std::string("source: ") + e.what());
        }
        acc[kRho] = 0.0;
        src[static_cast<std::size_t>(j) * g.nx + i] = acc;
      }
  });
  return src;
}

}  // namespace ddfpp
