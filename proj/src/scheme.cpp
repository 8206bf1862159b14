#include "ddfpp/scheme.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace ddfpp {

DdfPpScheme::DdfPpScheme(const Grid2D& grid, BoundarySpec bc, IdealEos eos, SchemeOptions opt)
    : grid_(grid), bc_(std::move(bc)), eos_(eos), opt_(opt), quad_(edge_quadrature(opt.k)) {
  if (grid_.ghost < required_ghost_width(opt_.k))
    throw ConfigError("grid ghost width " + std::to_string(grid_.ghost) + " too small for k=" + std::to_string(opt_.k));
  bc_.validate();
  if (opt_.k == 5) weno_ = std::make_unique<WenoReconstructor>(eos_, opt_.chardecomp, opt_.threads);
  work_ = CellField(grid_);
}

void DdfPpScheme::reconstruct(const CellField& ug) {
  if (opt_.k == 2) {
    traces_ = linear_interface_values(ug, van_albada_slopes(ug, grid_), grid_);
  } else {
    if (traces_.q() != 4 || traces_.nx() != grid_.nx || traces_.ny() != grid_.ny)
      traces_ = InterfaceSet(grid_.nx, grid_.ny, 4);
    weno_->reconstruct(ug, traces_, nullptr);
  }
}

namespace {

double required(const ViscosityBounds& b, int dir, ViscosityMode mode) {
  const double bound = dir == 0 ? b.alpha1() : b.alpha2();
  if (mode == ViscosityMode::PositivityBound) return bound;
  return std::max(bound, dir == 0 ? b.wave1 : b.wave2);
}

}  // namespace

StageResult DdfPpScheme::evaluate(const CellField& u, double t, CellField& rhs) {
  StageResult res;
  const int nx = grid_.nx, ny = grid_.ny;

  // ghost filling on a private copy
  for (int c = 0; c < kNumVars; ++c) std::copy(u.plane(c), u.plane(c) + (u.plane(1) - u.plane(0)), work_.plane(c));
  fill_ghosts(work_, bc_, t);
  for (int j = -1; j <= ny; ++j)
    for (int i = -1; i <= nx; ++i)
      if (!is_admissible(work_.state(i, j)))
        throw SolverAbort("cell-average", i, j, t, "inadmissible cell average entering the residual");

  const CellMask* quiet = nullptr;
  if (opt_.quiet_shortcut) {
    quiet_ = quiet_cells(work_, opt_.k == 5 ? 3 : 1);
    quiet = &quiet_;
  }

  std::string stage = "reconstruct";
  try {
    if (weno_) {
      ReconstructStats rs;
      weno_->reconstruct(work_, traces_, &rs);
      res.basis_fallbacks = rs.basis_fallbacks;
    } else {
      reconstruct(work_);
    }

    if (opt_.ddf_projection) {
      stage = "ddf-projection";
      res.projection = ddf_project(traces_, grid_, quad_, opt_.threads, quiet);
    }

    double a1, a2;
    if (opt_.pp_limiter) {
      stage = "viscosity-provisional";
      projected_ = traces_;
      const ViscosityBounds prov = global_viscosity(traces_, quad_, grid_, eos_, opt_.discriminant, true, quiet, &visc_);
      a1 = required(prov, 0, opt_.viscosity);
      a2 = required(prov, 1, opt_.viscosity);
      // cell averages are admissible, so they always give a usable floor
      for (int j = 0; j < ny; ++j)
        for (int i = 0; i < nx; ++i) {
          const StateVector s = work_.state(i, j);
          const SpeedInfo si = speed_info(s, eos_, opt_.discriminant);
          a1 = std::max(a1, std::abs(si.v[0]) + si.c[0]);
          a2 = std::max(a2, std::abs(si.v[1]) + si.c[1]);
          if (opt_.viscosity == ViscosityMode::Envelope) {
            a1 = std::max(a1, std::abs(si.v[0]) + fast_magnetosonic_speed(s, Axis::X, eos_));
            a2 = std::max(a2, std::abs(si.v[1]) + fast_magnetosonic_speed(s, Axis::Y, eos_));
          }
        }
      for (int pass = 1;; ++pass) {
        stage = "pp-limiter";
        res.limiter_passes = pass;
        const StepContext ctx = StepContext::make(a1, a2, 0.0, grid_);
        const LimiterStats ls = apply_pp_limiter(traces_, work_, ctx, grid_, quad_, opt_.threads, quiet, &changed_);
        res.limiter = ls;
        stage = "viscosity";
        // pass 1 differs from the provisional traces only where the limiter acted
        res.bounds = global_viscosity(traces_, quad_, grid_, eos_, opt_.discriminant, false, quiet, &visc_,
                                      pass == 1 ? &changed_ : nullptr);
        const double r1 = required(res.bounds, 0, opt_.viscosity), r2 = required(res.bounds, 1, opt_.viscosity);
        if (r1 <= a1 && r2 <= a2) break;
        if (pass == 1) {
          // the limiter used the wrong lambda ratio: redo once from the projected traces
          a1 = std::max(a1, r1);
          a2 = std::max(a2, r2);
          traces_ = projected_;
          continue;
        }
        // common scaling keeps lambda1/lambda (hence the limited traces) unchanged
        const double scale = std::max(r1 / a1, r2 / a2);
        a1 *= scale;
        a2 *= scale;
        break;
      }
    } else {
      stage = "viscosity";
      res.bounds = global_viscosity(traces_, quad_, grid_, eos_, opt_.discriminant, false, quiet);
      a1 = required(res.bounds, 0, opt_.viscosity);
      a2 = required(res.bounds, 1, opt_.viscosity);
    }
    res.alpha1 = a1;
    res.alpha2 = a2;

    stage = "divergence";
    double eps = 0.0;
    for (int j = 0; j < ny; ++j)
      for (int i = 0; i < nx; ++i) eps = std::max(eps, std::abs(cell_divergence(traces_, i, j, grid_, quad_)));
    res.eps_div = eps;

    stage = "flux";
    const EdgeFluxes ef = edge_flux_quadrature(traces_, quad_, grid_, a1, a2, eos_, opt_.threads, quiet);
    stage = "source";
    const std::vector<StateVector> src = godunov_powell_source(traces_, quad_, grid_, opt_.threads);

    const double idx = 1.0 / grid_.dx(), idy = 1.0 / grid_.dy();
    for (int j = 0; j < ny; ++j)
      for (int i = 0; i < nx; ++i) {
        const StateVector& s = src[static_cast<std::size_t>(j) * nx + i];
        const StateVector &fw = ef.x(i, j), &fe = ef.x(i + 1, j), &fs = ef.y(i, j), &fn = ef.y(i, j + 1);
        for (int c = 0; c < kNumVars; ++c) {
          const double flux_part = -(fe[c] - fw[c]) * idx - (fn[c] - fs[c]) * idy;
          rhs(c, i, j) = flux_part + s[c];
          res.flux_sum[c] += flux_part;
          res.flux_scale[c] += (std::abs(fe[c]) + std::abs(fw[c])) * idx + (std::abs(fn[c]) + std::abs(fs[c])) * idy;
          res.source_sum[c] += s[c];
        }
      }
    for (int j = 0; j < ny; ++j)
      for (int c = 0; c < kNumVars; ++c) res.boundary_flux[c] += (ef.x(nx, j)[c] - ef.x(0, j)[c]) * grid_.dy();
    for (int i = 0; i < nx; ++i)
      for (int c = 0; c < kNumVars; ++c) res.boundary_flux[c] += (ef.y(i, ny)[c] - ef.y(i, 0)[c]) * grid_.dx();
  } catch (const CellDomainError& e) {
    throw SolverAbort(stage, e.i(), e.j(), t, e.what());
  } catch (const DomainError& e) {
    throw SolverAbort(stage, -1, -1, t, e.what());
  }
  for (int j = 0; j < ny; ++j)
    for (int i = 0; i < nx; ++i)
      for (int c = 0; c < kNumVars; ++c)
        if (!std::isfinite(rhs(c, i, j))) throw SolverAbort("residual", i, j, t, "non-finite residual");
  return res;
}

}  // namespace ddfpp
