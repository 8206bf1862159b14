#include "ddfpp/time_integrator.hpp"

#include <cmath>
#include <string>

namespace ddfpp {

double compute_dt(double alpha1, double alpha2, const Grid2D& g, const QuadratureRule& quad, double nu,
                  CflConvention conv) {
  if (!(alpha1 > 0.0) || !(alpha2 > 0.0) || !std::isfinite(alpha1) || !std::isfinite(alpha2))
    throw DomainError("compute_dt: viscosity parameters must be positive and finite");
  if (!(nu > 0.0) || !(nu < 1.0)) throw ConfigError("compute_dt: CFL factor must lie in (0, 1)");
  const double rate = alpha1 / g.dx() + alpha2 / g.dy();
  if (conv == CflConvention::Bound) return nu * quad.w_hat1 / rate;
  double dt = nu / rate;
  while (!satisfies_pp_cfl(dt, alpha1, alpha2, g, quad)) dt *= 0.5;
  return dt;
}

bool satisfies_pp_cfl(double dt, double alpha1, double alpha2, const Grid2D& g, const QuadratureRule& quad) {
  return dt > 0.0 && dt * (alpha1 / g.dx() + alpha2 / g.dy()) < quad.w_hat1;
}

void assert_admissible(const CellField& u, const char* stage, double t) {
  for (int j = 0; j < u.ny(); ++j)
    for (int i = 0; i < u.nx(); ++i)
      if (!is_admissible(u.state(i, j)))
        throw SolverAbort(stage, i, j, t, "cell average left the admissible set");
}

namespace {

void accumulate(StepStats& s, const StageResult& r, double weight) {
  s.alpha1 = std::max(s.alpha1, r.alpha1);
  s.alpha2 = std::max(s.alpha2, r.alpha2);
  s.eps_div = std::max(s.eps_div, r.eps_div);
  s.limiter_hits += r.limiter.cells_limited;
  s.safeguarded += r.limiter.safeguarded;
  s.basis_fallbacks += r.basis_fallbacks;
  for (int c = 0; c < kNumVars; ++c) {
    s.flux_sum[c] += weight * r.flux_sum[c];
    s.flux_scale[c] += weight * r.flux_scale[c];
    s.source_sum[c] += weight * r.source_sum[c];
    s.boundary_flux[c] += weight * r.boundary_flux[c];
  }
}

// out = a * x + b * (y + dt * L), interior cells
void combine(CellField& out, double a, const CellField& x, double b, const CellField& y, double dt, const CellField& L) {
  for (int c = 0; c < kNumVars; ++c)
    for (int j = 0; j < out.ny(); ++j) {
      double* o = out.plane(c) + out.index(0, j);
      const double* px = x.plane(c) + x.index(0, j);
      const double* py = y.plane(c) + y.index(0, j);
      const double* pl = L.plane(c) + L.index(0, j);
      for (int i = 0; i < out.nx(); ++i) o[i] = a * px[i] + b * (py[i] + dt * pl[i]);
    }
}

}  // namespace

StepStats ssp_rk3_step(RunState& state, SemiDiscreteOperator& op, const TimeStepOptions& opt) {
  const Grid2D& g = op.grid();
  const QuadratureRule& quad = op.quadrature();
  const double t0 = state.t;
  const CellField& u0 = state.cellavg;
  CellField L1(g), L2(g), L3(g), u1(g), u2(g), u3(g);

  const StageResult r1 = op.evaluate(u0, t0, L1);
  double dt = compute_dt(r1.alpha1, r1.alpha2, g, quad, opt.nu, opt.convention);
  bool clamped = false;
  if (t0 + dt >= opt.t_end) {
    dt = opt.t_end - t0;
    clamped = true;
  }
  if (!(dt > 0.0)) throw SolverAbort("time-step", -1, -1, t0, "non-positive time step");

  StepStats stats;
  for (int attempt = 0;; ++attempt) {
    if (attempt > opt.max_restarts)
      throw SolverAbort("time-step", -1, -1, t0, "no time step satisfies the positivity CFL bound");
    stats = StepStats{};
    stats.restarts = attempt;
    accumulate(stats, r1, 1.0 / 6.0);

    combine(u1, 0.0, u0, 1.0, u0, dt, L1);
    if (opt.check_admissible) assert_admissible(u1, "rk-stage-1", t0 + dt);
    const StageResult r2 = op.evaluate(u1, t0 + dt, L2);
    if (!satisfies_pp_cfl(dt, r2.alpha1, r2.alpha2, g, quad)) {
      dt *= 0.5;
      clamped = false;
      continue;
    }
    accumulate(stats, r2, 1.0 / 6.0);

    combine(u2, 0.75, u0, 0.25, u1, dt, L2);
    if (opt.check_admissible) assert_admissible(u2, "rk-stage-2", t0 + 0.5 * dt);
    const StageResult r3 = op.evaluate(u2, t0 + 0.5 * dt, L3);
    if (!satisfies_pp_cfl(dt, r3.alpha1, r3.alpha2, g, quad)) {
      dt *= 0.5;
      clamped = false;
      continue;
    }
    accumulate(stats, r3, 2.0 / 3.0);

    combine(u3, 1.0 / 3.0, u0, 2.0 / 3.0, u2, dt, L3);
    if (opt.check_admissible) assert_admissible(u3, "rk-stage-3", t0 + dt);
    break;
  }

  state.cellavg = std::move(u3);
  state.t = clamped ? opt.t_end : t0 + dt;
  state.step += 1;
  state.ctx = StepContext::make(stats.alpha1, stats.alpha2, dt, g);
  stats.t = state.t;
  stats.dt = dt;
  state.stats.push_back(stats);
  return stats;
}

}  // namespace ddfpp
