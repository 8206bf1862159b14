#include "ddfpp/limiter.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "ddfpp/parallel.hpp"

namespace ddfpp {

StepContext StepContext::make(double alpha1, double alpha2, double dt, const Grid2D& g) {
  StepContext c;
  c.dt = dt;
  c.alpha1 = alpha1;
  c.alpha2 = alpha2;
  c.lambda1 = alpha1 * dt / g.dx();
  c.lambda2 = alpha2 * dt / g.dy();
  c.lambda = c.lambda1 + c.lambda2;
  return c;
}

double StepContext::x_weight(const Grid2D& g) const {
  const double a = alpha1 / g.dx(), b = alpha2 / g.dy();
  if (!(a + b > 0.0)) return 0.5;
  return a / (a + b);
}

namespace {

inline StateVector face_mean(const double* block, int face, const QuadratureRule& quad) {
  StateVector s;
  for (int m = 0; m < quad.Q; ++m) {
    const double* p = block + (face * quad.Q + m) * kNumVars;
    for (int c = 0; c < kNumVars; ++c) s[c] += quad.weights[m] * p[c];
  }
  return s;
}

inline StateVector load(const double* p) {
  StateVector u;
  for (int c = 0; c < kNumVars; ++c) u[c] = p[c];
  return u;
}

inline double pi_component(const double* block, int c, const StateVector& ubar, double wx, const QuadratureRule& quad) {
  double e[4] = {0, 0, 0, 0};
  for (int f = 0; f < 4; ++f)
    for (int m = 0; m < quad.Q; ++m) e[f] += quad.weights[m] * block[(f * quad.Q + m) * kNumVars + c];
  const double w = quad.w_hat1;
  return (ubar[c] - w * (wx * (e[kWest] + e[kEast]) + (1.0 - wx) * (e[kSouth] + e[kNorth]))) / (1.0 - 2.0 * w);
}

inline StateVector pi_state(const double* block, const StateVector& ubar, double wx, const QuadratureRule& quad) {
  StateVector s;
  for (int c = 0; c < kNumVars; ++c) s[c] = pi_component(block, c, ubar, wx, quad);
  return s;
}

void require_admissible_average(const StateVector& ubar) {
  if (!is_admissible(ubar)) throw DomainError("positivity limiter: inadmissible cell average");
}

// Reduction schedule applied on top of a formula theta when round-off leaves a bound violated.
constexpr double kShrinkSteps[] = {1e-14, 1e-13, 1e-12, 1e-11, 1e-10, 1e-9, 1e-8, 1e-7,
                                   1e-6,  1e-5,  1e-4,  1e-3,  1e-2,  1e-1, 1.0};

}  // namespace

StateVector interior_pi(const StateVector& ubar, const PiQuantities& e, double wx, const QuadratureRule& quad) {
  const double w = quad.w_hat1;
  if (1.0 - 2.0 * w == 0.0) throw std::logic_error("interior state is undefined for w_hat1 = 1/2 (k = 2)");
  StateVector s;
  for (int c = 0; c < kNumVars; ++c)
    s[c] = (ubar[c] - w * (wx * (e.west[c] + e.east[c]) + (1.0 - wx) * (e.south[c] + e.north[c]))) / (1.0 - 2.0 * w);
  return s;
}

PiQuantities compute_pi(const InterfaceSet& t, int i, int j, const StateVector& ubar, const StepContext& ctx,
                        const Grid2D& g, const QuadratureRule& quad) {
  const double* block = t.cell(i, j);
  PiQuantities p;
  p.west = face_mean(block, kWest, quad);
  p.east = face_mean(block, kEast, quad);
  p.south = face_mean(block, kSouth, quad);
  p.north = face_mean(block, kNorth, quad);
  if (quad.k >= 3) p.interior = interior_pi(ubar, p, ctx.x_weight(g), quad);
  return p;
}

double limit_cell_density(double* block, const StateVector& ubar, double wx, const QuadratureRule& quad,
                          bool* safeguarded) {
  require_admissible_average(ubar);
  const int n = 4 * quad.Q;
  const bool with_pi = quad.k >= 3;
  const double rbar = ubar[kRho];
  const double eps1 = std::min(kLimiterEpsilon, rbar);

  double rmin = block[kRho];
  for (int k = 1; k < n; ++k) rmin = std::min(rmin, block[k * kNumVars + kRho]);
  if (with_pi) rmin = std::min(rmin, pi_component(block, kRho, ubar, wx, quad));
  if (rbar == rmin) return 1.0;
  const double theta = std::min(std::abs((rbar - eps1) / (rbar - rmin)), 1.0);
  if (theta == 1.0) return 1.0;

  double original[4 * 4];
  for (int k = 0; k < n; ++k) original[k] = block[k * kNumVars + kRho];
  auto apply = [&](double th) {
    for (int k = 0; k < n; ++k) block[k * kNumVars + kRho] = th * (original[k] - rbar) + rbar;
  };
  auto ok = [&]() {
    for (int k = 0; k < n; ++k)
      if (!(block[k * kNumVars + kRho] >= eps1)) return false;
    return !with_pi || pi_component(block, kRho, ubar, wx, quad) >= eps1;
  };
  apply(theta);
  if (ok()) return theta;
  for (double d : kShrinkSteps) {
    const double th = d >= 1.0 ? 0.0 : theta * (1.0 - d);
    apply(th);
    if (ok() || th == 0.0) {
      if (safeguarded) *safeguarded = true;
      return th;
    }
  }
  return 0.0;
}

double limit_cell_energy(double* block, const StateVector& ubar, double wx, const QuadratureRule& quad,
                         bool* safeguarded) {
  require_admissible_average(ubar);
  const int n = 4 * quad.Q;
  const bool with_pi = quad.k >= 3;
  const double ebar = internal_energy_unchecked(ubar);
  const double eps1 = std::min(kLimiterEpsilon, ubar[kRho]);
  const double eps2 = std::min(kLimiterEpsilon, ebar);

  double emin = internal_energy(load(block));
  for (int k = 1; k < n; ++k) emin = std::min(emin, internal_energy(load(block + k * kNumVars)));
  if (with_pi) emin = std::min(emin, internal_energy(pi_state(block, ubar, wx, quad)));
  if (ebar == emin) return 1.0;
  const double theta = std::min(std::abs((ebar - eps2) / (ebar - emin)), 1.0);
  if (theta == 1.0) return 1.0;

  double original[4 * 4 * kNumVars];
  std::copy(block, block + n * kNumVars, original);
  auto apply = [&](double th) {
    for (int k = 0; k < n * kNumVars; ++k) block[k] = th * (original[k] - ubar[k % kNumVars]) + ubar[k % kNumVars];
  };
  auto ok = [&]() {
    for (int k = 0; k < n; ++k)
      if (!is_admissible(load(block + k * kNumVars), 0.0, 0.0)) return false;
    for (int k = 0; k < n; ++k) {
      const StateVector u = load(block + k * kNumVars);
      if (!(u[kRho] >= eps1) || !(internal_energy_unchecked(u) >= eps2)) return false;
    }
    if (with_pi) {
      const StateVector p = pi_state(block, ubar, wx, quad);
      if (!(p[kRho] >= eps1) || !(internal_energy_unchecked(p) >= eps2)) return false;
    }
    return true;
  };
  apply(theta);
  if (ok()) return theta;
  for (double d : kShrinkSteps) {
    const double th = d >= 1.0 ? 0.0 : theta * (1.0 - d);
    apply(th);
    if (ok() || th == 0.0) {
      if (safeguarded) *safeguarded = true;
      return th;
    }
  }
  return 0.0;
}

CellLimitResult limit_cell(double* block, const StateVector& ubar, double wx, const QuadratureRule& quad) {
  CellLimitResult r;
  r.theta1 = limit_cell_density(block, ubar, wx, quad, &r.safeguarded);
  r.theta2 = limit_cell_energy(block, ubar, wx, quad, &r.safeguarded);
  return r;
}

bool cell_satisfies_bounds(const double* block, const StateVector& ubar, double wx, const QuadratureRule& quad,
                           double rel_slack) {
  const double eps1 = std::min(kLimiterEpsilon, ubar[kRho]) * (1.0 - rel_slack);
  const double eps2 = std::min(kLimiterEpsilon, internal_energy(ubar)) * (1.0 - rel_slack);
  auto good = [&](const StateVector& u) {
    return all_finite(u) && u[kRho] >= eps1 && internal_energy_unchecked(u) >= eps2;
  };
  for (int k = 0; k < 4 * quad.Q; ++k)
    if (!good(load(block + k * kNumVars))) return false;
  if (quad.k >= 3 && !good(pi_state(block, ubar, wx, quad))) return false;
  return true;
}

LimiterStats apply_pp_limiter(InterfaceSet& t, const CellField& avg, const StepContext& ctx, const Grid2D& g,
                              const QuadratureRule& quad, int threads, const CellMask* quiet, CellMask* changed) {
  const double wx = ctx.x_weight(g);
  if (changed) {
    changed->nx = g.nx;
    changed->ny = g.ny;
    changed->flag.assign(static_cast<std::size_t>(g.nx + 2) * (g.ny + 2), 0);
  }
  std::vector<LimiterStats> rows(g.ny + 2);
  parallel_for(-1, g.ny + 1, threads, [&](int j0, int j1) {
    for (int j = j0; j < j1; ++j)
      for (int i = -1; i <= g.nx; ++i) {
        if (quiet && (*quiet)(i, j)) continue;
        const CellLimitResult r = limit_cell(t.cell(i, j), avg.state(i, j), wx, quad);
        const bool interior = i >= 0 && i < g.nx && j >= 0 && j < g.ny;
        if (changed && r.limited()) changed->flag[static_cast<std::size_t>(j + 1) * (g.nx + 2) + (i + 1)] = 1;
        if (interior && r.limited()) ++rows[j + 1].cells_limited;
        if (interior && r.safeguarded) ++rows[j + 1].safeguarded;
      }
  });
  LimiterStats s;
  for (const auto& r : rows) {
    s.cells_limited += r.cells_limited;
    s.safeguarded += r.safeguarded;
  }
  return s;
}

void limit_density(InterfaceSet& t, const CellField& avg, const StepContext& ctx, const Grid2D& g,
                   const QuadratureRule& quad) {
  const double wx = ctx.x_weight(g);
  for (int j = -1; j <= g.ny; ++j)
    for (int i = -1; i <= g.nx; ++i) limit_cell_density(t.cell(i, j), avg.state(i, j), wx, quad);
}

void limit_energy(InterfaceSet& t, const CellField& avg, const StepContext& ctx, const Grid2D& g,
                  const QuadratureRule& quad) {
  const double wx = ctx.x_weight(g);
  for (int j = -1; j <= g.ny; ++j)
    for (int i = -1; i <= g.nx; ++i) limit_cell_energy(t.cell(i, j), avg.state(i, j), wx, quad);
}

}  // namespace ddfpp
