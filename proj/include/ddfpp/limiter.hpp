#pragma once

#include <optional>

#include "ddfpp/grid.hpp"
#include "ddfpp/reconstruct.hpp"

namespace ddfpp {

// Time-step data shared by the limiter, the fluxes and the CFL control of one stage.
struct StepContext {
  double dt = 0.0;
  double alpha1 = 0.0, alpha2 = 0.0;
  double lambda1 = 0.0, lambda2 = 0.0, lambda = 0.0;

  static StepContext make(double alpha1, double alpha2, double dt, const Grid2D& g);
  // lambda1 / lambda; well defined from the alphas alone, so it does not depend on dt.
  double x_weight(const Grid2D& g) const;
};

struct PiQuantities {
  StateVector west, east, south, north;  // quadrature means of the inner traces
  std::optional<StateVector> interior;   // only for k >= 3
};

PiQuantities compute_pi(const InterfaceSet& t, int i, int j, const StateVector& cell_average, const StepContext& ctx,
                        const Grid2D& g, const QuadratureRule& quad);

// Interior state from edge means; throws std::logic_error when 1 - 2 w_hat1 = 0 (k = 2).
StateVector interior_pi(const StateVector& cell_average, const PiQuantities& edges, double x_weight,
                        const QuadratureRule& quad);

inline constexpr double kLimiterEpsilon = 1e-13;

struct CellLimitResult {
  double theta1 = 1.0, theta2 = 1.0;
  bool safeguarded = false;  // theta reduced beyond the formula to absorb round-off
  bool limited() const { return theta1 < 1.0 || theta2 < 1.0; }
};

// Both limiter steps on one cell's inner traces (face-major block of 4*Q states, as stored in InterfaceSet).
// Throws DomainError if the cell average itself is inadmissible.
CellLimitResult limit_cell(double* traces, const StateVector& cell_average, double x_weight, const QuadratureRule& quad);

// The two steps separately (density only, then the full state).
double limit_cell_density(double* traces, const StateVector& cell_average, double x_weight, const QuadratureRule& quad,
                          bool* safeguarded = nullptr);
double limit_cell_energy(double* traces, const StateVector& cell_average, double x_weight, const QuadratureRule& quad,
                         bool* safeguarded = nullptr);

// True when all traces (and the interior state for k >= 3) meet the limiter's bounds with relative slack.
bool cell_satisfies_bounds(const double* traces, const StateVector& cell_average, double x_weight,
                           const QuadratureRule& quad, double rel_slack = 1e-12);

struct LimiterStats {
  long cells_limited = 0;
  long safeguarded = 0;
};

// Applies the limiter to every stored cell (interior and ghost ring); cells flagged in `quiet` have traces
// equal to their average, which the limiter leaves alone, and are skipped. `changed`, when given, receives
// the cells whose traces were modified.
LimiterStats apply_pp_limiter(InterfaceSet& t, const CellField& averages, const StepContext& ctx, const Grid2D& g,
                              const QuadratureRule& quad, int threads = 1, const CellMask* quiet = nullptr,
                              CellMask* changed = nullptr);

void limit_density(InterfaceSet& t, const CellField& averages, const StepContext& ctx, const Grid2D& g,
                   const QuadratureRule& quad);
void limit_energy(InterfaceSet& t, const CellField& averages, const StepContext& ctx, const Grid2D& g,
                  const QuadratureRule& quad);

}  // namespace ddfpp
