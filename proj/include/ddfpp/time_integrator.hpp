#pragma once

#include <vector>

#include "ddfpp/grid.hpp"
#include "ddfpp/limiter.hpp"
#include "ddfpp/scheme.hpp"

namespace ddfpp {

// Bound:   dt = nu * w_hat1 / (a1/dx + a2/dy)   (nu scales the positivity CFL bound itself)
// Classic: dt = nu / (a1/dx + a2/dy), halved until the positivity bound holds
enum class CflConvention { Bound, Classic };

double compute_dt(double alpha1, double alpha2, const Grid2D& g, const QuadratureRule& quad, double nu,
                  CflConvention conv = CflConvention::Bound);

// dt (a1/dx + a2/dy) < w_hat1, strictly.
bool satisfies_pp_cfl(double dt, double alpha1, double alpha2, const Grid2D& g, const QuadratureRule& quad);

struct StepStats {
  double t = 0.0;   // time at the end of the step
  double dt = 0.0;
  double alpha1 = 0.0, alpha2 = 0.0;  // max over the stages
  double eps_div = 0.0;               // max over the stages
  long limiter_hits = 0;              // summed over the stages
  long safeguarded = 0;
  long basis_fallbacks = 0;
  int restarts = 0;                   // dt halvings caused by a later stage's viscosity
  StateVector flux_sum;               // RK-weighted sum over stages of the flux part of sum_ij L_ij
  StateVector flux_scale;
  StateVector source_sum;             // RK-weighted sum over stages of sum_ij S_ij
  StateVector boundary_flux;          // RK-weighted net outward boundary flux
};

struct RunState {
  double t = 0.0;
  long step = 0;
  CellField cellavg;
  StepContext ctx;
  std::vector<StepStats> stats;
};

struct TimeStepOptions {
  double nu = 0.3;
  CflConvention convention = CflConvention::Bound;
  double t_end = 1.0;
  int max_restarts = 30;
  bool check_admissible = true;  // assert 0-epsilon admissibility of every stage output
};

// One SSP-RK3 step; throws SolverAbort on positivity loss or when no admissible dt is found.
StepStats ssp_rk3_step(RunState& state, SemiDiscreteOperator& op, const TimeStepOptions& opt);

// Checks every interior cell; throws SolverAbort naming the first bad cell.
void assert_admissible(const CellField& u, const char* stage, double t);

}  // namespace ddfpp
