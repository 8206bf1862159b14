#pragma once

#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "ddfpp/config.hpp"
#include "ddfpp/diagnostics.hpp"
#include "ddfpp/problems.hpp"
#include "ddfpp/time_integrator.hpp"

namespace ddfpp {

enum ExitCode : int { kExitOk = 0, kExitConfig = 2, kExitAbort = 3, kExitIo = 4 };

struct Resolved {
  const ProblemSpec* problem = nullptr;
  Grid2D grid;
  IdealEos eos;
  double t_end = 0.0;
};

// Fills in preset resolution / end time; nx alone scales ny by the preset aspect ratio.
Resolved resolve(const RunConfig& cfg);

struct SimulationResult {
  Resolved setup;
  RunState state;
  double max_eps_div = 0.0;
  long limiter_hits = 0;
  long basis_fallbacks = 0;
  long restarts = 0;
};

// Called after every accepted step; the flag tells whether the step landed on a snapshot time.
using StepObserver = std::function<void(const RunState&, const StepStats&, bool at_snapshot)>;

// Advances the configured problem to its end time. Throws ConfigError / SolverAbort / IoError.
SimulationResult simulate(const RunConfig& cfg, const StepObserver& observer = {});

// Full driver: outputs, run log, summary.json and the serialized config in cfg.out_dir.
// Returns an ExitCode; messages go to err.
int run(const RunConfig& cfg, std::ostream& log, std::ostream& err);

// Runs each resolution (cells per axis, doubling) and returns the l1 table; writes it as CSV if path is non-empty.
std::vector<ConvergenceRow> convergence_study(const RunConfig& cfg, const std::vector<int>& resolutions,
                                              const std::string& csv_path = "", std::ostream* log = nullptr);
void write_convergence_csv(const std::string& path, const std::vector<ConvergenceRow>& rows);

int run_convergence(const RunConfig& cfg, std::ostream& log, std::ostream& err);

}  // namespace ddfpp
