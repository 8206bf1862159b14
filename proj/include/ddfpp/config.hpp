#pragma once

#include <string>
#include <vector>

#include "ddfpp/diagnostics.hpp"
#include "ddfpp/scheme.hpp"
#include "ddfpp/time_integrator.hpp"

namespace ddfpp {

// Run configuration. Zero/negative resolutions and end time mean "use the problem preset".
//
// File format: flat key = value lines grouped in [section]s; '#' starts a comment.
//   [run]     problem, t_end, max_steps
//   [grid]    nx, ny
//   [scheme]  order (2|5), ddf_projection, pp_limiter, chardecomp (true|false),
//             discriminant (printed|standard), viscosity (envelope|bound)
//   [time]    cfl, cfl_convention (bound|classic), check_admissible
//   [output]  dir, format (csv|vtk|none), every (steps between dumps, 0 = snapshots/final only), run_log
//   [study]   resolutions (comma list), norm (integral|mean)
//   [parallel] threads
struct RunConfig {
  std::string problem = "vortex";
  int order = 5;
  int nx = 0, ny = 0;
  double t_end = -1.0;
  long max_steps = 0;  // 0: unlimited
  double cfl = 0.3;
  CflConvention cfl_convention = CflConvention::Bound;
  bool check_admissible = true;
  bool ddf_projection = true;
  bool pp_limiter = true;
  bool chardecomp = true;
  DiscriminantForm discriminant = DiscriminantForm::Standard;
  ViscosityMode viscosity = ViscosityMode::Envelope;
  std::string out_dir = "ddfpp_out";
  std::string format = "csv";
  int every = 0;
  bool run_log = true;
  std::vector<int> resolutions;
  NormKind norm = NormKind::Integral;
  int threads = 1;

  void validate() const;  // ConfigError on unknown problem, unsupported order, bad ranges
  SchemeOptions scheme_options() const;
};

RunConfig parse_config(const std::string& text, RunConfig base = {});
RunConfig load_config(const std::string& path, RunConfig base = {});
std::string serialize_config(const RunConfig& c);

// Sets one key (either "section.key" or a bare key) from text; ConfigError on unknown keys or bad values.
void set_config_value(RunConfig& c, const std::string& key, const std::string& value);

}  // namespace ddfpp
