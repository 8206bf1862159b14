#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "ddfpp/driver.hpp"

using namespace ddfpp;

int main(int argc, char** argv) {
  CLI::App app{"ddfpp: divergence-free, positivity-preserving finite volume solver for 2D ideal MHD"};
  app.set_version_flag("--version", "ddfpp 1.0");

  std::string config_path, problem, out, format, cfl_conv, discriminant, viscosity, study, norm;
  int order = 0, nx = 0, ny = 0, every = -1, threads = 0;
  long max_steps = -1;
  double tend = -1.0, cfl = -1.0;
  bool no_ddf = false, no_pp = false, no_char = false, list = false, quiet = false;

  app.add_option("--config", config_path, "key = value config file (flags override its keys)");
  app.add_option("--problem", problem, "vortex | orszag-tang | rotor | blast | jet");
  app.add_option("--order", order, "reconstruction order k (2 or 5)");
  app.add_option("--nx", nx, "cells in x (default: problem preset)");
  app.add_option("--ny", ny, "cells in y (default: scaled from nx by the preset aspect ratio)");
  app.add_option("--tend", tend, "end time (default: problem preset)");
  app.add_option("--cfl", cfl, "CFL number nu in (0, 1)");
  app.add_option("--cfl-convention", cfl_conv, "bound | classic");
  app.add_option("--discriminant", discriminant, "printed | standard");
  app.add_option("--viscosity", viscosity, "envelope | bound");
  app.add_flag("--no-ddf", no_ddf, "disable the divergence-free projection");
  app.add_flag("--no-pp", no_pp, "disable the positivity-preserving limiter");
  app.add_flag("--no-chardecomp", no_char, "reconstruct conserved variables componentwise");
  app.add_option("--out", out, "output directory");
  app.add_option("--format", format, "csv | vtk | none");
  app.add_option("--every", every, "dump every N steps (0: snapshots and final state only)");
  app.add_option("--threads", threads, "worker threads");
  app.add_option("--max-steps", max_steps, "stop after this many steps (0: unlimited)");
  app.add_option("--study", study, "convergence study over comma-separated resolutions, e.g. 20,40,80,160");
  app.add_option("--norm", norm, "l1 norm for the study: integral | mean");
  app.add_flag("--list", list, "list the built-in problems and exit");
  app.add_flag("-q,--quiet", quiet, "suppress progress output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kExitConfig;
  }

  if (list) {
    for (const auto& p : builtin_problems())
      std::cout << p.name << "  (" << p.nx << "x" << p.ny << ", t_end=" << p.t_end << ")  " << p.description << "\n";
    return kExitOk;
  }

  RunConfig cfg;
  try {
    if (!config_path.empty()) cfg = load_config(config_path);
    auto given = [&](const char* name) { return app.get_option(name)->count() > 0; };
    if (given("--problem")) cfg.problem = problem;
    if (given("--order")) cfg.order = order;
    if (given("--nx")) cfg.nx = nx;
    if (given("--ny")) cfg.ny = ny;
    if (given("--tend")) cfg.t_end = tend;
    if (given("--cfl")) cfg.cfl = cfl;
    if (given("--cfl-convention")) set_config_value(cfg, "cfl_convention", cfl_conv);
    if (given("--discriminant")) set_config_value(cfg, "discriminant", discriminant);
    if (given("--viscosity")) set_config_value(cfg, "viscosity", viscosity);
    if (no_ddf) cfg.ddf_projection = false;
    if (no_pp) cfg.pp_limiter = false;
    if (no_char) cfg.chardecomp = false;
    if (given("--out")) cfg.out_dir = out;
    if (given("--format")) cfg.format = format;
    if (given("--every")) cfg.every = every;
    if (given("--threads")) cfg.threads = threads;
    if (given("--max-steps")) cfg.max_steps = max_steps;
    if (given("--study")) set_config_value(cfg, "resolutions", study);
    if (given("--norm")) set_config_value(cfg, "norm", norm);
    cfg.validate();
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfig;
  }

  std::ostream null_stream(nullptr);
  std::ostream& log = quiet ? null_stream : std::cout;
  if (!cfg.resolutions.empty()) return run_convergence(cfg, log, std::cerr);
  return run(cfg, log, std::cerr);
}
