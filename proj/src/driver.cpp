#include "ddfpp/driver.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <ostream>

#include "ddfpp/io.hpp"
#include "json.hpp"

namespace ddfpp {

namespace fs = std::filesystem;

Resolved resolve(const RunConfig& cfg) {
  cfg.validate();
  Resolved r;
  r.problem = &find_problem(cfg.problem);
  const ProblemSpec& p = *r.problem;
  int nx = p.nx, ny = p.ny;
  if (cfg.nx > 0) {
    nx = cfg.nx;
    ny = cfg.ny > 0 ? cfg.ny : std::max(1, static_cast<int>(std::lround(static_cast<double>(cfg.nx) * p.ny / p.nx)));
  } else if (cfg.ny > 0) {
    ny = cfg.ny;
  }
  r.grid = make_grid(p, nx, ny, cfg.order);
  r.eos = IdealEos{p.gamma};
  r.t_end = cfg.t_end > 0.0 ? cfg.t_end : p.t_end;
  return r;
}

SimulationResult simulate(const RunConfig& cfg, const StepObserver& observer) {
  SimulationResult res;
  res.setup = resolve(cfg);
  const Resolved& s = res.setup;
  DdfPpScheme scheme(s.grid, s.problem->boundary(s.eos), s.eos, cfg.scheme_options());
  res.state.cellavg = init_cell_averages(*s.problem, s.grid);

  std::vector<double> targets;
  for (double ts : s.problem->snapshots)
    if (ts < s.t_end) targets.push_back(ts);
  targets.push_back(s.t_end);

  TimeStepOptions opt;
  opt.nu = cfg.cfl;
  opt.convention = cfg.cfl_convention;
  opt.check_admissible = cfg.check_admissible;
  for (double target : targets) {
    opt.t_end = target;
    while (res.state.t < target) {
      if (cfg.max_steps > 0 && res.state.step >= cfg.max_steps) return res;
      const StepStats st = ssp_rk3_step(res.state, scheme, opt);
      res.max_eps_div = std::max(res.max_eps_div, st.eps_div);
      res.limiter_hits += st.limiter_hits;
      res.basis_fallbacks += st.basis_fallbacks;
      res.restarts += st.restarts;
      if (observer) observer(res.state, st, res.state.t == target);
    }
  }
  return res;
}

namespace {

// div_h B of the traces built from u itself, for the per-cell output column.
std::optional<DivergenceField> output_divergence(DdfPpScheme& scheme, const CellField& u, double t) {
  try {
    CellField rhs(u.grid());
    scheme.evaluate(u, t, rhs);
    return discrete_divergence(scheme.last_traces(), u.grid(), scheme.quadrature());
  } catch (const SolverAbort&) {
    return std::nullopt;
  }
}

void dump(const RunConfig& cfg, DdfPpScheme& scheme, const CellField& u, double t, const std::string& stem) {
  if (cfg.format == "none") return;
  const auto div = output_divergence(scheme, u, t);
  const DivergenceField* dp = div ? &*div : nullptr;
  const fs::path base = fs::path(cfg.out_dir) / stem;
  if (cfg.format == "csv") write_csv(base.string() + ".csv", u, scheme.eos(), dp);
  else write_vtk(base.string() + ".vtk", u, scheme.eos(), dp);
}

std::string stem_for(long step, double t) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "state_%06ld_t%.6g", step, t);
  return buf;
}

void write_text(const fs::path& p, const std::string& text) {
  std::ofstream out(p);
  if (!out) throw IoError("cannot write '" + p.string() + "'");
  out << text;
  if (!out) throw IoError("write to '" + p.string() + "' failed");
}

}  // namespace

int run(const RunConfig& cfg, std::ostream& log, std::ostream& err) {
  nlohmann::json summary;
  summary["problem"] = cfg.problem;
  int code = kExitOk;
  try {
    const Resolved setup = resolve(cfg);
    std::error_code ec;
    fs::create_directories(cfg.out_dir, ec);
    if (ec || !fs::is_directory(cfg.out_dir)) throw IoError("cannot create output directory '" + cfg.out_dir + "'");
    write_text(fs::path(cfg.out_dir) / "config.ini", serialize_config(cfg));

    // a separate operator instance serves the output-only divergence evaluations
    DdfPpScheme out_scheme(setup.grid, setup.problem->boundary(setup.eos), setup.eos, cfg.scheme_options());
    RunLog runlog;
    if (cfg.run_log) runlog = RunLog((fs::path(cfg.out_dir) / "run_log.csv").string());
    log << "problem " << cfg.problem << "  grid " << setup.grid.nx << "x" << setup.grid.ny << "  k=" << cfg.order
        << "  t_end=" << setup.t_end << "\n";
    dump(cfg, out_scheme, init_cell_averages(*setup.problem, setup.grid), 0.0, stem_for(0, 0.0));

    const auto t0 = std::chrono::steady_clock::now();
    SimulationResult res;
    try {
      res = simulate(cfg, [&](const RunState& st, const StepStats& s, bool at_snapshot) {
        if (runlog.is_open()) runlog.append(s.t, s.dt, s.eps_div, conserved_totals(st.cellavg), s.limiter_hits);
        const bool periodic = cfg.every > 0 && st.step % cfg.every == 0;
        if (at_snapshot || periodic) dump(cfg, out_scheme, st.cellavg, st.t, stem_for(st.step, st.t));
        if (st.step % 100 == 0)
          log << "step " << st.step << "  t=" << st.t << "  dt=" << s.dt << "  eps_div=" << s.eps_div << "\n";
      });
    } catch (const SolverAbort& a) {
      summary["status"] = "aborted";
      summary["abort"] = {{"stage", a.stage()}, {"i", a.i()}, {"j", a.j()}, {"t", a.time()}, {"message", a.what()}};
      err << a.what() << "\n";
      code = kExitAbort;
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    summary["wall_seconds"] = secs;
    if (code == kExitOk) {
      summary["status"] = "completed";
      summary["t"] = res.state.t;
      summary["steps"] = res.state.step;
      summary["max_eps_div"] = res.max_eps_div;
      summary["limiter_hits"] = res.limiter_hits;
      summary["basis_fallbacks"] = res.basis_fallbacks;
      summary["restarts"] = res.restarts;
      dump(cfg, out_scheme, res.state.cellavg, res.state.t, "final");
      log << "done: t=" << res.state.t << " after " << res.state.step << " steps  max eps_div=" << res.max_eps_div
          << "  (" << secs << " s)\n";
    }
  } catch (const ConfigError& e) {
    err << "config error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const IoError& e) {
    err << "io error: " << e.what() << "\n";
    return kExitIo;
  } catch (const SolverAbort& e) {
    err << e.what() << "\n";
    code = kExitAbort;
  }
  summary["exit_code"] = code;
  try {
    write_text(fs::path(cfg.out_dir) / "summary.json", summary.dump(2) + "\n");
  } catch (const IoError& e) {
    err << "io error: " << e.what() << "\n";
    return code == kExitOk ? kExitIo : code;
  }
  return code;
}

void write_convergence_csv(const std::string& path, const std::vector<ConvergenceRow>& rows) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot write '" + path + "'");
  out << "n";
  for (const char* n : kPrimitiveNames) out << ",l1_" << n;
  for (const char* n : kPrimitiveNames) out << ",order_" << n;
  out << '\n';
  char buf[40];
  for (const auto& r : rows) {
    out << r.n;
    for (double e : r.errors) {
      std::snprintf(buf, sizeof buf, "%.6e", e);
      out << ',' << buf;
    }
    for (int c = 0; c < kNumVars; ++c) {
      if (r.orders) {
        std::snprintf(buf, sizeof buf, "%.4f", (*r.orders)[c]);
        out << ',' << buf;
      } else {
        out << ',';
      }
    }
    out << '\n';
  }
  if (!out) throw IoError("write to '" + path + "' failed");
}

std::vector<ConvergenceRow> convergence_study(const RunConfig& cfg, const std::vector<int>& resolutions,
                                              const std::string& csv_path, std::ostream* log) {
  if (resolutions.size() < 2) throw ConfigError("convergence study needs at least two resolutions");
  const ProblemSpec& p = find_problem(cfg.problem);
  if (!p.exact) throw ConfigError("problem '" + cfg.problem + "' has no exact solution");
  std::vector<PrimitiveErrors> errs;
  for (int n : resolutions) {
    RunConfig c = cfg;
    c.nx = n;
    c.ny = 0;
    const auto t0 = std::chrono::steady_clock::now();
    const SimulationResult r = simulate(c);
    errs.push_back(l1_errors(r.state.cellavg, *p.exact, r.state.t, r.setup.eos, cfg.norm));
    if (log)
      *log << "N=" << n << "  steps=" << r.state.step << "  l1(v2)=" << errs.back()[2] << "  l1(B1)=" << errs.back()[4]
           << "  l1(p)=" << errs.back()[7] << "  ("
           << std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count() << " s)\n";
  }
  auto rows = l1_error_and_order(resolutions, errs);
  if (!csv_path.empty()) write_convergence_csv(csv_path, rows);
  return rows;
}

int run_convergence(const RunConfig& cfg, std::ostream& log, std::ostream& err) {
  try {
    cfg.validate();
    std::error_code ec;
    fs::create_directories(cfg.out_dir, ec);
    if (ec || !fs::is_directory(cfg.out_dir)) throw IoError("cannot create output directory '" + cfg.out_dir + "'");
    write_text(fs::path(cfg.out_dir) / "config.ini", serialize_config(cfg));
    const auto rows =
        convergence_study(cfg, cfg.resolutions, (fs::path(cfg.out_dir) / "convergence.csv").string(), &log);
    for (const auto& r : rows)
      if (r.orders)
        log << "N=" << r.n << "  order v2=" << (*r.orders)[2] << "  B1=" << (*r.orders)[4] << "  p=" << (*r.orders)[7]
            << "\n";
  } catch (const ConfigError& e) {
    err << "config error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const IoError& e) {
    err << "io error: " << e.what() << "\n";
    return kExitIo;
  } catch (const SolverAbort& e) {
    err << e.what() << "\n";
    return kExitAbort;
  }
  return kExitOk;
}

}  // namespace ddfpp
