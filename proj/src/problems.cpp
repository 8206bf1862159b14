#include "ddfpp/problems.hpp"

#include <cmath>
#include <numbers>

namespace ddfpp {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kVortexStrength = 5.389489439;

double wrap(double x, double lo, double hi) {
  const double L = hi - lo;
  double r = std::fmod(x - lo, L);
  if (r < 0.0) r += L;
  return lo + r;
}

ProblemSpec vortex() {
  ProblemSpec p;
  p.name = "vortex";
  p.description = "smooth magnetised vortex with near-vacuum pressure at its centre, advected by (1,1)";
  p.x_lo = p.y_lo = -10.0;
  p.x_hi = p.y_hi = 10.0;
  p.nx = p.ny = 160;
  p.gamma = 5.0 / 3.0;
  p.t_end = 0.05;
  p.boundary = [](const IdealEos&) { return BoundarySpec::all(BoundaryKind::Periodic); };
  p.init = vortex_state;
  p.exact = [](double x, double y, double t) {
    return vortex_state(wrap(x - t, -10.0, 10.0), wrap(y - t, -10.0, 10.0));
  };
  return p;
}

ProblemSpec orszag_tang() {
  ProblemSpec p;
  p.name = "orszag-tang";
  p.description = "Orszag-Tang vortex on the periodic square [0, 2pi]^2";
  p.x_lo = p.y_lo = 0.0;
  p.x_hi = p.y_hi = 2.0 * kPi;
  p.nx = p.ny = 200;
  p.gamma = 5.0 / 3.0;
  p.t_end = 4.0;
  p.snapshots = {2.0, 4.0};
  p.boundary = [](const IdealEos&) { return BoundarySpec::all(BoundaryKind::Periodic); };
  p.init = [g = p.gamma](double x, double y) {
    PrimitiveState w;
    w.rho = g * g;
    w.v = {-std::sin(y), std::sin(x), 0.0};
    w.B = {-std::sin(y), std::sin(2.0 * x), 0.0};
    w.p = g;
    return w;
  };
  return p;
}

ProblemSpec rotor() {
  ProblemSpec p;
  p.name = "rotor";
  p.description = "dense rotating disk in a magnetised ambient fluid";
  p.nx = p.ny = 400;
  p.gamma = 5.0 / 3.0;
  p.t_end = 0.295;
  p.boundary = [](const IdealEos&) { return BoundarySpec::all(BoundaryKind::Outflow); };
  p.init = [](double x, double y) {
    constexpr double r1 = 0.1, r2 = 0.115, r0 = r1;  // taper anchored at the disk radius
    const double dx = x - 0.5, dy = y - 0.5;
    const double r = std::sqrt(dx * dx + dy * dy);
    PrimitiveState w;
    w.B = {2.5 / std::sqrt(4.0 * kPi), 0.0, 0.0};
    w.p = 0.5;
    if (r <= r1) {
      w.rho = 10.0;
      w.v = {-dy / r1, dx / r1, 0.0};
    } else if (r <= r2) {
      const double phi = (r2 - r) / (r2 - r0);
      w.rho = 1.0 + 9.0 * phi;
      w.v = {-phi * dy / r, phi * dx / r, 0.0};
    } else {
      w.rho = 1.0;
      w.v = {0.0, 0.0, 0.0};
    }
    return w;
  };
  return p;
}

ProblemSpec blast() {
  ProblemSpec p;
  p.name = "blast";
  p.description = "strongly magnetised blast wave, pressure ratio 1e4";
  p.x_lo = p.y_lo = -0.5;
  p.x_hi = p.y_hi = 0.5;
  p.nx = p.ny = 200;
  p.gamma = 1.4;
  p.t_end = 0.01;
  p.boundary = [](const IdealEos&) { return BoundarySpec::all(BoundaryKind::Outflow); };
  p.init = [](double x, double y) {
    PrimitiveState w;
    w.rho = 1.0;
    w.B = {100.0 / std::sqrt(4.0 * kPi), 0.0, 0.0};
    w.p = std::sqrt(x * x + y * y) <= 0.1 ? 1.0e3 : 0.1;
    return w;
  };
  return p;
}

PrimitiveState jet_inflow(double g) {
  PrimitiveState w;
  w.rho = g;
  w.v = {0.0, 800.0, 0.0};
  w.B = {0.0, std::sqrt(200.0), 0.0};
  w.p = 1.0;
  return w;
}

ProblemSpec jet() {
  ProblemSpec p;
  p.name = "jet";
  p.description = "Mach-800 jet in a strong magnetic field (right half, reflecting at x=0)";
  p.x_lo = 0.0;
  p.x_hi = 0.5;
  p.y_lo = 0.0;
  p.y_hi = 1.5;
  p.nx = 200;
  p.ny = 600;
  p.gamma = 1.4;
  p.t_end = 0.002;
  p.snapshots = {0.001, 0.0015, 0.002};
  p.boundary = [g = p.gamma](const IdealEos& eos) {
    BoundarySpec b = BoundarySpec::all(BoundaryKind::Outflow);
    b[Side::West].kind = BoundaryKind::Reflecting;
    b[Side::South].kind = BoundaryKind::Dirichlet;
    const ConservedState inflow = to_conserved(jet_inflow(g), eos);
    b[Side::South].dirichlet = [inflow](double x, double, double) -> std::optional<ConservedState> {
      if (std::abs(x) <= 0.05) return inflow;
      return std::nullopt;
    };
    return b;
  };
  p.init = [g = p.gamma](double, double) {
    PrimitiveState w;
    w.rho = 0.1 * g;
    w.B = {0.0, std::sqrt(200.0), 0.0};
    w.p = 1.0;
    return w;
  };
  return p;
}

}  // namespace

PrimitiveState vortex_state(double x, double y) {
  const double r2 = x * x + y * y;
  const double mu = kVortexStrength;
  const double ev = std::exp(0.5 * (1.0 - r2));
  // mu/(sqrt(2) pi): the amplitude that keeps the vortex in radial equilibrium
  const double sv = mu / (std::sqrt(2.0) * kPi) * ev;
  const double sb = mu / (2.0 * kPi) * ev;
  PrimitiveState w;
  w.rho = 1.0;
  w.v = {1.0 - sv * y, 1.0 + sv * x, 0.0};
  w.B = {-sb * y, sb * x, 0.0};
  w.p = 1.0 - mu * mu * (1.0 + r2) / (8.0 * kPi * kPi) * std::exp(1.0 - r2);
  return w;
}

const std::vector<ProblemSpec>& builtin_problems() {
  static const std::vector<ProblemSpec> list = {vortex(), orszag_tang(), rotor(), blast(), jet()};
  return list;
}

const ProblemSpec& find_problem(const std::string& name) {
  for (const auto& p : builtin_problems())
    if (p.name == name) return p;
  std::string known;
  for (const auto& p : builtin_problems()) known += (known.empty() ? "" : ", ") + p.name;
  throw ConfigError("unknown problem '" + name + "' (known: " + known + ")");
}

Grid2D make_grid(const ProblemSpec& spec, int nx, int ny, int k) {
  return Grid2D(nx, ny, spec.x_lo, spec.x_hi, spec.y_lo, spec.y_hi, required_ghost_width(k));
}

GaussRule gauss_rule(int n) {
  GaussRule g;
  switch (n) {
    case 1: g.x = {0.0}; g.w = {1.0}; break;
    case 2: {
      const double a = 0.5 / std::sqrt(3.0);
      g.x = {-a, a};
      g.w = {0.5, 0.5};
      break;
    }
    case 3: {
      const double a = 0.5 * std::sqrt(0.6);
      g.x = {-a, 0.0, a};
      g.w = {5.0 / 18.0, 8.0 / 18.0, 5.0 / 18.0};
      break;
    }
    case 5: {
      const double a = 0.5 * std::sqrt(5.0 - 2.0 * std::sqrt(10.0 / 7.0)) / 3.0;
      const double b = 0.5 * std::sqrt(5.0 + 2.0 * std::sqrt(10.0 / 7.0)) / 3.0;
      const double wa = 0.5 * (322.0 + 13.0 * std::sqrt(70.0)) / 900.0;
      const double wb = 0.5 * (322.0 - 13.0 * std::sqrt(70.0)) / 900.0;
      g.x = {-b, -a, 0.0, a, b};
      g.w = {wb, wa, 0.5 * 128.0 / 225.0, wa, wb};
      break;
    }
    default: throw ConfigError("gauss_rule: supported point counts are 1, 2, 3, 5");
  }
  return g;
}

CellField cell_averages(const std::function<PrimitiveState(double, double)>& f, const Grid2D& grid,
                        const IdealEos& eos, int points) {
  const GaussRule gr = gauss_rule(points);
  CellField out(grid);
  const double dx = grid.dx(), dy = grid.dy();
  for (int j = 0; j < grid.ny; ++j)
    for (int i = 0; i < grid.nx; ++i) {
      StateVector avg;
      for (std::size_t a = 0; a < gr.x.size(); ++a)
        for (std::size_t b = 0; b < gr.x.size(); ++b) {
          const PrimitiveState w = f(grid.xc(i) + gr.x[a] * dx, grid.yc(j) + gr.x[b] * dy);
          if (!(w.rho > 0.0) || !(w.p > 0.0))
            throw ConfigError("initial data inadmissible near cell (" + std::to_string(i) + "," + std::to_string(j) + ")");
          avg += (gr.w[a] * gr.w[b]) * to_conserved(w, eos);
        }
      if (!is_admissible(avg))
        throw ConfigError("initial cell average inadmissible at (" + std::to_string(i) + "," + std::to_string(j) + ")");
      out.set_state(i, j, avg);
    }
  return out;
}

CellField init_cell_averages(const ProblemSpec& spec, const Grid2D& grid, int points) {
  return cell_averages(spec.init, grid, IdealEos{spec.gamma}, points);
}

}  // namespace ddfpp
