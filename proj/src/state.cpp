#include "ddfpp/state.hpp"

#include <algorithm>
#include <string>

namespace ddfpp {

namespace {

void require_positive_density(const ConservedState& u, const char* where) {
  if (!(u[kRho] > 0.0)) throw DomainError(std::string(where) + ": non-positive density " + std::to_string(u[kRho]));
}

void require_admissible(const ConservedState& u, const char* where) {
  if (!is_admissible(u)) {
    throw DomainError(std::string(where) + ": inadmissible state (rho=" + std::to_string(u[kRho]) + ")");
  }
}

double bound_from_speeds(double cs2, double b2, double bi2, double rho, DiscriminantForm form) {
  const double disc = form == DiscriminantForm::Printed
                          ? (cs2 + b2) * (cs2 + b2) / (rho * rho) - 4.0 * cs2 * bi2 / rho
                          : (cs2 + b2 / rho) * (cs2 + b2 / rho) - 4.0 * cs2 * bi2 / rho;
  const double inner = cs2 + b2 / rho + std::sqrt(std::max(disc, 0.0));
  return std::sqrt(0.5 * inner);
}

}  // namespace

double internal_energy(const ConservedState& u) {
  require_positive_density(u, "internal_energy");
  return internal_energy_unchecked(u);
}

bool is_admissible(const ConservedState& u, double eps_rho, double eps_e) noexcept {
  if (!(u[kRho] > eps_rho)) return false;
  if (!all_finite(u)) return false;
  return internal_energy_unchecked(u) > eps_e;
}

PrimitiveState to_primitive(const ConservedState& u, const IdealEos& eos) {
  require_positive_density(u, "to_primitive");
  PrimitiveState w;
  w.rho = u[kRho];
  for (int d = 0; d < 3; ++d) {
    w.v[d] = u[kMx + d] / u[kRho];
    w.B[d] = u[kBx + d];
  }
  w.p = eos.pressure_from_internal(internal_energy_unchecked(u));
  return w;
}

ConservedState to_conserved(const PrimitiveState& w, const IdealEos& eos) {
  ConservedState u;
  u[kRho] = w.rho;
  double kin = 0.0, mag = 0.0;
  for (int d = 0; d < 3; ++d) {
    u[kMx + d] = w.rho * w.v[d];
    u[kBx + d] = w.B[d];
    kin += w.v[d] * w.v[d];
    mag += w.B[d] * w.B[d];
  }
  u[kEnergy] = eos.internal_from_pressure(w.p) + 0.5 * (w.rho * kin + mag);
  return u;
}

double pressure(const ConservedState& u, const IdealEos& eos) { return eos.pressure_from_internal(internal_energy(u)); }

FluxVector physical_flux(const ConservedState& u, Axis axis, const IdealEos& eos) {
  require_admissible(u, "physical_flux");
  const int n = axis == Axis::X ? 0 : 1;
  const double rho = u[kRho];
  const double v[3] = {u[kMx] / rho, u[kMy] / rho, u[kMz] / rho};
  const double B[3] = {u[kBx], u[kBy], u[kBz]};
  const double b2 = B[0] * B[0] + B[1] * B[1] + B[2] * B[2];
  const double p = eos.pressure_from_internal(internal_energy_unchecked(u));
  const double ptot = p + 0.5 * b2;
  const double vB = v[0] * B[0] + v[1] * B[1] + v[2] * B[2];
  const double mn = u[kMx + n];
  const double vn = v[n], Bn = B[n];

  FluxVector f;
  f[kRho] = mn;
  for (int d = 0; d < 3; ++d) {
    f[kMx + d] = mn * v[d] - Bn * B[d];
    f[kBx + d] = vn * B[d] - Bn * v[d];
  }
  f[kMx + n] += ptot;
  f[kBx + n] = 0.0;  // exactly, instead of vn*Bn - Bn*vn round-off
  f[kEnergy] = vn * (u[kEnergy] + ptot) - Bn * vB;
  return f;
}

StateVector powell_source_vector(const ConservedState& u) {
  require_positive_density(u, "powell_source_vector");
  StateVector s;
  const double inv = 1.0 / u[kRho];
  double vB = 0.0;
  for (int d = 0; d < 3; ++d) {
    const double v = u[kMx + d] * inv;
    s[kMx + d] = u[kBx + d];
    s[kBx + d] = v;
    vB += v * u[kBx + d];
  }
  s[kEnergy] = vB;
  return s;
}

double pp_sound_speed(const ConservedState& u, const IdealEos& eos) {
  require_admissible(u, "pp_sound_speed");
  const double p = eos.pressure_from_internal(internal_energy_unchecked(u));
  const double e = eos.specific_internal_energy(u[kRho], p);
  return p / (u[kRho] * std::sqrt(2.0 * e));
}

double fast_speed_bound(const ConservedState& u, Axis axis, const IdealEos& eos, DiscriminantForm form) {
  const double cs = pp_sound_speed(u, eos);
  const double b2 = u[kBx] * u[kBx] + u[kBy] * u[kBy] + u[kBz] * u[kBz];
  const double bi = u[normal_field(axis)];
  return bound_from_speeds(cs * cs, b2, bi * bi, u[kRho], form);
}

double fast_magnetosonic_speed(const ConservedState& u, Axis axis, const IdealEos& eos) {
  require_admissible(u, "fast_magnetosonic_speed");
  const double rho = u[kRho];
  const double p = eos.pressure_from_internal(internal_energy_unchecked(u));
  const double a2 = eos.sound_speed_sq(rho, p);
  const double b2 = (u[kBx] * u[kBx] + u[kBy] * u[kBy] + u[kBz] * u[kBz]) / rho;
  const double bi = u[normal_field(axis)];
  const double s = a2 + b2;
  const double disc = std::max(s * s - 4.0 * a2 * bi * bi / rho, 0.0);
  return std::sqrt(0.5 * (s + std::sqrt(disc)));
}

bool try_speed_info(const ConservedState& u, const IdealEos& eos, DiscriminantForm form, SpeedInfo& s,
                    double* wave) noexcept {
  if (!is_admissible(u)) return false;
  const double rho = u[kRho];
  const double eint = internal_energy_unchecked(u);
  const double p = eos.pressure_from_internal(eint);
  // Cs^2 = (gamma-1) p / (2 rho) with p = (gamma-1) * eint
  const double cs2 = (eos.gamma - 1.0) * p / (2.0 * rho);
  double b2 = 0.0;
  for (int d = 0; d < 3; ++d) {
    s.B[d] = u[kBx + d];
    b2 += s.B[d] * s.B[d];
  }
  s.sqrt_rho = std::sqrt(rho);
  for (int dir = 0; dir < 2; ++dir) {
    s.v[dir] = u[kMx + dir] / rho;
    s.c[dir] = bound_from_speeds(cs2, b2, s.B[dir] * s.B[dir], rho, form);
  }
  if (wave) {
    const double a2 = eos.sound_speed_sq(rho, p), sum = a2 + b2 / rho;
    for (int dir = 0; dir < 2; ++dir) {
      const double bn = s.B[dir];
      const double cf = std::sqrt(0.5 * (sum + std::sqrt(std::max(sum * sum - 4.0 * a2 * bn * bn / rho, 0.0))));
      wave[dir] = std::abs(s.v[dir]) + cf;
    }
  }
  return true;
}

SpeedInfo speed_info(const ConservedState& u, const IdealEos& eos, DiscriminantForm form) {
  SpeedInfo s;
  if (!try_speed_info(u, eos, form, s)) require_admissible(u, "speed_info");
  return s;
}


double pair_viscosity(const ConservedState& u, const ConservedState& ut, Axis axis, const IdealEos& eos,
                      DiscriminantForm form) {
  return pair_viscosity(speed_info(u, eos, form), speed_info(ut, eos, form), static_cast<int>(axis));
}

}  // namespace ddfpp
