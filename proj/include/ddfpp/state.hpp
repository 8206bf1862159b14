#pragma once

#include <algorithm>
#include <array>
#include <cmath>

#include "ddfpp/errors.hpp"

namespace ddfpp {

inline constexpr int kNumVars = 8;

// Component layout of a conserved state U = (rho, m1, m2, m3, B1, B2, B3, E).
enum Var : int { kRho = 0, kMx = 1, kMy = 2, kMz = 3, kBx = 4, kBy = 5, kBz = 6, kEnergy = 7 };

enum class Axis : int { X = 0, Y = 1 };

using Vec3 = std::array<double, 3>;

// Plain 8-vector with componentwise arithmetic; used for conserved states and fluxes alike.
struct StateVector {
  std::array<double, kNumVars> q{};

  constexpr double& operator[](int c) { return q[c]; }
  constexpr double operator[](int c) const { return q[c]; }

  double rho() const { return q[kRho]; }
  Vec3 momentum() const { return {q[kMx], q[kMy], q[kMz]}; }
  Vec3 magnetic() const { return {q[kBx], q[kBy], q[kBz]}; }
  double energy() const { return q[kEnergy]; }

  StateVector& operator+=(const StateVector& o) {
    for (int c = 0; c < kNumVars; ++c) q[c] += o.q[c];
    return *this;
  }
  StateVector& operator-=(const StateVector& o) {
    for (int c = 0; c < kNumVars; ++c) q[c] -= o.q[c];
    return *this;
  }
  StateVector& operator*=(double s) {
    for (int c = 0; c < kNumVars; ++c) q[c] *= s;
    return *this;
  }
  friend StateVector operator+(StateVector a, const StateVector& b) { return a += b; }
  friend StateVector operator-(StateVector a, const StateVector& b) { return a -= b; }
  friend StateVector operator*(double s, StateVector a) { return a *= s; }
  friend StateVector operator*(StateVector a, double s) { return a *= s; }
  friend bool operator==(const StateVector& a, const StateVector& b) = default;
};

using ConservedState = StateVector;
using FluxVector = StateVector;

struct PrimitiveState {
  double rho = 1.0;
  Vec3 v{};
  Vec3 B{};
  double p = 1.0;
};

// Ideal-gas equation of state, e = p / (rho (gamma - 1)).
struct IdealEos {
  double gamma = 5.0 / 3.0;

  double pressure_from_internal(double internal_energy_density) const { return (gamma - 1.0) * internal_energy_density; }
  double internal_from_pressure(double p) const { return p / (gamma - 1.0); }
  double specific_internal_energy(double rho, double p) const { return p / (rho * (gamma - 1.0)); }
  double sound_speed_sq(double rho, double p) const { return gamma * p / rho; }
};

// Grouping of the discriminant inside the positivity wave-speed bound.
//   Printed:  ((Cs^2 + |B|^2)/rho)^2 - 4 Cs^2 Bi^2 / rho
//   Standard: (Cs^2 + |B|^2/rho)^2  - 4 Cs^2 Bi^2 / rho   (fast magnetosonic form)
enum class DiscriminantForm { Printed, Standard };

inline int normal_momentum(Axis a) { return a == Axis::X ? kMx : kMy; }
inline int normal_field(Axis a) { return a == Axis::X ? kBx : kBy; }

// E - (|m|^2/rho + |B|^2)/2; throws when rho <= 0.
double internal_energy(const ConservedState& u);

// No domain checks; caller guarantees rho > 0.
inline double internal_energy_unchecked(const ConservedState& u) {
  const double kin = (u[kMx] * u[kMx] + u[kMy] * u[kMy] + u[kMz] * u[kMz]) / u[kRho];
  const double mag = u[kBx] * u[kBx] + u[kBy] * u[kBy] + u[kBz] * u[kBz];
  return u[kEnergy] - 0.5 * (kin + mag);
}

// rho > eps_rho and internal energy > eps_e. NaNs give false.
bool is_admissible(const ConservedState& u, double eps_rho = 0.0, double eps_e = 0.0) noexcept;

PrimitiveState to_primitive(const ConservedState& u, const IdealEos& eos);
ConservedState to_conserved(const PrimitiveState& w, const IdealEos& eos);

double pressure(const ConservedState& u, const IdealEos& eos);

FluxVector physical_flux(const ConservedState& u, Axis axis, const IdealEos& eos);

// (0, B, v, v.B)
StateVector powell_source_vector(const ConservedState& u);

// Sound-like speed Cs = p / (rho sqrt(2 e)) = sqrt((gamma-1) p / (2 rho)).
double pp_sound_speed(const ConservedState& u, const IdealEos& eos);

// Wave-speed bound C_i used by the positivity CFL condition.
double fast_speed_bound(const ConservedState& u, Axis axis, const IdealEos& eos,
                        DiscriminantForm form = DiscriminantForm::Standard);

// Usual fast magnetosonic speed with c^2 = gamma p / rho.
double fast_magnetosonic_speed(const ConservedState& u, Axis axis, const IdealEos& eos);

double pair_viscosity(const ConservedState& u, const ConservedState& ut, Axis axis, const IdealEos& eos,
                      DiscriminantForm form = DiscriminantForm::Standard);

// Per-trace quantities reused across many viscosity pairings.
struct SpeedInfo {
  double sqrt_rho;
  double v[2];      // normal velocity for x, y
  double c[2];      // C_i for x, y
  double B[3];
};
SpeedInfo speed_info(const ConservedState& u, const IdealEos& eos, DiscriminantForm form);
// Non-throwing variant: false for inadmissible u. With wave != null also stores |v_d| + c_f (usual fast speed).
bool try_speed_info(const ConservedState& u, const IdealEos& eos, DiscriminantForm form, SpeedInfo& out,
                    double* wave = nullptr) noexcept;
inline double pair_viscosity(const SpeedInfo& a, const SpeedInfo& b, int dir) {
  const double sa = a.sqrt_rho, sb = b.sqrt_rho;
  const double roe = (sa * a.v[dir] + sb * b.v[dir]) / (sa + sb) + std::max(a.c[dir], b.c[dir]);
  const double m = std::max({std::abs(a.v[dir]) + a.c[dir], std::abs(b.v[dir]) + b.c[dir], roe});
  const double d0 = a.B[0] - b.B[0], d1 = a.B[1] - b.B[1], d2 = a.B[2] - b.B[2];
  return m + std::sqrt(d0 * d0 + d1 * d1 + d2 * d2) / (sa + sb);
}

// Swap x and y roles of velocity and field: used to map y-direction problems onto x.
inline StateVector swap_xy(const StateVector& u) {
  StateVector r = u;
  r[kMx] = u[kMy];
  r[kMy] = u[kMx];
  r[kBx] = u[kBy];
  r[kBy] = u[kBx];
  return r;
}

inline bool all_finite(const StateVector& u) {
  for (int c = 0; c < kNumVars; ++c)
    if (!std::isfinite(u[c])) return false;
  return true;
}

}  // namespace ddfpp
