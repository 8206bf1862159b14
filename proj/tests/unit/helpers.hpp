#pragma once

#include <random>

#include "ddfpp/state.hpp"

namespace testutil {

// Random admissible state with O(1) components.
inline ddfpp::ConservedState random_state(std::mt19937_64& rng, const ddfpp::IdealEos& eos) {
  std::uniform_real_distribution<double> pos(0.2, 3.0), any(-2.0, 2.0);
  ddfpp::PrimitiveState w;
  w.rho = pos(rng);
  w.v = {any(rng), any(rng), any(rng)};
  w.B = {any(rng), any(rng), any(rng)};
  w.p = pos(rng);
  return ddfpp::to_conserved(w, eos);
}

inline double rel_diff(double a, double b) {
  const double s = std::max({std::abs(a), std::abs(b), 1e-300});
  return std::abs(a - b) / s;
}

}  // namespace testutil
