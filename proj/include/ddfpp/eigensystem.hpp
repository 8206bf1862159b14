#pragma once

#include <array>

#include "ddfpp/state.hpp"

namespace ddfpp {

using Mat8 = std::array<double, 64>;  // row-major

// Eigenvectors of the 1D eight-wave (Powell) MHD system in conserved variables.
// Columns of R are right eigenvectors; rows of L the matching left ones (L R = I).
// Wave order: u-cf, u-ca, u-cs, u (entropy), u (divergence), u+cs, u+ca, u+cf.
struct CharacteristicBasis {
  Mat8 R{};
  Mat8 L{};
  Mat8 Rt{}, Lt{};          // transposes, for apply()
  std::array<double, 8> speeds{};
  bool valid = false;       // false when the basis is too ill-conditioned to use
  double condition = 0.0;   // scaled estimate ||D^-1 R|| * ||L D||
};

// Condition estimate above which the basis is reported as degenerate.
inline constexpr double kMaxBasisCondition = 1e8;

CharacteristicBasis characteristic_basis(const ConservedState& u, Axis axis, const IdealEos& eos);

// Primitive-variable forms W = (rho, u, v, w, Bx, By, Bz, p), exposed for testing.
void primitive_eigenvectors(const PrimitiveState& w, double gamma, Mat8& R, Mat8& L, std::array<double, 8>& speeds);
Mat8 primitive_jacobian(const PrimitiveState& w, double gamma);  // A_W for the x direction (Powell form)

inline void mat_vec(const Mat8& M, const double* x, double* y) {
  for (int r = 0; r < 8; ++r) {
    double s = 0.0;
    for (int c = 0; c < 8; ++c) s += M[r * 8 + c] * x[c];
    y[r] = s;
  }
}

// y_m = M x_m for `count` consecutive 8-vectors, M passed as its transpose so the inner loop runs
// over contiguous memory. Sums in the same order as mat_vec.
inline void apply(const Mat8& Mt, const double* x, double* y, int count) {
  for (int m = 0; m < count; ++m) {
    double acc[8] = {0, 0, 0, 0, 0, 0, 0, 0};
    for (int c = 0; c < 8; ++c) {
      const double xc = x[m * 8 + c];
      for (int r = 0; r < 8; ++r) acc[r] += Mt[c * 8 + r] * xc;
    }
    for (int r = 0; r < 8; ++r) y[m * 8 + r] = acc[r];
  }
}

}  // namespace ddfpp
