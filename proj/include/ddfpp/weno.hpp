#pragma once

#include <array>

namespace ddfpp {

// Coefficients for reconstructing a point value at xi (relative to the centre cell, in units of the
// cell width, xi in [-1/2, 1/2]) from five cell averages v[0..4] centred on index 2.
struct WenoNodeTable {
  double xi = 0.0;
  std::array<std::array<double, 3>, 3> c{};  // substencil r uses v[r..r+2]
  std::array<double, 3> d{};                 // linear weights
};

WenoNodeTable make_weno_node(double xi);

inline constexpr double kWenoEpsilon = 1e-12;

struct WenoSmoothness {
  double beta[3];
  double tau5;
};

inline WenoSmoothness weno_smoothness(const double* v) {
  WenoSmoothness s;
  const double a0 = v[0] - 2.0 * v[1] + v[2], b0 = v[0] - 4.0 * v[1] + 3.0 * v[2];
  const double a1 = v[1] - 2.0 * v[2] + v[3], b1 = v[1] - v[3];
  const double a2 = v[2] - 2.0 * v[3] + v[4], b2 = 3.0 * v[2] - 4.0 * v[3] + v[4];
  s.beta[0] = 13.0 / 12.0 * a0 * a0 + 0.25 * b0 * b0;
  s.beta[1] = 13.0 / 12.0 * a1 * a1 + 0.25 * b1 * b1;
  s.beta[2] = 13.0 / 12.0 * a2 * a2 + 0.25 * b2 * b2;
  s.tau5 = s.beta[0] > s.beta[2] ? s.beta[0] - s.beta[2] : s.beta[2] - s.beta[0];
  return s;
}

// WENO-Z point value given precomputed smoothness (lets one stencil feed several nodes).
inline double weno5z_eval(const double* v, const WenoSmoothness& s, const WenoNodeTable& t) {
  double w[3], sum = 0.0;
  for (int r = 0; r < 3; ++r) {
    const double q = s.tau5 / (s.beta[r] + kWenoEpsilon);
    w[r] = t.d[r] * (1.0 + q * q);
    sum += w[r];
  }
  double out = 0.0;
  for (int r = 0; r < 3; ++r) {
    const double p = t.c[r][0] * v[r] + t.c[r][1] * v[r + 1] + t.c[r][2] * v[r + 2];
    out += w[r] * p;
  }
  return out / sum;
}

inline double weno5z_eval(const double* v, const WenoNodeTable& t) { return weno5z_eval(v, weno_smoothness(v), t); }

// Component-batched form: v holds five consecutive states of N components each (state-major, as the
// stencils are stored); writes one N-vector per table into out. Same arithmetic as weno5z_eval.
template <int N>
inline void weno5z_states(const double* v, const WenoNodeTable* const* tables, int ntables, double* out) {
  double z[3][N];
  for (int c = 0; c < N; ++c) {
    const double v0 = v[c], v1 = v[N + c], v2 = v[2 * N + c], v3 = v[3 * N + c], v4 = v[4 * N + c];
    const double a0 = v0 - 2.0 * v1 + v2, b0 = v0 - 4.0 * v1 + 3.0 * v2;
    const double a1 = v1 - 2.0 * v2 + v3, b1 = v1 - v3;
    const double a2 = v2 - 2.0 * v3 + v4, b2 = 3.0 * v2 - 4.0 * v3 + v4;
    const double be0 = 13.0 / 12.0 * a0 * a0 + 0.25 * b0 * b0;
    const double be1 = 13.0 / 12.0 * a1 * a1 + 0.25 * b1 * b1;
    const double be2 = 13.0 / 12.0 * a2 * a2 + 0.25 * b2 * b2;
    const double tau = be0 > be2 ? be0 - be2 : be2 - be0;
    const double q0 = tau / (be0 + kWenoEpsilon), q1 = tau / (be1 + kWenoEpsilon), q2 = tau / (be2 + kWenoEpsilon);
    z[0][c] = 1.0 + q0 * q0;
    z[1][c] = 1.0 + q1 * q1;
    z[2][c] = 1.0 + q2 * q2;
  }
  for (int n = 0; n < ntables; ++n) {
    const WenoNodeTable& t = *tables[n];
    double* o = out + n * N;
    for (int c = 0; c < N; ++c) {
      const double v0 = v[c], v1 = v[N + c], v2 = v[2 * N + c], v3 = v[3 * N + c], v4 = v[4 * N + c];
      const double w0 = t.d[0] * z[0][c], w1 = t.d[1] * z[1][c], w2 = t.d[2] * z[2][c];
      const double p0 = t.c[0][0] * v0 + t.c[0][1] * v1 + t.c[0][2] * v2;
      const double p1 = t.c[1][0] * v1 + t.c[1][1] * v2 + t.c[1][2] * v3;
      const double p2 = t.c[2][0] * v2 + t.c[2][1] * v3 + t.c[2][2] * v4;
      o[c] = (w0 * p0 + w1 * p1 + w2 * p2) / (w0 + w1 + w2);
    }
  }
}

enum class EdgeBias { Right, Left };  // Right: value at the right edge (xi=+1/2) of the centre cell

// Point value at an edge of the centre cell from (left2, left1, c, right1, right2).
double weno5z_point(double left2, double left1, double c, double right1, double right2, EdgeBias bias);

// Shared tables: xi = +1/2, -1/2 and the interior Gauss-Lobatto nodes.
const WenoNodeTable& weno_table_right_edge();
const WenoNodeTable& weno_table_left_edge();
const std::array<WenoNodeTable, 4>& weno_tables_gauss_lobatto();  // nodes in increasing xi

}  // namespace ddfpp
